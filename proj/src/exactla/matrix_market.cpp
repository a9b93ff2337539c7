#include "lietrees/exactla/matrix_market.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "lietrees/core/errors.hpp"

namespace lietrees {

void write_matrix_market(std::ostream& os, const SparseIntMatrix& m) {
  os << "%%MatrixMarket matrix coordinate integer general\n";
  os << m.rows() << ' ' << m.cols() << ' ' << m.nnz() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) os << r + 1 << ' ' << c + 1 << ' ' << v << '\n';
}

SparseIntMatrix read_matrix_market(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("%%MatrixMarket", 0) != 0)
    throw Error(Errc::SyntaxError, "missing MatrixMarket banner");
  if (line.find("coordinate") == std::string::npos || line.find("integer") == std::string::npos ||
      line.find("general") == std::string::npos)
    throw Error(Errc::SyntaxError, "only coordinate integer general matrices are supported");
  while (std::getline(is, line))
    if (!line.empty() && line[0] != '%') break;
  std::istringstream header(line);
  std::size_t rows = 0, cols = 0, nnz = 0;
  if (!(header >> rows >> cols >> nnz)) throw Error(Errc::SyntaxError, "bad MatrixMarket size line");

  std::vector<SparseRow> data(rows);
  for (std::size_t k = 0; k < nnz; ++k) {
    std::size_t r = 0, c = 0;
    std::string value;
    if (!(is >> r >> c >> value)) throw Error(Errc::SyntaxError, "truncated MatrixMarket body");
    if (r == 0 || c == 0 || r > rows || c > cols) throw Error(Errc::DimensionMismatch, "entry out of range");
    data[r - 1].emplace_back(c - 1, Integer(value));
  }
  return SparseIntMatrix::from_rows(cols, std::move(data));
}

}  // namespace lietrees
