#pragma once

#include <iosfwd>

#include "lietrees/exactla/int_matrix.hpp"

namespace lietrees {

/// "%%MatrixMarket matrix coordinate integer general", 1-based indices.
void write_matrix_market(std::ostream& os, const SparseIntMatrix& m);
SparseIntMatrix read_matrix_market(std::istream& is);

}  // namespace lietrees
