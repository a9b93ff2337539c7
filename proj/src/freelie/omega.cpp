#include "lietrees/freelie/omega.hpp"

#include "lietrees/core/errors.hpp"

namespace lietrees {

long split_exponent(std::span<const int> first_labels, std::span<const int> second_labels, int d) {
  long inversions = 0;
  for (int i : first_labels)
    for (int j : second_labels)
      if (i > j) ++inversions;
  return static_cast<long>(d - 2) * inversions;
}

namespace {

// Appends exponents in preorder and returns the leaves of the subtree.
std::vector<int> collect_exponents(const LieWord& w, int d, std::vector<long>& exps) {
  if (w.is_letter()) return {w.letter_value()};
  const std::size_t slot = exps.size();
  exps.push_back(0);
  auto a = collect_exponents(w.left(), d, exps);
  auto b = collect_exponents(w.right(), d, exps);
  exps[slot] = split_exponent(a, b, d);
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

int parity_sign(const std::vector<long>& exps) {
  long total = 0;
  for (long e : exps) total += e;
  return total % 2 == 0 ? 1 : -1;
}

void append_nested(const LieWord& w, const std::vector<long>& exps, std::size_t& slot, std::string& out) {
  if (w.is_letter()) {
    out += "x" + std::to_string(w.letter_value());
    return;
  }
  const long e = exps[slot++];
  if (e != 0) out += "(-1)^" + std::to_string(e);
  out += '[';
  append_nested(w.left(), exps, slot, out);
  out += ',';
  append_nested(w.right(), exps, slot, out);
  out += ']';
}

}  // namespace

std::string SignedWord::str() const { return (sign < 0 ? "-" : "+") + word.str(); }

std::string SignedWord::nested_str() const {
  std::string out;
  std::size_t slot = 0;
  append_nested(word, node_exponents, slot, out);
  return out;
}

SignedWord omega_d(const Tree& t, int d) {
  if (d < 2) throw Error(Errc::InvalidArgument, "dimension must be at least 2");
  LieWord word = LieWord::from_tree(t);
  std::vector<long> exps;
  collect_exponents(word, d, exps);
  const int sign = parity_sign(exps);
  return SignedWord{sign, std::move(word), d, std::move(exps)};
}

SignedTree omega_d_inverse(const LieWord& w, int d) {
  if (d < 2) throw Error(Errc::InvalidArgument, "dimension must be at least 2");
  Tree t = w.to_tree();
  std::vector<long> exps;
  collect_exponents(w, d, exps);
  return SignedTree{parity_sign(exps), std::move(t)};
}

}  // namespace lietrees
