#include "lietrees/freelie/normal_form.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lietrees/core/errors.hpp"
#include "lietrees/freelie/assoc_poly.hpp"

namespace lietrees {

namespace {

std::vector<int> sorted_labels(std::span<const int> labels) {
  std::vector<int> out(labels.begin(), labels.end());
  std::sort(out.begin(), out.end());
  if (out.empty()) throw Error(Errc::EmptyLabelSet, "normal form over an empty label set");
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw Error(Errc::DuplicateLeaf, "label set has repeats");
  return out;
}

std::map<Monomial, std::size_t> basis_index(const std::vector<int>& labels) {
  std::vector<int> rest(labels.begin(), labels.end() - 1);
  std::map<Monomial, std::size_t> index;
  std::size_t i = 0;
  do {
    Monomial m = rest;
    m.push_back(labels.back());
    index.emplace(std::move(m), i++);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return index;
}

void check_multilinear(const std::vector<int>& letters, const std::vector<int>& labels,
                       const std::string& what) {
  std::vector<int> sorted = letters;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != labels)
    throw Error(Errc::NotMultilinear, what + " does not use every label exactly once");
}

std::vector<Integer> extract(const AssocPoly& p, const std::map<Monomial, std::size_t>& index) {
  std::vector<Integer> out(index.size());
  for (const auto& [m, c] : p.terms()) {
    auto it = index.find(m);
    if (it != index.end()) out[it->second] = c;
  }
  return out;
}

}  // namespace

std::vector<Tree> left_normed_basis(std::span<const int> labels) {
  const auto ls = sorted_labels(labels);
  std::vector<int> rest(ls.begin(), ls.end() - 1);
  std::vector<Tree> out;
  do {
    Tree t = Tree::leaf(ls.back());
    for (auto it = rest.rbegin(); it != rest.rend(); ++it) t = Tree::graft(Tree::leaf(*it), t);
    out.push_back(std::move(t));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

std::vector<Integer> multilinear_normal_form(const TreeSum& s, std::span<const int> labels) {
  const auto ls = sorted_labels(labels);
  const auto index = basis_index(ls);
  AssocPoly total;
  for (const auto& [t, c] : s) {
    check_multilinear(t.leaves(), ls, "tree " + t.str());
    total += c * expand_assoc(LieWord::from_tree(t));
  }
  return extract(total, index);
}

std::vector<Integer> multilinear_normal_form(const std::vector<std::pair<LieWord, Integer>>& s,
                                             std::span<const int> labels) {
  const auto ls = sorted_labels(labels);
  const auto index = basis_index(ls);
  AssocPoly total;
  for (const auto& [w, c] : s) {
    check_multilinear(w.letters(), ls, "word " + w.str());
    total += c * expand_assoc(w);
  }
  return extract(total, index);
}

}  // namespace lietrees
