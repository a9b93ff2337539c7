#include "lietrees/relations/quotient_context.hpp"

#include "lietrees/core/errors.hpp"
#include "lietrees/exactla/hermite.hpp"
#include "lietrees/freelie/normal_form.hpp"
#include "lietrees/relations/one_loop.hpp"

namespace lietrees {

template <class Key>
BasicQuotientContext<Key>::BasicQuotientContext(std::vector<Key> generators, BasicRelationSet<Key> relations,
                                                std::optional<std::vector<Key>> preferred_basis,
                                                const EliminationOptions& opts)
    : generators_(std::move(generators)), relations_(std::move(relations)) {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (!index_.emplace(generators_[i], i).second)
      throw Error(Errc::InvalidArgument, "generator listed twice");

  presentation_ = cokernel(relation_matrix(), opts);

  if (!preferred_basis) return;
  const std::size_t k = preferred_basis->size();
  if (!presentation_.torsion().empty() || k != presentation_.coordinate_count())
    throw Error(Errc::InvalidArgument, "preferred basis does not match the quotient's shape");
  DenseIntMatrix b(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto row = presentation_.coordinates(SparseRow{{index_of((*preferred_basis)[i]), Integer(1)}});
    for (std::size_t j = 0; j < k; ++j) b(i, j) = row[j];
  }
  HermiteForm h = hermite_normal_form(b, true, opts);
  if (!(h.form == DenseIntMatrix::identity(k)))
    throw Error(Errc::InvalidArgument, "preferred basis is not a basis of the quotient");
  basis_inverse_ = std::move(*h.transform);
  basis_ = std::move(preferred_basis);
}

template <class Key>
std::size_t BasicQuotientContext<Key>::index_of(const Key& k) const {
  auto it = index_.find(k);
  if (it != index_.end()) return it->second;
  if (!generators_.empty() && !same_space(generators_.front(), k))
    throw Error(Errc::ModelMismatch, "term lives outside this quotient's generators");
  throw Error(Errc::InvalidArgument, "term is not among the enumerated generators");
}

template <class Key>
SparseRow BasicQuotientContext<Key>::to_vector(const FormalSum<Key>& s) const {
  SparseRow v;
  for (const auto& [k, c] : s) v.emplace_back(index_of(k), c);
  return normalize_row(std::move(v));
}

template <class Key>
FormalSum<Key> BasicQuotientContext<Key>::from_vector(const SparseRow& v) const {
  FormalSum<Key> s;
  for (const auto& [i, c] : v) s.add(generators_.at(i), c);
  return s;
}

template <class Key>
std::vector<Integer> BasicQuotientContext<Key>::reduce(const FormalSum<Key>& s) const {
  auto raw = presentation_.coordinates(to_vector(s));
  if (!basis_) return raw;
  const std::size_t k = raw.size();
  std::vector<Integer> out(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (raw[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j)
      if (basis_inverse_(i, j) != 0) out[j] += raw[i] * basis_inverse_(i, j);
  }
  return out;
}

template <class Key>
bool BasicQuotientContext<Key>::equal(const FormalSum<Key>& a, const FormalSum<Key>& b) const {
  return reduce(a) == reduce(b);
}

template <class Key>
FormalSum<Key> BasicQuotientContext<Key>::lift(std::span<const Integer> coords) const {
  if (coords.size() != presentation_.coordinate_count())
    throw Error(Errc::DimensionMismatch, "coordinate vector has the wrong length");
  if (!basis_) return from_vector(presentation_.lift(coords));
  FormalSum<Key> s;
  for (std::size_t i = 0; i < coords.size(); ++i) s.add((*basis_)[i], coords[i]);
  return s;
}

template <class Key>
SparseIntMatrix BasicQuotientContext<Key>::relation_matrix() const {
  std::vector<SparseRow> rows;
  rows.reserve(relations_.vectors.size());
  for (const auto& v : relations_.vectors) rows.push_back(to_vector(v));
  return SparseIntMatrix::from_rows(generators_.size(), std::move(rows));
}

template class BasicQuotientContext<Tree>;
template class BasicQuotientContext<DecoratedTree>;

QuotientContext lie_context(int n, const EliminationOptions& opts) {
  const auto labels = label_range(n);
  return QuotientContext(enumerate_trees(labels), lie_relations(labels), left_normed_basis(labels), opts);
}

QuotientContext jacobi_tree_context(int n, const EliminationOptions& opts) {
  const auto labels = label_range(n);
  RelationSet rel = lie_relations(labels);
  merge_relations(rel, stu2_relations(n), RelationFamily::AS_IHX_STU2);
  return QuotientContext(enumerate_trees(labels), std::move(rel), std::nullopt, opts);
}

DecoratedQuotientContext decorated_lie_context(int n, const GroupModelPtr& model,
                                               std::optional<std::size_t> max_word_len,
                                               const EliminationOptions& opts) {
  const auto labels = label_range(n);
  const auto tuples = decoration_tuples(labels.size(), *model, max_word_len);
  std::vector<DecoratedTree> gens, basis;
  for (const auto& t : enumerate_trees(labels))
    for (const auto& g : tuples) gens.emplace_back(t, g, model);
  for (const auto& t : left_normed_basis(labels))
    for (const auto& g : tuples) basis.emplace_back(t, g, model);
  return DecoratedQuotientContext(std::move(gens), decorated_relations(labels, model, max_word_len),
                                  std::move(basis), opts);
}

}  // namespace lietrees
