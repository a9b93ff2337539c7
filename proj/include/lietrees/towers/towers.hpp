#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lietrees/core/decorated_tree.hpp"
#include "lietrees/freelie/lyndon.hpp"
#include "lietrees/integer.hpp"

namespace lietrees {

/// One weak-product factor Omega^loops Sigma^{suspension} (Omega M^{x l})_+.
/// Nothing here is evaluated; the record only carries the indexing data.
struct FactorDescriptor {
  HallWord word;
  int suspension_degree = 0;  // 1 + l_w (d - 2)
  std::string base_space;     // "(Omega M^{x l})_+"
  int loop_count = 0;
};

/// Shape of a finitely generated abelian group.
struct GroupShape {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  std::string str() const;  // "rank=2 torsion=[]"
  friend bool operator==(const GroupShape&, const GroupShape&) = default;
};

/// Truncated layer: factors for normalized words of length <= max_word_len.
struct LayerFactors {
  int n = 0;
  int d = 0;
  int max_word_len = 0;
  std::vector<FactorDescriptor> factors;
};

/// n >= 1, d >= 3, max_word_len >= n (LTooSmall otherwise).
LayerFactors layer_factors(int n, int d, int max_word_len);

/// n(d - 3) - 1
long layer_connectivity(int n, int d);

struct FirstLayerGroup {
  long degree = 0;  // n(d - 3)
  GroupShape group;
};

/// Lie_pi(n) in degree n(d-3), computed through the decorated quotient.
/// Free models need max_word_len (InfiniteEnumeration otherwise).
FirstLayerGroup first_layer_group(int n, int d, const GroupModelPtr& model,
                                  std::optional<std::size_t> max_word_len = std::nullopt);

enum class E1Status { Zero, FirstSlope, Symbolic };
std::string e1_status_name(E1Status s);

/// Entry E^1_{-(n+1), t}. Summands are restricted to words with
/// 1 + l_w (d - 2) <= t, so `max_word_len` records the implied cap.
struct E1Entry {
  int n = 0;
  int t = 0;
  E1Status status = E1Status::Zero;
  int max_word_len = 0;
  std::vector<FactorDescriptor> summands;
  std::optional<GroupShape> exact_group;
};

std::vector<E1Entry> e1_page(int n_max, int t_max, int d, const GroupModelPtr& model,
                             std::optional<std::size_t> max_group_word_len = std::nullopt);

/// pi_* Conf_n(M) = (pi_* M)^n + sum over i < n and all Lyndon words over
/// the alphabet {1..i} of pi_{*+1} Sigma^{1 + l_w (d-2)} (Omega M^{x l_w})_+.
struct ConfBlock {
  int alphabet_size = 0;
  std::vector<FactorDescriptor> factors;
};
struct ConfDecomposition {
  int n = 0;
  int d = 0;
  int max_word_len = 0;
  int base_copies = 0;  // copies of pi_* M
  std::vector<ConfBlock> blocks;
};

ConfDecomposition conf_factors(int n, int d, int max_word_len);

nlohmann::json to_json(const FactorDescriptor& f);
nlohmann::json to_json(const GroupShape& g);
nlohmann::json to_json(const LayerFactors& l);
nlohmann::json to_json(const E1Entry& e);
nlohmann::json to_json(const ConfDecomposition& c);

/// Columns: n, t, status, summands (words with their suspension degree,
/// e.g. "1.2:3;1.1.2:4"), exact_group.
std::string e1_tsv(const std::vector<E1Entry>& page);

}  // namespace lietrees
