#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace lietrees {

/// An element of a GroupModel. Interpretation depends on the model:
/// trivial -> empty; finite -> a single table id; free -> a reduced word
/// where +i is generator i (1-based) and -i its inverse.
struct GroupElement {
  std::vector<int> word;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend std::strong_ordering operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Coefficient group for decorations: trivial, finite (multiplication
/// table with identity id 0), or free on g generators.
class GroupModel {
 public:
  enum class Kind { Trivial, Finite, Free };

  static GroupModel trivial();
  /// Validates identity, inverse and associativity laws on the whole table.
  static GroupModel finite(std::vector<std::vector<int>> table, std::vector<int> inverse);
  static GroupModel cyclic(int order);
  static GroupModel free(int generators);

  /// {"kind":"finite","table":[[...]],"inverse":[...]} | {"kind":"free","generators":g}
  /// | {"kind":"trivial"}
  static GroupModel from_json(const nlohmann::json& doc);
  nlohmann::json to_json() const;

  Kind kind() const noexcept { return kind_; }
  /// Number of elements; empty for free models.
  std::optional<std::size_t> order() const;
  int generator_count() const noexcept { return generators_; }

  GroupElement identity() const;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  bool is_identity(const GroupElement& a) const { return a == identity(); }
  bool contains(const GroupElement& a) const;

  /// Free: letters a..z for generators and A..Z for inverses.
  /// Finite: decimal ids, optionally multiplied with '.'. Empty text is the identity.
  GroupElement parse(std::string_view text) const;
  std::string format(const GroupElement& a) const;

  /// All elements; free models need a word-length cap (InfiniteEnumeration otherwise).
  /// Ordered by word length, then lexicographically.
  std::vector<GroupElement> elements(std::optional<std::size_t> max_word_len = std::nullopt) const;

  std::string describe() const;

  friend bool operator==(const GroupModel&, const GroupModel&) = default;

 private:
  Kind kind_ = Kind::Trivial;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  int generators_ = 0;
};

}  // namespace lietrees
