#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lietrees/core/tree.hpp"

namespace lietrees {

/// Bracketed word in letters x^i (i >= 1). Same preorder encoding as Tree
/// (0 = bracket), but letters may repeat.
class LieWord {
 public:
  static LieWord letter(int i);
  static LieWord bracket(const LieWord& a, const LieWord& b);
  /// The bracketing read off a tree: leaf i -> x^i, Graft(a, b) -> [a, b].
  static LieWord from_tree(const Tree& t);
  /// Parses the tree grammar without the distinct-label requirement.
  static LieWord parse(std::string_view text);

  bool is_letter() const noexcept { return prefix_.size() == 1; }
  int letter_value() const;
  LieWord left() const;
  LieWord right() const;

  std::size_t length() const noexcept { return (prefix_.size() + 1) / 2; }
  /// Letters in reading order.
  std::vector<int> letters() const;
  /// True when no letter repeats.
  bool is_multilinear() const;
  /// Converts a multilinear word to the tree with the same bracketing.
  Tree to_tree() const;

  std::span<const int> prefix() const noexcept { return prefix_; }
  std::string str() const;

  friend bool operator==(const LieWord&, const LieWord&) = default;
  friend std::strong_ordering operator<=>(const LieWord&, const LieWord&) = default;

 private:
  explicit LieWord(std::vector<int> p) : prefix_(std::move(p)) {}
  std::vector<int> prefix_;
};

}  // namespace lietrees
