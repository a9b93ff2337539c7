#pragma once

#include <span>
#include <string>
#include <vector>

#include "lietrees/freelie/lie_word.hpp"

namespace lietrees {

/// A Lyndon word together with its standard-factorization bracketing.
struct HallWord {
  std::vector<int> letters;
  LieWord bracketing;

  std::size_t length() const noexcept { return letters.size(); }
  /// Letters joined by '.', e.g. "1.2.2".
  std::string str() const;

  friend bool operator==(const HallWord&, const HallWord&) = default;
};

/// Strictly smaller than each of its proper rotations.
bool is_lyndon(std::span<const int> word);

/// Bracketing w = [u, v] where v is the longest proper Lyndon suffix.
LieWord standard_bracketing(std::span<const int> lyndon_word);

/// Lyndon words over letters 1..k of length <= max_len, ordered by length
/// then lexicographically.
std::vector<HallWord> lyndon_words(int alphabet_size, int max_len);

/// Same, over an arbitrary increasing alphabet.
std::vector<HallWord> lyndon_words_over(std::span<const int> alphabet, int max_len);

/// Lyndon words over `labels` that use every label at least once.
/// Throws LTooSmall when max_len < |labels|.
std::vector<HallWord> normalized_words(std::span<const int> labels, int max_len);

}  // namespace lietrees
