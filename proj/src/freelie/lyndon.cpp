#include "lietrees/freelie/lyndon.hpp"

#include <algorithm>
#include <set>

#include "lietrees/core/errors.hpp"

namespace lietrees {

std::string HallWord::str() const {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(letters[i]);
  }
  return out;
}

bool is_lyndon(std::span<const int> w) {
  if (w.empty()) return false;
  const std::size_t n = w.size();
  for (std::size_t r = 1; r < n; ++r) {
    // compare w with its rotation starting at r
    for (std::size_t i = 0; i < n; ++i) {
      const int a = w[i];
      const int b = w[(i + r) % n];
      if (a < b) break;
      if (a > b) return false;
      if (i + 1 == n) return false;  // equal to a rotation: periodic
    }
  }
  return true;
}

LieWord standard_bracketing(std::span<const int> w) {
  if (w.empty()) throw Error(Errc::InvalidArgument, "empty word");
  if (w.size() == 1) return LieWord::letter(w[0]);
  for (std::size_t split = 1; split < w.size(); ++split) {
    auto suffix = w.subspan(split);
    if (is_lyndon(suffix)) {
      return LieWord::bracket(standard_bracketing(w.first(split)), standard_bracketing(suffix));
    }
  }
  throw Error(Errc::InvalidArgument, "word is not Lyndon");
}

std::vector<HallWord> lyndon_words(int alphabet_size, int max_len) {
  std::vector<int> alphabet;
  for (int i = 1; i <= alphabet_size; ++i) alphabet.push_back(i);
  return lyndon_words_over(alphabet, max_len);
}

std::vector<HallWord> lyndon_words_over(std::span<const int> alphabet, int max_len) {
  const int k = static_cast<int>(alphabet.size());
  std::vector<HallWord> out;
  if (k == 0 || max_len < 1) return out;

  // Duval's generation over indices 0..k-1, in lexicographic order.
  std::vector<std::vector<int>> words;
  std::vector<int> w{-1};
  while (!w.empty()) {
    ++w.back();
    words.push_back(w);
    const std::size_t m = w.size();
    while (static_cast<int>(w.size()) < max_len) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == k - 1) w.pop_back();
  }
  std::stable_sort(words.begin(), words.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });

  out.reserve(words.size());
  for (const auto& idx : words) {
    std::vector<int> letters;
    for (int i : idx) letters.push_back(alphabet[static_cast<std::size_t>(i)]);
    LieWord bracketing = standard_bracketing(letters);
    out.push_back(HallWord{std::move(letters), std::move(bracketing)});
  }
  return out;
}

std::vector<HallWord> normalized_words(std::span<const int> labels, int max_len) {
  if (labels.empty()) throw Error(Errc::EmptyLabelSet, "normalized words need a nonempty label set");
  if (max_len < static_cast<int>(labels.size()))
    throw Error(Errc::LTooSmall, "max length " + std::to_string(max_len) +
                                     " is below the alphabet size " + std::to_string(labels.size()));
  std::vector<int> alphabet(labels.begin(), labels.end());
  std::sort(alphabet.begin(), alphabet.end());
  std::vector<HallWord> out;
  for (auto& h : lyndon_words_over(alphabet, max_len)) {
    std::set<int> used(h.letters.begin(), h.letters.end());
    if (used.size() == alphabet.size()) out.push_back(std::move(h));
  }
  return out;
}

}  // namespace lietrees
