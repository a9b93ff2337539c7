#include "lietrees/freelie/lie_word.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "lietrees/core/errors.hpp"

namespace lietrees {

namespace {

std::size_t word_subtree_end(std::span<const int> p, std::size_t pos) {
  std::size_t need = 1;
  for (std::size_t i = pos; i < p.size(); ++i) {
    need -= 1;
    if (p[i] == 0) need += 2;
    if (need == 0) return i + 1;
  }
  throw Error(Errc::InvalidArgument, "truncated word encoding");
}

void append_word(std::span<const int> p, std::size_t& pos, std::string& out) {
  if (p[pos] != 0) {
    out += std::to_string(p[pos++]);
    return;
  }
  ++pos;
  out += '[';
  append_word(p, pos, out);
  out += ',';
  append_word(p, pos, out);
  out += ']';
}

struct WordParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  void parse(std::vector<int>& out) {
    skip();
    if (pos >= text.size()) throw SyntaxError(pos, "expected a word");
    if (text[pos] == '[') {
      ++pos;
      out.push_back(0);
      parse(out);
      skip();
      if (pos >= text.size() || text[pos] != ',') throw SyntaxError(pos, "expected ','");
      ++pos;
      parse(out);
      skip();
      if (pos >= text.size() || text[pos] != ']') throw SyntaxError(pos, "expected ']'");
      ++pos;
      return;
    }
    auto start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw SyntaxError(pos, "expected a letter");
    if (pos - start > 9) throw SyntaxError(start, "letter too large");
    int v = std::stoi(std::string(text.substr(start, pos - start)));
    if (v < 1) throw SyntaxError(start, "letters must be positive");
    out.push_back(v);
  }
};

}  // namespace

LieWord LieWord::letter(int i) {
  if (i < 1) throw Error(Errc::InvalidArgument, "letters must be positive");
  return LieWord({i});
}

LieWord LieWord::bracket(const LieWord& a, const LieWord& b) {
  std::vector<int> p;
  p.reserve(a.prefix_.size() + b.prefix_.size() + 1);
  p.push_back(0);
  p.insert(p.end(), a.prefix_.begin(), a.prefix_.end());
  p.insert(p.end(), b.prefix_.begin(), b.prefix_.end());
  return LieWord(std::move(p));
}

LieWord LieWord::from_tree(const Tree& t) {
  return LieWord(std::vector<int>(t.prefix().begin(), t.prefix().end()));
}

LieWord LieWord::parse(std::string_view text) {
  WordParser p{text};
  std::vector<int> out;
  p.parse(out);
  p.skip();
  if (p.pos != text.size()) throw SyntaxError(p.pos, "trailing input after word");
  return LieWord(std::move(out));
}

int LieWord::letter_value() const {
  if (!is_letter()) throw Error(Errc::InvalidArgument, "not a single letter");
  return prefix_.front();
}

LieWord LieWord::left() const {
  if (is_letter()) throw Error(Errc::InvalidArgument, "a letter has no bracket factors");
  auto end = word_subtree_end(prefix_, 1);
  return LieWord(std::vector<int>(prefix_.begin() + 1, prefix_.begin() + static_cast<std::ptrdiff_t>(end)));
}

LieWord LieWord::right() const {
  if (is_letter()) throw Error(Errc::InvalidArgument, "a letter has no bracket factors");
  auto mid = word_subtree_end(prefix_, 1);
  return LieWord(std::vector<int>(prefix_.begin() + static_cast<std::ptrdiff_t>(mid), prefix_.end()));
}

std::vector<int> LieWord::letters() const {
  std::vector<int> out;
  for (int v : prefix_)
    if (v != 0) out.push_back(v);
  return out;
}

bool LieWord::is_multilinear() const {
  auto ls = letters();
  std::set<int> s(ls.begin(), ls.end());
  return s.size() == ls.size();
}

Tree LieWord::to_tree() const {
  if (!is_multilinear()) throw Error(Errc::NotMultilinear, "word " + str() + " repeats a letter");
  return canonicalize_tree(prefix_);
}

std::string LieWord::str() const {
  std::string out;
  std::size_t pos = 0;
  append_word(prefix_, pos, out);
  return out;
}

}  // namespace lietrees
