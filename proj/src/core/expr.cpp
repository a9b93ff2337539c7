#include "lietrees/core/expr.hpp"

#include <cctype>
#include <map>
#include <optional>

namespace lietrees {

namespace {

struct RawTerm {
  Integer coefficient;
  std::vector<int> prefix;
  std::map<int, std::string> decorations;
  std::size_t position = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<RawTerm> parse_sum() {
    std::vector<RawTerm> terms;
    skip_ws();
    if (at_end()) throw SyntaxError(pos_, "empty expression");
    {
      auto save = pos_;
      if (peek() == '0') {
        ++pos_;
        skip_ws();
        if (at_end()) return terms;
      }
      pos_ = save;
    }
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    terms.push_back(parse_term(sign));
    skip_ws();
    while (!at_end()) {
      char c = peek();
      if (c != '+' && c != '-') throw SyntaxError(pos_, std::string("expected '+' or '-', found '") + c + "'");
      ++pos_;
      terms.push_back(parse_term(c == '-' ? -1 : 1));
      skip_ws();
    }
    return terms;
  }

  RawTerm parse_single_tree() {
    skip_ws();
    RawTerm t;
    t.coefficient = 1;
    t.position = pos_;
    parse_tree(t);
    skip_ws();
    if (!at_end()) throw SyntaxError(pos_, "trailing input after tree");
    return t;
  }

 private:
  RawTerm parse_term(int sign) {
    skip_ws();
    RawTerm t;
    t.position = pos_;
    t.coefficient = sign;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      // Either a coefficient followed by '*', or a bare leaf.
      auto save = pos_;
      std::string digits = read_digits();
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        t.coefficient *= Integer(digits);
      } else {
        pos_ = save;
      }
    }
    parse_tree(t);
    return t;
  }

  void parse_tree(RawTerm& t) {
    skip_ws();
    if (at_end()) throw SyntaxError(pos_, "expected a tree");
    if (peek() == '[') {
      ++pos_;
      t.prefix.push_back(0);
      parse_tree(t);
      expect(',');
      parse_tree(t);
      expect(']');
      return;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw SyntaxError(pos_, std::string("expected '[' or a leaf label, found '") + peek() + "'");
    auto start = pos_;
    std::string digits = read_digits();
    if (digits.size() > 9) throw SyntaxError(start, "leaf label too large");
    int label = std::stoi(digits);
    if (label < 1) throw SyntaxError(start, "leaf labels must be positive");
    t.prefix.push_back(label);
    skip_ws();
    if (!at_end() && peek() == '{') {
      ++pos_;
      auto close = text_.find('}', pos_);
      if (close == std::string_view::npos) throw SyntaxError(pos_, "unterminated decoration");
      std::string word;
      for (char c : text_.substr(pos_, close - pos_))
        if (!std::isspace(static_cast<unsigned char>(c))) word += c;
      t.decorations[label] = word;
      pos_ = close + 1;
    }
  }

  std::string read_digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) out += text_[pos_++];
    return out;
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c) {
      throw SyntaxError(pos_, std::string("expected '") + c + "'" +
                                  (at_end() ? std::string(", found end of input")
                                            : std::string(", found '") + peek() + "'"));
    }
    ++pos_;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

template <class Key>
std::string print_sum(const FormalSum<Key>& sum) {
  if (sum.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : sum) {
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1) out += magnitude.str() + "*";
    out += key.str();
    first = false;
  }
  return out;
}

}  // namespace

Tree parse_tree(std::string_view text) {
  Parser p(text);
  auto raw = p.parse_single_tree();
  if (!raw.decorations.empty())
    throw Error(Errc::UnknownGroupElement, "decorations require a group model");
  return canonicalize_tree(raw.prefix);
}

TreeSum parse_tree_sum(std::string_view text) {
  Parser p(text);
  TreeSum out;
  for (auto& raw : p.parse_sum()) {
    if (!raw.decorations.empty())
      throw Error(Errc::UnknownGroupElement, "decorations require a group model");
    out.add(canonicalize_tree(raw.prefix), raw.coefficient);
  }
  return out;
}

DecoratedTreeSum parse_decorated_sum(std::string_view text, const GroupModelPtr& model) {
  if (!model) throw Error(Errc::InvalidArgument, "missing group model");
  Parser p(text);
  DecoratedTreeSum out;
  for (auto& raw : p.parse_sum()) {
    Tree tree = canonicalize_tree(raw.prefix);
    std::map<int, GroupElement> decs;
    for (int l : tree.label_set()) {
      auto it = raw.decorations.find(l);
      decs[l] = it == raw.decorations.end() ? model->identity() : model->parse(it->second);
    }
    out.add(DecoratedTree(std::move(tree), decs, model), raw.coefficient);
  }
  return out;
}

std::string print_expr(const TreeSum& sum) { return print_sum(sum); }
std::string print_expr(const DecoratedTreeSum& sum) { return print_sum(sum); }

}  // namespace lietrees
