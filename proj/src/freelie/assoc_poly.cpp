#include "lietrees/freelie/assoc_poly.hpp"

namespace lietrees {

AssocPoly AssocPoly::monomial(Monomial m, const Integer& c) {
  AssocPoly p;
  p.add(m, c);
  return p;
}

void AssocPoly::add(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

const Integer& AssocPoly::coefficient(const Monomial& m) const {
  static const Integer zero{0};
  auto it = terms_.find(m);
  return it == terms_.end() ? zero : it->second;
}

AssocPoly& AssocPoly::operator+=(const AssocPoly& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

AssocPoly& AssocPoly::operator-=(const AssocPoly& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

AssocPoly& AssocPoly::operator*=(const Integer& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= k;
  return *this;
}

AssocPoly operator*(const AssocPoly& a, const AssocPoly& b) {
  AssocPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add(m, ca * cb);
    }
  return out;
}

std::string AssocPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = c < 0;
    const Integer mag = neg ? Integer(-c) : c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (mag != 1 || m.empty()) out += mag.str();
    for (int x : m) out += "x" + std::to_string(x);
    first = false;
  }
  return out;
}

AssocPoly expand_assoc(const LieWord& w) {
  if (w.is_letter()) return AssocPoly::monomial({w.letter_value()});
  const AssocPoly a = expand_assoc(w.left());
  const AssocPoly b = expand_assoc(w.right());
  return a * b - b * a;
}

AssocPoly omega2_expansion(const TreeSum& s) {
  AssocPoly out;
  for (const auto& [t, c] : s) out += c * expand_assoc(LieWord::from_tree(t));
  return out;
}

}  // namespace lietrees
