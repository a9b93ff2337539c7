#include "lietrees/core/group_model.hpp"

#include <algorithm>
#include <cctype>

#include "lietrees/core/errors.hpp"

namespace lietrees {

GroupModel GroupModel::trivial() { return GroupModel{}; }

GroupModel GroupModel::finite(std::vector<std::vector<int>> table, std::vector<int> inverse) {
  const std::size_t m = table.size();
  if (m == 0) throw Error(Errc::InvalidGroupModel, "empty multiplication table");
  if (inverse.size() != m) throw Error(Errc::InvalidGroupModel, "inverse table has wrong length");
  const auto in_range = [m](int v) { return v >= 0 && static_cast<std::size_t>(v) < m; };
  for (const auto& row : table) {
    if (row.size() != m) throw Error(Errc::InvalidGroupModel, "multiplication table is not square");
    for (int v : row)
      if (!in_range(v)) throw Error(Errc::InvalidGroupModel, "table entry out of range");
  }
  for (std::size_t x = 0; x < m; ++x) {
    const int xi = static_cast<int>(x);
    if (table[0][x] != xi || table[x][0] != xi)
      throw Error(Errc::InvalidGroupModel, "id 0 is not a two-sided identity");
    if (!in_range(inverse[x])) throw Error(Errc::InvalidGroupModel, "inverse entry out of range");
    const auto inv = static_cast<std::size_t>(inverse[x]);
    if (table[x][inv] != 0 || table[inv][x] != 0)
      throw Error(Errc::InvalidGroupModel, "inverse table is wrong at id " + std::to_string(x));
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        const auto ab = static_cast<std::size_t>(table[a][b]);
        const auto bc = static_cast<std::size_t>(table[b][c]);
        if (table[ab][c] != table[a][bc])
          throw Error(Errc::InvalidGroupModel, "multiplication is not associative");
      }
  GroupModel g;
  g.kind_ = Kind::Finite;
  g.table_ = std::move(table);
  g.inverse_ = std::move(inverse);
  return g;
}

GroupModel GroupModel::cyclic(int order) {
  if (order < 1) throw Error(Errc::InvalidGroupModel, "cyclic group order must be positive");
  std::vector<std::vector<int>> table(static_cast<std::size_t>(order),
                                      std::vector<int>(static_cast<std::size_t>(order)));
  std::vector<int> inverse(static_cast<std::size_t>(order));
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b)
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % order;
    inverse[static_cast<std::size_t>(a)] = (order - a) % order;
  }
  return finite(std::move(table), std::move(inverse));
}

GroupModel GroupModel::free(int generators) {
  if (generators < 1 || generators > 26)
    throw Error(Errc::InvalidGroupModel, "free models support 1..26 generators");
  GroupModel g;
  g.kind_ = Kind::Free;
  g.generators_ = generators;
  return g;
}

GroupModel GroupModel::from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
    throw Error(Errc::InvalidGroupModel, "group document needs a string field \"kind\"");
  const auto kind = doc["kind"].get<std::string>();
  try {
    if (kind == "trivial") return trivial();
    if (kind == "free") return free(doc.at("generators").get<int>());
    if (kind == "finite") {
      return finite(doc.at("table").get<std::vector<std::vector<int>>>(),
                    doc.at("inverse").get<std::vector<int>>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidGroupModel, e.what());
  }
  throw Error(Errc::InvalidGroupModel, "unknown group kind \"" + kind + "\"");
}

nlohmann::json GroupModel::to_json() const {
  switch (kind_) {
    case Kind::Trivial: return {{"kind", "trivial"}};
    case Kind::Free: return {{"kind", "free"}, {"generators", generators_}};
    case Kind::Finite: return {{"kind", "finite"}, {"table", table_}, {"inverse", inverse_}};
  }
  return {};
}

std::optional<std::size_t> GroupModel::order() const {
  switch (kind_) {
    case Kind::Trivial: return 1;
    case Kind::Finite: return table_.size();
    case Kind::Free: return std::nullopt;
  }
  return std::nullopt;
}

GroupElement GroupModel::identity() const {
  if (kind_ == Kind::Finite) return GroupElement{{0}};
  return GroupElement{};
}

bool GroupModel::contains(const GroupElement& a) const {
  switch (kind_) {
    case Kind::Trivial: return a.word.empty();
    case Kind::Finite:
      return a.word.size() == 1 && a.word[0] >= 0 &&
             static_cast<std::size_t>(a.word[0]) < table_.size();
    case Kind::Free:
      for (std::size_t i = 0; i < a.word.size(); ++i) {
        const int v = a.word[i];
        if (v == 0 || std::abs(v) > generators_) return false;
        if (i > 0 && a.word[i - 1] == -v) return false;
      }
      return true;
  }
  return false;
}

GroupElement GroupModel::multiply(const GroupElement& a, const GroupElement& b) const {
  switch (kind_) {
    case Kind::Trivial: return {};
    case Kind::Finite:
      return GroupElement{{table_.at(static_cast<std::size_t>(a.word.at(0)))
                               .at(static_cast<std::size_t>(b.word.at(0)))}};
    case Kind::Free: {
      std::vector<int> w = a.word;
      for (int v : b.word) {
        if (!w.empty() && w.back() == -v)
          w.pop_back();
        else
          w.push_back(v);
      }
      return GroupElement{std::move(w)};
    }
  }
  return {};
}

GroupElement GroupModel::inverse(const GroupElement& a) const {
  switch (kind_) {
    case Kind::Trivial: return {};
    case Kind::Finite: return GroupElement{{inverse_.at(static_cast<std::size_t>(a.word.at(0)))}};
    case Kind::Free: {
      std::vector<int> w(a.word.rbegin(), a.word.rend());
      for (int& v : w) v = -v;
      return GroupElement{std::move(w)};
    }
  }
  return {};
}

GroupElement GroupModel::parse(std::string_view text) const {
  GroupElement acc = identity();
  if (text.empty()) return acc;
  switch (kind_) {
    case Kind::Trivial:
      if (text == "1" || text == "e") return acc;
      throw Error(Errc::UnknownGroupElement,
                  "\"" + std::string(text) + "\" is not an element of the trivial group");
    case Kind::Finite: {
      std::size_t pos = 0;
      while (pos <= text.size()) {
        auto dot = text.find('.', pos);
        auto piece = text.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
        if (piece.empty() || !std::all_of(piece.begin(), piece.end(),
                                          [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
          throw Error(Errc::UnknownGroupElement, "bad element id \"" + std::string(piece) + "\"");
        if (piece.size() > 9)
          throw Error(Errc::UnknownGroupElement, "element id out of range: " + std::string(piece));
        GroupElement e{{std::stoi(std::string(piece))}};
        if (!contains(e))
          throw Error(Errc::UnknownGroupElement, "element id out of range: " + std::string(piece));
        acc = multiply(acc, e);
        if (dot == std::string_view::npos) break;
        pos = dot + 1;
      }
      return acc;
    }
    case Kind::Free: {
      for (char c : text) {
        int v = 0;
        if (c >= 'a' && c <= 'z') v = c - 'a' + 1;
        else if (c >= 'A' && c <= 'Z') v = -(c - 'A' + 1);
        if (v == 0 || std::abs(v) > generators_)
          throw Error(Errc::UnknownGroupElement,
                      std::string("'") + c + "' is not a generator of this free group");
        acc = multiply(acc, GroupElement{{v}});
      }
      return acc;
    }
  }
  return acc;
}

std::string GroupModel::format(const GroupElement& a) const {
  switch (kind_) {
    case Kind::Trivial: return "";
    case Kind::Finite: return a.word.at(0) == 0 ? "" : std::to_string(a.word.at(0));
    case Kind::Free: {
      std::string out;
      for (int v : a.word)
        out += v > 0 ? static_cast<char>('a' + v - 1) : static_cast<char>('A' - v - 1);
      return out;
    }
  }
  return "";
}

std::vector<GroupElement> GroupModel::elements(std::optional<std::size_t> max_word_len) const {
  switch (kind_) {
    case Kind::Trivial: return {GroupElement{}};
    case Kind::Finite: {
      std::vector<GroupElement> out;
      for (std::size_t i = 0; i < table_.size(); ++i) out.push_back(GroupElement{{static_cast<int>(i)}});
      return out;
    }
    case Kind::Free: {
      if (!max_word_len)
        throw Error(Errc::InfiniteEnumeration, "free group enumeration needs a word-length cap");
      std::vector<GroupElement> out{GroupElement{}};
      std::vector<GroupElement> layer{GroupElement{}};
      std::vector<int> letters;
      for (int g = 1; g <= generators_; ++g) letters.push_back(g);
      for (int g = 1; g <= generators_; ++g) letters.push_back(-g);
      for (std::size_t len = 1; len <= *max_word_len; ++len) {
        std::vector<GroupElement> next;
        for (const auto& e : layer)
          for (int v : letters) {
            if (!e.word.empty() && e.word.back() == -v) continue;
            GroupElement f = e;
            f.word.push_back(v);
            next.push_back(std::move(f));
          }
        std::sort(next.begin(), next.end());
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
      }
      return out;
    }
  }
  return {};
}

std::string GroupModel::describe() const {
  switch (kind_) {
    case Kind::Trivial: return "trivial";
    case Kind::Finite: return "finite(order " + std::to_string(table_.size()) + ")";
    case Kind::Free: return "free(" + std::to_string(generators_) + ")";
  }
  return "";
}

}  // namespace lietrees
