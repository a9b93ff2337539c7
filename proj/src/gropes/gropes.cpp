#include "lietrees/gropes/gropes.hpp"

#include "lietrees/core/errors.hpp"
#include "lietrees/core/expr.hpp"

namespace lietrees {

GropeEncoding make_grope(Tree tree, std::vector<int> signs, std::vector<GroupElement> decorations,
                         GroupModelPtr model) {
  if (!model) throw Error(Errc::InvalidGroupModel, "grope without a group model");
  const auto labels = tree.label_set();
  if (labels != label_range(static_cast<int>(labels.size())))
    throw Error(Errc::InvalidArgument, "grope trees must use the labels 1..n");
  if (signs.size() != labels.size() || decorations.size() != labels.size())
    throw Error(Errc::InvalidArgument, "need one sign and one decoration per cap");
  for (int s : signs)
    if (s != 1 && s != -1) throw Error(Errc::InvalidArgument, "cap signs must be +1 or -1");
  for (const auto& g : decorations)
    if (!model->contains(g)) throw Error(Errc::UnknownGroupElement, "decoration outside the group model");
  return GropeEncoding{std::move(tree), std::move(signs), std::move(decorations), std::move(model)};
}

SignedDecoratedTree ut(const GropeEncoding& g) {
  int sign = 1;
  for (int s : g.signs) sign *= s;
  return SignedDecoratedTree{sign, DecoratedTree(g.tree, g.decorations, g.model)};
}

DecoratedTreeSum forest_ut(const ForestEncoding& f) {
  DecoratedTreeSum out;
  for (const auto& g : f.gropes) {
    if (!same_model(g.model, f.model)) throw Error(Errc::ModelMismatch, "grope uses a different group model");
    if (static_cast<int>(g.tree.leaf_count()) != f.n) throw Error(Errc::ModelMismatch, "grope has the wrong degree");
    out += ut(g).to_sum();
  }
  return out;
}

ForestEncoding concat(const ForestEncoding& a, const ForestEncoding& b) {
  if (a.n != b.n || !same_model(a.model, b.model))
    throw Error(Errc::ModelMismatch, "forests over different degrees or group models");
  ForestEncoding out = a;
  out.gropes.insert(out.gropes.end(), b.gropes.begin(), b.gropes.end());
  return out;
}

ForestEncoding realize(const DecoratedTreeSum& s, int n, const GroupModelPtr& model) {
  ForestEncoding out{n, model, {}};
  for (const auto& [t, c] : s) {
    if (!same_model(t.model(), model)) throw Error(Errc::ModelMismatch, "term uses a different group model");
    std::vector<int> signs(static_cast<std::size_t>(n), 1);
    signs[0] = c < 0 ? -1 : 1;
    const Integer copies = abs(c);
    for (Integer k = 0; k < copies; ++k)
      out.gropes.push_back(make_grope(t.tree(), signs, t.decorations_by_sorted_label(), model));
  }
  return out;
}

ForestEncoding forest_from_json(const nlohmann::json& doc) {
  try {
    ForestEncoding f;
    f.n = doc.at("n").get<int>();
    if (f.n < 1) throw Error(Errc::InvalidArgument, "forest degree must be at least 1");
    f.model = std::make_shared<const GroupModel>(
        doc.contains("group") ? GroupModel::from_json(doc.at("group")) : GroupModel::trivial());
    const auto& gropes = doc.at("gropes");
    if (!gropes.is_array() || gropes.empty()) throw Error(Errc::InvalidArgument, "a forest needs at least one grope");
    for (const auto& g : gropes) {
      Tree t = parse_tree(g.at("tree").get<std::string>());
      if (static_cast<int>(t.leaf_count()) != f.n) throw Error(Errc::InvalidArgument, "grope tree has the wrong degree");
      std::vector<int> signs = g.at("signs").get<std::vector<int>>();
      std::vector<GroupElement> decs;
      if (g.contains("decorations")) {
        for (const auto& d : g.at("decorations")) decs.push_back(f.model->parse(d.get<std::string>()));
      } else {
        decs.assign(static_cast<std::size_t>(f.n), f.model->identity());
      }
      f.gropes.push_back(make_grope(std::move(t), std::move(signs), std::move(decs), f.model));
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::SyntaxError, std::string("bad forest document: ") + e.what());
  }
}

nlohmann::json to_json(const ForestEncoding& f) {
  nlohmann::json gropes = nlohmann::json::array();
  for (const auto& g : f.gropes) {
    nlohmann::json decs = nlohmann::json::array();
    for (const auto& d : g.decorations) decs.push_back(f.model->format(d));
    gropes.push_back({{"tree", g.tree.str()}, {"signs", g.signs}, {"decorations", decs}});
  }
  return {{"n", f.n}, {"group", f.model->to_json()}, {"gropes", gropes}};
}

std::vector<Integer> class_in_lie(const DecoratedTreeSum& s, const DecoratedQuotientContext& ctx) {
  return ctx.reduce(s);
}

std::vector<Integer> project_at(const TreeSum& s, const QuotientContext& jacobi_ctx) {
  return jacobi_ctx.reduce(s);
}

std::vector<Integer> project_at(const TreeSum& s, int n) { return project_at(s, jacobi_tree_context(n)); }

}  // namespace lietrees
