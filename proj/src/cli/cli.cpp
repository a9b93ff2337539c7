#include "lietrees/cli/cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "lietrees/cli/output.hpp"
#include "lietrees/core/errors.hpp"
#include "lietrees/core/expr.hpp"
#include "lietrees/exactla/matrix_market.hpp"
#include "lietrees/freelie/normal_form.hpp"
#include "lietrees/freelie/omega.hpp"
#include "lietrees/gropes/gropes.hpp"
#include "lietrees/relations/one_loop.hpp"
#include "lietrees/towers/towers.hpp"

namespace lietrees::cli {

namespace {

constexpr const char* kFooter = R"(TSV headers:
  lie-rank, at-rank, decorated-rank   n, free_rank, torsion
  reduce                              index, basis, coefficient
  equal                               equal
  omega                               d, tree, sign, word, nested
  hall, normalized                    word, length, bracketing
  layers                              word, length, suspension_degree, base_space, loop_count
  connectivity                        n, d, connectivity
  first-group                         n, d, degree, free_rank, torsion
  e1                                  n, t, status, summands, exact_group
  conf                                kind, alphabet_size, word, length, suspension_degree
  ut                                  grope, sign, decorated_tree
  stu2-dump, relations-dump           family, relation

--group accepts "trivial", "Z/m", "free:g" or a path to a group JSON file.
Exit codes: 0 success, 1 domain error, 2 usage error.)";

struct Globals {
  std::string format = "text";
  std::string group;
  std::size_t max_word_len = 0;
  std::uint64_t seed = 1;
};

GroupModelPtr resolve_group(const Globals& g) {
  const std::string& s = g.group;
  if (s.empty() || s == "trivial") return std::make_shared<const GroupModel>(GroupModel::trivial());
  if (s.rfind("Z/", 0) == 0) return std::make_shared<const GroupModel>(GroupModel::cyclic(std::stoi(s.substr(2))));
  if (s.rfind("free:", 0) == 0) return std::make_shared<const GroupModel>(GroupModel::free(std::stoi(s.substr(5))));
  std::ifstream in(s);
  if (!in) throw Error(Errc::InvalidGroupModel, "cannot open group file " + s);
  try {
    return std::make_shared<const GroupModel>(GroupModel::from_json(nlohmann::json::parse(in)));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidGroupModel, std::string("bad group file: ") + e.what());
  }
}

std::optional<std::size_t> word_cap(const Globals& g) {
  if (g.max_word_len == 0) return std::nullopt;
  return g.max_word_len;
}

Payload shape_payload(int n, std::size_t rank, const std::vector<Integer>& torsion, const std::string& what) {
  Payload p;
  p.json = {{"quotient", what}, {"n", n}, {"freeRank", rank}, {"torsion", int_json(torsion)}};
  GroupShape shape{rank, torsion};
  p.text = shape.str() + "\n";
  Table t{{"n", "free_rank", "torsion"}, {{std::to_string(n), std::to_string(rank), list_text(torsion)}}};
  p.tsv = t.tsv();
  return p;
}

Payload words_payload(const std::vector<HallWord>& words) {
  Table t{{"word", "length", "bracketing"}, {}};
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& w : words) {
    t.rows.push_back({w.str(), std::to_string(w.length()), w.bracketing.str()});
    arr.push_back({{"word", w.str()}, {"length", w.length()}, {"bracketing", w.bracketing.str()}});
  }
  return Payload{arr, t.text(), t.tsv()};
}

Payload factors_payload(const LayerFactors& l) {
  Table t{{"word", "length", "suspension_degree", "base_space", "loop_count"}, {}};
  for (const auto& f : l.factors)
    t.rows.push_back({f.word.str(), std::to_string(f.word.length()), std::to_string(f.suspension_degree), f.base_space,
                      std::to_string(f.loop_count)});
  return Payload{to_json(l), "max_word_len=" + std::to_string(l.max_word_len) + "\n" + t.text(), t.tsv()};
}

Payload relations_payload(const std::string& family, const std::vector<std::string>& lines, const std::string& text) {
  Table t{{"family", "relation"}, {}};
  for (const auto& l : lines) t.rows.push_back({family, l});
  return Payload{{{"family", family}, {"relations", lines}}, text, t.tsv()};
}

template <class Key>
Payload relation_set_payload(const BasicRelationSet<Key>& r) {
  std::vector<std::string> lines;
  for (const auto& v : r.vectors) lines.push_back(print_expr(v));
  return relations_payload(family_tag(r.family), lines, r.export_text());
}

template <class Key>
Payload reduce_payload(const BasicQuotientContext<Key>& ctx, const FormalSum<Key>& s, const std::string& context) {
  const auto coords = ctx.reduce(s);
  Payload p;
  std::vector<std::string> labels;
  if (ctx.has_preferred_basis())
    for (const auto& b : ctx.basis()) labels.push_back(b.str());
  else
    for (std::size_t i = 0; i < coords.size(); ++i)
      labels.push_back(i < ctx.free_rank() ? "free" + std::to_string(i)
                                           : "Z/" + to_string(ctx.torsion()[i - ctx.free_rank()]));
  p.json = {{"context", context}, {"coordinates", int_json(coords)}, {"basis", labels}};
  p.text = coords_text(coords) + "\n";
  Table t{{"index", "basis", "coefficient"}, {}};
  for (std::size_t i = 0; i < coords.size(); ++i) t.rows.push_back({std::to_string(i), labels[i], to_string(coords[i])});
  p.tsv = t.tsv();
  return p;
}

template <class Key>
Payload equal_payload(const BasicQuotientContext<Key>& ctx, const FormalSum<Key>& a, const FormalSum<Key>& b) {
  const auto ca = ctx.reduce(a);
  const auto cb = ctx.reduce(b);
  const bool eq = ca == cb;
  Payload p;
  p.json = {{"equal", eq}, {"coordinates1", int_json(ca)}, {"coordinates2", int_json(cb)}};
  p.text = std::string(eq ? "true" : "false") + "\n";
  p.tsv = std::string("equal\n") + (eq ? "true" : "false") + "\n";
  return p;
}

// Random multilinear sums compared through the quotient and through the
// commutator expansion.
Payload selftest(std::uint64_t seed, int count, int n_max) {
  std::mt19937_64 rng(seed);
  std::size_t checks = 0, failures = 0;
  std::vector<std::string> failed;
  for (int n = 2; n <= n_max; ++n) {
    const auto labels = label_range(n);
    const auto trees = enumerate_trees(labels);
    const auto ctx = lie_context(n);
    std::uniform_int_distribution<std::size_t> pick(0, trees.size() - 1);
    std::uniform_int_distribution<int> coef(-3, 3), len(1, 4);
    auto random_sum = [&] {
      TreeSum s;
      for (int k = len(rng); k > 0; --k) s.add(trees[pick(rng)], coef(rng));
      return s;
    };
    const auto& rels = ctx.relations().vectors;
    std::uniform_int_distribution<std::size_t> pick_rel(0, rels.size() - 1);
    for (int i = 0; i < count; ++i) {
      const TreeSum a = random_sum();
      // half of the pairs differ by a relation, so they agree
      TreeSum b = random_sum();
      if (i % 2 == 0) {
        b = a;
        for (int r = len(rng); r > 0; --r) b += Integer(coef(rng)) * rels[pick_rel(rng)];
      }
      const bool via_quotient = ctx.equal(a, b);
      const bool via_expansion = multilinear_normal_form(a, labels) == multilinear_normal_form(b, labels);
      ++checks;
      if (via_quotient != via_expansion) {
        ++failures;
        failed.push_back(print_expr(a) + " vs " + print_expr(b));
      }
    }
  }
  Payload p;
  p.json = {{"seed", seed}, {"checks", checks}, {"failures", failures}, {"failed", failed}};
  p.text = "seed=" + std::to_string(seed) + " checks=" + std::to_string(checks) +
           " failures=" + std::to_string(failures) + "\n";
  p.tsv = "seed\tchecks\tfailures\n" + std::to_string(seed) + "\t" + std::to_string(checks) + "\t" +
          std::to_string(failures) + "\n";
  if (failures) throw Error(Errc::InvalidArgument, "selftest found disagreements: " + p.text);
  return p;
}

}  // namespace

CommandResult dispatch(const std::vector<std::string>& args) {
  CLI::App app{"Exact computations with Lie trees, Jacobi trees and Taylor tower data", "lietrees"};
  app.footer(kFooter);
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "tsv", "json"}));
  app.add_option("--group", g.group, "Decoration group: trivial, Z/m, free:g or a JSON file");
  app.add_option("--max-word-len", g.max_word_len, "Word-length cap when enumerating a free group");
  app.add_option("--seed", g.seed, "Seed for selftest");

  std::map<CLI::App*, std::function<Payload()>> actions;
  auto sub = [&](const std::string& name, const std::string& help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  int n = 0, d = 0, k = 0, max_len = 0, n_max = 0, t_max = 0, count = 100;
  std::string context = "lie", expr1, expr2, tree_text, family = "lie", file;
  bool general = false, mtx = false, with_class = false;

  auto* lie_rank = sub("lie-rank", "Rank and torsion of Lie(n)");
  lie_rank->add_option("--n", n)->required()->check(CLI::Range(1, 8));
  actions[lie_rank] = [&] {
    const auto ctx = lie_context(n);
    return shape_payload(n, ctx.free_rank(), ctx.torsion(), "Lie");
  };

  auto* at_rank = sub("at-rank", "Rank and torsion of the Jacobi tree group A^T_n");
  at_rank->add_option("--n", n)->required()->check(CLI::Range(1, 8));
  actions[at_rank] = [&] {
    const auto ctx = jacobi_tree_context(n);
    return shape_payload(n, ctx.free_rank(), ctx.torsion(), "A^T");
  };

  auto* dec_rank = sub("decorated-rank", "Rank and torsion of decorated Lie trees Lie_pi(n)");
  dec_rank->add_option("--n", n)->required()->check(CLI::Range(1, 6));
  actions[dec_rank] = [&] {
    const auto model = resolve_group(g);
    const auto ctx = decorated_lie_context(n, model, word_cap(g));
    Payload p = shape_payload(n, ctx.free_rank(), ctx.torsion(), "Lie_pi");
    p.json["group"] = model->describe();
    return p;
  };

  auto* reduce = sub("reduce", "Coordinates of a sum in a quotient");
  reduce->add_option("--context", context)->check(CLI::IsMember({"lie", "at", "decorated"}));
  reduce->add_option("--n", n)->required()->check(CLI::Range(1, 8));
  reduce->add_option("expr", expr1)->required();
  actions[reduce] = [&]() -> Payload {
    if (context == "decorated") {
      const auto model = resolve_group(g);
      const auto s = parse_decorated_sum(expr1, model);
      return reduce_payload(decorated_lie_context(n, model, word_cap(g)), s, context);
    }
    const auto s = parse_tree_sum(expr1);
    return reduce_payload(context == "lie" ? lie_context(n) : jacobi_tree_context(n), s, context);
  };

  auto* equal = sub("equal", "Whether two sums agree in a quotient");
  equal->add_option("--context", context)->check(CLI::IsMember({"lie", "at", "decorated"}));
  equal->add_option("--n", n)->required()->check(CLI::Range(1, 8));
  equal->add_option("lhs", expr1)->required();
  equal->add_option("rhs", expr2)->required();
  actions[equal] = [&]() -> Payload {
    if (context == "decorated") {
      const auto model = resolve_group(g);
      return equal_payload(decorated_lie_context(n, model, word_cap(g)), parse_decorated_sum(expr1, model),
                           parse_decorated_sum(expr2, model));
    }
    const auto ctx = context == "lie" ? lie_context(n) : jacobi_tree_context(n);
    return equal_payload(ctx, parse_tree_sum(expr1), parse_tree_sum(expr2));
  };

  auto* omega = sub("omega", "Signed Lie word of a tree in dimension d");
  omega->add_option("--d", d)->required()->check(CLI::Range(2, 64));
  omega->add_option("tree", tree_text)->required();
  actions[omega] = [&] {
    const auto w = omega_d(parse_tree(tree_text), d);
    Payload p;
    p.json = {{"d", d}, {"tree", tree_text}, {"sign", w.sign}, {"word", w.word.str()}, {"nested", w.nested_str()},
              {"nodeExponents", w.node_exponents}};
    p.text = w.str() + "  " + w.nested_str() + "\n";
    Table t{{"d", "tree", "sign", "word", "nested"},
            {{std::to_string(d), parse_tree(tree_text).str(), std::to_string(w.sign), w.word.str(), w.nested_str()}}};
    p.tsv = t.tsv();
    return p;
  };

  auto* hall = sub("hall", "Lyndon words with their standard bracketing");
  hall->add_option("--k", k)->required()->check(CLI::Range(1, 26));
  hall->add_option("--max-len", max_len)->required()->check(CLI::Range(1, 16));
  actions[hall] = [&] { return words_payload(lyndon_words(k, max_len)); };

  auto* normalized = sub("normalized", "Lyndon words using every letter of {1..n}");
  normalized->add_option("--n", n)->required()->check(CLI::Range(1, 12));
  normalized->add_option("--max-len", max_len)->required()->check(CLI::Range(1, 16));
  actions[normalized] = [&] { return words_payload(normalized_words(label_range(n), max_len)); };

  auto* layers = sub("layers", "Factors of the n-th tower layer");
  layers->add_option("--n", n)->required()->check(CLI::Range(1, 12));
  layers->add_option("--d", d)->required()->check(CLI::Range(3, 64));
  layers->add_option("--max-len", max_len)->required()->check(CLI::Range(1, 16));
  actions[layers] = [&] { return factors_payload(layer_factors(n, d, max_len)); };

  auto* conn = sub("connectivity", "Connectivity n(d-3)-1 of the n-th layer");
  conn->add_option("--n", n)->required()->check(CLI::Range(1, 1000));
  conn->add_option("--d", d)->required()->check(CLI::Range(3, 1000));
  actions[conn] = [&] {
    const long c = layer_connectivity(n, d);
    Table t{{"n", "d", "connectivity"}, {{std::to_string(n), std::to_string(d), std::to_string(c)}}};
    return Payload{{{"n", n}, {"d", d}, {"connectivity", c}}, "connectivity=" + std::to_string(c) + "\n", t.tsv()};
  };

  auto* first = sub("first-group", "First nontrivial homotopy group of the n-th layer");
  first->add_option("--n", n)->required()->check(CLI::Range(1, 6));
  first->add_option("--d", d)->required()->check(CLI::Range(3, 64));
  actions[first] = [&] {
    const auto model = resolve_group(g);
    const auto r = first_layer_group(n, d, model, word_cap(g));
    Table t{{"n", "d", "degree", "free_rank", "torsion"},
            {{std::to_string(n), std::to_string(d), std::to_string(r.degree), std::to_string(r.group.free_rank),
              list_text(r.group.torsion)}}};
    nlohmann::json j = {{"n", n}, {"d", d}, {"degree", r.degree}, {"group", model->describe()}};
    j["exactGroup"] = to_json(r.group);
    return Payload{j, "degree=" + std::to_string(r.degree) + " " + r.group.str() + "\n", t.tsv()};
  };

  auto* e1 = sub("e1", "E^1 page entries E^1_{-(n+1),t}");
  e1->add_option("--n-max", n_max)->required()->check(CLI::Range(1, 6));
  e1->add_option("--t-max", t_max)->required()->check(CLI::Range(1, 200));
  e1->add_option("--d", d)->required()->check(CLI::Range(3, 64));
  actions[e1] = [&] {
    const auto page = e1_page(n_max, t_max, d, resolve_group(g), word_cap(g));
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : page) arr.push_back(to_json(e));
    // the full summand lists only go to TSV and JSON; text shows counts
    Table t{{"n", "t", "status", "summands", "max_word_len", "exact_group"}, {}};
    for (const auto& e : page)
      t.rows.push_back({std::to_string(e.n), std::to_string(e.t), e1_status_name(e.status),
                        std::to_string(e.summands.size()), std::to_string(e.max_word_len),
                        e.exact_group ? e.exact_group->str() : "-"});
    const std::string tsv = e1_tsv(page);
    return Payload{arr, t.text(), tsv};
  };

  auto* conf = sub("conf", "Summands of the homotopy groups of configuration spaces");
  conf->add_option("--n", n)->required()->check(CLI::Range(1, 12));
  conf->add_option("--d", d)->required()->check(CLI::Range(3, 64));
  conf->add_option("--max-len", max_len)->required()->check(CLI::Range(1, 16));
  actions[conf] = [&] {
    const auto c = conf_factors(n, d, max_len);
    Table t{{"kind", "alphabet_size", "word", "length", "suspension_degree"}, {}};
    t.rows.push_back({"base", "-", "(pi_* M)^" + std::to_string(c.base_copies), "-", "-"});
    for (const auto& b : c.blocks)
      for (const auto& f : b.factors)
        t.rows.push_back({"word", std::to_string(b.alphabet_size), f.word.str(), std::to_string(f.word.length()),
                          std::to_string(f.suspension_degree)});
    return Payload{to_json(c), "max_word_len=" + std::to_string(max_len) + "\n" + t.text(), t.tsv()};
  };

  auto* utc = sub("ut", "Underlying decorated trees of a grope forest file");
  utc->add_option("file", file)->required();
  utc->add_flag("--class", with_class, "Also reduce the sum in Lie_pi(n)");
  actions[utc] = [&] {
    std::ifstream in(file);
    if (!in) throw Error(Errc::InvalidArgument, "cannot open forest file " + file);
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::SyntaxError, std::string("bad forest file: ") + e.what());
    }
    const auto forest = forest_from_json(doc);
    Table t{{"grope", "sign", "decorated_tree"}, {}};
    nlohmann::json per = nlohmann::json::array();
    for (std::size_t i = 0; i < forest.gropes.size(); ++i) {
      const auto u = ut(forest.gropes[i]);
      t.rows.push_back({std::to_string(i + 1), std::to_string(u.sign), u.tree.str()});
      per.push_back({{"sign", u.sign}, {"tree", u.tree.str()}});
    }
    const auto total = forest_ut(forest);
    t.rows.push_back({"total", "", print_expr(total)});
    nlohmann::json j = {{"gropes", per}, {"sum", print_expr(total)}};
    std::string text = t.text();
    if (with_class) {
      const auto ctx = decorated_lie_context(forest.n, forest.model, word_cap(g));
      const auto coords = class_in_lie(total, ctx);
      j["class"] = int_json(coords);
      t.rows.push_back({"class", "", coords_text(coords)});
      text = t.text();
    }
    return Payload{j, text, t.tsv()};
  };

  auto* stu = sub("stu2-dump", "STU^2 relations over Tree(n)");
  stu->add_option("--n", n)->required()->check(CLI::Range(1, 7));
  stu->add_flag("--general", general, "Any root position and any pair of loop vertices");
  actions[stu] = [&] { return relation_set_payload(general ? general_stu2_relations(n) : stu2_relations(n)); };

  auto* rel = sub("relations-dump", "Relation families over Tree(n)");
  rel->add_option("--family", family)->check(CLI::IsMember({"as", "ihx", "lie", "stu2", "at", "decorated"}));
  rel->add_option("--n", n)->required()->check(CLI::Range(1, 7));
  rel->add_flag("--mtx", mtx, "Emit the relation matrix in Matrix Market format");
  actions[rel] = [&]() -> Payload {
    const auto labels = label_range(n);
    if (family == "decorated") {
      const auto model = resolve_group(g);
      if (mtx) {
        const auto ctx = decorated_lie_context(n, model, word_cap(g));
        std::ostringstream os;
        write_matrix_market(os, ctx.relation_matrix());
        return Payload{{{"matrixMarket", os.str()}}, os.str(), os.str()};
      }
      return relation_set_payload(decorated_relations(labels, model, word_cap(g)));
    }
    RelationSet r;
    if (family == "as") r = as_relations(labels);
    else if (family == "ihx") r = ihx_relations(labels);
    else if (family == "lie") r = lie_relations(labels);
    else if (family == "stu2") r = stu2_relations(n);
    else {
      r = lie_relations(labels);
      merge_relations(r, stu2_relations(n), RelationFamily::AS_IHX_STU2);
    }
    if (mtx) {
      const QuotientContext ctx(enumerate_trees(labels), r);
      std::ostringstream os;
      write_matrix_market(os, ctx.relation_matrix());
      return Payload{{{"matrixMarket", os.str()}}, os.str(), os.str()};
    }
    return relation_set_payload(r);
  };

  auto* self = sub("selftest", "Random agreement checks between the quotient and the expansion oracle");
  self->add_option("--count", count, "Pairs per n")->check(CLI::Range(1, 100000));
  self->add_option("--n-max", n_max, "Largest n (default 4)")->check(CLI::Range(2, 6));
  actions[self] = [&] { return selftest(g.seed, count, n_max == 0 ? 4 : n_max); };

  CommandResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.exit_code = code == 0 ? 0 : 2;
    return result;
  }

  try {
    const Format fmt = parse_format(g.format);
    CLI::App* chosen = app.get_subcommands().front();
    result.out = actions.at(chosen)().render(fmt);
  } catch (const Error& e) {
    result.out.clear();
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = 1;
  } catch (const std::exception& e) {
    result.out.clear();
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = 1;
  }
  return result;
}

}  // namespace lietrees::cli
