#include "lietrees/towers/towers.hpp"

#include <map>

#include "lietrees/core/errors.hpp"
#include "lietrees/relations/quotient_context.hpp"

namespace lietrees {

namespace {

void check_nd(int n, int d) {
  if (n < 1) throw Error(Errc::InvalidArgument, "n must be at least 1");
  if (d < 3) throw Error(Errc::InvalidArgument, "d must be at least 3");
}

std::string base_space(std::size_t l) { return "(Omega M^{x" + std::to_string(l) + "})_+"; }

FactorDescriptor describe(const HallWord& w, int d, int loops) {
  const int l = static_cast<int>(w.length());
  return FactorDescriptor{w, 1 + l * (d - 2), base_space(w.length()), loops};
}

}  // namespace

std::string GroupShape::str() const {
  std::string out = "rank=" + std::to_string(free_rank) + " torsion=[";
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (i) out += ',';
    out += to_string(torsion[i]);
  }
  return out + "]";
}

LayerFactors layer_factors(int n, int d, int max_word_len) {
  check_nd(n, d);
  LayerFactors out{n, d, max_word_len, {}};
  for (const auto& w : normalized_words(label_range(n), max_word_len)) out.factors.push_back(describe(w, d, n + 1));
  return out;
}

long layer_connectivity(int n, int d) {
  check_nd(n, d);
  return static_cast<long>(n) * (d - 3) - 1;
}

FirstLayerGroup first_layer_group(int n, int d, const GroupModelPtr& model,
                                  std::optional<std::size_t> max_word_len) {
  check_nd(n, d);
  FirstLayerGroup out;
  out.degree = static_cast<long>(n) * (d - 3);
  if (!model || model->kind() == GroupModel::Kind::Trivial) {
    const auto ctx = lie_context(n);
    out.group = GroupShape{ctx.free_rank(), ctx.torsion()};
  } else {
    const auto ctx = decorated_lie_context(n, model, max_word_len);
    out.group = GroupShape{ctx.free_rank(), ctx.torsion()};
  }
  return out;
}

std::string e1_status_name(E1Status s) {
  switch (s) {
    case E1Status::Zero: return "zero";
    case E1Status::FirstSlope: return "firstSlope";
    case E1Status::Symbolic: return "symbolic";
  }
  return "?";
}

std::vector<E1Entry> e1_page(int n_max, int t_max, int d, const GroupModelPtr& model,
                             std::optional<std::size_t> max_group_word_len) {
  if (n_max < 1 || t_max < 1) throw Error(Errc::InvalidArgument, "page bounds must be at least 1");
  check_nd(1, d);
  std::vector<E1Entry> out;
  std::map<int, GroupShape> groups;
  for (int n = 1; n <= n_max; ++n) {
    const int vanishing = n * (d - 2);
    for (int t = 1; t <= t_max; ++t) {
      E1Entry e;
      e.n = n;
      e.t = t;
      e.max_word_len = (t - 1) / (d - 2);
      if (t <= vanishing) {
        e.status = E1Status::Zero;
      } else {
        e.status = t == vanishing + 1 ? E1Status::FirstSlope : E1Status::Symbolic;
        for (const auto& w : normalized_words(label_range(n), e.max_word_len))
          e.summands.push_back(describe(w, d, n + 1));
        if (e.status == E1Status::FirstSlope) {
          auto it = groups.find(n);
          if (it == groups.end())
            it = groups.emplace(n, first_layer_group(n, d, model, max_group_word_len).group).first;
          e.exact_group = it->second;
        }
      }
      out.push_back(std::move(e));
    }
  }
  return out;
}

ConfDecomposition conf_factors(int n, int d, int max_word_len) {
  check_nd(n, d);
  if (max_word_len < 1) throw Error(Errc::InvalidArgument, "max word length must be at least 1");
  ConfDecomposition out{n, d, max_word_len, n, {}};
  for (int i = 0; i < n; ++i) {
    ConfBlock b{i, {}};
    if (i > 0)
      for (const auto& w : lyndon_words(i, max_word_len)) b.factors.push_back(describe(w, d, 1));
    out.blocks.push_back(std::move(b));
  }
  return out;
}

nlohmann::json to_json(const FactorDescriptor& f) {
  return {{"word", f.word.str()},
          {"bracketing", f.word.bracketing.str()},
          {"length", f.word.length()},
          {"suspensionDegree", f.suspension_degree},
          {"baseSpace", f.base_space},
          {"loopCount", f.loop_count}};
}

nlohmann::json to_json(const GroupShape& g) {
  nlohmann::json t = nlohmann::json::array();
  for (const auto& x : g.torsion) t.push_back(to_string(x));
  return {{"freeRank", g.free_rank}, {"torsion", t}};
}

nlohmann::json to_json(const LayerFactors& l) {
  nlohmann::json fs = nlohmann::json::array();
  for (const auto& f : l.factors) fs.push_back(to_json(f));
  return {{"n", l.n}, {"d", l.d}, {"maxWordLen", l.max_word_len}, {"factors", fs}};
}

nlohmann::json to_json(const E1Entry& e) {
  nlohmann::json s = nlohmann::json::array();
  for (const auto& f : e.summands) s.push_back(to_json(f));
  nlohmann::json j = {{"n", e.n},
                      {"t", e.t},
                      {"status", e1_status_name(e.status)},
                      {"maxWordLen", e.max_word_len},
                      {"summands", s}};
  j["exactGroup"] = e.exact_group ? to_json(*e.exact_group) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const ConfDecomposition& c) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : c.blocks) {
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : b.factors) fs.push_back(to_json(f));
    blocks.push_back({{"alphabetSize", b.alphabet_size}, {"factors", fs}});
  }
  return {{"n", c.n}, {"d", c.d}, {"maxWordLen", c.max_word_len}, {"baseCopies", c.base_copies}, {"blocks", blocks}};
}

std::string e1_tsv(const std::vector<E1Entry>& page) {
  std::string out = "n\tt\tstatus\tsummands\texact_group\n";
  for (const auto& e : page) {
    std::string s;
    for (const auto& f : e.summands) {
      if (!s.empty()) s += ';';
      s += f.word.str() + ":" + std::to_string(f.suspension_degree);
    }
    out += std::to_string(e.n) + "\t" + std::to_string(e.t) + "\t" + e1_status_name(e.status) + "\t" +
           (s.empty() ? "-" : s) + "\t" + (e.exact_group ? e.exact_group->str() : "-") + "\n";
  }
  return out;
}

}  // namespace lietrees
