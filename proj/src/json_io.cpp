#include "fo2/json_io.hpp"

#include <algorithm>

namespace fo2 {

namespace {

// Swap element 0 with the identity so serialized tables always place the
// identity first.
FiniteMonoid with_identity_first(const FiniteMonoid& m) {
  if (m.identity() == 0) return m;
  const int n = m.size();
  const int id = m.identity();
  auto perm = [&](int x) { return x == 0 ? id : x == id ? 0 : x; };
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      flat[perm(a) * n + perm(b)] = perm(m.mul(a, b));
  std::vector<std::string> names;
  if (m.has_names()) {
    names.resize(n);
    for (int a = 0; a < n; ++a) names[perm(a)] = m.names()[a];
  }
  return FiniteMonoid::from_flat(n, std::move(flat), 0, std::move(names));
}

ordered_json indices_json(const Bitset& set) {
  ordered_json out = ordered_json::array();
  for (int i : set.to_indices()) out.push_back(i);
  return out;
}

ordered_json object_json(const KernelObject& o) {
  return ordered_json::array({o.n1, o.n2});
}

std::string element_display(const std::vector<std::string>& names, int e) {
  if (e >= 0 && e < static_cast<int>(names.size())) return names[e];
  return "#" + std::to_string(e);
}

ordered_json named_valuation_json(const Valuation& v,
                                  const std::vector<std::string>& names) {
  ordered_json out = ordered_json::object();
  for (const auto& [var, value] : v)
    out["x" + std::to_string(var)] = element_display(names, value);
  return out;
}

}  // namespace

ordered_json monoid_to_json(const FiniteMonoid& input) {
  FiniteMonoid m = with_identity_first(input);
  ordered_json j;
  j["size"] = m.size();
  j["identity"] = 0;
  ordered_json table = ordered_json::array();
  for (int a = 0; a < m.size(); ++a) {
    ordered_json row = ordered_json::array();
    for (int b = 0; b < m.size(); ++b) row.push_back(m.mul(a, b));
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  if (m.has_names()) j["names"] = m.names();
  return j;
}

FiniteMonoid monoid_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("size") || !j.contains("table") ||
      !j.contains("identity"))
    throw ParseError("monoid JSON needs size, identity and table", 1);
  int size = j.at("size").get<int>();
  std::vector<std::vector<int>> table =
      j.at("table").get<std::vector<std::vector<int>>>();
  if (static_cast<int>(table.size()) != size)
    throw IndexOutOfRangeError("monoid JSON: table row count mismatch");
  int identity = j.at("identity").get<int>();
  std::vector<std::string> names;
  if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
  FiniteMonoid m = FiniteMonoid::from_table(table, identity, std::move(names));
  return with_identity_first(m);
}

ordered_json dfa_to_json(const Dfa& d) {
  ordered_json j;
  ordered_json alphabet = ordered_json::array();
  for (char c : d.alphabet) alphabet.push_back(std::string(1, c));
  j["alphabet"] = std::move(alphabet);
  j["states"] = d.state_count;
  j["initial"] = d.initial;
  j["accepting"] = indices_json(d.accepting);
  j["delta"] = d.delta;
  return j;
}

Dfa dfa_from_json(const ordered_json& j) {
  Dfa d;
  if (!j.is_object() || !j.contains("alphabet") || !j.contains("states") ||
      !j.contains("initial") || !j.contains("accepting") || !j.contains("delta"))
    throw ParseError("dfa JSON needs alphabet, states, initial, accepting, delta", 1);
  for (const auto& letter : j.at("alphabet")) {
    std::string s = letter.get<std::string>();
    if (s.size() != 1)
      throw IndexOutOfRangeError("dfa JSON: letters must be single characters");
    d.alphabet.push_back(s[0]);
  }
  d.state_count = j.at("states").get<int>();
  d.initial = j.at("initial").get<int>();
  d.accepting = Bitset(d.state_count);
  for (const auto& s : j.at("accepting")) {
    int state = s.get<int>();
    if (state < 0 || state >= d.state_count)
      throw IndexOutOfRangeError("dfa JSON: accepting state out of range");
    d.accepting.set(state);
  }
  d.delta = j.at("delta").get<std::vector<std::vector<int>>>();
  validate(d);
  return d;
}

ordered_json recognized_language_to_json(const RecognizedLanguage& r) {
  ordered_json j;
  j["monoid"] = monoid_to_json(r.monoid());
  ordered_json alphabet = ordered_json::array();
  for (char c : r.morphism.alphabet()) alphabet.push_back(std::string(1, c));
  j["alphabet"] = std::move(alphabet);
  j["letter_images"] = r.morphism.letter_images();
  j["accepting"] = indices_json(r.accepting);
  return j;
}

ordered_json valuation_to_json(const Valuation& v, const FiniteMonoid& m) {
  ordered_json out = ordered_json::object();
  for (const auto& [var, value] : v)
    out["x" + std::to_string(var)] =
        m.has_names() ? ordered_json(m.element_name(value)) : ordered_json(value);
  return out;
}

ordered_json depth_report_to_json(const DepthReport& report, const FiniteMonoid& m) {
  ordered_json j;
  j["in_Ap"] = report.in_ap;
  j["in_DA"] = report.in_da;
  j["depth"] = report.depth ? ordered_json(*report.depth) : ordered_json(nullptr);
  j["generator_count"] = report.generator_count;
  ordered_json counterexamples = ordered_json::object();
  if (report.ap_counterexample)
    counterexamples["Ap"] = valuation_to_json(*report.ap_counterexample, m);
  if (report.da_counterexample)
    counterexamples["DA"] = valuation_to_json(*report.da_counterexample, m);
  for (const LevelVerdict& level : report.levels)
    if (!level.holds && level.counterexample)
      counterexamples["level_" + std::to_string(level.level)] =
          valuation_to_json(*level.counterexample, m);
  j["counterexamples"] = std::move(counterexamples);
  return j;
}

ordered_json block_product_to_json(const BlockProductVerdict& verdict,
                                   const FiniteMonoid&) {
  ordered_json j;
  switch (verdict.outcome) {
    case BlockProductVerdict::Outcome::proved_member:
      j["outcome"] = "proved_member";
      break;
    case BlockProductVerdict::Outcome::proved_non_member:
      j["outcome"] = "proved_non_member";
      break;
    case BlockProductVerdict::Outcome::infeasible:
      j["outcome"] = "infeasible";
      break;
  }
  j["witness_k"] = verdict.witness_k ? ordered_json(*verdict.witness_k)
                                     : ordered_json(nullptr);
  j["k_bound"] = verdict.k_bound;
  j["k_complete"] = verdict.k_complete;
  j["reason"] = verdict.reason.empty() ? ordered_json(nullptr)
                                       : ordered_json(verdict.reason);
  ordered_json per_k = ordered_json::array();
  for (const KSummary& summary : verdict.per_k) {
    ordered_json s;
    s["k"] = summary.k;
    s["quotient_size"] = summary.quotient_size;
    s["objects"] = summary.objects;
    s["all_pass"] = summary.all_pass;
    if (summary.failure) {
      ordered_json f;
      f["object"] = object_json(summary.failure->object);
      f["base_size"] = summary.failure->base_size;
      f["identity"] = summary.failure->identity;
      f["counterexample"] =
          summary.failure->counterexample
              ? named_valuation_json(*summary.failure->counterexample,
                                     summary.failure->base_names)
              : ordered_json(nullptr);
      s["failure"] = std::move(f);
    } else {
      s["failure"] = nullptr;
    }
    per_k.push_back(std::move(s));
  }
  j["per_k"] = std::move(per_k);
  return j;
}

ordered_json classify_report_to_json(const ClassifyReport& report,
                                     const FiniteMonoid& m) {
  ordered_json j;
  j["language"] = report.language;
  j["monoid_size"] = report.monoid_size;
  ordered_json varieties;
  varieties["J1"] = report.varieties.j1;
  varieties["J"] = report.varieties.j;
  varieties["DA"] = report.varieties.da;
  varieties["Ap"] = report.varieties.ap;
  varieties["J_structural"] = report.varieties.j_structural;
  varieties["DA_structural"] = report.varieties.da_structural;
  j["varieties"] = std::move(varieties);
  ordered_json depth = depth_report_to_json(report.depth, m);
  j["depth"] = depth["depth"];
  j["generator_count"] = depth["generator_count"];
  j["counterexamples"] = depth["counterexamples"];
  j["block_product"] = report.block_product
                           ? block_product_to_json(*report.block_product, m)
                           : ordered_json(nullptr);
  ordered_json budgets;
  budgets["valuation"] = report.options.valuation_budget;
  budgets["quotient"] = report.options.quotient_budget;
  j["budgets"] = std::move(budgets);
  return j;
}

ordered_json kernel_to_json(const KernelCategory& kc, const PairClosure& pc) {
  ordered_json j;
  j["m_size"] = pc.m().size();
  j["quotient_size"] = kc.n_size;
  j["pair_count"] = pc.size();

  ordered_json pairs = ordered_json::array();
  for (int i = 0; i < pc.size(); ++i) {
    ordered_json p;
    p["m"] = pc.m_of(i);
    p["n"] = pc.n_of(i);
    p["witness"] = pc.witness(i);
    pairs.push_back(std::move(p));
  }
  j["pairs"] = std::move(pairs);

  ordered_json objects = ordered_json::array();
  for (int n1 = 0; n1 < kc.n_size; ++n1)
    for (int n2 = 0; n2 < kc.n_size; ++n2) {
      const BaseMonoid& base = kc.bases[n1 * kc.n_size + n2];
      ordered_json o;
      o["object"] = object_json(base.at);
      if (pc.n().has_names())
        o["object_names"] = ordered_json::array(
            {pc.n().element_name(n1), pc.n().element_name(n2)});
      o["base_monoid"] = monoid_to_json(base.monoid);
      o["representative_witnesses"] = base.representative_witness;
      objects.push_back(std::move(o));
    }
  j["objects"] = std::move(objects);

  ordered_json arrows = ordered_json::array();
  for (const ArrowClasses& a : kc.arrows) {
    ordered_json entry;
    entry["src"] = object_json(a.src);
    entry["tgt"] = object_json(a.tgt);
    entry["count"] = a.count();
    entry["witnesses"] = a.representative_witness;
    arrows.push_back(std::move(entry));
  }
  j["arrows"] = std::move(arrows);
  return j;
}

std::string dump_document(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace fo2
