#include "fo2/hierarchy.hpp"

#include <algorithm>
#include <limits>

namespace fo2 {

DepthReport alternation_depth(const RecognizedLanguage& r,
                              std::uint64_t valuation_budget) {
  if (!is_surjective(r.morphism))
    throw Error("alternation_depth: presenting morphism must be surjective");
  const FiniteMonoid& m = r.monoid();

  DepthReport report;
  report.generator_count = static_cast<int>(r.morphism.alphabet().size());

  const Identity& ap = variety_identities(VarietyTag::Ap).front();
  IdentityCheck ap_check = check_identity(m, ap, valuation_budget);
  report.in_ap = ap_check.holds;
  report.ap_counterexample = ap_check.counterexample;

  report.in_da = true;
  for (const Identity& id : variety_identities(VarietyTag::DA)) {
    IdentityCheck da_check = check_identity(m, id, valuation_budget);
    if (!da_check.holds) {
      report.in_da = false;
      report.da_counterexample = da_check.counterexample;
      break;
    }
  }
  if (!report.in_da) return report;

  for (int level = 1; level <= report.generator_count; ++level) {
    IdentityCheck check = check_identity(m, hierarchy_identity(level), valuation_budget);
    report.levels.push_back({level, check.holds, check.counterexample});
    if (check.holds) {
      report.depth = level;
      break;
    }
  }
  if (!report.depth)
    // A DA monoid on n generators satisfies u_n = v_n; reaching this line
    // would mean the collapse bound failed, i.e. a bug.
    throw IllDefinedProductError("depth search exceeded the generator count");
  return report;
}

std::vector<Identity> level_variety_identities(int n) {
  return {hierarchy_identity(n), variety_identities(VarietyTag::Ap).front()};
}

namespace {

std::vector<int> schedule_for(const BlockProductOptions& options, long long k_complete) {
  std::vector<int> schedule = options.k_schedule;
  if (schedule.empty()) {
    for (int k = 0; k <= 3 && k < k_complete; ++k) schedule.push_back(k);
    if (k_complete <= std::numeric_limits<int>::max())
      schedule.push_back(static_cast<int>(k_complete));
  }
  std::sort(schedule.begin(), schedule.end());
  schedule.erase(std::unique(schedule.begin(), schedule.end()), schedule.end());
  if (options.k_max >= 0)
    schedule.erase(std::remove_if(schedule.begin(), schedule.end(),
                                  [&](int k) { return k > options.k_max; }),
                   schedule.end());
  return schedule;
}

}  // namespace

BlockProductVerdict decide_block_product(const RecognizedLanguage& r,
                                         const std::vector<Identity>& inner_variety,
                                         const BlockProductOptions& options) {
  if (!is_surjective(r.morphism))
    throw Error("decide_block_product: presenting morphism must be surjective");

  const FiniteMonoid& m = r.monoid();
  const long long letters = static_cast<long long>(r.morphism.alphabet().size());

  BlockProductVerdict verdict;
  verdict.k_bound = static_cast<long long>(m.size()) * (letters * letters + letters) / 2;
  verdict.k_complete = verdict.k_bound + 1;

  const std::vector<int> schedule = schedule_for(options, verdict.k_complete);
  if (schedule.empty()) {
    verdict.outcome = BlockProductVerdict::Outcome::infeasible;
    verdict.reason = "empty k schedule";
    return verdict;
  }

  for (int k : schedule) {
    KSummary summary;
    summary.k = k;
    try {
      Morphism psi = simon_quotient(r.morphism.alphabet(), k, options.quotient_budget);
      const int n_size = psi.target().size();
      summary.quotient_size = n_size;
      summary.objects = n_size * n_size;
      if (static_cast<long long>(n_size) * n_size > options.object_budget)
        throw BudgetExceededError("kernel object budget exceeded",
                                  static_cast<std::uint64_t>(n_size) * n_size,
                                  static_cast<std::uint64_t>(options.object_budget));

      PairClosure pc(r.morphism, psi);
      summary.all_pass = true;
      for (int P = 0; P < n_size && summary.all_pass; ++P)
        for (int S = 0; S < n_size && summary.all_pass; ++S) {
          BaseMonoid base = base_monoid(pc, P, S);
          for (const Identity& id : inner_variety) {
            IdentityCheck check =
                check_identity(base.monoid, id, options.valuation_budget);
            if (!check.holds) {
              summary.all_pass = false;
              summary.failure =
                  BaseFailure{{P, S}, base.monoid.size(), id.to_string(),
                              check.counterexample, base.monoid.names()};
              break;
            }
          }
        }
      verdict.per_k.push_back(summary);

      if (summary.all_pass) {
        verdict.outcome = BlockProductVerdict::Outcome::proved_member;
        verdict.witness_k = k;
        return verdict;
      }
      if (k >= verdict.k_complete) {
        verdict.outcome = BlockProductVerdict::Outcome::proved_non_member;
        return verdict;
      }
    } catch (const BudgetExceededError& e) {
      // Larger k only costs more; report what was reached and stop.
      verdict.outcome = BlockProductVerdict::Outcome::infeasible;
      verdict.reason = "budget exceeded at k=" + std::to_string(k) + ": " + e.what();
      return verdict;
    }
  }

  verdict.outcome = BlockProductVerdict::Outcome::infeasible;
  verdict.reason = "schedule exhausted below the completeness bound k=" +
                   std::to_string(verdict.k_complete);
  return verdict;
}

ClassifyReport classify(const Dfa& language, const std::string& echo,
                        const ClassifyOptions& options) {
  ClassifyReport report;
  report.language = echo;
  report.options = options;

  RecognizedLanguage r = syntactic_monoid(language);
  const FiniteMonoid& m = r.monoid();
  report.monoid_size = m.size();
  report.monoid = m;

  report.varieties.j1 = variety_membership(m, VarietyTag::J1, options.valuation_budget);
  report.varieties.j = variety_membership(m, VarietyTag::J, options.valuation_budget);
  report.varieties.da = variety_membership(m, VarietyTag::DA, options.valuation_budget);
  report.varieties.ap = variety_membership(m, VarietyTag::Ap, options.valuation_budget);
  report.varieties.j_structural = structural_j_check(m);
  report.varieties.da_structural = structural_da_check(m);

  report.depth = alternation_depth(r, options.valuation_budget);

  if (options.cross_check && report.depth.depth && *report.depth.depth >= 2) {
    BlockProductOptions bp;
    bp.k_max = options.k_max;
    bp.quotient_budget = options.quotient_budget;
    bp.valuation_budget = options.valuation_budget;
    report.block_product = decide_block_product(
        r, level_variety_identities(*report.depth.depth - 1), bp);
  }
  return report;
}

ClassifyReport classify_regex(const std::string& regex, const ClassifyOptions& options) {
  return classify(compile_language(regex, options.alphabet), regex, options);
}

}  // namespace fo2
