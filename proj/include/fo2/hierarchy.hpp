#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fo2/kernel.hpp"
#include "fo2/language.hpp"
#include "fo2/simon.hpp"
#include "fo2/terms.hpp"

namespace fo2 {

struct LevelVerdict {
  int level;
  bool holds;
  std::optional<Valuation> counterexample;
};

/// Result of the identity route: aperiodicity, DA membership and, inside
/// DA, the least n with u_n = v_n. The per-level verdicts are monotone and
/// the depth never exceeds the generator count.
struct DepthReport {
  bool in_ap = false;
  bool in_da = false;
  std::optional<int> depth;
  int generator_count = 0;
  std::vector<LevelVerdict> levels;
  std::optional<Valuation> ap_counterexample;
  std::optional<Valuation> da_counterexample;
};

/// Requires a surjective presenting morphism. Throws BudgetExceededError
/// from the underlying identity checks.
DepthReport alternation_depth(const RecognizedLanguage& r,
                              std::uint64_t valuation_budget = kDefaultValuationBudget);

/// Identity set for the inner variety of a block-product query: either a
/// named tag or the level variety V_n = (u_n = v_n) plus aperiodicity.
std::vector<Identity> level_variety_identities(int n);

struct BaseFailure {
  KernelObject object;
  int base_size = 0;
  std::string identity;
  std::optional<Valuation> counterexample;
  std::vector<std::string> base_names;  // for rendering the counterexample
};

struct KSummary {
  int k = 0;
  int quotient_size = 0;
  int objects = 0;
  bool all_pass = false;
  std::optional<BaseFailure> failure;
};

struct BlockProductVerdict {
  enum class Outcome { proved_member, proved_non_member, infeasible };
  Outcome outcome = Outcome::infeasible;
  std::optional<int> witness_k;
  std::string reason;        // set for infeasible outcomes
  long long k_bound = 0;     // |M| (|A|^2 + |A|) / 2
  long long k_complete = 0;  // the strict bound k_bound + 1 actually used
  std::vector<KSummary> per_k;
};

struct BlockProductOptions {
  /// Increasing candidate subword bounds; empty means 0,1,2,3 and then the
  /// completeness bound when it is not already covered.
  std::vector<int> k_schedule;
  /// Cap on attempted k (negative = uncapped). Schedules beyond it are
  /// truncated, which can only surrender completeness, never soundness.
  int k_max = -1;
  int quotient_budget = kDefaultQuotientBudget;
  std::uint64_t valuation_budget = kDefaultValuationBudget;
  /// Cap on |N|^2 per attempted kernel.
  long long object_budget = 40'000;
};

/// The kernel route: for each scheduled k test every base monoid of the
/// kernel over A*/~k against the inner identities. An all-pass proves
/// membership of M in V ** J; a failure at or beyond the completeness bound
/// proves non-membership; anything else is honestly infeasible.
BlockProductVerdict decide_block_product(const RecognizedLanguage& r,
                                         const std::vector<Identity>& inner_variety,
                                         const BlockProductOptions& options = {});

struct VarietyFlags {
  bool j1 = false, j = false, da = false, ap = false;
  bool j_structural = false, da_structural = false;
};

struct ClassifyOptions {
  std::string alphabet;  // declared alphabet for the regex route
  std::uint64_t valuation_budget = kDefaultValuationBudget;
  int quotient_budget = kDefaultQuotientBudget;
  /// Also run the kernel route against V_{depth-1} when depth >= 2.
  bool cross_check = false;
  int k_max = 3;  // cap for the cross-check schedule
};

struct ClassifyReport {
  std::string language;
  int monoid_size = 0;
  FiniteMonoid monoid;
  VarietyFlags varieties;
  DepthReport depth;
  std::optional<BlockProductVerdict> block_product;
  ClassifyOptions options;
};

ClassifyReport classify(const Dfa& language, const std::string& echo,
                        const ClassifyOptions& options = {});
ClassifyReport classify_regex(const std::string& regex,
                              const ClassifyOptions& options = {});

}  // namespace fo2
