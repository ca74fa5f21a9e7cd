// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Everything here is pinned — no tolerance is deferred.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "corpus.hpp"
#include "fo2/hierarchy.hpp"
#include "fo2/json_io.hpp"
#include "fo2/oracles.hpp"

using namespace fo2;

namespace {

struct CriterionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw CriterionFailure(message);
}

std::string presentation_key(const RecognizedLanguage& r) {
  std::ostringstream key;
  key << r.morphism.alphabet() << '|';
  for (int image : r.morphism.letter_images()) key << image << ',';
  key << '|' << r.monoid().size() << '|' << r.monoid().identity() << '|';
  for (int v : r.monoid().flat_table()) key << v << ',';
  return key.str();
}

struct Suite {
  std::vector<corpus::Entry> two_letter;
  std::vector<corpus::Entry> unary;
  std::vector<FiniteMonoid> curated;

  std::map<std::string, DepthReport> depth_cache;

  const DepthReport& depth_of(const RecognizedLanguage& r) {
    auto [it, fresh] = depth_cache.try_emplace(presentation_key(r));
    if (fresh) it->second = alternation_depth(r);
    return it->second;
  }

  std::vector<const FiniteMonoid*> all_monoids() const {
    std::vector<const FiniteMonoid*> out;
    for (const auto& e : two_letter) out.push_back(&e.lang.monoid());
    for (const auto& e : unary) out.push_back(&e.lang.monoid());
    for (const auto& m : curated) out.push_back(&m);
    return out;
  }
};

FiniteMonoid curated_u1() {
  return FiniteMonoid::from_table({{0, 1}, {1, 1}}, 0, {"1", "0"});
}
FiniteMonoid curated_z3() {
  return FiniteMonoid::from_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, 0);
}

// ---------------------------------------------------------------------
// 1. Identity-based J and DA checks agree exactly with the structural
//    characterizations on the whole corpus.
void criterion_variety_equivalence(Suite& suite, std::ostream& detail) {
  std::size_t corpus_size =
      suite.two_letter.size() + suite.unary.size() + suite.curated.size();
  require(corpus_size >= 200, "corpus has fewer than 200 monoids: " +
                                  std::to_string(corpus_size));
  std::map<std::string, bool> done;
  long long checked = 0;
  for (const FiniteMonoid* m : suite.all_monoids()) {
    bool j_identity = variety_membership(*m, VarietyTag::J);
    bool da_identity = variety_membership(*m, VarietyTag::DA);
    require(j_identity == structural_j_check(*m),
            "J identity/structural mismatch on a monoid of size " +
                std::to_string(m->size()));
    require(da_identity == structural_da_check(*m),
            "DA identity/structural mismatch on a monoid of size " +
                std::to_string(m->size()));
    ++checked;
  }
  detail << corpus_size << " monoids (" << suite.two_letter.size() << "+"
         << suite.unary.size() << "+" << suite.curated.size() << "), "
         << checked << " comparisons";
}

// ---------------------------------------------------------------------
// 2. Depth anchors with exact counterexamples.
void criterion_depth_anchors(Suite& suite, std::ostream& detail) {
  DepthReport trivial = suite.depth_of(syntactic_monoid(compile_language("(a|b)*")));
  require(trivial.depth == 1, "trivial monoid must have depth 1");

  DepthReport contains_a =
      suite.depth_of(syntactic_monoid(compile_language("(a|b)*a(a|b)*")));
  require(contains_a.depth == 1, "U1 must have depth 1");

  RecognizedLanguage first_a = syntactic_monoid(compile_language("a(a|b)*"));
  DepthReport fa = suite.depth_of(first_a);
  require(fa.in_da && fa.depth == 2, "aA* monoid must have depth 2");
  require(fa.levels.size() == 2 && !fa.levels[0].holds,
          "aA*: level 1 must fail");
  Valuation expected{{1, 1}, {2, 2}};  // x1 -> alpha, x2 -> beta
  require(fa.levels[0].counterexample == expected,
          "aA*: level-1 counterexample must be x1->alpha, x2->beta");
  require(first_a.monoid().element_name(1) == "a" &&
              first_a.monoid().element_name(2) == "b",
          "aA*: alpha and beta must be the letter images");

  DepthReport ab_star =
      suite.depth_of(syntactic_monoid(compile_language("(ab)*", "ab")));
  require(ab_star.in_ap, "(ab)* must be aperiodic");
  require(!ab_star.in_da, "(ab)* must not be in DA");
  require(!ab_star.depth.has_value(), "(ab)* must have no depth");
  detail << "4 anchors";
}

// ---------------------------------------------------------------------
// 3. Monotone level verdicts, collapse bound, unary completeness.
void criterion_monotone_collapse(Suite& suite, std::ostream& detail) {
  int da_count = 0;
  auto check_entry = [&](const corpus::Entry& entry) {
    const DepthReport& report = suite.depth_of(entry.lang);
    if (!report.in_da) return;
    ++da_count;
    require(report.depth.has_value(), entry.name + ": DA monoid without depth");
    int alphabet_size = static_cast<int>(entry.lang.morphism.alphabet().size());
    require(*report.depth <= alphabet_size,
            entry.name + ": depth exceeds the alphabet size");
    bool seen_hold = false;
    for (const LevelVerdict& level : report.levels) {
      require(!seen_hold || level.holds, entry.name + ": verdict vector not monotone");
      if (level.holds) seen_hold = true;
    }
    require(seen_hold, entry.name + ": no level holds");
  };
  for (const auto& entry : suite.two_letter) check_entry(entry);
  for (const auto& entry : suite.unary) check_entry(entry);

  for (int threshold = 0; threshold <= 9; ++threshold) {
    RecognizedLanguage lang = corpus::unary_threshold_language(threshold);
    require(lang.monoid().size() == threshold + 1,
            "threshold language has the wrong monoid size");
    const DepthReport& report = suite.depth_of(lang);
    require(report.depth == 1,
            "one-generated aperiodic monoid of size " +
                std::to_string(threshold + 1) + " must have depth 1");
  }
  detail << da_count << " DA corpus monoids, 10 unary thresholds";
}

// ---------------------------------------------------------------------
// 4. Simon quotient sizes and J membership.
void criterion_simon_quotients(Suite&, std::ostream& detail) {
  for (int k = 0; k <= 10; ++k) {
    Morphism psi = simon_quotient("a", k);
    require(psi.target().size() == k + 1, "|a*/~k| must be k+1");
    require(variety_membership(psi.target(), VarietyTag::J),
            "unary quotient must be J-trivial");
  }
  Morphism ab1 = simon_quotient("ab", 1);
  require(ab1.target().size() == 4, "|{a,b}*/~1| must be 4");
  require(variety_membership(ab1.target(), VarietyTag::J), "~1 quotient not in J");

  Morphism ab2 = simon_quotient("ab", 2);
  slow::SimonClassCount brute = slow::brute_simon_classes("ab", 2, 8);
  require(brute.stabilized, "brute class count did not stabilize at length 8");
  require(brute.count == ab2.target().size(),
          "|{a,b}*/~2| must equal the stabilized brute count");
  require(variety_membership(ab2.target(), VarietyTag::J), "~2 quotient not in J");
  detail << "unary k<=10, |{a,b}*/~2| = " << ab2.target().size();
}

// ---------------------------------------------------------------------
// 5. Kernel soundness on the tiny grid.
void criterion_kernel_soundness(Suite& suite, std::ostream& detail) {
  // Distinct presentations with |M| <= 4 over {a,b}.
  std::map<std::string, const corpus::Entry*> grid;
  for (const auto& entry : suite.two_letter)
    if (entry.lang.monoid().size() <= 4)
      grid.emplace(presentation_key(entry.lang), &entry);

  long long compared = 0;
  for (const auto& [key, entry] : grid) {
    const RecognizedLanguage& r = entry->lang;

    // N trivial: the single base monoid is M, canonical tables equal.
    Morphism trivial_psi("ab", FiniteMonoid(), {0, 0});
    PairClosure trivial_pc(r.morphism, trivial_psi);
    BaseMonoid whole = base_monoid(trivial_pc, 0, 0);
    require(whole.monoid == r.monoid(), "N-trivial base must equal M");
    require(whole.monoid.names() == r.monoid().names(),
            "N-trivial base names must match");

    for (int k = 0; k <= 2; ++k) {
      Morphism psi = simon_quotient("ab", k);
      PairClosure pc(r.morphism, psi);
      const FiniteMonoid& n = psi.target();
      for (int s1 = 0; s1 < n.size(); ++s1)
        for (int s2 = 0; s2 < n.size(); ++s2)
          for (int t1 = 0; t1 < n.size(); ++t1)
            for (int t2 = 0; t2 < n.size(); ++t2) {
              KernelObject src{s1, s2}, tgt{t1, t2};
              std::vector<int> ms;
              std::vector<std::string> ws;
              std::vector<char> seen(r.monoid().size(), 0);
              for (int i = 0; i < pc.size(); ++i) {
                int en = pc.n_of(i);
                if (n.mul(s1, en) != t1 || n.mul(en, t2) != s2) continue;
                if (seen[pc.m_of(i)]) continue;
                seen[pc.m_of(i)] = 1;
                ms.push_back(pc.m_of(i));
                ws.push_back(pc.witness(i));
              }
              for (std::size_t i = 0; i < ms.size(); ++i)
                for (std::size_t j = i; j < ms.size(); ++j) {
                  bool fast = arrows_equivalent(pc, src, tgt, ms[i], ms[j]);
                  bool brute =
                      slow::brute_arrow_equivalence(pc, src, tgt, ws[i], ws[j], 5);
                  require(fast == brute,
                          "arrow equivalence mismatch at k=" + std::to_string(k));
                  ++compared;
                }
            }
    }
  }
  detail << grid.size() << " presentations, " << compared << " arrow pairs";
}

// ---------------------------------------------------------------------
// 6. Local-global cross-validation on every depth-2 corpus language.
void criterion_local_global(Suite& suite, std::ostream& detail) {
  std::map<std::string, BlockProductVerdict> verdict_cache;
  int depth2 = 0;
  for (const auto& entry : suite.two_letter) {
    const DepthReport& report = suite.depth_of(entry.lang);
    if (!report.depth || *report.depth < 2) continue;
    ++depth2;
    int n = *report.depth;
    require(n == 2, entry.name + ": two-letter corpus depth must be at most 2");

    auto [it, fresh] = verdict_cache.try_emplace(presentation_key(entry.lang));
    if (fresh) {
      BlockProductOptions options;
      options.k_schedule = {1, 2, 3};
      it->second =
          decide_block_product(entry.lang, level_variety_identities(n - 1), options);
    }
    const BlockProductVerdict& verdict = it->second;
    if (verdict.outcome == BlockProductVerdict::Outcome::infeasible)
      throw CriterionFailure(entry.name + ": infeasible kernel run: " + verdict.reason);
    require(verdict.outcome == BlockProductVerdict::Outcome::proved_member,
            entry.name + ": kernel route failed to prove membership");
    require(verdict.witness_k && *verdict.witness_k <= 3,
            entry.name + ": membership witness k must be at most 3");
    // Converse direction: a proved member must have depth <= n.
    require(report.depth && *report.depth <= n,
            entry.name + ": identity route contradicts the kernel route");
  }
  require(depth2 > 0, "corpus contains no depth-2 languages");
  detail << depth2 << " depth-2 languages, " << verdict_cache.size()
         << " distinct presentations";
}

// ---------------------------------------------------------------------
// 7. Full K-bounded decision on unary aperiodic syntactic monoids.
void criterion_unary_complete(Suite& suite, std::ostream& detail) {
  for (int threshold = 0; threshold <= 5; ++threshold) {
    RecognizedLanguage lang = corpus::unary_threshold_language(threshold);
    int m_size = lang.monoid().size();
    require(m_size == threshold + 1 && m_size <= 6, "unexpected unary monoid size");
    require(variety_membership(lang.monoid(), VarietyTag::Ap),
            "threshold monoid must be aperiodic");

    BlockProductOptions options;
    long long k_complete = m_size + 1;  // |M| (1^2 + 1) / 2 + 1
    options.k_schedule = {static_cast<int>(k_complete)};
    BlockProductVerdict verdict =
        decide_block_product(lang, level_variety_identities(1), options);
    require(verdict.k_complete == k_complete, "completeness bound mismatch");

    const DepthReport& report = suite.depth_of(lang);
    bool identity_member = report.depth && *report.depth <= 2;
    bool kernel_member =
        verdict.outcome == BlockProductVerdict::Outcome::proved_member;
    require(verdict.outcome != BlockProductVerdict::Outcome::infeasible,
            "unary K-bounded run must be feasible");
    require(kernel_member == identity_member,
            "kernel and identity verdicts disagree at size " + std::to_string(m_size));
  }
  detail << "sizes 1..6 at k = |M|+1";
}

// ---------------------------------------------------------------------
// 8. Suffix factorizations on 1000 hypothesis-satisfying instances.
void criterion_factorizations(Suite&, std::ostream& detail) {
  std::mt19937 rng(20250808);
  int spot_checked = 0;
  for (int round = 0; round < 1000; ++round) {
    // Letter content of z, and B inside it.
    std::uniform_int_distribution<int> content_size(1, 3);
    int c_planned = content_size(rng);
    std::string content_letters = std::string("abc").substr(0, c_planned);
    std::uniform_int_distribution<int> b_size(1, c_planned);
    std::string B = content_letters;
    std::shuffle(B.begin(), B.end(), rng);
    B.resize(b_size(rng));
    std::sort(B.begin(), B.end());
    std::uniform_int_distribution<int> q_dist(1, 3);
    int q = q_dist(rng);

    // 18 >= T segments each carrying the full content of z keep every
    // subword of length < 18 extensible by any letter, so z is
    // subword-stable under B at every probe length up to 18.
    std::uniform_int_distribution<int> pad_len(0, 2);
    std::uniform_int_distribution<int> letter(0, c_planned - 1);
    auto pad = [&] {
      std::string out;
      for (int i = pad_len(rng); i > 0; --i)
        out.push_back(content_letters[letter(rng)]);
      return out;
    };
    std::string z = pad();
    for (int block = 0; block < 18; ++block) {
      std::string blk = content_letters;
      std::shuffle(blk.begin(), blk.end(), rng);
      z += blk + pad();
    }

    std::string content(z);
    std::sort(content.begin(), content.end());
    content.erase(std::unique(content.begin(), content.end()), content.end());
    int c = static_cast<int>(content.size());
    int T = q * (c * c + c) / 2;
    require(T <= 18, "probe length out of the enforced range");

    if (T <= 9 && spot_checked < 50) {
      require(slow::subword_stable(z, B, T), "constructed word must be stable");
      ++spot_checked;
    }

    auto found = slow::suffix_factorization(z, B, q);
    require(found.has_value(), "hypothesis-satisfying instance without factorization");
    require(static_cast<int>(found->blocks.size()) == q, "wrong block count");
    std::string rebuilt = found->prefix;
    for (const std::string& block : found->blocks) {
      rebuilt += block;
      std::string bc = block;
      std::sort(bc.begin(), bc.end());
      bc.erase(std::unique(bc.begin(), bc.end()), bc.end());
      require(bc == found->content, "blocks must share one content");
      for (char needed : B)
        require(bc.find(needed) != std::string::npos, "block misses a required letter");
    }
    require(rebuilt == z, "factorization must reconstruct the word");
  }
  detail << "1000 instances, " << spot_checked << " stability spot checks";
}

}  // namespace

int main() {
  Suite suite;
  auto t0 = std::chrono::steady_clock::now();
  suite.two_letter = corpus::all_minimal_languages("ab", 3);
  suite.unary = corpus::all_minimal_languages("a", 4);
  suite.curated = {FiniteMonoid(), curated_u1(), curated_z3(),
                   syntactic_monoid(compile_language("a(a|b)*")).monoid(),
                   syntactic_monoid(compile_language("(ab)*", "ab")).monoid()};
  auto t1 = std::chrono::steady_clock::now();
  std::cout << "corpus: " << suite.two_letter.size() << " two-letter + "
            << suite.unary.size() << " unary languages + " << suite.curated.size()
            << " curated monoids ("
            << std::chrono::duration<double>(t1 - t0).count() << "s)\n";

  struct Criterion {
    int number;
    std::string label;
    std::function<void(Suite&, std::ostream&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "variety-check equivalence (identity vs structural)",
       criterion_variety_equivalence},
      {2, "depth correctness anchors", criterion_depth_anchors},
      {3, "hierarchy monotonicity and collapse", criterion_monotone_collapse},
      {4, "Simon-quotient validation", criterion_simon_quotients},
      {5, "kernel-category soundness vs word oracle", criterion_kernel_soundness},
      {6, "local-global cross-validation at depth 2", criterion_local_global},
      {7, "K-bounded decision on unary alphabets", criterion_unary_complete},
      {8, "suffix factorization on 1000 random instances", criterion_factorizations},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::ostringstream detail;
    try {
      criterion.run(suite, detail);
      auto elapsed =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
      std::cout << "[PASS] " << criterion.number << ". " << criterion.label << " -- "
                << detail.str() << " (" << elapsed.count() << "s)\n";
    } catch (const std::exception& e) {
      auto elapsed =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
      std::cout << "[FAIL] " << criterion.number << ". " << criterion.label << " -- "
                << e.what() << " (" << elapsed.count() << "s)\n";
      ++failures;
    }
  }
  std::cout << (failures == 0 ? "all criteria passed\n"
                              : std::to_string(failures) + " criteria failed\n");
  return failures;
}
