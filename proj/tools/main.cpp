#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "fo2/hierarchy.hpp"
#include "fo2/json_io.hpp"
#include "fo2/oracles.hpp"

namespace {

using fo2::ordered_json;

struct CommonArgs {
  std::string regex;
  std::string dfa_path;
  std::string alphabet;
  std::string format = "json";
  std::uint64_t valuation_budget = fo2::kDefaultValuationBudget;
  int quotient_budget = fo2::kDefaultQuotientBudget;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw fo2::Error("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

ordered_json parse_json_file(const std::string& path) {
  try {
    return ordered_json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw fo2::ParseError(std::string("invalid JSON in ") + path + ": " + e.what(), 1);
  }
}

/// Exactly one input source; returns the compiled DFA and an echo string.
std::pair<fo2::Dfa, std::string> load_language(const CommonArgs& args) {
  if (args.regex.empty() == args.dfa_path.empty())
    throw fo2::Error("exactly one of --regex and --dfa is required");
  if (!args.regex.empty())
    return {fo2::compile_language(args.regex, args.alphabet), args.regex};
  fo2::Dfa d = fo2::dfa_from_json(parse_json_file(args.dfa_path));
  return {fo2::compile_language(d), "dfa:" + args.dfa_path};
}

ordered_json budgets_json(const CommonArgs& args) {
  ordered_json j;
  j["valuation"] = args.valuation_budget;
  j["quotient"] = args.quotient_budget;
  return j;
}

void emit(const CommonArgs& args, const ordered_json& document,
          const std::string& text) {
  if (args.format == "json")
    std::cout << fo2::dump_document(document);
  else
    std::cout << text;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string render_valuation(const ordered_json& v) {
  std::string out;
  for (const auto& [key, value] : v.items()) {
    if (!out.empty()) out += ' ';
    out += key + "=" +
           (value.is_string() ? value.get<std::string>() : value.dump());
  }
  return out;
}

std::string monoid_text(const fo2::FiniteMonoid& m) {
  std::ostringstream out;
  out << "size: " << m.size() << "\n";
  for (int a = 0; a < m.size(); ++a) {
    out << (m.has_names() ? m.element_name(a) : std::to_string(a)) << ":";
    for (int b = 0; b < m.size(); ++b) out << ' ' << m.mul(a, b);
    out << "\n";
  }
  return out.str();
}

std::vector<fo2::Identity> parse_variety(const std::string& name) {
  if (auto tag = fo2::variety_tag_from_name(name))
    return fo2::variety_identities(*tag);
  if (name.rfind("Vn:", 0) == 0) {
    int level = 0;
    try {
      std::size_t used = 0;
      level = std::stoi(name.substr(3), &used);
      if (used != name.size() - 3) level = 0;
    } catch (const std::exception&) {
      level = 0;
    }
    if (level < 1)
      throw fo2::Error("invalid hierarchy level in variety tag: " + name);
    return fo2::level_variety_identities(level);
  }
  throw fo2::Error("unknown variety tag: " + name +
                   " (expected J1, J, DA, Ap or Vn:<n>)");
}

int cmd_classify(const CommonArgs& args, bool cross_check, int k_max) {
  auto [dfa, echo] = load_language(args);
  fo2::ClassifyOptions options;
  options.alphabet = args.alphabet;
  options.valuation_budget = args.valuation_budget;
  options.quotient_budget = args.quotient_budget;
  options.cross_check = cross_check;
  options.k_max = k_max;
  fo2::ClassifyReport report = fo2::classify(dfa, echo, options);

  ordered_json document = fo2::classify_report_to_json(report, report.monoid);
  std::ostringstream text;
  text << "language: " << report.language << "\n"
       << "monoid size: " << report.monoid_size << "\n"
       << "varieties: J1=" << yesno(report.varieties.j1)
       << " J=" << yesno(report.varieties.j) << " DA=" << yesno(report.varieties.da)
       << " Ap=" << yesno(report.varieties.ap)
       << " | structural J=" << yesno(report.varieties.j_structural)
       << " DA=" << yesno(report.varieties.da_structural) << "\n";
  if (report.depth.depth)
    text << "depth: " << *report.depth.depth
         << " (generators: " << report.depth.generator_count << ")\n";
  else
    text << "depth: undefined (not in DA)\n";
  for (const auto& [key, value] : document["counterexamples"].items())
    text << "counterexample " << key << ": " << render_valuation(value) << "\n";
  if (report.block_product) {
    text << "block product: " << document["block_product"]["outcome"].get<std::string>();
    if (report.block_product->witness_k)
      text << " (k=" << *report.block_product->witness_k << ")";
    text << "\n";
  }
  emit(args, document, text.str());
  return 0;
}

int cmd_monoid_check(const CommonArgs& args, const std::string& table_path) {
  fo2::FiniteMonoid m = fo2::monoid_from_json(parse_json_file(table_path));
  ordered_json document;
  document["valid"] = true;
  document["size"] = m.size();
  document["identity"] = m.identity();
  ordered_json varieties;
  varieties["J1"] = fo2::variety_membership(m, fo2::VarietyTag::J1, args.valuation_budget);
  varieties["J"] = fo2::variety_membership(m, fo2::VarietyTag::J, args.valuation_budget);
  varieties["DA"] = fo2::variety_membership(m, fo2::VarietyTag::DA, args.valuation_budget);
  varieties["Ap"] = fo2::variety_membership(m, fo2::VarietyTag::Ap, args.valuation_budget);
  varieties["J_structural"] = fo2::structural_j_check(m);
  varieties["DA_structural"] = fo2::structural_da_check(m);
  document["varieties"] = varieties;
  document["budgets"] = budgets_json(args);

  std::ostringstream text;
  text << "valid: yes\n"
       << monoid_text(m) << "varieties: J1=" << yesno(varieties["J1"].get<bool>())
       << " J=" << yesno(varieties["J"].get<bool>())
       << " DA=" << yesno(varieties["DA"].get<bool>())
       << " Ap=" << yesno(varieties["Ap"].get<bool>()) << "\n";
  emit(args, document, text.str());
  return 0;
}

int cmd_monoid_identity(const CommonArgs& args, const std::string& table_path,
                        const std::string& identity_text) {
  fo2::FiniteMonoid m = fo2::monoid_from_json(parse_json_file(table_path));
  fo2::Identity id = fo2::parse_identity(identity_text);
  fo2::IdentityCheck check = fo2::check_identity(m, id, args.valuation_budget);

  ordered_json document;
  document["identity"] = id.to_string();
  document["holds"] = check.holds;
  document["counterexample"] = check.counterexample
                                   ? fo2::valuation_to_json(*check.counterexample, m)
                                   : ordered_json(nullptr);
  document["budgets"] = budgets_json(args);

  std::ostringstream text;
  text << "identity: " << id.to_string() << "\n"
       << "holds: " << yesno(check.holds) << "\n";
  if (check.counterexample)
    text << "counterexample: "
         << render_valuation(document["counterexample"]) << "\n";
  emit(args, document, text.str());
  return 0;
}

int cmd_lang_syntactic(const CommonArgs& args) {
  auto [dfa, echo] = load_language(args);
  fo2::RecognizedLanguage r = fo2::syntactic_monoid(dfa);
  ordered_json document;
  document["language"] = echo;
  document["presentation"] = fo2::recognized_language_to_json(r);
  document["budgets"] = budgets_json(args);

  std::ostringstream text;
  text << "language: " << echo << "\n" << monoid_text(r.monoid());
  text << "letter images:";
  for (std::size_t i = 0; i < r.morphism.alphabet().size(); ++i)
    text << ' ' << r.morphism.alphabet()[i] << "->" << r.morphism.letter_images()[i];
  text << "\naccepting:";
  for (int e : r.accepting.to_indices()) text << ' ' << e;
  text << "\n";
  emit(args, document, text.str());
  return 0;
}

int cmd_simon_quotient(const CommonArgs& args, int k) {
  fo2::Morphism psi = fo2::simon_quotient(args.alphabet, k, args.quotient_budget);
  ordered_json document = fo2::monoid_to_json(psi.target());
  emit(args, document, monoid_text(psi.target()));
  return 0;
}

int cmd_kernel_build(const CommonArgs& args, int k) {
  auto [dfa, echo] = load_language(args);
  fo2::RecognizedLanguage r = fo2::syntactic_monoid(dfa);
  fo2::Morphism psi =
      fo2::simon_quotient(r.morphism.alphabet(), k, args.quotient_budget);
  fo2::PairClosure pc(r.morphism, psi);
  fo2::KernelCategory category = fo2::kernel_category(pc);

  ordered_json document;
  document["language"] = echo;
  document["k"] = k;
  document["kernel"] = fo2::kernel_to_json(category, pc);
  document["budgets"] = budgets_json(args);

  std::ostringstream text;
  text << "language: " << echo << "\nk: " << k
       << "\nquotient size: " << category.n_size
       << "\nobjects: " << category.bases.size()
       << "\nnonempty hom sets: " << category.arrows.size() << "\n";
  emit(args, document, text.str());
  return 0;
}

int cmd_kernel_decide(const CommonArgs& args, const std::string& variety, int k_max) {
  auto [dfa, echo] = load_language(args);
  fo2::RecognizedLanguage r = fo2::syntactic_monoid(dfa);
  std::vector<fo2::Identity> inner = parse_variety(variety);

  fo2::BlockProductOptions options;
  options.k_max = k_max;
  options.quotient_budget = args.quotient_budget;
  options.valuation_budget = args.valuation_budget;
  fo2::BlockProductVerdict verdict = fo2::decide_block_product(r, inner, options);

  ordered_json document;
  document["language"] = echo;
  document["variety"] = variety;
  document["verdict"] = fo2::block_product_to_json(verdict, r.monoid());
  document["budgets"] = budgets_json(args);

  std::ostringstream text;
  text << "language: " << echo << "\nvariety: " << variety << "\noutcome: "
       << document["verdict"]["outcome"].get<std::string>();
  if (verdict.witness_k) text << " (k=" << *verdict.witness_k << ")";
  text << "\nK: bound=" << verdict.k_bound << " strict=" << verdict.k_complete << "\n";
  if (!verdict.reason.empty()) text << "reason: " << verdict.reason << "\n";
  emit(args, document, text.str());
  return verdict.outcome == fo2::BlockProductVerdict::Outcome::infeasible ? 3 : 0;
}

void add_common(CLI::App* cmd, CommonArgs& args, bool with_language,
                bool with_alphabet = true) {
  if (with_language) {
    cmd->add_option("--regex", args.regex, "inline regular expression");
    cmd->add_option("--dfa", args.dfa_path, "path to a DFA JSON file");
  }
  if (with_alphabet)
    cmd->add_option("--alphabet", args.alphabet, "declared alphabet letters");
  cmd->add_option("--format", args.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--valuation-budget", args.valuation_budget,
                  "cap on identity-check valuations");
  cmd->add_option("--quotient-budget", args.quotient_budget,
                  "cap on Simon quotient size");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-monoid classification of regular languages"};
  app.require_subcommand(1);

  CommonArgs args;
  bool cross_check = false;
  int classify_k_max = 3;
  int decide_k_max = -1;
  int k = 0;
  std::string table_path, identity_text, variety;

  CLI::App* classify = app.add_subcommand("classify",
                                          "variety flags and FO2 alternation depth");
  add_common(classify, args, true);
  classify->add_flag("--cross-check", cross_check,
                     "also run the kernel decision against the depth verdict");
  classify->add_option("--k-max", classify_k_max, "largest k for the cross check");

  CLI::App* monoid = app.add_subcommand("monoid", "monoid table operations");
  monoid->require_subcommand(1);
  CLI::App* monoid_check = monoid->add_subcommand("check", "validate and classify a table");
  add_common(monoid_check, args, false, false);
  monoid_check->add_option("--table", table_path, "monoid JSON file")->required();
  CLI::App* monoid_identity =
      monoid->add_subcommand("identity", "check an omega-term identity");
  add_common(monoid_identity, args, false, false);
  monoid_identity->add_option("--table", table_path, "monoid JSON file")->required();
  monoid_identity->add_option("--id", identity_text, "identity, e.g. \"(x1 x2)^w = (x2 x1)^w\"")
      ->required();

  CLI::App* lang = app.add_subcommand("lang", "language front end");
  lang->require_subcommand(1);
  CLI::App* lang_syntactic =
      lang->add_subcommand("syntactic", "syntactic monoid with recognizing morphism");
  add_common(lang_syntactic, args, true);

  CLI::App* simon = app.add_subcommand("simon", "Simon congruence quotients");
  simon->require_subcommand(1);
  CLI::App* simon_quotient = simon->add_subcommand("quotient", "the monoid A*/~k");
  add_common(simon_quotient, args, false);
  simon_quotient->add_option("--k", k, "subword length bound")->required();

  CLI::App* kernel = app.add_subcommand("kernel", "kernel category operations");
  kernel->require_subcommand(1);
  CLI::App* kernel_build = kernel->add_subcommand("build", "dump the kernel category");
  add_common(kernel_build, args, true);
  kernel_build->add_option("--k", k, "subword length bound")->required();
  CLI::App* kernel_decide =
      kernel->add_subcommand("decide", "decide membership in V ** J");
  add_common(kernel_decide, args, true);
  kernel_decide->add_option("--variety", variety, "inner variety: J1, J, DA, Ap or Vn:<n>")
      ->required();
  kernel_decide->add_option("--k-max", decide_k_max,
                            "largest k to attempt (default: unlimited)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (classify->parsed()) return cmd_classify(args, cross_check, classify_k_max);
    if (monoid_check->parsed()) return cmd_monoid_check(args, table_path);
    if (monoid_identity->parsed()) return cmd_monoid_identity(args, table_path, identity_text);
    if (lang_syntactic->parsed()) return cmd_lang_syntactic(args);
    if (simon_quotient->parsed()) return cmd_simon_quotient(args, k);
    if (kernel_build->parsed()) return cmd_kernel_build(args, k);
    if (kernel_decide->parsed()) return cmd_kernel_decide(args, variety, decide_k_max);
    std::cerr << "no subcommand\n";
    return 2;
  } catch (const fo2::BudgetExceededError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const fo2::IllDefinedProductError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const fo2::InconsistentArrowError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const fo2::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
