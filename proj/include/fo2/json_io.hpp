#pragma once

#include <json.hpp>

#include "fo2/hierarchy.hpp"
#include "fo2/kernel.hpp"
#include "fo2/language.hpp"
#include "fo2/monoid.hpp"

namespace fo2 {

using ordered_json = nlohmann::ordered_json;

/// Canonical form: the identity is always element 0 in serialized tables
/// (elements are permuted on write and on read when necessary), keys appear
/// in a fixed order, so serialization round trips byte-stably.
ordered_json monoid_to_json(const FiniteMonoid& m);
FiniteMonoid monoid_from_json(const ordered_json& j);

ordered_json dfa_to_json(const Dfa& d);
Dfa dfa_from_json(const ordered_json& j);

ordered_json recognized_language_to_json(const RecognizedLanguage& r);

/// Valuations serialize as {"x<i>": element-name-or-index}.
ordered_json valuation_to_json(const Valuation& v, const FiniteMonoid& m);

ordered_json depth_report_to_json(const DepthReport& report, const FiniteMonoid& m);
ordered_json block_product_to_json(const BlockProductVerdict& verdict,
                                   const FiniteMonoid& m);
ordered_json classify_report_to_json(const ClassifyReport& report,
                                     const FiniteMonoid& m);

ordered_json kernel_to_json(const KernelCategory& kc, const PairClosure& pc);

/// Fixed rendering used by the CLI: two-space indent plus trailing newline.
std::string dump_document(const ordered_json& j);

}  // namespace fo2
