#pragma once

#include <nlohmann/json.hpp>

#include "toploc/sr/hochster.hpp"
#include "toploc/toplocal/classify.hpp"
#include "toploc/toplocal/toplocal.hpp"

namespace toploc {

using Json = nlohmann::ordered_json;

/// Sorted reduced-basis generators; ["0"] for the zero ideal.
Json ideal_json(const IdealHandle& I);
Json prime_json(const PrimeCert& p);
Json primes_json(const std::vector<PrimeCert>& ps);
Json tag_json(const AnalyticPrimeTag& t);
Json tags_json(const std::vector<AnalyticPrimeTag>& ts);
Json flags_json(bool conditional, bool incomplete);

Json to_json(const BranchDatum& b);
Json to_json(const Dim0Detail& d);
Json to_json(const IrreducibilityCert& c);
Json to_json(const LocalCd& l);
Json to_json(const CdResult& r);
Json to_json(const AttReport& r);
Json to_json(const SuppReport& r);
Json to_json(const VanishReport& r);
Json to_json(const SemilocalReport& r);
Json to_json(const CompletionReport& r);
Json to_json(const StructureReport& r);
Json to_json(const ClassifyReport& r);
Json to_json(const LowerBoundReport& r);
/// Betti table with W written as the list of its variables.
Json to_json(const BettiTable& t, const Ring& ring);

}  // namespace toploc
