#pragma once

#include "qwalk/asymptotics.hpp"
#include "qwalk/series.hpp"
#include "qwalk/stepset.hpp"
#include "qwalk/verify.hpp"

#include <json.hpp>

namespace qwalk {

using Json = nlohmann::json;

// JSON forms of everything the CLI emits.  Each to_json has a matching
// from_json so reports round-trip; numeric values are decimal strings
// except the asymptotic estimates, which carry both a double and a
// high-precision string.

Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

Json to_json(const TSeries& s);
TSeries series_from_json(const Json& j);

Json to_json(const CriterionReport& r);
CriterionReport criterion_from_json(const Json& j);

Json to_json(const VerifyReport& r);
VerifyReport verify_from_json(const Json& j);

Json to_json(const Aggregate& a);
Aggregate aggregate_from_json(const Json& j);

Json to_json(const FitResult& r);
FitResult fit_from_json(const Json& j);

Json to_json(const CompareReport& r);
CompareReport compare_from_json(const Json& j);

// Output of the enumerate subcommand: either per-n aggregates or the full
// cell table.
struct EnumerationReport {
    std::string steps;
    Point start{0, 0};
    int max_len = 0;
    bool has_aggregate = false;
    Aggregate aggregate_kind;
    std::vector<BigInt> counts;  // aggregate mode
    struct Cell {
        int n = 0, i = 0, j = 0;
        BigInt count;
    };
    std::vector<Cell> cells;  // table mode
};

Json to_json(const EnumerationReport& r);
EnumerationReport enumeration_from_json(const Json& j);

}  // namespace qwalk
