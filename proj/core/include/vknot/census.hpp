#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "vknot/gauss_code.hpp"
#include "vknot/quandle.hpp"

namespace vknot {

struct CensusQuandle {
    std::string name;
    QuandleTable table;

    bool operator==(const CensusQuandle&) const = default;
};

struct CensusConfig {
    int crossings = 4;
    std::vector<CensusQuandle> quandles;
    EnumerationOptions conventions = default_conventions();
    int jobs = 1;
};

struct QuandleDetection {
    std::string name;
    std::int64_t detected = 0;  // codes with qdiff != 0 against this quandle

    bool operator==(const QuandleDetection&) const = default;
};

struct CensusResult {
    int crossings = 0;
    std::int64_t total_codes = 0;
    std::vector<QuandleDetection> per_quandle;  // in config order
    std::int64_t nontrivial_codes = 0;          // some quandle sees a count above its order
    std::int64_t detected_among_nontrivial = 0;
    double percent_detected = 0.0;  // 100 * detected_among_nontrivial / nontrivial_codes

    bool operator==(const CensusResult&) const = default;
};

/// Per-code hook for verification passes: receives the code, its qdiff
/// against each configured quandle, and the nontriviality flag. Requires
/// jobs == 1.
using CensusObserver =
    std::function<void(const GaussCode&, const std::vector<std::int64_t>&, bool)>;

/// Enumerates the filtered codes and tabulates detection statistics per
/// quandle. Deterministic: results are identical for any job count.
CensusResult run_census(const CensusConfig& cfg);
CensusResult run_census(const CensusConfig& cfg, const CensusObserver& observer);

/// CSV with columns quandle,detected,total; one row per quandle.
std::string export_csv(const CensusResult& result);

/// JSON mirror of CensusResult with stable field order.
std::string export_json(const CensusResult& result);
CensusResult census_from_json(const std::string& text);

}  // namespace vknot
