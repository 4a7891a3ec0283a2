#include "vknot/census.hpp"

#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "vknot/hom_count.hpp"
#include "vknot/presentation.hpp"

namespace vknot {

namespace {

struct Tally {
    std::int64_t total = 0;
    std::int64_t nontrivial = 0;
    std::int64_t detected_among_nontrivial = 0;
    std::vector<std::int64_t> detected;

    explicit Tally(size_t quandles) : detected(quandles, 0) {}

    void merge(const Tally& other) {
        total += other.total;
        nontrivial += other.nontrivial;
        detected_among_nontrivial += other.detected_among_nontrivial;
        for (size_t i = 0; i < detected.size(); ++i) detected[i] += other.detected[i];
    }
};

void tally_code(const GaussCode& code, const std::vector<CensusQuandle>& quandles, Tally& tally,
                const CensusObserver& observer) {
    const RelationList upper = upper_relations(code);
    const RelationList lower = lower_relations(code);

    std::vector<std::int64_t> diffs(quandles.size(), 0);
    bool nontrivial = false;
    bool detected_any = false;
    for (size_t qi = 0; qi < quandles.size(); ++qi) {
        const QuandleTable& t = quandles[qi].table;
        const std::int64_t u = count_homs(upper, t);
        const std::int64_t l = count_homs(lower, t);
        if (u != t.order() || l != t.order()) nontrivial = true;
        diffs[qi] = u - l;
        if (diffs[qi] != 0) {
            ++tally.detected[qi];
            detected_any = true;
        }
    }
    ++tally.total;
    if (nontrivial) {
        ++tally.nontrivial;
        if (detected_any) ++tally.detected_among_nontrivial;
    }
    if (observer) observer(code, diffs, nontrivial);
}

}  // namespace

CensusResult run_census(const CensusConfig& cfg) { return run_census(cfg, nullptr); }

CensusResult run_census(const CensusConfig& cfg, const CensusObserver& observer) {
    if (cfg.crossings < 1 || cfg.crossings > 6)
        throw ValidationError("census crossings must lie in 1..6");
    if (cfg.quandles.empty()) throw ValidationError("census needs at least one quandle");
    if (cfg.jobs < 1) throw ValidationError("census jobs must be >= 1");
    if (observer && cfg.jobs != 1)
        throw ValidationError("census observer requires jobs == 1");
    for (const auto& q : cfg.quandles) {
        const AxiomReport rep = check_axioms(q.table);
        if (!rep.ok())
            throw ValidationError("quandle " + q.name + " is not a quandle: " + describe(rep));
    }

    std::vector<std::vector<int>> matchings;
    detail::for_each_matching(cfg.crossings,
                              [&](const std::vector<int>& p) { matchings.push_back(p); });

    const size_t workers =
        std::min<size_t>(static_cast<size_t>(cfg.jobs), std::max<size_t>(matchings.size(), 1));
    std::vector<Tally> partials(workers, Tally(cfg.quandles.size()));

    if (workers <= 1) {
        for (const auto& matching : matchings)
            detail::for_each_code_of_matching(matching, cfg.conventions, [&](const GaussCode& c) {
                tally_code(c, cfg.quandles, partials[0], observer);
            });
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (size_t w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] {
                for (;;) {
                    const size_t i = next.fetch_add(1);
                    if (i >= matchings.size()) break;
                    detail::for_each_code_of_matching(
                        matchings[i], cfg.conventions,
                        [&](const GaussCode& c) { tally_code(c, cfg.quandles, partials[w], nullptr); });
                }
            });
        }
        for (auto& t : threads) t.join();
    }

    Tally tally(cfg.quandles.size());
    for (const auto& p : partials) tally.merge(p);

    CensusResult result;
    result.crossings = cfg.crossings;
    result.total_codes = tally.total;
    for (size_t qi = 0; qi < cfg.quandles.size(); ++qi)
        result.per_quandle.push_back({cfg.quandles[qi].name, tally.detected[qi]});
    result.nontrivial_codes = tally.nontrivial;
    result.detected_among_nontrivial = tally.detected_among_nontrivial;
    result.percent_detected =
        tally.nontrivial == 0
            ? 0.0
            : 100.0 * static_cast<double>(tally.detected_among_nontrivial) /
                  static_cast<double>(tally.nontrivial);
    return result;
}

std::string export_csv(const CensusResult& result) {
    std::ostringstream os;
    os << "quandle,detected,total\n";
    for (const auto& q : result.per_quandle)
        os << q.name << ',' << q.detected << ',' << result.total_codes << '\n';
    return os.str();
}

std::string export_json(const CensusResult& result) {
    nlohmann::ordered_json j;
    j["crossings"] = result.crossings;
    j["totalCodes"] = result.total_codes;
    nlohmann::ordered_json per = nlohmann::ordered_json::object();
    for (const auto& q : result.per_quandle) per[q.name] = q.detected;
    j["perQuandle"] = per;
    j["nontrivialCodes"] = result.nontrivial_codes;
    j["detectedAmongNontrivial"] = result.detected_among_nontrivial;
    j["percentDetected"] = result.percent_detected;
    return j.dump(2);
}

CensusResult census_from_json(const std::string& text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("bad census JSON: ") + e.what());
    }
    try {
        CensusResult result;
        result.crossings = j.at("crossings").get<int>();
        result.total_codes = j.at("totalCodes").get<std::int64_t>();
        for (const auto& [name, detected] : j.at("perQuandle").items())
            result.per_quandle.push_back({name, detected.get<std::int64_t>()});
        result.nontrivial_codes = j.at("nontrivialCodes").get<std::int64_t>();
        result.detected_among_nontrivial = j.at("detectedAmongNontrivial").get<std::int64_t>();
        result.percent_detected = j.at("percentDetected").get<double>();
        return result;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad census JSON: ") + e.what());
    }
}

}  // namespace vknot
