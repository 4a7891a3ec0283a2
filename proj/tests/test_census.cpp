#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "vknot/census.hpp"
#include "vknot/gauss_code.hpp"
#include "vknot/quandle.hpp"

using namespace vknot;

namespace {

CensusConfig six_builtins(int crossings, int jobs = 1) {
    CensusConfig cfg;
    cfg.crossings = crossings;
    cfg.jobs = jobs;
    for (const auto& name : builtin_names()) cfg.quandles.push_back({name, builtin(name)});
    return cfg;
}

}  // namespace

TEST_CASE("one-crossing census is empty") {
    const CensusResult r = run_census(six_builtins(1));
    CHECK(r.total_codes == 0);
    CHECK(r.nontrivial_codes == 0);
    CHECK(r.detected_among_nontrivial == 0);
    for (const auto& q : r.per_quandle) CHECK(q.detected == 0);
    CHECK(r.percent_detected == 0.0);
}

TEST_CASE("three-crossing census matches the reference statistics") {
    const CensusResult r = run_census(six_builtins(3));
    CHECK(r.total_codes == 172);
    CHECK(r.nontrivial_codes == 16);
    CHECK(r.detected_among_nontrivial == 0);
    for (const auto& q : r.per_quandle) CHECK(q.detected == 0);
}

TEST_CASE("census validates its configuration") {
    CensusConfig cfg = six_builtins(3);
    cfg.crossings = 0;
    CHECK_THROWS_AS(run_census(cfg), ValidationError);
    cfg.crossings = 7;
    CHECK_THROWS_AS(run_census(cfg), ValidationError);

    cfg = six_builtins(3);
    cfg.quandles.clear();
    CHECK_THROWS_AS(run_census(cfg), ValidationError);

    cfg = six_builtins(3);
    cfg.quandles.push_back({"bad", QuandleTable(2, {2, 1, 1, 2})});
    CHECK_THROWS_AS(run_census(cfg), ValidationError);

    cfg = six_builtins(3, 2);
    CHECK_THROWS_AS(run_census(cfg, [](const GaussCode&, const std::vector<std::int64_t>&, bool) {}),
                    ValidationError);
}

TEST_CASE("results are identical for any job count") {
    const CensusResult serial = run_census(six_builtins(3, 1));
    for (int jobs : {2, 4, 7}) {
        const CensusResult parallel = run_census(six_builtins(3, jobs));
        CHECK(parallel == serial);
    }
}

TEST_CASE("observer sees every code with verifiable differences") {
    CensusConfig cfg = six_builtins(2);
    std::int64_t seen = 0;
    const CensusResult r = run_census(
        cfg, [&](const GaussCode& code, const std::vector<std::int64_t>& diffs, bool nontrivial) {
            ++seen;
            REQUIRE(diffs.size() == cfg.quandles.size());
            bool expect_nontrivial = false;
            for (size_t qi = 0; qi < cfg.quandles.size(); ++qi) {
                const QuandleTable& t = cfg.quandles[qi].table;
                CHECK(diffs[qi] == testing::brute_force_qdiff(code, t));
                const auto upper = testing::brute_force_hom_count(upper_relations(code), t);
                const auto lower = testing::brute_force_hom_count(lower_relations(code), t);
                if (upper != t.order() || lower != t.order()) expect_nontrivial = true;
            }
            CHECK(nontrivial == expect_nontrivial);
        });
    CHECK(seen == r.total_codes);
}

TEST_CASE("census total equals the enumeration count") {
    CensusConfig cfg;
    cfg.crossings = 3;
    cfg.quandles.push_back({"T3", builtin("T3")});
    std::int64_t count = 0;
    enumerate_codes(cfg.crossings, cfg.conventions, [&](const GaussCode&) { ++count; });
    CHECK(run_census(cfg).total_codes == count);
}

TEST_CASE("csv export") {
    CensusResult r;
    r.crossings = 4;
    r.total_codes = 100;
    r.per_quandle = {{"T3", 7}, {"T4", 0}};
    CHECK(export_csv(r) == "quandle,detected,total\nT3,7,100\nT4,0,100\n");

    r.per_quandle.clear();
    CHECK(export_csv(r) == "quandle,detected,total\n");
}

TEST_CASE("json export round trips") {
    const CensusResult r = run_census(six_builtins(3));
    const std::string json = export_json(r);
    CHECK(census_from_json(json) == r);
    CHECK(json.find("\"totalCodes\": 172") != std::string::npos);
    CHECK_THROWS_AS(census_from_json("{"), ParseError);
    CHECK_THROWS_AS(census_from_json("{\"crossings\": 3}"), ParseError);
}

TEST_CASE("detected codes recompute to nonzero differences") {
    // Four-crossing run over one quandle for speed; observer recomputes a
    // one-in-eight sample with the independent oracle.
    CensusConfig cfg;
    cfg.crossings = 4;
    cfg.quandles.push_back({"T3", builtin("T3")});
    std::int64_t detected = 0, sampled = 0;
    const CensusResult r = run_census(
        cfg, [&](const GaussCode& code, const std::vector<std::int64_t>& diffs, bool) {
            if (diffs[0] == 0) return;
            ++detected;
            if (detected % 8 == 0) {
                ++sampled;
                CHECK(testing::brute_force_qdiff(code, cfg.quandles[0].table) == diffs[0]);
            }
        });
    CHECK(detected == r.per_quandle[0].detected);
    CHECK(detected > 0);
    CHECK(sampled > 0);
}
