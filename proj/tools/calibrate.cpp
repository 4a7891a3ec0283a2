// Grid search over the enumeration convention flags, reporting census sizes
// and detection statistics against the reference counts (3-crossing: 172
// codes, 16 nontrivial, no detections; 4-crossing: 17040 codes, 4140
// nontrivial, 3570 detected, per-quandle 3060/1350/492/72/426/3060).

#include <cstdio>
#include <string>
#include <vector>

#include "vknot/census.hpp"
#include "vknot/gauss_code.hpp"
#include "vknot/quandle.hpp"

using namespace vknot;

namespace {

struct Reference {
    int crossings;
    std::int64_t total;
    std::int64_t nontrivial;
    std::int64_t detected_among;
    std::vector<std::int64_t> per_quandle;
};

const Reference kRef3{3, 172, 16, 0, {0, 0, 0, 0, 0, 0}};
const Reference kRef4{4, 17040, 4140, 3570, {3060, 1350, 492, 72, 426, 3060}};

int score(const CensusResult& r, const Reference& ref) {
    int s = 0;
    if (r.total_codes == ref.total) ++s;
    if (r.nontrivial_codes == ref.nontrivial) ++s;
    if (r.detected_among_nontrivial == ref.detected_among) ++s;
    for (size_t i = 0; i < ref.per_quandle.size(); ++i)
        if (r.per_quandle[i].detected == ref.per_quandle[i]) ++s;
    return s;
}

std::string flag_string(const EnumerationOptions& o) {
    std::string s;
    s += o.interstice == IntersticeConvention::OddBetween ? "oddbtw " : "evenbtw";
    s += o.r1_cyclic ? " r1cyc" : " r1lin";
    s += o.r2_cyclic ? " r2cyc" : " r2lin";
    s += o.r2_patterns.nested ? " nest" : "     ";
    s += o.r2_patterns.interleaved ? " intl" : "     ";
    s += o.cyclic_canonical ? " canon" : "      ";
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    bool with_stats = true;
    int jobs = 4;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--sizes-only") with_stats = false;
        if (arg == "--jobs" && i + 1 < argc) jobs = std::atoi(argv[++i]);
    }

    std::vector<CensusQuandle> quandles;
    for (const auto& name : builtin_names()) quandles.push_back({name, builtin(name)});

    std::printf("%-36s %8s %8s", "flags", "n3", "n4");
    if (with_stats) std::printf("  %6s %6s  %-42s %6s %6s  score", "nt3", "det3", "detected4", "nt4", "det4");
    std::printf("\n");

    for (int mask = 0; mask < 64; ++mask) {
        EnumerationOptions o;
        o.r1_cyclic = mask & 1;
        o.r2_cyclic = mask & 2;
        o.r2_patterns.nested = mask & 4;
        o.r2_patterns.interleaved = mask & 8;
        o.cyclic_canonical = mask & 16;
        o.interstice = (mask & 32) ? IntersticeConvention::OddBetween
                                   : IntersticeConvention::EvenBetween;

        CensusConfig cfg3{3, quandles, o, jobs};
        CensusConfig cfg4{4, quandles, o, jobs};
        const CensusResult r3 = run_census(cfg3);
        const CensusResult r4 = run_census(cfg4);

        std::printf("%-36s %8lld %8lld", flag_string(o).c_str(),
                    static_cast<long long>(r3.total_codes),
                    static_cast<long long>(r4.total_codes));
        if (with_stats) {
            std::string det4;
            for (const auto& q : r4.per_quandle)
                det4 += std::to_string(q.detected) + " ";
            std::printf("  %6lld %6lld  %-42s %6lld %6lld  %d+%d",
                        static_cast<long long>(r3.nontrivial_codes),
                        static_cast<long long>(r3.detected_among_nontrivial), det4.c_str(),
                        static_cast<long long>(r4.nontrivial_codes),
                        static_cast<long long>(r4.detected_among_nontrivial),
                        score(r3, kRef3), score(r4, kRef4));
        }
        std::printf("\n");
        std::fflush(stdout);
    }
    return 0;
}
