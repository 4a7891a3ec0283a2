#include "vknot/hom_count.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace vknot {

namespace {

struct SearchPlan {
    std::vector<int> order;                       // generator assigned at each depth
    std::vector<std::vector<Relation>> checks;    // relations complete at that depth
};

SearchPlan plan_search(const RelationList& rel) {
    const int g = rel.generators;
    std::vector<int> coverage(static_cast<size_t>(g) + 1, 0);
    for (const auto& r : rel.relations) {
        ++coverage[static_cast<size_t>(r.lhs)];
        ++coverage[static_cast<size_t>(r.rhs)];
        ++coverage[static_cast<size_t>(r.out)];
    }

    SearchPlan plan;
    plan.order.resize(static_cast<size_t>(g));
    std::iota(plan.order.begin(), plan.order.end(), 1);
    std::stable_sort(plan.order.begin(), plan.order.end(), [&](int a, int b) {
        return coverage[static_cast<size_t>(a)] > coverage[static_cast<size_t>(b)];
    });

    std::vector<int> depth_of(static_cast<size_t>(g) + 1, 0);
    for (int d = 0; d < g; ++d) depth_of[static_cast<size_t>(plan.order[static_cast<size_t>(d)])] = d;

    plan.checks.resize(static_cast<size_t>(g));
    for (const auto& r : rel.relations) {
        const int last = std::max({depth_of[static_cast<size_t>(r.lhs)],
                                   depth_of[static_cast<size_t>(r.rhs)],
                                   depth_of[static_cast<size_t>(r.out)]});
        plan.checks[static_cast<size_t>(last)].push_back(r);
    }
    return plan;
}

void search(const SearchPlan& plan, const QuandleTable& t, int depth, std::vector<int>& assign,
            std::int64_t& count) {
    const int g = static_cast<int>(plan.order.size());
    if (depth == g) {
        if (count == std::numeric_limits<std::int64_t>::max())
            throw Error("homomorphism count overflow");
        ++count;
        return;
    }
    const int var = plan.order[static_cast<size_t>(depth)];
    for (int value = 1; value <= t.order(); ++value) {
        assign[static_cast<size_t>(var)] = value;
        bool ok = true;
        for (const auto& r : plan.checks[static_cast<size_t>(depth)]) {
            if (t.op(assign[static_cast<size_t>(r.lhs)], assign[static_cast<size_t>(r.rhs)]) !=
                assign[static_cast<size_t>(r.out)]) {
                ok = false;
                break;
            }
        }
        if (ok) search(plan, t, depth + 1, assign, count);
    }
    assign[static_cast<size_t>(var)] = 0;
}

}  // namespace

std::int64_t count_homs(const RelationList& presentation, const QuandleTable& t) {
    const int g = presentation.generators;
    if (g < 1) throw ValidationError("presentation needs at least one generator");
    for (const auto& r : presentation.relations)
        if (r.lhs < 1 || r.lhs > g || r.rhs < 1 || r.rhs > g || r.out < 1 || r.out > g)
            throw ValidationError("relation index outside 1..g");

    const SearchPlan plan = plan_search(presentation);
    std::vector<int> assign(static_cast<size_t>(g) + 1, 0);
    std::int64_t count = 0;
    search(plan, t, 0, assign, count);
    return count;
}

CountPair q2(const GaussCode& code, const QuandleTable& t) {
    return {count_homs(upper_relations(code), t), count_homs(lower_relations(code), t)};
}

std::int64_t qdiff(const GaussCode& code, const QuandleTable& t) {
    const CountPair pair = q2(code, t);
    return pair.upper - pair.lower;
}

bool is_trivial_count(std::int64_t count, const QuandleTable& t) { return count == t.order(); }

InvariantReport invariant_report(const GaussCode& code, const QuandleTable& t) {
    const CountPair pair = q2(code, t);
    return {pair.upper, pair.lower, pair.upper - pair.lower, is_trivial_count(pair.upper, t),
            is_trivial_count(pair.lower, t)};
}

}  // namespace vknot
