#pragma once

#include <cstdint>

#include "vknot/presentation.hpp"
#include "vknot/quandle.hpp"

namespace vknot {

/// Number of maps f: {1..g} -> {1..|t|} with t(f(i), f(j)) = f(k) for every
/// relation (i,j,k). Backtracking search, generators assigned in descending
/// relation-coverage order, pruning on any fully assigned violated relation.
std::int64_t count_homs(const RelationList& presentation, const QuandleTable& t);

struct CountPair {
    std::int64_t upper = 0;
    std::int64_t lower = 0;

    bool operator==(const CountPair&) const = default;
};

/// The two-component counting invariant (|Hom(U,T)|, |Hom(L,T)|).
CountPair q2(const GaussCode& code, const QuandleTable& t);

/// Upper count minus lower count; nonzero certifies non-classicality.
std::int64_t qdiff(const GaussCode& code, const QuandleTable& t);

/// A count is trivial when only the |T| constant maps exist.
bool is_trivial_count(std::int64_t count, const QuandleTable& t);

struct InvariantReport {
    std::int64_t upper = 0;
    std::int64_t lower = 0;
    std::int64_t difference = 0;
    bool trivial_upper = false;
    bool trivial_lower = false;

    bool operator==(const InvariantReport&) const = default;
};

InvariantReport invariant_report(const GaussCode& code, const QuandleTable& t);

}  // namespace vknot
