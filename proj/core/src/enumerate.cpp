#include <algorithm>

#include "vknot/gauss_code.hpp"

namespace vknot {

namespace {

// Symbol ordering used for cyclic canonicalization: label, then role
// (Over < Under), then sign (Plus < Minus).
int symbol_key(const GaussSymbol& s) {
    return s.label * 4 + (s.role == Role::Under ? 2 : 0) + (s.sign == Sign::Minus ? 1 : 0);
}

bool symbols_less(const std::vector<GaussSymbol>& a, const std::vector<GaussSymbol>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const GaussSymbol& x, const GaussSymbol& y) {
                                            return symbol_key(x) < symbol_key(y);
                                        });
}

std::vector<GaussSymbol> relabel_by_first_occurrence(const std::vector<GaussSymbol>& syms) {
    std::vector<GaussSymbol> out(syms);
    std::vector<int> new_label(syms.size() + 1, 0);
    int next = 1;
    for (auto& sym : out) {
        int& nl = new_label[static_cast<size_t>(sym.label)];
        if (nl == 0) nl = next++;
        sym.label = nl;
    }
    return out;
}

// Keep only the lexicographically least rotation of each cyclic class,
// comparing rotations after canonical relabeling.
bool is_canonical_rotation(const std::vector<GaussSymbol>& syms) {
    const size_t m = syms.size();
    std::vector<GaussSymbol> rotated(syms);
    for (size_t r = 1; r < m; ++r) {
        std::rotate_copy(syms.begin(), syms.begin() + static_cast<std::ptrdiff_t>(r), syms.end(),
                         rotated.begin());
        if (symbols_less(relabel_by_first_occurrence(rotated), syms)) return false;
    }
    return true;
}

void matchings_rec(std::vector<int>& partner, int filled, int total,
                   const std::function<void(const std::vector<int>&)>& fn) {
    if (filled == total) {
        fn(partner);
        return;
    }
    int p = 0;
    while (partner[static_cast<size_t>(p)] >= 0) ++p;
    for (int q = p + 1; q < total; ++q) {
        if (partner[static_cast<size_t>(q)] >= 0) continue;
        partner[static_cast<size_t>(p)] = q;
        partner[static_cast<size_t>(q)] = p;
        matchings_rec(partner, filled + 2, total, fn);
        partner[static_cast<size_t>(p)] = -1;
        partner[static_cast<size_t>(q)] = -1;
    }
}

}  // namespace

namespace detail {

void for_each_matching(int crossings, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> partner(static_cast<size_t>(2 * crossings), -1);
    matchings_rec(partner, 0, 2 * crossings, fn);
}

void for_each_code_of_matching(const std::vector<int>& partner, const EnumerationOptions& opts,
                               const std::function<void(const GaussCode&)>& emit) {
    const int m = static_cast<int>(partner.size());
    const int n = m / 2;

    // Decoration-independent filters first: interstice parity and R1.
    const int want = opts.interstice == IntersticeConvention::EvenBetween ? 0 : 1;
    bool evenly = true;
    for (int p = 0; p < m; ++p) {
        if (partner[static_cast<size_t>(p)] > p &&
            (partner[static_cast<size_t>(p)] - p - 1) % 2 != want) {
            evenly = false;
            break;
        }
    }
    if (evenly) return;
    for (int p = 0; p + 1 < m; ++p)
        if (partner[static_cast<size_t>(p)] == p + 1) return;
    if (opts.r1_cyclic && partner[0] == m - 1) return;

    // Canonical labels: chords numbered by first occurrence.
    std::vector<int> label(static_cast<size_t>(m), 0);
    std::vector<int> first_pos;  // first endpoint of chord c-1
    for (int p = 0; p < m; ++p) {
        if (partner[static_cast<size_t>(p)] > p) {
            first_pos.push_back(p);
            const int c = static_cast<int>(first_pos.size());
            label[static_cast<size_t>(p)] = c;
            label[static_cast<size_t>(partner[static_cast<size_t>(p)])] = c;
        }
    }

    std::vector<GaussSymbol> syms(static_cast<size_t>(m));
    // Chord 1's decoration varies slowest so emission follows sequence order.
    for (unsigned roles = 0; roles < (1u << n); ++roles) {
        for (unsigned signs = 0; signs < (1u << n); ++signs) {
            for (int p = 0; p < m; ++p) {
                const int c = label[static_cast<size_t>(p)];
                const bool first = first_pos[static_cast<size_t>(c - 1)] == p;
                const bool under_first = (roles >> (n - c)) & 1u;
                const bool minus = (signs >> (n - c)) & 1u;
                syms[static_cast<size_t>(p)] = {
                    c, (under_first == first) ? Role::Under : Role::Over,
                    minus ? Sign::Minus : Sign::Plus};
            }
            GaussCode code{{syms}};
            if (is_r2_reducible(code, opts.r2_cyclic, opts.r2_patterns)) continue;
            if (opts.cyclic_canonical && !is_canonical_rotation(syms)) continue;
            emit(code);
        }
    }
}

}  // namespace detail

void enumerate_codes(int crossings, const EnumerationOptions& opts,
                     const std::function<void(const GaussCode&)>& emit) {
    if (crossings < 1 || crossings > 6)
        throw ValidationError("crossing count must lie in 1..6");
    detail::for_each_matching(crossings, [&](const std::vector<int>& partner) {
        detail::for_each_code_of_matching(partner, opts, emit);
    });
}

std::vector<GaussCode> enumerate_codes(int crossings, const EnumerationOptions& opts) {
    std::vector<GaussCode> out;
    enumerate_codes(crossings, opts, [&](const GaussCode& c) { out.push_back(c); });
    return out;
}

EnumerationOptions default_conventions() {
    // Calibrated by grid search: the unique flag combination reproducing
    // every three-crossing reference statistic. The four-crossing deviation
    // is documented in docs/census-calibration.md; tools/calibrate.cpp
    // re-runs the search.
    EnumerationOptions opts;
    opts.r1_cyclic = true;
    opts.r2_cyclic = true;
    opts.r2_patterns = {true, true};
    opts.cyclic_canonical = false;
    opts.interstice = IntersticeConvention::OddBetween;
    return opts;
}

}  // namespace vknot
