#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "vknot/errors.hpp"

namespace vknot {

/// Finite quandle stored as an n x n operation table over elements 1..n.
/// Entry (i,j) is i ▷ j. Construction checks shape and range only; the
/// quandle axioms are checked separately by check_axioms().
class QuandleTable {
public:
    QuandleTable(int order, std::vector<int> entries);

    int order() const noexcept { return order_; }

    /// i ▷ j, all indices 1-based.
    int op(int i, int j) const {
        return entries_[static_cast<size_t>(i - 1) * order_ + (j - 1)];
    }

    const std::vector<int>& entries() const noexcept { return entries_; }

    bool operator==(const QuandleTable&) const = default;

private:
    int order_;
    std::vector<int> entries_;  // row-major
};

/// Outcome of checking the three quandle axioms on a square table.
/// For each failed axiom the *_at member holds the first counterexample,
/// 1-based; unused slots are zero.
struct AxiomReport {
    bool idempotent = true;         // (i)   a ▷ a = a
    bool right_invertible = true;   // (ii)  every column is a permutation
    bool self_distributive = true;  // (iii) (a▷b)▷c = (a▷c)▷(b▷c)

    std::array<int, 3> idempotent_at{0, 0, 0};         // {a, 0, 0}
    std::array<int, 3> right_invertible_at{0, 0, 0};   // {column, repeated value, 0}
    std::array<int, 3> self_distributive_at{0, 0, 0};  // {a, b, c}

    bool ok() const noexcept { return idempotent && right_invertible && self_distributive; }

    bool operator==(const AxiomReport&) const = default;
};

/// Checks the quandle axioms on a raw table. Throws ValidationError if the
/// input is malformed (empty, non-square, or entries outside 1..n); a
/// malformed table is an error, not an axiom failure.
AxiomReport check_axioms(const std::vector<std::vector<int>>& rows);
AxiomReport check_axioms(const QuandleTable& q);

/// One-line human-readable summary of an axiom report.
std::string describe(const AxiomReport& report);

/// True iff the permutation group generated by the column maps i -> i▷j
/// acts transitively on 1..n, computed by orbit closure from element 1.
bool is_connected(const QuandleTable& q);

/// Built-in target quandles: the six smallest connected quandles under the
/// names T3, T4, T5a, T5b, T5c, T6, plus trivial quandles Tn-trivial
/// (x ▷ y = x) for n in 1..9. Throws ValidationError on unknown names.
QuandleTable builtin(std::string_view name);
const std::vector<std::string>& builtin_names();

/// Text format: n lines of n whitespace-separated integers, 1-based.
QuandleTable parse_table(const std::string& text);
std::string serialize_table(const QuandleTable& q);

}  // namespace vknot
