#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "vknot/quandle.hpp"

using namespace vknot;

namespace {

const std::vector<std::vector<int>> kT3Rows = {{1, 3, 2}, {3, 2, 1}, {2, 1, 3}};

std::vector<std::vector<int>> rows_of(const QuandleTable& q) {
    std::vector<std::vector<int>> rows(q.order(), std::vector<int>(q.order()));
    for (int i = 1; i <= q.order(); ++i)
        for (int j = 1; j <= q.order(); ++j) rows[i - 1][j - 1] = q.op(i, j);
    return rows;
}

}  // namespace

TEST_CASE("axioms pass on the trivial quandle and on T3") {
    CHECK(check_axioms({{1, 1, 1}, {2, 2, 2}, {3, 3, 3}}).ok());
    CHECK(check_axioms(kT3Rows).ok());
}

TEST_CASE("axiom failures report the first counterexample") {
    // Diagonal violation at a=1.
    auto rep = check_axioms({{2, 1}, {1, 2}});
    CHECK_FALSE(rep.ok());
    CHECK_FALSE(rep.idempotent);
    CHECK(rep.idempotent_at[0] == 1);

    // Column 1 repeats the value 1.
    rep = check_axioms({{1, 2}, {1, 2}});
    CHECK(rep.idempotent);
    CHECK_FALSE(rep.right_invertible);
    CHECK(rep.right_invertible_at[0] == 1);
    CHECK(rep.right_invertible_at[1] == 1);

    // Latin-square-like table that is not self-distributive.
    rep = check_axioms({{1, 3, 2}, {2, 2, 1}, {3, 1, 3}});
    CHECK(rep.idempotent);
    CHECK(rep.right_invertible);
    CHECK_FALSE(rep.self_distributive);
    CHECK(rep.self_distributive_at == std::array<int, 3>{1, 2, 3});
}

TEST_CASE("malformed tables are errors, not axiom failures") {
    CHECK_THROWS_AS(check_axioms({{1, 2}, {1}}), ValidationError);
    CHECK_THROWS_AS(check_axioms({{1, 5}, {2, 2}}), ValidationError);
    CHECK_THROWS_AS(check_axioms(std::vector<std::vector<int>>{}), ValidationError);
}

TEST_CASE("built-in quandles match the reference tables and verify") {
    const QuandleTable t3 = builtin("T3");
    CHECK(rows_of(t3) == kT3Rows);
    const QuandleTable t4 = builtin("T4");
    CHECK(rows_of(t4) ==
          std::vector<std::vector<int>>{{1, 3, 4, 2}, {4, 2, 1, 3}, {2, 4, 3, 1}, {3, 1, 2, 4}});
    const QuandleTable t6 = builtin("T6");
    CHECK(rows_of(t6).back() == std::vector<int>{6, 3, 2, 5, 4, 6});

    for (const auto& name : builtin_names()) {
        const QuandleTable q = builtin(name);
        CAPTURE(name);
        CHECK(check_axioms(q).ok());
        CHECK(is_connected(q));
    }
}

TEST_CASE("trivial quandles connect only at order one") {
    CHECK(is_connected(builtin("T1-trivial")));
    CHECK_FALSE(is_connected(builtin("T2-trivial")));
    CHECK_FALSE(is_connected(builtin("T5-trivial")));
    CHECK(check_axioms(builtin("T5-trivial")).ok());
}

TEST_CASE("unknown builtin names are rejected") {
    CHECK_THROWS_AS(builtin("T7"), ValidationError);
    CHECK_THROWS_AS(builtin("T0-trivial"), ValidationError);
    CHECK_THROWS_AS(builtin(""), ValidationError);
}

TEST_CASE("table text round trip") {
    const std::string text = "1 3 2\n3 2 1\n2 1 3";
    const QuandleTable q = parse_table(text);
    CHECK(q == builtin("T3"));
    CHECK(serialize_table(q) == text);
}

TEST_CASE("table parsing rejects bad input") {
    CHECK_THROWS_AS(parse_table("1 2\n2"), ParseError);
    CHECK_THROWS_AS(parse_table("1 x\n2 1"), ParseError);
    CHECK_THROWS_AS(parse_table("1 3\n2 1"), ParseError);  // 3 outside 1..2
    CHECK_THROWS_AS(parse_table(""), ParseError);
    CHECK_THROWS_AS(parse_table("  \n \n"), ParseError);
}

TEST_CASE("right inverses are unique for every valid quandle") {
    for (const auto& name : builtin_names()) {
        const QuandleTable q = builtin(name);
        for (int a = 1; a <= q.order(); ++a)
            for (int b = 1; b <= q.order(); ++b) {
                int solutions = 0;
                for (int c = 1; c <= q.order(); ++c)
                    if (q.op(c, b) == a) ++solutions;
                CHECK(solutions == 1);
            }
    }
}

TEST_CASE("the three order-5 builtins are pairwise non-isomorphic") {
    auto isomorphic = [](const QuandleTable& a, const QuandleTable& b) {
        std::vector<int> perm(static_cast<size_t>(a.order()));
        for (int i = 0; i < a.order(); ++i) perm[static_cast<size_t>(i)] = i + 1;
        do {
            bool ok = true;
            for (int i = 1; i <= a.order() && ok; ++i)
                for (int j = 1; j <= a.order() && ok; ++j)
                    if (perm[static_cast<size_t>(a.op(i, j) - 1)] !=
                        b.op(perm[static_cast<size_t>(i - 1)], perm[static_cast<size_t>(j - 1)]))
                        ok = false;
            if (ok) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    };
    const QuandleTable a = builtin("T5a"), b = builtin("T5b"), c = builtin("T5c");
    CHECK_FALSE(isomorphic(a, b));
    CHECK_FALSE(isomorphic(a, c));
    CHECK_FALSE(isomorphic(b, c));
    CHECK(isomorphic(a, a));
}

TEST_CASE("verifier is deterministic and total on random perturbations of T3") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> pos(0, 2);
    std::uniform_int_distribution<int> val(1, 3);
    for (int trial = 0; trial < 300; ++trial) {
        auto rows = kT3Rows;
        const int edits = 1 + trial % 3;
        for (int e = 0; e < edits; ++e) rows[pos(rng)][pos(rng)] = val(rng);
        const AxiomReport first = check_axioms(rows);
        const AxiomReport second = check_axioms(rows);
        CHECK(first == second);
    }
}
