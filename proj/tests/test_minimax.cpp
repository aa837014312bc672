/*
 * Copyright 2026 The conemm authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "core/generators.hpp"
#include "core/instance.hpp"
#include "core/minimax.hpp"
#include "core/prng.hpp"

using namespace conemm;

namespace {

Instance make(int n, std::vector<std::vector<long>> rows) {
    Instance inst;
    inst.n = n;
    inst.q = static_cast<int>(rows.size());
    inst.r = static_cast<int>(rows.front().size());
    inst.coeffs = Matrix(inst.q, inst.r);
    for (int i = 0; i < inst.q; ++i) {
        for (int j = 0; j < inst.r; ++j) {
            inst.coeffs.at(i, j) = Rational(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
    }
    return inst;
}

Weights weights(std::vector<Rational> b) {
    return Weights{std::move(b)};
}

const Instance kFiveRows = make(1, {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}});

}  // namespace

TEST_CASE("counts on unit-vector rows") {
    Instance inst = make(1, {{1, 0}, {1, 0}, {0, 1}, {0, 1}});
    CountVector cv = counts(inst.coeffs, weights({Rational(1), Rational(1)}));
    CHECK(cv.counts == std::vector<int>{2, 2});
    CHECK_FALSE(cv.had_ties);
}

TEST_CASE("counts on the five-row fixture under (1, 6/5)") {
    CountVector cv = counts(kFiveRows.coeffs, weights({Rational(1), Rational(6, 5)}));
    CHECK(cv.counts == std::vector<int>{3, 2});
    CHECK_FALSE(cv.had_ties);
}

TEST_CASE("a symmetric row ties and counts at both coordinates") {
    Instance inst = make(1, {{1, 1}});
    CountVector cv = counts(inst.coeffs, weights({Rational(1), Rational(1)}));
    CHECK(cv.counts == std::vector<int>{1, 1});
    CHECK(cv.had_ties);
    CHECK(cv.sum() == 2);
}

TEST_CASE("counts are invariant under weight scaling") {
    SplitMix64 rng(77);
    for (int iter = 0; iter < 100; ++iter) {
        const int r = 1 + static_cast<int>(rng.below(4));
        const int q = 1 + static_cast<int>(rng.below(8));
        Matrix m(q, r);
        for (int i = 0; i < q; ++i) {
            m.at(i, static_cast<int>(rng.below(static_cast<std::uint64_t>(r)))) =
                Rational(static_cast<long>(rng.below(4)) + 1);
            for (int j = 0; j < r; ++j) {
                if (rng.below(2) == 0)
                    m.at(i, j) = Rational(static_cast<long>(rng.below(5)) + 1, static_cast<long>(rng.below(3)) + 1);
            }
        }
        Weights w;
        for (int j = 0; j < r; ++j) {
            w.b.push_back(Rational(static_cast<long>(rng.below(6)) + 1, static_cast<long>(rng.below(4)) + 1));
        }
        Rational t(static_cast<long>(rng.below(9)) + 1, static_cast<long>(rng.below(7)) + 1);
        Weights scaled;
        for (const Rational& b : w.b) scaled.b.push_back(b * t);
        CHECK(counts(m, w) == counts(m, scaled));
    }
}

TEST_CASE("admissible set examples") {
    // no row carries two nonzero coordinates: conditions hold vacuously
    Instance units = make(1, {{1, 0}, {0, 1}});
    CHECK(in_admissible_set(units.coeffs, weights({Rational(1), Rational(3)})).pass);

    Instance diag = make(1, {{1, 1}});
    AdmissibleReport rep = in_admissible_set(diag.coeffs, weights({Rational(1), Rational(1)}));
    REQUIRE_FALSE(rep.pass);
    CHECK(rep.reason.find("row 1") != std::string::npos);

    // the four cross ratios 6/5, 5/6, 12/5, 5/12 are pairwise distinct
    Instance two = make(1, {{1, 1}, {2, 1}});
    CHECK(in_admissible_set(two.coeffs, weights({Rational(1), Rational(6, 5)})).pass);
}

TEST_CASE("admissible membership iff counting is tie-free everywhere nearby") {
    // a cross-row ratio clash: rows (1,2) and (2,4) are proportional, and
    // proportional rows always collide in condition (2)
    Instance inst = make(1, {{1, 2}, {2, 4}});
    AdmissibleReport rep = in_admissible_set(inst.coeffs, weights({Rational(1), Rational(3, 2)}));
    REQUIRE_FALSE(rep.pass);
    CHECK(rep.reason.find("coinciding") != std::string::npos);
}

TEST_CASE("initial weights on unit rows are all ones") {
    Instance inst = make(1, {{1, 0}, {1, 0}, {0, 1}, {0, 1}});
    Weights w = initial_weights(inst.coeffs, 3);
    CHECK(w.b == RationalVector{Rational(1), Rational(1)});
}

TEST_CASE("initial weights land in the admissible set") {
    Instance inst = make(1, {{1, 1}, {2, 1}, {1, 2}});
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Weights w = initial_weights(inst.coeffs, seed);
        CHECK(in_admissible_set(inst.coeffs, w).pass);
        for (const Rational& b : w.b) CHECK(b.is_positive());
    }
}

TEST_CASE("initial weights refuse non-generic matrices") {
    Instance inst = make(1, {{1, 1}, {2, 2}});
    CHECK_THROWS_AS(initial_weights(inst.coeffs, 0), Error);
}

TEST_CASE("balance resolves the five-row fixture in one move") {
    // counts under (1, 100) are (4, 1); the crossing candidates for rows
    // 3, 4, 5 sit at 100, 200 and 50, so coordinate 1 scales by a factor
    // strictly between 50 and 100 (75 with the half-distance step).
    Weights start = weights({Rational(1), Rational(100)});
    CountVector before = counts(kFiveRows.coeffs, start);
    REQUIRE(before.counts == std::vector<int>{4, 1});
    REQUIRE(in_admissible_set(kFiveRows.coeffs, start).pass);

    BalanceResult result = balance(kFiveRows.coeffs, start);
    CHECK(result.iterations == 1);
    CHECK(result.w.b[0] == Rational(75));
    CHECK(result.w.b[1] == Rational(100));
    CHECK(counts(kFiveRows.coeffs, result.w).counts == std::vector<int>{3, 2});
}

TEST_CASE("balance is a fixed point on balanced counts") {
    Weights start = weights({Rational(1), Rational(6, 5)});
    BalanceResult result = balance(kFiveRows.coeffs, start);
    CHECK(result.iterations == 0);
    CHECK(result.w.b == start.b);
}

TEST_CASE("balance with one generator never moves") {
    Instance inst = make(1, {{1}, {2}, {4}});
    BalanceResult result = balance(inst.coeffs, weights({Rational(1)}));
    CHECK(result.iterations == 0);
    CHECK(counts(inst.coeffs, result.w).counts == std::vector<int>{3});
}

TEST_CASE("balance reports a stuck gap on support-violating input") {
    // every row lives on the first generator, so no transfer can ever cross
    Instance inst = make(1, {{1, 0}, {2, 0}, {4, 0}});
    REQUIRE_FALSE(check_support_condition(inst).pass);
    Weights start = weights({Rational(1), Rational(1)});
    REQUIRE(in_admissible_set(inst.coeffs, start).pass);
    CHECK_THROWS_WITH_AS(balance(inst.coeffs, start), doctest::Contains("support condition"), Error);
}

TEST_CASE("balance trace decreases lexicographically") {
    SplitMix64 rng(99);
    for (int iter = 0; iter < 60; ++iter) {
        const int r = 2 + static_cast<int>(rng.below(3));
        const int q = r + static_cast<int>(rng.below(12));
        Instance inst;
        inst.n = 1;
        inst.q = q;
        inst.r = r;
        inst.coeffs = Matrix(q, r);
        for (int i = 0; i < q; ++i) {
            inst.coeffs.at(i, static_cast<int>(rng.below(static_cast<std::uint64_t>(r)))) =
                Rational(static_cast<long>(rng.below(4)) + 1);
            for (int j = 0; j < r; ++j) {
                if (rng.below(2) == 0)
                    inst.coeffs.at(i, j) = Rational(static_cast<long>(rng.below(6)) + 1, static_cast<long>(rng.below(3)) + 1);
            }
        }
        if (!check_support_condition(inst).pass) continue;
        PerturbedInstance pert = perturb(inst, Rational(1, 16), iter);
        Weights start = initial_weights(pert.perturbed, iter);
        BalanceResult result = balance(pert.perturbed, start);
        std::vector<int> previous = counts(pert.perturbed, start).sorted_descending();
        for (const std::vector<int>& entry : result.trace) {
            CHECK(std::lexicographical_compare(entry.begin(), entry.end(), previous.begin(), previous.end()));
            previous = entry;
        }
        // admissible throughout, so the counts sum to q exactly
        CHECK(counts(pert.perturbed, result.w).sum() == q);
    }
}

TEST_CASE("ratio repair leaves compliant weights alone") {
    Weights w = weights({Rational(1), Rational(6, 5)});
    Weights out = repair_ratios(kFiveRows.coeffs, w);
    CHECK(out.b == w.b);
}

TEST_CASE("ratio repair compresses unit-row weights into (2M)^r") {
    Instance inst = make(1, {{1, 0}, {1, 0}, {0, 1}, {0, 1}});
    CountVector before = counts(inst.coeffs, weights({Rational(1), Rational(10)}));
    Weights out = repair_ratios(inst.coeffs, weights({Rational(1), Rational(10)}));
    // M = 1, so every ratio must land within [1/4, 4]
    for (const Rational& a : out.b) {
        for (const Rational& b : out.b) {
            CHECK(a / b <= Rational(4));
            CHECK(a / b >= Rational(1, 4));
        }
    }
    CHECK(counts(inst.coeffs, out) == before);
}

TEST_CASE("ratio repair on a single row keeps its count") {
    Instance inst = make(1, {{1, 1}});
    Weights out = repair_ratios(inst.coeffs, weights({Rational(1), Rational(100)}));
    const Rational bound = Rational::pow(Rational(2) * max_entry_ratio(inst.coeffs), 2);
    CHECK(out.b[1] / out.b[0] <= bound);
    CHECK(out.b[0] / out.b[1] <= bound);
    CHECK(counts(inst.coeffs, out).sum() >= 1);
}

TEST_CASE("ratio repair never decreases a count") {
    SplitMix64 rng(5);
    for (int iter = 0; iter < 100; ++iter) {
        const int r = 2 + static_cast<int>(rng.below(3));
        const int q = 1 + static_cast<int>(rng.below(8));
        Matrix m(q, r);
        for (int i = 0; i < q; ++i) {
            m.at(i, static_cast<int>(rng.below(static_cast<std::uint64_t>(r)))) =
                Rational(static_cast<long>(rng.below(4)) + 1);
            for (int j = 0; j < r; ++j) {
                if (rng.below(2) == 0)
                    m.at(i, j) = Rational(static_cast<long>(rng.below(6)) + 1, static_cast<long>(rng.below(3)) + 1);
            }
        }
        Weights w;
        for (int j = 0; j < r; ++j) {
            w.b.push_back(Rational(static_cast<long>(rng.below(40)) + 1, static_cast<long>(rng.below(4)) + 1));
        }
        CountVector before = counts(m, w);
        Weights out = repair_ratios(m, w);
        CountVector after = counts(m, out);
        for (int j = 0; j < r; ++j) {
            CHECK(after.counts[static_cast<std::size_t>(j)] >= before.counts[static_cast<std::size_t>(j)]);
        }
        const Rational bound = Rational::pow(Rational(2) * max_entry_ratio(m), static_cast<unsigned>(r));
        for (const Rational& a : out.b) {
            for (const Rational& b : out.b) {
                CHECK(a / b <= bound);
                CHECK(a / b >= bound.reciprocal());
            }
        }
    }
}

TEST_CASE("guaranteed count bound") {
    CHECK(guaranteed_min_count(5, 2) == 2);   // ceil(5/2 - 1/2)
    CHECK(guaranteed_min_count(4, 4) == 0);   // ceil(1 - 3/2) = ceil(-1/2)
    CHECK(guaranteed_min_count(20, 4) == 4);  // ceil(5 - 3/2)
    CHECK(guaranteed_min_count(7, 1) == 7);
    CHECK(guaranteed_min_count(12, 3) == 3);
}

TEST_CASE("solve on the five-row fixture meets the bound") {
    SolveResult result = solve_minimax(kFiveRows, 1);
    CHECK(result.counts_perturbed.min() >= 2);
    CHECK(result.counts_perturbed.sum() == 5);
    CHECK_FALSE(result.counts_perturbed.had_ties);
}

TEST_CASE("solve on uniform unit rows splits evenly") {
    Instance inst = make(1, {{1, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 1}});
    SolveResult result = solve_minimax(inst, 7);
    CHECK(result.counts_perturbed.counts == std::vector<int>{2, 2, 2});
    CHECK(result.counts_unperturbed.counts == std::vector<int>{2, 2, 2});
}

TEST_CASE("solve rejects support-condition violations before searching") {
    Instance inst = make(1, {{1, 0}, {1, 0}, {1, 0}, {0, 1}});
    CHECK_THROWS_WITH_AS(solve_minimax(inst, 0), doctest::Contains("support condition"), Error);
}

TEST_CASE("count oracle forced splits") {
    Instance inst = make(1, {{1, 0}, {1, 0}, {0, 1}, {0, 1}});
    OracleCountsResult best = oracle_best_counts(inst.coeffs, 4);
    CHECK(best.best_sorted == std::vector<int>{2, 2});
}

TEST_CASE("count oracle finds (3,2) on the five-row fixture") {
    OracleCountsResult best = oracle_best_counts(kFiveRows.coeffs, 6);
    CHECK(best.best_sorted == std::vector<int>{3, 2});
    CHECK(counts(kFiveRows.coeffs, best.witness).sorted_descending() == std::vector<int>{3, 2});
}

TEST_CASE("count oracle with a single row") {
    Instance inst = make(1, {{1, 1}});
    OracleCountsResult best = oracle_best_counts(inst.coeffs, 5);
    CHECK(best.best_sorted == std::vector<int>{1, 0});
}

TEST_CASE("count oracle guards its inputs") {
    Instance big = make(1, {{1, 0, 0, 1}, {0, 1, 0, 1}});
    CHECK_THROWS_AS(oracle_best_counts(big.coeffs, 4), Error);
    CHECK_THROWS_AS(oracle_best_counts(kFiveRows.coeffs, 64), Error);
}

TEST_CASE("solve and the grid oracle both meet the guaranteed bound") {
    // Integer entries keep the weight-crossing values coarse, so a modest
    // grid resolves every admissible cell; the count bound additionally
    // needs the genericity hypothesis, hence the filter.
    SplitMix64 rng(31337);
    int tested = 0;
    for (int iter = 0; iter < 120; ++iter) {
        const int r = 1 + static_cast<int>(rng.below(3));
        const int q = r + static_cast<int>(rng.below(static_cast<std::uint64_t>(12 - r + 1)));
        Instance inst;
        inst.n = 1;
        inst.q = q;
        inst.r = r;
        inst.coeffs = Matrix(q, r);
        for (int i = 0; i < q; ++i) {
            inst.coeffs.at(i, static_cast<int>(rng.below(static_cast<std::uint64_t>(r)))) =
                Rational(static_cast<long>(rng.below(4)) + 1);
            for (int j = 0; j < r; ++j) {
                if (rng.below(3) != 0) inst.coeffs.at(i, j) = Rational(static_cast<long>(rng.below(4)) + 1);
            }
        }
        if (!check_support_condition(inst).pass) continue;
        if (!check_genericity(inst.coeffs).pass) continue;
        const long bound = guaranteed_min_count(q, r);
        SolveResult solved = solve_minimax(inst, static_cast<std::uint64_t>(iter));
        CHECK(solved.counts_perturbed.min() >= bound);
        OracleCountsResult best = oracle_best_counts(inst.coeffs, r <= 2 ? 16 : 8, 5);
        CHECK(best.best_sorted.back() >= bound);
        ++tested;
    }
    CHECK(tested >= 50);
}
