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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/instance.hpp"
#include "core/rational.hpp"

namespace conemm {

/// Strictly positive weight vector (b_1, ..., b_r) over the generators.
struct Weights {
    RationalVector b;

    int size() const { return static_cast<int>(b.size()); }
};

/// For each generator j, the number of rows whose minimal weighted ratio
/// b_l / a[i][l] is attained at l = j. A row attaining the minimum at
/// several coordinates increments each of them and sets had_ties.
struct CountVector {
    std::vector<int> counts;
    bool had_ties = false;

    long sum() const;
    int min() const;
    std::vector<int> sorted_descending() const;

    friend bool operator==(const CountVector& a, const CountVector& b) {
        return a.counts == b.counts && a.had_ties == b.had_ties;
    }
};

CountVector counts(const Matrix& coeffs, const Weights& w);

struct AdmissibleReport {
    bool pass = true;
    std::string reason;  // human-readable witness on failure
};

/// Membership in the admissible set: (1) within each row the nonzero values
/// a[i][j]/b_j are pairwise distinct, and (2) over all rows, the ratios of
/// distinct nonzero values never coincide between different (row, column
/// pair) items. Tie-free counting is exactly membership here.
AdmissibleReport in_admissible_set(const Matrix& coeffs, const Weights& w);

/// A starting point inside the admissible set: (1,...,1) when that already
/// qualifies, otherwise 1 + 1/p offsets over fresh primes, retried up to
/// `budget` times. Requires a generic matrix.
Weights initial_weights(const Matrix& coeffs, std::uint64_t seed, int budget = 32);

struct BalanceConfig {
    long max_iterations = 0;  // 0: defaults to q*q*r
    int epsilon_budget = 32;  // halvings allowed when picking the post-crossing step
};

struct BalanceResult {
    Weights w;
    int iterations = 0;
    /// Sorted-descending count vector after each accepted move; strictly
    /// lexicographically decreasing.
    std::vector<std::vector<int>> trace;
};

/// Flattens the count profile by scaling up the high-count coordinates past
/// the smallest weight crossing, one row transfer at a time, until adjacent
/// sorted counts differ by at most 1. Requires w inside the admissible set;
/// the result is again admissible and satisfies
/// min_j counts[j] >= q/r - (r-1)/2.
BalanceResult balance(const Matrix& coeffs, const Weights& start, const BalanceConfig& config = {});

/// Compresses weight ratios to within (2M)^r, M the largest ratio of nonzero
/// matrix entries, without decreasing any count. Single sweep over the
/// sorted coordinates.
Weights repair_ratios(const Matrix& coeffs, const Weights& w);

struct SolveResult {
    Weights w;
    PerturbedInstance pert;
    CountVector counts_perturbed;    // tie-free by construction
    CountVector counts_unperturbed;  // diagnostics; may contain ties
    int balance_iterations = 0;
};

/// Full pipeline: perturb (a no-op for generic matrices), pick admissible
/// start, balance, repair. The returned weights satisfy the count bound on
/// the perturbed matrix and the ratio bound with the perturbed matrix's M.
SolveResult solve_minimax(const Instance& inst, std::uint64_t seed,
                          const Rational& kappa = Rational(1, 16),
                          const BalanceConfig& config = {});

/// ceil(q/r - (r-1)/2): the guaranteed lower bound on every count.
long guaranteed_min_count(int q, int r);

/// Largest ratio of two nonzero entries (>= 1); used by the ratio bound.
Rational max_entry_ratio(const Matrix& coeffs);

struct OracleCountsResult {
    std::vector<int> best_sorted;  // descending
    Weights witness;
};

/// Exhaustive grid probe: weights with b_1 = 1 and the other coordinates
/// ranging over {p/d : d <= denominator_bound, p/d <= value_bound}, returning
/// the lexicographically smallest sorted-descending count vector seen.
/// Guarded to r <= 3, q <= 12, denominator_bound <= 32.
OracleCountsResult oracle_best_counts(const Matrix& coeffs, int denominator_bound, int value_bound = 3);

}  // namespace conemm
