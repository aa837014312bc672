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

#include "core/rational.hpp"

namespace conemm {

/// A family of q divisor classes written in a basis of r nef generators:
/// row i holds the non-negative coordinates of the i-th class. n is the
/// ambient dimension; 0 means "not specified" (external files may omit it).
struct Instance {
    int n = 0;
    int r = 0;
    int q = 0;
    Matrix coeffs;  // q x r
};

struct ValidationReport {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// Structural checks only: q, r >= 1, no negative entries, no zero rows.
ValidationReport validate_instance(const Instance& inst);

struct SupportReport {
    bool pass = true;
    std::vector<int> witness_T;  // 0-based generator indices, ascending
    long count = 0;              // rows supported on witness_T
    long bound = 0;              // allowed maximum (#T * block_bound)
};

/// Checks that every proper subset T of the generator set supports at most
/// (#T) * floor(q/r) of the rows (row "supported on T": zero outside T).
/// On failure reports the lexicographically smallest violating T.
/// Enumerates all 2^r - 1 proper subsets, so r is capped (default 24).
SupportReport check_support_condition(const Instance& inst, int max_r = 24);

/// Same check against an explicit per-generator bound instead of floor(q/r).
SupportReport check_support_condition_with_bound(const Matrix& coeffs, long block_bound, int max_r = 24);

struct GenericityReport {
    bool pass = true;
    int i = -1, i2 = -1, j = -1, j2 = -1;  // 0-based witness quadruple
};

/// Checks the pairwise 2x2 minor condition: for all i != i', j != j',
/// a[i][j]*a[i'][j'] - a[i][j']*a[i'][j] != 0 unless both products vanish.
GenericityReport check_genericity(const Matrix& coeffs);

/// An instance together with a multiplicative perturbation that makes the
/// coefficient matrix generic while preserving the exact zero pattern:
/// perturbed[i][j] = coeffs[i][j] + alphas[i][j], alphas[i][j] = 0 iff
/// coeffs[i][j] = 0, and alphas[i][j] <= kappa * coeffs[i][j].
struct PerturbedInstance {
    Instance base;
    Rational kappa;
    Matrix alphas;
    Matrix perturbed;
    std::uint64_t seed = 0;
    int attempts = 0;  // 0 means the base was already generic (alphas = 0)
};

/// Wraps an already-generic instance with a zero perturbation record.
PerturbedInstance trivial_perturbation(const Instance& inst, const Rational& kappa, std::uint64_t seed);

/// Perturbs each nonzero entry by kappa/p (p a fresh prime per cell, drawn
/// deterministically from the seed) until the matrix is generic. Retries with
/// a fresh prime window up to `budget` times. If the base matrix is already
/// generic the zero perturbation is returned unchanged.
PerturbedInstance perturb(const Instance& inst, const Rational& kappa, std::uint64_t seed, int budget = 32);

/// floor(q/r) block bound used by the support condition and the partition.
long block_bound(int q, int r);

}  // namespace conemm
