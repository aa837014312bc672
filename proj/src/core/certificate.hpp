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
#include <optional>
#include <string>

#include "core/instance.hpp"
#include "core/minimax.hpp"
#include "core/rational.hpp"

namespace conemm {

/// Min/max envelopes of the perturbed entries and of the weights, with the
/// derived a-priori margin bound g1*g3 / (2*g2*g4). Diagnostic only; the
/// pipeline's delta comes from the exact achievable margin instead.
struct GammaDiagnostics {
    Rational g1, g2, g3, g4;
    Rational delta_bound;
};

GammaDiagnostics gamma_diagnostics(const PerturbedInstance& pert, const Weights& w);

/// The verifiable payload: weights b (the ample class in generator
/// coordinates), per-row constants c, and the margin delta.
struct CertificateData {
    RationalVector b;
    RationalVector c;
    Rational delta;
};

/// Full construction record: payload plus the perturbation used to build it.
struct Certificate {
    CertificateData data;
    Rational kappa;
    std::uint64_t seed = 0;
    PerturbedInstance pert;
    std::optional<GammaDiagnostics> gammas;
};

struct DeriveResult {
    bool ok = false;
    RationalVector c;
    Rational delta;       // delta_star / 2
    Rational delta_star;  // exact achievable margin on the unperturbed matrix
    int fail_j = -1;      // coordinate with nonpositive margin when !ok
};

/// c_i = min over nonzero perturbed entries of b_j / a'[i][j]; delta_star =
/// min_j (sum_i c_i a[i][j] - (n+1) b_j) / b_j on the unperturbed matrix.
/// Fails (ok = false) when delta_star <= 0, signalling that kappa is too
/// large for this instance.
DeriveResult derive_constants(const PerturbedInstance& pert, const Weights& w, int n);

struct VerifyResult {
    bool pass = true;
    std::string inequality;  // "positivity", "ii" or "iii" on failure
    int i = -1, j = -1;      // 0-based witness indices (-1 when not applicable)
    Rational lhs;            // violated left-hand side
};

/// Exact, zero-tolerance verification against the unperturbed matrix:
/// (i) positivity of b, c, delta; (ii) b_j - c_i a[i][j] >= 0 for all i, j;
/// (iii) sum_i c_i a[i][j] - (n+1+delta) b_j >= 0 for all j.
/// Fully independent of the construction path.
VerifyResult verify_certificate(const Instance& inst, int n, const CertificateData& cert);

/// Pipeline perturb -> solve -> derive, halving kappa on a nonpositive
/// margin (up to `budget` times). Requires the support condition and the
/// quasi-hyperbolicity threshold for (n, r, q). The result verifies.
Certificate build_certificate(const Instance& inst, int n, std::uint64_t seed,
                              const Rational& kappa0 = Rational(1, 16), int budget = 16,
                              const BalanceConfig& config = {});

struct ThresholdReport {
    bool quasi_hyperbolic_a = false;
    bool hyperbolic_b = false;
    bool quasi_hyperbolic_cm = false;
    bool hyperbolic_2 = false;
    bool cohen_macaulay = false;  // as supplied by the caller
    long required_a = 0;          // minimal q for each verdict at this (n, r)
    long required_b = 0;
    long required_cm = 0;
    long required_2 = 0;
};

/// Instantiates the four (n, r, q) thresholds. The Cohen-Macaulay verdict
/// additionally requires the caller-supplied flag; nothing is inferred.
ThresholdReport threshold_check(int n, int r, long q, bool cohen_macaulay);

}  // namespace conemm
