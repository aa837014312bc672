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

#include "core/certificate.hpp"

#include <optional>

namespace conemm {

GammaDiagnostics gamma_diagnostics(const PerturbedInstance& pert, const Weights& w) {
    std::optional<Rational> lo, hi;
    for (int i = 0; i < pert.perturbed.rows(); ++i) {
        for (int j = 0; j < pert.perturbed.cols(); ++j) {
            const Rational& a = pert.perturbed.at(i, j);
            if (a.is_zero()) continue;
            if (!lo || a < *lo) lo = a;
            if (!hi || a > *hi) hi = a;
        }
    }
    if (!lo || w.b.empty()) {
        throw Error(ErrorCode::invalid_argument, "gamma diagnostics need a nonzero matrix and weights");
    }
    Rational wlo = w.b.front(), whi = w.b.front();
    for (const Rational& b : w.b) {
        if (b < wlo) wlo = b;
        if (b > whi) whi = b;
    }
    GammaDiagnostics g;
    g.g1 = *lo / Rational(2);
    g.g2 = *hi * Rational(2);
    g.g3 = wlo / Rational(2);
    g.g4 = whi * Rational(2);
    g.delta_bound = (g.g1 * g.g3) / (Rational(2) * g.g2 * g.g4);
    return g;
}

DeriveResult derive_constants(const PerturbedInstance& pert, const Weights& w, int n) {
    const int q = pert.base.q;
    const int r = pert.base.r;
    if (w.size() != r) {
        throw Error(ErrorCode::invalid_argument, "weight length does not match generator count");
    }
    if (n < 1) {
        throw Error(ErrorCode::invalid_argument, "dimension n must be positive");
    }

    DeriveResult result;
    result.c.reserve(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) {
        std::optional<Rational> ci;
        for (int j = 0; j < r; ++j) {
            const Rational& a = pert.perturbed.at(i, j);
            if (a.is_zero()) continue;
            Rational ratio = w.b[static_cast<std::size_t>(j)] / a;
            if (!ci || ratio < *ci) ci = ratio;
        }
        if (!ci) {
            throw Error(ErrorCode::invalid_argument, "zero row while deriving constants");
        }
        result.c.push_back(*ci);
    }

    // Exact achievable margin, measured on the unperturbed matrix.
    std::optional<Rational> delta_star;
    int arg_j = -1;
    const Rational n_plus_one(static_cast<long>(n) + 1);
    for (int j = 0; j < r; ++j) {
        Rational sum;
        for (int i = 0; i < q; ++i) {
            sum += result.c[static_cast<std::size_t>(i)] * pert.base.coeffs.at(i, j);
        }
        Rational margin = (sum - n_plus_one * w.b[static_cast<std::size_t>(j)]) / w.b[static_cast<std::size_t>(j)];
        if (!delta_star || margin < *delta_star) {
            delta_star = margin;
            arg_j = j;
        }
    }
    result.delta_star = *delta_star;
    if (!result.delta_star.is_positive()) {
        result.ok = false;
        result.fail_j = arg_j;
        return result;
    }
    result.ok = true;
    result.delta = result.delta_star / Rational(2);
    return result;
}

VerifyResult verify_certificate(const Instance& inst, int n, const CertificateData& cert) {
    const int q = inst.q;
    const int r = inst.r;
    if (static_cast<int>(cert.b.size()) != r || static_cast<int>(cert.c.size()) != q) {
        throw Error(ErrorCode::invalid_argument, "certificate size does not match the instance");
    }
    if (n < 1) {
        throw Error(ErrorCode::invalid_argument, "dimension n must be positive");
    }

    for (int j = 0; j < r; ++j) {
        if (!cert.b[static_cast<std::size_t>(j)].is_positive()) {
            return VerifyResult{false, "positivity", -1, j, cert.b[static_cast<std::size_t>(j)]};
        }
    }
    for (int i = 0; i < q; ++i) {
        if (!cert.c[static_cast<std::size_t>(i)].is_positive()) {
            return VerifyResult{false, "positivity", i, -1, cert.c[static_cast<std::size_t>(i)]};
        }
    }
    if (!cert.delta.is_positive()) {
        return VerifyResult{false, "positivity", -1, -1, cert.delta};
    }

    // (ii): every A - c_i D_i stays coordinatewise nonnegative.
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < r; ++j) {
            Rational lhs = cert.b[static_cast<std::size_t>(j)] -
                           cert.c[static_cast<std::size_t>(i)] * inst.coeffs.at(i, j);
            if (lhs.is_negative()) {
                return VerifyResult{false, "ii", i, j, lhs};
            }
        }
    }

    // (iii): sum c_i D_i - (n+1+delta) A stays coordinatewise nonnegative.
    const Rational factor = Rational(static_cast<long>(n) + 1) + cert.delta;
    for (int j = 0; j < r; ++j) {
        Rational sum;
        for (int i = 0; i < q; ++i) {
            sum += cert.c[static_cast<std::size_t>(i)] * inst.coeffs.at(i, j);
        }
        Rational lhs = sum - factor * cert.b[static_cast<std::size_t>(j)];
        if (lhs.is_negative()) {
            return VerifyResult{false, "iii", -1, j, lhs};
        }
    }
    return VerifyResult{};
}

Certificate build_certificate(const Instance& inst, int n, std::uint64_t seed, const Rational& kappa0,
                              int budget, const BalanceConfig& config) {
    ValidationReport validation = validate_instance(inst);
    if (!validation.ok()) {
        throw Error(ErrorCode::invalid_argument, "invalid instance: " + validation.violations.front());
    }
    if (n < 1) {
        throw Error(ErrorCode::invalid_argument, "dimension n must be positive");
    }
    ThresholdReport thresholds = threshold_check(n, inst.r, inst.q, false);
    if (!thresholds.quasi_hyperbolic_a) {
        throw Error(ErrorCode::hypothesis_failed,
                    "q = " + std::to_string(inst.q) + " is below the certificate threshold " +
                        std::to_string(thresholds.required_a) + " for n = " + std::to_string(n) +
                        ", r = " + std::to_string(inst.r));
    }

    Rational kappa = kappa0;
    for (int attempt = 0; attempt < budget; ++attempt, kappa /= Rational(2)) {
        SolveResult solved = solve_minimax(inst, seed, kappa, config);
        DeriveResult derived = derive_constants(solved.pert, solved.w, n);
        if (!derived.ok) continue;  // margin nonpositive: kappa too coarse, halve and retry

        Certificate cert;
        cert.data.b = solved.w.b;
        cert.data.c = derived.c;
        cert.data.delta = derived.delta;
        cert.kappa = kappa;
        cert.seed = seed;
        cert.pert = solved.pert;
        cert.gammas = gamma_diagnostics(solved.pert, solved.w);
        if (VerifyResult check = verify_certificate(inst, n, cert.data); !check.pass) {
            throw Error(ErrorCode::internal_error,
                        "constructed certificate failed verification at inequality " + check.inequality);
        }
        return cert;
    }
    throw Error(ErrorCode::budget_exhausted,
                "margin stayed nonpositive after " + std::to_string(budget) + " kappa halvings");
}

ThresholdReport threshold_check(int n, int r, long q, bool cohen_macaulay) {
    if (n < 1 || r < 1 || q < 1) {
        throw Error(ErrorCode::invalid_argument, "threshold check needs positive n, r, q");
    }
    ThresholdReport report;
    report.cohen_macaulay = cohen_macaulay;
    const long ln = n, lr = r;
    report.required_a = (r <= 2) ? lr * (ln + 1) + 1 : lr * (ln + 1) + (lr - 1) * (lr - 2) / 2;
    report.required_b = 2 * ln * lr + lr * lr;
    report.required_cm = 2 * ln * lr;
    report.required_2 = 2 * ln * ln * lr;
    report.quasi_hyperbolic_a = q >= report.required_a;
    report.hyperbolic_b = q >= report.required_b;
    report.quasi_hyperbolic_cm = cohen_macaulay && n >= 2 && q >= report.required_cm;
    report.hyperbolic_2 = n >= 2 && q >= report.required_2;
    return report;
}

}  // namespace conemm
