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

#include "core/instance.hpp"

#include <algorithm>
#include <bit>

#include "core/prng.hpp"

namespace conemm {

namespace {

std::vector<int> mask_to_indices(std::uint32_t mask, int r) {
    std::vector<int> out;
    for (int j = 0; j < r; ++j) {
        if (mask & (1u << j)) out.push_back(j);
    }
    return out;
}

}  // namespace

long block_bound(int q, int r) {
    if (r <= 0) {
        throw Error(ErrorCode::invalid_argument, "r must be positive");
    }
    return q / r;
}

ValidationReport validate_instance(const Instance& inst) {
    ValidationReport report;
    if (inst.r <= 0) report.violations.push_back("r must be positive");
    if (inst.q <= 0) report.violations.push_back("q must be positive");
    if (inst.coeffs.rows() != inst.q || inst.coeffs.cols() != inst.r) {
        report.violations.push_back("coefficient matrix shape does not match q x r");
        return report;
    }
    for (int i = 0; i < inst.q; ++i) {
        bool zero_row = true;
        for (int j = 0; j < inst.r; ++j) {
            const Rational& a = inst.coeffs.at(i, j);
            if (a.is_negative()) {
                report.violations.push_back("negative entry at row " + std::to_string(i + 1) +
                                            ", column " + std::to_string(j + 1));
            }
            if (!a.is_zero()) zero_row = false;
        }
        if (zero_row) {
            report.violations.push_back("row " + std::to_string(i + 1) + " is zero");
        }
    }
    return report;
}

SupportReport check_support_condition_with_bound(const Matrix& coeffs, long bound_per_generator, int max_r) {
    const int q = coeffs.rows();
    const int r = coeffs.cols();
    if (r <= 0 || r > max_r || r > 30) {
        throw Error(ErrorCode::guard_violation,
                    "support condition check requires 1 <= r <= " + std::to_string(std::min(max_r, 30)));
    }

    // Rows supported on T are counted with a subset-sum sweep over the
    // exact-support masks; cost O(q + r 2^r).
    const std::uint32_t full = (1u << r) - 1u;
    std::vector<long> supported(static_cast<std::size_t>(full) + 1, 0);
    for (int i = 0; i < q; ++i) {
        std::uint32_t mask = 0;
        for (int j = 0; j < r; ++j) {
            if (!coeffs.at(i, j).is_zero()) mask |= (1u << j);
        }
        supported[mask] += 1;
    }
    for (int j = 0; j < r; ++j) {
        for (std::uint32_t mask = 0; mask <= full; ++mask) {
            if (mask & (1u << j)) supported[mask] += supported[mask ^ (1u << j)];
        }
    }

    SupportReport report;
    std::vector<int> best;
    bool found = false;
    for (std::uint32_t mask = 0; mask < full; ++mask) {
        const long limit = static_cast<long>(std::popcount(mask)) * bound_per_generator;
        if (supported[mask] > limit) {
            std::vector<int> t = mask_to_indices(mask, r);
            if (!found || std::lexicographical_compare(t.begin(), t.end(), best.begin(), best.end())) {
                found = true;
                best = t;
                report.count = supported[mask];
                report.bound = limit;
            }
        }
    }
    if (found) {
        report.pass = false;
        report.witness_T = best;
    }
    return report;
}

SupportReport check_support_condition(const Instance& inst, int max_r) {
    if (inst.coeffs.rows() != inst.q || inst.coeffs.cols() != inst.r) {
        throw Error(ErrorCode::invalid_argument, "instance shape mismatch");
    }
    return check_support_condition_with_bound(inst.coeffs, block_bound(inst.q, inst.r), max_r);
}

GenericityReport check_genericity(const Matrix& coeffs) {
    const int q = coeffs.rows();
    const int r = coeffs.cols();
    for (int i = 0; i < q; ++i) {
        for (int i2 = i + 1; i2 < q; ++i2) {
            for (int j = 0; j < r; ++j) {
                for (int j2 = j + 1; j2 < r; ++j2) {
                    Rational lhs = coeffs.at(i, j) * coeffs.at(i2, j2);
                    Rational rhs = coeffs.at(i, j2) * coeffs.at(i2, j);
                    if (lhs == rhs && !lhs.is_zero()) {
                        return GenericityReport{false, i, i2, j, j2};
                    }
                }
            }
        }
    }
    return GenericityReport{};
}

PerturbedInstance trivial_perturbation(const Instance& inst, const Rational& kappa, std::uint64_t seed) {
    PerturbedInstance pert;
    pert.base = inst;
    pert.kappa = kappa;
    pert.alphas = Matrix(inst.q, inst.r);
    pert.perturbed = inst.coeffs;
    pert.seed = seed;
    pert.attempts = 0;
    return pert;
}

PerturbedInstance perturb(const Instance& inst, const Rational& kappa, std::uint64_t seed, int budget) {
    ValidationReport validation = validate_instance(inst);
    if (!validation.ok()) {
        throw Error(ErrorCode::invalid_argument, "invalid instance: " + validation.violations.front());
    }
    if (!kappa.is_positive() || kappa > Rational(1)) {
        throw Error(ErrorCode::invalid_argument, "kappa must lie in (0, 1]");
    }

    if (check_genericity(inst.coeffs).pass) {
        return trivial_perturbation(inst, kappa, seed);
    }

    const std::size_t cells = static_cast<std::size_t>(inst.q) * static_cast<std::size_t>(inst.r);
    const std::size_t base_index = static_cast<std::size_t>(seed % 997) + 1;
    for (int attempt = 0; attempt < budget; ++attempt) {
        std::vector<std::uint64_t> primes =
            primes_from_index(base_index + static_cast<std::size_t>(attempt) * cells, cells);
        PerturbedInstance pert;
        pert.base = inst;
        pert.kappa = kappa;
        pert.alphas = Matrix(inst.q, inst.r);
        pert.perturbed = inst.coeffs;
        pert.seed = seed;
        pert.attempts = attempt + 1;
        std::size_t cell = 0;
        for (int i = 0; i < inst.q; ++i) {
            for (int j = 0; j < inst.r; ++j, ++cell) {
                const Rational& a = inst.coeffs.at(i, j);
                if (a.is_zero()) continue;  // zero pattern is preserved exactly
                Rational theta = Rational(1) / Rational(static_cast<long>(primes[cell]));
                Rational alpha = kappa * theta * a;
                pert.alphas.at(i, j) = alpha;
                pert.perturbed.at(i, j) = a + alpha;
            }
        }
        if (check_genericity(pert.perturbed).pass) {
            return pert;
        }
    }
    throw Error(ErrorCode::budget_exhausted,
                "perturbation failed to reach a generic matrix after " + std::to_string(budget) +
                    " attempts (seed " + std::to_string(seed) + ")");
}

}  // namespace conemm
