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

#include "core/generators.hpp"

#include <string>

#include "core/prng.hpp"

namespace conemm {

namespace {

Instance unit_row_instance(int n, int r, int copies) {
    Instance inst;
    inst.n = n;
    inst.r = r;
    inst.q = r * copies;
    inst.coeffs = Matrix(inst.q, inst.r);
    int row = 0;
    for (int j = 0; j < r; ++j) {
        for (int c = 0; c < copies; ++c, ++row) {
            inst.coeffs.at(row, j) = Rational(1);
        }
    }
    return inst;
}

/// Deterministic rational in [1/4, 4]: numerator in [ceil(d/4), 4d].
Rational draw_quarter_to_four(SplitMix64& rng) {
    const long d = static_cast<long>(rng.below(24)) + 1;
    const long lo = (d + 3) / 4;
    const long hi = 4 * d;
    const long p = lo + static_cast<long>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
    return Rational(p, d);
}

}  // namespace

Instance gen_conjbex(int n, int s) {
    if (n < 1 || s < 1) {
        throw Error(ErrorCode::invalid_argument, "conjbex family needs n >= 1 and s >= 1");
    }
    return unit_row_instance(n, s + 1, 2 * n);
}

Instance gen_conjaex(int n, int r) {
    if (n < 1 || r < 1 || r > n) {
        throw Error(ErrorCode::invalid_argument, "conjaex family needs 1 <= r <= n");
    }
    return unit_row_instance(n, r, n - r + 2);
}

Instance gen_appex(int n, std::uint64_t seed, int budget) {
    if (n < 1) {
        throw Error(ErrorCode::invalid_argument, "appex family needs n >= 1");
    }
    const int r = 3;
    const int per_pair = n + 2;
    static const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};

    SplitMix64 rng(seed ^ 0xa9e0c1d3f5a7b921ull);
    for (int attempt = 0; attempt < budget; ++attempt) {
        Instance inst;
        inst.n = n;
        inst.r = r;
        inst.q = 3 * per_pair;
        inst.coeffs = Matrix(inst.q, inst.r);
        int row = 0;
        for (const auto& pair : pairs) {
            for (int k = 0; k < per_pair; ++k, ++row) {
                inst.coeffs.at(row, pair[0]) = draw_quarter_to_four(rng);
                inst.coeffs.at(row, pair[1]) = draw_quarter_to_four(rng);
            }
        }
        if (check_support_condition(inst).pass && check_genericity(inst.coeffs).pass) {
            return inst;
        }
    }
    throw Error(ErrorCode::budget_exhausted,
                "appex generator failed to reach a generic instance after " + std::to_string(budget) +
                    " attempts (seed " + std::to_string(seed) + ")");
}

Instance gen_random(int n, int r, int q, std::uint64_t seed, const Rational& bound, int budget) {
    if (n < 1 || r < 1 || q < 1) {
        throw Error(ErrorCode::invalid_argument, "random family needs positive n, r, q");
    }
    if (bound < Rational(1)) {
        throw Error(ErrorCode::invalid_argument, "bound must be at least 1");
    }
    const Rational inv_bound = Rational(1) / bound;

    SplitMix64 rng(seed ^ 0x517cc1b727220a95ull);
    SupportReport last;
    for (int attempt = 0; attempt < budget; ++attempt) {
        Instance inst;
        inst.n = n;
        inst.r = r;
        inst.q = q;
        inst.coeffs = Matrix(q, r);
        for (int i = 0; i < q; ++i) {
            bool nonzero = false;
            for (int j = 0; j < r; ++j) {
                if (rng.below(4) == 0 && r > 1) continue;  // zero entry, density 3/4
                long num = static_cast<long>(rng.below(12)) + 1;
                long den = static_cast<long>(rng.below(12)) + 1;
                Rational value(num, den);
                if (value < inv_bound) value = inv_bound;
                if (value > bound) value = bound;
                inst.coeffs.at(i, j) = value;
                nonzero = true;
            }
            if (!nonzero) {
                inst.coeffs.at(i, static_cast<int>(rng.below(static_cast<std::uint64_t>(r)))) = Rational(1);
            }
        }
        last = check_support_condition(inst);
        if (last.pass) return inst;
    }
    std::string t = "{";
    for (std::size_t k = 0; k < last.witness_T.size(); ++k) {
        if (k) t += ",";
        t += "e" + std::to_string(last.witness_T[k] + 1);
    }
    t += "}";
    throw Error(ErrorCode::budget_exhausted,
                "random generator exhausted " + std::to_string(budget) +
                    " rejection attempts; last failing subset " + t + " with " + std::to_string(last.count) +
                    " rows against bound " + std::to_string(last.bound));
}

}  // namespace conemm
