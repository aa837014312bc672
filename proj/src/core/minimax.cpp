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

#include "core/minimax.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "core/prng.hpp"

namespace conemm {

namespace {

void require_positive_weights(const Matrix& coeffs, const Weights& w) {
    if (w.size() != coeffs.cols()) {
        throw Error(ErrorCode::invalid_argument, "weight length does not match generator count");
    }
    for (const Rational& b : w.b) {
        if (!b.is_positive()) {
            throw Error(ErrorCode::invalid_argument, "weights must be strictly positive");
        }
    }
}

void require_nonnegative(const Matrix& coeffs) {
    for (int i = 0; i < coeffs.rows(); ++i) {
        for (int j = 0; j < coeffs.cols(); ++j) {
            if (coeffs.at(i, j).is_negative()) {
                throw Error(ErrorCode::invalid_argument, "negative coefficient entry");
            }
        }
    }
}

/// Index of the minimal ratio b_j / a[i][j] in row i; the minimum is unique
/// for admissible weights. Returns -1 for an all-zero row.
int row_argmin(const Matrix& coeffs, const Weights& w, int i) {
    int best = -1;
    RatioValue best_value = RatioValue::infinity();
    for (int j = 0; j < coeffs.cols(); ++j) {
        RatioValue v = RatioValue::of(w.b[static_cast<std::size_t>(j)], coeffs.at(i, j));
        if (best == -1 || v < best_value) {
            best = j;
            best_value = v;
        }
    }
    if (best >= 0 && best_value.is_infinite()) return -1;
    return best;
}

}  // namespace

long CountVector::sum() const {
    return std::accumulate(counts.begin(), counts.end(), 0l);
}

int CountVector::min() const {
    if (counts.empty()) {
        throw Error(ErrorCode::internal_error, "empty count vector");
    }
    return *std::min_element(counts.begin(), counts.end());
}

std::vector<int> CountVector::sorted_descending() const {
    std::vector<int> sorted = counts;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    return sorted;
}

CountVector counts(const Matrix& coeffs, const Weights& w) {
    require_positive_weights(coeffs, w);
    require_nonnegative(coeffs);
    const int q = coeffs.rows();
    const int r = coeffs.cols();
    CountVector cv;
    cv.counts.assign(static_cast<std::size_t>(r), 0);
    for (int i = 0; i < q; ++i) {
        RatioValue best = RatioValue::infinity();
        for (int j = 0; j < r; ++j) {
            RatioValue v = RatioValue::of(w.b[static_cast<std::size_t>(j)], coeffs.at(i, j));
            if (v < best) best = v;
        }
        if (best.is_infinite()) continue;  // zero row: contributes nowhere
        int attained = 0;
        for (int j = 0; j < r; ++j) {
            RatioValue v = RatioValue::of(w.b[static_cast<std::size_t>(j)], coeffs.at(i, j));
            if (v == best) {
                cv.counts[static_cast<std::size_t>(j)] += 1;
                attained += 1;
            }
        }
        if (attained > 1) cv.had_ties = true;
    }
    return cv;
}

AdmissibleReport in_admissible_set(const Matrix& coeffs, const Weights& w) {
    require_positive_weights(coeffs, w);
    require_nonnegative(coeffs);
    const int q = coeffs.rows();
    const int r = coeffs.cols();

    // Condition (1): per row, the nonzero values a[i][j]/b_j are distinct.
    std::vector<std::pair<Rational, int>> row_values;
    for (int i = 0; i < q; ++i) {
        row_values.clear();
        for (int j = 0; j < r; ++j) {
            if (!coeffs.at(i, j).is_zero()) {
                row_values.emplace_back(coeffs.at(i, j) / w.b[static_cast<std::size_t>(j)], j);
            }
        }
        std::sort(row_values.begin(), row_values.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t k = 1; k < row_values.size(); ++k) {
            if (row_values[k].first == row_values[k - 1].first) {
                return AdmissibleReport{false,
                                        "row " + std::to_string(i + 1) + ": equal weighted coordinates at columns " +
                                            std::to_string(row_values[k - 1].second + 1) + " and " +
                                            std::to_string(row_values[k].second + 1)};
            }
        }
    }

    // Condition (2): the ratios of distinct nonzero weighted coordinates,
    // over all rows and ordered column pairs, never coincide between two
    // different (row, unordered pair) items.
    struct RatioItem {
        Rational value;
        int i, lo, hi;
    };
    std::vector<RatioItem> items;
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < r; ++j) {
            if (coeffs.at(i, j).is_zero()) continue;
            for (int j2 = 0; j2 < r; ++j2) {
                if (j2 == j || coeffs.at(i, j2).is_zero()) continue;
                Rational value = (coeffs.at(i, j) * w.b[static_cast<std::size_t>(j2)]) /
                                 (coeffs.at(i, j2) * w.b[static_cast<std::size_t>(j)]);
                items.push_back(RatioItem{value, i, std::min(j, j2), std::max(j, j2)});
            }
        }
    }
    std::sort(items.begin(), items.end(), [](const RatioItem& a, const RatioItem& b) {
        if (a.value != b.value) return a.value < b.value;
        if (a.i != b.i) return a.i < b.i;
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.hi < b.hi;
    });
    for (std::size_t k = 1; k < items.size(); ++k) {
        const RatioItem& a = items[k - 1];
        const RatioItem& b = items[k];
        if (a.value == b.value && (a.i != b.i || a.lo != b.lo || a.hi != b.hi)) {
            return AdmissibleReport{false,
                                    "coinciding coordinate ratios: row " + std::to_string(a.i + 1) + " columns {" +
                                        std::to_string(a.lo + 1) + "," + std::to_string(a.hi + 1) + "} vs row " +
                                        std::to_string(b.i + 1) + " columns {" + std::to_string(b.lo + 1) + "," +
                                        std::to_string(b.hi + 1) + "}"};
        }
    }
    return AdmissibleReport{};
}

Weights initial_weights(const Matrix& coeffs, std::uint64_t seed, int budget) {
    GenericityReport generic = check_genericity(coeffs);
    if (!generic.pass) {
        throw Error(ErrorCode::hypothesis_failed,
                    "matrix is not generic (rows " + std::to_string(generic.i + 1) + "," +
                        std::to_string(generic.i2 + 1) + ", columns " + std::to_string(generic.j + 1) + "," +
                        std::to_string(generic.j2 + 1) + "); the admissible set may be empty");
    }
    const int r = coeffs.cols();

    Weights ones;
    ones.b.assign(static_cast<std::size_t>(r), Rational(1));
    if (in_admissible_set(coeffs, ones).pass) return ones;

    const std::size_t base_index = static_cast<std::size_t>(seed % 997) + 1;
    for (int attempt = 0; attempt < budget; ++attempt) {
        std::vector<std::uint64_t> primes = primes_from_index(
            base_index + static_cast<std::size_t>(attempt) * static_cast<std::size_t>(r),
            static_cast<std::size_t>(r));
        Weights w;
        w.b.reserve(static_cast<std::size_t>(r));
        for (int j = 0; j < r; ++j) {
            w.b.push_back(Rational(1) + Rational(1) / Rational(static_cast<long>(primes[static_cast<std::size_t>(j)])));
        }
        if (in_admissible_set(coeffs, w).pass) return w;
    }
    throw Error(ErrorCode::budget_exhausted,
                "no admissible starting weights found after " + std::to_string(budget) + " attempts");
}

namespace {

struct Crossing {
    Rational lambda;
    int row;
    int from;  // current argmin, inside the scaled block
    int to;    // landing coordinate, outside the scaled block
};

}  // namespace

BalanceResult balance(const Matrix& coeffs, const Weights& start, const BalanceConfig& config) {
    const int q = coeffs.rows();
    const int r = coeffs.cols();
    if (AdmissibleReport rep = in_admissible_set(coeffs, start); !rep.pass) {
        throw Error(ErrorCode::invalid_argument, "starting weights not admissible: " + rep.reason);
    }
    const long max_iterations =
        config.max_iterations > 0 ? config.max_iterations : static_cast<long>(q) * q * r;

    BalanceResult result;
    result.w = start;

    while (true) {
        CountVector cv = counts(coeffs, result.w);
        if (cv.had_ties) {
            throw Error(ErrorCode::internal_error, "tied counts on admissible weights");
        }

        std::vector<int> order(static_cast<std::size_t>(r));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (cv.counts[static_cast<std::size_t>(a)] != cv.counts[static_cast<std::size_t>(b)])
                return cv.counts[static_cast<std::size_t>(a)] > cv.counts[static_cast<std::size_t>(b)];
            return a < b;
        });

        // Smallest position whose sorted gap is at least 2.
        int gap_pos = -1;
        for (int pos = 0; pos + 1 < r; ++pos) {
            if (cv.counts[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] -
                    cv.counts[static_cast<std::size_t>(order[static_cast<std::size_t>(pos + 1)])] >=
                2) {
                gap_pos = pos;
                break;
            }
        }
        if (gap_pos < 0) return result;

        if (result.iterations >= max_iterations) {
            throw Error(ErrorCode::budget_exhausted,
                        "balance exceeded the iteration cap of " + std::to_string(max_iterations));
        }

        std::vector<bool> high(static_cast<std::size_t>(r), false);
        for (int pos = 0; pos <= gap_pos; ++pos) high[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] = true;

        // Scaling the high block by lambda > 1 moves one row's minimum into
        // the low block at each crossing value; enumerate them all.
        std::vector<Crossing> crossings;
        for (int i = 0; i < q; ++i) {
            int from = row_argmin(coeffs, result.w, i);
            if (from < 0 || !high[static_cast<std::size_t>(from)]) continue;
            int to = -1;
            RatioValue low_min = RatioValue::infinity();
            for (int j = 0; j < r; ++j) {
                if (high[static_cast<std::size_t>(j)] || coeffs.at(i, j).is_zero()) continue;
                RatioValue v = RatioValue::of(result.w.b[static_cast<std::size_t>(j)], coeffs.at(i, j));
                if (v < low_min) {
                    low_min = v;
                    to = j;
                }
            }
            if (to < 0) continue;  // row supported on the high block
            Rational lambda = low_min.value() * coeffs.at(i, from) / result.w.b[static_cast<std::size_t>(from)];
            crossings.push_back(Crossing{lambda, i, from, to});
        }
        if (crossings.empty()) {
            throw Error(ErrorCode::hypothesis_failed,
                        "stuck at a count gap: every row minimizing on the high block is supported "
                        "on it (support condition violated)");
        }
        std::sort(crossings.begin(), crossings.end(), [](const Crossing& a, const Crossing& b) {
            if (a.lambda != b.lambda) return a.lambda < b.lambda;
            return a.row < b.row;
        });
        const Crossing& move = crossings.front();
        std::optional<Rational> next_lambda;
        for (const Crossing& c : crossings) {
            if (c.lambda > move.lambda) {
                next_lambda = c.lambda;
                break;
            }
        }

        CountVector expected = cv;
        expected.counts[static_cast<std::size_t>(move.from)] -= 1;
        expected.counts[static_cast<std::size_t>(move.to)] += 1;

        // Step just past the crossing: half the gap to the next crossing,
        // halved further until the point is admissible again.
        Rational epsilon = next_lambda ? (*next_lambda - move.lambda) / Rational(2) : Rational(1, 2);
        bool accepted = false;
        for (int attempt = 0; attempt < config.epsilon_budget; ++attempt, epsilon /= Rational(2)) {
            Rational factor = move.lambda + epsilon;
            Weights candidate = result.w;
            for (int j = 0; j < r; ++j) {
                if (high[static_cast<std::size_t>(j)]) candidate.b[static_cast<std::size_t>(j)] *= factor;
            }
            if (!in_admissible_set(coeffs, candidate).pass) continue;
            if (!(counts(coeffs, candidate) == expected)) continue;
            result.w = std::move(candidate);
            accepted = true;
            break;
        }
        if (!accepted) {
            throw Error(ErrorCode::budget_exhausted, "no admissible step past the crossing found");
        }
        result.iterations += 1;
        result.trace.push_back(expected.sorted_descending());
    }
}

Rational max_entry_ratio(const Matrix& coeffs) {
    std::optional<Rational> lo, hi;
    for (int i = 0; i < coeffs.rows(); ++i) {
        for (int j = 0; j < coeffs.cols(); ++j) {
            const Rational& a = coeffs.at(i, j);
            if (a.is_zero()) continue;
            if (!lo || a < *lo) lo = a;
            if (!hi || a > *hi) hi = a;
        }
    }
    if (!lo) {
        throw Error(ErrorCode::invalid_argument, "matrix has no nonzero entries");
    }
    return *hi / *lo;
}

Weights repair_ratios(const Matrix& coeffs, const Weights& w) {
    require_positive_weights(coeffs, w);
    const int r = coeffs.cols();
    if (r <= 1) return w;

    const Rational m = max_entry_ratio(coeffs);
    const Rational two_m = Rational(2) * m;

    // Factors strictly inside (1, 2); the first that keeps every count is taken.
    static const std::pair<long, long> kFactors[] = {{3, 2},   {5, 4},   {7, 4},   {9, 8},
                                                     {11, 8},  {13, 8},  {15, 8},  {17, 16},
                                                     {19, 16}, {21, 16}, {23, 16}, {25, 16},
                                                     {27, 16}, {29, 16}, {31, 16}, {33, 32}};

    CountVector floor_counts = counts(coeffs, w);
    Weights out = w;

    std::vector<int> order(static_cast<std::size_t>(r));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (out.b[static_cast<std::size_t>(a)] != out.b[static_cast<std::size_t>(b)])
            return out.b[static_cast<std::size_t>(a)] < out.b[static_cast<std::size_t>(b)];
        return a < b;
    });

    for (int pos = 0; pos + 1 < r; ++pos) {
        const Rational& lo = out.b[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])];
        const Rational& hi = out.b[static_cast<std::size_t>(order[static_cast<std::size_t>(pos + 1)])];
        if (hi / lo <= two_m) continue;
        Rational base = (lo / hi) * m;  // open interval for the shrink factor: (base, 2*base)
        bool applied = false;
        for (const auto& [num, den] : kFactors) {
            Rational lambda = base * Rational(num, den);
            Weights candidate = out;
            for (int p2 = pos + 1; p2 < r; ++p2) {
                candidate.b[static_cast<std::size_t>(order[static_cast<std::size_t>(p2)])] *= lambda;
            }
            CountVector after = counts(coeffs, candidate);
            bool monotone = true;
            for (int j = 0; j < r; ++j) {
                if (after.counts[static_cast<std::size_t>(j)] < floor_counts.counts[static_cast<std::size_t>(j)]) {
                    monotone = false;
                    break;
                }
            }
            if (!monotone) continue;
            out = std::move(candidate);
            floor_counts = std::move(after);
            applied = true;
            break;
        }
        if (!applied) {
            throw Error(ErrorCode::internal_error, "ratio repair could not pick a count-preserving factor");
        }
    }
    return out;
}

long guaranteed_min_count(int q, int r) {
    if (q <= 0 || r <= 0) {
        throw Error(ErrorCode::invalid_argument, "q and r must be positive");
    }
    const long num = 2l * q - static_cast<long>(r) * (r - 1);
    const long den = 2l * r;
    long c = num / den;
    if (num % den != 0 && num > 0) c += 1;
    return c;
}

SolveResult solve_minimax(const Instance& inst, std::uint64_t seed, const Rational& kappa,
                          const BalanceConfig& config) {
    ValidationReport validation = validate_instance(inst);
    if (!validation.ok()) {
        throw Error(ErrorCode::invalid_argument, "invalid instance: " + validation.violations.front());
    }
    SupportReport support = check_support_condition(inst);
    if (!support.pass) {
        std::string t = "{";
        for (std::size_t k = 0; k < support.witness_T.size(); ++k) {
            if (k) t += ",";
            t += "e" + std::to_string(support.witness_T[k] + 1);
        }
        t += "}";
        throw Error(ErrorCode::hypothesis_failed,
                    "support condition fails: " + std::to_string(support.count) + " rows supported on " + t +
                        " exceed the bound " + std::to_string(support.bound));
    }

    SolveResult result;
    result.pert = perturb(inst, kappa, seed);
    Weights start = initial_weights(result.pert.perturbed, seed);
    BalanceResult balanced = balance(result.pert.perturbed, start, config);
    result.w = repair_ratios(result.pert.perturbed, balanced.w);
    result.balance_iterations = balanced.iterations;
    result.counts_perturbed = counts(result.pert.perturbed, result.w);
    result.counts_unperturbed = counts(inst.coeffs, result.w);

    if (result.counts_perturbed.min() < guaranteed_min_count(inst.q, inst.r)) {
        throw Error(ErrorCode::internal_error, "count bound violated after balancing");
    }
    return result;
}

OracleCountsResult oracle_best_counts(const Matrix& coeffs, int denominator_bound, int value_bound) {
    const int q = coeffs.rows();
    const int r = coeffs.cols();
    if (r < 1 || r > 3 || q > 12 || denominator_bound < 1 || denominator_bound > 32 || value_bound < 1) {
        throw Error(ErrorCode::guard_violation,
                    "count oracle guarded to r <= 3, q <= 12, denominator_bound <= 32");
    }
    require_nonnegative(coeffs);

    std::vector<Rational> values;
    for (long d = 1; d <= denominator_bound; ++d) {
        for (long p = 1; p <= d * value_bound; ++p) {
            values.push_back(Rational(p, d));
        }
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    OracleCountsResult best;
    std::vector<std::size_t> pick(static_cast<std::size_t>(r > 0 ? r - 1 : 0), 0);
    while (true) {
        Weights w;
        w.b.push_back(Rational(1));
        for (std::size_t k = 0; k < pick.size(); ++k) w.b.push_back(values[pick[k]]);
        std::vector<int> sorted = counts(coeffs, w).sorted_descending();
        if (best.best_sorted.empty() ||
            std::lexicographical_compare(sorted.begin(), sorted.end(), best.best_sorted.begin(),
                                         best.best_sorted.end())) {
            best.best_sorted = sorted;
            best.witness = w;
        }
        // odometer over the value grid
        std::size_t k = 0;
        for (; k < pick.size(); ++k) {
            if (++pick[k] < values.size()) break;
            pick[k] = 0;
        }
        if (k == pick.size()) break;
    }
    return best;
}

}  // namespace conemm
