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

#include "core/partition.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace conemm {

namespace {

struct IndexedRow {
    RationalVector v;
    int original;  // index into the instance
};

int support_size(const RationalVector& v) {
    int s = 0;
    for (const Rational& x : v) {
        if (!x.is_zero()) ++s;
    }
    return s;
}

/// Advances `combo` (ascending positions into a pool of size n) to the next
/// combination in lexicographic order; false when exhausted.
bool next_combination(std::vector<int>& combo, int n) {
    const int k = static_cast<int>(combo.size());
    for (int i = k - 1; i >= 0; --i) {
        if (combo[static_cast<std::size_t>(i)] < n - (k - i)) {
            combo[static_cast<std::size_t>(i)] += 1;
            for (int j = i + 1; j < k; ++j) {
                combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
            }
            return true;
        }
    }
    return false;
}

std::optional<std::vector<std::vector<int>>> partition_rec(std::vector<IndexedRow> rows, int r,
                                                           bool permute_heuristic) {
    const int k = static_cast<int>(rows.size()) / r;
    if (k == 0) return std::vector<std::vector<int>>{};

    if (r == 1) {
        // Every surviving row is nonzero, hence positive.
        std::vector<std::vector<int>> blocks;
        blocks.reserve(rows.size());
        for (const IndexedRow& row : rows) {
            if (row.v.front().is_zero()) return std::nullopt;
            blocks.push_back({row.original});
        }
        return blocks;
    }

    int last = r - 1;
    if (permute_heuristic) {
        // Keep the most widely covered coordinate for the seeding step.
        std::vector<int> cover(static_cast<std::size_t>(r), 0);
        for (const IndexedRow& row : rows) {
            for (int j = 0; j < r; ++j) {
                if (!row.v[static_cast<std::size_t>(j)].is_zero()) cover[static_cast<std::size_t>(j)] += 1;
            }
        }
        last = static_cast<int>(std::max_element(cover.begin(), cover.end()) - cover.begin());
    }

    std::vector<int> forced;    // rows supported on the last coordinate alone
    std::vector<int> optional_; // other rows positive in the last coordinate
    for (int idx = 0; idx < static_cast<int>(rows.size()); ++idx) {
        const RationalVector& v = rows[static_cast<std::size_t>(idx)].v;
        if (v[static_cast<std::size_t>(last)].is_zero()) continue;
        bool projection_zero = true;
        for (int j = 0; j < r; ++j) {
            if (j != last && !v[static_cast<std::size_t>(j)].is_zero()) {
                projection_zero = false;
                break;
            }
        }
        (projection_zero ? forced : optional_).push_back(idx);
    }
    if (static_cast<int>(forced.size()) > k) return std::nullopt;
    const int need = k - static_cast<int>(forced.size());
    if (static_cast<int>(optional_.size()) < need) return std::nullopt;

    // Most constrained first: fewer nonzero coordinates make a row harder to
    // place in the projected family.
    std::sort(optional_.begin(), optional_.end(), [&](int a, int b) {
        int sa = support_size(rows[static_cast<std::size_t>(a)].v);
        int sb = support_size(rows[static_cast<std::size_t>(b)].v);
        if (sa != sb) return sa < sb;
        return a < b;
    });

    std::vector<int> combo(static_cast<std::size_t>(need));
    std::iota(combo.begin(), combo.end(), 0);
    bool more = true;
    while (more) {
        std::vector<bool> seeded(rows.size(), false);
        std::vector<int> seeds = forced;
        for (int pos : combo) seeds.push_back(optional_[static_cast<std::size_t>(pos)]);
        for (int idx : seeds) seeded[static_cast<std::size_t>(idx)] = true;

        std::vector<IndexedRow> projected;
        projected.reserve(rows.size() - seeds.size());
        bool viable = true;
        for (int idx = 0; idx < static_cast<int>(rows.size()); ++idx) {
            if (seeded[static_cast<std::size_t>(idx)]) continue;
            IndexedRow p;
            p.original = rows[static_cast<std::size_t>(idx)].original;
            p.v.reserve(static_cast<std::size_t>(r - 1));
            bool nonzero = false;
            for (int j = 0; j < r; ++j) {
                if (j == last) continue;
                p.v.push_back(rows[static_cast<std::size_t>(idx)].v[static_cast<std::size_t>(j)]);
                if (!p.v.back().is_zero()) nonzero = true;
            }
            if (!nonzero) {
                viable = false;  // an unseeded row vanished under the projection
                break;
            }
            projected.push_back(std::move(p));
        }
        if (viable) {
            if (auto sub = partition_rec(std::move(projected), r - 1, permute_heuristic)) {
                std::vector<int> seed_originals;
                seed_originals.reserve(seeds.size());
                for (int idx : seeds) seed_originals.push_back(rows[static_cast<std::size_t>(idx)].original);
                std::sort(seed_originals.begin(), seed_originals.end());
                std::vector<std::vector<int>> blocks = std::move(*sub);
                for (int m = 0; m < k; ++m) {
                    blocks[static_cast<std::size_t>(m)].push_back(seed_originals[static_cast<std::size_t>(m)]);
                }
                return blocks;
            }
        }
        more = need > 0 && next_combination(combo, static_cast<int>(optional_.size()));
    }
    return std::nullopt;
}

}  // namespace

Partition build_partition(const Instance& inst, const PartitionOptions& options) {
    ValidationReport validation = validate_instance(inst);
    if (!validation.ok()) {
        throw Error(ErrorCode::invalid_argument, "invalid instance: " + validation.violations.front());
    }
    const int k = static_cast<int>(block_bound(inst.q, inst.r));
    if (k == 0) return Partition{};

    std::vector<IndexedRow> rows;
    rows.reserve(static_cast<std::size_t>(inst.q));
    for (int i = 0; i < inst.q; ++i) {
        IndexedRow row;
        row.original = i;
        row.v.reserve(static_cast<std::size_t>(inst.r));
        for (int j = 0; j < inst.r; ++j) row.v.push_back(inst.coeffs.at(i, j));
        rows.push_back(std::move(row));
    }

    // Trim the surplus q - r*floor(q/r) rows, widest support first.
    const int surplus = inst.q - k * inst.r;
    if (surplus > 0) {
        std::vector<int> order(rows.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            int sa = support_size(rows[static_cast<std::size_t>(a)].v);
            int sb = support_size(rows[static_cast<std::size_t>(b)].v);
            if (sa != sb) return sa > sb;
            return a < b;
        });
        std::vector<bool> dropped(rows.size(), false);
        for (int d = 0; d < surplus; ++d) dropped[static_cast<std::size_t>(order[static_cast<std::size_t>(d)])] = true;
        std::vector<IndexedRow> kept;
        kept.reserve(rows.size() - static_cast<std::size_t>(surplus));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!dropped[i]) kept.push_back(std::move(rows[i]));
        }
        rows = std::move(kept);
    }

    auto blocks = partition_rec(std::move(rows), inst.r, options.permute_heuristic);
    if (!blocks) {
        throw Error(ErrorCode::search_exhausted,
                    "no positive partition found; the instance is likely violating the support condition");
    }
    Partition partition;
    partition.blocks = std::move(*blocks);
    for (std::vector<int>& block : partition.blocks) std::sort(block.begin(), block.end());
    std::sort(partition.blocks.begin(), partition.blocks.end());
    return partition;
}

PartitionCheckReport verify_partition(const Instance& inst, const Partition& partition) {
    const long k = block_bound(inst.q, inst.r);
    if (static_cast<long>(partition.blocks.size()) != k) {
        return PartitionCheckReport{false,
                                    "expected " + std::to_string(k) + " blocks, got " +
                                        std::to_string(partition.blocks.size()),
                                    -1, -1};
    }
    std::vector<bool> used(static_cast<std::size_t>(inst.q), false);
    for (int m = 0; m < static_cast<int>(partition.blocks.size()); ++m) {
        const std::vector<int>& block = partition.blocks[static_cast<std::size_t>(m)];
        if (static_cast<int>(block.size()) != inst.r) {
            return PartitionCheckReport{false, "block has cardinality " + std::to_string(block.size()), m, -1};
        }
        for (int idx : block) {
            if (idx < 0 || idx >= inst.q) {
                return PartitionCheckReport{false, "index out of range", m, -1};
            }
            if (used[static_cast<std::size_t>(idx)]) {
                return PartitionCheckReport{false,
                                            "blocks are not disjoint at index " + std::to_string(idx + 1), m, -1};
            }
            used[static_cast<std::size_t>(idx)] = true;
        }
        for (int j = 0; j < inst.r; ++j) {
            Rational sum;
            for (int idx : block) sum += inst.coeffs.at(idx, j);
            if (!sum.is_positive()) {
                return PartitionCheckReport{false, "block sum not positive", m, j};
            }
        }
    }
    return PartitionCheckReport{};
}

namespace {

bool oracle_rec(const Instance& inst, std::vector<int>& available, int blocks_left,
                std::vector<std::vector<int>>& acc) {
    if (blocks_left == 0) return true;
    if (static_cast<int>(available.size()) < blocks_left * inst.r) return false;

    const int anchor = available.front();
    std::vector<int> rest(available.begin() + 1, available.end());

    // Branch 1: anchor joins a block with r-1 partners from the rest.
    if (inst.r == 1) {
        bool positive = inst.coeffs.at(anchor, 0).is_positive();
        if (positive) {
            acc.push_back({anchor});
            if (oracle_rec(inst, rest, blocks_left - 1, acc)) return true;
            acc.pop_back();
        }
    } else {
        std::vector<int> combo(static_cast<std::size_t>(inst.r - 1));
        std::iota(combo.begin(), combo.end(), 0);
        if (static_cast<int>(rest.size()) >= inst.r - 1) {
            bool more = true;
            while (more) {
                std::vector<int> block{anchor};
                for (int pos : combo) block.push_back(rest[static_cast<std::size_t>(pos)]);
                bool positive = true;
                for (int j = 0; j < inst.r && positive; ++j) {
                    Rational sum;
                    for (int idx : block) sum += inst.coeffs.at(idx, j);
                    positive = sum.is_positive();
                }
                if (positive) {
                    std::vector<int> remaining;
                    std::vector<bool> taken(rest.size(), false);
                    for (int pos : combo) taken[static_cast<std::size_t>(pos)] = true;
                    for (std::size_t p = 0; p < rest.size(); ++p) {
                        if (!taken[p]) remaining.push_back(rest[p]);
                    }
                    acc.push_back(block);
                    if (oracle_rec(inst, remaining, blocks_left - 1, acc)) return true;
                    acc.pop_back();
                }
                more = next_combination(combo, static_cast<int>(rest.size()));
            }
        }
    }

    // Branch 2: anchor stays unused (possible only with enough slack).
    if (static_cast<int>(rest.size()) >= blocks_left * inst.r) {
        if (oracle_rec(inst, rest, blocks_left, acc)) return true;
    }
    return false;
}

}  // namespace

PartitionOracleResult oracle_partition(const Instance& inst) {
    if (inst.q > 12 || inst.r > 3 || inst.r < 1) {
        throw Error(ErrorCode::guard_violation, "partition oracle guarded to q <= 12, r <= 3");
    }
    ValidationReport validation = validate_instance(inst);
    if (!validation.ok()) {
        throw Error(ErrorCode::invalid_argument, "invalid instance: " + validation.violations.front());
    }
    const int k = static_cast<int>(block_bound(inst.q, inst.r));
    PartitionOracleResult result;
    if (k == 0) {
        result.exists = true;  // zero blocks, vacuously
        return result;
    }
    std::vector<int> available(static_cast<std::size_t>(inst.q));
    std::iota(available.begin(), available.end(), 0);
    std::vector<std::vector<int>> acc;
    result.exists = oracle_rec(inst, available, k, acc);
    if (result.exists) {
        result.witness.blocks = std::move(acc);
        for (std::vector<int>& block : result.witness.blocks) std::sort(block.begin(), block.end());
        std::sort(result.witness.blocks.begin(), result.witness.blocks.end());
    }
    return result;
}

RegroupResult ample_regroup(const Instance& inst, int n, const PartitionOptions& options) {
    if (n < 1) {
        throw Error(ErrorCode::invalid_argument, "dimension n must be positive");
    }
    RegroupResult result;
    result.partition = build_partition(inst, options);
    result.q_prime = static_cast<long>(result.partition.blocks.size());
    for (const std::vector<int>& block : result.partition.blocks) {
        RationalVector sum(static_cast<std::size_t>(inst.r), Rational());
        for (int idx : block) {
            for (int j = 0; j < inst.r; ++j) sum[static_cast<std::size_t>(j)] += inst.coeffs.at(idx, j);
        }
        result.sums.push_back(std::move(sum));
    }
    const long ln = n;
    result.meets_2n_plus_r = result.q_prime >= 2 * ln + inst.r;
    result.meets_2n = n >= 2 && result.q_prime >= 2 * ln;
    result.meets_2n_squared = n >= 2 && result.q_prime >= 2 * ln * ln;
    return result;
}

}  // namespace conemm
