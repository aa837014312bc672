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

#include <string>
#include <vector>

#include "core/instance.hpp"
#include "core/rational.hpp"

namespace conemm {

/// floor(q/r) pairwise-disjoint r-element index blocks (0-based internally)
/// whose summed rows are strictly positive in every coordinate.
struct Partition {
    std::vector<std::vector<int>> blocks;
};

struct PartitionOptions {
    /// Recurse on the coordinate covered by the most rows last, instead of
    /// the natural coordinate order.
    bool permute_heuristic = false;
};

/// Constructs a positive partition by projecting away the last coordinate:
/// trim to r*floor(q/r) rows, seed each block with a row that is positive in
/// the last coordinate (rows supported there alone are forced seeds; the
/// rest are chosen smallest-support-first), recurse on the projections of
/// the remaining rows, then append one seed per block. Backtracks over the
/// seed choice; throws ErrorCode::search_exhausted when every choice fails,
/// which signals a hypothesis violation.
Partition build_partition(const Instance& inst, const PartitionOptions& options = {});

struct PartitionCheckReport {
    bool pass = true;
    std::string reason;
    int block = -1;  // 0-based witness block
    int coord = -1;  // 0-based witness coordinate
};

/// Exact re-check of block count, cardinalities, index range, disjointness
/// and strict positivity of every block-sum coordinate.
PartitionCheckReport verify_partition(const Instance& inst, const Partition& partition);

struct PartitionOracleResult {
    bool exists = false;
    Partition witness;
};

/// Exhaustive search over all families of floor(q/r) disjoint r-subsets.
/// Guarded to q <= 12, r <= 3.
PartitionOracleResult oracle_partition(const Instance& inst);

/// Block sums of a constructed partition, plus the divisor-count verdicts
/// the regrouped family feeds: q' >= 2n + r, q' >= 2n (dimension >= 2) and
/// q' >= 2n^2 (dimension >= 2).
struct RegroupResult {
    Partition partition;
    std::vector<RationalVector> sums;
    long q_prime = 0;
    bool meets_2n_plus_r = false;
    bool meets_2n = false;
    bool meets_2n_squared = false;
};

RegroupResult ample_regroup(const Instance& inst, int n, const PartitionOptions& options = {});

}  // namespace conemm
