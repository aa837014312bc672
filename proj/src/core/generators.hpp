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

#include "core/instance.hpp"
#include "core/rational.hpp"

namespace conemm {

/// Sharpness family for the hyperbolicity threshold: r = s+1 generators and
/// 2n copies of each unit row, so q = 2nr exactly. Every proper generator
/// subset supports exactly its allowed maximum of rows.
Instance gen_conjbex(int n, int s);

/// Sharpness family for the quasi-hyperbolicity threshold: requires r <= n;
/// n-r+2 copies of each unit row, q = r(n-r+2).
Instance gen_conjaex(int n, int r);

/// Three-generator family with q = 3(n+2) rows, one block of n+2 rows per
/// generator pair, entries drawn deterministically from the seed within
/// [1/4, 4]. Redrawn until the support condition and genericity hold.
Instance gen_appex(int n, std::uint64_t seed, int budget = 32);

/// Seeded random instance with entries in {0} or [1/bound, bound],
/// rejection-sampled until the support condition passes.
Instance gen_random(int n, int r, int q, std::uint64_t seed, const Rational& bound,
                    int budget = 256);

}  // namespace conemm
