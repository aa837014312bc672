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
#include <vector>

namespace conemm {

/// splitmix64. Deterministic across platforms, unlike the standard library
/// distributions; every seeded draw in the library goes through this.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

/// Primes p_first_index, ..., p_{first_index+count-1} with p_0 = 2.
/// Plain trial division; callers only ever need a few thousand primes.
inline std::vector<std::uint64_t> primes_from_index(std::size_t first_index, std::size_t count) {
    std::vector<std::uint64_t> primes;
    primes.reserve(first_index + count);
    std::uint64_t candidate = 2;
    while (primes.size() < first_index + count) {
        bool is_prime = true;
        for (std::uint64_t p : primes) {
            if (p * p > candidate) break;
            if (candidate % p == 0) {
                is_prime = false;
                break;
            }
        }
        if (is_prime) primes.push_back(candidate);
        candidate += (candidate == 2) ? 1 : 2;
    }
    return std::vector<std::uint64_t>(primes.begin() + static_cast<std::ptrdiff_t>(first_index),
                                      primes.end());
}

}  // namespace conemm
