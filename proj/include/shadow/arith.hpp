/*
 * Copyright 2026 The shadowcodes Authors
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
#include <vector>

// Small integer number-theory helpers shared by the field and bound code.
namespace shadow::arith {

bool is_prime(std::uint64_t n);

/// Distinct prime factors of n in increasing order (empty for n < 2).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

std::uint64_t isqrt(std::uint64_t n);

inline std::optional<std::uint64_t> exact_sqrt(std::uint64_t n) {
    const std::uint64_t r = isqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

/// base^exp, or nullopt when the result does not fit in 64 bits.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp);

/// Sign of x + y * sqrt(q), decided in exact integer arithmetic.
int sign_plus_sqrt(__int128 x, __int128 y, std::uint64_t q);

}  // namespace shadow::arith
