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

#include "shadow/arith.hpp"

#include <cmath>

namespace shadow::arith {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t out = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && out > UINT64_MAX / base) return std::nullopt;
        out *= base;
    }
    return out;
}

int sign_plus_sqrt(__int128 x, __int128 y, std::uint64_t q) {
    const auto sgn = [](__int128 v) { return (v > 0) - (v < 0); };
    if (x >= 0 && y >= 0) return (x > 0 || y > 0) ? 1 : 0;
    if (x <= 0 && y <= 0) return (x < 0 || y < 0) ? -1 : 0;
    // Opposite signs: compare x^2 with y^2 q.
    const __int128 xx = x * x;
    const __int128 yyq = y * y * static_cast<__int128>(q);
    return x > 0 ? sgn(xx - yyq) : sgn(yyq - xx);
}

}  // namespace shadow::arith
