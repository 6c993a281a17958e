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

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace shadow {

/// An element of F_q, identified by its canonical index: the base-p digits of
/// the index are the coefficients of the element over F_p, lowest first.
struct FieldElement {
    std::uint32_t index = 0;

    friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

struct PrimePower {
    std::uint32_t p;
    std::uint32_t m;
};

/// Finite field F_q with q = p^m. Immutable once built; share it through
/// FieldPtr.
///
/// Multiplication uses exp/log tables over the least-index primitive element
/// when q <= 2^16 and falls back to polynomial arithmetic modulo the defining
/// polynomial above that.
class Field {
public:
    static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;
    static constexpr std::uint64_t kMaxTabulatedOrder = std::uint64_t{1} << 16;

    /// Builds F_{p^m}. Without a modulus, the lexicographically least monic
    /// irreducible of degree m over F_p is used (coefficients compared
    /// lowest degree first).
    static FieldPtr create(std::uint32_t p, std::uint32_t m = 1,
                           std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return m_; }
    std::uint32_t order() const noexcept { return q_; }
    bool is_odd() const noexcept { return p_ != 2; }

    /// Monic modulus c0..cm. For prime fields this is the polynomial x.
    std::span<const std::uint32_t> modulus() const noexcept { return modulus_; }

    FieldElement zero() const noexcept { return {0}; }
    FieldElement one() const noexcept { return {1}; }
    FieldElement element(std::uint64_t index) const;
    bool contains(FieldElement a) const noexcept { return a.index < q_; }

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement inv(FieldElement a) const;
    FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
    FieldElement pow(FieldElement a, std::uint64_t e) const;

    /// Euler criterion. Odd q and a != 0 only.
    bool is_square(FieldElement a) const;

    /// Quadratic-character parity: 0 on nonzero squares, 1 otherwise.
    /// Satisfies lg(alpha^k) = k mod 2 for any primitive alpha.
    std::uint8_t lg_parity(FieldElement a) const;

    FieldElement primitive_element() const noexcept { return primitive_; }
    bool is_primitive(FieldElement a) const;
    std::uint64_t multiplicative_order(FieldElement a) const;

    std::vector<std::uint32_t> digits(FieldElement a) const;
    FieldElement from_digits(std::span<const std::uint32_t> digits) const;

    bool has_tables() const noexcept { return !exp_.empty(); }

    friend bool operator==(const Field& a, const Field& b) noexcept {
        return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
    }

private:
    Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);

    FieldElement mul_slow(FieldElement a, FieldElement b) const;
    FieldElement pow_slow(FieldElement a, std::uint64_t e) const;
    void require_odd_nonzero(FieldElement a) const;

    std::uint32_t p_;
    std::uint32_t m_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint64_t> order_factors_;  // distinct primes dividing q-1
    FieldElement primitive_{1};
    std::vector<std::uint32_t> exp_;  // exp_[i] = primitive^i, i in [0, q-1)
    std::vector<std::uint32_t> log_;  // log_[0] unused
};

/// (p, m) with p odd and p^m == target, if one exists.
std::optional<PrimePower> find_odd_prime_power(std::uint64_t target);

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept;

}  // namespace shadow
