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

#include "shadow/field.hpp"

#include <string>

#include "shadow/arith.hpp"
#include "shadow/errors.hpp"
#include "shadow/polynomial.hpp"

namespace shadow {

namespace {

std::vector<std::uint32_t> to_vec(std::span<const FieldElement> coeffs) {
    std::vector<std::uint32_t> out;
    out.reserve(coeffs.size());
    for (auto c : coeffs) out.push_back(c.index);
    return out;
}

}  // namespace

FieldPtr Field::create(std::uint32_t p, std::uint32_t m,
                       std::optional<std::vector<std::uint32_t>> modulus) {
    if (!arith::is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (m == 0) throw Error(Errc::DegreeMismatch, "extension degree must be at least 1");
    const auto q = arith::checked_pow(p, m);
    if (!q || *q > kMaxOrder) {
        throw Error(Errc::BadParameters, "field order " + std::to_string(p) + "^" +
                                             std::to_string(m) + " exceeds 2^20");
    }

    if (m == 1) {
        if (modulus && !(modulus->size() == 2 && (*modulus)[1] == 1)) {
            throw Error(Errc::DegreeMismatch, "prime field modulus must be monic linear");
        }
        return FieldPtr(new Field(p, 1, {0, 1}));
    }

    auto prime = create(p, 1);
    if (!modulus) {
        auto first = enumerate_monic_irreducibles(prime, static_cast<int>(m), 1);
        return FieldPtr(new Field(p, m, to_vec(first.front().coeffs())));
    }

    if (modulus->size() != m + 1 || modulus->back() != 1) {
        throw Error(Errc::DegreeMismatch, "modulus must be monic of degree " + std::to_string(m));
    }
    std::vector<FieldElement> coeffs;
    for (auto c : *modulus) {
        if (c >= p) throw Error(Errc::OutOfRange, "modulus coefficient " + std::to_string(c));
        coeffs.push_back({c});
    }
    if (!is_irreducible(Poly(prime, std::move(coeffs)))) {
        throw Error(Errc::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
    }
    return FieldPtr(new Field(p, m, std::move(*modulus)));
}

Field::Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), q_(static_cast<std::uint32_t>(*arith::checked_pow(p, m))),
      modulus_(std::move(modulus)), order_factors_(arith::prime_factors(q_ - 1)) {
    for (std::uint32_t i = 1; i < q_; ++i) {
        FieldElement g{i};
        bool generator = true;
        for (auto l : order_factors_) {
            if (pow_slow(g, (q_ - 1) / l) == one()) {
                generator = false;
                break;
            }
        }
        if (generator) {
            primitive_ = g;
            break;
        }
    }

    if (q_ <= kMaxTabulatedOrder) {
        exp_.resize(q_ - 1);
        log_.assign(q_, 0);
        FieldElement x = one();
        for (std::uint32_t i = 0; i + 1 < q_; ++i) {
            exp_[i] = x.index;
            log_[x.index] = i;
            x = mul_slow(x, primitive_);
        }
    }
}

FieldElement Field::element(std::uint64_t index) const {
    if (index >= q_) {
        throw Error(Errc::OutOfRange, "element index " + std::to_string(index) +
                                          " outside F_" + std::to_string(q_));
    }
    return {static_cast<std::uint32_t>(index)};
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
    if (m_ == 1) return {(a.index + b.index) % p_};
    if (p_ == 2) return {a.index ^ b.index};
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        out += ((a.index % p_ + b.index % p_) % p_) * scale;
        a.index /= p_;
        b.index /= p_;
        scale *= p_;
    }
    return {out};
}

FieldElement Field::neg(FieldElement a) const {
    if (m_ == 1) return {(p_ - a.index) % p_};
    if (p_ == 2) return a;
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        out += ((p_ - a.index % p_) % p_) * scale;
        a.index /= p_;
        scale *= p_;
    }
    return {out};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul(FieldElement a, FieldElement b) const {
    if (a.index == 0 || b.index == 0) return zero();
    if (!exp_.empty()) {
        std::uint32_t e = log_[a.index] + log_[b.index];
        if (e >= q_ - 1) e -= q_ - 1;
        return {exp_[e]};
    }
    return mul_slow(a, b);
}

FieldElement Field::mul_slow(FieldElement a, FieldElement b) const {
    if (m_ == 1) {
        return {static_cast<std::uint32_t>(std::uint64_t{a.index} * b.index % p_)};
    }
    auto da = digits(a);
    auto db = digits(b);
    std::vector<std::uint64_t> prod(2 * m_ - 1, 0);
    for (std::uint32_t i = 0; i < m_; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < m_; ++j) {
            prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_;
        }
    }
    // Reduce by the monic modulus from the top down.
    for (std::size_t top = prod.size(); top-- > m_;) {
        const std::uint64_t c = prod[top];
        if (c == 0) continue;
        for (std::uint32_t j = 0; j < m_; ++j) {
            prod[top - m_ + j] = (prod[top - m_ + j] + (p_ - c) * modulus_[j]) % p_;
        }
        prod[top] = 0;
    }
    std::uint32_t out = 0;
    for (std::uint32_t i = m_; i-- > 0;) out = out * p_ + static_cast<std::uint32_t>(prod[i]);
    return {out};
}

FieldElement Field::pow_slow(FieldElement a, std::uint64_t e) const {
    FieldElement result = one();
    while (e > 0) {
        if (e & 1) result = mul_slow(result, a);
        a = mul_slow(a, a);
        e >>= 1;
    }
    return result;
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
    if (e == 0) return one();
    if (a.index == 0) return zero();
    if (!exp_.empty()) {
        const std::uint64_t l = (std::uint64_t{log_[a.index]} * (e % (q_ - 1))) % (q_ - 1);
        return {exp_[l]};
    }
    return pow_slow(a, e);
}

FieldElement Field::inv(FieldElement a) const {
    if (a.index == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
    if (!exp_.empty()) return {exp_[(q_ - 1 - log_[a.index]) % (q_ - 1)]};
    return pow_slow(a, q_ - 2);
}

void Field::require_odd_nonzero(FieldElement a) const {
    if (p_ == 2) throw Error(Errc::EvenCharacteristic, "quadratic character needs odd q");
    if (a.index == 0) throw Error(Errc::ZeroArgument, "quadratic character of zero");
}

bool Field::is_square(FieldElement a) const {
    require_odd_nonzero(a);
    if (!exp_.empty()) return (log_[a.index] & 1) == 0;
    return pow_slow(a, (q_ - 1) / 2) == one();
}

std::uint8_t Field::lg_parity(FieldElement a) const { return is_square(a) ? 0 : 1; }

std::uint64_t Field::multiplicative_order(FieldElement a) const {
    if (a.index == 0) throw Error(Errc::ZeroArgument, "order of zero");
    std::uint64_t order = q_ - 1;
    for (auto l : order_factors_) {
        while (order % l == 0 && pow(a, order / l) == one()) order /= l;
    }
    return order;
}

bool Field::is_primitive(FieldElement a) const {
    return a.index != 0 && multiplicative_order(a) == q_ - 1;
}

std::vector<std::uint32_t> Field::digits(FieldElement a) const {
    std::vector<std::uint32_t> out(m_);
    for (std::uint32_t i = 0; i < m_; ++i) {
        out[i] = a.index % p_;
        a.index /= p_;
    }
    return out;
}

FieldElement Field::from_digits(std::span<const std::uint32_t> digits) const {
    if (digits.size() != m_) throw Error(Errc::LengthMismatch, "digit count differs from m");
    std::uint32_t out = 0;
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (digits[i] >= p_) throw Error(Errc::OutOfRange, "digit outside F_p");
        out = out * p_ + digits[i];
    }
    return {out};
}

std::optional<PrimePower> find_odd_prime_power(std::uint64_t target) {
    if (target < 3 || target % 2 == 0) return std::nullopt;
    const auto factors = arith::prime_factors(target);
    if (factors.size() != 1) return std::nullopt;
    std::uint32_t m = 0;
    for (std::uint64_t t = target; t > 1; t /= factors[0]) ++m;
    return PrimePower{static_cast<std::uint32_t>(factors[0]), m};
}

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept {
    return a == b || (a && b && *a == *b);
}

}  // namespace shadow
