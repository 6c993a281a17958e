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

#include "shadow/polynomial.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <unordered_set>

#include "shadow/arith.hpp"
#include "shadow/errors.hpp"

namespace shadow {

namespace {

void require_same_field(const Poly& a, const Poly& b) {
    if (!same_field(a.field(), b.field())) {
        throw Error(Errc::FieldMismatch, "polynomials live over different fields");
    }
}

// Signed Moebius function for the small divisors that appear in necklace counts.
int moebius(std::uint64_t n) {
    int sign = 1;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        n /= d;
        if (n % d == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

// Monic degree-d polynomial whose lower coefficients are the base-q digits of
// `rank`, c0 being the most significant digit.
Poly monic_from_rank(const FieldPtr& field, int d, std::uint64_t rank) {
    const std::uint64_t q = field->order();
    std::vector<FieldElement> coeffs(static_cast<std::size_t>(d) + 1);
    for (int i = d - 1; i >= 0; --i) {
        coeffs[static_cast<std::size_t>(i)] = {static_cast<std::uint32_t>(rank % q)};
        rank /= q;
    }
    coeffs.back() = field->one();
    return Poly(field, std::move(coeffs));
}

std::uint64_t candidate_count(const FieldPtr& field, int d) {
    if (d < 1) throw Error(Errc::BadParameters, "degree must be at least 1");
    const auto total = arith::checked_pow(field->order(), static_cast<unsigned>(d));
    if (!total) throw Error(Errc::BadParameters, "q^d overflows the enumeration range");
    return *total;
}

}  // namespace

Poly::Poly(FieldPtr field) : field_(std::move(field)) {}

Poly::Poly(FieldPtr field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (auto c : coeffs_) {
        if (!field_->contains(c)) throw Error(Errc::FieldMismatch, "coefficient outside field");
    }
    trim();
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().index == 0) coeffs_.pop_back();
}

Poly Poly::constant(FieldPtr field, FieldElement c) { return Poly(std::move(field), {c}); }

Poly Poly::x(FieldPtr field) {
    auto one = field->one();
    return Poly(std::move(field), {FieldElement{0}, one});
}

Poly Poly::linear(FieldPtr field, FieldElement root) {
    auto c0 = field->neg(root);
    auto one = field->one();
    return Poly(std::move(field), {c0, one});
}

Poly operator+(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const auto& f = *a.field_;
    std::vector<FieldElement> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.coeff(i), b.coeff(i));
    return Poly(a.field_, std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const auto& f = *a.field_;
    std::vector<FieldElement> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a.coeff(i), b.coeff(i));
    return Poly(a.field_, std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    const auto& f = *a.field_;
    std::vector<FieldElement> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].index == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] = f.add(out[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
        }
    }
    return Poly(a.field_, std::move(out));
}

bool operator==(const Poly& a, const Poly& b) {
    return same_field(a.field_, b.field_) && a.coeffs_ == b.coeffs_;
}

bool operator<(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs_ < b.coeffs_;
}

FieldElement eval(const Poly& f, FieldElement x) {
    const auto& field = *f.field();
    if (!field.contains(x)) throw Error(Errc::FieldMismatch, "evaluation point outside field");
    FieldElement acc = field.zero();
    const auto coeffs = f.coeffs();
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = field.add(field.mul(acc, x), coeffs[i]);
    return acc;
}

Poly scale(const Poly& f, FieldElement c) {
    std::vector<FieldElement> out(f.coeffs().begin(), f.coeffs().end());
    for (auto& v : out) v = f.field()->mul(v, c);
    return Poly(f.field(), std::move(out));
}

Poly make_monic(const Poly& f) {
    if (f.is_zero() || f.is_monic()) return f;
    return scale(f, f.field()->inv(f.leading()));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
    const auto& f = *a.field();
    std::vector<FieldElement> rem(a.coeffs().begin(), a.coeffs().end());
    const auto divisor = b.coeffs();
    const std::size_t db = divisor.size() - 1;
    if (rem.size() < divisor.size()) return {Poly(a.field()), a};

    const FieldElement lead_inv = f.inv(b.leading());
    std::vector<FieldElement> quot(rem.size() - db);
    for (std::size_t top = rem.size(); top-- > db;) {
        const FieldElement c = f.mul(rem[top], lead_inv);
        quot[top - db] = c;
        if (c.index == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) {
            rem[top - db + j] = f.sub(rem[top - db + j], f.mul(c, divisor[j]));
        }
    }
    rem.resize(db);
    return {Poly(a.field(), std::move(quot)), Poly(a.field(), std::move(rem))};
}

Poly mod(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(Poly a, Poly b) {
    require_same_field(a, b);
    while (!b.is_zero()) {
        Poly r = mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& modulus) {
    Poly result = mod(Poly::constant(base.field(), base.field()->one()), modulus);
    Poly b = mod(base, modulus);
    while (e > 0) {
        if (e & 1) result = mod(result * b, modulus);
        e >>= 1;
        if (e > 0) b = mod(b * b, modulus);
    }
    return result;
}

bool is_irreducible(const Poly& input) {
    if (input.degree() < 1) {
        throw Error(Errc::ConstantInput, "irreducibility is undefined for constants");
    }
    const Poly f = make_monic(input);
    const int d = f.degree();
    const std::uint64_t q = f.field()->order();
    const Poly x = mod(Poly::x(f.field()), f);

    std::vector<std::uint64_t> divisor_exps;
    for (auto l : arith::prime_factors(static_cast<std::uint64_t>(d))) {
        divisor_exps.push_back(static_cast<std::uint64_t>(d) / l);
    }

    // h runs through x^(q^i) mod f for i = 1..d.
    Poly h = x;
    for (int i = 1; i <= d; ++i) {
        h = powmod(h, q, f);
        if (std::find(divisor_exps.begin(), divisor_exps.end(), static_cast<std::uint64_t>(i)) !=
            divisor_exps.end()) {
            if (gcd(h - x, f).degree() != 0) return false;
        }
    }
    return h == x;
}

std::vector<Poly> enumerate_monic_irreducibles(const FieldPtr& field, int d, std::size_t count) {
    const std::uint64_t total = candidate_count(field, d);
    std::vector<Poly> out;
    out.reserve(count);
    for (std::uint64_t rank = 0; rank < total && out.size() < count; ++rank) {
        Poly f = monic_from_rank(field, d, rank);
        if (d == 1 || is_irreducible(f)) out.push_back(std::move(f));
    }
    if (out.size() < count) {
        throw Error(Errc::ExhaustedSupply, "only " + std::to_string(out.size()) +
                                               " monic irreducibles of degree " +
                                               std::to_string(d) + " exist");
    }
    return out;
}

std::vector<Poly> random_monic_irreducibles(const FieldPtr& field, int d, std::size_t count,
                                            std::uint64_t seed) {
    const std::uint64_t total = candidate_count(field, d);
    const std::uint64_t supply = monic_irreducible_count(field->order(), d);
    if (count > supply) {
        throw Error(Errc::ExhaustedSupply, "requested " + std::to_string(count) + " of " +
                                               std::to_string(supply) + " monic irreducibles");
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
    std::unordered_set<std::uint64_t> seen;
    std::vector<Poly> out;
    out.reserve(count);
    while (out.size() < count) {
        const std::uint64_t rank = pick(rng);
        if (!seen.insert(rank).second) continue;
        Poly f = monic_from_rank(field, d, rank);
        if (d == 1 || is_irreducible(f)) out.push_back(std::move(f));
    }
    return out;
}

std::uint64_t monic_irreducible_count(std::uint64_t q, int d) {
    if (d < 1) return 0;
    __int128 sum = 0;
    for (int e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        const int mu = moebius(static_cast<std::uint64_t>(e));
        if (mu == 0) continue;
        const auto term = arith::checked_pow(q, static_cast<unsigned>(d / e));
        if (!term) return UINT64_MAX;
        sum += mu * static_cast<__int128>(*term);
    }
    return static_cast<std::uint64_t>(sum / d);
}

ProductDegree product_and_degree(std::span<const Poly> polys) {
    if (polys.empty()) throw Error(Errc::BadParameters, "empty polynomial sequence");
    Poly product = Poly::constant(polys.front().field(), polys.front().field()->one());
    int total = 0;
    for (const auto& p : polys) {
        if (p.is_zero()) throw Error(Errc::BadParameters, "zero polynomial in product");
        product = product * p;
        total += p.degree();
    }
    return {std::move(product), total};
}

bool is_squarefree_product(std::span<const Poly> polys) {
    std::vector<const Poly*> nonconst;
    for (const auto& p : polys) {
        if (!p.is_constant()) nonconst.push_back(&p);
    }
    for (std::size_t i = 0; i < nonconst.size(); ++i) {
        for (std::size_t j = i + 1; j < nonconst.size(); ++j) {
            if (*nonconst[i] == *nonconst[j]) return false;
        }
    }
    return true;
}

std::string to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (auto c : f.coeffs()) {
        if (!out.empty()) out += ',';
        out += std::to_string(c.index);
    }
    return out;
}

Poly parse_poly(const FieldPtr& field, std::string_view text) {
    std::vector<FieldElement> coeffs;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        std::string_view token = text.substr(pos, comma - pos);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        std::uint64_t value = 0;
        const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
            throw Error(Errc::ParseError, "bad coefficient '" + std::string(token) + "'");
        }
        coeffs.push_back(field->element(value));
        pos = comma + 1;
    }
    return Poly(field, std::move(coeffs));
}

}  // namespace shadow
