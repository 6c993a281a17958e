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
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shadow/field.hpp"

namespace shadow {

/// Univariate polynomial over a finite field, coefficients lowest degree
/// first with no trailing zeros. The zero polynomial has no coefficients.
class Poly {
public:
    /// Degree of the zero polynomial.
    static constexpr int kMinusInfinity = std::numeric_limits<int>::min();

    explicit Poly(FieldPtr field);
    Poly(FieldPtr field, std::vector<FieldElement> coeffs);

    static Poly constant(FieldPtr field, FieldElement c);
    static Poly x(FieldPtr field);
    /// The monic linear polynomial x - root.
    static Poly linear(FieldPtr field, FieldElement root);

    const FieldPtr& field() const noexcept { return field_; }
    std::span<const FieldElement> coeffs() const noexcept { return coeffs_; }
    FieldElement coeff(std::size_t i) const noexcept {
        return i < coeffs_.size() ? coeffs_[i] : FieldElement{0};
    }

    int degree() const noexcept {
        return coeffs_.empty() ? kMinusInfinity : static_cast<int>(coeffs_.size()) - 1;
    }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back().index == 1; }
    FieldElement leading() const noexcept { return coeffs_.empty() ? FieldElement{0} : coeffs_.back(); }

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);

    /// Lexicographic order on coefficient tuples, lowest degree first,
    /// after ordering by degree.
    friend bool operator<(const Poly& a, const Poly& b);

private:
    void trim();

    FieldPtr field_;
    std::vector<FieldElement> coeffs_;
};

/// Horner evaluation.
FieldElement eval(const Poly& f, FieldElement x);

Poly scale(const Poly& f, FieldElement c);
Poly make_monic(const Poly& f);

/// Quotient and remainder; divisor must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly mod(const Poly& a, const Poly& b);

/// Monic gcd (zero when both inputs are zero).
Poly gcd(Poly a, Poly b);

/// base^e mod modulus.
Poly powmod(const Poly& base, std::uint64_t e, const Poly& modulus);

/// Rabin's irreducibility test. Throws ConstantInput for degree < 1.
bool is_irreducible(const Poly& f);

/// The first `count` monic irreducibles of degree d, ordered by their
/// coefficient tuples compared lowest degree first.
std::vector<Poly> enumerate_monic_irreducibles(const FieldPtr& field, int d, std::size_t count);

/// `count` distinct monic irreducibles of degree d drawn uniformly with a
/// seeded generator, in draw order.
std::vector<Poly> random_monic_irreducibles(const FieldPtr& field, int d, std::size_t count,
                                            std::uint64_t seed);

/// Number of monic irreducibles of degree d over F_q (necklace count).
std::uint64_t monic_irreducible_count(std::uint64_t q, int d);

struct ProductDegree {
    Poly product;
    int total_degree;
};

ProductDegree product_and_degree(std::span<const Poly> polys);

/// True iff the non-constant entries are pairwise distinct. For monic
/// irreducible inputs this is equivalent to the product having distinct
/// roots in the algebraic closure.
bool is_squarefree_product(std::span<const Poly> polys);

/// "c0,c1,...,cd" with canonical element indices; the zero polynomial is "0".
std::string to_string(const Poly& f);
Poly parse_poly(const FieldPtr& field, std::string_view text);

}  // namespace shadow
