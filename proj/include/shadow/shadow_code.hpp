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
#include <span>
#include <vector>

#include "shadow/binary_code.hpp"
#include "shadow/field.hpp"
#include "shadow/polynomial.hpp"

namespace shadow {

/// Nonempty, strictly increasing set of points of an odd-order field.
class EvaluationSet {
public:
    /// Sorts the points; rejects duplicates, foreign points and even q.
    EvaluationSet(FieldPtr field, std::vector<FieldElement> points);

    /// The first n elements in canonical order.
    static EvaluationSet first_n(FieldPtr field, std::size_t n);
    static EvaluationSet full(FieldPtr field);

    const FieldPtr& field() const noexcept { return field_; }
    std::span<const FieldElement> points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    bool contains(FieldElement x) const noexcept;
    std::vector<FieldElement> complement() const;

private:
    FieldPtr field_;
    std::vector<FieldElement> points_;
};

struct BasicSet {
    std::vector<Poly> polys;
    int total_degree = 0;
    bool has_constant = false;
};

/// Checks the basic-set rules against E: non-constant members monic,
/// irreducible and pairwise distinct; at most one constant, which must be a
/// primitive element; nothing vanishes on E.
BasicSet make_basic_set(std::vector<Poly> polys, const EvaluationSet& e);

/// The bound |E| - q/2 - (sqrt(q)/2)(d_B - 1), held exactly as
/// (a + b*sqrt(q)) / 2 with integers a = 2|E| - q and b = 1 - d_B.
class Delta {
public:
    Delta(std::int64_t a, std::int64_t b, std::uint64_t q) : a_(a), b_(b), q_(q) {}

    double value() const;
    /// True when sqrt(q) is an integer, so the bound is a half-integer.
    bool is_exact() const;
    /// 2 * Delta when exact.
    std::optional<std::int64_t> twice() const;

    bool positive() const { return sign_minus(0) > 0; }
    /// Exact test of w >= Delta.
    bool at_most(std::int64_t w) const { return sign_minus(w) <= 0; }
    /// Smallest integer >= Delta.
    std::int64_t ceil() const;

    std::int64_t rational_part() const noexcept { return a_; }
    std::int64_t sqrt_coefficient() const noexcept { return b_; }
    std::uint64_t q() const noexcept { return q_; }

private:
    /// Sign of Delta - w, computed without floating point.
    int sign_minus(std::int64_t w) const;

    std::int64_t a_;
    std::int64_t b_;
    std::uint64_t q_;
};

Delta delta(const EvaluationSet& e, const BasicSet& b);

/// (lg(P(beta)) : beta in E). Throws VanishesOnE naming the offending point.
BitVec lambda_map(const Poly& p, const EvaluationSet& e);

/// {x - lambda : lambda not in E} followed by the primitive constant.
BasicSet build_B1(const EvaluationSet& e);

/// First k monic irreducible quadratics in lexicographic order, or a seeded
/// random selection when `seed` is given.
BasicSet build_B2(const FieldPtr& field, std::size_t k, std::optional<std::uint64_t> seed = {});

enum class ShadowKind { Generic, DegreeAtMostOne, DegreeTwo };

struct ShadowCode {
    EvaluationSet E;
    BasicSet B;
    BitMatrix G;  // |B| x |E|, row i = lambda_map(B[i], E)
    Delta delta;
    std::size_t rank = 0;
    std::size_t claimed_dim = 0;
    /// Set when Delta <= 0: the dimension is then the measured rank.
    bool warning = false;
    ShadowKind kind = ShadowKind::Generic;

    std::size_t n() const noexcept { return E.size(); }
    BinaryCode binary_code() const { return BinaryCode::from_generator(G); }
};

ShadowCode construct(EvaluationSet e, BasicSet b, ShadowKind kind = ShadowKind::Generic);

/// Degree-at-most-1 code over F_q with E = the first `e_size` elements.
ShadowCode construct_deg1(std::uint64_t q, std::size_t e_size);

/// Degree-at-most-1 code with length n and dimension k. Needs q = n + k - 1
/// to be an odd prime power; otherwise BadParameters names the nearest one.
ShadowCode construct_deg1_nk(std::size_t n, std::size_t k);

/// Degree-2 code over all of F_q with k quadratic basic polynomials.
ShadowCode construct_deg2(std::uint64_t q, std::size_t k, std::optional<std::uint64_t> seed = {});

/// Delta, after checking it is positive. For degree-at-most-1 codes the value
/// is cross-checked against the (n, k) closed form.
double distance_lower_bound(const ShadowCode& code);

/// Closest odd prime power to `target` (ties go to the smaller one).
std::uint64_t nearest_odd_prime_power(std::uint64_t target);

}  // namespace shadow
