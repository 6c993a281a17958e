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
#include <span>
#include <vector>

#include "shadow/binary_code.hpp"
#include "shadow/field.hpp"
#include "shadow/polynomial.hpp"
#include "shadow/shadow_code.hpp"

namespace shadow {

/// The curve y^2 = gamma * prod(factors) over an odd-order field.
struct CurveSpec {
    FieldPtr field;
    FieldElement gamma;
    std::vector<Poly> factors;

    /// Number of distinct roots of the product in the algebraic closure.
    int ell() const;
};

inline constexpr std::uint64_t kMaxCurveOrder = std::uint64_t{1} << 14;

/// Validates odd q, gamma != 0 and nonempty, pairwise distinct, monic,
/// irreducible factors.
CurveSpec make_curve(FieldPtr field, FieldElement gamma, std::vector<Poly> factors);

/// Between 1 and max_factors distinct factors of degree 1..max_degree and a
/// random nonzero gamma, all drawn from `seed`.
CurveSpec random_curve(FieldPtr field, std::size_t max_factors, int max_degree, std::uint64_t seed);

/// Affine points of y^2 = gamma * prod(factors) by scanning x: 2 points where
/// the right side is a nonzero square, 1 where it vanishes. Factors may be
/// empty here (product 1).
std::uint64_t count_zeros(const FieldPtr& field, FieldElement gamma, std::span<const Poly> factors);
std::uint64_t count_zeros(const CurveSpec& curve);

struct WeilBoundReport {
    std::uint64_t count;
    std::uint64_t q;
    int d;
    double bound;  // (d - 1) sqrt(q)
    bool ok;       // |count - q| <= bound, decided in integers
};

WeilBoundReport check_weil_bound(const CurveSpec& curve);

struct WeightArgumentReport {
    std::size_t zeros;            // m_v: zero entries of the codeword
    std::size_t weight;
    std::uint64_t curve_points;   // |V_q(Q)|
    double zeros_bound;           // q/2 + (sqrt(q)/2)(d_B - 1)
    bool points_cover_zeros;      // |V_q(Q)| >= 2 m_v
    bool zeros_within_bound;      // m_v <= zeros_bound, decided in integers
    bool ok() const noexcept { return points_cover_zeros && zeros_within_bound; }
};

/// Replays the distance argument for the codeword sum_P b_P Lambda_E(P):
/// counts points of y^2 = prod P^{b_P} and checks both inequalities.
WeightArgumentReport check_weight_argument(const ShadowCode& code, const BitVec& message);

}  // namespace shadow
