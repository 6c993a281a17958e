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

#include "shadow/weil.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "shadow/arith.hpp"
#include "shadow/errors.hpp"

namespace shadow {

int CurveSpec::ell() const {
    int total = 0;
    for (const auto& f : factors) total += f.degree();
    return total;
}

CurveSpec make_curve(FieldPtr field, FieldElement gamma, std::vector<Poly> factors) {
    if (!field->is_odd()) throw Error(Errc::EvenCharacteristic, "curve needs odd q");
    if (!field->contains(gamma)) throw Error(Errc::OutOfRange, "gamma outside field");
    if (gamma.index == 0) throw Error(Errc::ZeroArgument, "gamma must be nonzero");
    if (factors.empty()) throw Error(Errc::BadParameters, "at least one factor is required");
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const Poly& f = factors[i];
        if (!same_field(f.field(), field)) throw Error(Errc::FieldMismatch, "factor field differs");
        if (f.degree() < 1 || !f.is_monic() || !is_irreducible(f)) {
            throw Error(Errc::BadParameters, to_string(f) + " is not monic irreducible");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (factors[j] == f) throw Error(Errc::BadParameters, to_string(f) + " repeats");
        }
    }
    return CurveSpec{std::move(field), gamma, std::move(factors)};
}

CurveSpec random_curve(FieldPtr field, std::size_t max_factors, int max_degree, std::uint64_t seed) {
    if (max_factors == 0 || max_degree < 1) {
        throw Error(Errc::BadParameters, "random curve needs at least one factor of degree >= 1");
    }
    std::mt19937_64 rng(seed);
    const auto count = std::uniform_int_distribution<std::size_t>(1, max_factors)(rng);
    std::vector<Poly> factors;
    while (factors.size() < count) {
        const int d = std::uniform_int_distribution<int>(1, max_degree)(rng);
        auto pick = random_monic_irreducibles(field, d, 1, rng()).front();
        if (std::find(factors.begin(), factors.end(), pick) == factors.end()) {
            factors.push_back(std::move(pick));
        }
    }
    const FieldElement gamma{std::uniform_int_distribution<std::uint32_t>(1, field->order() - 1)(rng)};
    return make_curve(std::move(field), gamma, std::move(factors));
}

std::uint64_t count_zeros(const FieldPtr& field, FieldElement gamma, std::span<const Poly> factors) {
    if (field->order() > kMaxCurveOrder) {
        throw Error(Errc::BudgetExceeded, "q = " + std::to_string(field->order()) +
                                              " exceeds the point-count budget 2^14");
    }
    const auto& f = *field;
    std::uint64_t count = 0;
    for (std::uint32_t i = 0; i < f.order(); ++i) {
        FieldElement rhs = gamma;
        for (const auto& p : factors) rhs = f.mul(rhs, eval(p, {i}));
        if (rhs.index == 0) count += 1;
        else if (f.is_square(rhs)) count += 2;
    }
    return count;
}

std::uint64_t count_zeros(const CurveSpec& curve) {
    return count_zeros(curve.field, curve.gamma, curve.factors);
}

WeilBoundReport check_weil_bound(const CurveSpec& curve) {
    WeilBoundReport r{};
    r.count = count_zeros(curve);
    r.q = curve.field->order();
    r.d = curve.ell();
    r.bound = (r.d - 1) * std::sqrt(static_cast<double>(r.q));
    // |count - q| <= (d - 1) sqrt(q)  <=>  (d - 1) sqrt(q) - |count - q| >= 0
    const __int128 diff = static_cast<__int128>(r.count) - static_cast<__int128>(r.q);
    r.ok = arith::sign_plus_sqrt(-(diff < 0 ? -diff : diff), r.d - 1, r.q) >= 0;
    return r;
}

WeightArgumentReport check_weight_argument(const ShadowCode& code, const BitVec& message) {
    const auto& field = code.E.field();
    if (field->order() > kMaxCurveOrder) {
        throw Error(Errc::BudgetExceeded, "q exceeds the point-count budget 2^14");
    }
    if (message.size() != code.B.polys.size()) {
        throw Error(Errc::LengthMismatch, "message needs one bit per basic polynomial");
    }
    if (!message.any()) throw Error(Errc::BadParameters, "message must be nonzero");

    BitVec word(code.n());
    FieldElement gamma = field->one();
    std::vector<Poly> factors;
    for (std::size_t i = 0; i < message.size(); ++i) {
        if (!message.get(i)) continue;
        word ^= code.G.row(i);
        const Poly& p = code.B.polys[i];
        if (p.is_constant()) gamma = field->mul(gamma, p.coeff(0));
        else factors.push_back(p);
    }

    WeightArgumentReport r{};
    r.weight = word.weight();
    r.zeros = code.n() - r.weight;
    r.curve_points = count_zeros(field, gamma, factors);
    const std::uint64_t q = field->order();
    r.zeros_bound = static_cast<double>(q) / 2 +
                    std::sqrt(static_cast<double>(q)) / 2 * (code.B.total_degree - 1);
    r.points_cover_zeros = r.curve_points >= 2 * r.zeros;
    // 2 m_v <= q + (d_B - 1) sqrt(q)
    r.zeros_within_bound =
        arith::sign_plus_sqrt(static_cast<__int128>(q) - 2 * static_cast<__int128>(r.zeros), code.B.total_degree - 1, q) >= 0;
    return r;
}

}  // namespace shadow
