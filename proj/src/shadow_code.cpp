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

#include "shadow/shadow_code.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "shadow/arith.hpp"
#include "shadow/bounds.hpp"
#include "shadow/errors.hpp"

namespace shadow {

EvaluationSet::EvaluationSet(FieldPtr field, std::vector<FieldElement> points)
    : field_(std::move(field)), points_(std::move(points)) {
    if (!field_->is_odd()) {
        throw Error(Errc::EvenCharacteristic, "shadow codes need a field of odd order");
    }
    if (points_.empty()) throw Error(Errc::BadParameters, "evaluation set is empty");
    std::sort(points_.begin(), points_.end());
    if (std::adjacent_find(points_.begin(), points_.end()) != points_.end()) {
        throw Error(Errc::BadParameters, "evaluation set has duplicate points");
    }
    if (!field_->contains(points_.back())) {
        throw Error(Errc::OutOfRange, "evaluation point " + std::to_string(points_.back().index) +
                                          " outside F_" + std::to_string(field_->order()));
    }
}

EvaluationSet EvaluationSet::first_n(FieldPtr field, std::size_t n) {
    if (n > field->order()) {
        throw Error(Errc::BadParameters, "|E| = " + std::to_string(n) + " exceeds q = " +
                                             std::to_string(field->order()));
    }
    std::vector<FieldElement> pts(n);
    for (std::size_t i = 0; i < n; ++i) pts[i] = {static_cast<std::uint32_t>(i)};
    return EvaluationSet(std::move(field), std::move(pts));
}

EvaluationSet EvaluationSet::full(FieldPtr field) {
    const std::size_t q = field->order();
    return first_n(std::move(field), q);
}

bool EvaluationSet::contains(FieldElement x) const noexcept {
    return std::binary_search(points_.begin(), points_.end(), x);
}

std::vector<FieldElement> EvaluationSet::complement() const {
    std::vector<FieldElement> out;
    for (std::uint32_t i = 0; i < field_->order(); ++i) {
        if (!contains({i})) out.push_back({i});
    }
    return out;
}

BasicSet make_basic_set(std::vector<Poly> polys, const EvaluationSet& e) {
    BasicSet out;
    const auto& field = *e.field();
    for (std::size_t i = 0; i < polys.size(); ++i) {
        const Poly& p = polys[i];
        if (!same_field(p.field(), e.field())) {
            throw Error(Errc::FieldMismatch, "basic polynomial over a different field");
        }
        if (p.is_zero()) throw Error(Errc::InvalidBasicSet, "zero polynomial is not basic");
        if (p.is_constant()) {
            if (out.has_constant) throw Error(Errc::InvalidBasicSet, "more than one constant");
            if (!field.is_primitive(p.coeff(0))) {
                throw Error(Errc::InvalidBasicSet, "constant " + std::to_string(p.coeff(0).index) +
                                                       " is not a primitive element");
            }
            out.has_constant = true;
            continue;
        }
        if (!p.is_monic()) throw Error(Errc::InvalidBasicSet, to_string(p) + " is not monic");
        if (!is_irreducible(p)) throw Error(Errc::InvalidBasicSet, to_string(p) + " is reducible");
        for (std::size_t j = 0; j < i; ++j) {
            if (polys[j] == p) throw Error(Errc::InvalidBasicSet, to_string(p) + " repeats");
        }
        // Irreducibles of degree >= 2 have no roots in F_q.
        if (p.degree() == 1) {
            const FieldElement root = field.neg(p.coeff(0));
            if (e.contains(root)) {
                throw Error(Errc::VanishesOnE,
                            to_string(p) + " vanishes at " + std::to_string(root.index));
            }
        }
        out.total_degree += p.degree();
    }
    out.polys = std::move(polys);
    return out;
}

double Delta::value() const {
    return (static_cast<double>(a_) + static_cast<double>(b_) * std::sqrt(static_cast<double>(q_))) /
           2.0;
}

bool Delta::is_exact() const { return arith::exact_sqrt(q_).has_value(); }

std::optional<std::int64_t> Delta::twice() const {
    const auto r = arith::exact_sqrt(q_);
    if (!r) return std::nullopt;
    return a_ + b_ * static_cast<std::int64_t>(*r);
}

int Delta::sign_minus(std::int64_t w) const {
    return arith::sign_plus_sqrt(static_cast<__int128>(a_) - 2 * static_cast<__int128>(w), b_, q_);
}

std::int64_t Delta::ceil() const {
    auto c = static_cast<std::int64_t>(std::ceil(value()));
    while (!at_most(c)) ++c;
    while (at_most(c - 1)) --c;
    return c;
}

Delta delta(const EvaluationSet& e, const BasicSet& b) {
    const std::int64_t q = e.field()->order();
    return Delta(2 * static_cast<std::int64_t>(e.size()) - q, 1 - b.total_degree,
                 static_cast<std::uint64_t>(q));
}

BitVec lambda_map(const Poly& p, const EvaluationSet& e) {
    if (!same_field(p.field(), e.field())) {
        throw Error(Errc::FieldMismatch, "polynomial and evaluation set use different fields");
    }
    const auto& field = *e.field();
    const auto pts = e.points();
    BitVec row(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const FieldElement v = eval(p, pts[i]);
        if (v.index == 0) {
            throw Error(Errc::VanishesOnE,
                        to_string(p) + " vanishes at " + std::to_string(pts[i].index));
        }
        row.set(i, field.lg_parity(v) != 0);
    }
    return row;
}

BasicSet build_B1(const EvaluationSet& e) {
    const auto excluded = e.complement();
    if (excluded.empty()) {
        throw Error(Errc::EvaluationSetIsFullField,
                    "E = F_q leaves no linear polynomial nonvanishing on E");
    }
    std::vector<Poly> polys;
    polys.reserve(excluded.size() + 1);
    for (auto lambda : excluded) polys.push_back(Poly::linear(e.field(), lambda));
    polys.push_back(Poly::constant(e.field(), e.field()->primitive_element()));
    return make_basic_set(std::move(polys), e);
}

BasicSet build_B2(const FieldPtr& field, std::size_t k, std::optional<std::uint64_t> seed) {
    if (!field->is_odd()) throw Error(Errc::EvenCharacteristic, "shadow codes need odd q");
    if (k == 0) throw Error(Errc::BadParameters, "need at least one basic polynomial");
    BasicSet out;
    out.polys = seed ? random_monic_irreducibles(field, 2, k, *seed)
                     : enumerate_monic_irreducibles(field, 2, k);
    out.total_degree = 2 * static_cast<int>(k);
    return out;
}

ShadowCode construct(EvaluationSet e, BasicSet b, ShadowKind kind) {
    std::vector<BitVec> rows;
    rows.reserve(b.polys.size());
    for (const auto& p : b.polys) rows.push_back(lambda_map(p, e));
    BitMatrix g = BitMatrix::from_rows(rows, e.size());
    const std::size_t r = rank(g);
    Delta d = delta(e, b);
    const bool positive = d.positive();
    if (positive && r != b.polys.size()) {
        throw std::logic_error("rank " + std::to_string(r) + " below |B| = " +
                               std::to_string(b.polys.size()) + " although Delta > 0");
    }
    const std::size_t claimed = positive ? b.polys.size() : r;
    return ShadowCode{std::move(e), std::move(b), std::move(g), d, r, claimed, !positive, kind};
}

namespace {

FieldPtr odd_field(std::uint64_t q) {
    const auto pp = find_odd_prime_power(q);
    if (!pp) {
        throw Error(Errc::BadParameters, "q = " + std::to_string(q) +
                                             " is not an odd prime power; nearest admissible q is " +
                                             std::to_string(nearest_odd_prime_power(q)));
    }
    return Field::create(pp->p, pp->m);
}

}  // namespace

ShadowCode construct_deg1(std::uint64_t q, std::size_t e_size) {
    auto field = odd_field(q);
    if (e_size == 0) throw Error(Errc::BadParameters, "|E| must be positive");
    auto e = EvaluationSet::first_n(field, e_size);
    auto b = build_B1(e);
    return construct(std::move(e), std::move(b), ShadowKind::DegreeAtMostOne);
}

ShadowCode construct_deg1_nk(std::size_t n, std::size_t k) {
    if (n == 0 || k == 0) throw Error(Errc::BadParameters, "n and k must be positive");
    const std::uint64_t q = n + k - 1;
    if (!find_odd_prime_power(q)) {
        throw Error(Errc::BadParameters,
                    "k: n + k - 1 = " + std::to_string(q) +
                        " is not an odd prime power; nearest admissible q is " +
                        std::to_string(nearest_odd_prime_power(q)) + " (k = " +
                        std::to_string(nearest_odd_prime_power(q) + 1 - n) + ")");
    }
    return construct_deg1(q, n);
}

ShadowCode construct_deg2(std::uint64_t q, std::size_t k, std::optional<std::uint64_t> seed) {
    auto field = odd_field(q);
    auto b = build_B2(field, k, seed);
    return construct(EvaluationSet::full(field), std::move(b), ShadowKind::DegreeTwo);
}

double distance_lower_bound(const ShadowCode& code) {
    if (!code.delta.positive()) {
        throw Error(Errc::NonpositiveDelta, "Delta = " + std::to_string(code.delta.value()) +
                                                " gives no distance guarantee");
    }
    const double value = code.delta.value();
    double closed_form = value;
    const double n = static_cast<double>(code.n());
    const double k = static_cast<double>(code.B.polys.size());
    if (code.kind == ShadowKind::DegreeAtMostOne) closed_form = shadow_lb_deg1(n, k);
    if (code.kind == ShadowKind::DegreeTwo && code.n() == code.E.field()->order()) {
        closed_form = shadow_lb_deg2(n, k);
    }
    if (std::abs(closed_form - value) > 1e-9 * std::max(1.0, std::abs(value))) {
        throw std::logic_error("Delta " + std::to_string(value) + " disagrees with closed form " +
                               std::to_string(closed_form));
    }
    return value;
}

std::uint64_t nearest_odd_prime_power(std::uint64_t target) {
    for (std::uint64_t d = 0;; ++d) {
        if (target >= d && find_odd_prime_power(target - d)) return target - d;
        if (find_odd_prime_power(target + d)) return target + d;
    }
}

}  // namespace shadow
