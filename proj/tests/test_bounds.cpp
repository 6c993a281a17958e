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

#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "shadow/bounds.hpp"
#include "shadow/errors.hpp"

using namespace shadow;

TEST_SUITE("bounds") {

TEST_CASE("Delsarte-Goethals parameters") {
    const auto a = dg_params(4, 2);
    CHECK(a.length == 16);
    CHECK(a.log2_codewords == 8);
    CHECK(a.dmin == 6);
    CHECK(dg_params(10, 5).dmin == 496);
    for (unsigned m : {4u, 6u, 8u, 10u}) {
        CHECK(dg_params(m, 1).log2_codewords == rm_params(2, m).dimension);
        CHECK(dg_params(m, 1).dmin == rm_params(2, m).dmin);
    }
    CHECK(rm_params(2, 4).dimension == 11);
    CHECK_THROWS_AS(dg_params(5, 1), Error);
    CHECK_THROWS_AS(dg_params(4, 3), Error);
    CHECK_THROWS_AS(dg_params(4, 0), Error);
}

TEST_CASE("GV matches a Pascal-triangle oracle") {
    CHECK(gv_min_distance(16, 6).d == 5);
    CHECK_FALSE(gv_min_distance(16, 6).approximate);
    for (unsigned n = 1; n <= 90; ++n) {
        const auto table = gv_table(n);
        CHECK(gv_min_distance(n, n).d == 1);
        for (unsigned k = 1; k <= n; ++k) {
            CHECK(table[k - 1].d == oracle::gv_small(n, k));
            CHECK(gv_min_distance(n, k).d == table[k - 1].d);
        }
    }
    CHECK(gv_min_distance(1, 1).d == 1);
    CHECK(gv_min_distance(7, 1).d == 7);
    CHECK_THROWS_AS(gv_min_distance(5, 0), Error);
    CHECK_THROWS_AS(gv_min_distance(5, 6), Error);
}

TEST_CASE("GV is nonincreasing in k") {
    for (std::uint64_t n : {100u, 1024u, 5000u}) {
        const auto t = gv_table(n);
        for (std::size_t i = 1; i < t.size(); ++i) CHECK(t[i].d <= t[i - 1].d);
        CHECK(t.front().approximate == (n > kGvExactLimit));
    }
}

TEST_CASE("log-domain GV stays close to the exact one") {
    // Evaluate the approximation path at a length where the exact one also runs
    // by comparing neighbouring lengths across the cutover.
    const auto exact = gv_table(kGvExactLimit);
    const auto approx = gv_table(kGvExactLimit + 1);
    for (std::size_t k = 1; k <= exact.size(); ++k) {
        const auto e = static_cast<double>(exact[k - 1].d);
        const auto a = static_cast<double>(approx[k - 1].d);
        CHECK(std::abs(a - e) <= 2.0);
    }
}

TEST_CASE("shadow bound closed forms") {
    CHECK(shadow_lb_deg1(113, 9) == doctest::Approx(14));
    CHECK(shadow_lb_deg2(49, 3) == doctest::Approx(7));
    for (double n : {5.0, 50.0, 1000.0}) CHECK(shadow_lb_deg1(n, 2) == doctest::Approx((n - 1) / 2));
}

TEST_CASE("k0 brackets, agrees with Cardano and exceeds sqrt(n) + 0.5") {
    for (double n : {3.0, 4.0, 10.0, 37.0, 100.0, 1024.0, 1e4, 1e5, 1e6}) {
        CHECK(cubic_s(n, 0) < 0);
        CHECK(cubic_s(n, n) > 0);
        const auto r = k0(n);
        CHECK(r.k0 > 0);
        CHECK(r.k0 < n);
        CHECK(std::abs(r.k0 - r.k0_cardano) <= 1e-6);
        CHECK(std::abs(cubic_s(n, r.k0)) <= 1e-6 * n * n);
        CHECK(r.k0 >= std::sqrt(n) + 0.5);
    }
    CHECK(k0(1024).k0 >= 32.5);
    // Both signs of the radicand occur.
    CHECK(k0(3).omega_sq > 0);
    CHECK(k0(100).omega_sq < 0);
    CHECK_THROWS_AS(k0(2), Error);
}

TEST_CASE("S(n, k) < 0 exactly when the degree-at-most-1 bound is positive") {
    for (double n = 3; n <= 3000; n += 7) {
        for (double k = 1; k <= 80; k += 1) {
            const double s = cubic_s(n, k);
            const double lb = shadow_lb_deg1(n, k);
            if (std::abs(s) > 1e-6 * n * n && std::abs(lb) > 1e-9) CHECK((s < 0) == (lb > 0));
        }
        CHECK(shadow_lb_deg1(n, std::floor(std::sqrt(n) + 0.5)) > 0);
    }
}

TEST_CASE("concatenated family formulas") {
    for (unsigned m = 1; m <= 10; ++m) {
        const std::uint64_t n = std::uint64_t{1} << (2 * m);
        const auto r = deltacon(n, m + 1.0);
        CHECK(r.delta == doctest::Approx(0.5));
        CHECK_FALSE(r.approximate);
        CHECK(deltacon(n, m + 2.0).approximate);
    }
    CHECK_THROWS_AS(deltacon(32, 3), Error);
    try {
        deltacon(8, 2);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::BadShape);
    }
    // deltacon agrees with concat_params through k = K(m+1), n = 4^m, N = 2^m.
    const std::uint64_t n = 1024;
    for (unsigned big_k = 1; big_k <= 32; ++big_k) {
        const double k = big_k * 6.0;
        CHECK(deltacon(n, k).delta ==
              doctest::Approx(static_cast<double>((32 - big_k + 1) * 16) / 1024));
    }
}

TEST_CASE("degree-at-most-1 family at a = 1/2 decays to zero") {
    double prev = 1;
    for (unsigned m = 3; m <= 15; ++m) {
        const double v = deltash_family(std::uint64_t{1} << (2 * m), 0.5);
        CHECK(v < prev);
        prev = v;
    }
    CHECK(prev < 0.01);
    CHECK(deltash_family(1u << 20, 0.3) > 0.45);
    CHECK_THROWS_AS(deltash_family(16, 0.6), Error);
}

TEST_CASE("RS-RM beats the shadow family at n = 2^20, a = 0.49") {
    const std::uint64_t n = 1u << 20;
    const double k = std::floor(std::pow(static_cast<double>(n), 0.49));
    CHECK(deltacon(n, k).delta > deltash_family(n, 0.49));
    CHECK(deltacon_family_log_scaled(n, 0.49).delta < deltacon(n, k).delta);
}

TEST_CASE("ordering of the matched-rate bounds") {
    for (unsigned m = 2; m <= 10; ++m) {
        for (int i = 1; i <= 100; ++i) {
            const double r = i / (100.0 * (m + 1));
            CHECK(rsrm_relative_bound(r) > shadow_relative_bound(r, m));
        }
        CHECK(rsrm_relative_bound(0) == shadow_relative_bound(0, m));
    }
}

TEST_CASE("fig1 rows") {
    const auto rows = fig1_rows(10, 1e5, 50);
    REQUIRE(rows.size() == 50);
    CHECK(rows.front().n == doctest::Approx(10));
    CHECK(rows.back().n == doctest::Approx(1e5));
    for (const auto& r : rows) {
        CHECK(r.k0 >= r.approx);
        CHECK(r.approx == doctest::Approx(std::sqrt(r.n) + 0.5));
    }
    CHECK_THROWS_AS(fig1_rows(2, 10, 5), Error);
}

TEST_CASE("fig3 covers every scheme") {
    Fig3Config cfg;
    cfg.random_ks = {8, 12};
    cfg.exact_k_max = 10;
    const auto pts = fig3_points(cfg);
    std::set<Scheme> seen;
    for (const auto& p : pts) {
        seen.insert(p.scheme);
        CHECK(p.n == 1024);
        CHECK(p.rate == doctest::Approx(p.k / 1024.0));
        CHECK(p.delta >= 0);
        CHECK(p.delta <= 1);
    }
    CHECK(seen.size() == 9);
    for (const auto& p : pts) {
        if (p.scheme == Scheme::Exact) {
            // Constructed codes meet their own bound.
            CHECK(p.delta * 1024 >= shadow_lb_deg1(1024, p.k) - 1e-9);
        }
        if (p.scheme == Scheme::Rm1) CHECK(p.delta == doctest::Approx(0.5));
        if (p.scheme == Scheme::Rm2) CHECK(p.k == 56);
    }
    const auto gv_count = std::count_if(pts.begin(), pts.end(), [](const auto& p) { return p.scheme == Scheme::Gv; });
    CHECK(gv_count == 1024);
}

TEST_CASE("fig4 curves") {
    const auto pts = fig4_points(0.49, 2, 15);
    REQUIRE(pts.size() % 2 == 0);
    REQUIRE_FALSE(pts.empty());
    for (std::size_t i = 0; i < pts.size(); i += 2) {
        CHECK(pts[i].scheme == Scheme::Rsrm);
        CHECK(pts[i + 1].scheme == Scheme::ShadowDeg1);
        CHECK(pts[i].n == pts[i + 1].n);
        CHECK(pts[i].k == pts[i + 1].k);
        CHECK(pts[i].delta >= pts[i + 1].delta);
    }
    CHECK_THROWS_AS(fig4_points(0.49, 0, 3), Error);
}

}
