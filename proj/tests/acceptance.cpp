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

// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "shadow/bounds.hpp"
#include "shadow/concat.hpp"
#include "shadow/io.hpp"
#include "shadow/shadow_code.hpp"
#include "shadow/weil.hpp"

using namespace shadow;

namespace {

// Tolerances.
constexpr double kCardanoTol = 1e-6;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += "violated: " + what;
        }
    }
};

struct Criterion {
    const char* id;
    const char* title;
    double limit_seconds;
    std::function<Outcome()> run;
};

Outcome ac1() {
    Outcome o;
    const auto code = construct_deg1(121, 113);
    const auto d = exact_min_distance(code.binary_code());
    o.require(code.n() == 113, "n = 113");
    o.require(code.rank == 9, "rank 9");
    o.require(code.delta.twice() == 28, "Delta = 14 exactly");
    o.require(d >= 14, "dmin >= 14");
    o.detail = "(113, " + std::to_string(code.rank) + "), Delta = " + std::to_string(code.delta.value()) +
               ", dmin = " + std::to_string(d) + (o.detail.empty() ? "" : "; " + o.detail);
    return o;
}

Outcome ac2() {
    Outcome o;
    const auto code = construct_deg2(49, 3);
    const auto d = exact_min_distance(code.binary_code());
    o.require(code.n() == 49, "n = 49");
    o.require(code.rank == 3, "rank 3");
    o.require(code.delta.twice() == 14, "Delta = 7 exactly");
    o.require(d >= 7, "dmin >= 7");
    o.detail = "(49, " + std::to_string(code.rank) + "), Delta = " + std::to_string(code.delta.value()) +
               ", dmin = " + std::to_string(d) + (o.detail.empty() ? "" : "; " + o.detail);
    return o;
}

Outcome ac3() {
    Outcome o;
    long bad = -1;
    for (long n = 3; n <= 100000; ++n) {
        const double nn = static_cast<double>(n);
        if (!(cubic_s(nn, std::sqrt(nn) + 0.5) < 0)) {
            bad = n;
            break;
        }
    }
    o.require(bad < 0, "S(n, sqrt(n) + 0.5) < 0 at n = " + std::to_string(bad));
    double worst = 0;
    const int points = 50;
    for (int i = 0; i < points; ++i) {
        const double n = 3 * std::pow(1e5 / 3, i / static_cast<double>(points - 1));
        const auto rec = k0(n);
        worst = std::max(worst, std::abs(rec.k0 - rec.k0_cardano));
    }
    o.require(worst <= kCardanoTol, "bisection vs Cardano within 1e-6");
    std::ostringstream s;
    s << "n in [3, 1e5] all negative; max |bisection - Cardano| = " << worst << " over 50 points";
    o.detail = s.str() + (o.detail.empty() ? "" : "; " + o.detail);
    return o;
}

Outcome ac4() {
    Outcome o;
    auto f3 = Field::create(3);
    const auto hand = make_curve(f3, f3->one(), {parse_poly(f3, "1,0,1")});
    o.require(count_zeros(hand) == 2, "|V| = 2 on y^2 = x^2 + 1 over F_3");
    o.require(check_weil_bound(hand).ok, "bound on the F_3 curve");

    std::size_t specs = 0;
    std::uint64_t seed = 20260101;
    const std::vector<std::pair<std::uint32_t, std::uint32_t>> fields = {{3, 2}, {5, 2}, {3, 3}, {7, 2}, {11, 2}};
    for (auto [p, m] : fields) {
        auto field = Field::create(p, m);
        for (int t = 0; t < 45; ++t) {
            const auto c = random_curve(field, 5, 3, seed++);
            const auto r = check_weil_bound(c);
            ++specs;
            if (!r.ok) {
                o.require(false, "q = " + std::to_string(r.q) + ", count = " + std::to_string(r.count) +
                                     ", d = " + std::to_string(r.d));
            }
        }
    }
    o.require(specs >= 200, "at least 200 curves");
    o.detail = std::to_string(specs) + " random curves plus the F_3 case" + (o.detail.empty() ? "" : "; " + o.detail);
    return o;
}

Outcome ac5() {
    Outcome o;
    std::string dists;
    for (std::size_t big_k = 1; big_k <= 3; ++big_k) {
        ConcatSpec spec(2, 4, big_k);
        const auto code = concat_code(spec);
        const auto d = exact_min_distance(code);
        const auto p = concat_params(spec);
        const std::size_t bound = (4 - big_k + 1) * 2;
        o.require(code.k() == 3 * big_k, "dimension K(m+1) at K = " + std::to_string(big_k));
        o.require(d >= bound, "dmin >= (N-K+1) 2^(m-1) at K = " + std::to_string(big_k));
        // rate = k/n must equal (K/N)(m+1)/2^m as a rational: k * N * 2^m == K (m+1) n
        o.require(p.k * 4 * 4 == big_k * 3 * p.n, "rational rate at K = " + std::to_string(big_k));
        o.require(p.rate == static_cast<double>(big_k) / 4 * 3 / 4, "double rate at K = " + std::to_string(big_k));
        dists += (dists.empty() ? "" : ", ") + ("K=" + std::to_string(big_k) + ": dmin " + std::to_string(d) +
                                                " >= " + std::to_string(bound));
    }
    o.detail = dists + (o.detail.empty() ? "" : "; " + o.detail);
    return o;
}

Outcome ac6() {
    Outcome o;
    const auto dg = dg_params(4, 2);
    o.require(dg.length == 16 && dg.log2_codewords == 8 && dg.dmin == 6, "dg_params(4, 2) = (16, 8, 6)");
    for (unsigned m : {4u, 6u, 8u}) {
        o.require(dg_params(m, 1).log2_codewords == 1 + m + m * (m - 1) / 2,
                  "DG(" + std::to_string(m) + ", 1) matches RM(2, m) dimension");
    }
    const auto gv = gv_min_distance(16, 6);
    o.require(gv.d == 5 && !gv.approximate, "exact GV(16, 6) = 5");
    o.detail = "DG(4,2) = (" + std::to_string(dg.length) + ", " + std::to_string(dg.log2_codewords) + ", " +
               std::to_string(dg.dmin) + "), GV(16,6) = " + std::to_string(gv.d) + (o.detail.empty() ? "" : "; " + o.detail);
    return o;
}

Outcome ac7() {
    Outcome o;
    std::size_t grid = 0;
    for (unsigned m = 2; m <= 10; ++m) {
        const double top = 1.0 / (m + 1);
        for (int i = 1; i <= 1000; ++i) {
            const double r = top * i / 1000;
            ++grid;
            if (!(rsrm_relative_bound(r) > shadow_relative_bound(r, m))) {
                o.require(false, "strict ordering at m = " + std::to_string(m) + ", R = " + std::to_string(r));
            }
        }
        o.require(rsrm_relative_bound(0) == shadow_relative_bound(0, m), "equality at R = 0");
    }

    // Round-trip through the CSV the figure command writes.
    std::ostringstream csv;
    const auto pts = fig4_points(0.49, 2, 15);
    io::write_points_csv(csv, pts);
    std::istringstream in(csv.str());
    std::string line;
    std::getline(in, line);
    std::vector<std::tuple<std::string, std::string, double>> rows;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.emplace_back(cells.at(0), cells.at(1), std::stod(cells.at(4)));
    }
    std::size_t compared = 0;
    for (std::size_t i = 0; i + 1 < rows.size(); i += 2) {
        const auto& [s1, n1, d1] = rows[i];
        const auto& [s2, n2, d2] = rows[i + 1];
        o.require(s1 == "rsrm" && s2 == "shadow_deg1" && n1 == n2, "paired fig4 rows");
        if (!(d1 >= d2)) o.require(false, "rsrm >= shadow at n = " + n1);
        ++compared;
    }
    o.require(compared > 0 && rows.size() % 2 == 0, "fig4 emits both curves");
    o.detail = std::to_string(grid) + " grid points, " + std::to_string(compared) + " fig4 lengths" +
               (o.detail.empty() ? "" : "; " + o.detail);
    return o;
}

Outcome ac8() {
    Outcome o;
    std::size_t codes = 0, strict = 0;
    std::string gaps;
    for (std::size_t k = 3; k <= 14; ++k) {
        // Smallest n >= k^2 with n + k - 1 an odd prime power.
        std::size_t n = k * k;
        while (!find_odd_prime_power(n + k - 1)) ++n;
        const auto code = construct_deg1_nk(n, k);
        if (!code.delta.positive()) continue;
        const auto d = static_cast<std::int64_t>(exact_min_distance(code.binary_code()));
        const auto c = code.delta.ceil();
        ++codes;
        if (d < c) o.require(false, "dmin >= ceil(Delta) for (" + std::to_string(n) + ", " + std::to_string(k) + ")");
        if (d > c) ++strict;
        gaps += (gaps.empty() ? "" : " ") + ("(" + std::to_string(n) + "," + std::to_string(k) + "):" +
                                             std::to_string(d) + "-" + std::to_string(c));
    }
    o.require(codes >= 5, "at least 5 codes with Delta > 0");
    o.require(strict >= 1, "some dmin strictly above ceil(Delta)");
    o.detail = std::to_string(codes) + " codes, " + std::to_string(strict) + " strict; dmin-ceil(Delta): " + gaps +
               (o.detail.empty() ? "" : "; " + o.detail);
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"AC1", "degree-at-most-1 code q=121, |E|=113", 1.0, ac1},
        {"AC2", "degree-2 code q=49, k=3", 1.0, ac2},
        {"AC3", "cubic threshold sign and Cardano root", 10.0, ac3},
        {"AC4", "point-count bound on random curves", 30.0, ac4},
        {"AC5", "RS-RM m=2, N=4, K=1..3", 1.0, ac5},
        {"AC6", "DG and GV tables", 1.0, ac6},
        {"AC7", "RS-RM vs shadow relative distance ordering", 5.0, ac7},
        {"AC8", "distance exceeds ceil(Delta) somewhere", 120.0, ac8},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.limit_seconds;
        const bool pass = o.ok && in_time;
        failures += !pass;
        std::printf("[%s] %s %s: %s (%.3f s, limit %.0f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.title,
                    o.detail.c_str(), secs, c.limit_seconds, in_time ? "" : ", exceeded");
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
