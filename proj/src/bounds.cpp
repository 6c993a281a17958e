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

#include "shadow/bounds.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "shadow/arith.hpp"
#include "shadow/binary_code.hpp"
#include "shadow/errors.hpp"
#include "shadow/field.hpp"
#include "shadow/shadow_code.hpp"

namespace shadow {

using boost::multiprecision::cpp_int;

DgParams dg_params(unsigned m, unsigned d) {
    if (m < 4 || m % 2 != 0 || m > 62) {
        throw Error(Errc::BadParameters, "DG needs even m in [4, 62], got " + std::to_string(m));
    }
    const std::uint64_t t = (m - 2) / 2;
    if (d < 1 || d > t + 1) {
        throw Error(Errc::BadParameters, "DG(" + std::to_string(m) + ", d) needs 1 <= d <= " +
                                             std::to_string(t + 1));
    }
    const std::uint64_t length = std::uint64_t{1} << m;
    const std::uint64_t log2m = (2 * t + 1) * (t - d + 2) + 2 * t + 3;
    const std::uint64_t dmin = (std::uint64_t{1} << (2 * t + 1)) - (std::uint64_t{1} << (2 * t + 1 - d));
    return {length, log2m, dmin};
}

RmParams rm_params(unsigned r, unsigned m) {
    if (r < 1 || r > 2 || m < r || m > 62) {
        throw Error(Errc::BadParameters, "RM(r, m) needs r in {1, 2} and r <= m <= 62");
    }
    const std::uint64_t length = std::uint64_t{1} << m;
    if (r == 1) return {length, std::uint64_t{m} + 1, length / 2};
    return {length, 1 + std::uint64_t{m} + std::uint64_t{m} * (m - 1) / 2, length / 4};
}

namespace {

// log2 of sum_{i=0}^{j} C(n-1, i) for j = 0..n-1, via log-sum-exp.
std::vector<double> log2_binomial_prefix(std::uint64_t n) {
    std::vector<double> out(n);
    const double ln2 = std::log(2.0);
    const double lg_top = std::lgamma(static_cast<double>(n));
    double acc = -INFINITY;
    for (std::uint64_t i = 0; i < n; ++i) {
        const double term = (lg_top - std::lgamma(static_cast<double>(i) + 1) -
                             std::lgamma(static_cast<double>(n - i))) /
                            ln2;
        const double hi = std::max(acc, term);
        acc = hi + std::log2(std::exp2(acc - hi) + std::exp2(term - hi));
        out[i] = acc;
    }
    return out;
}

}  // namespace

std::vector<GvResult> gv_table(std::uint64_t n) {
    if (n == 0) throw Error(Errc::BadParameters, "GV bound needs n >= 1");
    std::vector<GvResult> out(n);
    if (n <= kGvExactLimit) {
        // prefix[j] = sum_{i=0}^{j-1} C(n-1, i), so prefix[d-1] is the GV sum for d.
        std::vector<cpp_int> prefix(n + 1);
        cpp_int binom = 1;
        for (std::uint64_t i = 0; i < n; ++i) {
            prefix[i + 1] = prefix[i] + binom;
            binom = binom * (n - 1 - i) / (i + 1);
        }
        for (std::uint64_t k = 1; k <= n; ++k) {
            const cpp_int limit = cpp_int(1) << static_cast<unsigned>(n - k);
            // Largest d in [1, n] with prefix[d - 1] < limit; prefix is increasing.
            const auto it = std::lower_bound(prefix.begin(), prefix.begin() + static_cast<std::ptrdiff_t>(n),
                                             limit);
            out[k - 1] = {static_cast<std::uint64_t>(it - prefix.begin()), false};
        }
        return out;
    }
    const auto logs = log2_binomial_prefix(n);
    // k = 1: the full sum is 2^(n-1), so every d <= n qualifies. The log-domain
    // prefix saturates long before that.
    out[0] = {n, true};
    for (std::uint64_t k = 2; k <= n; ++k) {
        const double limit = static_cast<double>(n - k);
        // d = 1 always qualifies (empty sum); d qualifies iff logs[d - 2] < limit.
        const auto it = std::lower_bound(logs.begin(), logs.end() - 1, limit);
        out[k - 1] = {static_cast<std::uint64_t>(it - logs.begin()) + 1, true};
    }
    return out;
}

GvResult gv_min_distance(std::uint64_t n, std::uint64_t k) {
    if (k < 1 || k > n) throw Error(Errc::BadParameters, "GV bound needs 1 <= k <= n");
    if (n <= kGvExactLimit) {
        const cpp_int limit = cpp_int(1) << static_cast<unsigned>(n - k);
        cpp_int sum = 0;
        cpp_int binom = 1;  // C(n-1, d-1)
        std::uint64_t d = 1;
        while (d < n) {
            if (sum + binom >= limit) break;
            sum += binom;
            binom = binom * (n - d) / d;
            ++d;
        }
        return {d, false};
    }
    return gv_table(n)[k - 1];
}

double shadow_lb_deg1(double n, double k) {
    return (n - k + 1) / 2 - std::sqrt(n + k - 1) / 2 * (k - 2);
}

double shadow_lb_deg2(double n, double k) { return n / 2 - std::sqrt(n) / 2 * (2 * k - 1); }

double cubic_s(double n, double k) {
    return ((k + (n - 6)) * k + (10 - 2 * n)) * k + (2 * n - 5 - n * n);
}

double k0_cardano(double n) {
    const double xi = (-2 * n * n * n + 45 * n * n - 72 * n + 27) / 54;
    const double rad = -12 * n * n * n + 177 * n * n - 174 * n - 15;
    const double shift = (n - 6) / 3;
    if (rad >= 0) {
        const double omega = (n - 1) * std::sqrt(rad) / 18;
        return std::cbrt(xi + omega) + std::cbrt(xi - omega) - shift;
    }
    // xi +- omega are complex conjugates; their principal cube roots are too,
    // and their sum is the positive root.
    const std::complex<double> z(xi, (n - 1) * std::sqrt(-rad) / 18);
    return 2 * std::pow(z, 1.0 / 3.0).real() - shift;
}

CubicRecord k0(double n) {
    if (!(n >= 3)) throw Error(Errc::BadParameters, "k0 needs n >= 3");
    double lo = 0, hi = n;
    while (hi - lo > 1e-10) {
        const double mid = (lo + hi) / 2;
        if (cubic_s(n, mid) < 0) lo = mid;
        else hi = mid;
    }
    CubicRecord rec;
    rec.n = n;
    rec.xi = (-2 * n * n * n + 45 * n * n - 72 * n + 27) / 54;
    rec.omega_sq = -12 * n * n * n + 177 * n * n - 174 * n - 15;
    rec.k0 = (lo + hi) / 2;
    rec.k0_cardano = k0_cardano(n);
    if (std::abs(rec.k0 - rec.k0_cardano) > 1e-6) {
        throw std::logic_error("k0 bisection " + std::to_string(rec.k0) + " vs Cardano " +
                               std::to_string(rec.k0_cardano) + " at n = " + std::to_string(n));
    }
    return rec;
}

namespace {

unsigned log4_exact(std::uint64_t n) {
    unsigned m = 0;
    std::uint64_t v = 1;
    while (v < n && m < 31) {
        v *= 4;
        ++m;
    }
    if (v != n || m == 0) {
        throw Error(Errc::BadShape, "n = " + std::to_string(n) + " is not 4^m with m >= 1");
    }
    return m;
}

double floor_pow(double base, double a) { return std::floor(std::pow(base, a) + 1e-9); }

}  // namespace

DeltaConResult deltacon(std::uint64_t n, double k) {
    const unsigned m = log4_exact(n);
    const double sqrt_n = std::ldexp(1.0, static_cast<int>(m));
    const double delta = 0.5 - (k - m - 1) / (sqrt_n * (2.0 * m + 2));
    const bool approx = std::fmod(k, m + 1.0) != 0.0;
    return {delta, approx};
}

double deltash_family(std::uint64_t n, double a) {
    if (!(a > 0 && a <= 0.5)) throw Error(Errc::BadParameters, "a must lie in (0, 1/2]");
    const double nn = static_cast<double>(n);
    return shadow_lb_deg1(nn, floor_pow(nn, a)) / nn;
}

DeltaConResult deltacon_family_log_scaled(std::uint64_t n, double a) {
    if (!(a > 0 && a <= 0.5)) throw Error(Errc::BadParameters, "a must lie in (0, 1/2]");
    const double nn = static_cast<double>(n);
    return deltacon(n, std::floor(std::pow(nn, a) * std::log2(nn) + 1e-9));
}

double rsrm_relative_bound(double rate_outer) { return (1 - rate_outer) / 2; }

double shadow_relative_bound(double rate_outer, unsigned m) {
    return (1 - rate_outer * (m + 1)) / 2;
}

std::string_view scheme_name(Scheme s) noexcept {
    switch (s) {
        case Scheme::ShadowDeg1: return "shadow_deg1";
        case Scheme::ShadowDeg2: return "shadow_deg2";
        case Scheme::Rsrm: return "rsrm";
        case Scheme::Dg: return "dg";
        case Scheme::Rm1: return "rm1";
        case Scheme::Rm2: return "rm2";
        case Scheme::Gv: return "gv";
        case Scheme::Random: return "random";
        case Scheme::Exact: return "exact";
    }
    return "?";
}

std::string_view kind_name(PointKind k) noexcept {
    switch (k) {
        case PointKind::LowerBound: return "lower_bound";
        case PointKind::Exact: return "exact";
        case PointKind::Existence: return "existence";
    }
    return "?";
}

std::vector<Fig1Row> fig1_rows(double n_min, double n_max, std::size_t points) {
    if (!(n_min >= 3) || !(n_max >= n_min) || points < 2) {
        throw Error(Errc::BadParameters, "fig1 needs 3 <= n_min <= n_max and >= 2 points");
    }
    std::vector<Fig1Row> rows;
    rows.reserve(points);
    const double ratio = n_max / n_min;
    for (std::size_t i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(points - 1);
        const double n = i + 1 == points ? n_max : n_min * std::pow(ratio, t);
        rows.push_back({n, k0(n).k0, std::sqrt(n) + 0.5});
    }
    return rows;
}

std::vector<BoundPoint> fig3_points(const Fig3Config& cfg) {
    const std::uint64_t n = cfg.n;
    if (n < 4) throw Error(Errc::BadParameters, "fig3 needs n >= 4");
    const double nn = static_cast<double>(n);
    std::vector<BoundPoint> out;
    auto push = [&](Scheme s, double k, double dist, PointKind kind, bool approx = false) {
        out.push_back({s, n, k, k / nn, dist / nn, kind, approx});
    };

    const auto kmax1 = static_cast<std::size_t>(std::floor(k0(nn).k0));
    for (std::size_t k = 2; k <= kmax1; ++k) {
        const double lb = shadow_lb_deg1(nn, static_cast<double>(k));
        if (lb > 0) push(Scheme::ShadowDeg1, static_cast<double>(k), lb, PointKind::LowerBound);
    }
    for (std::size_t k = 1;; ++k) {
        const double lb = shadow_lb_deg2(nn, static_cast<double>(k));
        if (lb <= 0) break;
        push(Scheme::ShadowDeg2, static_cast<double>(k), lb, PointKind::LowerBound);
    }

    const bool pow2 = (n & (n - 1)) == 0;
    if (pow2) {
        const auto j = static_cast<unsigned>(std::countr_zero(n));
        // Inner RM(1, m) with outer length N = 2^(j - m) <= 2^m.
        const unsigned m = (j + 1) / 2;
        const std::uint64_t outer_n = n >> m;
        for (std::uint64_t big_k = 1; big_k <= outer_n; ++big_k) {
            const double dmin = static_cast<double>((outer_n - big_k + 1) << (m - 1));
            push(Scheme::Rsrm, static_cast<double>(big_k * (m + 1)), dmin, PointKind::LowerBound);
        }
        if (j >= 4 && j % 2 == 0) {
            for (unsigned d = 1; d <= (j - 2) / 2 + 1; ++d) {
                const auto dg = dg_params(j, d);
                push(Scheme::Dg, static_cast<double>(dg.log2_codewords), static_cast<double>(dg.dmin),
                     PointKind::Exact);
            }
        }
        const auto rm1 = rm_params(1, j);
        push(Scheme::Rm1, static_cast<double>(rm1.dimension), static_cast<double>(rm1.dmin),
             PointKind::Exact);
        if (j >= 2) {
            const auto rm2 = rm_params(2, j);
            push(Scheme::Rm2, static_cast<double>(rm2.dimension), static_cast<double>(rm2.dmin),
                 PointKind::Exact);
        }
    }

    const auto gv = gv_table(n);
    for (std::uint64_t k = 1; k <= n; ++k) {
        push(Scheme::Gv, static_cast<double>(k), static_cast<double>(gv[k - 1].d), PointKind::Existence,
             gv[k - 1].approximate);
    }

    for (auto k : cfg.random_ks) {
        if (k == 0 || k > n || k > kMaxExactDimension) continue;
        const auto code = random_linear_code(n, k, cfg.seed + k);
        push(Scheme::Random, static_cast<double>(k),
             static_cast<double>(exact_min_distance(code, cfg.workers)), PointKind::Exact);
    }

    for (std::size_t k = 2; k <= std::min(cfg.exact_k_max, kMaxExactDimension); ++k) {
        if (!find_odd_prime_power(n + k - 1)) continue;
        const auto code = construct_deg1_nk(n, k).binary_code();
        push(Scheme::Exact, static_cast<double>(code.k()),
             static_cast<double>(exact_min_distance(code, cfg.workers)), PointKind::Exact);
    }
    return out;
}

std::vector<BoundPoint> fig4_points(double a, unsigned m_min, unsigned m_max) {
    if (m_min < 1 || m_max > 31 || m_min > m_max) {
        throw Error(Errc::BadParameters, "fig4 needs 1 <= m_min <= m_max <= 31");
    }
    std::vector<BoundPoint> out;
    for (unsigned m = m_min; m <= m_max; ++m) {
        const std::uint64_t n = std::uint64_t{1} << (2 * m);
        const double nn = static_cast<double>(n);
        const double k = floor_pow(nn, a);
        // Below m + 1 there is no concatenated code with K >= 1.
        if (k < m + 1) continue;
        const auto con = deltacon(n, k);
        out.push_back({Scheme::Rsrm, n, k, k / nn, con.delta, PointKind::LowerBound, con.approximate});
        out.push_back({Scheme::ShadowDeg1, n, k, k / nn, deltash_family(n, a), PointKind::LowerBound,
                       false});
    }
    return out;
}

}  // namespace shadow
