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
#include <string_view>
#include <vector>

namespace shadow {

struct DgParams {
    std::uint64_t length;
    std::uint64_t log2_codewords;
    std::uint64_t dmin;
};

/// Delsarte-Goethals DG(m, d) with m = 2t + 2 >= 4 and 1 <= d <= t + 1.
DgParams dg_params(unsigned m, unsigned d);

struct RmParams {
    std::uint64_t length;
    std::uint64_t dimension;
    std::uint64_t dmin;
};

/// RM(r, m) for r in {1, 2}.
RmParams rm_params(unsigned r, unsigned m);

struct GvResult {
    std::uint64_t d;
    /// Set when n exceeds kGvExactLimit and a log-domain sum was used.
    bool approximate;
};

inline constexpr std::uint64_t kGvExactLimit = 4096;

/// Largest d with sum_{i=0}^{d-2} C(n-1, i) < 2^(n-k): a linear [n, k, d]
/// code is then guaranteed to exist.
GvResult gv_min_distance(std::uint64_t n, std::uint64_t k);

/// GV distances for every k in [1, n], index k - 1.
std::vector<GvResult> gv_table(std::uint64_t n);

/// (n - k + 1)/2 - (sqrt(n + k - 1)/2)(k - 2)
double shadow_lb_deg1(double n, double k);
/// n/2 - (sqrt(n)/2)(2k - 1)
double shadow_lb_deg2(double n, double k);

/// S(n, k) = k^3 + (n - 6)k^2 + (10 - 2n)k + (2n - 5 - n^2); negative exactly
/// when the degree-at-most-1 bound is positive.
double cubic_s(double n, double k);

struct CubicRecord {
    double n;
    double xi;
    double omega_sq;     // radicand -12n^3 + 177n^2 - 174n - 15
    double k0;           // bisection root in (0, n)
    double k0_cardano;   // closed form via complex cube roots
};

/// Root of S(n, .) in (0, n), by bisection and by Cardano's formula. Throws
/// if the two disagree by more than 1e-6.
CubicRecord k0(double n);

double k0_cardano(double n);

struct DeltaConResult {
    double delta;
    /// k is not a multiple of m + 1, so no code has exactly this dimension.
    bool approximate;
};

/// Relative distance bound of the N = 2^m RS-RM family at n = 4^m, dimension k.
DeltaConResult deltacon(std::uint64_t n, double k);

/// Relative distance bound of the degree-at-most-1 family at k = floor(n^a).
double deltash_family(std::uint64_t n, double a);

/// RS-RM relative distance at k = floor(n^a * log2 n), the log-scaled family.
DeltaConResult deltacon_family_log_scaled(std::uint64_t n, double a);

/// (1 - R_RS)/2: relative distance guarantee of the concatenated code.
double rsrm_relative_bound(double rate_outer);
/// (1 - R_RS (m + 1))/2: simplified shadow guarantee at matched n and rate.
double shadow_relative_bound(double rate_outer, unsigned m);

enum class Scheme { ShadowDeg1, ShadowDeg2, Rsrm, Dg, Rm1, Rm2, Gv, Random, Exact };
enum class PointKind { LowerBound, Exact, Existence };

std::string_view scheme_name(Scheme s) noexcept;
std::string_view kind_name(PointKind k) noexcept;

struct BoundPoint {
    Scheme scheme;
    std::uint64_t n;
    double k;  // dimension, or log2 of the codeword count for DG
    double rate;
    double delta;
    PointKind kind;
    bool approximate = false;
};

struct Fig1Row {
    double n;
    double k0;
    double approx;  // sqrt(n) + 0.5
};

/// k0(n) over `points` log-spaced lengths in [n_min, n_max].
std::vector<Fig1Row> fig1_rows(double n_min, double n_max, std::size_t points);

struct Fig3Config {
    std::uint64_t n = 1024;
    /// Largest dimension for which constructed shadow codes are enumerated.
    std::size_t exact_k_max = 20;
    std::vector<std::size_t> random_ks = {8, 12, 16, 20};
    std::uint64_t seed = 1;
    unsigned workers = 0;
};

/// Every curve and dot of the rate/relative-distance comparison at length n.
std::vector<BoundPoint> fig3_points(const Fig3Config& cfg);

/// Both families at k = floor(n^a) for n = 4^m, m in [m_min, m_max].
std::vector<BoundPoint> fig4_points(double a, unsigned m_min, unsigned m_max);

}  // namespace shadow
