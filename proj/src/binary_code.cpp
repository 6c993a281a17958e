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

#include "shadow/binary_code.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <thread>

#include "shadow/errors.hpp"

namespace shadow {

BitVec& BitVec::operator^=(const BitVec& other) {
    if (other.n_ != n_) throw Error(Errc::LengthMismatch, "xor of bit vectors of unequal length");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

std::string BitVec::to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve((n_ + 3) / 4);
    for (std::size_t i = 0; i < n_; i += 4) {
        unsigned nibble = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            nibble = (nibble << 1) | ((i + j < n_ && get(i + j)) ? 1u : 0u);
        }
        out += kDigits[nibble];
    }
    return out;
}

BitVec BitVec::from_hex(std::string_view hex, std::size_t n) {
    if (hex.size() != (n + 3) / 4) {
        throw Error(Errc::LengthMismatch, "hex row has " + std::to_string(hex.size()) +
                                              " digits, expected " + std::to_string((n + 3) / 4));
    }
    BitVec out(n);
    for (std::size_t c = 0; c < hex.size(); ++c) {
        const char ch = hex[c];
        unsigned nibble;
        if (ch >= '0' && ch <= '9') nibble = static_cast<unsigned>(ch - '0');
        else if (ch >= 'a' && ch <= 'f') nibble = static_cast<unsigned>(ch - 'a' + 10);
        else if (ch >= 'A' && ch <= 'F') nibble = static_cast<unsigned>(ch - 'A' + 10);
        else throw Error(Errc::ParseError, std::string("bad hex digit '") + ch + "'");
        for (std::size_t j = 0; j < 4; ++j) {
            const bool bit = (nibble >> (3 - j)) & 1u;
            const std::size_t i = 4 * c + j;
            if (i < n) out.set(i, bit);
            else if (bit) throw Error(Errc::ParseError, "nonzero padding bit in hex row");
        }
    }
    return out;
}

std::string BitVec::to_bits() const {
    std::string out(n_, '0');
    for (std::size_t i = 0; i < n_; ++i) {
        if (get(i)) out[i] = '1';
    }
    return out;
}

BitVec BitVec::from_bits(std::string_view bits) {
    BitVec out(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') out.set(i, true);
        else if (bits[i] != '0') throw Error(Errc::ParseError, "bit string must be 0/1");
    }
    return out;
}

BitMatrix BitMatrix::from_rows(std::span<const BitVec> rows, std::size_t cols) {
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

BitVec BitMatrix::row(std::size_t r) const {
    BitVec v(cols_);
    std::copy_n(words_.begin() + static_cast<std::ptrdiff_t>(r * stride_), stride_,
                v.words().begin());
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVec& v) {
    if (v.size() != cols_) throw Error(Errc::LengthMismatch, "row length differs from matrix");
    std::copy(v.words().begin(), v.words().end(),
              words_.begin() + static_cast<std::ptrdiff_t>(r * stride_));
}

std::vector<std::size_t> independent_rows(const BitMatrix& g) {
    struct BasisRow {
        std::vector<std::uint64_t> words;
        std::size_t pivot;
    };
    std::vector<BasisRow> basis;
    std::vector<std::size_t> chosen;
    const std::size_t stride = g.stride();
    for (std::size_t r = 0; r < g.rows(); ++r) {
        auto src = g.row_words(r);
        std::vector<std::uint64_t> v(src.begin(), src.end());
        for (const auto& b : basis) {
            if ((v[b.pivot / 64] >> (b.pivot % 64)) & 1u) {
                for (std::size_t w = 0; w < stride; ++w) v[w] ^= b.words[w];
            }
        }
        for (std::size_t w = 0; w < stride; ++w) {
            if (v[w] == 0) continue;
            const std::size_t pivot = 64 * w + static_cast<std::size_t>(std::countr_zero(v[w]));
            basis.push_back({std::move(v), pivot});
            chosen.push_back(r);
            break;
        }
    }
    return chosen;
}

std::size_t rank(const BitMatrix& g) { return independent_rows(g).size(); }

BinaryCode BinaryCode::from_generator(const BitMatrix& g) {
    const auto keep = independent_rows(g);
    if (keep.size() == g.rows()) return BinaryCode(g);
    BitMatrix reduced(keep.size(), g.cols());
    for (std::size_t i = 0; i < keep.size(); ++i) reduced.set_row(i, g.row(keep[i]));
    return BinaryCode(std::move(reduced));
}

BitVec BinaryCode::encode(const BitVec& message) const {
    if (message.size() != k()) {
        throw Error(Errc::LengthMismatch, "message has " + std::to_string(message.size()) +
                                              " bits, code dimension is " + std::to_string(k()));
    }
    BitVec out(n());
    auto dst = out.words();
    for (std::size_t r = 0; r < k(); ++r) {
        if (!message.get(r)) continue;
        auto src = g_.row_words(r);
        for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
    }
    return out;
}

unsigned default_workers() noexcept { return std::max(1u, std::thread::hardware_concurrency()); }

namespace {

// Walks Gray-code message indices [lo, hi): message i is gray(i) = i ^ (i >> 1),
// so consecutive codewords differ by exactly one generator row. `visit` gets
// the weight of every nonzero codeword in the range.
template <class Visit>
void gray_scan(const BitMatrix& g, std::uint64_t lo, std::uint64_t hi, Visit&& visit) {
    const std::size_t stride = g.stride();
    std::vector<std::uint64_t> cw(stride, 0);
    const std::uint64_t start = lo ^ (lo >> 1);
    for (std::size_t r = 0; r < g.rows(); ++r) {
        if ((start >> r) & 1u) {
            auto row = g.row_words(r);
            for (std::size_t w = 0; w < stride; ++w) cw[w] ^= row[w];
        }
    }
    for (std::uint64_t i = lo; i < hi; ++i) {
        if (i != 0) {
            std::size_t wt = 0;
            for (std::size_t w = 0; w < stride; ++w) wt += static_cast<std::size_t>(std::popcount(cw[w]));
            visit(wt);
        }
        if (i + 1 < hi) {
            auto row = g.row_words(static_cast<std::size_t>(std::countr_zero(i + 1)));
            for (std::size_t w = 0; w < stride; ++w) cw[w] ^= row[w];
        }
    }
}

// Splits [0, total) into contiguous segments, runs `make_visitor(segment)` on
// each in its own thread, and returns the per-segment states in order.
template <class State, class Fn>
std::vector<State> parallel_segments(std::uint64_t total, unsigned workers, Fn&& fn) {
    if (workers == 0) workers = default_workers();
    if (total < (std::uint64_t{1} << 14)) workers = 1;
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));
    std::vector<State> states(workers);
    std::vector<std::thread> threads;
    const std::uint64_t chunk = total / workers;
    for (unsigned t = 0; t < workers; ++t) {
        const std::uint64_t lo = t * chunk;
        const std::uint64_t hi = (t + 1 == workers) ? total : lo + chunk;
        if (workers == 1) {
            fn(states[t], lo, hi);
        } else {
            threads.emplace_back([&, t, lo, hi] { fn(states[t], lo, hi); });
        }
    }
    for (auto& th : threads) th.join();
    return states;
}

}  // namespace

std::size_t exact_min_distance(const BinaryCode& code, unsigned workers) {
    if (code.k() == 0) throw Error(Errc::BadParameters, "zero-dimensional code has no distance");
    if (code.k() > kMaxExactDimension) {
        throw Error(Errc::DimensionTooLarge,
                    "k = " + std::to_string(code.k()) + " exceeds the exact enumeration cap of " +
                        std::to_string(kMaxExactDimension) + "; use a sampled estimate instead");
    }
    const std::uint64_t total = std::uint64_t{1} << code.k();
    const auto& g = code.generator();
    auto mins = parallel_segments<std::size_t>(
        total, workers, [&](std::size_t& best, std::uint64_t lo, std::uint64_t hi) {
            best = std::numeric_limits<std::size_t>::max();
            gray_scan(g, lo, hi, [&](std::size_t wt) { best = std::min(best, wt); });
        });
    return *std::min_element(mins.begin(), mins.end());
}

std::vector<std::uint64_t> weight_distribution(const BinaryCode& code, unsigned workers) {
    if (code.k() > kMaxDistributionDimension) {
        throw Error(Errc::DimensionTooLarge, "weight distribution needs k <= " +
                                                 std::to_string(kMaxDistributionDimension));
    }
    const std::uint64_t total = std::uint64_t{1} << code.k();
    const auto& g = code.generator();
    const std::size_t n = code.n();
    auto parts = parallel_segments<std::vector<std::uint64_t>>(
        total, workers, [&](std::vector<std::uint64_t>& hist, std::uint64_t lo, std::uint64_t hi) {
            hist.assign(n + 1, 0);
            gray_scan(g, lo, hi, [&](std::size_t wt) { ++hist[wt]; });
        });
    std::vector<std::uint64_t> out(n + 1, 0);
    out[0] = 1;
    for (const auto& h : parts) {
        for (std::size_t w = 0; w <= n; ++w) out[w] += h[w];
    }
    return out;
}

std::size_t sampled_min_distance_upper(const BinaryCode& code, std::uint64_t trials,
                                       std::uint64_t seed) {
    if (code.k() == 0) throw Error(Errc::BadParameters, "zero-dimensional code has no distance");
    if (trials == 0) throw Error(Errc::BadParameters, "at least one trial is required");
    if (code.k() <= kMaxExactDimension && trials >= (std::uint64_t{1} << code.k()) - 1) {
        return exact_min_distance(code, 1);
    }
    std::mt19937_64 rng(seed);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    BitVec message(code.k());
    for (std::uint64_t t = 0; t < trials; ++t) {
        do {
            for (auto& w : message.words()) w = rng();
            if (code.k() % 64) message.words().back() &= (std::uint64_t{1} << (code.k() % 64)) - 1;
        } while (!message.any());
        best = std::min(best, code.encode(message).weight());
    }
    return best;
}

BinaryCode random_linear_code(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (k > n) {
        throw Error(Errc::BadParameters, "dimension " + std::to_string(k) + " exceeds length " +
                                             std::to_string(n));
    }
    std::mt19937_64 rng(seed);
    BitMatrix g(k, n);
    while (true) {
        for (std::size_t r = 0; r < k; ++r) {
            BitVec row(n);
            for (auto& w : row.words()) w = rng();
            if (n % 64) row.words().back() &= (std::uint64_t{1} << (n % 64)) - 1;
            g.set_row(r, row);
        }
        if (rank(g) == k) return BinaryCode::from_generator(g);
    }
}

}  // namespace shadow
