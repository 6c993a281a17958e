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

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace shadow {

/// Packed bit vector, bit i stored in word i / 64 at position i % 64.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const noexcept { return n_; }
    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::span<std::uint64_t> words() noexcept { return words_; }

    bool get(std::size_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1u; }
    void set(std::size_t i, bool v) noexcept {
        const std::uint64_t mask = std::uint64_t{1} << (i % 64);
        if (v) words_[i / 64] |= mask;
        else words_[i / 64] &= ~mask;
    }
    void flip(std::size_t i) noexcept { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

    std::size_t weight() const noexcept {
        std::size_t w = 0;
        for (auto x : words_) w += static_cast<std::size_t>(std::popcount(x));
        return w;
    }
    bool any() const noexcept {
        for (auto x : words_) {
            if (x) return true;
        }
        return false;
    }

    BitVec& operator^=(const BitVec& other);
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    friend bool operator==(const BitVec&, const BitVec&) = default;

    /// Hex form: each character carries four consecutive bits, the first of
    /// them in the most significant position; the tail is zero padded.
    std::string to_hex() const;
    static BitVec from_hex(std::string_view hex, std::size_t n);

    std::string to_bits() const;
    static BitVec from_bits(std::string_view bits);

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Row-major packed binary matrix.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_((cols + 63) / 64), words_(rows * stride_, 0) {}

    static BitMatrix from_rows(std::span<const BitVec> rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t stride() const noexcept { return stride_; }

    bool get(std::size_t r, std::size_t c) const noexcept {
        return (words_[r * stride_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) noexcept {
        auto& w = words_[r * stride_ + c / 64];
        const std::uint64_t mask = std::uint64_t{1} << (c % 64);
        if (v) w |= mask;
        else w &= ~mask;
    }

    std::span<const std::uint64_t> row_words(std::size_t r) const noexcept {
        return {words_.data() + r * stride_, stride_};
    }
    BitVec row(std::size_t r) const;
    void set_row(std::size_t r, const BitVec& v);

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> words_;
};

/// GF(2) rank by Gaussian elimination.
std::size_t rank(const BitMatrix& g);

/// Indices of a maximal independent subset of rows, greedily in row order.
std::vector<std::size_t> independent_rows(const BitMatrix& g);

/// Binary linear code given by a full-rank generator matrix.
class BinaryCode {
public:
    /// Keeps a maximal independent subset of the given rows (greedy, in
    /// order), so k always equals the rank of the input.
    static BinaryCode from_generator(const BitMatrix& g);

    std::size_t n() const noexcept { return g_.cols(); }
    std::size_t k() const noexcept { return g_.rows(); }
    const BitMatrix& generator() const noexcept { return g_; }

    /// message * G; message has k bits.
    BitVec encode(const BitVec& message) const;

private:
    explicit BinaryCode(BitMatrix g) : g_(std::move(g)) {}
    BitMatrix g_;
};

inline constexpr std::size_t kMaxExactDimension = 28;
inline constexpr std::size_t kMaxDistributionDimension = 24;

/// Worker count used when the caller passes 0.
unsigned default_workers() noexcept;

/// Exact minimum distance by Gray-code enumeration of all 2^k - 1 nonzero
/// messages. Throws DimensionTooLarge above kMaxExactDimension.
std::size_t exact_min_distance(const BinaryCode& code, unsigned workers = 0);

/// Upper bound on dmin from `trials` random nonzero messages. When trials
/// reaches 2^k - 1 the whole message space is enumerated instead, so the
/// result is exact.
std::size_t sampled_min_distance_upper(const BinaryCode& code, std::uint64_t trials,
                                       std::uint64_t seed);

/// Uniform random k x n generator, redrawn until it has rank k.
BinaryCode random_linear_code(std::size_t n, std::size_t k, std::uint64_t seed);

/// Codeword counts by Hamming weight, indices 0..n.
std::vector<std::uint64_t> weight_distribution(const BinaryCode& code, unsigned workers = 0);

}  // namespace shadow
