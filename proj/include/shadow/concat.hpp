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

namespace shadow {

/// Coordinate-vector isomorphism between (m+1)-bit tuples and F_{2^(m+1)}:
/// bit i of the tuple is the coefficient of alpha^i, alpha the least-index
/// primitive element.
class ThetaMap {
public:
    ThetaMap(FieldPtr field);

    /// Bits are packed into an integer, bit i = coordinate i.
    FieldElement to_field(std::uint32_t bits) const { return forward_.at(bits); }
    std::uint32_t to_bits(FieldElement x) const { return inverse_.at(x.index); }

private:
    std::vector<FieldElement> forward_;
    std::vector<std::uint32_t> inverse_;
};

/// Outer RS(N, K) over F_{2^(m+1)} concatenated with inner RM(1, m).
class ConcatSpec {
public:
    ConcatSpec(unsigned m, std::size_t outer_length, std::size_t outer_dim);

    unsigned m() const noexcept { return m_; }
    std::size_t outer_length() const noexcept { return n_outer_; }
    std::size_t outer_dim() const noexcept { return k_outer_; }
    const FieldPtr& field() const noexcept { return field_; }
    const ThetaMap& theta() const noexcept { return theta_; }

    std::size_t inner_length() const noexcept { return std::size_t{1} << m_; }
    std::size_t length() const noexcept { return n_outer_ * inner_length(); }
    std::size_t dimension() const noexcept { return k_outer_ * (m_ + 1); }
    std::size_t dmin_lower_bound() const noexcept {
        return (n_outer_ - k_outer_ + 1) * (inner_length() / 2);
    }

private:
    unsigned m_;
    std::size_t n_outer_;
    std::size_t k_outer_;
    FieldPtr field_;
    ThetaMap theta_;
};

/// Evaluation encoding at the first N nonzero field elements in canonical
/// order: codeword_i = sum_j message_j * beta_i^j.
std::vector<FieldElement> rs_encode(const ConcatSpec& spec, std::span<const FieldElement> message);

/// Bit t of the output is message_0 + sum_i message_i * (bit i-1 of t).
BitVec rm1_encode(unsigned m, const BitVec& message);

/// Chunk, map through theta, RS encode, map back, RM encode each symbol.
BitVec concat_encode(const ConcatSpec& spec, const BitVec& message);

struct ConcatParams {
    std::size_t n;
    std::size_t k;
    std::size_t dmin_lb;
    double rate;          // (K/N)(m+1)/2^m
    double rate_outer;    // K/N
    double delta_lb;      // dmin_lb / n
    double delta_outer;   // (1 - K/N)/2
};

ConcatParams concat_params(const ConcatSpec& spec);

/// Generator matrix built from the images of the unit messages.
BinaryCode concat_code(const ConcatSpec& spec);

}  // namespace shadow
