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

#include "shadow/concat.hpp"

#include <string>

#include "shadow/errors.hpp"

namespace shadow {

ThetaMap::ThetaMap(FieldPtr field) {
    const std::uint32_t q = field->order();
    const std::uint32_t dim = field->degree();
    std::vector<FieldElement> basis(dim);
    FieldElement power = field->one();
    for (std::uint32_t i = 0; i < dim; ++i) {
        basis[i] = power;
        power = field->mul(power, field->primitive_element());
    }
    forward_.assign(q, field->zero());
    inverse_.assign(q, UINT32_MAX);
    for (std::uint32_t bits = 0; bits < q; ++bits) {
        FieldElement x = field->zero();
        for (std::uint32_t i = 0; i < dim; ++i) {
            if ((bits >> i) & 1u) x = field->add(x, basis[i]);
        }
        forward_[bits] = x;
        inverse_[x.index] = bits;
    }
}

ConcatSpec::ConcatSpec(unsigned m, std::size_t outer_length, std::size_t outer_dim)
    : m_(m), n_outer_(outer_length), k_outer_(outer_dim),
      field_((m >= 1 && m <= 19) ? Field::create(2, m + 1)
                                 : throw Error(Errc::BadParameters, "m must be in [1, 19]")),
      theta_(field_) {
    if (n_outer_ < 1 || n_outer_ > (std::size_t{1} << (m + 1)) - 1) {
        // Evaluation points are nonzero, so N is capped at 2^(m+1) - 1.
        throw Error(Errc::BadParameters, "N = " + std::to_string(n_outer_) +
                                             " must lie in [1, 2^(m+1) - 1]");
    }
    if (k_outer_ < 1 || k_outer_ > n_outer_) {
        throw Error(Errc::BadParameters, "K = " + std::to_string(k_outer_) + " must lie in [1, N]");
    }
}

std::vector<FieldElement> rs_encode(const ConcatSpec& spec, std::span<const FieldElement> message) {
    if (message.size() != spec.outer_dim()) {
        throw Error(Errc::LengthMismatch, "RS message needs " + std::to_string(spec.outer_dim()) +
                                              " symbols");
    }
    const auto& f = *spec.field();
    std::vector<FieldElement> out(spec.outer_length());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const FieldElement beta{static_cast<std::uint32_t>(i + 1)};
        FieldElement acc = f.zero();
        for (std::size_t j = message.size(); j-- > 0;) acc = f.add(f.mul(acc, beta), message[j]);
        out[i] = acc;
    }
    return out;
}

BitVec rm1_encode(unsigned m, const BitVec& message) {
    if (message.size() != m + 1) {
        throw Error(Errc::LengthMismatch, "RM(1," + std::to_string(m) + ") message needs " +
                                              std::to_string(m + 1) + " bits");
    }
    const std::size_t len = std::size_t{1} << m;
    BitVec out(len);
    for (std::size_t t = 0; t < len; ++t) {
        bool bit = message.get(0);
        for (unsigned i = 1; i <= m; ++i) bit ^= message.get(i) && ((t >> (i - 1)) & 1u);
        out.set(t, bit);
    }
    return out;
}

BitVec concat_encode(const ConcatSpec& spec, const BitVec& message) {
    const unsigned m = spec.m();
    if (message.size() != spec.dimension()) {
        throw Error(Errc::LengthMismatch, "concatenated message needs " +
                                              std::to_string(spec.dimension()) + " bits");
    }
    std::vector<FieldElement> symbols(spec.outer_dim());
    for (std::size_t j = 0; j < symbols.size(); ++j) {
        std::uint32_t bits = 0;
        for (unsigned i = 0; i <= m; ++i) bits |= std::uint32_t{message.get(j * (m + 1) + i)} << i;
        symbols[j] = spec.theta().to_field(bits);
    }
    const auto outer = rs_encode(spec, symbols);

    BitVec out(spec.length());
    const std::size_t block = spec.inner_length();
    BitVec inner_msg(m + 1);
    for (std::size_t s = 0; s < outer.size(); ++s) {
        const std::uint32_t bits = spec.theta().to_bits(outer[s]);
        for (unsigned i = 0; i <= m; ++i) inner_msg.set(i, (bits >> i) & 1u);
        const BitVec inner = rm1_encode(m, inner_msg);
        for (std::size_t t = 0; t < block; ++t) {
            if (inner.get(t)) out.set(s * block + t, true);
        }
    }
    return out;
}

ConcatParams concat_params(const ConcatSpec& spec) {
    const double n_outer = static_cast<double>(spec.outer_length());
    const double k_outer = static_cast<double>(spec.outer_dim());
    const double rate_outer = k_outer / n_outer;
    ConcatParams p{};
    p.n = spec.length();
    p.k = spec.dimension();
    p.dmin_lb = spec.dmin_lower_bound();
    p.rate_outer = rate_outer;
    p.rate = rate_outer * static_cast<double>(spec.m() + 1) /
             static_cast<double>(spec.inner_length());
    p.delta_lb = static_cast<double>(p.dmin_lb) / static_cast<double>(p.n);
    p.delta_outer = (1.0 - rate_outer) / 2.0;
    return p;
}

BinaryCode concat_code(const ConcatSpec& spec) {
    BitMatrix g(spec.dimension(), spec.length());
    for (std::size_t r = 0; r < spec.dimension(); ++r) {
        BitVec unit(spec.dimension());
        unit.set(r, true);
        g.set_row(r, concat_encode(spec, unit));
    }
    return BinaryCode::from_generator(g);
}

}  // namespace shadow
