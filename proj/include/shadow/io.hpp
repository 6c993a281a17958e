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
#include <iosfwd>
#include <span>
#include <vector>

#include "json.hpp"
#include "shadow/binary_code.hpp"
#include "shadow/bounds.hpp"
#include "shadow/concat.hpp"
#include "shadow/field.hpp"
#include "shadow/shadow_code.hpp"

namespace shadow::io {

using nlohmann::json;

/// {p, m, modulus: [c0..cm]}
json field_to_json(const Field& field);
FieldPtr field_from_json(const json& j);

/// One hex string per row; see BitVec::to_hex for the bit order.
json matrix_to_json(const BitMatrix& g);
BitMatrix matrix_from_json(const json& rows, std::size_t cols);

/// {field, E, B, G, n, k, delta, ...}
json shadow_descriptor(const ShadowCode& code);

/// {kind: "rsrm", m, N, K, n, k, dmin_lb, rate, G}
json concat_descriptor(const ConcatSpec& spec);

/// The binary code in any descriptor that carries n and G.
BinaryCode code_from_descriptor(const json& j);

/// "weight,count" rows with a header line.
void write_weight_csv(std::ostream& out, std::span<const std::uint64_t> histogram);

/// scheme,n,k,rate,delta,kind
void write_points_csv(std::ostream& out, std::span<const BoundPoint> points);
json points_to_json(std::span<const BoundPoint> points);

void write_fig1_csv(std::ostream& out, std::span<const Fig1Row> rows);
json fig1_to_json(std::span<const Fig1Row> rows);

}  // namespace shadow::io
