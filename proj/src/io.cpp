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

#include "shadow/io.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "shadow/errors.hpp"

namespace shadow::io {

namespace {

std::string fmt_double(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

template <class T>
T require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw Error(Errc::ParseError, std::string("descriptor lacks '") + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw Error(Errc::ParseError, std::string("bad '") + key + "': " + e.what());
    }
}

}  // namespace

json field_to_json(const Field& field) {
    return {{"p", field.characteristic()},
            {"m", field.degree()},
            {"modulus", std::vector<std::uint32_t>(field.modulus().begin(), field.modulus().end())}};
}

FieldPtr field_from_json(const json& j) {
    const auto p = require<std::uint32_t>(j, "p");
    const auto m = require<std::uint32_t>(j, "m");
    std::optional<std::vector<std::uint32_t>> modulus;
    if (j.contains("modulus")) modulus = require<std::vector<std::uint32_t>>(j, "modulus");
    return Field::create(p, m, modulus);
}

json matrix_to_json(const BitMatrix& g) {
    json rows = json::array();
    for (std::size_t r = 0; r < g.rows(); ++r) rows.push_back(g.row(r).to_hex());
    return rows;
}

BitMatrix matrix_from_json(const json& rows, std::size_t cols) {
    if (!rows.is_array()) throw Error(Errc::ParseError, "G must be an array of hex strings");
    std::vector<BitVec> parsed;
    for (const auto& r : rows) {
        if (!r.is_string()) throw Error(Errc::ParseError, "G rows must be hex strings");
        parsed.push_back(BitVec::from_hex(r.get<std::string>(), cols));
    }
    return BitMatrix::from_rows(parsed, cols);
}

json shadow_descriptor(const ShadowCode& code) {
    json e = json::array();
    for (auto x : code.E.points()) e.push_back(x.index);
    json b = json::array();
    for (const auto& p : code.B.polys) b.push_back(to_string(p));
    const char* kind = code.kind == ShadowKind::DegreeAtMostOne ? "deg1"
                       : code.kind == ShadowKind::DegreeTwo     ? "deg2"
                                                                : "generic";
    json out = {{"kind", kind},
                {"field", field_to_json(*code.E.field())},
                {"E", std::move(e)},
                {"B", std::move(b)},
                {"G", matrix_to_json(code.G)},
                {"n", code.n()},
                {"k", code.claimed_dim},
                {"rank", code.rank},
                {"total_degree", code.B.total_degree},
                {"delta", code.delta.value()},
                {"delta_exact", code.delta.is_exact()},
                {"warning", code.warning}};
    return out;
}

json concat_descriptor(const ConcatSpec& spec) {
    const auto p = concat_params(spec);
    const auto code = concat_code(spec);
    return {{"kind", "rsrm"},
            {"m", spec.m()},
            {"N", spec.outer_length()},
            {"K", spec.outer_dim()},
            {"field", field_to_json(*spec.field())},
            {"n", p.n},
            {"k", p.k},
            {"dmin_lb", p.dmin_lb},
            {"rate", p.rate},
            {"G", matrix_to_json(code.generator())}};
}

BinaryCode code_from_descriptor(const json& j) {
    const auto n = require<std::size_t>(j, "n");
    if (!j.contains("G")) throw Error(Errc::ParseError, "descriptor lacks 'G'");
    return BinaryCode::from_generator(matrix_from_json(j.at("G"), n));
}

void write_weight_csv(std::ostream& out, std::span<const std::uint64_t> histogram) {
    out << "weight,count\n";
    for (std::size_t w = 0; w < histogram.size(); ++w) {
        if (histogram[w] != 0) out << w << ',' << histogram[w] << '\n';
    }
}

void write_points_csv(std::ostream& out, std::span<const BoundPoint> points) {
    out << "scheme,n,k,rate,delta,kind\n";
    for (const auto& p : points) {
        out << scheme_name(p.scheme) << ',' << p.n << ',' << fmt_double(p.k) << ','
            << fmt_double(p.rate) << ',' << fmt_double(p.delta) << ',' << kind_name(p.kind) << '\n';
    }
}

json points_to_json(std::span<const BoundPoint> points) {
    json out = json::array();
    for (const auto& p : points) {
        out.push_back({{"scheme", scheme_name(p.scheme)},
                       {"n", p.n},
                       {"k", p.k},
                       {"rate", p.rate},
                       {"delta", p.delta},
                       {"kind", kind_name(p.kind)},
                       {"approximate", p.approximate}});
    }
    return out;
}

void write_fig1_csv(std::ostream& out, std::span<const Fig1Row> rows) {
    out << "n,k0,sqrt_n_plus_half\n";
    for (const auto& r : rows) {
        out << fmt_double(r.n) << ',' << fmt_double(r.k0) << ',' << fmt_double(r.approx) << '\n';
    }
}

json fig1_to_json(std::span<const Fig1Row> rows) {
    json out = json::array();
    for (const auto& r : rows) out.push_back({{"n", r.n}, {"k0", r.k0}, {"sqrt_n_plus_half", r.approx}});
    return out;
}

}  // namespace shadow::io
