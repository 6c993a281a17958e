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

// shadowctl: construction, distance, bound tables, figure data and checks.
//
// Exit status: 0 on success, 1 when a check fails, 2 on bad usage or
// parameters.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "shadow/bounds.hpp"
#include "shadow/concat.hpp"
#include "shadow/errors.hpp"
#include "shadow/io.hpp"
#include "shadow/shadow_code.hpp"
#include "shadow/weil.hpp"

using namespace shadow;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

constexpr std::uint64_t kDefaultSeed = 1;

struct Output {
    std::string path;

    void write(const std::string& text) const {
        if (path.empty() || path == "-") {
            std::cout << text;
            return;
        }
        std::ofstream f(path);
        if (!f) throw Error(Errc::BadParameters, "cannot open --out " + path);
        f << text;
    }
};

json header(const std::string& command, const json& config) {
    return {{"tool", "shadowctl"}, {"version", SHADOWCODES_VERSION}, {"command", command}, {"config", config}};
}

std::string with_header(const std::string& command, const json& config, json body) {
    json out = header(command, config);
    out.update(body);
    return out.dump(2) + "\n";
}

std::string csv_header(const std::string& command, const json& config) {
    return "# shadowctl " SHADOWCODES_VERSION " " + command + " " + config.dump() + "\n";
}

FieldPtr field_of_order(std::uint64_t q) {
    const auto pp = find_odd_prime_power(q);
    if (!pp) throw Error(Errc::NotPrime, "--q " + std::to_string(q) + " is not an odd prime power");
    return Field::create(pp->p, pp->m);
}

std::vector<Poly> parse_factor_list(const FieldPtr& field, const std::string& text) {
    std::vector<Poly> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (!item.empty()) out.push_back(parse_poly(field, item));
    }
    return out;
}

json weil_report_json(const CurveSpec& c, const WeilBoundReport& r) {
    json factors = json::array();
    for (const auto& f : c.factors) factors.push_back(to_string(f));
    return {{"q", r.q},     {"gamma", c.gamma.index}, {"factors", factors},
            {"count", r.count}, {"d", r.d},           {"bound", r.bound},
            {"ok", r.ok}};
}

BitVec bits_of(std::uint64_t value, std::size_t width) {
    BitVec v(width);
    for (std::size_t i = 0; i < width; ++i) v.set(i, (value >> i) & 1);
    return v;
}

// ---- construct -------------------------------------------------------------

struct ConstructArgs {
    std::string kind;
    std::optional<std::uint64_t> q;
    std::optional<std::size_t> e_size, n, k;
    std::optional<std::uint64_t> seed;
    Output out;
};

int run_construct(const ConstructArgs& a) {
    json config = {{"kind", a.kind}};
    std::optional<ShadowCode> code;
    if (a.kind == "deg1") {
        if (a.q && a.e_size && !a.n && !a.k) {
            config["q"] = *a.q;
            config["E_size"] = *a.e_size;
            code = construct_deg1(*a.q, *a.e_size);
        } else if (a.n && a.k && !a.q && !a.e_size) {
            config["n"] = *a.n;
            config["k"] = *a.k;
            code = construct_deg1_nk(*a.n, *a.k);
        } else {
            throw CLI::ValidationError("deg1 takes either --q with --E-size, or --n with --k");
        }
    } else {
        if (!a.q || !a.k || a.n || a.e_size) throw CLI::ValidationError("deg2 takes --q and --k");
        config["q"] = *a.q;
        config["k"] = *a.k;
        if (a.seed) config["seed"] = *a.seed;
        code = construct_deg2(*a.q, *a.k, a.seed);
    }
    if (code->warning) {
        std::cerr << "warning: Delta = " << code->delta.value()
                  << " is not positive; rank and distance are not guaranteed\n";
    }
    a.out.write(with_header("construct", config, {{"code", io::shadow_descriptor(*code)}}));
    return kExitOk;
}

// ---- dmin ------------------------------------------------------------------

struct DminArgs {
    std::string descriptor;
    bool exact = false;
    std::optional<std::uint64_t> sample;
    std::uint64_t seed = kDefaultSeed;
    std::string weights;
    Output out;
};

json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(Errc::BadParameters, "cannot read descriptor " + path);
    try {
        return json::parse(f);
    } catch (const json::exception& e) {
        throw Error(Errc::ParseError, path + ": " + e.what());
    }
}

int run_dmin(const DminArgs& a, unsigned workers) {
    json doc = load_json(a.descriptor);
    // Accept either a bare descriptor or the construct/concat output wrapping it.
    const json& desc = doc.contains("code") ? doc.at("code") : doc;
    const auto code = io::code_from_descriptor(desc);
    json config = {{"descriptor", a.descriptor}, {"workers", workers}};
    json report = {{"n", code.n()}, {"k", code.k()}};
    int status = kExitOk;

    if (a.sample) {
        config["sample"] = *a.sample;
        config["seed"] = a.seed;
        report["method"] = "sampled";
        report["dmin_upper_bound"] = sampled_min_distance_upper(code, *a.sample, a.seed);
    } else {
        const auto d = exact_min_distance(code, workers);
        report["method"] = "exact";
        report["dmin"] = d;
        if (desc.contains("delta")) {
            const double delta = desc.at("delta").get<double>();
            report["delta"] = delta;
            if (delta > 0) {
                // Descriptor delta is a double; a small slack absorbs rounding of irrational values.
                const bool ok = static_cast<double>(d) >= std::ceil(delta - 1e-9);
                report["meets_bound"] = ok;
                if (!ok) {
                    report["counterexample"] = {{"dmin", d}, {"delta", delta}};
                    status = kExitCheckFailed;
                }
            }
        }
        if (desc.contains("dmin_lb")) {
            const auto lb = desc.at("dmin_lb").get<std::size_t>();
            report["dmin_lb"] = lb;
            report["meets_bound"] = d >= lb;
            if (d < lb) {
                report["counterexample"] = {{"dmin", d}, {"dmin_lb", lb}};
                status = kExitCheckFailed;
            }
        }
    }
    if (!a.weights.empty()) {
        config["weights"] = a.weights;
        std::ofstream f(a.weights);
        if (!f) throw Error(Errc::BadParameters, "cannot open --weights " + a.weights);
        f << csv_header("dmin", config);
        io::write_weight_csv(f, weight_distribution(code, workers));
    }
    a.out.write(with_header("dmin", config, {{"report", report}}));
    return status;
}

// ---- figure ----------------------------------------------------------------

struct FigureArgs {
    std::string id;
    double n_min = 10, n_max = 1e5;
    std::size_t points = 200;
    std::uint64_t n = 1024;
    std::size_t exact_k_max = 20;
    std::vector<std::size_t> random_ks = {8, 12, 16, 20};
    std::uint64_t seed = kDefaultSeed;
    double a = 0.49;
    unsigned m_min = 2, m_max = 15;
    std::string format = "csv";
    Output out;
};

int run_figure(const FigureArgs& a, unsigned workers) {
    json config = {{"figure", a.id}, {"format", a.format}};
    std::ostringstream text;
    if (a.id == "fig1") {
        config.update({{"n_min", a.n_min}, {"n_max", a.n_max}, {"points", a.points}});
        const auto rows = fig1_rows(a.n_min, a.n_max, a.points);
        if (a.format == "csv") {
            text << csv_header("figure", config);
            io::write_fig1_csv(text, rows);
        } else {
            text << with_header("figure", config, {{"rows", io::fig1_to_json(rows)}});
        }
        a.out.write(text.str());
        return kExitOk;
    }
    std::vector<BoundPoint> pts;
    if (a.id == "fig3") {
        config.update({{"n", a.n}, {"exact_k_max", a.exact_k_max}, {"random_ks", a.random_ks}, {"seed", a.seed}});
        Fig3Config cfg;
        cfg.n = a.n;
        cfg.exact_k_max = a.exact_k_max;
        cfg.random_ks = a.random_ks;
        cfg.seed = a.seed;
        cfg.workers = workers;
        pts = fig3_points(cfg);
    } else {
        config.update({{"a", a.a}, {"m_min", a.m_min}, {"m_max", a.m_max}});
        pts = fig4_points(a.a, a.m_min, a.m_max);
    }
    if (a.format == "csv") {
        text << csv_header("figure", config);
        io::write_points_csv(text, pts);
    } else {
        text << with_header("figure", config, {{"rows", io::points_to_json(pts)}});
    }
    a.out.write(text.str());
    return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
    std::string suite;
    // weil
    std::uint64_t q_max = 121;
    std::size_t per_field = 40;
    std::size_t max_factors = 5;
    int max_degree = 3;
    std::optional<std::uint64_t> q;
    std::optional<std::uint32_t> gamma;
    std::string factors;
    // threshold
    std::uint64_t n_max = 100000;
    // concat
    unsigned m = 2;
    std::optional<std::size_t> big_n;
    std::uint64_t seed = kDefaultSeed;
    Output out;
};

struct Tally {
    std::size_t checks = 0;
    json counterexample;

    void record(bool ok, json detail) {
        ++checks;
        if (!ok && counterexample.is_null()) counterexample = std::move(detail);
    }
    bool passed() const { return counterexample.is_null(); }
};

void verify_weil(const VerifyArgs& a, json& config, Tally& t, json& extra) {
    if (a.q || a.gamma || !a.factors.empty()) {
        if (!a.q || a.factors.empty()) throw CLI::ValidationError("a single curve needs --q and --factors");
        auto field = field_of_order(*a.q);
        const FieldElement gamma = field->element(a.gamma.value_or(1));
        const auto curve = make_curve(field, gamma, parse_factor_list(field, a.factors));
        config.update({{"q", *a.q}, {"gamma", gamma.index}, {"factors", a.factors}});
        const auto r = check_weil_bound(curve);
        extra["curve"] = weil_report_json(curve, r);
        t.record(r.ok, weil_report_json(curve, r));
        return;
    }
    config.update({{"q_max", a.q_max}, {"per_field", a.per_field}, {"max_factors", a.max_factors},
                   {"max_degree", a.max_degree}, {"seed", a.seed}});
    std::uint64_t seed = a.seed;
    json fields = json::array();
    for (std::uint64_t q = 3; q <= std::min(a.q_max, kMaxCurveOrder); ++q) {
        const auto pp = find_odd_prime_power(q);
        if (!pp) continue;
        auto field = Field::create(pp->p, pp->m);
        fields.push_back(q);
        for (std::size_t i = 0; i < a.per_field; ++i) {
            const auto c = random_curve(field, a.max_factors, a.max_degree, seed++);
            const auto r = check_weil_bound(c);
            t.record(r.ok, weil_report_json(c, r));
        }
    }
    extra["fields"] = fields;
}

void verify_distance(const VerifyArgs&, json&, Tally& t, json& extra) {
    // Replays the weight argument for every message of small constructed codes
    // and checks the enumerated distance against ceil(Delta).
    const std::vector<ShadowCode> codes = {construct_deg1(121, 113), construct_deg1(49, 44),
                                           construct_deg1(125, 117), construct_deg2(49, 3),
                                           construct_deg2(81, 4), construct_deg2(121, 5)};
    json summary = json::array();
    for (const auto& code : codes) {
        const std::size_t k = code.B.polys.size();
        for (std::uint64_t m = 1; m < (std::uint64_t{1} << k); ++m) {
            const auto r = check_weight_argument(code, bits_of(m, k));
            t.record(r.ok(), {{"n", code.n()},
                              {"message", m},
                              {"zeros", r.zeros},
                              {"curve_points", r.curve_points},
                              {"zeros_bound", r.zeros_bound}});
        }
        const auto d = exact_min_distance(code.binary_code());
        const bool ok = code.delta.at_most(static_cast<std::int64_t>(d));
        t.record(ok, {{"n", code.n()}, {"k", k}, {"dmin", d}, {"delta", code.delta.value()}});
        summary.push_back({{"n", code.n()}, {"k", k}, {"delta", code.delta.value()}, {"dmin", d}});
    }
    extra["codes"] = summary;
}

void verify_threshold(const VerifyArgs& a, json& config, Tally& t, json& extra) {
    config["n_max"] = a.n_max;
    if (a.n_max < 3) throw CLI::ValidationError("--n-max must be at least 3");
    for (std::uint64_t n = 3; n <= a.n_max; ++n) {
        const double nn = static_cast<double>(n);
        const double s = cubic_s(nn, std::sqrt(nn) + 0.5);
        t.record(s < 0, {{"n", n}, {"S", s}});
    }
    double worst = 0;
    for (const auto& row : fig1_rows(3, static_cast<double>(a.n_max), 50)) {
        const auto rec = k0(row.n);
        const double gap = std::abs(rec.k0 - rec.k0_cardano);
        worst = std::max(worst, gap);
        t.record(gap <= 1e-6, {{"n", row.n}, {"k0", rec.k0}, {"k0_cardano", rec.k0_cardano}});
    }
    extra["max_cardano_gap"] = worst;
}

void verify_concat(const VerifyArgs& a, json& config, Tally& t, json& extra) {
    const std::size_t big_n = a.big_n.value_or(std::size_t{1} << a.m);
    config.update({{"m", a.m}, {"N", big_n}});
    json rows = json::array();
    for (std::size_t big_k = 1; big_k <= big_n; ++big_k) {
        ConcatSpec spec(a.m, big_n, big_k);
        if (spec.dimension() > kMaxExactDimension) break;
        const auto d = exact_min_distance(concat_code(spec));
        const auto lb = spec.dmin_lower_bound();
        t.record(d >= lb, {{"m", a.m}, {"N", big_n}, {"K", big_k}, {"dmin", d}, {"bound", lb}});
        rows.push_back({{"K", big_k}, {"dmin", d}, {"bound", lb}});
    }
    extra["rows"] = rows;
}

int run_verify(const VerifyArgs& a) {
    json config = {{"suite", a.suite}};
    Tally t;
    json extra = json::object();
    if (a.suite == "weil") verify_weil(a, config, t, extra);
    else if (a.suite == "distance") verify_distance(a, config, t, extra);
    else if (a.suite == "threshold") verify_threshold(a, config, t, extra);
    else verify_concat(a, config, t, extra);

    json body = {{"checks", t.checks}, {"passed", t.passed()}};
    body.update(extra);
    if (!t.passed()) body["counterexample"] = t.counterexample;
    a.out.write(with_header("verify", config, body));
    return t.passed() ? kExitOk : kExitCheckFailed;
}

// ---- concat ----------------------------------------------------------------

struct ConcatArgs {
    unsigned m = 2;
    std::size_t big_n = 4, big_k = 2;
    std::string encode;
    Output out;
};

int run_concat(const ConcatArgs& a) {
    ConcatSpec spec(a.m, a.big_n, a.big_k);
    json config = {{"m", a.m}, {"N", a.big_n}, {"K", a.big_k}};
    json body;
    if (!a.encode.empty()) {
        config["encode"] = a.encode;
        if (a.encode.size() != spec.dimension()) {
            throw Error(Errc::LengthMismatch, "--encode needs " + std::to_string(spec.dimension()) + " bits");
        }
        const auto cw = concat_encode(spec, BitVec::from_bits(a.encode));
        body = {{"n", cw.size()}, {"codeword", cw.to_hex()}};
    } else {
        body = {{"code", io::concat_descriptor(spec)}};
    }
    a.out.write(with_header("concat", config, body));
    return kExitOk;
}

// ---- bounds ----------------------------------------------------------------

struct BoundsArgs {
    std::string what;
    std::optional<double> n, k;
    std::optional<unsigned> m, d;
    Output out;
};

template <class T>
T need(const std::optional<T>& v, const char* flag, const std::string& what) {
    if (!v) throw CLI::ValidationError(what + " needs " + flag);
    return *v;
}

int run_bounds(const BoundsArgs& a) {
    json config = {{"bound", a.what}};
    json body;
    if (a.what == "dg") {
        const auto m = need(a.m, "--m", a.what), d = need(a.d, "--d", a.what);
        config.update({{"m", m}, {"d", d}});
        const auto p = dg_params(m, d);
        body = {{"length", p.length}, {"log2_codewords", p.log2_codewords}, {"dmin", p.dmin}};
    } else if (a.what == "gv") {
        const auto n = need(a.n, "--n", a.what), k = need(a.k, "--k", a.what);
        config.update({{"n", n}, {"k", k}});
        const auto r = gv_min_distance(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
        body = {{"d", r.d}, {"approximate", r.approximate}};
    } else if (a.what == "shadow1" || a.what == "shadow2") {
        const auto n = need(a.n, "--n", a.what), k = need(a.k, "--k", a.what);
        config.update({{"n", n}, {"k", k}});
        body = {{"lower_bound", a.what == "shadow1" ? shadow_lb_deg1(n, k) : shadow_lb_deg2(n, k)}};
    } else {
        const auto n = need(a.n, "--n", a.what);
        config["n"] = n;
        const auto r = k0(n);
        body = {{"xi", r.xi},
                {"omega_sq", r.omega_sq},
                {"k0", r.k0},
                {"k0_cardano", r.k0_cardano},
                {"sqrt_n_plus_half", std::sqrt(n) + 0.5}};
    }
    a.out.write(with_header("bounds", config, body));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Binary shadow codes: construction, distances, bound tables and checks", "shadowctl"};
    app.set_version_flag("--version", std::string(SHADOWCODES_VERSION));
    app.require_subcommand(1);
    unsigned workers = 0;
    app.add_option("--threads", workers, "Worker threads for enumeration (0 = all cores)");

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "Build a shadow code and write its descriptor");
    construct->add_option("kind", ca.kind, "deg1 or deg2")->required()->check(CLI::IsMember({"deg1", "deg2"}));
    construct->add_option("--q", ca.q, "Field order");
    construct->add_option("--E-size", ca.e_size, "Evaluation set size (deg1)");
    construct->add_option("--n", ca.n, "Length (deg1, picks q = n + k - 1)");
    construct->add_option("--k", ca.k, "Dimension");
    construct->add_option("--seed", ca.seed, "Random selection of quadratics (deg2)");
    construct->add_option("--out", ca.out.path, "Output path (default stdout)");

    DminArgs da;
    auto* dmin = app.add_subcommand("dmin", "Minimum distance of a code descriptor");
    dmin->add_option("descriptor", da.descriptor, "JSON descriptor")->required();
    auto* exact = dmin->add_flag("--exact", da.exact, "Exact enumeration (default)");
    dmin->add_option("--sample", da.sample, "Upper bound from this many random messages")->excludes(exact);
    dmin->add_option("--seed", da.seed, "Seed for --sample");
    dmin->add_option("--weights", da.weights, "Also write the weight distribution CSV here");
    dmin->add_option("--out", da.out.path, "Output path (default stdout)");

    FigureArgs fa;
    auto* figure = app.add_subcommand("figure", "Emit figure data");
    figure->add_option("id", fa.id, "fig1, fig3 or fig4")->required()->check(CLI::IsMember({"fig1", "fig3", "fig4"}));
    figure->add_option("--n-min", fa.n_min, "fig1: smallest n");
    figure->add_option("--n-max", fa.n_max, "fig1: largest n");
    figure->add_option("--points", fa.points, "fig1: log-spaced sample count");
    figure->add_option("--n", fa.n, "fig3: length");
    figure->add_option("--exact-k-max", fa.exact_k_max, "fig3: largest enumerated shadow dimension");
    figure->add_option("--random-k", fa.random_ks, "fig3: dimensions of the random codes");
    figure->add_option("--seed", fa.seed, "fig3: random code seed");
    figure->add_option("--a", fa.a, "fig4: exponent in k = n^a");
    figure->add_option("--m-min", fa.m_min, "fig4: smallest m, n = 4^m");
    figure->add_option("--m-max", fa.m_max, "fig4: largest m");
    figure->add_option("--format", fa.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    figure->add_option("--out", fa.out.path, "Output path (default stdout)");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run a check suite; exit 1 with a counterexample on failure");
    verify->add_option("suite", va.suite, "weil, distance, threshold or concat")
        ->required()
        ->check(CLI::IsMember({"weil", "distance", "threshold", "concat"}));
    verify->add_option("--q-max", va.q_max, "weil: largest field order swept");
    verify->add_option("--per-field", va.per_field, "weil: random curves per field");
    verify->add_option("--max-factors", va.max_factors, "weil: factors per curve");
    verify->add_option("--max-degree", va.max_degree, "weil: factor degree");
    verify->add_option("--q", va.q, "weil: single curve field order");
    verify->add_option("--gamma", va.gamma, "weil: single curve gamma index");
    verify->add_option("--factors", va.factors, "weil: single curve factors, e.g. \"1,0,1;2,1\"");
    verify->add_option("--n-max", va.n_max, "threshold: largest n");
    verify->add_option("--m", va.m, "concat: inner RM order");
    verify->add_option("--N", va.big_n, "concat: outer length (default 2^m)");
    verify->add_option("--seed", va.seed, "weil: first seed");
    verify->add_option("--out", va.out.path, "Output path (default stdout)");

    ConcatArgs cc;
    auto* concat = app.add_subcommand("concat", "RS-RM concatenated code parameters or one codeword");
    concat->add_option("--m", cc.m, "Inner RM(1, m)")->required();
    concat->add_option("--N", cc.big_n, "Outer RS length")->required();
    concat->add_option("--K", cc.big_k, "Outer RS dimension")->required();
    concat->add_option("--encode", cc.encode, "Message bits, e.g. 101100");
    concat->add_option("--out", cc.out.path, "Output path (default stdout)");

    BoundsArgs ba;
    auto* bounds = app.add_subcommand("bounds", "Closed-form parameters and bounds");
    bounds->add_option("what", ba.what, "dg, gv, shadow1, shadow2 or k0")
        ->required()
        ->check(CLI::IsMember({"dg", "gv", "shadow1", "shadow2", "k0"}));
    bounds->add_option("--n", ba.n, "Length");
    bounds->add_option("--k", ba.k, "Dimension");
    bounds->add_option("--m", ba.m, "dg: m");
    bounds->add_option("--d", ba.d, "dg: d");
    bounds->add_option("--out", ba.out.path, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*construct) return run_construct(ca);
        if (*dmin) return run_dmin(da, workers);
        if (*figure) return run_figure(fa, workers);
        if (*verify) return run_verify(va);
        if (*concat) return run_concat(cc);
        if (*bounds) return run_bounds(ba);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
