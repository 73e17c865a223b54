// Copyright 2026 The Janus Metrology Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: single-point reports, parameter scans, oracle
// verification and the data files consumed by the figure scripts.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "janus/janus.hpp"

namespace {

using json = nlohmann::ordered_json;
using janus::cplx;

enum ExitCode { kOk = 0, kUsage = 1, kComputation = 2, kVerification = 3 };

/// Invalid option combinations detected after parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json complex_json(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json params_json(const janus::SqueezeParams &p) {
    return json{{"r", p.r()}, {"theta", p.theta()}, {"x", p.x()}, {"nbar", p.mean_photons()}};
}

json moments_json(const janus::MomentSet &ms) {
    return json{{"N1", ms.N1},          {"N2", ms.N2},
                {"M2", complex_json(ms.M2)}, {"M4", complex_json(ms.M4)},
                {"nbar", ms.nbar},      {"m", complex_json(ms.m)},
                {"mean_a", complex_json(ms.mean_a)}};
}

json covariance_json(const janus::CovarianceSummary &cs) {
    return json{{"VQQ", cs.VQQ},
                {"VPP", cs.VPP},
                {"VQP", cs.VQP},
                {"DQ_DP", std::sqrt(cs.VQQ * cs.VPP)},
                {"determinant", cs.determinant()},
                {"Vmin", cs.Vmin},
                {"Vmax", cs.Vmax},
                {"phi_star", cs.phi_star},
                {"phi_star_unique", cs.phi_star_unique},
                {"u", cs.u},
                {"S_dB", cs.S_dB}};
}

json qfi_json(const janus::QfiReport &rep) {
    json j;
    j["F_phase"] = rep.F_phase;
    j["F_quad_theta_at_0"] = rep.F_quad_theta(0.0);
    j["F_quad_r_at_0"] = rep.F_quad_r(0.0);
    j["F_quad_env"] = rep.F_quad_env;
    j["vartheta_star"] = rep.vartheta_star;
    j["vartheta_star_unique"] = rep.vartheta_star_unique;
    j["u"] = rep.u;
    j["nbar"] = rep.nbar;
    j["g2"] = rep.g2 ? json(*rep.g2) : json(janus::kG2Undefined);
    j["no_go_bound"] = janus::no_go_bound(rep.nbar);
    j["F_phase_sq_at_nbar"] = rep.F_phase_sq_at_nbar;
    j["F_phase_sq_at_u"] = rep.F_phase_sq_at_u;
    j["F_quad_sq_at_u"] = rep.F_quad_sq_at_u ? json(*rep.F_quad_sq_at_u) : json(janus::kNotSqueezed);
    j["quad_ratio"] = rep.quad_ratio() ? json(*rep.quad_ratio()) : json(janus::kNotSqueezed);
    j["outside_squeezing"] = rep.outside_squeezing;
    j["advantage"] = json{{"phase_fixed_nbar", rep.flags.phase_fixed_nbar},
                          {"g2_criterion", rep.flags.g2_criterion},
                          {"phase_fixed_u", rep.flags.phase_fixed_u},
                          {"quad_fixed_u", rep.flags.quad_fixed_u}};
    return j;
}

json state_json(const janus::JanusState &st) {
    const janus::MomentSet ms = janus::moment_set(st);
    json j;
    j["status"] = janus::kStatusOk;
    j["xi"] = params_json(st.xi());
    j["zeta"] = params_json(st.zeta());
    j["overlap"] = complex_json(janus::overlap(st.xi(), st.zeta()));
    j["chi"] = complex_json(st.chi());
    j["eta"] = complex_json(st.eta());
    j["normalization_residual"] = st.normalization_residual();
    j["moments"] = moments_json(ms);
    j["covariance"] = covariance_json(janus::covariance(ms));
    j["qfi"] = qfi_json(janus::benchmarks(ms));
    return j;
}

void flatten(const json &j, const std::string &prefix, std::vector<std::pair<std::string, std::string>> &out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
        }
    } else if (j.is_number_float()) {
        out.emplace_back(prefix, janus::format_double(j.get<double>()));
    } else if (j.is_boolean()) {
        out.emplace_back(prefix, janus::format_bool(j.get<bool>()));
    } else if (j.is_string()) {
        out.emplace_back(prefix, j.get<std::string>());
    } else {
        out.emplace_back(prefix, j.dump());
    }
}

void emit(const std::string &text, const std::string &path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        throw std::runtime_error("cannot open output file '" + path + "'");
    }
    os << text;
    if (!os) {
        throw std::runtime_error("failed writing '" + path + "'");
    }
}

struct PointArgs {
    bool vacuum = false;
    double r = 0.0;
    double theta = 0.0;
    std::optional<double> s;
    double phi = 0.0;
    std::optional<double> eta_mag;
    double delta = 0.0;
    std::optional<double> ratio;
    bool optimize = false;
    std::string axis = "Q";
    std::string out;
    std::string format = "json";
};

json run_point(const PointArgs &a) {
    const janus::Axis axis = a.axis == "P" ? janus::Axis::P : janus::Axis::Q;
    const int coefficient_specs = (a.eta_mag ? 1 : 0) + (a.ratio ? 1 : 0) + (a.optimize ? 1 : 0);
    if (a.vacuum) {
        if (a.s || coefficient_specs > 0) {
            throw UsageError("--vacuum cannot be combined with other state options");
        }
        return state_json(janus::JanusState::vacuum());
    }
    const janus::SqueezeParams xi(a.r, a.theta);
    if (!a.s) {
        if (coefficient_specs > 0) {
            throw UsageError("coefficient options need a second constituent (--s)");
        }
        return state_json(janus::JanusState::single(xi));
    }
    const janus::SqueezeParams zeta(*a.s, a.phi);
    if (coefficient_specs != 1) {
        throw UsageError("give exactly one of --eta-mag, --ratio, --optimize-q");
    }
    if (a.eta_mag) {
        const auto st = janus::solve_coefficients(xi, zeta, *a.eta_mag, a.delta);
        if (!st) {
            json j;
            j["status"] = janus::kInadmissible;
            j["xi"] = params_json(xi);
            j["zeta"] = params_json(zeta);
            j["eta_mag"] = *a.eta_mag;
            j["delta"] = a.delta;
            return j;
        }
        return state_json(*st);
    }
    if (a.ratio) {
        return state_json(janus::from_ratio(xi, zeta, *a.ratio));
    }
    const janus::SpanOptimum opt = janus::span_minimum(xi, zeta, axis);
    json j = state_json(janus::JanusState::make(xi, zeta, opt.chi, opt.eta, 1e-9));
    const janus::SpanMatrices &sm = opt.matrices;
    j["span_optimum"] = json{{"axis", a.axis},
                             {"lambda_minus", opt.lambda_minus},
                             {"lambda_plus", opt.lambda_plus},
                             {"ratio", complex_json(opt.ratio)},
                             {"discriminant", opt.discriminant},
                             {"orthonormalized", opt.orthonormalized},
                             {"A", sm.A},
                             {"B", sm.B},
                             {"C", complex_json(sm.C)},
                             {"S", complex_json(sm.S)},
                             {"better_constituent", std::min(sm.A, sm.B)}};
    return j;
}

std::string render_point(const json &j, const std::string &format) {
    if (format == "json") {
        return j.dump(2) + "\n";
    }
    std::vector<std::pair<std::string, std::string>> kv;
    flatten(j, "", kv);
    std::string out = "key,value\n";
    for (const auto &[k, v] : kv) {
        out += k + "," + v + "\n";
    }
    return out;
}

/// "N" sets every axis count, "NxM" sets the first and second axis counts.
/// With `one_axis_ok`, M is ignored for scans that have a single axis.
void apply_grid_spec(janus::ScanGrid &g, const std::string &spec, bool one_axis_ok = false) {
    if (spec.empty()) {
        return;
    }
    const auto x = spec.find('x');
    try {
        std::size_t used = 0;
        const int n1 = std::stoi(spec.substr(0, x), &used);
        if (used != (x == std::string::npos ? spec.size() : x)) {
            throw std::invalid_argument(spec);
        }
        g.axis1.n = n1;
        if (x == std::string::npos) {
            if (g.axis2) {
                g.axis2->n = n1;
            }
        } else {
            const std::string rest = spec.substr(x + 1);
            const int n2 = std::stoi(rest, &used);
            if (used != rest.size() || (!g.axis2 && !one_axis_ok)) {
                throw std::invalid_argument(spec);
            }
            if (g.axis2) {
                g.axis2->n = n2;
            }
        }
    } catch (const std::logic_error &) {
        throw UsageError("invalid --grid '" + spec + "' (expected N or NxM)");
    }
}

struct ScanArgs {
    std::string kind;
    std::string grid;
    std::vector<double> layers;
    std::string out;
    std::uint64_t seed = 1;
    int threads = 1;
    std::string format = "csv";
};

janus::ScanGrid build_grid(const ScanArgs &a, janus::ScanKind kind, bool one_axis_ok = false) {
    janus::ScanGrid g = janus::default_grid(kind);
    apply_grid_spec(g, a.grid, one_axis_ok);
    if (!a.layers.empty()) {
        if (g.layer_name.empty()) {
            throw UsageError("scan kind has no layer parameter for --layers");
        }
        g.layers = a.layers;
    }
    g.seed = a.seed;
    return g;
}

std::string table_text(const janus::ScanTable &t) {
    std::ostringstream os;
    t.write_csv(os);
    return os.str();
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"janus: moments, squeezing and Fisher information of two-state "
                 "squeezed-vacuum superpositions"};
    app.require_subcommand(1);

    PointArgs pa;
    auto *point = app.add_subcommand("point", "Evaluate a single state");
    point->add_flag("--vacuum", pa.vacuum, "Use the vacuum state");
    point->add_option("--r", pa.r, "Squeeze magnitude of the first constituent")->check(CLI::NonNegativeNumber);
    point->add_option("--theta", pa.theta, "Squeeze phase of the first constituent");
    point->add_option("--s", pa.s, "Squeeze magnitude of the second constituent")->check(CLI::NonNegativeNumber);
    point->add_option("--phi", pa.phi, "Squeeze phase of the second constituent");
    point->add_option("--eta-mag", pa.eta_mag, "Magnitude of the second coefficient (chi solved from normalization)")
        ->check(CLI::NonNegativeNumber);
    point->add_option("--delta", pa.delta, "Phase of the second coefficient");
    point->add_option("--ratio", pa.ratio, "Real coefficient ratio t = eta/chi");
    point->add_flag("--optimize-q", pa.optimize, "Minimize the fixed-axis variance over the span");
    point->add_option("--axis", pa.axis, "Axis for --optimize-q")->check(CLI::IsMember({"Q", "P"}));
    point->add_option("--out", pa.out, "Output file (default stdout)");
    point->add_option("--format", pa.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    ScanArgs sa;
    std::vector<std::string> kinds;
    for (const auto &[name, kind] : janus::scan_kind_names()) {
        kinds.push_back(name);
    }
    auto *scan = app.add_subcommand("scan", "Evaluate a parameter grid and write CSV");
    scan->add_option("kind", sa.kind, "Scan kind")->required()->check(CLI::IsMember(kinds));
    scan->add_option("--grid", sa.grid, "Point counts, N or NxM");
    scan->add_option("--layers", sa.layers, "Layer values (r for fig1, fig3, fig4)")->delimiter(',');
    scan->add_option("--out", sa.out, "Output file (default stdout)");
    scan->add_option("--seed", sa.seed, "Seed for random-state scans");
    scan->add_option("--threads", sa.threads, "Worker threads")->check(CLI::PositiveNumber);
    scan->add_option("--format", sa.format, "Output format")->check(CLI::IsMember({"csv"}));

    janus::VerifyOptions va;
    std::string verify_out;
    auto *verify = app.add_subcommand("verify", "Cross-check closed forms against the Fock oracle");
    verify->add_option("--seed", va.seed, "Random seed");
    verify->add_option("--samples", va.samples, "Number of random states")->check(CLI::PositiveNumber);
    verify->add_option("--r-cap", va.r_max, "Largest squeeze magnitude sampled")->check(CLI::NonNegativeNumber);
    verify->add_option("--out", verify_out, "Output file (default stdout)");
    bool fixed_tol = false;
    verify->add_flag("--fixed-tolerance", fixed_tol,
                     "Use the fixed tolerances only, without the oracle rounding floor");

    ScanArgs fa;
    std::string fig_dir;
    auto *figs = app.add_subcommand("figures-data", "Write every scan with default grids to a directory");
    figs->add_option("--out", fig_dir, "Output directory")->required();
    figs->add_option("--grid", fa.grid, "Point counts, N or NxM, applied to every scan (M ignored for one-axis scans)");
    figs->add_option("--seed", fa.seed, "Seed for random-state scans");
    figs->add_option("--threads", fa.threads, "Worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*point) {
            emit(render_point(run_point(pa), pa.format), pa.out);
        } else if (*scan) {
            const janus::ScanKind kind = janus::parse_scan_kind(sa.kind);
            emit(table_text(janus::run_scan(build_grid(sa, kind), sa.threads)), sa.out);
        } else if (*verify) {
            va.oracle = janus::OracleConfig::from_env();
            va.rounding_floor = !fixed_tol;
            const janus::VerifyReport rep = janus::run_verification(va);
            emit(rep.summary(), verify_out);
            return rep.ok() ? kOk : kVerification;
        } else if (*figs) {
            std::filesystem::create_directories(fig_dir);
            for (const auto &[name, kind] : janus::scan_kind_names()) {
                const janus::ScanGrid g = build_grid(fa, kind, true);
                const std::string path = (std::filesystem::path(fig_dir) / (name + ".csv")).string();
                emit(table_text(janus::run_scan(g, fa.threads)), path);
                std::cerr << "wrote " << path << " (" << g.size() << " rows)\n";
            }
        }
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const janus::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kComputation;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kComputation;
    }
    return kOk;
}
