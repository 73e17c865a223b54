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

/**
 * @file
 * Parameter-space scans emitted as CSV tables.
 *
 * Every table has a one-line header and one row per grid point in row-major
 * order (layer, then first axis, then second axis). Floats are printed with 17
 * significant digits. Cells that cannot carry a number hold one of the
 * sentinel labels below; NaN is never written.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "core_state.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "moments.hpp"
#include "qfi.hpp"
#include "quadrature.hpp"
#include "sampling.hpp"
#include "span_optimizer.hpp"

namespace janus {

inline constexpr const char *kInadmissible = "INADMISSIBLE";
inline constexpr const char *kSpanCollapsed = "SPAN_COLLAPSED";
inline constexpr const char *kNotSqueezed = "NOT_SQUEEZED";
inline constexpr const char *kG2Undefined = "G2_UNDEFINED";
inline constexpr const char *kStatusOk = "OK";

[[nodiscard]] inline std::string format_double(double v) {
    if (!std::isfinite(v)) {
        throw Error("non-finite value reached the output formatter");
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

[[nodiscard]] inline std::string format_bool(bool b) { return b ? "1" : "0"; }

enum class Spacing {
    /// [lo, hi], both ends included.
    Closed,
    /// [lo, hi)
    HalfOpen,
    /// (lo, hi)
    Open,
};

struct GridAxis {
    std::string name;
    double lo = 0.0;
    double hi = 1.0;
    int n = 2;
    Spacing spacing = Spacing::Closed;

    [[nodiscard]] double value(int i) const {
        switch (spacing) {
        case Spacing::Closed:
            return lo + (hi - lo) * i / (n - 1);
        case Spacing::HalfOpen:
            return lo + (hi - lo) * i / n;
        case Spacing::Open:
            return lo + (hi - lo) * (i + 1) / (n + 1);
        }
        return lo;
    }

    void validate() const {
        if (n < 2) {
            throw DomainError("grid axis '" + name + "' needs at least two points");
        }
        if (!std::isfinite(lo) || !std::isfinite(hi) || !(hi > lo)) {
            throw DomainError("grid axis '" + name + "' needs a finite nonempty range");
        }
    }
};

enum class ScanKind { Fig1, Fig2, Fig3, Fig4, Fig5, Fig6a, Fig6bc, Fig7 };

[[nodiscard]] inline const std::vector<std::pair<std::string, ScanKind>> &scan_kind_names() {
    static const std::vector<std::pair<std::string, ScanKind>> names = {
        {"fig1", ScanKind::Fig1},   {"fig2", ScanKind::Fig2},   {"fig3", ScanKind::Fig3},
        {"fig4", ScanKind::Fig4},   {"fig5", ScanKind::Fig5},   {"fig6a", ScanKind::Fig6a},
        {"fig6bc", ScanKind::Fig6bc}, {"fig7", ScanKind::Fig7},
    };
    return names;
}

[[nodiscard]] inline ScanKind parse_scan_kind(const std::string &name) {
    for (const auto &[n, k] : scan_kind_names()) {
        if (n == name) {
            return k;
        }
    }
    throw DomainError("unknown scan kind '" + name + "'");
}

[[nodiscard]] inline std::string scan_kind_name(ScanKind kind) {
    for (const auto &[n, k] : scan_kind_names()) {
        if (k == kind) {
            return n;
        }
    }
    return "unknown";
}

/**
 * A scan is an optional list of layer values (an outer loop over a named
 * parameter), a first axis and an optional second axis. Fixed parameters are
 * carried by name.
 */
struct ScanGrid {
    ScanKind kind = ScanKind::Fig1;
    std::string layer_name;
    std::vector<double> layers;
    GridAxis axis1;
    std::optional<GridAxis> axis2;
    double fixed_r = 0.0;
    double fixed_s = 0.0;
    double fixed_delta = 0.0;
    std::uint64_t seed = 1;

    void validate() const {
        axis1.validate();
        if (axis2) {
            axis2->validate();
        }
        for (double v : layers) {
            if (!std::isfinite(v)) {
                throw DomainError("layer values must be finite");
            }
        }
    }

    [[nodiscard]] std::size_t size() const {
        const std::size_t l = layers.empty() ? 1 : layers.size();
        return l * static_cast<std::size_t>(axis1.n) *
               static_cast<std::size_t>(axis2 ? axis2->n : 1);
    }
};

[[nodiscard]] inline ScanGrid default_grid(ScanKind kind) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    ScanGrid g;
    g.kind = kind;
    switch (kind) {
    case ScanKind::Fig1:
        g.layer_name = "r";
        g.layers = {0.3, 0.6, 1.0};
        g.axis1 = {"Delta", 0.0, two_pi, 400, Spacing::Closed};
        break;
    case ScanKind::Fig2:
        g.axis1 = {"r", 0.05, 1.5, 200, Spacing::Closed};
        g.axis2 = GridAxis{"Delta", 0.0, two_pi, 200, Spacing::Open};
        break;
    case ScanKind::Fig3:
    case ScanKind::Fig4:
        g.layer_name = "r";
        g.layers = kind == ScanKind::Fig3 ? std::vector<double>{0.34}
                                          : std::vector<double>{0.15, 0.34, 0.6, 1.0};
        g.fixed_delta = std::numbers::pi;
        g.axis1 = {"eta_mag", 0.0, 1.2, 200, Spacing::Closed};
        g.axis2 = GridAxis{"delta", 0.0, two_pi, 200, Spacing::HalfOpen};
        break;
    case ScanKind::Fig5:
        g.fixed_r = r_from_x(0.5);
        g.axis1 = {"t", -3.0, 3.0, 300, Spacing::Closed};
        g.axis2 = GridAxis{"Delta", 0.0, two_pi, 300, Spacing::Open};
        break;
    case ScanKind::Fig6a:
        g.axis1 = {"sample", 0.0, 1.0, 500, Spacing::Closed};
        break;
    case ScanKind::Fig6bc:
        g.fixed_s = 0.8;
        g.axis1 = {"t", -10.0, 2.0, 1201, Spacing::Closed};
        break;
    case ScanKind::Fig7:
        g.fixed_r = 1.0;
        g.fixed_s = 0.55;
        g.fixed_delta = std::numbers::pi;
        g.axis1 = {"eta_mag", 0.0, 1.2, 200, Spacing::Closed};
        g.axis2 = GridAxis{"Delta", 0.0, two_pi, 200, Spacing::Open};
        break;
    }
    return g;
}

struct ScanTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void write_csv(std::ostream &os) const {
        auto line = [&](const std::vector<std::string> &cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i > 0) {
                    os << ',';
                }
                os << cells[i];
            }
            os << '\n';
        };
        line(header);
        for (const auto &r : rows) {
            line(r);
        }
    }
};

namespace detail {

inline const std::vector<std::string> &state_columns() {
    static const std::vector<std::string> cols = {
        "chi_re",          "chi_im",        "eta_re",          "eta_im",
        "nbar",            "N1",            "N2",              "DQ2",
        "DP2",             "DQ_DP",         "Vmin",            "Vmax",
        "phi_star",        "u",             "S_dB",            "g2",
        "g2_gap",          "F_phase",       "F_quad_env",      "F_phase_sq_nbar",
        "F_phase_sq_u",    "F_quad_sq_u",   "log10_quad_ratio", "flag_phase_nbar",
        "flag_phase_u",    "flag_quad_u",
    };
    return cols;
}

inline std::vector<std::string> state_cells(const JanusState &st) {
    const MomentSet ms = moment_set(st);
    const CovarianceSummary cs = covariance(ms);
    const QfiReport rep = benchmarks(ms);
    std::vector<std::string> c;
    c.reserve(state_columns().size());
    c.push_back(format_double(st.chi().real()));
    c.push_back(format_double(st.chi().imag()));
    c.push_back(format_double(st.eta().real()));
    c.push_back(format_double(st.eta().imag()));
    c.push_back(format_double(ms.nbar));
    c.push_back(format_double(ms.N1));
    c.push_back(format_double(ms.N2));
    c.push_back(format_double(cs.VQQ));
    c.push_back(format_double(cs.VPP));
    c.push_back(format_double(std::sqrt(cs.VQQ * cs.VPP)));
    c.push_back(format_double(cs.Vmin));
    c.push_back(format_double(cs.Vmax));
    c.push_back(format_double(cs.phi_star));
    c.push_back(format_double(cs.u));
    c.push_back(format_double(cs.S_dB));
    if (rep.g2) {
        c.push_back(format_double(*rep.g2));
        c.push_back(format_double(*rep.g2 - (3.0 + 1.0 / ms.nbar)));
    } else {
        c.emplace_back(kG2Undefined);
        c.emplace_back(kG2Undefined);
    }
    c.push_back(format_double(rep.F_phase));
    c.push_back(format_double(rep.F_quad_env));
    c.push_back(format_double(rep.F_phase_sq_at_nbar));
    c.push_back(format_double(rep.F_phase_sq_at_u));
    if (rep.F_quad_sq_at_u) {
        c.push_back(format_double(*rep.F_quad_sq_at_u));
        c.push_back(format_double(std::log10(*rep.quad_ratio())));
    } else {
        c.emplace_back(kNotSqueezed);
        c.emplace_back(kNotSqueezed);
    }
    c.push_back(format_bool(rep.flags.phase_fixed_nbar));
    c.push_back(format_bool(rep.flags.phase_fixed_u));
    c.push_back(rep.F_quad_sq_at_u ? format_bool(rep.flags.quad_fixed_u) : kNotSqueezed);
    return c;
}

inline std::vector<std::string> masked_state_cells(const char *label) {
    return std::vector<std::string>(state_columns().size(), label);
}

inline void append(std::vector<std::string> &dst, const std::vector<std::string> &src) {
    dst.insert(dst.end(), src.begin(), src.end());
}

/// Row of a span-optimum scan on the slice theta = 0, phi = -Delta, r = s.
inline std::vector<std::string> span_row(double r, double delta) {
    const SqueezeParams xi(r, 0.0);
    const SqueezeParams zeta(r, -delta);
    std::vector<std::string> row = {format_double(r), format_double(delta)};
    const double benchmark = single_axis_variance(xi, Axis::Q);
    try {
        const SpanOptimum opt = span_minimum(xi, zeta, Axis::Q);
        const JanusState st = JanusState::make(xi, zeta, opt.chi, opt.eta, 1e-9);
        append(row, {kStatusOk, "0", format_double(opt.lambda_minus), format_double(benchmark),
                     format_double(opt.lambda_plus), format_double(opt.ratio.real()),
                     format_double(opt.ratio.imag())});
        append(row, state_cells(st));
    } catch (const DegenerateSpanError &) {
        // Endpoints carry the identical-state value.
        append(row, {kSpanCollapsed, "1", format_double(benchmark), format_double(benchmark),
                     kSpanCollapsed, kSpanCollapsed, kSpanCollapsed});
        append(row, state_cells(JanusState::single(xi)));
    }
    return row;
}

inline std::vector<std::string> span_header(const std::string &first, const std::string &second) {
    std::vector<std::string> h = {first,           second,          "status",
                                  "endpoint",      "DQ2_min",       "DQ2_benchmark",
                                  "lambda_plus",   "ratio_re",      "ratio_im"};
    append(h, state_columns());
    return h;
}

inline std::vector<std::string> coefficient_row(const SqueezeParams &xi, const SqueezeParams &zeta,
                                                double eta_mag, double delta) {
    std::vector<std::string> row;
    const auto st = solve_coefficients(xi, zeta, eta_mag, delta);
    if (!st) {
        row.emplace_back(kInadmissible);
        append(row, masked_state_cells(kInadmissible));
        return row;
    }
    row.emplace_back(kStatusOk);
    append(row, state_cells(*st));
    return row;
}

inline std::vector<std::string> aux_header() {
    return {"s",      "t",           "kappa",  "Norm",        "Lambda",
            "DQ2",    "F_phase",     "DQ2_sq", "F_phase_sq",  "dq_threshold",
            "dq_sufficient", "beats_dq", "beats_phase", "both"};
}

inline std::vector<std::string> aux_row(double s, double t) {
    const AuxFamilyPoint p = auxiliary_family(s, t);
    return {format_double(p.s),
            format_double(p.t),
            format_double(p.kappa),
            format_double(p.Norm),
            format_double(p.Lambda),
            format_double(p.DQ2),
            format_double(p.F_phase),
            format_double(p.DQ2_constituent),
            format_double(p.F_phase_constituent),
            format_double(p.dq_threshold),
            format_bool(p.dq_sufficient),
            format_bool(p.beats_dq),
            format_bool(p.beats_phase),
            format_bool(p.beats_dq && p.beats_phase)};
}

inline std::vector<std::string> random_header() {
    std::vector<std::string> h = {"sample", "r", "theta", "s", "phi", "t", "status", "no_go_bound"};
    append(h, state_columns());
    return h;
}

/// Evaluates rows [0, count) with `threads` workers; rows land in their own
/// slots so the output order never depends on scheduling.
inline std::vector<std::vector<std::string>>
parallel_rows(std::size_t count, int threads,
              const std::function<std::vector<std::string>(std::size_t)> &row) {
    std::vector<std::vector<std::string>> out(count);
    const int workers = std::max(1, threads);
    if (workers == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) {
            out[i] = row(i);
        }
        return out;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = static_cast<std::size_t>(w); i < count;
                     i += static_cast<std::size_t>(workers)) {
                    out[i] = row(i);
                }
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return out;
}

} // namespace detail

/// Runs a scan. `threads` > 1 evaluates grid points concurrently; the table
/// is identical for every thread count.
[[nodiscard]] inline ScanTable run_scan(const ScanGrid &g, int threads = 1) {
    g.validate();
    ScanTable table;
    const int n1 = g.axis1.n;
    const int n2 = g.axis2 ? g.axis2->n : 1;
    const std::size_t per_layer = static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2);
    const std::size_t layers = g.layers.empty() ? 1 : g.layers.size();
    auto layer_value = [&](std::size_t idx) { return g.layers.empty() ? 0.0 : g.layers[idx]; };
    auto a1 = [&](std::size_t idx) { return g.axis1.value(static_cast<int>((idx % per_layer) / n2)); };
    auto a2 = [&](std::size_t idx) {
        return g.axis2 ? g.axis2->value(static_cast<int>(idx % n2)) : 0.0;
    };
    std::function<std::vector<std::string>(std::size_t)> row;

    switch (g.kind) {
    case ScanKind::Fig1:
        table.header = detail::span_header("r", "Delta");
        row = [&](std::size_t i) { return detail::span_row(layer_value(i / per_layer), a1(i)); };
        break;
    case ScanKind::Fig2:
        table.header = detail::span_header("r", "Delta");
        row = [&](std::size_t i) { return detail::span_row(a1(i), a2(i)); };
        break;
    case ScanKind::Fig3:
    case ScanKind::Fig4: {
        table.header = {"r", "s", "Delta", "eta_mag", "delta", "status"};
        detail::append(table.header, detail::state_columns());
        row = [&](std::size_t i) {
            const double r = layer_value(i / per_layer);
            const SqueezeParams xi(r, 0.0);
            const SqueezeParams zeta(r, -g.fixed_delta);
            std::vector<std::string> out = {format_double(r), format_double(r),
                                            format_double(g.fixed_delta), format_double(a1(i)),
                                            format_double(a2(i))};
            detail::append(out, detail::coefficient_row(xi, zeta, a1(i), a2(i)));
            return out;
        };
        break;
    }
    case ScanKind::Fig5: {
        table.header = {"r", "t", "Delta", "status"};
        detail::append(table.header, detail::state_columns());
        row = [&](std::size_t i) {
            const double t = a1(i);
            const double delta = a2(i);
            const SqueezeParams xi(g.fixed_r, 0.0);
            const SqueezeParams zeta(g.fixed_r, -delta);
            std::vector<std::string> out = {format_double(g.fixed_r), format_double(t),
                                            format_double(delta)};
            try {
                const JanusState st = from_ratio(xi, zeta, t);
                out.emplace_back(kStatusOk);
                detail::append(out, detail::state_cells(st));
            } catch (const DegenerateSpanError &) {
                out.emplace_back(kSpanCollapsed);
                detail::append(out, detail::masked_state_cells(kSpanCollapsed));
            }
            return out;
        };
        break;
    }
    case ScanKind::Fig6a: {
        table.header = detail::random_header();
        // Draws are sequential, so states are generated up front.
        Sampler rng(g.seed);
        std::vector<JanusState> states;
        for (int i = 0; i < n1; ++i) {
            states.push_back(random_janus(rng));
        }
        row = [states](std::size_t i) {
            const JanusState &st = states[i];
            const MomentSet ms = moment_set(st);
            std::vector<std::string> out = {
                std::to_string(i),
                format_double(st.xi().r()),
                format_double(st.xi().theta()),
                format_double(st.zeta().r()),
                format_double(st.zeta().theta()),
                format_double(std::real(st.eta() / st.chi())),
                kStatusOk,
                format_double(no_go_bound(ms.nbar))};
            detail::append(out, detail::state_cells(st));
            return out;
        };
        break;
    }
    case ScanKind::Fig6bc:
        table.header = detail::aux_header();
        row = [&](std::size_t i) { return detail::aux_row(g.fixed_s, a1(i)); };
        break;
    case ScanKind::Fig7: {
        table.header = {"r", "s", "Delta", "eta_mag", "delta", "status"};
        detail::append(table.header, detail::state_columns());
        row = [&](std::size_t i) {
            const double delta_sq = a2(i);
            const SqueezeParams xi(g.fixed_r, 0.0);
            const SqueezeParams zeta(g.fixed_s, -delta_sq);
            std::vector<std::string> out = {format_double(g.fixed_r), format_double(g.fixed_s),
                                            format_double(delta_sq), format_double(a1(i)),
                                            format_double(g.fixed_delta)};
            detail::append(out, detail::coefficient_row(xi, zeta, a1(i), g.fixed_delta));
            return out;
        };
        break;
    }
    }
    table.rows = detail::parallel_rows(layers * per_layer, threads, row);
    return table;
}

} // namespace janus
