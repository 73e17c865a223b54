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

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <string>

#include "janus/scan.hpp"

using namespace janus;

namespace {

std::size_t column(const ScanTable &t, const std::string &name) {
    const auto it = std::find(t.header.begin(), t.header.end(), name);
    REQUIRE(it != t.header.end());
    return static_cast<std::size_t>(it - t.header.begin());
}

bool is_number(const std::string &s) {
    char *end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    return end != s.c_str() && *end == '\0' && std::isfinite(v);
}

void check_cells(const ScanTable &t) {
    static const std::set<std::string> labels = {kInadmissible, kSpanCollapsed, kNotSqueezed,
                                                 kG2Undefined, kStatusOk};
    for (const auto &row : t.rows) {
        REQUIRE(row.size() == t.header.size());
        for (const auto &cell : row) {
            CHECK((is_number(cell) || labels.count(cell) == 1));
        }
    }
}

} // namespace

TEST_CASE("grid axes", "[scan]") {
    const GridAxis closed{"a", 0.0, 1.0, 5, Spacing::Closed};
    CHECK(closed.value(0) == 0.0);
    CHECK(closed.value(4) == 1.0);
    const GridAxis half{"a", 0.0, 1.0, 4, Spacing::HalfOpen};
    CHECK(half.value(3) == 0.75);
    const GridAxis open{"a", 0.0, 1.0, 3, Spacing::Open};
    CHECK(open.value(0) == 0.25);
    CHECK(open.value(2) == 0.75);
    CHECK_THROWS_AS((GridAxis{"a", 0.0, 1.0, 1, Spacing::Closed}.validate()), DomainError);
    CHECK_THROWS_AS((GridAxis{"a", 1.0, 1.0, 4, Spacing::Closed}.validate()), DomainError);
    CHECK_THROWS_AS((GridAxis{"a", 0.0, INFINITY, 4, Spacing::Closed}.validate()), DomainError);
}

TEST_CASE("scan kinds and default grids", "[scan]") {
    CHECK(parse_scan_kind("fig5") == ScanKind::Fig5);
    CHECK(scan_kind_name(ScanKind::Fig6bc) == "fig6bc");
    CHECK_THROWS_AS(parse_scan_kind("fig9"), DomainError);
    CHECK(default_grid(ScanKind::Fig1).size() == 3u * 400u);
    CHECK(default_grid(ScanKind::Fig2).size() == 200u * 200u);
    CHECK(default_grid(ScanKind::Fig3).size() == 200u * 200u);
    CHECK(default_grid(ScanKind::Fig4).size() == 4u * 200u * 200u);
    CHECK(default_grid(ScanKind::Fig5).size() == 300u * 300u);
    CHECK(default_grid(ScanKind::Fig7).size() == 200u * 200u);
}

TEST_CASE("equal-strength slice scan", "[scan]") {
    ScanGrid g = default_grid(ScanKind::Fig1);
    g.layers = {1.0};
    g.axis1.n = 41;
    const ScanTable t = run_scan(g);
    REQUIRE(t.rows.size() == 41u);
    check_cells(t);
    const std::size_t dq = column(t, "DQ2_min");
    const std::size_t st = column(t, "status");
    const std::size_t ep = column(t, "endpoint");
    const double bench = 0.5 * std::exp(-2.0);
    // Delta = pi sits in the middle of the closed grid.
    CHECK(std::stod(t.rows[20][dq]) < bench);
    for (std::size_t i : {std::size_t{0}, std::size_t{40}}) {
        CHECK(t.rows[i][st] == kSpanCollapsed);
        CHECK(t.rows[i][ep] == "1");
        CHECK(std::abs(std::stod(t.rows[i][dq]) - bench) < 1e-15);
    }
    for (std::size_t i = 1; i < 40; ++i) {
        CHECK(t.rows[i][st] == kStatusOk);
        CHECK(std::stod(t.rows[i][dq]) <= bench);
    }
}

TEST_CASE("coefficient-plane scans mark inadmissible points", "[scan]") {
    ScanGrid g = default_grid(ScanKind::Fig3);
    g.axis1.n = 25;
    g.axis2->n = 16;
    const ScanTable t = run_scan(g);
    check_cells(t);
    const std::size_t st = column(t, "status");
    std::size_t bad = 0;
    for (const auto &row : t.rows) {
        if (row[st] == kInadmissible) {
            ++bad;
            CHECK(row[column(t, "nbar")] == kInadmissible);
        }
    }
    CHECK(bad > 0);
    CHECK(bad < t.rows.size());
}

TEST_CASE("ratio landscape at the representative point", "[scan]") {
    ScanGrid g = default_grid(ScanKind::Fig5);
    // Put t = -0.32/1.15 and Delta = pi on the grid.
    g.axis1 = {"t", -0.32 / 1.15, 1.0, 2, Spacing::Closed};
    g.axis2 = GridAxis{"Delta", 0.0, 2.0 * std::numbers::pi, 1, Spacing::Open};
    g.axis2->n = 1;
    CHECK_THROWS_AS(run_scan(g), DomainError);
    g.axis2 = GridAxis{"Delta", 0.0, 2.0 * std::numbers::pi, 3, Spacing::Open};
    const ScanTable t = run_scan(g);
    check_cells(t);
    const auto &row = t.rows[1];
    CHECK(std::abs(std::stod(row[column(t, "Delta")]) - std::numbers::pi) < 1e-15);
    CHECK(std::stod(row[column(t, "log10_quad_ratio")]) > 1.0);
    CHECK(row[column(t, "flag_quad_u")] == "1");
}

TEST_CASE("not-squeezed cells are masked", "[scan]") {
    ScanGrid g = default_grid(ScanKind::Fig5);
    g.axis1.n = 13;
    g.axis2->n = 11;
    const ScanTable t = run_scan(g);
    check_cells(t);
    std::size_t masked = 0;
    for (const auto &row : t.rows) {
        if (row[column(t, "F_quad_sq_u")] == kNotSqueezed) {
            ++masked;
            CHECK(std::stod(row[column(t, "u")]) > 1.0);
            CHECK(row[column(t, "log10_quad_ratio")] == kNotSqueezed);
        }
    }
    CHECK(masked > 0);
}

TEST_CASE("random-state scan respects the no-go bound", "[scan]") {
    ScanGrid g = default_grid(ScanKind::Fig6a);
    g.axis1.n = 100;
    const ScanTable t = run_scan(g);
    check_cells(t);
    for (const auto &row : t.rows) {
        CHECK(std::stod(row[column(t, "Vmin")]) >= std::stod(row[column(t, "no_go_bound")]) - 1e-10);
    }
}

TEST_CASE("auxiliary family scan", "[scan]") {
    const ScanTable t = run_scan(default_grid(ScanKind::Fig6bc));
    check_cells(t);
    std::size_t both = 0;
    for (const auto &row : t.rows) {
        both += row[column(t, "both")] == "1" ? 1 : 0;
    }
    CHECK(both > 0);
}

TEST_CASE("phase-resolved landscape", "[scan]") {
    ScanGrid g = default_grid(ScanKind::Fig7);
    g.axis1.n = 12;
    g.axis2->n = 9;
    const ScanTable t = run_scan(g);
    check_cells(t);
    CHECK(t.rows.size() == 108u);
}

TEST_CASE("scan output is deterministic and independent of threading", "[scan]") {
    for (ScanKind kind : {ScanKind::Fig2, ScanKind::Fig4, ScanKind::Fig6a}) {
        ScanGrid g = default_grid(kind);
        g.axis1.n = std::min(g.axis1.n, 17);
        if (g.axis2) {
            g.axis2->n = 13;
        }
        std::ostringstream a, b, c;
        run_scan(g, 1).write_csv(a);
        run_scan(g, 1).write_csv(b);
        run_scan(g, 4).write_csv(c);
        CHECK(a.str() == b.str());
        CHECK(a.str() == c.str());
        CHECK(a.str().find("nan") == std::string::npos);
        const std::string first_line = a.str().substr(0, a.str().find('\n'));
        CHECK(first_line.find("status") != std::string::npos);
    }
}

TEST_CASE("number formatting", "[scan]") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(-2.0) == "-2");
    CHECK_THROWS_AS(format_double(NAN), Error);
    CHECK(format_bool(true) == "1");
}
