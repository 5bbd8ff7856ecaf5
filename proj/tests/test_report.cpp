// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>

#include <doctest.h>

#include "rotakit/errors.hpp"
#include "rotakit/generator.hpp"
#include "rotakit/report.hpp"

using namespace rotakit;

namespace {

std::size_t count_lines(const std::string& s)
{
    std::size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("format_value round-trips within 5e-12 relative error")
{
    for (double v : {1.7278316188542089, 3.141592653589793, 1.0 / 3.0, 1e-17,
                     12345.678901234, 2.0}) {
        std::string s = format_value(v);
        double back = std::strtod(s.c_str(), nullptr);
        CHECK(std::abs(back - v) <= 5e-12 * std::abs(v));
    }
    CHECK(format_value(1.0) == "1");
}

TEST_CASE("chain CSV carries both diameter routes")
{
    auto rep = chain_report(regular_polygon(6));
    std::ostringstream os;
    write_chain_csv(os, "E_6", rep);
    std::string csv = os.str();

    CHECK(csv.rfind("body_id,k_C,chi,k,dM_formula,dM_brute,equals_R,"
                    "equality_chain,unique_minimum\n",
                    0)
          == 0);
    CHECK(count_lines(csv) == 1 + rep.entries.size());
    CHECK(csv.find("E_6,6,2,2,na,") != std::string::npos);  // k=2 has no formula
    CHECK(csv.find("E_6,6,2,3,1.5,") != std::string::npos);
}

TEST_CASE("analysis CSV lists divisors")
{
    auto body = regular_polygon(10);
    auto prof = detect_symmetry(body);
    std::ostringstream os;
    write_analysis_header(os);
    write_analysis_row(os, "E_10", body, prof);
    CHECK(os.str().find("E_10,10,10,2,2|5|10,1,") != std::string::npos);
}

TEST_CASE("filter parsing and matching")
{
    auto f = parse_filter("chi>=3,generator=sector,n<100");
    CHECK(f.clauses.size() == 3);

    SymmetryProfile prof;
    prof.max_degree = 9;
    prof.min_degree = 3;
    CHECK(filter_matches(f, "sector_001_m9", "sector", prof, 72));
    CHECK_FALSE(filter_matches(f, "E_9", "regular", prof, 9));
    prof.min_degree = 2;
    CHECK_FALSE(filter_matches(f, "sector_001_m9", "sector", prof, 72));

    CHECK(filter_matches(parse_filter(""), "x", "regular", prof, 3));
    CHECK(filter_matches(parse_filter("id!=E_5"), "E_6", "regular", prof, 6));

    CHECK_THROWS_AS(parse_filter("bogus>=3"), ParseError);
    CHECK_THROWS_AS(parse_filter("chi>=abc"), ParseError);
    CHECK_THROWS_AS(parse_filter("chi"), ParseError);
    CHECK_THROWS_AS(parse_filter("generator<sector"), ParseError);
}

TEST_CASE("panels find the worst pair")
{
    auto hex = regular_polygon(6);
    auto panel = make_panel(hex, standard_partition(hex, 2));
    CHECK(panel.dm == doctest::Approx(std::sqrt(3.25)).epsilon(1e-12));
    CHECK(distance(panel.seg_a, panel.seg_b)
          == doctest::Approx(panel.dm).epsilon(1e-12));
    CHECK(panel.label.rfind("k=2", 0) == 0);
}

TEST_CASE("svg rendering emits one group per panel")
{
    auto hex = regular_polygon(6);
    std::vector<PanelSpec> panels;
    panels.push_back(make_panel(hex, standard_partition(hex, 2)));
    panels.push_back(make_panel(hex, standard_partition(hex, 3)));
    panels.push_back(make_panel(hex, standard_partition(hex, 6)));

    std::ostringstream os;
    render_partitions_svg(os, hex, panels);
    std::string svg = os.str();

    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    std::size_t groups = 0;
    for (std::size_t at = svg.find("<g>"); at != std::string::npos;
         at = svg.find("<g>", at + 1))
        ++groups;
    CHECK(groups == 3);
    CHECK(svg.find("k=2") != std::string::npos);
    CHECK(svg.find("k=6") != std::string::npos);
    CHECK(svg.find("width=\"2400\"") != std::string::npos);
}

TEST_CASE("sweep CSV has one row per sample")
{
    auto rect = rectangle(2.0, 1.0);
    auto res = sweep_center_chords(rect, 16);
    std::ostringstream os;
    write_sweep_csv(os, "rect_4x2", res);
    CHECK(count_lines(os.str()) == 1 + res.samples.size());
}
