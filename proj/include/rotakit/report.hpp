// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rotakit/generator.hpp"
#include "rotakit/geometry.hpp"
#include "rotakit/partition.hpp"
#include "rotakit/search.hpp"

namespace rotakit {

// Shortest decimal form that round-trips well below every tolerance the
// suite uses (12 significant digits).
std::string format_value(double v);

// chain CSV: one row per degree with both diameter routes. The closed-form
// column reads "na" for k = 2 where only brute force applies.
void write_chain_csv(std::ostream& os, const std::string& body_id,
                     const ChainReport& report);

// analyze CSV: one row per body with symmetry and size facts.
void write_analysis_header(std::ostream& os);
void write_analysis_row(std::ostream& os, const std::string& body_id,
                        const ConvexBody& body, const SymmetryProfile& profile);

// sweep CSV: one row per sampled chord angle.
void write_sweep_csv(std::ostream& os, const std::string& body_id,
                     const SweepResult& result);

// Conjunction of comparisons over corpus facts, e.g.
// "chi>=3,generator=sector,n<=100". Fields: kC, chi, n, generator, id.
// Numeric fields accept = != < <= > >=, string fields = and !=.
struct FilterClause {
    std::string field;
    std::string op;
    std::string text_value;
    double num_value{0.0};
    bool numeric{false};
};

struct Filter {
    std::vector<FilterClause> clauses;
};

Filter parse_filter(const std::string& expr);  // throws ParseError
bool filter_matches(const Filter& filter, const std::string& id,
                    const std::string& generator, const SymmetryProfile& profile,
                    std::size_t vertex_count);

// One drawing panel: a partition with its worst pair highlighted.
struct PanelSpec {
    StandardPartition partition;
    double dm{0.0};
    Point2 seg_a, seg_b;  // a pair attaining dm
    std::string label;
};

// Computes the worst pair across the partition's subsets by brute force.
PanelSpec make_panel(const ConvexBody& body, const StandardPartition& partition);

// Side-by-side 800x800 panels, 5% margin each, y axis flipped to screen
// coordinates.
void render_partitions_svg(std::ostream& os, const ConvexBody& body,
                           const std::vector<PanelSpec>& panels);

}  // namespace rotakit
