// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "rotakit/geometry.hpp"

namespace rotakit {

// Polygon text format: one "x y" pair per line, '#' starts a comment line,
// blank lines ignored, vertex order arbitrary (normalized on load).

std::vector<Point2> parse_polygon_text(std::istream& in);
std::vector<Point2> read_polygon_file(const std::filesystem::path& path);

ConvexBody load_body(const std::filesystem::path& path,
                     const Tolerance& tol = Tolerance::generated());

// Writes vertices with full round-trip precision (17 significant digits).
// Output is byte-deterministic for identical input.
void write_polygon_file(const std::filesystem::path& path,
                        std::span<const Point2> pts,
                        const std::string& comment = "");

}  // namespace rotakit
