// SPDX-License-Identifier: Apache-2.0
#include "rotakit/polygon_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace rotakit {

std::vector<Point2> parse_polygon_text(std::istream& in) {
  std::vector<Point2> pts;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t i = line.find_first_not_of(" \t");
    if (i == std::string::npos || line[i] == '#') continue;
    std::istringstream ls(line.substr(i));
    double x = 0.0, y = 0.0;
    if (!(ls >> x >> y)) {
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected \"x y\"");
    }
    std::string rest;
    if (ls >> rest) {
      throw ParseError("line " + std::to_string(lineno) +
                       ": trailing content \"" + rest + "\"");
    }
    pts.push_back({x, y});
  }
  return pts;
}

std::vector<Point2> read_polygon_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return parse_polygon_text(in);
}

ConvexBody load_body(const std::filesystem::path& path, const Tolerance& tol) {
  return normalize_body(read_polygon_file(path), tol);
}

void write_polygon_file(const std::filesystem::path& path,
                        std::span<const Point2> pts,
                        const std::string& comment) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  if (!comment.empty()) out << "# " << comment << "\n";
  char buf[64];
  for (const Point2& p : pts) {
    std::snprintf(buf, sizeof(buf), "%.17g %.17g\n", p.x, p.y);
    out << buf;
  }
}

}  // namespace rotakit
