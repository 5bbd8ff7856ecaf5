// SPDX-License-Identifier: Apache-2.0
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

#include "rotakit/errors.hpp"
#include "rotakit/generator.hpp"
#include "rotakit/polygon_io.hpp"

using namespace rotakit;

namespace {

std::filesystem::path temp_file(const std::string& name)
{
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("polygon text parsing accepts comments and blanks")
{
    std::istringstream in(
        "# a square\n"
        "\n"
        "0 0\n"
        "1 0\r\n"
        "1 1\n"
        "  0   1  \n");
    auto pts = parse_polygon_text(in);
    REQUIRE(pts.size() == 4);
    CHECK(pts[1].x == 1.0);
    CHECK(pts[3].y == 1.0);
}

TEST_CASE("polygon text parsing reports the offending line")
{
    std::istringstream bad(
        "0 0\n"
        "1 0\n"
        "bogus\n");
    try {
        parse_polygon_text(bad);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }

    std::istringstream trailing("0 0 extra\n1 0\n0 1\n");
    CHECK_THROWS_AS(parse_polygon_text(trailing), ParseError);
}

TEST_CASE("write then read round-trips vertices exactly")
{
    auto body = regular_polygon(11);
    auto path = temp_file("rotakit_io_roundtrip.poly");
    write_polygon_file(path, body.vertices, "eleven-gon");

    auto pts = read_polygon_file(path);
    REQUIRE(pts.size() == body.vertices.size());
    auto reloaded = load_body(path, Tolerance::analytic());
    REQUIRE(reloaded.vertices.size() == body.vertices.size());
    for (std::size_t i = 0; i < body.vertices.size(); ++i) {
        // %.17g preserves doubles bit for bit.
        CHECK(reloaded.vertices[i].x == body.vertices[i].x);
        CHECK(reloaded.vertices[i].y == body.vertices[i].y);
    }
    std::filesystem::remove(path);
}

TEST_CASE("writing twice produces identical bytes")
{
    auto body = regular_polygon(9);
    auto p1 = temp_file("rotakit_io_det1.poly");
    auto p2 = temp_file("rotakit_io_det2.poly");
    write_polygon_file(p1, body.vertices, "nine-gon");
    write_polygon_file(p2, body.vertices, "nine-gon");

    std::ifstream f1(p1, std::ios::binary), f2(p2, std::ios::binary);
    std::string s1((std::istreambuf_iterator<char>(f1)),
                   std::istreambuf_iterator<char>());
    std::string s2((std::istreambuf_iterator<char>(f2)),
                   std::istreambuf_iterator<char>());
    CHECK(s1 == s2);
    CHECK(s1.find("# nine-gon\n") == 0);
    std::filesystem::remove(p1);
    std::filesystem::remove(p2);
}

TEST_CASE("missing file raises ParseError")
{
    CHECK_THROWS_AS(read_polygon_file("/nonexistent/rotakit.poly"), ParseError);
}

TEST_CASE("load_body normalizes scrambled files")
{
    auto path = temp_file("rotakit_io_scrambled.poly");
    {
        std::ofstream out(path);
        out << "1 1\n0 0\n1 0\n0 1\n";
    }
    auto body = load_body(path);
    REQUIRE(body.vertices.size() == 4);
    CHECK(polygon_area(body.vertices) == doctest::Approx(1.0));
    std::filesystem::remove(path);
}
