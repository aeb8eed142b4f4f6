#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "qst/field.hpp"
#include "qst/field_io.hpp"
#include "support/test_helpers.hpp"

using namespace qst;

namespace {

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_SUITE("grid") {

TEST_CASE("flatten: documented corner cases on a 4x4 grid") {
    GridIndexMap map(4, 4);
    CHECK(map.flatten(1, 1) == 1);
    CHECK(map.flatten(2, 1) == 5);
    CHECK(map.flatten(4, 4) == 16);
    CHECK_THROWS_AS(map.flatten(0, 1), std::out_of_range);
    CHECK_THROWS_AS(map.flatten(5, 1), std::out_of_range);
    CHECK_THROWS_AS(map.flatten(1, 5), std::out_of_range);
    CHECK_THROWS_AS(map.unflatten(0), std::out_of_range);
    CHECK_THROWS_AS(map.unflatten(17), std::out_of_range);
}

TEST_CASE("flatten/unflatten are inverse bijections up to 16x16") {
    for (int rows = 1; rows <= 16; ++rows) {
        for (int cols = 1; cols <= 16; ++cols) {
            GridIndexMap map(rows, cols);
            int expected = 1;
            for (int i = 1; i <= rows; ++i)
                for (int j = 1; j <= cols; ++j) {
                    const int k = map.flatten(i, j);
                    CHECK(k == expected);
                    const auto [bi, bj] = map.unflatten(k);
                    CHECK(bi == i);
                    CHECK(bj == j);
                    ++expected;
                }
        }
    }
}

TEST_CASE("field validation") {
    CHECK_THROWS_AS(Field::image(2, 2, {1.0, 2.0, 3.0}), std::invalid_argument);
    CHECK_THROWS_AS(Field::signal({1.0, std::nan("")}), std::invalid_argument);
    CHECK_THROWS_AS(Field::signal({}), std::invalid_argument);
    const Field f = Field::image(2, 3, {1, 2, 3, 4, 5, 6});
    CHECK(f.at(0, 2) == 3.0);
    CHECK(f.at(1, 0) == 4.0);
    CHECK(f.min_value() == 1.0);
    CHECK(f.max_value() == 6.0);
}

TEST_CASE("csv load: 2x2 image") {
    std::istringstream in("1,2\n3,4\n");
    const Field f = parse_csv(in, "test");
    CHECK(f.kind == FieldKind::Image2D);
    CHECK(f.width == 2);
    CHECK(f.height == 2);
    CHECK(f.values == std::vector<double>{1, 2, 3, 4});
}

TEST_CASE("csv load: single column becomes a 1D signal") {
    std::ostringstream src;
    for (int i = 0; i < 16; ++i) src << i << "\n";
    std::istringstream in(src.str());
    const Field f = parse_csv(in, "test");
    CHECK(f.kind == FieldKind::Signal1D);
    CHECK(f.width == 16);
    CHECK(f.height == 1);
}

TEST_CASE("csv load: non-rectangular input fails with location") {
    std::istringstream in("1,2\n3\n");
    CHECK_THROWS_WITH_AS(parse_csv(in, "bad.csv"),
                         doctest::Contains("bad.csv:2"), std::runtime_error);
}

TEST_CASE("csv load: garbage token fails with location") {
    std::istringstream in("1,2\n3,x\n");
    CHECK_THROWS_WITH_AS(parse_csv(in, "bad.csv"),
                         doctest::Contains("bad.csv:2"), std::runtime_error);
}

TEST_CASE("csv round-trip is exact for random fields") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    for (int trial = 0; trial < 5; ++trial) {
        Field f = trial % 2 == 0 ? testing::random_image(7, 5, 100 + trial, -50.0, 50.0)
                                 : testing::random_signal(23, 200 + trial, -50.0, 50.0);
        for (double& v : f.values) v = u(rng);
        const auto path = temp_file("qst_roundtrip.csv");
        save_field(f, path, FieldFormat::Csv);
        const Field g = load_field(path, FieldFormat::Csv);
        REQUIRE(g.kind == f.kind);
        REQUIRE(g.width == f.width);
        REQUIRE(g.height == f.height);
        for (std::size_t i = 0; i < f.values.size(); ++i) CHECK(g.values[i] == f.values[i]);
    }
}

TEST_CASE("csv round-trip: 1D signal with negatives and fractions") {
    const Field f = Field::signal({0.5, -1.25});
    const auto path = temp_file("qst_sig.csv");
    save_field(f, path, FieldFormat::Csv);
    const Field g = load_field(path, FieldFormat::Csv);
    CHECK(g.kind == FieldKind::Signal1D);
    CHECK(g.values == f.values);
}

TEST_CASE("pgm: ascii P2 parse") {
    std::istringstream in("P2\n# a comment\n3 3\n255\n7 7 7 7 7 7 7 7 7\n");
    const Field f = parse_pgm(in, "test.pgm");
    CHECK(f.kind == FieldKind::Image2D);
    CHECK(f.width == 3);
    CHECK(f.height == 3);
    for (double v : f.values) CHECK(v == 7.0);
}

TEST_CASE("pgm: binary P5 parse") {
    std::string data = "P5\n2 2\n255\n";
    const unsigned char bytes[4] = {0, 17, 128, 255};
    data.append(reinterpret_cast<const char*>(bytes), 4);
    std::istringstream in(data);
    const Field f = parse_pgm(in, "test.pgm");
    CHECK(f.values == std::vector<double>{0, 17, 128, 255});
}

TEST_CASE("pgm: clamping contract on save") {
    const Field f = Field::image(1, 3, {300.0, -4.0, 128.4});
    const auto path = temp_file("qst_clamp.pgm");
    save_field(f, path, FieldFormat::Pgm);
    const Field g = load_field(path, FieldFormat::Pgm);
    CHECK(g.values[0] == 255.0);
    CHECK(g.values[1] == 0.0);
    CHECK(g.values[2] == 128.0);
}

TEST_CASE("pgm: malformed header reports an error") {
    std::istringstream in("P3\n2 2\n255\n");
    CHECK_THROWS_AS(parse_pgm(in, "bad.pgm"), std::runtime_error);
    std::istringstream in2("P5\n2 2\n70000\n");
    CHECK_THROWS_AS(parse_pgm(in2, "bad.pgm"), std::runtime_error);
}

TEST_CASE("pgm: truncated P5 payload reports offset") {
    std::string data = "P5\n2 2\n255\n";
    data += std::string(2, '\0');  // 2 of 4 bytes
    std::istringstream in(data);
    CHECK_THROWS_WITH_AS(parse_pgm(in, "trunc.pgm"), doctest::Contains("truncated"),
                         std::runtime_error);
}

TEST_CASE("format detection from extension") {
    CHECK(format_from_path("a/b.pgm") == FieldFormat::Pgm);
    CHECK(format_from_path("a/b.PGM") == FieldFormat::Pgm);
    CHECK(format_from_path("a/b.csv") == FieldFormat::Csv);
    CHECK(format_from_path("a/b.txt") == FieldFormat::Csv);
}

TEST_CASE("load_field: missing file") {
    CHECK_THROWS_AS(load_field("/nonexistent/qst.csv", FieldFormat::Csv), std::runtime_error);
}

}  // TEST_SUITE
