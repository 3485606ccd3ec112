#include "motzkin/bfile.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

using namespace motzkin;

TEST_CASE("parses entries, comments and blank lines") {
    std::istringstream in(
        "# A comment\n"
        "\n"
        "0 1\n"
        "1 -3\n"
        "  # indented comment\n"
        "5 340282366920938463463374607431768211456\n");
    const BFile bf = parse_bfile(in, "sample");
    REQUIRE(bf.entries.size() == 3);
    CHECK(bf.source_name == "sample");
    CHECK(bf.entries[0].index == 0);
    CHECK(bf.entries[0].value == 1);
    CHECK(bf.entries[1].value == -3);
    CHECK(bf.entries[2].index == 5);
    CHECK(bf.entries[2].value == Integer("340282366920938463463374607431768211456"));
}

TEST_CASE("empty input parses to no entries") {
    std::istringstream in("# only a comment\n\n");
    CHECK(parse_bfile(in, "empty").entries.empty());
}

TEST_CASE("malformed lines report the line number") {
    auto expect_error_at = [](const std::string& text, long line) {
        std::istringstream in(text);
        try {
            parse_bfile(in, "bad");
            FAIL("expected bfile_error");
        } catch (const bfile_error& e) {
            CHECK(e.line == line);
            CHECK(std::string(e.what()).find("bad:" + std::to_string(line)) != std::string::npos);
        }
    };
    expect_error_at("0 1\n1\n", 2);           // missing value
    expect_error_at("0 1\n1 2 3\n", 2);       // trailing junk
    expect_error_at("zero 1\n", 1);           // non-numeric index
    expect_error_at("0 one\n", 1);            // non-numeric value
    expect_error_at("0 1\n0 2\n", 2);         // non-increasing index
    expect_error_at("2 1\n1 2\n", 2);         // decreasing index
    expect_error_at("999999999999999999999 1\n", 1);  // index overflow
}

TEST_CASE("load_bfile rejects missing files") {
    CHECK_THROWS_AS(load_bfile("/nonexistent/path/b000000.txt"), bfile_error);
}
