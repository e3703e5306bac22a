#include <doctest.h>

#include <cmath>
#include <sstream>

#include "quanton/io.hpp"
#include "test_helpers.hpp"

using namespace quanton;
using namespace quanton::testing;

TEST_CASE("parse_state_json") {
    SUBCASE("well-formed document") {
        const auto sf = parse_state_json(R"({
            "label": "bell",
            "amplitudes": [[0.7071067811865476, 0], [0, 0], [0, 0], [0.7071067811865476, 0]]
        })");
        CHECK(sf.label == "bell");
        CHECK_FALSE(sf.renormalized);
        CHECK(std::abs(sf.state.amp[0].real() - kInvSqrt2) < 1e-15);
        CHECK(std::abs(sf.state.amp[3].real() - kInvSqrt2) < 1e-15);
    }
    SUBCASE("slightly off-norm input is renormalized") {
        const auto sf = parse_state_json(R"({"amplitudes": [[1.0000000001, 0], [0,0], [0,0], [0,0]]})");
        CHECK(sf.renormalized);
        CHECK(std::abs(sf.state.norm_sq() - 1.0) < 1e-14);
    }
    SUBCASE("badly unnormalized input rejected") {
        CHECK_THROWS_AS(parse_state_json(R"({"amplitudes": [[2,0],[0,0],[0,0],[0,0]]})"),
                        ParseError);
    }
    SUBCASE("malformed documents rejected") {
        CHECK_THROWS_AS(parse_state_json("not json"), ParseError);
        CHECK_THROWS_AS(parse_state_json(R"({"amplitudes": [[1,0],[0,0]]})"), ParseError);
        CHECK_THROWS_AS(parse_state_json(R"({"amplitudes": [[1,0],[0,0],[0,0],"x"]})"), ParseError);
        CHECK_THROWS_AS(parse_state_json(R"({"label": 3, "amplitudes": [[1,0],[0,0],[0,0],[0,0]]})"),
                        ParseError);
    }
}

TEST_CASE("format_number uses 12 significant digits") {
    CHECK(format_number(0.1234567890123456) == "0.123456789012");
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(-2.5e-7) == "-2.5e-07");
}

TEST_CASE("CsvWriter emits header comments and deterministic rows") {
    std::ostringstream a, b;
    {
        CsvWriter wa(a, "quanton sweep --out x.csv", 42, {"x", "y"});
        wa.write_row({1.0, 0.5});
        CsvWriter wb(b, "quanton sweep --out x.csv", 42, {"x", "y"});
        wb.write_row({1.0, 0.5});
    }
    CHECK(a.str() == b.str());
    CHECK(a.str().find("# seed: 42") != std::string::npos);
    CHECK(a.str().find("# command: quanton sweep") != std::string::npos);
    CHECK(a.str().find("x,y\n1,0.5\n") != std::string::npos);
}
