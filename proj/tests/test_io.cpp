#include <catch_amalgamated.hpp>

#include <sstream>

#include "oracles.hpp"

using namespace qdesign;

namespace {

LinearCode parse_code(const std::string& text) {
    std::istringstream in(text);
    return read_generator(in, "inline");
}

BlockFamily parse_family(const std::string& text) {
    std::istringstream in(text);
    return read_family(in, "inline");
}

// Line number carried by the ParseError thrown while parsing `text`, or 0 when none is thrown.
template <class Parse>
std::size_t error_line(Parse&& parse, const std::string& text) {
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST_CASE("generator files round-trip") {
    for (const auto& c : {rt6(), ternary_golay(), drs(8, 3), simplex(4, 2), tf1(4)}) {
        std::ostringstream out;
        write_generator(out, c);
        auto back = parse_code(out.str());
        REQUIRE(back == c);
        REQUIRE(back.generator() == c.generator());
    }
}

TEST_CASE("generator parsing skips comments and blank lines") {
    auto c = parse_code("# a [4,2] ternary code\n\n3 4 2   # q n k\n1 0 1 1\n\n  # between rows\n0 1 1 2\n");
    REQUIRE(c.q() == 3);
    REQUIRE(c.n() == 4);
    REQUIRE(c.k() == 2);
    REQUIRE(c.generator() == Matrix{{1, 0, 1, 1}, {0, 1, 1, 2}});
}

TEST_CASE("k = 0 reads as the zero code") {
    auto c = parse_code("5 6 0\n");
    REQUIRE(c.k() == 0);
    REQUIRE(c.n() == 6);
    REQUIRE(dual(c).k() == 6);
}

TEST_CASE("generator parse errors name the offending line") {
    auto parse = [](const std::string& s) { return parse_code(s); };
    REQUIRE(error_line(parse, "3 4 1\n1 0 x 1\n") == 2);
    REQUIRE(error_line(parse, "3 4 1\n1 0 -1 1\n") == 2);
    REQUIRE(error_line(parse, "3 4 2\n1 0 1 1\n") == 2);
    REQUIRE(error_line(parse, "3 4 1\n1 0 1\n") == 2);
    REQUIRE(error_line(parse, "# header next\n3 4 1\n1 0 3 1\n") == 3);
    REQUIRE(error_line(parse, "6 4 1\n1 0 1 1\n") == 1);
    REQUIRE(error_line(parse, "3 4\n") == 1);
    REQUIRE(error_line(parse, "3 4 5\n") == 1);
    REQUIRE(error_line(parse, "3 4 1\n1 0 1 1\n1 1 1 1\n") == 3);
    // Rank deficiency is reported at the header.
    REQUIRE(error_line(parse, "3 3 2\n1 1 0\n2 2 0\n") == 1);
    REQUIRE_THROWS_AS(parse_code(""), ParseError);
    REQUIRE_THROWS_AS(read_generator_file("/nonexistent/qdesign.gen"), ParseError);
}

TEST_CASE("block families round-trip and validate weights") {
    auto f = codewords_of_weight(rt6(), 6, 1);
    std::ostringstream out;
    write_family(out, f);
    auto back = parse_family(out.str());
    REQUIRE(back.q() == f.q());
    REQUIRE(back.n == f.n);
    REQUIRE(back.w == f.w);
    REQUIRE(back.blocks == f.blocks);

    auto parse = [](const std::string& s) { return parse_family(s); };
    REQUIRE(error_line(parse, "3 4 2 2\n1 1 0 0\n1 0 0 0\n") == 3);
    REQUIRE(error_line(parse, "3 4 2 2\n1 1 0 0\n") == 2);
    REQUIRE(error_line(parse, "3 4 5 0\n") == 1);
    REQUIRE(parse_family("4 3 1 0\n").size() == 0);
}

TEST_CASE("JSON counts and rationals stay exact") {
    REQUIRE(json_count(BigInt(702)) == Json(702));
    const BigInt max64(std::numeric_limits<std::uint64_t>::max());
    REQUIRE(json_count(max64) == Json(std::numeric_limits<std::uint64_t>::max()));
    REQUIRE(json_count(max64 + 1) == Json("18446744073709551616"));
    REQUIRE(json_rational(Rational(91, 3)) == Json("91/3"));
    REQUIRE(json_rational(Rational(702)) == Json("702"));
    REQUIRE(json_opt(std::optional<unsigned>{}).is_null());
    REQUIRE(json_vector({0, 2, 1}) == Json::array({0, 2, 1}));
}

TEST_CASE("profile JSON carries the weight distribution") {
    auto p = code_profile(ternary_golay(), true, 1);
    auto j = to_json(p);
    REQUIRE(j.dump() == to_json(code_profile(ternary_golay(), true, 1)).dump());
    REQUIRE(j.dump().find("\"d\":5") != std::string::npos);
}
