#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace qdesign;

TEST_CASE("every zoo entry matches its expected parameters") {
    const std::vector<std::pair<std::string, ZooParams>> cases = {
        {"simplex", {3, 3, 0, 0}},    {"simplex", {4, 2, 0, 0}}, {"hamming", {3, 3, 0, 0}}, {"hamming", {2, 4, 0, 0}},
        {"rs", {16, 0, 4, 0}},        {"rs", {7, 0, 3, 0}},      {"drs", {8, 0, 3, 0}},     {"drs", {9, 0, 4, 0}},
        {"ternary-golay", {}},        {"rt6", {}},               {"pless12", {}},           {"tf1", {4, 0, 0, 0}},
        {"tf1", {8, 0, 0, 0}},        {"tf3", {4, 0, 0, 0}},     {"tf3", {5, 0, 0, 0}},     {"trace123", {0, 5, 0, 0}},
    };
    for (const auto& [id, p] : cases) {
        CAPTURE(id, p.q, p.m, p.k);
        const auto& e = zoo_entry(id);
        auto c = e.build(p);
        auto prof = code_profile(c, false, 1);
        REQUIRE(golden_mismatches(e, p, c, prof).empty());
        REQUIRE(prof.n == e.length(p));
        REQUIRE(prof.k == e.dimension(p));
    }
    REQUIRE_THROWS_AS(zoo_entry("nope"), ParameterError);
}

TEST_CASE("zoo constructors reject out-of-domain parameters") {
    REQUIRE_THROWS_AS(tf1(9), ParameterError);
    REQUIRE_THROWS_AS(reed_solomon(8, 8), ParameterError);
    REQUIRE_THROWS_AS(pless_symmetry(10), ParameterError);
    REQUIRE_THROWS_AS(tf3(3), ParameterError);
    REQUIRE_THROWS_AS(trace_code_123(4), ParameterError);
}

TEST_CASE("simplex codes are one-weight with weight q^(m-1)") {
    for (auto [q, m] : {std::pair{2u, 3u}, {3u, 3u}, {4u, 2u}, {5u, 2u}}) {
        auto c = simplex(q, m);
        auto a = oracle::distribution(c);
        std::uint64_t nonzero = 0;
        for (std::size_t w = 1; w < a.size(); ++w) nonzero += a[w];
        REQUIRE(a[static_cast<std::size_t>(std::pow(q, m - 1))] == nonzero);
    }
}

TEST_CASE("Pless symmetry codes are self-dual with divisor 3") {
    for (unsigned n : {12u, 24u}) {
        auto c = pless_symmetry(n);
        REQUIRE(dual(c) == c);
    }
    auto p = code_profile(pless_symmetry(12), false, 1);
    REQUIRE(p.divisor == 3);
    REQUIRE(p.d == 6);
}

TEST_CASE("parametrized trace codewords are codewords with the right zero sets") {
    QuadraticExtension ext(32);
    auto code = trace_code_123(ext);
    auto b63 = block_sets(ext, 6, 3, BlockSetVariant::plain);
    auto b53 = block_sets(ext, 5, 3, BlockSetVariant::based);
    REQUIRE(b63.size() == 32736);
    b63.resize(40);
    b53.resize(40);
    std::size_t seen = 0;
    auto check = [&](const std::vector<unsigned>& b, const Vector& v) {
        REQUIRE(code.contains(v));
        REQUIRE(hamming_weight(v) == 33 - b.size());
        for (auto i : b) REQUIRE(v[i] == 0);
        ++seen;
    };
    for_each_tr60_codeword(ext, b63, check);
    REQUIRE(seen == 40 * 31);
    seen = 0;
    auto pairs = for_each_tr53_codeword(ext, b53, check);
    REQUIRE(seen == pairs * 31);
    REQUIRE(pairs >= 40);
}

TEST_CASE("fixed-coordinate counts of the parametrization at q = 32") {
    auto r = trace_suite(5, {0, 1}, 3, false, 1);
    REQUIRE(r.d.param_fixed.lambda == std::uint64_t{702});
    REQUIRE(r.d1.param_fixed.lambda == std::uint64_t{945});
    REQUIRE(r.d.param_codewords == 1014816);
    REQUIRE(r.d1.param_codewords == 1268520);
    REQUIRE(r.d.enum_skipped.has_value());
}

TEST_CASE("trace suite rejects a transitivity below t") {
    REQUIRE_THROWS_AS(trace_suite(3, {0, 1, 2}, 2, false, 1), ParameterError);
}

TEST_CASE("trace code closed forms") {
    REQUIRE(trace_lambda_d(32) == Rational(702));
    REQUIRE(trace_lambda_d1(32) == Rational(945));
}
