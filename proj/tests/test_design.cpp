#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace qdesign;

namespace {

// Every nonempty weight class of a few small codes.
std::vector<BlockFamily> sample_families() {
    std::vector<BlockFamily> out;
    std::mt19937_64 rng(23);
    std::vector<LinearCode> codes = {hamming(3, 2), simplex(3, 2), drs(4, 2), drs(5, 3), tf1(4), rt6()};
    for (int i = 0; i < 6; ++i) codes.push_back(oracle::random_code(rng, i % 2 ? 4 : 3, 6, 2 + i % 3));
    for (const auto& c : codes) {
        auto a = oracle::distribution(c);
        for (unsigned w = 1; w <= c.n(); ++w)
            if (a[w]) out.push_back(oracle::family(c, w));
    }
    return out;
}

}  // namespace

TEST_CASE("q-ary and classical checks agree with brute-force counting") {
    for (const auto& f : sample_families()) {
        for (unsigned t = 1; t <= f.w; ++t) {
            CAPTURE(f.n, f.w, f.q(), t);
            auto want = oracle::qary_lambda(f, t);
            auto got = qary_design_lambda(f, t, 1);
            REQUIRE(got.holds() == want.has_value());
            if (want) REQUIRE(got.lambda == want);
            else REQUIRE(oracle::covering_count(f, *got.witness) == *got.witness_count);

            auto cwant = oracle::classical_lambda(f, t);
            auto cgot = classical_design_lambda(f, t, SupportMode::distinct);
            REQUIRE(cgot.holds() == cwant.has_value());
            if (cwant) REQUIRE(cgot.lambda == cwant);
        }
    }
}

TEST_CASE("a q-ary t-design is an i-design with lambda_i from lambda_scale") {
    for (const auto& f : sample_families()) {
        for (unsigned t = 2; t <= f.w; ++t) {
            auto c = qary_design_lambda(f, t, 1);
            if (!c.holds()) continue;
            for (unsigned i = 1; i < t; ++i) {
                auto ci = qary_design_lambda(f, i, 1);
                REQUIRE(ci.holds());
                REQUIRE(Rational(*ci.lambda) == lambda_scale(Rational(*c.lambda), t, i, f.n, f.w, f.q()));
            }
        }
    }
}

TEST_CASE("a q-ary t-design yields a classical t-design on its supports") {
    for (const auto& f : sample_families()) {
        for (unsigned t = 1; t <= f.w; ++t) {
            auto c = qary_design_lambda(f, t, 1);
            if (!c.holds()) continue;
            auto cl = classical_design_lambda(f, t, SupportMode::multiset);
            REQUIRE(cl.holds());
            REQUIRE(Rational(*cl.lambda) == Rational(*c.lambda) * pow_big(f.q() - 1, t));
        }
    }
}

TEST_CASE("q-ary t-designs are GDDs of type (q-1)^n and round-trip") {
    for (const auto& f : sample_families()) {
        for (unsigned t = 1; t <= std::min(f.w, 3u); ++t) {
            auto c = qary_design_lambda(f, t, 1);
            if (!c.holds()) continue;
            auto g = to_gdd(f, t, *c.lambda);
            REQUIRE(verify_gdd(g));
            auto back = from_gdd(g, f.field);
            REQUIRE(back.blocks == f.blocks);
            // A wrong index does not verify.
            g.lambda += 1;
            REQUIRE_FALSE(verify_gdd(g));
        }
    }
}

TEST_CASE("strengths of the ternary Golay code at weight 5") {
    auto f = codewords_of_weight(ternary_golay(), 5, 1);
    REQUIRE(f.size() == 132);
    auto r = strengths(f, SupportMode::distinct, 1);
    REQUIRE(r.T_qary == 3);
    REQUIRE(r.T_classical == 4);
}

TEST_CASE("codewords_of_weight: enumeration and parity-check scan agree") {
    for (const auto& c : {rt6(), drs(8, 3), simplex(3, 3)}) {
        auto p = code_profile(c, false, 1);
        for (auto w : p.weights) {
            auto a = codewords_of_weight(c, w, 1), b = codewords_of_weight_scan(c, w);
            std::sort(a.blocks.begin(), a.blocks.end());
            std::sort(b.blocks.begin(), b.blocks.end());
            REQUIRE(a.blocks == b.blocks);
            REQUIRE(BigInt(a.size()) == p.distribution[w]);
        }
    }
}

TEST_CASE("fixed-coordinate counts agree with the full check under transitivity") {
    auto c = drs(8, 3);
    auto f = codewords_of_weight(c, 7, 1);
    auto full = qary_design_lambda(f, 2, 1);
    REQUIRE(full.holds());
    for (std::vector<unsigned> coords : {std::vector<unsigned>{0, 1}, {3, 8}, {2, 5}}) {
        auto fc = fixed_coordinate_lambda(f, coords, 3);
        REQUIRE(fc.verdict == Verdict::holds);
        REQUIRE(fc.lambda == full.lambda);
        REQUIRE(fc.patterns == 49);
    }
    REQUIRE_THROWS_AS(fixed_coordinate_lambda(f, {0, 1}, 1), ParameterError);
    REQUIRE_THROWS_AS(fixed_coordinate_lambda(f, {0, 0}, 3), ParameterError);
    REQUIRE_THROWS_AS(fixed_coordinate_lambda(f, {0, 9}, 3), ParameterError);
}

TEST_CASE("fixed-coordinate counting reports a witness on non-designs") {
    auto f = codewords_of_weight(drs(16, 4), 14, 1);
    auto fc = fixed_coordinate_lambda(f, {0, 1}, 3);
    REQUIRE(fc.verdict == Verdict::fails);
    REQUIRE(fc.witness);
    REQUIRE(oracle::covering_count(f, *fc.witness) == *fc.witness_count);
}

TEST_CASE("empty families are vacuous, not designs") {
    auto c = drs(8, 3);
    BlockFamily f{c.field(), c.n(), 3, {}, "empty"};
    REQUIRE(qary_design_lambda(f, 2, 1).verdict == Verdict::vacuous);
    REQUIRE(classical_design_lambda(f, 2).verdict == Verdict::vacuous);
}

TEST_CASE("index formulas") {
    // A_3 of the ternary Hamming [13,10,3] code: 2-(13,3,1)_3, 104 blocks.
    REQUIRE(implied_qary_index(104, 2, 13, 3, 3) == Rational(1));
    REQUIRE(lambda_scale(Rational(1), 2, 0, 13, 3, 3) == Rational(104));
    REQUIRE(lambda_xyz(Rational(5), 2, 10, 4, 3, 2, 0, 0) == Rational(5));
    REQUIRE_THROWS_AS(lambda_scale(Rational(1), 3, 4, 10, 5, 3), ParameterError);
    REQUIRE_THROWS_AS(lambda_xyz(Rational(1), 2, 10, 4, 3, 2, 1, 0), ParameterError);
}

TEST_CASE("block families validate their weights") {
    auto f = make_field(3);
    BlockFamily bad{f, 4, 2, {{1, 1, 0, 0}, {1, 0, 0, 0}}, "bad"};
    REQUIRE_THROWS_AS(validate_family(bad), ParameterError);
}
