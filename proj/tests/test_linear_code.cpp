#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace qdesign;

TEST_CASE("MacWilliams transform matches direct enumeration on 50 random ternary codes") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        const std::size_t k = 1 + rng() % 5;
        auto c = oracle::random_code(rng, 3, 10, k);
        auto direct = weight_distribution(c, WeightMethod::direct, 1);
        auto mw = weight_distribution(c, WeightMethod::macwilliams, 1);
        REQUIRE(direct == mw);
        auto brute = oracle::distribution(c);
        for (std::size_t w = 0; w <= 10; ++w) REQUIRE(direct[w] == BigInt(brute[w]));
    }
}

TEST_CASE("dual is the orthogonal complement and an involution") {
    std::mt19937_64 rng(11);
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        for (int i = 0; i < 8; ++i) {
            const std::size_t n = 3 + rng() % 3, k = 1 + rng() % (n - 1);
            auto c = oracle::random_code(rng, q, n, k);
            auto d = dual(c);
            REQUIRE(d.k() == n - k);
            REQUIRE(oracle::all_codewords(d) == oracle::orthogonal_complement(c));
            REQUIRE(dual(d) == c);
        }
    }
}

TEST_CASE("shortening is dual to puncturing") {
    std::mt19937_64 rng(13);
    for (unsigned q : {3u, 4u}) {
        for (int i = 0; i < 10; ++i) {
            const std::size_t n = 4 + rng() % 3, k = 1 + rng() % (n - 2);
            auto c = oracle::random_code(rng, q, n, k);
            for (std::size_t m = 0; m < n; ++m) {
                CAPTURE(q, n, k, m);
                REQUIRE(dual(shorten(c, m)) == puncture(dual(c), m));
                REQUIRE(dual(puncture(c, m)) == shorten(dual(c), m));
                // Shortened codewords are exactly the codewords vanishing at m, with m deleted.
                std::set<Vector> want;
                for (const auto& v : oracle::all_codewords(c))
                    if (v[m] == 0) {
                        Vector u = v;
                        u.erase(u.begin() + static_cast<std::ptrdiff_t>(m));
                        want.insert(u);
                    }
                auto got = oracle::all_codewords(shorten(c, m));
                REQUIRE(std::set<Vector>(got.begin(), got.end()) == want);
            }
        }
    }
}

TEST_CASE("generator construction policies") {
    auto f = make_field(3);
    Matrix dependent = {{1, 2, 0, 1}, {2, 1, 0, 2}};
    REQUIRE_THROWS_AS(code_from_generator(f, dependent, RankPolicy::strict), RankError);
    auto reduced = code_from_generator(f, dependent, RankPolicy::reduce);
    REQUIRE(reduced.k() == 1);
    REQUIRE_FALSE(reduced.warnings().empty());
    REQUIRE_THROWS_AS(code_from_generator(f, {{1, 3, 0}}, RankPolicy::strict), ParameterError);
    REQUIRE_THROWS_AS(puncture(reduced, 4), ParameterError);
}

TEST_CASE("zero code and full space") {
    auto f = make_field(4);
    auto z = zero_code(f, 5);
    REQUIRE(z.k() == 0);
    auto full = dual(z);
    REQUIRE(full.k() == 5);
    REQUIRE(dual(full).k() == 0);
    auto p = code_profile(z, true, 1);
    REQUIRE(p.d == 6);
    REQUIRE(p.rho == 5u);
}

TEST_CASE("profile parameters agree with brute force") {
    std::mt19937_64 rng(17);
    for (unsigned q : {2u, 3u, 4u}) {
        for (int i = 0; i < 12; ++i) {
            const std::size_t n = 4 + rng() % 3, k = 1 + rng() % (n - 1);
            auto c = oracle::random_code(rng, q, n, k);
            auto p = code_profile(c, true, 1);
            CAPTURE(q, n, k);
            REQUIRE(p.d == oracle::min_distance(c));
            REQUIRE(p.d_dual == oracle::min_distance(dual(c)));
            REQUIRE(p.rho == oracle::covering_radius(c));
            REQUIRE(p.rho_volume <= *p.rho);
            REQUIRE(p.e == (p.d - 1) / 2);
            // s and s_dual count the nonzero weights of C and of its dual.
            auto a = oracle::distribution(c), b = oracle::distribution(dual(c));
            unsigned s = 0, s_dual = 0;
            for (std::size_t w = 1; w <= n; ++w) s += a[w] != 0, s_dual += b[w] != 0;
            REQUIRE(p.s == s);
            REQUIRE(p.s_dual == s_dual);
        }
    }
}

TEST_CASE("repeat bound: every support at weight <= h carries exactly q-1 codewords") {
    for (const auto& c : {hamming(3, 2), simplex(4, 2), tf1(4), drs(5, 3), rt6()}) {
        auto p = code_profile(c, false, 1);
        CAPTURE(c.label(), p.h);
        for (auto w : p.weights) {
            if (w > p.h) continue;
            auto m = support_multiplicity(oracle::family(c, w));
            REQUIRE(m.uniform);
        }
    }
}

TEST_CASE("covering radius of perfect codes equals the packing radius") {
    for (const auto& c : {hamming(2, 3), hamming(3, 2), hamming(4, 2), ternary_golay()}) {
        auto p = code_profile(c, true, 1);
        REQUIRE(p.rho == p.e);
        REQUIRE(p.perfect() == true);
    }
}
