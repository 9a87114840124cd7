#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace qdesign;

TEST_CASE("field axioms hold exhaustively for small orders") {
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        CAPTURE(q);
        auto f = make_field(q);
        REQUIRE(f.q() == q);
        for (unsigned a = 0; a < q; ++a) {
            const Symbol A = static_cast<Symbol>(a);
            REQUIRE(f.add(A, 0) == A);
            REQUIRE(f.mul(A, 1) == A);
            REQUIRE(f.add(A, f.neg(A)) == 0);
            if (a) REQUIRE(f.mul(A, f.inv(A)) == 1);
            for (unsigned b = 0; b < q; ++b) {
                const Symbol B = static_cast<Symbol>(b);
                REQUIRE(f.add(A, B) == f.add(B, A));
                REQUIRE(f.mul(A, B) == f.mul(B, A));
                REQUIRE(f.sub(f.add(A, B), B) == A);
                for (unsigned c = 0; c < q; ++c) {
                    const Symbol C = static_cast<Symbol>(c);
                    REQUIRE(f.add(f.add(A, B), C) == f.add(A, f.add(B, C)));
                    REQUIRE(f.mul(f.mul(A, B), C) == f.mul(A, f.mul(B, C)));
                    REQUIRE(f.mul(A, f.add(B, C)) == f.add(f.mul(A, B), f.mul(A, C)));
                }
            }
        }
    }
}

TEST_CASE("generator is primitive and log inverts exp") {
    for (unsigned q : {2u, 3u, 4u, 8u, 16u, 25u, 27u, 32u, 49u, 64u, 81u, 121u, 256u, 1024u}) {
        CAPTURE(q);
        auto f = make_field(q);
        std::set<Symbol> seen;
        Symbol x = 1;
        for (unsigned e = 0; e < q - 1; ++e, x = f.mul(x, f.generator())) {
            REQUIRE(f.exp(e) == x);
            REQUIRE(f.log(x) == e);
            seen.insert(x);
        }
        REQUIRE(x == 1);
        REQUIRE(seen.size() == q - 1);
        REQUIRE(f.pow(f.generator(), -1) == f.inv(f.generator()));
    }
}

TEST_CASE("pow agrees with repeated multiplication") {
    auto f = make_field(27);
    for (unsigned a = 0; a < 27; ++a) {
        Symbol acc = 1;
        for (int e = 0; e < 60; ++e) {
            REQUIRE(f.pow(static_cast<Symbol>(a), e) == acc);
            acc = f.mul(acc, static_cast<Symbol>(a));
        }
    }
}

TEST_CASE("Frobenius is additive in characteristic p") {
    for (unsigned q : {9u, 16u, 125u}) {
        auto f = make_field(q);
        for (unsigned a = 0; a < q; ++a)
            for (unsigned b = 0; b < q; b += 3)
                REQUIRE(f.pow(f.add(static_cast<Symbol>(a), static_cast<Symbol>(b)), f.p()) ==
                        f.add(f.pow(static_cast<Symbol>(a), f.p()), f.pow(static_cast<Symbol>(b), f.p())));
    }
}

TEST_CASE("invalid orders and moduli are rejected") {
    REQUIRE_THROWS_AS(make_field(6), ParameterError);
    REQUIRE_THROWS_AS(make_field(1), ParameterError);
    REQUIRE_THROWS_AS(make_field(100), ParameterError);
    // x^2 + 1 = (x + 1)^2 over F_2.
    REQUIRE_THROWS_AS(FieldSpec::from_modulus(2, {1, 0, 1}), ParameterError);
    auto f = make_field(5);
    REQUIRE_THROWS_AS(f.inv(0), DomainError);
    REQUIRE_THROWS_AS(f.log(0), DomainError);
}

TEST_CASE("quadratic extension: trace, embedding and unity subgroup") {
    for (unsigned q : {2u, 3u, 4u, 5u, 8u, 9u, 32u}) {
        CAPTURE(q);
        QuadraticExtension ext(q);
        const auto& F = ext.ext();
        const auto& K = ext.base();
        // Embedding is a field homomorphism onto the fixed field of Frobenius.
        for (unsigned a = 0; a < q; ++a)
            for (unsigned b = 0; b < q; ++b) {
                const Symbol A = static_cast<Symbol>(a), B = static_cast<Symbol>(b);
                REQUIRE(ext.embed(K.add(A, B)) == F.add(ext.embed(A), ext.embed(B)));
                REQUIRE(ext.embed(K.mul(A, B)) == F.mul(ext.embed(A), ext.embed(B)));
            }
        // Tr is K-linear and lands in K.
        std::mt19937 rng(q);
        for (int i = 0; i < 200; ++i) {
            const Symbol x = static_cast<Symbol>(rng() % F.q()), y = static_cast<Symbol>(rng() % F.q());
            const Symbol a = static_cast<Symbol>(rng() % q);
            const Symbol tx = ext.trace(x);
            REQUIRE(tx < q);
            REQUIRE(ext.restrict_to_base(F.add(x, ext.frobenius(x))) == tx);
            REQUIRE(ext.trace(F.add(x, y)) == K.add(tx, ext.trace(y)));
            REQUIRE(ext.trace(F.mul(ext.embed(a), x)) == K.mul(a, tx));
        }
        // U = {x : x^(q+1) = 1} has q+1 distinct elements.
        const auto& U = ext.unity_subgroup();
        REQUIRE(U.size() == q + 1);
        REQUIRE(std::set<Symbol>(U.begin(), U.end()).size() == q + 1);
        for (auto u : U) REQUIRE(F.pow(u, q + 1) == 1);
    }
}

TEST_CASE("square roots in characteristic 2") {
    auto f = make_field(64);
    for (unsigned a = 0; a < 64; ++a) REQUIRE(f.mul(sqrt_char2(f, static_cast<Symbol>(a)), sqrt_char2(f, static_cast<Symbol>(a))) == a);
    REQUIRE_THROWS_AS(sqrt_char2(make_field(9), 1), ParameterError);
}
