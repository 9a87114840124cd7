#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "oracles.hpp"

using namespace qdesign;

namespace {

// sigma_l by summing products over all l-subsets.
Symbol esp_brute(const FieldSpec& f, const std::vector<Symbol>& b, unsigned l) {
    Symbol acc = 0;
    detail::for_each_subset(static_cast<unsigned>(b.size()), l, [&](const std::vector<unsigned>& c) {
        Symbol p = 1;
        for (auto i : c) p = f.mul(p, b[i]);
        acc = f.add(acc, p);
    });
    return acc;
}

std::vector<Symbol> random_multiset(std::mt19937_64& rng, const FieldSpec& f, std::size_t k) {
    std::vector<Symbol> b(k);
    for (auto& x : b) x = static_cast<Symbol>(rng() % f.q());
    return b;
}

}  // namespace

TEST_CASE("revolving door visits every k-subset once, one swap per step") {
    for (unsigned n = 0; n <= 9; ++n) {
        for (unsigned k = 0; k <= n; ++k) {
            CAPTURE(n, k);
            RevolvingDoor door(n, k);
            std::set<std::vector<unsigned>> seen;
            auto cur = door.current();
            seen.insert(cur);
            unsigned out = 0, in = 0;
            while (door.next(out, in)) {
                auto next = door.current();
                REQUIRE(std::is_sorted(next.begin(), next.end()));
                REQUIRE(std::binary_search(cur.begin(), cur.end(), out));
                REQUIRE_FALSE(std::binary_search(cur.begin(), cur.end(), in));
                std::vector<unsigned> expect = cur;
                expect.erase(std::find(expect.begin(), expect.end(), out));
                expect.insert(std::upper_bound(expect.begin(), expect.end(), in), in);
                REQUIRE(next == expect);
                REQUIRE(seen.insert(next).second);
                cur = std::move(next);
            }
            REQUIRE(seen.size() == binomial(n, k));
        }
    }
    REQUIRE_THROWS_AS(RevolvingDoor(3, 4), ParameterError);
}

TEST_CASE("elementary symmetric polynomials match subset products") {
    std::mt19937_64 rng(31);
    for (unsigned q : {2u, 3u, 4u, 8u, 9u, 25u}) {
        auto f = make_field(q);
        for (int rep = 0; rep < 10; ++rep) {
            auto b = random_multiset(rng, f, rng() % 7);
            auto e = esp_all(f, b);
            REQUIRE(e.size() == b.size() + 1);
            for (unsigned l = 0; l <= b.size(); ++l) REQUIRE(e[l] == esp_brute(f, b, l));
        }
        REQUIRE_THROWS_AS(esp(f, {1, 1}, 3), ParameterError);
    }
}

TEST_CASE("shifted esp matches sigma_l of the translated multiset") {
    std::mt19937_64 rng(37);
    for (unsigned q : {2u, 3u, 4u, 5u, 8u, 9u, 16u}) {
        auto f = make_field(q);
        for (int rep = 0; rep < 10; ++rep) {
            auto b = random_multiset(rng, f, 1 + rng() % 7);
            const auto sigma = esp_all(f, b);
            for (Symbol s = 0; s < q; ++s) {
                std::vector<Symbol> shifted;
                for (auto u : b) shifted.push_back(f.add(u, s));
                const auto want = esp_all(f, shifted);
                for (std::size_t l = 0; l <= b.size(); ++l) REQUIRE(shifted_esp(f, sigma, l, s) == want[l]);
            }
        }
    }
}

TEST_CASE("esp tracker swaps agree with a fresh expansion") {
    std::mt19937_64 rng(41);
    for (unsigned q : {4u, 7u, 16u}) {
        auto f = make_field(q);
        for (std::size_t k : {1u, 3u, 6u}) {
            auto b = random_multiset(rng, f, k);
            EspTracker t(f, k);
            t.reset(b);
            for (int step = 0; step < 50; ++step) {
                const std::size_t i = rng() % k;
                const auto in = static_cast<Symbol>(rng() % q);
                t.swap(b[i], in);
                b[i] = in;
                REQUIRE(t.sigma() == esp_all(f, b));
            }
        }
    }
}

TEST_CASE("Mobius function and Ramanujan sums agree with their definitions") {
    for (std::uint64_t n = 1; n <= 200; ++n) {
        // mu from trial factorization.
        int mu = 1;
        std::uint64_t m = n;
        for (std::uint64_t p = 2; p * p <= m; ++p) {
            if (m % p) continue;
            m /= p;
            if (m % p == 0) {
                mu = 0;
                break;
            }
            mu = -mu;
        }
        if (mu != 0 && m > 1) mu = -mu;
        REQUIRE(mobius(n) == mu);
    }
    // C_r(b) = sum over j in [1, r] coprime to r of cos(2 pi j b / r).
    for (std::uint64_t r = 1; r <= 30; ++r) {
        for (std::uint64_t b = 0; b <= 2 * r; ++b) {
            double s = 0;
            for (std::uint64_t j = 1; j <= r; ++j)
                if (std::gcd(j, r) == 1) s += std::cos(2 * std::numbers::pi * double(j * b) / double(r));
            CAPTURE(r, b);
            REQUIRE(ramanujan_sum(r, b) == std::llround(s));
        }
    }
}

TEST_CASE("subset-sum counts agree with enumeration") {
    for (unsigned n = 1; n <= 14; ++n)
        for (unsigned k = 0; k <= n; ++k)
            for (unsigned b = 0; b < n; ++b) {
                CAPTURE(n, k, b);
                REQUIRE(subset_sum_count(n, k, b) == BigInt(subset_sum_count_brute(n, k, b)));
            }
    REQUIRE_THROWS_AS(subset_sum_count(4, 5, 0), ParameterError);
}

TEST_CASE("subset-product counts agree with enumeration") {
    for (unsigned q : {3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
        auto f = make_field(q);
        for (unsigned k = 0; k < q; ++k)
            for (Symbol c = 1; c < q; ++c) {
                CAPTURE(q, k, c);
                REQUIRE(subset_prod_count(f, k, c) == BigInt(subset_prod_count_brute(f, k, c)));
            }
        REQUIRE_THROWS_AS(subset_prod_count(f, 1, 0), DomainError);
    }
}

TEST_CASE("block sets match a direct filter over all k-subsets of U") {
    for (unsigned q : {4u, 8u, 16u}) {
        QuadraticExtension ext(q);
        const auto& f = ext.ext();
        const auto& u = ext.unity_subgroup();
        REQUIRE(u.size() == q + 1);
        for (unsigned k : {3u, 4u, 5u, 6u}) {
            if (k > u.size()) continue;
            for (unsigned l = 1; l <= k && l <= 3; ++l) {
                std::vector<std::vector<unsigned>> plain, based;
                detail::for_each_subset(static_cast<unsigned>(u.size()), k, [&](const std::vector<unsigned>& s) {
                    std::vector<Symbol> b;
                    for (auto i : s) b.push_back(u[i]);
                    if (esp_brute(f, b, l) == 0) plain.push_back(s);
                    for (auto a : b) {
                        std::vector<Symbol> t;
                        for (auto x : b) t.push_back(f.sub(x, a));
                        if (esp_brute(f, t, l) == 0) {
                            based.push_back(s);
                            break;
                        }
                    }
                });
                std::sort(plain.begin(), plain.end());
                std::sort(based.begin(), based.end());
                CAPTURE(q, k, l);
                REQUIRE(block_sets(ext, k, l, BlockSetVariant::plain) == plain);
                REQUIRE(block_sets(ext, k, l, BlockSetVariant::based) == based);
            }
        }
    }
    QuadraticExtension ext(4);
    REQUIRE_THROWS_AS(block_sets(ext, 2, 3, BlockSetVariant::plain), ParameterError);
    REQUIRE_THROWS_AS(block_sets(ext, 6, 3, BlockSetVariant::plain), ParameterError);
}

TEST_CASE("block families carry the indicator vectors of their sets") {
    auto fam = block_family_from_sets({{0, 2, 3}, {1, 3, 4}}, 5, 3, "sets");
    REQUIRE(fam.q() == 2);
    REQUIRE(fam.blocks == Matrix{{1, 0, 1, 1, 0}, {0, 1, 0, 1, 1}});
    validate_family(fam);
}
