#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cyv/bott.hpp"

using namespace cyv;
using namespace cyv::bott;

namespace {

BottInput input(int n, int r, std::vector<int> beta, std::vector<int> gamma) { return {n, r, Weight{beta}, Weight{gamma}}; }

BottInput line_bundle(int n, int d) { return input(n + 1, 1, {d}, std::vector<int>(static_cast<std::size_t>(n), 0)); }

// Euler characteristic from the outcome.
Rational euler(const BottOutcome& o) {
    if (o.vanishes) return 0;
    return Rational(o.dimension) * (o.degree % 2 ? -1 : 1);
}

}  // namespace

TEST_CASE("structure sheaf of G(3,5)") {
    auto o = bott_cohomology(input(5, 3, {0, 0, 0}, {0, 0}));
    REQUIRE_FALSE(o.vanishes);
    CHECK(o.degree == 0);
    CHECK(o.dimension == 1);
}

TEST_CASE("line bundles on P^4") {
    for (int d = 0; d <= 6; ++d) {
        auto pos = bott_cohomology(line_bundle(4, d));
        CHECK(pos.degree == 0);
        CHECK(pos.dimension == binomial(d + 4, 4));
        auto neg = bott_cohomology(line_bundle(4, -5 - d));
        CHECK(neg.degree == 4);
        CHECK(neg.dimension == binomial(d + 4, 4));
    }
    CHECK(twist_by_hyperplane(input(5, 1, {0}, {0, 0, 0, 0}), 3).beta.entries == std::vector<int>{3});
    CHECK(bott_cohomology(twist_by_hyperplane(input(5, 1, {0}, {0, 0, 0, 0}), 2)) == bott_cohomology(line_bundle(4, 2)));
}

TEST_CASE("Sym^2 of the twisted tangent bundle of P^2, twisted by -3") {
    // T(-1) = Q on P^2 = G(1,3); Sym^2 Q has gamma = (0,-2).
    auto sym2 = input(3, 1, {0}, {0, -2});
    auto twisted = twist_by_hyperplane(sym2, -3);
    CHECK(twisted.beta.entries == std::vector<int>{-3});
    auto o = bott_cohomology(twisted);
    REQUIRE_FALSE(o.vanishes);
    CHECK(o.degree == 1);
    CHECK(o.dimension == 3);
    CHECK(o.weight == Weight{{-1, -2, -2}});
    // H^0(Sym^2 Q) = Sym^2 of a 3-dimensional space.
    CHECK(bott_cohomology(sym2).dimension == 6);
}

TEST_CASE("non-dominant blocks are rejected") {
    CHECK_THROWS_AS(bott_cohomology(input(3, 1, {0}, {0, 1})), Error);
    try {
        bott_cohomology(input(4, 2, {0, 1}, {0, 0}));
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotDominantInBlock);
    }
    CHECK_THROWS_AS(bott_cohomology(input(3, 1, {0, 0}, {0})), Error);
}

TEST_CASE("complex vanishing verdicts") {
    // Omega(1) = Q^* and Omega(-1) on P^2.
    auto rho = complex_vanishing({input(3, 1, {-2}, {1, 0}), input(3, 1, {0}, {1, 0})});
    CHECK(rho.kind == Verdict::Kind::AllTermsVanish);

    auto locfree = complex_vanishing({input(3, 1, {-3}, {0, -2}), input(3, 1, {-1}, {0, -2})});
    REQUIRE(locfree.kind == Verdict::Kind::SingleSurvivor);
    CHECK(locfree.term == 0);
    CHECK(locfree.outcome.degree == 1);
    CHECK(locfree.outcome.dimension == 3);
    CHECK(locfree.target_degree == 0);

    std::vector<BottInput> koszul;
    for (int j = 0; j <= 3; ++j) koszul.push_back(input(4, 2, {-j, -j}, {1, 0}));
    CHECK(complex_vanishing(koszul).kind == Verdict::Kind::AllTermsVanish);

    // Two survivors: never guess.
    auto two = complex_vanishing({line_bundle(2, 0), line_bundle(2, 1)});
    CHECK(two.kind == Verdict::Kind::Inconclusive);
    CHECK_THROWS_AS(complex_vanishing({}), Error);
}

TEST_CASE("Serre duality over random weights") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> entry(-6, 6);
    int tested = 0;
    while (tested < 200) {
        int n = 2 + static_cast<int>(rng() % 5);
        int r = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
        std::vector<int> b(static_cast<std::size_t>(r)), g(static_cast<std::size_t>(n - r));
        for (int& x : b) x = entry(rng);
        for (int& x : g) x = entry(rng);
        std::sort(b.begin(), b.end(), std::greater<>());
        std::sort(g.begin(), g.end(), std::greater<>());
        auto in = input(n, r, b, g);
        auto o = bott_cohomology(in);
        auto od = bott_cohomology(serre_dual(in));
        CHECK(o.vanishes == od.vanishes);
        if (!o.vanishes && !od.vanishes) {
            CHECK(od.degree == r * (n - r) - o.degree);
            CHECK(od.dimension == o.dimension);
        }
        ++tested;
    }
}

TEST_CASE("line bundles match binom(n+d, n) and the vanishing ranges") {
    for (int n = 1; n <= 5; ++n)
        for (int d = -9; d <= 9; ++d) {
            auto o = bott_cohomology(line_bundle(n, d));
            CHECK(euler(o) == binomial_poly(n + d, n));
            if (d >= 0) CHECK((!o.vanishes && o.degree == 0));
            if (d <= -n - 1) CHECK((!o.vanishes && o.degree == n));
            if (-n <= d && d <= -1) CHECK(o.vanishes);
        }
}
