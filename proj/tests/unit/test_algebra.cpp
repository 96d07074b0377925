#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cyv/factor.hpp"
#include "cyv/linalg.hpp"
#include "cyv/mpoly.hpp"
#include "cyv/number_field.hpp"
#include "cyv/rational.hpp"
#include "cyv/upoly.hpp"

using namespace cyv;

namespace {

QPoly qp(std::vector<long> c) {
    std::vector<Rational> r;
    for (long x : c) r.emplace_back(x);
    return upoly::from_rationals(RationalField{}, r);
}

QPoly product(const QFactorization& fz) {
    RationalField f;
    QPoly out = upoly::constant(f, fz.unit);
    for (const auto& [g, m] : fz.factors) out = upoly::mul(f, out, upoly::pow(f, g, static_cast<unsigned>(m)));
    return out;
}

// Rational-root oracle: candidate roots p/q with p | a0, q | an.
bool has_rational_root(const std::vector<long>& c) {
    auto divisors = [](long n) {
        std::vector<long> d;
        n = std::labs(n);
        for (long i = 1; i <= n; ++i)
            if (n % i == 0) d.push_back(i);
        return d;
    };
    QPoly f = qp(c);
    for (long p : divisors(c.front()))
        for (long q : divisors(c.back()))
            for (int s : {1, -1})
                if (upoly::eval(RationalField{}, f, ratio(s * p, q)) == 0) return true;
    return false;
}

}  // namespace

TEST_CASE("parse_rational accepts p/q and integers") {
    CHECK(parse_rational("3/6") == ratio(1, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(to_string(parse_rational("-4/8")) == "-1/2");
    CHECK_THROWS_AS(parse_rational("4/-8"), Error);
    CHECK_THROWS_AS(parse_rational("1.5"), Error);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("prime field arithmetic") {
    PrimeField f(31);
    for (std::uint64_t a = 1; a < 31; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.from_rational(ratio(1, 2)) == 16);
    CHECK_THROWS_AS(f.from_rational(ratio(1, 31)), Error);
    CHECK_THROWS_AS(PrimeField(33), Error);
}

TEST_CASE("determinant and rank over Q") {
    RationalField f;
    Matrix<RationalField> m{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
    CHECK(determinant(f, m) == 18);
    Matrix<RationalField> s{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    CHECK(rank(f, s) == 2);
    CHECK(determinant(f, s) == 0);
}

TEST_CASE("polynomial gcd and resultant") {
    RationalField f;
    QPoly a = upoly::mul(f, qp({-1, 1}), qp({2, 1}));  // (x-1)(x+2)
    QPoly b = upoly::mul(f, qp({-1, 1}), qp({5, 0, 1}));
    CHECK(upoly::equal(f, upoly::gcd(f, a, b), qp({-1, 1})));
    // res(x-1, x-3) = -2 with these degrees (prod of a(roots of b) up to sign)
    CHECK(upoly::sylvester_resultant(f, qp({-1, 1}), qp({-3, 1}), 1, 1) == -2);
    CHECK(upoly::sylvester_resultant(f, a, b, 2, 3) == 0);
}

TEST_CASE("factorization over Q multiplies back and is irreducible") {
    const std::vector<std::vector<long>> cases = {
        {-26, -13, -1, 4},               // 4x^3 - x^2 - 13x - 26
        {1, 0, 0, 0, 1},                 // x^4 + 1, reducible mod every prime
        {6, 0, -5, 0, 1},                // (x^2-2)(x^2-3)
        {-1, 0, 0, 0, 0, 1},             // x^5 - 1
        {4, 0, -4, 0, 1},                // (x^2-2)^2
        {1, 0, -10, 0, 1},               // minimal polynomial of sqrt2 + sqrt3
        {-2, 0, 0, 1, 0, 0, 0, 0, 1},    // x^8 + x^3 - 2
    };
    for (const auto& c : cases) {
        QPoly f = qp(c);
        auto fz = factor(f);
        CHECK(upoly::equal(RationalField{}, product(fz), f));
        for (const auto& [g, m] : fz.factors) {
            CHECK(g.degree() >= 1);
            if (g.degree() >= 2 && g.degree() <= 3) {
                std::vector<long> gi;
                bool integral = true;
                for (const auto& x : g.coeffs) {
                    integral = integral && x.get_den() == 1;
                    if (integral) gi.push_back(x.get_num().get_si());
                }
                if (integral) CHECK_FALSE(has_rational_root(gi));
            }
        }
    }
    CHECK(is_irreducible(qp({-26, -13, -1, 4})));
    CHECK(is_irreducible(qp({1, 0, 0, 0, 1})));
    CHECK(is_irreducible(qp({1, 0, -10, 0, 1})));
    CHECK(factor(qp({6, 0, -5, 0, 1})).factors.size() == 2);
    CHECK(factor(qp({-1, 0, 0, 0, 0, 1})).factors.size() == 2);
    auto sq = factor(qp({4, 0, -4, 0, 1}));
    REQUIRE(sq.factors.size() == 1);
    CHECK(sq.factors[0].second == 2);
}

TEST_CASE("number field arithmetic is associative with inverses") {
    NumberField k(qp({-26, -13, -1, 4}));
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-9, 9);
    auto random_element = [&] {
        NumberField::Element e;
        for (int i = 0; i < 3; ++i) e.push_back(ratio(d(rng), 1 + std::abs(d(rng))));
        return e;
    };
    int checked = 0;
    while (checked < 100) {
        auto a = random_element(), b = random_element(), c = random_element();
        if (k.is_zero(a)) continue;
        CHECK(k.equal(k.mul(k.mul(a, b), c), k.mul(a, k.mul(b, c))));
        CHECK(k.equal(k.mul(a, k.inv(a)), k.one()));
        ++checked;
    }
    // The generator satisfies its minimal polynomial.
    auto alpha = k.generator();
    CHECK(k.is_zero(k.eval(qp({-26, -13, -1, 4}), alpha)));
    CHECK(upoly::equal(RationalField{}, k.minimal_polynomial_of(alpha), upoly::monic(RationalField{}, qp({-26, -13, -1, 4}))));
}

TEST_CASE("multivariate polynomials") {
    MPoly x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
    MPoly p = (x + y).pow(3);
    CHECK(p.coeff({2, 1}) == 3);
    CHECK(p.is_homogeneous());
    CHECK(p.derivative(0).coeff({1, 1}) == 6);
    CHECK(p.eval({Rational(1), Rational(2)}) == 27);
    CHECK(p.substitute({y, x}) == p);
}
