#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cyv/chow.hpp"
#include "cyv/symfunc.hpp"

using namespace cyv;
using namespace cyv::chow;

namespace {

// Hook-length count of standard tableaux of the k x m rectangle.
Integer rectangle_syt(int k, int m) {
    Integer num = 1, den = 1;
    for (int i = 1; i <= k * m; ++i) num *= i;
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < m; ++c) den *= (m - c - 1) + (k - r - 1) + 1;
    return num / den;
}

// Pieri-chain oracle: number of ways to reach the full k x m box by adding
// horizontal strips of the given sizes, one after another.
long pieri_chain_count(int k, int m, const std::vector<int>& strips) {
    std::map<std::vector<int>, long> states{{std::vector<int>(static_cast<std::size_t>(k), 0), 1}};
    for (int a : strips) {
        std::map<std::vector<int>, long> next;
        for (const auto& [shape, count] : states) {
            auto rec = [&](auto&& self, std::size_t row, int left, std::vector<int>& cur) -> void {
                if (row == cur.size()) {
                    if (left == 0) next[cur] += count;
                    return;
                }
                int cap = row == 0 ? m : shape[row - 1];  // horizontal strip: new row <= old previous row
                for (int add = 0; add <= left && cur[row] + add <= cap; ++add) {
                    cur[row] += add;
                    self(self, row + 1, left - add, cur);
                    cur[row] -= add;
                }
            };
            std::vector<int> cur = shape;
            rec(rec, 0, a, cur);
        }
        states = std::move(next);
    }
    auto it = states.find(std::vector<int>(static_cast<std::size_t>(k), m));
    return it == states.end() ? 0 : it->second;
}

RingClass random_class(const RingPtr& ring, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(-3, 3);
    RingClass out(ring);
    for (const auto& key : ring->basis())
        if (rng() % 3 == 0) out.add_term(key, c(rng));
    return out;
}

RingClass random_homogeneous(const RingPtr& ring, int degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(-3, 3);
    RingClass out(ring);
    for (const auto& key : ring->basis())
        if (key.degree() == degree) out.add_term(key, c(rng));
    return out;
}

RingClass sigma(const RingPtr& g, std::initializer_list<int> parts) { return schubert(g, Partition(parts)); }

}  // namespace

TEST_CASE("Grassmannian rings have the right bases") {
    CHECK(grassmann_ring(3, 5)->basis().size() == 10);
    CHECK(grassmann_ring(2, 5)->basis().size() == 10);
    auto p1 = grassmann_ring(1, 2);
    REQUIRE(p1->basis().size() == 2);
    CHECK(p1->basis()[0].partition == Partition{});
    CHECK(p1->basis()[1].partition == Partition{1});
    CHECK_THROWS_AS(grassmann_ring(0, 3), Error);
    CHECK_THROWS_AS(grassmann_ring(3, 3), Error);
    CHECK_THROWS_AS(grassmann_ring(2, 13), Error);
}

TEST_CASE("Schubert products on G(3,5)") {
    auto g = grassmann_ring(3, 5);
    CHECK(sigma(g, {1}) * sigma(g, {1}) == sigma(g, {2}) + sigma(g, {1, 1}));
    CHECK(sigma(g, {2}) * sigma(g, {2, 2}) == sigma(g, {2, 2, 2}));
    CHECK((sigma(g, {2}) * sigma(g, {2, 1, 1})).is_zero());
    CHECK(sigma(g, {3}).is_zero());
}

TEST_CASE("integration against oracles") {
    auto g25 = grassmann_ring(2, 5), g35 = grassmann_ring(3, 5);
    CHECK(integrate(sigma(g25, {1}).pow(6)) == 5);
    CHECK(rectangle_syt(2, 3) == 5);
    CHECK(integrate(sigma(g35, {2}) * sigma(g35, {1}).pow(4)) == pieri_chain_count(3, 2, {2, 1, 1, 1, 1}));
    CHECK(integrate(sigma(g35, {2}) * sigma(g35, {1}).pow(4)) == 2);
    CHECK(integrate(sigma(g25, {2}) * sigma(g25, {1}).pow(4)) == 3);
    CHECK(integrate(sigma(g35, {1}).pow(2) * sigma(g35, {2, 2})) == 1);
    for (int n = 2; n <= 7; ++n)
        for (int k = 1; k < n; ++k) {
            auto g = grassmann_ring(k, n);
            CHECK(integrate(sigma(g, {1}).pow(static_cast<unsigned>(k * (n - k)))) == rectangle_syt(k, n - k));
        }
    CHECK_THROWS_AS(integrate(sigma(g35, {1})), Error);
    try {
        integrate(sigma(g35, {1}));
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotTopDegree);
    }
    CHECK_THROWS_AS(sigma(g35, {1}) * sigma(g25, {1}), Error);
}

TEST_CASE("Poincare duality on G(k,n), n <= 6") {
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k < n; ++k) {
            auto g = grassmann_ring(k, n);
            const int m = n - k;
            auto basis = partitions_in_box(k, m);
            for (const auto& l : basis)
                for (const auto& mu : basis) {
                    if (l.size() + mu.size() != k * m) continue;
                    Rational v = integrate(schubert(g, l) * schubert(g, mu));
                    CHECK(v == (mu == l.complement(k, m) ? 1 : 0));
                }
        }
}

TEST_CASE("ring products are commutative, associative and graded") {
    std::mt19937_64 rng(17);
    auto g = grassmann_ring(2, 5);
    auto bundle_c = std::vector<RingClass>{one(g), sigma(g, {1}) * Rational(-2), sigma(g, {1, 1})};
    std::vector<RingPtr> rings{grassmann_ring(2, 4), grassmann_ring(3, 6), proj_bundle_ring(g, bundle_c, 2)};
    for (const auto& ring : rings)
        for (int trial = 0; trial < 20; ++trial) {
            auto a = random_class(ring, rng), b = random_class(ring, rng), c = random_class(ring, rng);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            const int top = ring->dimension();
            int da = static_cast<int>(rng() % static_cast<unsigned>(top + 1));
            int db = static_cast<int>(rng() % static_cast<unsigned>(top + 1 - da));
            auto ha = random_homogeneous(ring, da, rng), hb = random_homogeneous(ring, db, rng);
            auto p = ha * hb;
            if (!p.is_zero()) {
                CHECK(p.is_homogeneous());
                CHECK(p.degree() == da + db);
            }
        }
}

TEST_CASE("tautological Chern classes") {
    auto g35 = grassmann_ring(3, 5), g25 = grassmann_ring(2, 5);
    CHECK(taut_chern(g35, Taut::Quot, 2) == sigma(g35, {2}));
    CHECK(taut_chern(g25, Taut::SubDual, 1) == sigma(g25, {1}));
    CHECK(taut_chern(g25, Taut::SubDual, 2) == sigma(g25, {1, 1}));
    CHECK_THROWS_AS(taut_chern(g35, Taut::Quot, 3), Error);
    // Whitney: c(S^*) c(Q^*) = 1 since V is trivial; c(Q^*) has signs (-1)^i.
    for (auto g : {g35, g25}) {
        auto cs = sum_classes(g, taut_chern_all(g, Taut::SubDual));
        auto cq = taut_chern_all(g, Taut::Quot);
        RingClass cqd = zero(g);
        for (std::size_t i = 0; i < cq.size(); ++i) cqd += cq[i] * Rational(i % 2 ? -1 : 1);
        CHECK(cs * cqd == one(g));
    }
}

TEST_CASE("projective bundle over a point is projective space") {
    auto pt = Ring::point();
    std::vector<RingClass> c{one(pt)};
    auto p4 = proj_bundle_ring(pt, c, 5);
    auto h = hyperplane(p4);
    CHECK(integrate(h.pow(4)) == 1);
    CHECK(h.pow(5).is_zero());
    auto t = tangent_chern(p4);
    for (int i = 0; i <= 4; ++i) CHECK(t[static_cast<std::size_t>(i)] == h.pow(static_cast<unsigned>(i)) * Rational(binomial(5, i)));
}

TEST_CASE("the bundle relation vanishes and pushforward gives Segre classes") {
    std::mt19937_64 rng(23);
    for (auto base : {grassmann_ring(2, 5), grassmann_ring(3, 6), grassmann_ring(2, 4)}) {
        for (int r : {2, 3}) {
            std::vector<RingClass> c{one(base)};
            for (int i = 1; i <= r; ++i) c.push_back(random_homogeneous(base, i, rng));
            auto ring = proj_bundle_ring(base, c, r);
            auto h = hyperplane(ring);
            RingClass rel = zero(ring);
            for (int i = 0; i <= r; ++i) rel += pullback(ring, c[static_cast<std::size_t>(i)]) * h.pow(static_cast<unsigned>(r - i));
            CHECK(rel.is_zero());

            // Oracle: formal inverse of the total class, computed in the base.
            RingClass total = sum_classes(base, c);
            RingClass inv = inverse_total(total);
            CHECK(total * inv == one(base));
            for (int j = 0; j <= 4; ++j)
                CHECK(pushforward_to_base(ring, h.pow(static_cast<unsigned>(r - 1 + j))) == inv.part(j));
            if (r >= 2) CHECK(pushforward_to_base(ring, h.pow(static_cast<unsigned>(r - 2))).is_zero());
        }
    }
}

TEST_CASE("pushforward of H^r for the rank-9 bundle on G(3,5)") {
    auto g = grassmann_ring(3, 5);
    std::vector<RingClass> sdual;
    for (int i = 1; i <= 3; ++i) sdual.push_back(taut_chern(g, Taut::SubDual, i));
    // c(E^*) = 1 / c(Sym^2 of the dual subbundle), so c(E) is its dual.
    auto ce_dual = evaluate(segre_from_chern(chern_sym2(3), 6), g, {sdual});
    RingClass ce = zero(g);
    for (int i = 0; i <= 6; ++i) ce += ce_dual.part(i) * Rational(i % 2 ? -1 : 1);
    auto ring = proj_bundle_ring(g, graded_parts(ce), 9);
    CHECK(pushforward_to_base(ring, hyperplane(ring).pow(9)) == sigma(g, {1}) * Rational(-4));
}

TEST_CASE("the P(O(-1)^2 + O(-2)) ring over P^1") {
    auto p1 = grassmann_ring(1, 2);
    auto f = sigma(p1, {1});
    auto gy = proj_bundle_ring(p1, {one(p1), f * Rational(-4)}, 3);
    auto h = hyperplane(gy);
    auto fu = pullback(gy, f);
    CHECK(integrate(h.pow(3)) == 4);
    CHECK(integrate(h.pow(2) * fu) == 1);
    auto t = tangent_chern(gy);
    CHECK(-t[1] == h * Rational(-3) + fu * Rational(2));
}

TEST_CASE("tangent classes of G(2,5) and the Hilbert-scheme bundle") {
    auto g = grassmann_ring(2, 5);
    auto tg = grassmann_tangent_chern(g);
    CHECK(integrate(tg[6]) == 10);
    CHECK(tg[1] == sigma(g, {1}) * Rational(5));

    std::vector<RingClass> f{taut_chern(g, Taut::SubDual, 1), taut_chern(g, Taut::SubDual, 2)};
    auto ce = evaluate(dual(chern_sym2(2)), g, {f});
    auto hilb = proj_bundle_ring(g, graded_parts(ce), 3);
    auto h = hyperplane(hilb);
    CHECK(integrate(h.pow(8)) == 35);
}

TEST_CASE("class expressions") {
    auto g = grassmann_ring(3, 5);
    CHECK(parse_class_expr("s1^6", g) == sigma(g, {1}).pow(6));
    CHECK(parse_class_expr(" ( s2 + s1_1 ) * s2_2 ", g) == (sigma(g, {2}) + sigma(g, {1, 1})) * sigma(g, {2, 2}));
    CHECK(integrate(parse_class_expr("s2*s1^4", g)) == 2);
    CHECK(parse_class_expr("2*s1 - s1", g) == sigma(g, {1}));
    CHECK(parse_class_expr("3/2*s1^2", g) == sigma(g, {1}).pow(2) * ratio(3, 2));
    CHECK(parse_class_expr("s1/4*2", g) == sigma(g, {1}) * ratio(1, 2));
    CHECK_THROWS_AS(parse_class_expr("s1/0", g), SyntaxError);
    try {
        parse_class_expr("s1^^2", g);
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.offset() == 3);
    }
    CHECK_THROWS_AS(parse_class_expr("s1_2", g), SyntaxError);
    CHECK_THROWS_AS(parse_class_expr("(s1", g), SyntaxError);
    CHECK_THROWS_AS(parse_class_expr("", g), SyntaxError);
    CHECK(parse_ring_spec("g(3,5)")->describe() == "G(3,5)");
    CHECK_THROWS_AS(parse_ring_spec("g(3,5"), SyntaxError);
}

TEST_CASE("JSON round trip of classes") {
    auto g = grassmann_ring(2, 5);
    auto c = sigma(g, {2, 1}) * ratio(3, 2) - sigma(g, {1});
    auto j = to_json(c);
    CHECK(j["terms"].size() == 2);
    CHECK(class_from_json(j) == c);
    CHECK(to_json(class_from_json(j)).dump() == j.dump());

    auto p1 = grassmann_ring(1, 2);
    auto gy = proj_bundle_ring(p1, {one(p1), sigma(p1, {1}) * Rational(-4)}, 3);
    auto d = hyperplane(gy).pow(2) + pullback(gy, sigma(p1, {1}));
    CHECK(class_from_json(to_json(d)) == d);
}
