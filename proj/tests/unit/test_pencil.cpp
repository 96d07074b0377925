#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "cyv/pencil.hpp"

using namespace cyv;
using namespace cyv::pencil;

namespace {

const std::string kExample = std::string(CYV_DATA_DIR) + "/example_pencil.json";

QVector qv(std::vector<long> v) { return {v.begin(), v.end()}; }

MPoly var(std::size_t i) { return MPoly::variable(3, i); }

Pencil diagonal_pencil() {
    std::vector<Matrix<RationalField>> mats;
    for (std::size_t k = 0; k < 5; ++k) {
        Matrix<RationalField> m(5, std::vector<Rational>(5));
        m[k][k] = 1;
        mats.push_back(m);
    }
    return Pencil::from_matrices(mats);
}

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Internal;
}

// Naive projective enumeration: every nonzero vector, divided by q - 1.
std::uint64_t naive_quadric_count(const Matrix<RationalField>& a, std::uint64_t q) {
    std::uint64_t zeros = 0;
    std::vector<std::uint64_t> x(5);
    std::uint64_t total = 1;
    for (int i = 0; i < 5; ++i) total *= q;
    for (std::uint64_t c = 1; c < total; ++c) {
        std::uint64_t r = c;
        for (auto& xi : x) {
            xi = r % q;
            r /= q;
        }
        long long acc = 0;
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) acc += a[i][j].get_num().get_si() * static_cast<long long>(x[i] * x[j]);
        acc %= static_cast<long long>(q);
        if (acc == 0) ++zeros;
    }
    return zeros / (q - 1);
}

}  // namespace

TEST_CASE("pencil JSON round trip is bit-exact") {
    auto p = Pencil::load(kExample);
    CHECK(p.size() == 5);
    auto doc = p.to_json();
    auto again = Pencil::from_json(doc);
    CHECK(again.to_json() == doc);
    // Non-canonical strings survive untouched.
    auto odd = doc;
    odd["matrices"][0][0][0] = "2/2";
    CHECK(Pencil::from_json(odd).to_json()["matrices"][0][0][0] == "2/2");
    CHECK(Pencil::from_json(odd).entry(0, 0, 0) == 1);
}

TEST_CASE("pencil JSON errors") {
    auto doc = Pencil::load(kExample).to_json();
    auto asym = doc;
    asym["matrices"][1][0][2] = "7";
    CHECK(code_of([&] { Pencil::from_json(asym); }) == ErrorCode::NotSymmetric);
    auto num = doc;
    num["matrices"][0][0][0] = 1;
    CHECK(code_of([&] { Pencil::from_json(num); }) == ErrorCode::BadRational);
    auto dec = doc;
    dec["matrices"][0][0][0] = "0.5";
    CHECK(code_of([&] { Pencil::from_json(dec); }) == ErrorCode::BadRational);
    auto shape = doc;
    shape["matrices"][2].erase(0);
    CHECK(code_of([&] { Pencil::from_json(shape); }) == ErrorCode::WrongShape);
    CHECK(code_of([&] { Pencil::from_json(nlohmann::json::object()); }) == ErrorCode::WrongShape);
    CHECK(code_of([&] { Pencil::load("/nonexistent/pencil.json"); }) == ErrorCode::Io);
}

TEST_CASE("symmetroid agrees with determinants at random points") {
    auto p = Pencil::load(kExample);
    auto det = symmetroid(p);
    CHECK(det.is_homogeneous());
    CHECK(det.total_degree() == 5);
    RationalField q;
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> d(-7, 7);
    for (int i = 0; i < 50; ++i) {
        std::vector<Rational> l;
        for (int k = 0; k < 5; ++k) l.push_back(ratio(d(rng), 1 + std::abs(d(rng))));
        CHECK(det.eval(q, l) == determinant(q, p.at(q, l)));
    }
    auto diag = symmetroid(diagonal_pencil());
    CHECK(diag.terms().size() == 1);
    CHECK(diag.coeff({1, 1, 1, 1, 1}) == 1);
}

TEST_CASE("line, plane and restriction for the example") {
    auto p = Pencil::load(kExample);
    const auto z = qv({-1, 0, 0, 1, 2}), w = qv({-1, 2, 0, -1, 0});
    CHECK(line_in_X(p, z, w));
    CHECK_FALSE(line_in_X(p, z, qv({1, 0, 0, 0, 0})));
    CHECK(code_of([&] { line_in_X(p, z, z); }) == ErrorCode::DependentVectors);
    auto plane = plane_Px(p, z, w);
    CHECK(same_span({plane.form_z, plane.form_w}, {qv({3, 0, 0, 2, -1}), qv({2, -1, -1, 0, 0})}));
    REQUIRE(plane.basis.size() == 3);
    for (const auto& b : plane.basis) {
        CHECK(3 * b[0] + 2 * b[3] - b[4] == 0);
        CHECK(2 * b[0] - b[1] - b[2] == 0);
    }
    auto curve = restrict_to_plane(symmetroid(p), plane);
    CHECK(curve.total_degree() == 5);
    CHECK(curve.is_homogeneous());
}

TEST_CASE("plane and restriction on the diagonal pencil") {
    auto p = diagonal_pencil();
    auto plane = plane_Px(p, qv({1, 0, 0, 0, 0}), qv({0, 1, 0, 0, 0}));
    CHECK(same_span({plane.form_z, plane.form_w}, {qv({1, 0, 0, 0, 0}), qv({0, 1, 0, 0, 0})}));
    // z = e1 + e2 and w = e1 - e2 lie on a line in X only if the mixed form vanishes
    CHECK_FALSE(line_in_X(p, qv({1, 1, 0, 0, 0}), qv({1, -1, 0, 0, 0})));
    // One form identically zero.
    std::vector<Matrix<RationalField>> mats = p.matrices();
    for (auto& m : mats) m[0][0] = 0;
    auto degenerate = Pencil::from_matrices(mats);
    CHECK(code_of([&] { plane_Px(degenerate, qv({1, 0, 0, 0, 0}), qv({0, 1, 0, 0, 0})); }) == ErrorCode::DegenerateSystem);

    Plane l45{{}, {}, {qv({1, 0, 0, 0, 0}), qv({0, 1, 0, 0, 0}), qv({0, 0, 1, 0, 0})}};
    CHECK(code_of([&] { restrict_to_plane(symmetroid(p), l45); }) == ErrorCode::PlaneInsideHypersurface);
    Plane generic{{}, {}, {qv({1, 2, 0, 1, 0}), qv({0, 1, 3, 0, 1}), qv({1, 0, 0, 2, 5})}};
    auto l1 = MPoly::variable(5, 0).pow(5);
    auto r = restrict_to_plane(l1, generic);
    CHECK(r == (var(0) + var(2)).pow(5));
}

TEST_CASE("the example quintic has three nodes over the cubic field") {
    auto p = Pencil::load(kExample);
    const auto z = qv({-1, 0, 0, 1, 2}), w = qv({-1, 2, 0, -1, 0});
    auto plane = plane_Px(p, z, w);
    auto curve = restrict_to_plane(symmetroid(p), plane);
    auto pts = singular_points(curve);
    REQUIRE(pts.size() == 1);
    const auto& pt = pts[0];
    const NumberField& k = *pt.field;
    RationalField q;
    const QPoly cubic = upoly::from_rationals(q, {Rational(-26), Rational(-13), Rational(-1), Rational(4)});
    CHECK(k.degree() == 3);
    CHECK(point_count(pts) == 3);
    CHECK(pt.multiplicity == 2);
    CHECK(pt.node);

    // Partials vanish exactly.
    for (std::size_t v = 0; v < 3; ++v) CHECK(k.is_zero(curve.derivative(v).eval(k, pt.coords)));
    CHECK(k.is_zero(curve.eval(k, pt.coords)));

    auto lambda = plane.lambda(k, pt.coords);
    REQUIRE_FALSE(k.is_zero(lambda[0]));
    const auto s = k.inv(lambda[0]);
    for (auto& x : lambda) x = k.mul(x, s);
    const auto alpha = lambda[3];
    CHECK(upoly::equal(q, k.minimal_polynomial_of(alpha), upoly::monic(q, cubic)));
    auto c = [&](long n, long d) { return k.from_rational(ratio(n, d)); };
    const auto a2 = k.mul(alpha, alpha);
    // (2/9)(2a^2 + 3a + 1) and -(2/9)(2a^2 + 3a - 8)
    auto l2 = k.mul(c(2, 9), k.add(k.add(k.mul(c(2, 1), a2), k.mul(c(3, 1), alpha)), c(1, 1)));
    auto l3 = k.mul(c(-2, 9), k.add(k.add(k.mul(c(2, 1), a2), k.mul(c(3, 1), alpha)), c(-8, 1)));
    CHECK(k.equal(lambda[1], l2));
    CHECK(k.equal(lambda[2], l3));
    CHECK(k.equal(lambda[4], k.add(c(3, 1), k.mul(c(2, 1), alpha))));

    CHECK(rank_at(p, k, lambda) == 4);
    CHECK(kernel_in_line(p, k, lambda, z, w));

    auto g = curve_genus_report(curve, pts);
    CHECK(g.degree == 5);
    CHECK(g.arithmetic_genus == 6);
    CHECK(g.geometric_genus == 3);

    for (std::array<int, 3> chart : {std::array<int, 3>{1, 2, 0}, std::array<int, 3>{2, 0, 1}, std::array<int, 3>{0, 2, 1}})
        CHECK(same_point_set(pts, singular_points(curve, {chart})));
}

TEST_CASE("rank at simple points") {
    auto diag = diagonal_pencil();
    NumberField k(upoly::linear(RationalField{}, Rational(0)));
    std::vector<NumberField::Element> e1(5, k.zero());
    e1[0] = k.one();
    CHECK(rank_at(diag, k, e1) == 1);
    auto p = Pencil::load(kExample);
    std::vector<NumberField::Element> generic;
    for (long v : {1, 2, -3, 5, 7}) generic.push_back(k.from_rational(v));
    std::vector<Rational> gq{1, 2, -3, 5, 7};
    REQUIRE(symmetroid(p).eval(RationalField{}, gq) != 0);
    CHECK(rank_at(p, k, generic) == 5);
}

TEST_CASE("smooth and cuspidal test curves") {
    const MPoly s = var(0), t = var(1), u = var(2);
    CHECK(singular_points(s.pow(5) + t.pow(5) + u.pow(5)).empty());
    auto smooth = curve_genus_report(s.pow(5) + t.pow(5) + u.pow(5), {});
    CHECK((smooth.degree == 5 && smooth.arithmetic_genus == 6 && smooth.geometric_genus == 6));

    const MPoly c = t.pow(2) * u.pow(3) - s.pow(5);
    for (std::array<int, 3> chart : {std::array<int, 3>{0, 1, 2}, std::array<int, 3>{2, 1, 0}, std::array<int, 3>{1, 0, 2}}) {
        auto pts = singular_points(c, {chart});
        REQUIRE(pts.size() == 2);
        std::set<std::vector<long>> found;
        for (const auto& p : pts) {
            REQUIRE(p.orbit_size() == 1);
            std::vector<long> v;
            for (const auto& x : p.coords) v.push_back(x[0].get_num().get_si());
            found.insert(v);
            if (v == std::vector<long>{0, 0, 1}) {
                CHECK(p.multiplicity == 2);
                CHECK_FALSE(p.node);
            } else {
                CHECK(v == std::vector<long>{0, 1, 0});
                CHECK(p.multiplicity == 3);
                CHECK_FALSE(p.node);
            }
        }
        CHECK(found.size() == 2);
    }
    auto pts = singular_points(c);
    CHECK(code_of([&] { curve_genus_report(c, pts); }) == ErrorCode::NonNodalSingularity);
}

TEST_CASE("nodal cubic and line arrangements") {
    const MPoly x = var(0), y = var(1), z = var(2);
    const MPoly cubic = y.pow(2) * z - x.pow(3) - x.pow(2) * z;
    auto pts = singular_points(cubic);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].node);
    auto g = curve_genus_report(cubic, pts);
    CHECK((g.degree == 3 && g.arithmetic_genus == 1 && g.geometric_genus == 0));

    // Four general lines meet in six nodes, several sharing a coordinate.
    const MPoly lines = x * y * z * (x + y + z);
    auto six = singular_points(lines);
    CHECK(point_count(six) == 6);
    for (const auto& p : six) CHECK(p.node);
    CHECK(same_point_set(six, singular_points(lines, {{2, 0, 1}})));

    // Two conics meeting transversally in four conjugate points x = +-i, y = +-sqrt2.
    const MPoly conics = (x.pow(2) + y.pow(2) - z.pow(2)) * (x.pow(2) + y.pow(2) * Rational(2) - z.pow(2) * Rational(3));
    auto four = singular_points(conics);
    CHECK(point_count(four) == 4);
    for (const auto& p : four) {
        CHECK(p.node);
        const NumberField& k = *p.field;
        // z = 1 after scaling; x^2 = -1 and y^2 = 2
        auto zi = k.inv(p.coords[2]);
        auto px = k.mul(p.coords[0], zi), py = k.mul(p.coords[1], zi);
        CHECK(k.equal(k.mul(px, px), k.from_rational(-1)));
        CHECK(k.equal(k.mul(py, py), k.from_rational(2)));
    }
    CHECK(same_point_set(four, singular_points(conics, {{1, 2, 0}})));

    // The lines x = +-iy meet at [0:0:1] and touch the circle at the two
    // circular points, where the singularity is a tacnode.
    const MPoly tangent = (x.pow(2) + y.pow(2)) * (x.pow(2) + y.pow(2) - z.pow(2) * Rational(4));
    auto tp = singular_points(tangent);
    CHECK(point_count(tp) == 3);
    for (const auto& p : tp) {
        CHECK(p.multiplicity == 2);
        CHECK(p.node == (p.orbit_size() == 1));
    }
    CHECK(same_point_set(tp, singular_points(tangent, {{1, 2, 0}})));
}

TEST_CASE("classification rejects smooth points and non-reduced curves fail") {
    const MPoly x = var(0), y = var(1), z = var(2);
    const MPoly conic = x * y - z.pow(2);
    SingularPoint smooth;
    smooth.field = std::make_shared<const NumberField>(upoly::linear(RationalField{}, Rational(0)));
    smooth.coords = {smooth.field->one(), smooth.field->zero(), smooth.field->zero()};
    CHECK(code_of([&] { classify_singularity(conic, smooth); }) == ErrorCode::NotSingular);
    CHECK(code_of([&] { singular_points(x.pow(2) * y * z); }) == ErrorCode::NonReducedCurve);
}

TEST_CASE("finite-field scans") {
    auto diag = diagonal_pencil();
    Plane stu{{}, {}, {qv({1, 0, 0, 0, 0}), qv({0, 1, 0, 0, 0}), qv({0, 0, 1, 0, 0})}};
    CHECK(rank3_on_plane_count(diag, stu, 31) == 31 * 31 + 31 + 1);
    CHECK(rank3_on_plane_count(diag, stu, 7) == 57);

    // Five copies of one quadric: the base locus is that quadric.
    Matrix<RationalField> a{{1, 0, 0, 0, 0}, {0, 2, 1, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, -1, 0}, {0, 0, 0, 0, 3}};
    auto same = Pencil::from_matrices({a, a, a, a, a});
    CHECK(base_locus_count(same, 7) == naive_quadric_count(a, 7));
    CHECK(base_locus_count(same, 7) > 0);

    auto mats = diag.matrices();
    for (auto& m : mats) m[0][0] = 0;
    mats[0][1][1] = 1;
    CHECK(base_locus_count(Pencil::from_matrices(mats), 5) >= 1);

    auto p = Pencil::load(kExample);
    CHECK(base_locus_count(diag, 11) == 0);
    auto doc = p.to_json();
    doc["matrices"][0][0][0] = "1/7";
    CHECK(code_of([&] { base_locus_count(Pencil::from_json(doc), 7); }) == ErrorCode::BadPrime);
    CHECK(code_of([&] { base_locus_count(p, 33); }) == ErrorCode::BadPrime);
    auto plane = plane_Px(p, qv({-1, 0, 0, 1, 2}), qv({-1, 2, 0, -1, 0}));
    CHECK(code_of([&] { rank3_on_plane_count(Pencil::from_json(doc), plane, 7); }) == ErrorCode::BadPrime);
    CHECK(rank3_on_plane_count(p, plane, 31) == 0);
    CHECK(rank3_on_plane_count(p, plane, 101) == 0);
}

TEST_CASE("a common kernel vector makes the symmetroid vanish") {
    std::vector<Matrix<RationalField>> mats;
    for (std::size_t k = 0; k < 5; ++k) {
        Matrix<RationalField> m(5, std::vector<Rational>(5));
        for (std::size_t i = 1; i < 5; ++i)
            for (std::size_t j = 1; j < 5; ++j) m[i][j] = Rational(static_cast<long>((i + j + k) % 3) - 1);
        mats.push_back(m);
    }
    CHECK(code_of([&] { symmetroid(Pencil::from_matrices(mats)); }) == ErrorCode::IdenticallyZero);
}

TEST_CASE("rebasing a point on one of its coordinates keeps it on the curve") {
    auto p = Pencil::load(kExample);
    auto plane = plane_Px(p, qv({-1, 0, 0, 1, 2}), qv({-1, 2, 0, -1, 0}));
    auto curve = restrict_to_plane(symmetroid(p), plane);
    auto pts = singular_points(curve);
    REQUIRE(pts.size() == 1);
    const auto& pt = pts[0];
    auto [field, coords] = rebase_on_coordinate(pt.field, pt.coords);
    const NumberField& k = *field;
    CHECK(k.degree() == 3);
    CHECK(k.is_zero(curve.eval(k, coords)));
    for (std::size_t v = 0; v < 3; ++v) CHECK(k.is_zero(curve.derivative(v).eval(k, coords)));
    // One coordinate is now the generator itself.
    bool has_generator = false;
    for (const auto& c : coords) has_generator = has_generator || k.equal(c, k.generator());
    CHECK(has_generator);

    // Over Q nothing changes.
    auto q = std::make_shared<const NumberField>(upoly::linear(RationalField{}, Rational(0)));
    std::vector<NumberField::Element> xs{q->one(), q->zero(), q->one()};
    CHECK(rebase_on_coordinate(q, xs).first == q);
}
