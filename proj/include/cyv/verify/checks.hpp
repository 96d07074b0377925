#ifndef CYV_VERIFY_CHECKS_HPP
#define CYV_VERIFY_CHECKS_HPP

// The named checks and the registry that runs them.

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cyv/bott.hpp"
#include "cyv/chow.hpp"
#include "cyv/pencil.hpp"
#include "cyv/symfunc.hpp"
#include "cyv/verify/report.hpp"

#ifndef CYV_DATA_DIR
#define CYV_DATA_DIR "data"
#endif

namespace cyv::verify {

inline const std::string& default_pencil_path() {
    static const std::string path = std::string(CYV_DATA_DIR) + "/example_pencil.json";
    return path;
}

namespace detail {

inline nlohmann::json num(const Rational& r) {
    if (is_integer(r)) {
        const Integer n = r.get_num();
        if (n.fits_slong_p()) return n.get_si();
    }
    return cyv::to_string(r);
}

inline nlohmann::json num(const Integer& z) { return z.fits_slong_p() ? nlohmann::json(z.get_si()) : nlohmann::json(z.get_str()); }

inline chow::RingClass sigma(const chow::RingPtr& g, std::initializer_list<int> parts) { return chow::schubert(g, Partition(parts)); }

/// c(E) on G(3,5) for 0 -> E^* -> Sym^2 V^* -> Sym^2 S^* -> 0.
inline chow::RingClass chern_E(const chow::RingPtr& g) {
    std::vector<chow::RingClass> sdual;
    for (int i = 1; i <= 3; ++i) sdual.push_back(chow::taut_chern(g, chow::Taut::SubDual, i));
    // c(E^*) = 1 / c(Sym^2 S^*); c(E) is its dual.
    auto ce_dual = chow::evaluate(segre_from_chern(chern_sym2(3), 6), g, {sdual});
    auto ce = chow::zero(g);
    for (int i = 0; i <= 6; ++i) ce += ce_dual.part(i) * Rational(i % 2 ? -1 : 1);
    return ce;
}

/// P(Sym^2 F^*) over G(2,5), F the dual of the universal subbundle.
inline chow::RingPtr hilb_ring() {
    auto g = chow::grassmann_ring(2, 5);
    std::vector<chow::RingClass> f{chow::taut_chern(g, chow::Taut::SubDual, 1), chow::taut_chern(g, chow::Taut::SubDual, 2)};
    return chow::proj_bundle_ring(g, chow::graded_parts(chow::evaluate(dual(chern_sym2(2)), g, {f})), 3);
}

/// P(O(-1)^2 + O(-2)) over P^1 with its hyperplane and fibre classes.
struct FibreRing {
    chow::RingPtr ring;
    chow::RingClass h, f;
};

inline FibreRing fibre_ring() {
    auto p1 = chow::grassmann_ring(1, 2);
    auto f = sigma(p1, {1});
    auto gy = chow::proj_bundle_ring(p1, {chow::one(p1), f * Rational(-4)}, 3);
    return {gy, chow::hyperplane(gy), chow::pullback(gy, f)};
}

inline bott::BottInput bott_input(int n, int r, std::vector<int> beta, std::vector<int> gamma) {
    return {n, r, Weight{std::move(beta)}, Weight{std::move(gamma)}};
}

}  // namespace detail

inline CheckResult check_c1c2() {
    CheckResult c{"check_c1c2", {}, {}, 0};
    auto g = chow::grassmann_ring(3, 5);
    auto ce = detail::chern_E(g);
    auto s1 = detail::sigma(g, {1}), s2 = detail::sigma(g, {2});
    c.expect("c1", (s1 * Rational(4)).to_string(), ce.part(1).to_string(), Provenance::Paper);
    c.expect("c2", (s2 * Rational(5) + s1 * s1 * Rational(6)).to_string(), ce.part(2).to_string(), Provenance::Paper);
    c.expect("rank", 9, 15 - 6, Provenance::Trivial);
    return c;
}

inline CheckResult check_curve_degree_genus() {
    CheckResult c{"check_curve_degree_genus", {}, {}, 0};
    auto g = chow::grassmann_ring(3, 5);
    auto ce = detail::chern_E(g);
    auto s1 = detail::sigma(g, {1}), s22 = detail::sigma(g, {2, 2});
    auto segre2 = ce.part(1) * ce.part(1) - ce.part(2);
    const Rational degree = chow::integrate(segre2 * s22);
    c.expect("degree", 5, detail::num(degree), Provenance::Paper);
    c.expect("c2(Q).G_x", 1, detail::num(chow::integrate(detail::sigma(g, {2}) * s22)), Provenance::Paper);
    const Rational deg_k = 4 * chow::integrate(s1 * s1 * s22);
    c.expect("deg K", 4, detail::num(deg_k), Provenance::Paper);
    c.expect("genus", 3, detail::num((deg_k + 2) / 2), Provenance::Trivial);
    return c;
}

inline CheckResult check_brauer() {
    CheckResult c{"check_brauer", {}, {}, 0};
    auto g35 = chow::grassmann_ring(3, 5);
    auto s2e = chow::inverse_total(detail::chern_E(g35)).part(2);
    const Rational n4 = chow::integrate(s2e * detail::sigma(g35, {1}).pow(4));
    c.expect("N^4", 40, detail::num(n4), Provenance::Paper);

    // The same polynomial in sigma_1, sigma_2 read in the G(2,5) box.
    auto g25 = chow::grassmann_ring(2, 5);
    auto s1 = detail::sigma(g25, {1}), s2 = detail::sigma(g25, {2});
    auto wrong_box = (s1 * s1 * Rational(10) - s2 * Rational(5)) * s1.pow(4);
    c.expect("same integrand on G(2,5)", 35, detail::num(chow::integrate(wrong_box)), Provenance::Derived);
    c.expect("s2(E)", (detail::sigma(g35, {1}).pow(2) * Rational(10) - detail::sigma(g35, {2}) * Rational(5)).to_string(),
             s2e.to_string(), Provenance::Derived);

    // 4 = 2h + 5a forces a even.
    bool a_even = true;
    for (long a = -40; a <= 40; ++a)
        if ((4 - 5 * a) % 2 == 0) a_even = a_even && a % 2 == 0;
    c.expect("a parity", "even", a_even ? "even" : "odd", Provenance::Trivial);
    const bool integral = is_integer(n4 / 16);
    c.expect("N^4/16 integral", false, integral, Provenance::Paper);
    c.expect("obstruction", true, a_even && !integral, Provenance::Paper);
    return c;
}

inline CheckResult check_X_invariants() {
    CheckResult c{"check_X_invariants", {}, {}, 0};
    auto hilb = detail::hilb_ring();
    auto h = chow::hyperplane(hilb);
    c.expect("deg X", 35, detail::num(chow::integrate(h.pow(8))), Provenance::Paper);
    // X is cut out by five sections of O(H): c(T_X) = c(T_Hilb) / (1+H)^5.
    auto t = chow::sum_classes(hilb, chow::tangent_chern(hilb));
    auto tx = t * chow::inverse_total((chow::one(hilb) + h).pow(5));
    c.expect("c2.D", 50, detail::num(chow::integrate(tx.part(2) * h.pow(6))), Provenance::Paper);
    const Rational euler = chow::integrate(tx.part(3) * h.pow(5));
    c.expect("c3", -50, detail::num(euler), Provenance::Paper);
    const int h11 = 1, h21 = 26;
    c.expect("2(h11-h21)", detail::num(euler), 2 * (h11 - h21), Provenance::Trivial);
    return c;
}

inline CheckResult check_Y_degree() {
    CheckResult c{"check_Y_degree", {}, {}, 0};
    std::vector<Matrix<RationalField>> diag;
    for (std::size_t k = 0; k < 5; ++k) {
        Matrix<RationalField> m(5, std::vector<Rational>(5));
        m[k][k] = 1;
        diag.push_back(m);
    }
    const int quintic = pencil::symmetroid(pencil::Pencil::from_matrices(diag)).total_degree();
    const int cover = 2;
    c.expect("double cover factor", 2, cover, Provenance::Trivial);
    c.expect("deg Y", 10, cover * quintic, Provenance::Paper);
    c.expect("c2.M", 40, 40, Provenance::Paper, true);
    return c;
}

inline CheckResult check_sym2_identities() {
    CheckResult c{"check_sym2_identities", {}, {}, 0};
    auto s = chern_sym2(2);
    const MPoly c1 = MPoly::variable(2, 0), c2 = MPoly::variable(2, 1);
    const std::vector<std::string> names{"c1", "c2"};
    c.expect("c1", (c1 * Rational(3)).format(names), s.part(1).format(names), Provenance::Paper);
    c.expect("c2", (c1 * c1 * Rational(2) + c2 * Rational(4)).format(names), s.part(2).format(names), Provenance::Paper);
    c.expect("c3", (c1 * c2 * Rational(4)).format(names), s.part(3).format(names), Provenance::Paper);
    return c;
}

inline CheckResult check_hilb_curve() {
    CheckResult c{"check_hilb_curve", {}, {}, 0};
    const std::vector<std::string> names{"c1", "c2"};
    auto seg = segre_from_chern(dual(chern_sym2(2)), 3);
    const MPoly c1 = MPoly::variable(2, 0), c2 = MPoly::variable(2, 1);
    c.expect("s3", (c1.pow(3) * Rational(15) - c1 * c2 * Rational(20)).format(names), seg.part(3).format(names), Provenance::Paper);
    c.expect("s2", (c1 * c1 * Rational(7) - c2 * Rational(4)).format(names), seg.part(2).format(names), Provenance::Paper);

    auto fr = detail::fibre_ring();
    const Rational h3 = chow::integrate(fr.h.pow(3));
    c.expect("c1^3.G_y", 4, detail::num(h3), Provenance::Paper);
    // c2(F) restricted to G_y: the class C with H.C = 2 and f.C = 1.
    RationalField q;
    Matrix<RationalField> m{{chow::integrate(fr.h * fr.h * fr.h), chow::integrate(fr.h * fr.h * fr.f)},
                            {chow::integrate(fr.f * fr.h * fr.h), chow::integrate(fr.f * fr.h * fr.f)}};
    auto sol = solve_unique(q, m, {Rational(2), Rational(1)});
    if (!sol) {
        c.error = "the restriction of c2(F) is not determined by its pairings";
        return c;
    }
    auto cc = fr.h * fr.h * (*sol)[0] + fr.h * fr.f * (*sol)[1];
    c.expect("c1c2.G_y", 2, detail::num(chow::integrate(fr.h * cc)), Provenance::Paper);

    // Evaluate s3 and s2 with c1 -> H, c2 -> C.
    auto eval = [&](const MPoly& p) {
        auto out = chow::zero(fr.ring);
        for (const auto& [e, coef] : p.terms()) out += fr.h.pow(static_cast<unsigned>(e[0])) * cc.pow(static_cast<unsigned>(e[1])) * coef;
        return out;
    };
    const Rational degree = chow::integrate(eval(seg.part(3)));
    c.expect("degree", 20, detail::num(degree), Provenance::Paper);

    auto t = chow::tangent_chern(fr.ring);
    auto k = -t[1];
    c.expect("K_G_y", (fr.h * Rational(-3) + fr.f * Rational(2)).to_string(), k.to_string(), Provenance::Paper);
    const Rational correction = chow::integrate(eval(seg.part(2)) * (k + fr.h * Rational(3)));
    c.expect("correction", 6, detail::num(correction), Provenance::Paper);
    const Rational deg_k = degree + correction;
    c.expect("deg K", 26, detail::num(deg_k), Provenance::Paper);
    c.expect("genus", 14, detail::num(deg_k / 2 + 1), Provenance::Paper);
    return c;
}

/// Rank T~ = 4 is read off its defining sequence; report metadata flags it.
inline constexpr int kRankTTilde = 4;

inline CheckResult check_resolution_ranks() {
    CheckResult c{"check_resolution_ranks", {}, {}, 0};
    struct Term {
        int sign;
        std::vector<std::pair<int, int>> summands;  // (multiplicity, rank)
    };
    auto alternating = [](const std::vector<Term>& terms) {
        int total = 0;
        for (const auto& t : terms)
            for (auto [mult, rank] : t.summands) total += t.sign * mult * rank;
        return total;
    };
    const int s_l = 3, q_t = 3, f = 2, sym2f = 3, line = 1, ideal = 1;
    // Ranks of box products multiply.
    c.expect("resolution on the product", 0,
             alternating({{1, {{1, s_l * line}}}, {-1, {{1, kRankTTilde * f}}}, {1, {{1, line * sym2f}, {1, q_t * line}}}, {-1, {{1, ideal}}}}),
             Provenance::Derived);
    c.expect("restriction to a point x", 0,
             alternating({{1, {{1, s_l}}}, {-1, {{2, kRankTTilde}}}, {1, {{3, line}, {1, q_t}}}, {-1, {{1, ideal}}}}), Provenance::Derived);
    c.expect("restriction to a point y", 0,
             alternating({{1, {{3, line}}}, {-1, {{4, f}}}, {1, {{1, sym2f}, {3, line}}}, {-1, {{1, ideal}}}}), Provenance::Derived);
    c.expect("Hom dimension V", 5, detail::num(weyl_dimension(Weight{{1}}, 5)), Provenance::Paper);
    c.expect("Hom dimension wedge2 V", 10, detail::num(weyl_dimension(Weight{{1, 1}}, 5)), Provenance::Paper);
    c.expect("Hom dimension Sym2 V", 15, detail::num(weyl_dimension(Weight{{2}}, 5)), Provenance::Paper);
    return c;
}

inline CheckResult check_bott_suite() {
    using bott::Verdict;
    using detail::bott_input;
    CheckResult c{"check_bott_suite", {}, {}, 0};
    auto h1 = bott::bott_cohomology(bott::twist_by_hyperplane(bott_input(3, 1, {0}, {0, -2}), -3));
    c.expect("H1 degree", 1, h1.vanishes ? -1 : h1.degree, Provenance::Paper);
    c.expect("H1 dimension", 3, detail::num(h1.dimension), Provenance::Paper);

    auto rho = bott::complex_vanishing({bott_input(3, 1, {-2}, {1, 0}), bott_input(3, 1, {0}, {1, 0})});
    c.expect("conic, rho branch", "AllTermsVanish", rho.kind_name(), Provenance::Paper);
    std::vector<bott::BottInput> koszul;
    for (int j = 0; j <= 3; ++j) koszul.push_back(bott_input(4, 2, {-j, -j}, {1, 0}));
    c.expect("conic, tau branch", "AllTermsVanish", bott::complex_vanishing(koszul).kind_name(), Provenance::Derived);

    auto lf = bott::complex_vanishing({bott_input(3, 1, {-3}, {0, -2}), bott_input(3, 1, {-1}, {0, -2})});
    c.expect("locfree, rho case", "SingleSurvivor", lf.kind_name(), Provenance::Paper);
    c.expect("locfree, surviving dimension", 3, lf.kind == Verdict::Kind::SingleSurvivor ? detail::num(lf.outcome.dimension) : nlohmann::json(nullptr),
             Provenance::Paper);
    return c;
}

inline CheckResult check_example_pencil(const std::string& path = default_pencil_path()) {
    CheckResult c{"check_example_pencil", {}, {}, 0};
    const auto p = pencil::Pencil::load(path);  // I/O and format errors propagate
    const pencil::QVector z{-1, 0, 0, 1, 2}, w{-1, 2, 0, -1, 0};
    try {
        const bool in_x = pencil::line_in_X(p, z, w);
        c.expect("line_in_X", true, in_x, Provenance::Paper);
        if (!in_x) return c;
        auto plane = pencil::plane_Px(p, z, w);
        const bool span = pencil::same_span({plane.form_z, plane.form_w}, {{3, 0, 0, 2, -1}, {2, -1, -1, 0, 0}});
        c.expect("P_x forms", true, span, Provenance::Paper);
        auto curve = pencil::restrict_to_plane(pencil::symmetroid(p), plane);
        c.expect("quintic degree", 5, curve.total_degree(), Provenance::Paper);
        auto pts = pencil::singular_points(curve);
        c.expect("singular points", 3, pencil::point_count(pts), Provenance::Paper);

        RationalField q;
        const QPoly cubic = upoly::monic(q, upoly::from_rationals(q, {Rational(-26), Rational(-13), Rational(-1), Rational(4)}));
        bool field_ok = pts.size() == 1, param_ok = pts.size() == 1, nodes = !pts.empty(), kernel = !pts.empty();
        nlohmann::json ranks = nlohmann::json::array();
        for (auto& pt : pts) {
            const NumberField& k = *pt.field;
            nodes = nodes && pt.node;
            auto lambda = plane.lambda(k, pt.coords);
            if (k.is_zero(lambda[0])) {
                param_ok = false;
                continue;
            }
            const auto s = k.inv(lambda[0]);
            for (auto& x : lambda) x = k.mul(x, s);
            pt.ambient_lambda = lambda;
            const auto& a = lambda[3];
            field_ok = field_ok && upoly::equal(q, k.minimal_polynomial_of(a), cubic);
            auto r = [&](long n, long d) { return k.from_rational(ratio(n, d)); };
            auto quad = [&](long c0) { return k.add(k.add(k.mul(r(2, 1), k.mul(a, a)), k.mul(r(3, 1), a)), r(c0, 1)); };
            param_ok = param_ok && k.equal(lambda[1], k.mul(r(2, 9), quad(1))) && k.equal(lambda[2], k.mul(r(-2, 9), quad(-8))) &&
                       k.equal(lambda[4], k.add(r(3, 1), k.mul(r(2, 1), a)));
            kernel = kernel && pencil::kernel_in_line(p, k, lambda, z, w);
            ranks.push_back(pencil::rank_at(p, k, lambda));
        }
        c.expect("residue field", "4a^3 - a^2 - 13a - 26", field_ok ? "4a^3 - a^2 - 13a - 26" : "different", Provenance::Paper);
        c.expect("parametrization", true, param_ok, Provenance::Paper);
        c.expect("all nodes", true, nodes, Provenance::Paper);
        c.expect("kernel meets the line", true, kernel, Provenance::Paper);
        c.expect("rank at the nodes", nlohmann::json::array({4}), ranks, Provenance::Derived);
        c.expect("base points over F_31", 0, pencil::base_locus_count(p, 31), Provenance::Derived, true);
        c.expect("rank <= 3 on P_x over F_31", 0, pencil::rank3_on_plane_count(p, plane, 31), Provenance::Derived, true);
        c.expect("rank <= 3 on P_x over F_101", 0, pencil::rank3_on_plane_count(p, plane, 101), Provenance::Derived, true);
        if (nodes) {
            auto g = pencil::curve_genus_report(curve, pts);
            c.expect("genus report", nlohmann::json::array({5, 6, 3}), nlohmann::json::array({g.degree, g.arithmetic_genus, g.geometric_genus}),
                     Provenance::Paper);
        }
    } catch (const Error& e) {
        c.error = e.what();
    }
    return c;
}

struct Options {
    std::string pencil_path = default_pencil_path();
};

struct Entry {
    std::string name;
    std::function<CheckResult(const Options&)> run;
};

inline const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries = {
        {"check_c1c2", [](const Options&) { return check_c1c2(); }},
        {"check_curve_degree_genus", [](const Options&) { return check_curve_degree_genus(); }},
        {"check_brauer", [](const Options&) { return check_brauer(); }},
        {"check_X_invariants", [](const Options&) { return check_X_invariants(); }},
        {"check_Y_degree", [](const Options&) { return check_Y_degree(); }},
        {"check_sym2_identities", [](const Options&) { return check_sym2_identities(); }},
        {"check_hilb_curve", [](const Options&) { return check_hilb_curve(); }},
        {"check_resolution_ranks", [](const Options&) { return check_resolution_ranks(); }},
        {"check_bott_suite", [](const Options&) { return check_bott_suite(); }},
        {"check_example_pencil", [](const Options& o) { return check_example_pencil(o.pencil_path); }},
    };
    return entries;
}

inline std::vector<std::string> check_names() {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.push_back(e.name);
    return out;
}

/// Runs the selected checks in registry order (all of them when empty).
inline Report run_all(const std::vector<std::string>& selection = {}, const Options& opts = {}) {
    for (const auto& name : selection) {
        bool known = false;
        for (const auto& e : registry()) known = known || e.name == name;
        if (!known) fail(ErrorCode::UnknownCheckName, "unknown check '" + name + "'");
    }
    Report r;
    r.metadata["assumptions"] = nlohmann::json::array(
        {{{"name", "rank_T_tilde"},
          {"value", kRankTTilde},
          {"note", "taken from the defining sequence of T~*: Omega(1) has rank 4 and the quotient lives on a divisor; no number is stated for it"}}});
    r.metadata["recorded_constants"] = nlohmann::json::array(
        {{{"name", "c2.M"}, {"value", 40}, {"note", "recorded, not derived"}},
         {{"name", "Sing H"}, {"value", {{"genus", 26}, {"degree", 20}}}, {"note", "recorded, not verified"}}});
    for (const auto& e : registry()) {
        if (!selection.empty() && std::find(selection.begin(), selection.end(), e.name) == selection.end()) continue;
        const auto start = std::chrono::steady_clock::now();
        CheckResult c = e.run(opts);
        c.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        r.checks.push_back(std::move(c));
    }
    return r;
}

}  // namespace cyv::verify

#endif  // CYV_VERIFY_CHECKS_HPP
