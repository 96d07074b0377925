// cyv: command-line probe for the Schubert, Bott, Chern, pencil and verify engines.
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage error,
// 3 bad input (parse, shape or math precondition).

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cyv/bott.hpp"
#include "cyv/chow.hpp"
#include "cyv/chow/json.hpp"
#include "cyv/pencil.hpp"
#include "cyv/symfunc.hpp"
#include "cyv/verify.hpp"

namespace {

using cyv::Rational;
using nlohmann::json;

constexpr int kOk = 0, kFail = 1, kUsage = 2, kInput = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    for (std::string item; std::getline(in, item, ',');) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        out.push_back(item);
    }
    return out;
}

std::vector<int> int_csv(const std::string& s, const std::string& flag) {
    std::vector<int> out;
    if (s.empty()) return out;
    for (const auto& item : split_csv(s)) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (item.empty() || used != item.size()) throw UsageError(flag + ": '" + item + "' is not an integer");
        out.push_back(v);
    }
    return out;
}

std::vector<Rational> rational_csv(const std::string& s) {
    std::vector<Rational> out;
    for (const auto& item : split_csv(s)) out.push_back(cyv::parse_rational(item));
    return out;
}

json number(const Rational& r) {
    if (cyv::is_integer(r) && r.get_num().fits_slong_p()) return r.get_num().get_si();
    return cyv::to_string(r);
}

void table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (width.size() <= i) width.push_back(0);
            width[i] = std::max(width[i], r[i].size());
        }
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
            line += r[i];
            if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
        }
        std::cout << line << "\n";
    }
}

// schubert ------------------------------------------------------------------

struct SchubertArgs {
    std::string ring;
    std::vector<std::string> multiply;
    std::string integrate;
};

int run_schubert(const SchubertArgs& a, bool as_json) {
    auto ring = cyv::chow::parse_ring_spec(a.ring);
    if (!a.multiply.empty() == !a.integrate.empty()) throw UsageError("schubert needs exactly one of --multiply A B or --integrate EXPR");
    if (!a.multiply.empty()) {
        auto x = cyv::chow::parse_class_expr(a.multiply[0], ring);
        auto y = cyv::chow::parse_class_expr(a.multiply[1], ring);
        auto p = cyv::chow::multiply(x, y);
        if (as_json) {
            std::cout << json{{"ring", ring->describe()}, {"operation", "multiply"}, {"result", cyv::chow::to_json(p)}}.dump(2) << "\n";
        } else {
            std::vector<std::vector<std::string>> rows{{"class", "coefficient"}};
            for (const auto& [key, c] : p.terms()) {
                cyv::chow::RingClass basis(ring);
                basis.add_term(key, 1);
                rows.push_back({basis.to_string(), cyv::to_string(c)});
            }
            if (p.is_zero()) rows.push_back({"0", ""});
            table(rows);
        }
        return kOk;
    }
    auto x = cyv::chow::parse_class_expr(a.integrate, ring);
    const Rational v = cyv::chow::integrate(x);
    if (as_json)
        std::cout << json{{"ring", ring->describe()}, {"operation", "integrate"}, {"expression", a.integrate}, {"integral", number(v)}}.dump(2)
                  << "\n";
    else
        table({{"ring", ring->describe()}, {"expression", a.integrate}, {"integral", cyv::to_string(v)}});
    return kOk;
}

// bott ----------------------------------------------------------------------

struct BottArgs {
    int n = 0, r = 0, twist = 0;
    std::string beta, gamma;
};

int run_bott(const BottArgs& a, bool as_json) {
    cyv::bott::BottInput in{a.n, a.r, cyv::Weight{int_csv(a.beta, "--beta")}, cyv::Weight{int_csv(a.gamma, "--gamma")}};
    in = cyv::bott::twist_by_hyperplane(in, a.twist);
    auto o = cyv::bott::bott_cohomology(in);
    if (as_json) {
        std::cout << json{{"input", {{"n", in.n}, {"r", in.r}, {"beta", in.beta.entries}, {"gamma", in.gamma.entries}}},
                          {"outcome", cyv::bott::to_json(o)}}
                         .dump(2)
                  << "\n";
    } else if (o.vanishes) {
        table({{"input", in.to_string()}, {"outcome", "all cohomology vanishes"}});
    } else {
        table({{"input", in.to_string()}, {"degree", std::to_string(o.degree)}, {"dimension", o.dimension.get_str()}, {"weight", o.weight.to_string()}});
    }
    return kOk;
}

// chern ---------------------------------------------------------------------

struct ChernArgs {
    std::string op;
    int rank = 0, rank2 = 0, degree = -1;
};

int run_chern(const ChernArgs& a, bool as_json) {
    if (a.rank <= 0) throw UsageError("--rank must be positive");
    cyv::ChernSeries s = [&]() -> cyv::ChernSeries {
        if (a.op == "sym2") return cyv::chern_sym2(a.rank);
        if (a.op == "wedge2") return cyv::chern_wedge2(a.rank);
        if (a.op == "tensor") return cyv::chern_tensor(a.rank, a.rank2 > 0 ? a.rank2 : a.rank);
        return cyv::segre_from_chern(cyv::ChernSeries::total({a.rank}, 0, a.degree < 0 ? a.rank : a.degree), a.degree < 0 ? a.rank : a.degree);
    }();
    const int top = a.degree >= 0 ? std::min(a.degree, s.truncation()) : s.truncation();
    const char* symbol = a.op == "segre" ? "s" : "c";
    json classes = json::array();
    std::vector<std::vector<std::string>> rows{{"degree", "class"}};
    for (int k = 1; k <= top; ++k) {
        const std::string f = s.part(k).format(s.default_names());
        classes.push_back({{"degree", k}, {"class", f}});
        rows.push_back({std::string(symbol) + std::to_string(k), f});
    }
    if (as_json)
        std::cout << json{{"op", a.op}, {"rank", a.rank}, {"variables", s.default_names()}, {"classes", classes}}.dump(2) << "\n";
    else
        table(rows);
    return kOk;
}

// pencil --------------------------------------------------------------------

struct PencilArgs {
    std::string input, z, w;
    bool symmetroid = false, nodes = false, scan_base = false, scan_rank3 = false;
    std::uint64_t prime = 31;
};

int run_pencil(const PencilArgs& a, bool as_json) {
    namespace pc = cyv::pencil;
    const int modes = a.symmetroid + a.nodes + a.scan_base + a.scan_rank3;
    if (modes != 1) throw UsageError("pencil needs exactly one of --symmetroid, --nodes, --scan-base, --scan-rank3");
    const auto p = pc::Pencil::load(a.input);
    std::vector<std::string> lambda_names;
    for (std::size_t i = 1; i <= p.size(); ++i) lambda_names.push_back("l" + std::to_string(i));

    if (a.symmetroid) {
        auto det = pc::symmetroid(p);
        if (as_json)
            std::cout << json{{"degree", det.total_degree()}, {"terms", det.terms().size()}, {"symmetroid", det.format(lambda_names)}}.dump(2) << "\n";
        else
            table({{"degree", std::to_string(det.total_degree())}, {"terms", std::to_string(det.terms().size())}, {"symmetroid", det.format(lambda_names)}});
        return kOk;
    }
    if (a.scan_base) {
        const auto count = pc::base_locus_count(p, a.prime);
        if (as_json)
            std::cout << json{{"prime", a.prime}, {"base_locus_count", count}, {"grade", "EVIDENCE"}}.dump(2) << "\n";
        else
            table({{"prime", std::to_string(a.prime)}, {"base points", std::to_string(count)}, {"grade", "EVIDENCE"}});
        return kOk;
    }

    if (a.z.empty() || a.w.empty()) throw UsageError("--z and --w are required here");
    const auto z = rational_csv(a.z), w = rational_csv(a.w);
    if (z.size() != p.size() || w.size() != p.size()) throw UsageError("--z and --w need " + std::to_string(p.size()) + " entries");
    auto plane = pc::plane_Px(p, z, w);

    if (a.scan_rank3) {
        const auto count = pc::rank3_on_plane_count(p, plane, a.prime);
        if (as_json)
            std::cout << json{{"prime", a.prime}, {"rank3_on_plane_count", count}, {"grade", "EVIDENCE"}}.dump(2) << "\n";
        else
            table({{"prime", std::to_string(a.prime)}, {"rank <= 3 points", std::to_string(count)}, {"grade", "EVIDENCE"}});
        return kOk;
    }

    auto curve = pc::restrict_to_plane(pc::symmetroid(p), plane);
    auto pts = pc::singular_points(curve);
    json jpts = json::array();
    std::vector<std::vector<std::string>> rows{{"field", "lambda", "mult", "node", "rank", "kernel in line"}};
    bool all_nodes = true;
    for (const auto& pt : pts) {
        // Rebase lambda and (s,t,u) together so both read over one generator.
        auto joint = pc::detail::normalized(*pt.field, plane.lambda(*pt.field, pt.coords));
        const std::size_t n = joint.size();
        joint.insert(joint.end(), pt.coords.begin(), pt.coords.end());
        auto [kp, rebased] = pc::rebase_on_coordinate(pt.field, joint);
        const auto& k = *kp;
        const std::vector<cyv::NumberField::Element> lambda(rebased.begin(), rebased.begin() + static_cast<long>(n));
        json coords = json::array(), lam = json::array();
        for (std::size_t i = n; i < rebased.size(); ++i) coords.push_back(k.format(rebased[i]));
        std::string lstr;
        for (std::size_t i = 0; i < lambda.size(); ++i) {
            lam.push_back(k.format(lambda[i]));
            lstr += (i ? ", " : "[") + k.format(lambda[i]);
        }
        lstr += "]";
        const auto rank = pc::rank_at(p, k, lambda);
        const bool kernel = pc::kernel_in_line(p, k, lambda, z, w);
        const std::string field = cyv::upoly::format(cyv::RationalField{}, k.modulus(), "a");
        all_nodes = all_nodes && pt.node;
        jpts.push_back({{"field", field},
                        {"orbit_size", pt.orbit_size()},
                        {"coords", coords},
                        {"lambda", lam},
                        {"multiplicity", pt.multiplicity},
                        {"node", pt.node},
                        {"rank", rank},
                        {"kernel_in_line", kernel}});
        rows.push_back({field, lstr, std::to_string(pt.multiplicity), pt.node ? "yes" : "no", std::to_string(rank), kernel ? "yes" : "no"});
    }
    json doc{{"plane_basis", json::array()}, {"curve_degree", curve.total_degree()}, {"points", jpts}, {"point_count", pc::point_count(pts)}};
    for (const auto& b : plane.basis) {
        json v = json::array();
        for (const auto& x : b) v.push_back(number(x));
        doc["plane_basis"].push_back(v);
    }
    if (all_nodes) {
        auto g = pc::curve_genus_report(curve, pts);
        doc["genus"] = {{"degree", g.degree}, {"arithmetic", g.arithmetic_genus}, {"geometric", g.geometric_genus}};
    }
    if (as_json) {
        std::cout << doc.dump(2) << "\n";
    } else {
        table(rows);
        std::cout << "\n" << pc::point_count(pts) << " singular point(s)";
        if (all_nodes)
            std::cout << "; degree " << doc["genus"]["degree"] << ", arithmetic genus " << doc["genus"]["arithmetic"] << ", geometric genus "
                      << doc["genus"]["geometric"];
        std::cout << "\n";
    }
    return kOk;
}

// verify --------------------------------------------------------------------

struct VerifyArgs {
    bool all = false;
    std::vector<std::string> checks;
    std::string input;
};

int run_verify(const VerifyArgs& a, bool as_json) {
    namespace v = cyv::verify;
    if (a.all && !a.checks.empty()) throw UsageError("--all and --check are exclusive");
    v::Options opts;
    if (!a.input.empty()) opts.pencil_path = a.input;
    auto report = v::run_all(a.all ? std::vector<std::string>{} : a.checks, opts);
    if (as_json) {
        std::cout << v::to_json(report).dump(2) << "\n";
    } else {
        std::vector<std::vector<std::string>> rows{{"check", "status", "ms"}};
        for (const auto& c : report.checks) {
            std::ostringstream ms;
            ms << std::fixed << std::setprecision(1) << c.ms;
            rows.push_back({c.name, v::to_string(c.status()), ms.str()});
            for (const auto& i : c.items)
                if (!i.ok()) rows.push_back({"  " + i.key, "expected " + i.expected.dump(), "got " + i.computed.dump()});
            if (!c.error.empty()) rows.push_back({"  error", c.error, ""});
        }
        table(rows);
        std::cout << "\npass " << report.count(v::Status::Pass) << ", evidence " << report.count(v::Status::Evidence) << ", fail "
                  << report.count(v::Status::Fail) << "\n";
    }
    return report.ok() ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Schubert calculus, Bott cohomology, Chern classes and quadric pencils"};
    app.require_subcommand(1, 1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Emit a single JSON document");

    SchubertArgs sa;
    auto* schubert = app.add_subcommand("schubert", "Products and integrals in the Chow ring of G(k,n)");
    schubert->add_option("--ring", sa.ring, "Ring, e.g. g(3,5)")->required();
    schubert->add_option("--multiply", sa.multiply, "Two class expressions")->expected(2);
    schubert->add_option("--integrate", sa.integrate, "Class expression of top degree");
    schubert->add_flag("--json", as_json, "Emit JSON");

    BottArgs ba;
    auto* bott = app.add_subcommand("bott", "Cohomology of a homogeneous bundle on G(r,n)");
    bott->add_option("--n", ba.n, "Ambient dimension")->required();
    bott->add_option("--r", ba.r, "Subspace dimension")->required();
    bott->add_option("--beta", ba.beta, "Comma-separated weight on S, length r")->required();
    bott->add_option("--gamma", ba.gamma, "Comma-separated weight on Q^*, length n-r")->required();
    bott->add_option("--twist", ba.twist, "Tensor with O(t)");
    bott->add_flag("--json", as_json, "Emit JSON");

    ChernArgs ca;
    auto* chern = app.add_subcommand("chern", "Universal Chern and Segre polynomials");
    chern->add_option("--op", ca.op, "sym2, wedge2, tensor or segre")->required()->check(CLI::IsMember({"sym2", "wedge2", "tensor", "segre"}));
    chern->add_option("--rank", ca.rank, "Rank of the bundle")->required();
    chern->add_option("--rank2", ca.rank2, "Rank of the second factor for tensor");
    chern->add_option("--degree", ca.degree, "Highest degree to print");
    chern->add_flag("--json", as_json, "Emit JSON");

    PencilArgs pa;
    auto* pencil = app.add_subcommand("pencil", "Symmetroid, nodes and finite-field scans of a pencil of quadrics");
    pencil->add_option("--input", pa.input, "Pencil JSON file")->required();
    pencil->add_flag("--symmetroid", pa.symmetroid, "Print det A_lambda");
    pencil->add_flag("--nodes", pa.nodes, "Singular points of the plane section through the line <z,w>");
    pencil->add_flag("--scan-base", pa.scan_base, "Count base points over F_p");
    pencil->add_flag("--scan-rank3", pa.scan_rank3, "Count rank <= 3 points on the plane over F_p");
    pencil->add_option("--z", pa.z, "Comma-separated vector");
    pencil->add_option("--w", pa.w, "Comma-separated vector");
    pencil->add_option("--prime", pa.prime, "Prime for scans");
    pencil->add_flag("--json", as_json, "Emit JSON");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run the verification checks");
    verify->add_flag("--all", va.all, "Run every check (the default)");
    verify->add_option("--check", va.checks, "Check names")->expected(1, -1);
    verify->add_option("--input", va.input, "Pencil JSON for check_example_pencil");
    verify->add_flag("--json", as_json, "Emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*schubert) return run_schubert(sa, as_json);
        if (*bott) return run_bott(ba, as_json);
        if (*chern) return run_chern(ca, as_json);
        if (*pencil) return run_pencil(pa, as_json);
        if (*verify) return run_verify(va, as_json);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const cyv::SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return kInput;
    } catch (const cyv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    }
    return kUsage;
}
