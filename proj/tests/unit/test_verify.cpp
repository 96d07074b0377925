#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "cyv/verify.hpp"

using namespace cyv;
using namespace cyv::verify;

namespace {

nlohmann::json strip_ms(nlohmann::json doc) {
    for (auto& c : doc["checks"]) c.erase("ms");
    return doc;
}

std::string write_temp(const nlohmann::json& doc, const std::string& name) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << doc.dump();
    return path.string();
}

}  // namespace

TEST_CASE("every fast check passes") {
    for (auto* f : {&check_c1c2, &check_curve_degree_genus, &check_brauer, &check_X_invariants, &check_Y_degree, &check_sym2_identities,
                    &check_hilb_curve, &check_resolution_ranks, &check_bott_suite}) {
        auto c = (*f)();
        INFO(to_json(c).dump(2));
        CHECK(c.status() != Status::Fail);
        CHECK_FALSE(c.items.empty());
    }
    CHECK(check_Y_degree().status() == Status::Evidence);
    CHECK(check_c1c2().status() == Status::Pass);
}

TEST_CASE("individual anchors") {
    CHECK(check_brauer().find("N^4")->computed == 40);
    CHECK(check_brauer().find("same integrand on G(2,5)")->computed == 35);
    CHECK(check_hilb_curve().find("genus")->computed == 14);
    CHECK(check_X_invariants().find("c3")->computed == -50);
}

TEST_CASE("selection and unknown names") {
    auto r = run_all({"check_brauer"});
    REQUIRE(r.checks.size() == 1);
    CHECK(r.checks[0].name == "check_brauer");
    try {
        run_all({"nope"});
        FAIL("expected UnknownCheckName");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnknownCheckName);
    }
}

TEST_CASE("full run, report schema and determinism") {
    auto r = run_all();
    CHECK(r.checks.size() >= 9);
    CHECK(r.ok());
    auto doc = to_json(r);
    CHECK(validate_report(doc).empty());
    CHECK(strip_ms(doc) == strip_ms(to_json(run_all())));
    CHECK(doc["metadata"]["assumptions"][0]["value"] == 4);

    auto untagged = doc;
    untagged["checks"][0]["items"][0].erase("provenance");
    CHECK_FALSE(validate_report(untagged).empty());
    auto miscounted = doc;
    miscounted["summary"]["pass"] = 0;
    CHECK_FALSE(validate_report(miscounted).empty());
}

TEST_CASE("a perturbed pencil fails without crashing") {
    auto doc = pencil::Pencil::load(default_pencil_path()).to_json();
    // A diagonal entry keeps symmetry but moves the pencil.
    doc["matrices"][0][1][1] = "1";
    auto c = check_example_pencil(write_temp(doc, "cyv_perturbed_pencil.json"));
    CHECK(c.status() == Status::Fail);

    auto doc2 = pencil::Pencil::load(default_pencil_path()).to_json();
    doc2["matrices"][2][0][0] = "3";
    auto c2 = check_example_pencil(write_temp(doc2, "cyv_perturbed_pencil2.json"));
    CHECK(c2.status() == Status::Fail);

    CHECK_THROWS_AS(check_example_pencil("/nonexistent/pencil.json"), Error);
}
