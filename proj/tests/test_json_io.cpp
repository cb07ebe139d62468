#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "helpers.hpp"
#include "tci/json_io.hpp"

using namespace tci;

namespace {

std::string write_temp(const std::string& name, const std::string& text) {
    std::string path = "/tmp/tci_json_" + name;
    std::ofstream out(path);
    out << text;
    return path;
}

} // namespace

TEST_CASE("file loading errors name the file") {
    CHECK_THROWS_WITH_AS(load_json_file("/tmp/tci_json_missing_file.json"),
                         doctest::Contains("cannot open"), input_error);
    auto path = write_temp("broken.json", "{\"vars\": [");
    CHECK_THROWS_WITH_AS(load_json_file(path), doctest::Contains("invalid JSON"),
                         input_error);
}

TEST_CASE("variety loading and validation") {
    Budget b;
    json good = {{"vars", {"x", "y"}}, {"generators", {"y - x^2"}}};
    auto X = variety_from_json(good, b);
    CHECK(X.dim() == 1);
    CHECK(X.ambient_dimension() == 2);

    json claimed = good;
    claimed["claimed_dim"] = 1;
    CHECK(variety_from_json(claimed, b).dim() == 1);
    claimed["claimed_dim"] = 2;
    CHECK_THROWS_WITH_AS(variety_from_json(claimed, b),
                         doctest::Contains("declared dimension"), input_error);

    CHECK_THROWS_AS(variety_from_json(json{{"vars", {"x"}}}, b), input_error);
    json badgen = {{"vars", {"x"}}, {"generators", {"x + q"}}};
    CHECK_THROWS_AS(variety_from_json(badgen, b), input_error);
    json dupvars = {{"vars", {"x", "x"}}, {"generators", {"x"}}};
    CHECK_THROWS_AS(variety_from_json(dupvars, b), input_error);
}

TEST_CASE("subspace loading accepts rational complex entries") {
    json j = {{"ambient", 2},
              {"basis", json::array({json::array({"1/2", "-1*i"})})}};
    auto S = subspace_from_json(j);
    REQUIRE(S.dim() == 1);
    CHECK(S.vectors()[0][0] == GaussianRational::from_ratio(1, 2));
    CHECK(S.vectors()[0][1] ==
          GaussianRational(mpq_class(0), mpq_class(-1)));
    // round-trip through serialization
    auto back = subspace_from_json(subspace_to_json(S));
    CHECK(back.vectors() == S.vectors());

    json bad = j;
    bad["basis"][0][1] = "-i";
    CHECK_THROWS_AS(subspace_from_json(bad), input_error);
    json ragged = j;
    ragged["basis"][0] = json::array({"1"});
    CHECK_THROWS_AS(subspace_from_json(ragged), input_error);
}

TEST_CASE("constants parse in the polynomial grammar") {
    CHECK(constant_from_string("1/2") == GaussianRational::from_ratio(1, 2));
    CHECK(constant_from_string("3 + 1/2*i") ==
          GaussianRational(mpq_class(3), mpq_class(1, 2)));
    CHECK(constant_from_string("0") == GaussianRational(0));
    CHECK_THROWS_AS(constant_from_string("x"), input_error);
    CHECK_THROWS_AS(constant_from_string(""), input_error);
}

TEST_CASE("splitting loading validates complementarity") {
    json good = {
        {"V", {{"ambient", 2}, {"basis", json::array({json::array({"0", "1"})})}}},
        {"W", {{"ambient", 2}, {"basis", json::array({json::array({"1", "0"})})}}}};
    auto sp = splitting_from_json(good);
    CHECK(sp.V.dim() == 1);
    CHECK(sp.W.dim() == 1);
    json bad = good;
    bad["W"] = bad["V"];
    CHECK_THROWS_AS(splitting_from_json(bad), input_error);
}

TEST_CASE("arc loading checks the coordinate list") {
    Budget b;
    auto X = th::variety_of({"x", "y"}, {"y - x^2"}, b);
    json good = {{"vars", {"x", "y"}},
                 {"parameter", "s"},
                 {"components", {"s", "s^2"}}};
    auto arc = arc_from_json(good, X);
    CHECK(arc.parameter() == "s");
    json wrong_order = good;
    wrong_order["vars"] = {"y", "x"};
    CHECK_THROWS_AS(arc_from_json(wrong_order, X), input_error);
    json not_on = good;
    not_on["components"] = {"s", "s^3"};
    CHECK_THROWS_AS(arc_from_json(not_on, X), input_error);
}

TEST_CASE("cone serialization carries a canonical basis") {
    Budget b(8'000'000'000ull);
    auto X = th::variety_of({"x", "y"}, {"y - x^2"}, b);
    auto cone = c4_infinity(X, b);
    auto j = cone_to_json(cone, MonomialOrder::grevlex(2), b);
    CHECK(j.at("which") == "c4");
    CHECK(j.at("variables") == json({"x", "y"}));
    CHECK(j.at("dim") == 1);
    CHECK(j.at("purity") == "pure");
    // generators re-parse to the same variety
    auto ctx = X.context();
    std::vector<std::string> gens = j.at("generators");
    REQUIRE(!gens.empty());
    CHECK(same_variety(th::ideal_of(ctx, gens), cone.ideal, b));
    // serialization is deterministic byte-for-byte
    CHECK(j.dump(2) == cone_to_json(cone, MonomialOrder::grevlex(2), b).dump(2));
}

TEST_CASE("basis strings are primitive integer forms") {
    Budget b;
    auto ctx = VariableContext::make({"x", "y"});
    auto I = th::ideal_of(ctx, {"1/2*x^2 - 1/3*y"});
    auto gens = basis_strings(I, MonomialOrder::grevlex(2), b);
    REQUIRE(gens.size() == 1);
    CHECK(gens[0] == "3*x^2 - 2*y");
}

TEST_CASE("theorem reports serialize verdict and evidence") {
    Budget b(8'000'000'000ull);
    auto X = th::variety_of({"x", "y"}, {"y - x^2"}, b);
    auto rep = verify_theorem_1_2(X, th::axes(2, {0}), b);
    auto j = theorem_to_json(rep);
    CHECK(j.at("verdict") == "verified");
    CHECK(j.at("statement") == rep.statement);
    REQUIRE(j.at("hypotheses").is_array());
    CHECK(j.at("hypotheses")[0].contains("name"));
    CHECK(j.at("hypotheses")[0].contains("pass"));
    CHECK(j.at("data").at("discrepancy_count") == "1");
}

TEST_CASE("membership and region reports serialize their tables") {
    Budget b(8'000'000'000ull);
    auto X = th::variety_of({"x", "y"}, {"y - x^2"}, b);
    auto sctx = VariableContext::make({"s"});
    auto arc = WitnessArc::make(X, "s", {th::pp("s", sctx), th::pp("s^2", sctx)});
    auto sched = SampleSchedule::standard(2);
    auto cone = c4_infinity(X, b);
    auto mem = check_cone_membership(cone,
                                     sample_directions(ConeKind::c4, arc, sched));
    auto mj = membership_to_json(mem);
    CHECK(mj.at("pass") == true);
    CHECK(mj.at("radii").size() == mj.at("residuals").size());
    auto reg = algebraic_region_check({arc}, th::axes(2, {1}), th::axes(2, {0}),
                                      2.0, 0.5, sched);
    auto rj = region_to_json(reg);
    CHECK(rj.at("holds") == true);
    REQUIRE(rj.at("samples").is_array());
    CHECK(rj.at("samples")[0].contains("bound"));
}

TEST_CASE("fixture files on disk load cleanly") {
    const char* dir = std::getenv("CONEINF_FIXTURES");
    if (!dir) return; // only meaningful under the test harness environment
    Budget b;
    for (const char* name :
         {"line", "plane2", "parabola", "hyperbola", "cusp", "twisted"}) {
        CAPTURE(name);
        auto j = load_json_file(std::string(dir) + "/" + name + ".json");
        auto X = variety_from_json(j, b);
        CHECK(X.dim() >= 1);
    }
}
