#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "helpers.hpp"
#include "tci/cones.hpp"

using namespace tci;
using th::ideal_of;

namespace {

struct Trio {
    Variety X;
    ConeResult c3, c4, c5;
};

Budget& budget() {
    static Budget b(8'000'000'000ull);
    return b;
}

// Fixtures are small; cones are computed once and shared across cases.
const Trio& trio(const std::string& name) {
    static std::map<std::string, Trio> cache;
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    static const std::map<std::string,
                          std::pair<std::vector<std::string>,
                                    std::vector<std::string>>>
        defs = {
            {"line", {{"x", "y"}, {"y"}}},
            {"plane2", {{"x", "y", "z"}, {"z"}}},
            {"parabola", {{"x", "y"}, {"y - x^2"}}},
            {"hyperbola", {{"x", "y"}, {"x*y - 1"}}},
            {"cusp", {{"x", "y"}, {"y^2 - x^3"}}},
            {"twisted", {{"x", "y", "z"}, {"y - x^2", "z - x^3"}}},
        };
    const auto& [vars, gens] = defs.at(name);
    Budget& b = budget();
    Variety X = th::variety_of(vars, gens, b);
    Trio t{X, c3_infinity(X, b), c4_infinity(X, b), c5_infinity(X, b)};
    return cache.emplace(name, std::move(t)).first->second;
}

void expect_cone(const ConeResult& r, const std::vector<std::string>& gens,
                 int dim, Purity purity) {
    auto expected = gens.empty() ? Ideal::zero(r.ideal.context())
                                 : ideal_of(r.ideal.context(), gens);
    CHECK(same_variety(r.ideal, expected, budget()));
    CHECK(r.dim == dim);
    CHECK(r.purity == purity);
}

} // namespace

TEST_CASE("line: every cone is the line itself") {
    const auto& t = trio("line");
    expect_cone(t.c3, {"y"}, 1, Purity::pure);
    expect_cone(t.c4, {"y"}, 1, Purity::pure);
    expect_cone(t.c5, {"y"}, 1, Purity::pure);
}

TEST_CASE("plane: every cone is the plane itself") {
    const auto& t = trio("plane2");
    expect_cone(t.c3, {"z"}, 2, Purity::pure);
    expect_cone(t.c4, {"z"}, 2, Purity::pure);
    expect_cone(t.c5, {"z"}, 2, Purity::pure);
}

TEST_CASE("parabola: vertical escape, tangents vertical, secants fill the plane") {
    const auto& t = trio("parabola");
    expect_cone(t.c3, {"x"}, 1, Purity::pure);
    expect_cone(t.c4, {"x"}, 1, Purity::pure);
    expect_cone(t.c5, {}, 2, Purity::pure);
}

TEST_CASE("hyperbola: both axes escape, secants fill the plane") {
    const auto& t = trio("hyperbola");
    expect_cone(t.c3, {"x*y"}, 1, Purity::pure);
    expect_cone(t.c4, {"x*y"}, 1, Purity::pure);
    expect_cone(t.c5, {}, 2, Purity::pure);
}

TEST_CASE("cusp: vertical escape, secants fill the plane") {
    const auto& t = trio("cusp");
    expect_cone(t.c3, {"x"}, 1, Purity::pure);
    expect_cone(t.c4, {"x"}, 1, Purity::pure);
    expect_cone(t.c5, {}, 2, Purity::pure);
}

TEST_CASE("twisted cubic: z-axis escape, thick tangent scheme, plane of secants") {
    const auto& t = trio("twisted");
    // the escape-direction scheme is cut out by the 2x2 minors of
    // [[x, y], [y, z]]; its radical is the z-axis <x, y>
    CHECK(same_variety(t.c3.ideal, ideal_of(t.c3.ideal.context(), {"x", "y"}),
                       budget()));
    CHECK(t.c3.dim == 1);
    CHECK(t.c3.purity == Purity::unknown);
    CHECK(same_variety(t.c4.ideal, ideal_of(t.c4.ideal.context(), {"x", "y"}),
                       budget()));
    CHECK(t.c4.dim == 1);
    // the tangent scheme carries a richer exact structure than its radical
    CHECK(ideal_equal(
        t.c4.ideal,
        ideal_of(t.c4.ideal.context(), {"x^2", "x*y", "4*x*z - 3*y^2", "y^3"}),
        budget()));
    expect_cone(t.c5, {"x"}, 2, Purity::pure);
}

TEST_CASE("cone results carry original coordinates and stage diagnostics") {
    const auto& t = trio("twisted");
    CHECK(t.c3.ideal.context()->names() ==
          std::vector<std::string>{"x", "y", "z"});
    CHECK(t.c3.build == nullptr);
    REQUIRE(t.c4.build != nullptr);
    CHECK(!t.c4.build->stages.empty());
    REQUIRE(t.c5.build != nullptr);
    CHECK(!t.c5.build->stages.empty());
    CHECK(t.c3.warnings.empty());
}

TEST_CASE("cone kind names round-trip") {
    CHECK(cone_kind_from_name("c3") == ConeKind::c3);
    CHECK(cone_kind_from_name("c4") == ConeKind::c4);
    CHECK(cone_kind_from_name("c5") == ConeKind::c5);
    CHECK(std::string(cone_kind_name(ConeKind::c5)) == "c5");
    CHECK_THROWS_AS(cone_kind_from_name("c6"), input_error);
}

TEST_CASE("inclusion chain and dimension window hold on every fixture") {
    struct Row {
        const char* name;
        int k, c3, c4, c5;
    };
    const Row rows[] = {
        {"line", 1, 1, 1, 1},     {"plane2", 2, 2, 2, 2},
        {"parabola", 1, 1, 1, 2}, {"hyperbola", 1, 1, 1, 2},
        {"cusp", 1, 1, 1, 2},     {"twisted", 1, 1, 1, 2},
    };
    for (const auto& row : rows) {
        CAPTURE(row.name);
        const auto& t = trio(row.name);
        auto rep = verify_inclusions(t.X, t.c3, t.c4, t.c5, budget());
        CHECK(rep.pass());
        CHECK(rep.k == row.k);
        CHECK(rep.dim_c3 == row.c3);
        CHECK(rep.dim_c4 == row.c4);
        CHECK(rep.dim_c5 == row.c5);
        CHECK(rep.c4_vanishes_on_c3);
        CHECK(rep.c5_vanishes_on_c4);
        CHECK(rep.dim_c3_is_k);
        CHECK(rep.dim_window);
        CHECK(rep.failing_generator.empty());
        int bound = std::min(rep.ambient, 2 * row.k + 1);
        CHECK(row.k <= rep.dim_c4);
        CHECK(rep.dim_c4 <= rep.dim_c5);
        CHECK(rep.dim_c5 <= bound);
    }
}

TEST_CASE("bounded varieties have no cone at infinity") {
    Budget b;
    auto X = th::variety_of({"x", "y"}, {"x", "y"}, b);
    CHECK_THROWS_AS(c3_infinity(X, b), input_error);
}

TEST_CASE("a starved budget raises a resource error") {
    Budget big;
    auto X = th::variety_of({"x", "y", "z"}, {"y - x^2", "z - x^3"}, big);
    Budget tiny(50);
    CHECK_THROWS_AS(c5_infinity(X, tiny), resource_error);
}
