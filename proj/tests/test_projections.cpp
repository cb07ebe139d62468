#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"
#include "tci/projections.hpp"

using namespace tci;
using th::axes;
using th::ideal_of;

namespace {

Budget& budget() {
    static Budget b(8'000'000'000ull);
    return b;
}

const CheckItem* find_item(const std::vector<CheckItem>& items,
                           const std::string& name) {
    for (const auto& it : items)
        if (it.name == name) return &it;
    return nullptr;
}

} // namespace

TEST_CASE("verdict names") {
    CHECK(verdict_name(Verdict::verified) == "verified");
    CHECK(verdict_name(Verdict::hypothesis_not_satisfied) ==
          "hypothesis-not-satisfied");
    CHECK(verdict_name(Verdict::hypothesis_not_certified) ==
          "hypothesis-not-certified");
    CHECK(verdict_name(Verdict::failed) == "failed");
}

TEST_CASE("cone and subspace meet only at the origin, or not") {
    Budget& b = budget();
    auto X = th::variety_of({"x", "y"}, {"y - x^2"}, b);
    auto c4 = c4_infinity(X, b); // tangent directions: the y-axis V(x)
    CHECK(cone_subspace_trivial(c4, axes(2, {0}), b));
    CHECK(!cone_subspace_trivial(c4, axes(2, {1}), b));
    // the zero subspace is trivially transverse
    CHECK(cone_subspace_trivial(c4, LinearSubspace::make(2, {}), b));
    // ambient mismatch is an input error
    CHECK_THROWS_AS(cone_subspace_trivial(c4, axes(3, {0}), b), input_error);
}

TEST_CASE("transverse subspace search succeeds across seeds") {
    Budget& b = budget();
    auto X = th::variety_of({"x", "y"}, {"y - x^2"}, b);
    auto c3 = c3_infinity(X, b);
    for (unsigned long long seed : {1ull, 2ull, 3ull}) {
        auto W = find_transverse_subspace(c3, 1, seed, b);
        CHECK(W.dim() == 1);
        CHECK(check_proper(c3, W, b));
    }
    // a 2-dimensional W cannot avoid a 1-dimensional cone in the plane
    CHECK_THROWS_AS(find_transverse_subspace(c3, 2, 1, b), input_error);
}

TEST_CASE("sheet counts equal degrees across seeds") {
    Budget& b = budget();
    struct Row {
        std::vector<std::string> vars, gens;
        std::vector<int> w_axes;
        long long sheets;
    };
    const Row rows[] = {
        {{"x", "y"}, {"y - x^2"}, {0}, 2},
        {{"x", "y"}, {"y^2 - x^3"}, {0}, 3},
        {{"x", "y", "z"}, {"y - x^2", "z - x^3"}, {0, 1}, 3},
        {{"x", "y"}, {"y"}, {1}, 1},
    };
    for (const auto& row : rows) {
        auto X = th::variety_of(row.vars, row.gens, b);
        auto c3 = c3_infinity(X, b);
        auto W = axes(static_cast<int>(row.vars.size()), row.w_axes);
        for (unsigned long long seed : {11ull, 22ull, 33ull})
            CHECK(sheet_count(X, c3, W, seed, b) == row.sheets);
    }
}

TEST_CASE("sheet counting rejects an improper projection") {
    Budget& b = budget();
    auto X = th::variety_of({"x", "y"}, {"y - x^2"}, b);
    auto c3 = c3_infinity(X, b);
    // the y-axis lies inside the escape cone: projection along it is not
    // proper over a complement
    CHECK(!check_proper(c3, axes(2, {1}), b));
    CHECK_THROWS_AS(sheet_count(X, c3, axes(2, {1}), 1, b), input_error);
    // W of the wrong dimension
    CHECK_THROWS_AS(sheet_count(X, c3, LinearSubspace::make(2, {}), 1, b),
                    input_error);
}

TEST_CASE("critical locus worked examples") {
    Budget& b = budget();
    auto cusp = th::variety_of({"x", "y"}, {"y^2 - x^3"}, b);
    auto crit = critical_locus(cusp, axes(2, {0}), b);
    // projecting the cusp onto the y-axis along the x-axis: critical where
    // 3x^2 = 0 on the curve
    CHECK(same_variety(crit, ideal_of(cusp.context(), {"x", "y"}), b));
    auto line = th::variety_of({"x", "y"}, {"y"}, b);
    // projection of the x-axis along the y-axis is everywhere regular
    CHECK(dimension(critical_locus(line, axes(2, {1}), b), b) == -1);
}

TEST_CASE("projection-singularity coincidence on the cusp") {
    Budget& b = budget();
    auto X = th::variety_of({"x", "y"}, {"y^2 - x^3"}, b);
    auto rep = verify_theorem_1_2(X, axes(2, {0}), b);
    CHECK(rep.verdict == Verdict::verified);
    auto* hyp = find_item(rep.hypotheses, "tangent-limit cone meets the fibre subspace only at 0");
    REQUIRE(hyp != nullptr);
    CHECK(hyp->pass);
    // the critical locus is exactly the singular point: no discrepancy
    CHECK(rep.data.at("discrepancy_dim") == "-1");
    CHECK(rep.data.at("discrepancy_count") == "0");
}

TEST_CASE("projection-singularity coincidence on the smooth parabola") {
    Budget& b = budget();
    auto X = th::variety_of({"x", "y"}, {"y - x^2"}, b);
    auto rep = verify_theorem_1_2(X, axes(2, {0}), b);
    CHECK(rep.verdict == Verdict::verified);
    // one genuine critical point (the vertex) with no singularity to blame
    CHECK(rep.data.at("discrepancy_dim") == "0");
    CHECK(rep.data.at("discrepancy_count") == "1");
}

TEST_CASE("projection-singularity coincidence needs the hypothesis") {
    Budget& b = budget();
    auto X = th::variety_of({"x", "y"}, {"y - x^2"}, b);
    auto rep = verify_theorem_1_2(X, axes(2, {1}), b);
    CHECK(rep.verdict == Verdict::hypothesis_not_satisfied);
    auto* hyp = find_item(rep.hypotheses, "tangent-limit cone meets the fibre subspace only at 0");
    REQUIRE(hyp != nullptr);
    CHECK(!hyp->pass);
}

TEST_CASE("hypersurface image of the twisted cubic, good index") {
    Budget& b = budget();
    auto X = th::variety_of({"x", "y", "z"}, {"y - x^2", "z - x^3"}, b);
    auto V = axes(3, {2});
    auto W = axes(3, {0, 1});
    auto split = Splitting::make(V, W);
    auto rep = verify_theorem_1_3(X, split, 2, b);
    CHECK(rep.verdict == Verdict::verified);
    CHECK(rep.data.at("image_generator") == "w2^3 - u1^2");
    for (const auto& c : rep.conclusions) {
        CAPTURE(c.name);
        CHECK(c.pass);
    }
}

TEST_CASE("hypersurface image of the twisted cubic, degenerate index") {
    Budget& b = budget();
    auto X = th::variety_of({"x", "y", "z"}, {"y - x^2", "z - x^3"}, b);
    auto split = Splitting::make(axes(3, {2}), axes(3, {0, 1}));
    auto rep = verify_theorem_1_3(X, split, 1, b);
    CHECK(rep.verdict == Verdict::hypothesis_not_satisfied);
}

TEST_CASE("hypersurface image of a line splitting") {
    Budget& b = budget();
    auto X = th::variety_of({"x", "y"}, {"y"}, b);
    auto split = Splitting::make(axes(2, {0}), axes(2, {1}));
    auto rep = verify_theorem_1_3(X, split, 1, b);
    CHECK(rep.verdict == Verdict::verified);
}

TEST_CASE("hypersurface image validates the splitting and the index") {
    Budget& b = budget();
    auto X = th::variety_of({"x", "y", "z"}, {"y - x^2", "z - x^3"}, b);
    auto split = Splitting::make(axes(3, {2}), axes(3, {0, 1}));
    CHECK_THROWS_AS(verify_theorem_1_3(X, split, 0, b), input_error);
    CHECK_THROWS_AS(verify_theorem_1_3(X, split, 3, b), input_error);
    // V must match dim X
    auto bad = Splitting::make(axes(3, {2, 1}), axes(3, {0}));
    CHECK_THROWS_AS(verify_theorem_1_3(X, bad, 1, b), input_error);
}

TEST_CASE("linearity criterion accepts affine subspaces") {
    Budget& b = budget();
    struct Row {
        std::vector<std::string> vars, gens;
    };
    const Row rows[] = {{{"x", "y"}, {"y"}}, {{"x", "y", "z"}, {"z"}}};
    for (const auto& row : rows) {
        auto X = th::variety_of(row.vars, row.gens, b);
        auto rep = check_affine_linearity(X, b);
        CHECK(rep.verdict == Verdict::verified);
        CHECK(rep.data.at("degree") == "1");
        for (const auto& c : rep.conclusions) CHECK(c.pass);
    }
}

TEST_CASE("linearity criterion rejects curved fixtures at the hypothesis") {
    Budget& b = budget();
    struct Row {
        std::vector<std::string> vars, gens;
    };
    const Row rows[] = {
        {{"x", "y"}, {"y - x^2"}},
        {{"x", "y"}, {"x*y - 1"}},
        {{"x", "y"}, {"y^2 - x^3"}},
        {{"x", "y", "z"}, {"y - x^2", "z - x^3"}},
    };
    for (const auto& row : rows) {
        auto X = th::variety_of(row.vars, row.gens, b);
        auto rep = check_affine_linearity(X, b);
        CHECK(rep.verdict == Verdict::hypothesis_not_satisfied);
        CHECK(rep.data.at("dim_c5") == "2");
        // contrapositive: a non-linear set never presents a pure linear
        // secant cone of the right dimension
        CHECK(rep.data.at("dim_c5") != std::to_string(X.dim()));
    }
}
