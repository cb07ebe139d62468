#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"
#include "tci/groebner.hpp"

using namespace tci;
using th::ideal_of;
using th::pp;

namespace {

Polynomial mono(const ContextPtr& ctx, const Monomial& m) {
    Polynomial::TermMap t;
    t.emplace(m, GaussianRational(1));
    return Polynomial::from_terms(ctx, std::move(t));
}

// S-polynomial of two monic basis elements, built from first principles so the
// check does not trust the engine's own pair handling.
Polynomial s_pair(const Polynomial& f, const Polynomial& g,
                  const MonomialOrder& ord) {
    auto mf = f.leading_term(ord).first;
    auto mg = g.leading_term(ord).first;
    auto l = Monomial::lcm(mf, mg);
    auto ctx = f.context();
    return mono(ctx, l.divided_by(mf)) * f - mono(ctx, l.divided_by(mg)) * g;
}

} // namespace

TEST_CASE("normal form depends on the order") {
    auto ctx = VariableContext::make({"x", "y"});
    auto f = pp("x^2*y", ctx);
    std::vector<Polynomial> gens = {pp("y - x^2", ctx)};
    Budget b;
    // x > y: leading term of y - x^2 is x^2, so x^2*y -> y*y
    auto lex_xy = MonomialOrder::lex(2);
    auto basis1 = groebner_basis(gens, lex_xy, b);
    CHECK(normal_form(f, basis1, lex_xy, b) == pp("y^2", ctx));
    // y > x: leading term is y, so x^2*y -> x^4
    auto lex_yx = MonomialOrder::blocks(2, {{1}, {0}},
                                        {MonomialOrder::InnerKind::lex,
                                         MonomialOrder::InnerKind::lex});
    auto basis2 = groebner_basis(gens, lex_yx, b);
    CHECK(normal_form(f, basis2, lex_yx, b) == pp("x^4", ctx));
}

TEST_CASE("reduced basis of the twisted cubic") {
    auto ctx = VariableContext::make({"x", "y", "z"});
    Budget b;
    auto I = ideal_of(ctx, {"y - x^2", "z - x^3"});
    auto ord = MonomialOrder::grevlex(3);
    const auto& basis = I.groebner(ord, b);
    CHECK(verify_groebner(basis, ord, b));
    // membership through the basis
    CHECK(normal_form(pp("y^3 - z^2", ctx), basis, ord, b) ==
          Polynomial::zero(ctx));
    CHECK(normal_form(pp("y^3 - z^2 + 1", ctx), basis, ord, b) == pp("1", ctx));
}

TEST_CASE("unit ideal collapses") {
    auto ctx = VariableContext::make({"x", "y"});
    Budget b;
    auto I = ideal_of(ctx, {"x", "x + 1"});
    const auto& basis = I.groebner(MonomialOrder::grevlex(2), b);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == pp("1", ctx));
    CHECK(basis_has_unit(basis));
}

TEST_CASE("zero ideal has the empty basis") {
    auto ctx = VariableContext::make({"x", "y"});
    Budget b;
    CHECK(Ideal::zero(ctx).groebner(MonomialOrder::grevlex(2), b).empty());
}

TEST_CASE("every S-polynomial of a computed basis reduces to zero") {
    auto ctx = VariableContext::make({"x", "y"});
    th::Rng rng(47);
    Budget b;
    auto ord = MonomialOrder::grevlex(2);
    int cases = 0;
    for (int t = 0; t < 2000 && cases < 1000; ++t) {
        std::vector<Polynomial> gens = {rng.nonzero_poly(ctx, 3, 3),
                                        rng.nonzero_poly(ctx, 3, 3)};
        auto basis = groebner_basis(gens, ord, b);
        if (basis.empty()) continue;
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i + 1; j < basis.size(); ++j) {
                auto s = s_pair(basis[i], basis[j], ord);
                CHECK(normal_form(s, basis, ord, b) == Polynomial::zero(ctx));
                ++cases;
            }
        // original generators lie in the ideal spanned by the basis
        for (const auto& g : gens)
            CHECK(reduces_to_zero(g, basis, ord, b));
    }
    CHECK(cases >= 1000);
    MESSAGE("S-pair reductions checked: ", cases);
}

TEST_CASE("basis is autoreduced and monic") {
    auto ctx = VariableContext::make({"x", "y", "z"});
    th::Rng rng(53);
    Budget b;
    auto ord = MonomialOrder::grevlex(3);
    for (int t = 0; t < 40; ++t) {
        auto I = Ideal(ctx, {rng.nonzero_poly(ctx, 3, 2),
                             rng.nonzero_poly(ctx, 3, 2)});
        const auto& basis = I.groebner(ord, b);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            CHECK(basis[i].leading_term(ord).second == GaussianRational(1));
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (i == j) continue;
                // no leading term divides any term of another element
                auto lead = basis[j].leading_term(ord).first;
                for (const auto& [m, c] : basis[i].terms())
                    CHECK(!lead.divides(m));
            }
        }
    }
}
