#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"
#include "tci/order.hpp"

using namespace tci;

namespace {

Monomial m3(int a, int b, int c) {
    return Monomial::from_exponents({a, b, c});
}

std::vector<MonomialOrder> all_orders() {
    return {MonomialOrder::lex(3), MonomialOrder::grevlex(3),
            MonomialOrder::blocks(3, {{0}, {1, 2}},
                                  {MonomialOrder::InnerKind::grevlex,
                                   MonomialOrder::InnerKind::grevlex}),
            MonomialOrder::blocks(3, {{2, 1}, {0}},
                                  {MonomialOrder::InnerKind::lex,
                                   MonomialOrder::InnerKind::lex}),
            MonomialOrder::weighted({3, 1, 1}),
            MonomialOrder::grevlex_sequence({2, 0, 1})};
}

}  // namespace

TEST_CASE("lex and grevlex disagree where expected") {
    auto lex = MonomialOrder::lex(3);
    auto grevlex = MonomialOrder::grevlex(3);
    // x > y^5 in lex, x < y^5 in grevlex (degree first)
    CHECK(lex.less(m3(0, 5, 0), m3(1, 0, 0)));
    CHECK(grevlex.less(m3(1, 0, 0), m3(0, 5, 0)));
    // grevlex tie-break: smaller in the LAST variable wins at equal degree
    CHECK(grevlex.less(m3(0, 1, 1), m3(1, 1, 0)));
}

TEST_CASE("block order eliminates its first block") {
    auto ord = MonomialOrder::blocks(3, {{0}, {1, 2}},
                                     {MonomialOrder::InnerKind::grevlex,
                                      MonomialOrder::InnerKind::grevlex});
    // any power of x dominates anything free of x
    CHECK(ord.less(m3(0, 9, 9), m3(1, 0, 0)));
}

TEST_CASE("order axioms on random monomial triples") {
    th::Rng rng(31);
    for (const auto& ord : all_orders()) {
        for (int t = 0; t < 400; ++t) {
            auto a = rng.mono(3, 5);
            auto b = rng.mono(3, 5);
            auto c = rng.mono(3, 5);
            // totality
            int rel = (a == b) ? 0 : (ord.less(a, b) ? -1 : 1);
            if (rel == 1) CHECK(ord.less(b, a));
            if (rel == -1) CHECK(!ord.less(b, a));
            // multiplicativity: a < b implies ac < bc
            if (ord.less(a, b))
                CHECK(ord.less(a * c, b * c));
            // antisymmetry against equality
            if (a == b) CHECK((!ord.less(a, b) && !ord.less(b, a)));
            // transitivity
            if (ord.less(a, b) && ord.less(b, c)) CHECK(ord.less(a, c));
        }
        // well-order floor: 1 is minimal
        auto one = Monomial::from_exponents({0, 0, 0});
        for (int t = 0; t < 100; ++t) {
            auto a = rng.mono(3, 5);
            if (!(a == one)) CHECK(ord.less(one, a));
        }
    }
}
