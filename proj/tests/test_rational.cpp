#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"
#include "tci/rational.hpp"

using namespace tci;

TEST_CASE("construction and normal form") {
    CHECK(GaussianRational(3).str() == "3");
    CHECK(GaussianRational::from_ratio(2, 4).str() == "1/2");
    CHECK(GaussianRational::from_ratio(-2, 4).str() == "-1/2");
    CHECK(GaussianRational::i().str() == "i");
    CHECK(GaussianRational().is_zero());
    CHECK(GaussianRational(mpq_class(1, 2), mpq_class(3, 4)).str() ==
          "1/2 + 3/4*i");
}

TEST_CASE("i squares to -1") {
    auto i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
}

TEST_CASE("division by zero is rejected") {
    CHECK_THROWS_AS(GaussianRational(1) / GaussianRational(),
                    const input_error&);
}

TEST_CASE("complex conversion") {
    auto z = GaussianRational(mpq_class(1, 2), mpq_class(-3)).to_complex();
    CHECK(z.real() == doctest::Approx(0.5));
    CHECK(z.imag() == doctest::Approx(-3.0));
}

TEST_CASE("field axioms on 1000 random pairs") {
    th::Rng rng(101);
    int checked = 0;
    for (int t = 0; t < 1000; ++t) {
        auto a = rng.coeff();
        auto b = rng.coeff();
        auto c = rng.coeff();
        CHECK((a + b) - b == a);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK((a * b) / b == a);
        ++checked;
    }
    CHECK(checked == 1000);
}
