#include "tci/rational.hpp"

#include <vector>

namespace tci {

std::string rational_str(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

// imaginary part as "c/d*i" with the sign carried by the numerator; "i" when
// the coefficient is 1 so round-trips stay short.
std::string imag_str(const mpq_class& m) {
    if (m == 1) return "i";
    if (m == -1) return "-1*i";
    return rational_str(m) + "*i";
}

} // namespace

namespace {

// Gaussian integers as mpz pairs, for the content computation.
struct ZI {
    mpz_class a, b;
    bool zero() const { return a == 0 && b == 0; }
};

mpz_class round_quotient(const mpz_class& x, const mpz_class& n) {
    // nearest integer to x/n for n > 0, |x/n - q| <= 1/2
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), mpz_class(2 * x + n).get_mpz_t(),
               mpz_class(2 * n).get_mpz_t());
    return q;
}

ZI zi_mul(const ZI& x, const ZI& y) {
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a};
}

// Euclidean gcd in Z[i]; the norm strictly drops each round.
ZI zi_gcd(ZI x, ZI y) {
    while (!y.zero()) {
        mpz_class n = y.a * y.a + y.b * y.b;
        ZI xc = zi_mul(x, {y.a, mpz_class(-y.b)});
        ZI q{round_quotient(xc.a, n), round_quotient(xc.b, n)};
        ZI qy = zi_mul(q, y);
        ZI r{x.a - qy.a, x.b - qy.b};
        x = y;
        y = r;
    }
    return x;
}

} // namespace

GaussianRational primitive_scale(const std::vector<const GaussianRational*>& cs) {
    mpz_class den_lcm(1);
    for (const GaussianRational* c : cs) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                c->re().get_den().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                c->im().get_den().get_mpz_t());
    }
    ZI g{0, 0};
    for (const GaussianRational* c : cs) {
        mpq_class re = c->re() * den_lcm;
        mpq_class im = c->im() * den_lcm;
        g = zi_gcd(g, ZI{re.get_num(), im.get_num()});
        if (g.a == 1 && g.b == 0) break;
    }
    if (g.zero()) throw internal_error("primitive_scale of all-zero coefficients");
    return GaussianRational(mpq_class(den_lcm), mpq_class(0)) *
           GaussianRational(mpq_class(g.a), mpq_class(g.b)).inverse();
}

std::string GaussianRational::str() const {
    if (im_ == 0) return rational_str(re_);
    if (re_ == 0) return imag_str(im_);
    std::string s = rational_str(re_);
    if (im_ > 0)
        s += " + " + imag_str(im_);
    else
        s += " - " + imag_str(mpq_class(-im_));
    return s;
}

} // namespace tci
