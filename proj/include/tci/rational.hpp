#ifndef TCI_RATIONAL_HPP
#define TCI_RATIONAL_HPP

#include <complex>
#include <string>
#include <gmpxx.h>

#include "tci/errors.hpp"

namespace tci {

// Element of Q(i): re + im*i with arbitrary-precision rational parts.
// Both parts are kept canonical (coprime, positive denominator); mpq_class
// maintains that through arithmetic, and the string constructors canonicalize.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long v) : re_(v), im_(0) {}
    GaussianRational(mpq_class re, mpq_class im)
        : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }

    static GaussianRational from_ratio(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw input_error("zero denominator in rational literal");
        mpq_class q(num, den);
        q.canonicalize();
        return GaussianRational(std::move(q), mpq_class(0));
    }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational operator-() const { return {mpq_class(-re_), mpq_class(-im_)}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_; im_ += o.im_; return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_; im_ -= o.im_; return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        if (im_ == 0 && o.im_ == 0) { re_ *= o.re_; return *this; } // common fast path
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class m = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r); im_ = std::move(m);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational conjugate() const { return {re_, mpq_class(-im_)}; }

    // |z|^2 as an exact rational.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational inverse() const {
        if (is_zero()) throw input_error("division by zero in Q(i)");
        if (im_ == 0) return {mpq_class(1 / re_), mpq_class(0)};
        mpq_class n = norm();
        return {mpq_class(re_ / n), mpq_class(-im_ / n)};
    }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    // Canonical form: "a/b", "c/d*i", "a/b+c/d*i", "a/b-c/d*i"; "i" and unit
    // multiples stay explicit ("i", "-1*i") so output re-parses in the input
    // grammar.
    std::string str() const;

private:
    mpq_class re_, im_;
};

std::string rational_str(const mpq_class& q);

// Scalar s such that multiplying the given (not all zero) coefficients by s
// lands them in Z[i] with Gaussian-integer content 1.  Unit part is the
// caller's choice.
GaussianRational primitive_scale(const std::vector<const GaussianRational*>& cs);

} // namespace tci

#endif
