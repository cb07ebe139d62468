#ifndef TCI_POLYNOMIAL_HPP
#define TCI_POLYNOMIAL_HPP

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "tci/context.hpp"
#include "tci/monomial.hpp"
#include "tci/order.hpp"
#include "tci/rational.hpp"

namespace tci {

// Exact multivariate polynomial over Q(i).  Terms live in a map keyed by
// exponent vector; no zero coefficients are ever stored.  The class is a
// value type: all operations return fresh polynomials.
class Polynomial {
public:
    using TermMap = std::map<Monomial, GaussianRational, Monomial::KeyLess>;

    explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    static Polynomial zero(ContextPtr ctx) { return Polynomial(std::move(ctx)); }
    static Polynomial constant(ContextPtr ctx, GaussianRational c);
    static Polynomial variable(ContextPtr ctx, std::size_t idx);
    static Polynomial from_terms(ContextPtr ctx, TermMap terms);

    const ContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
    }
    std::size_t term_count() const { return terms_.size(); }

    // -1 for the zero polynomial.
    int total_degree() const;
    int degree_in_range(int begin, int end) const;
    bool is_homogeneous() const;
    bool is_homogeneous_in_range(int begin, int end) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const GaussianRational& c) const;
    Polynomial times_monomial(const Monomial& m, const GaussianRational& c) const;
    Polynomial pow(unsigned e) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        require_same_context(a.ctx_, b.ctx_);
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial derivative(std::size_t var) const;

    // Multiplies each term by hvar^(d - block degree), d the maximal block
    // degree.  hvar must belong to [begin, end) and not occur in the input;
    // substituting hvar := 1 afterwards recovers the input exactly.
    Polynomial homogenized_range(int begin, int end, std::size_t hvar) const;

    Polynomial substituted(std::size_t var, const GaussianRational& value) const;

    // Full substitution x_i -> images[i]; images live in a common context,
    // which becomes the context of the result.
    Polynomial composed(const std::vector<Polynomial>& images) const;

    std::complex<double> evaluate(const std::vector<std::complex<double>>& point) const;
    GaussianRational evaluate_exact(const std::vector<GaussianRational>& point) const;

    // Transplants into new_ctx sending old variable k to var_map[k]; -1 marks
    // a dropped variable, which must not occur.
    Polynomial remapped(ContextPtr new_ctx, const std::vector<int>& var_map) const;

    std::pair<Monomial, GaussianRational> leading_term(const MonomialOrder& ord) const;

    // Scales to Z[i] coefficients with content 1, then picks the unit that
    // gives the grevlex-leading coefficient a positive real part (positive
    // imaginary on the axis).  Canonical representative of the scalar class.
    Polynomial primitive() const;

    // Largest coefficient modulus, as a double; witness-side normalization.
    double max_coefficient_modulus() const;

    // Canonical text: terms in descending grevlex, coefficients canonical;
    // output re-parses to the same polynomial.
    std::string str() const;

private:
    void add_term(const Monomial& m, const GaussianRational& c);

    ContextPtr ctx_;
    TermMap terms_;
};

} // namespace tci

#endif
