#ifndef TCI_MONOMIAL_HPP
#define TCI_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "tci/errors.hpp"

namespace tci {

// Exponent vector over a fixed arity.  Total degree is cached because order
// comparisons are the hot path of the whole engine.
class Monomial {
public:
    explicit Monomial(std::size_t arity) : e_(arity, 0), deg_(0) {}

    static Monomial from_exponents(std::vector<int> e) {
        Monomial m(0);
        m.deg_ = std::accumulate(e.begin(), e.end(), 0);
        m.e_ = std::move(e);
        for (int x : m.e_)
            if (x < 0) throw internal_error("negative exponent");
        return m;
    }

    static Monomial variable(std::size_t arity, std::size_t idx, int power = 1) {
        Monomial m(arity);
        m.e_[idx] = power;
        m.deg_ = power;
        return m;
    }

    std::size_t arity() const { return e_.size(); }
    int operator[](std::size_t k) const { return e_[k]; }
    const std::vector<int>& exponents() const { return e_; }
    int degree() const { return deg_; }

    int degree_in(const std::vector<int>& vars) const {
        int d = 0;
        for (int v : vars) d += e_[v];
        return d;
    }
    int degree_range(int begin, int end) const {
        int d = 0;
        for (int k = begin; k < end; ++k) d += e_[k];
        return d;
    }

    bool is_unit() const { return deg_ == 0; }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] += o.e_[k];
        r.deg_ += o.deg_;
        return r;
    }

    bool divides(const Monomial& o) const {
        if (deg_ > o.deg_) return false;
        for (std::size_t k = 0; k < e_.size(); ++k)
            if (e_[k] > o.e_[k]) return false;
        return true;
    }

    // this / o; caller guarantees divisibility.
    Monomial divided_by(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] -= o.e_[k];
        r.deg_ -= o.deg_;
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        r.deg_ = 0;
        for (std::size_t k = 0; k < r.e_.size(); ++k) {
            r.e_[k] = std::max(a.e_[k], b.e_[k]);
            r.deg_ += r.e_[k];
        }
        return r;
    }

    static Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        r.deg_ = 0;
        for (std::size_t k = 0; k < r.e_.size(); ++k) {
            r.e_[k] = std::min(a.e_[k], b.e_[k]);
            r.deg_ += r.e_[k];
        }
        return r;
    }

    bool coprime_with(const Monomial& o) const {
        for (std::size_t k = 0; k < e_.size(); ++k)
            if (e_[k] > 0 && o.e_[k] > 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    // Context-free strict weak order for use as a map key (not a monomial
    // order; term ordering is MonomialOrder's job).
    struct KeyLess {
        bool operator()(const Monomial& a, const Monomial& b) const {
            return a.e_ < b.e_;
        }
    };

private:
    std::vector<int> e_;
    int deg_;
};

} // namespace tci

#endif
