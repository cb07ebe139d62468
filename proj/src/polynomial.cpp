#include "tci/polynomial.hpp"

#include <algorithm>

namespace tci {

Polynomial Polynomial::constant(ContextPtr ctx, GaussianRational c) {
    Polynomial p(std::move(ctx));
    if (!c.is_zero()) p.terms_.emplace(Monomial(p.ctx_->arity()), std::move(c));
    return p;
}

Polynomial Polynomial::variable(ContextPtr ctx, std::size_t idx) {
    Polynomial p(ctx);
    p.terms_.emplace(Monomial::variable(ctx->arity(), idx), GaussianRational(1));
    return p;
}

Polynomial Polynomial::from_terms(ContextPtr ctx, TermMap terms) {
    Polynomial p(std::move(ctx));
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->second.is_zero())
            it = terms.erase(it);
        else
            ++it;
    }
    p.terms_ = std::move(terms);
    return p;
}

void Polynomial::add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

int Polynomial::degree_in_range(int begin, int end) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree_range(begin, end));
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

bool Polynomial::is_homogeneous_in_range(int begin, int end) const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree_range(begin, end);
    for (const auto& [m, c] : terms_)
        if (m.degree_range(begin, end) != d) return false;
    return true;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same_context(ctx_, o.ctx_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    require_same_context(ctx_, o.ctx_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_context(a.ctx_, b.ctx_);
    Polynomial r(a.ctx_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::scaled(const GaussianRational& c) const {
    Polynomial r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const GaussianRational& c) const {
    Polynomial r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [mm, k] : terms_) r.terms_.emplace(mm * m, k * c);
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial acc = Polynomial::constant(ctx_, GaussianRational(1));
    Polynomial base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    if (var >= ctx_->arity()) throw input_error("derivative: variable out of range");
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_) {
        int e = m[var];
        if (e == 0) continue;
        std::vector<int> exps = m.exponents();
        exps[var] -= 1;
        r.add_term(Monomial::from_exponents(std::move(exps)), c * GaussianRational(e));
    }
    return r;
}

Polynomial Polynomial::homogenized_range(int begin, int end, std::size_t hvar) const {
    if (static_cast<int>(hvar) < begin || static_cast<int>(hvar) >= end)
        throw input_error("homogenizing variable must belong to the block");
    for (const auto& [m, c] : terms_)
        if (m[hvar] != 0)
            throw input_error("homogenizing variable already occurs in polynomial");
    int d = degree_in_range(begin, end);
    if (d <= 0) return *this;
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_) {
        std::vector<int> exps = m.exponents();
        exps[hvar] += d - m.degree_range(begin, end);
        r.terms_.emplace(Monomial::from_exponents(std::move(exps)), c);
    }
    return r;
}

Polynomial Polynomial::substituted(std::size_t var, const GaussianRational& value) const {
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_) {
        int e = m[var];
        if (e == 0) {
            r.add_term(m, c);
            continue;
        }
        if (value.is_zero()) continue;
        GaussianRational f = c;
        for (int k = 0; k < e; ++k) f *= value;
        std::vector<int> exps = m.exponents();
        exps[var] = 0;
        r.add_term(Monomial::from_exponents(std::move(exps)), f);
    }
    return r;
}

Polynomial Polynomial::composed(const std::vector<Polynomial>& images) const {
    if (images.size() != ctx_->arity())
        throw input_error("composed: one image per variable expected");
    ContextPtr target = images.empty() ? ctx_ : images.front().context();
    for (const Polynomial& g : images) require_same_context(target, g.context());

    // power cache per variable, filled on demand
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power = [&](std::size_t v, int e) -> const Polynomial& {
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(Polynomial::constant(target, GaussianRational(1)));
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(cache.back() * images[v]);
        return cache[e];
    };

    Polynomial r(target);
    for (const auto& [m, c] : terms_) {
        Polynomial t = Polynomial::constant(target, c);
        for (std::size_t v = 0; v < images.size(); ++v)
            if (m[v] > 0) t = t * power(v, m[v]);
        r += t;
    }
    return r;
}

std::complex<double> Polynomial::evaluate(const std::vector<std::complex<double>>& point) const {
    if (point.size() != ctx_->arity())
        throw input_error("evaluate: wrong point dimension");
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [m, c] : terms_) {
        std::complex<double> t = c.to_complex();
        for (std::size_t v = 0; v < point.size(); ++v)
            for (int k = 0; k < m[v]; ++k) t *= point[v];
        acc += t;
    }
    return acc;
}

GaussianRational Polynomial::evaluate_exact(const std::vector<GaussianRational>& point) const {
    if (point.size() != ctx_->arity())
        throw input_error("evaluate_exact: wrong point dimension");
    GaussianRational acc(0);
    for (const auto& [m, c] : terms_) {
        GaussianRational t = c;
        for (std::size_t v = 0; v < point.size(); ++v)
            for (int k = 0; k < m[v]; ++k) t *= point[v];
        acc += t;
    }
    return acc;
}

Polynomial Polynomial::remapped(ContextPtr new_ctx, const std::vector<int>& var_map) const {
    if (var_map.size() != ctx_->arity())
        throw input_error("remapped: one entry per variable expected");
    Polynomial r(new_ctx);
    std::size_t n = new_ctx->arity();
    for (const auto& [m, c] : terms_) {
        std::vector<int> exps(n, 0);
        for (std::size_t v = 0; v < var_map.size(); ++v) {
            if (m[v] == 0) continue;
            if (var_map[v] < 0)
                throw input_error("remapped: dropped variable '" + ctx_->name(v) +
                                  "' occurs in polynomial");
            exps[var_map[v]] += m[v];
        }
        r.add_term(Monomial::from_exponents(std::move(exps)), c);
    }
    return r;
}

std::pair<Monomial, GaussianRational> Polynomial::leading_term(const MonomialOrder& ord) const {
    if (terms_.empty()) throw internal_error("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (ord.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
}

Polynomial Polynomial::primitive() const {
    if (terms_.empty()) return *this;

    std::vector<const GaussianRational*> cs;
    cs.reserve(terms_.size());
    for (const auto& [m, c] : terms_) cs.push_back(&c);
    Polynomial r = scaled(primitive_scale(cs));

    // unit normalization: rotate/flip so the grevlex-leading coefficient has
    // positive real part (pure-imaginary leads land on the real axis)
    const GaussianRational lc =
        r.leading_term(MonomialOrder::grevlex(ctx_->arity())).second;
    GaussianRational unit(1);
    if (lc.re() < 0)
        unit = GaussianRational(-1);
    else if (lc.re() == 0)
        unit = (lc.im() > 0) ? -GaussianRational::i() : GaussianRational::i();
    return unit.is_one() ? r : r.scaled(unit);
}

double Polynomial::max_coefficient_modulus() const {
    double best = 0.0;
    for (const auto& [m, c] : terms_) best = std::max(best, std::abs(c.to_complex()));
    return best;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";

    MonomialOrder ord = MonomialOrder::grevlex(ctx_->arity());
    std::vector<const TermMap::value_type*> sorted;
    sorted.reserve(terms_.size());
    for (const auto& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(),
              [&](auto* a, auto* b) { return ord.greater(a->first, b->first); });

    auto mono_str = [&](const Monomial& m) {
        std::string s;
        for (std::size_t v = 0; v < ctx_->arity(); ++v) {
            if (m[v] == 0) continue;
            if (!s.empty()) s += "*";
            s += ctx_->name(v);
            if (m[v] > 1) s += "^" + std::to_string(m[v]);
        }
        return s;
    };

    std::string out;
    bool first = true;
    for (auto* t : sorted) {
        GaussianRational c = t->second;
        std::string mono = mono_str(t->first);

        bool negatable = (c.im() == 0 && c.re() < 0) || (c.re() == 0 && c.im() < 0);
        if (!first) {
            out += negatable ? " - " : " + ";
            if (negatable) c = -c;
        }
        first = false;

        if (mono.empty()) {
            out += c.str();
            continue;
        }
        if (c.is_one()) {
            out += mono;
        } else if (c.im() == 0) {
            out += rational_str(c.re()) + "*" + mono;
        } else if (c.re() == 0) {
            if (c.im() == 1)
                out += "i*" + mono;
            else if (c.im() == -1)
                out += "-1*i*" + mono;
            else
                out += rational_str(c.im()) + "*i*" + mono;
        } else {
            out += "(" + c.str() + ")*" + mono;
        }
    }
    return out;
}

} // namespace tci
