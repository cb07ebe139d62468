#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "tci/cones.hpp"
#include "tci/ideal.hpp"
#include "tci/ideal_ops.hpp"
#include "tci/linalg.hpp"
#include "tci/parse.hpp"

namespace th {

using namespace tci;

inline Polynomial pp(const std::string& text, const ContextPtr& ctx) {
    return parse_polynomial(text, ctx);
}

inline Ideal ideal_of(const ContextPtr& ctx,
                      const std::vector<std::string>& gens) {
    std::vector<Polynomial> ps;
    ps.reserve(gens.size());
    for (const auto& g : gens) ps.push_back(parse_polynomial(g, ctx));
    return Ideal(ctx, std::move(ps));
}

inline Variety variety_of(const std::vector<std::string>& vars,
                          const std::vector<std::string>& gens, Budget& b) {
    auto ctx = VariableContext::make(vars);
    return Variety::analyze(ideal_of(ctx, gens), b);
}

// span of the listed standard basis vectors
inline LinearSubspace axes(int m, const std::vector<int>& idxs) {
    std::vector<std::vector<GaussianRational>> vs;
    for (int i : idxs) {
        std::vector<GaussianRational> v(static_cast<std::size_t>(m));
        v[static_cast<std::size_t>(i)] = GaussianRational(1);
        vs.push_back(std::move(v));
    }
    return LinearSubspace::make(m, std::move(vs));
}

// Deterministic generator for small random algebra inputs.
struct Rng {
    std::mt19937_64 g;
    explicit Rng(unsigned long long seed) : g(seed) {}

    long ival(long lo, long hi) {
        return lo + static_cast<long>(
                        g() % static_cast<unsigned long long>(hi - lo + 1));
    }

    GaussianRational coeff() {
        long re = ival(-4, 4);
        long im = ival(0, 3) == 0 ? ival(-2, 2) : 0;
        long den = ival(0, 4) == 0 ? ival(2, 3) : 1;
        mpq_class qre(re, den), qim(im, den);
        qre.canonicalize();
        qim.canonicalize();
        return GaussianRational(std::move(qre), std::move(qim));
    }

    GaussianRational nonzero_coeff() {
        for (;;) {
            auto c = coeff();
            if (!c.is_zero()) return c;
        }
    }

    Monomial mono(std::size_t arity, int maxdeg) {
        std::vector<int> e(arity, 0);
        int budget = maxdeg;
        for (std::size_t j = 0; j < arity && budget > 0; ++j) {
            int d = static_cast<int>(ival(0, budget));
            e[j] = d;
            budget -= d;
        }
        return Monomial::from_exponents(std::move(e));
    }

    Polynomial poly(const ContextPtr& ctx, int terms, int maxdeg) {
        Polynomial::TermMap tm;
        for (int t = 0; t < terms; ++t) {
            auto c = coeff();
            if (c.is_zero()) continue;
            tm[mono(ctx->arity(), maxdeg)] = c;
        }
        return Polynomial::from_terms(ctx, std::move(tm));
    }

    Polynomial nonzero_poly(const ContextPtr& ctx, int terms, int maxdeg) {
        for (;;) {
            auto p = poly(ctx, terms, maxdeg);
            if (!p.is_zero()) return p;
        }
    }
};

}  // namespace th
