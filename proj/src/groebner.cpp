#include "tci/groebner.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace tci {

namespace {

struct GBTerm {
    Monomial m;
    GaussianRational c;
};

// Terms sorted strictly descending under the active order.
struct GBPoly {
    std::vector<GBTerm> t;
    bool zero() const { return t.empty(); }
    const Monomial& lm() const { return t.front().m; }
    const GaussianRational& lc() const { return t.front().c; }
    int degree() const { return t.empty() ? -1 : t.front().m.degree(); }
};

GBPoly to_gb(const Polynomial& p, const MonomialOrder& ord) {
    GBPoly g;
    g.t.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) g.t.push_back({m, c});
    std::sort(g.t.begin(), g.t.end(),
              [&](const GBTerm& a, const GBTerm& b) { return ord.greater(a.m, b.m); });
    return g;
}

Polynomial from_gb(const GBPoly& g, const ContextPtr& ctx) {
    Polynomial::TermMap terms;
    for (const GBTerm& t : g.t) terms.emplace(t.m, t.c);
    return Polynomial::from_terms(ctx, std::move(terms));
}

// h := h - c * mu * g, where c*mu*g's lead cancels h's lead (callers arrange
// that).  Both inputs sorted descending; single merge pass.
void submul(GBPoly& h, const GaussianRational& c, const Monomial& mu, const GBPoly& g,
            const MonomialOrder& ord, Budget& budget, const char* stage) {
    budget.spend(g.t.size(), stage);
    std::vector<GBTerm> out;
    out.reserve(h.t.size() + g.t.size());
    std::size_t i = 1, j = 1; // leads cancel by construction
    while (i < h.t.size() && j < g.t.size()) {
        const Monomial gm = g.t[j].m * mu;
        int cmp = ord.compare(h.t[i].m, gm);
        if (cmp > 0) {
            out.push_back(std::move(h.t[i++]));
        } else if (cmp < 0) {
            out.push_back({gm, -(c * g.t[j].c)});
            ++j;
        } else {
            GaussianRational k = h.t[i].c - c * g.t[j].c;
            if (!k.is_zero()) out.push_back({h.t[i].m, std::move(k)});
            ++i;
            ++j;
        }
    }
    while (i < h.t.size()) out.push_back(std::move(h.t[i++]));
    while (j < g.t.size()) {
        out.push_back({g.t[j].m * mu, -(c * g.t[j].c)});
        ++j;
    }
    h.t = std::move(out);
}

// Full division: rewrites the lead against the first divisor that matches,
// otherwise retires it into the remainder.  `skip` excludes one basis index
// (tail reduction of a basis element against the others).
GBPoly divide(GBPoly h, const std::vector<GBPoly>& basis, const MonomialOrder& ord,
              Budget& budget, const char* stage, int skip = -1) {
    std::vector<GBTerm> rem;
    while (!h.zero()) {
        bool rewritten = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (static_cast<int>(k) == skip) continue;
            const GBPoly& g = basis[k];
            if (g.zero() || !g.lm().divides(h.lm())) continue;
            GaussianRational c = h.lc() / g.lc();
            Monomial mu = h.lm().divided_by(g.lm());
            submul(h, c, mu, g, ord, budget, stage);
            rewritten = true;
            break;
        }
        if (!rewritten) {
            rem.push_back(std::move(h.t.front()));
            h.t.erase(h.t.begin());
        }
    }
    GBPoly r;
    r.t = std::move(rem);
    return r;
}

void make_primitive(GBPoly& h) {
    if (h.zero()) return;
    std::vector<const GaussianRational*> cs;
    cs.reserve(h.t.size());
    for (const GBTerm& t : h.t) cs.push_back(&t.c);
    GaussianRational s = primitive_scale(cs);
    // unit choice: positive real lead (rotate pure-imaginary leads)
    GaussianRational lead = h.lc() * s;
    if (lead.re() < 0)
        s *= GaussianRational(-1);
    else if (lead.re() == 0)
        s *= (lead.im() > 0) ? -GaussianRational::i() : GaussianRational::i();
    for (GBTerm& t : h.t) t.c *= s;
}

struct Pair {
    int i, j;
    Monomial lcm;
};

struct Engine {
    const MonomialOrder& ord;
    Budget& budget;
    const char* stage;
    EngineLimits limits;
    std::vector<GBPoly> G;

    struct PairLess {
        const MonomialOrder* ord;
        bool operator()(const Pair& a, const Pair& b) const {
            int c = ord->compare(a.lcm, b.lcm);
            if (c != 0) return c < 0;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        }
    };
    std::set<Pair, PairLess> pairs;

    Engine(const MonomialOrder& o, Budget& b, const char* s, const EngineLimits& lim)
        : ord(o), budget(b), stage(s), limits(lim), pairs(PairLess{&o}) {}

    // Gebauer-Moeller installation of element t: prunes the candidate pairs
    // (h, g) by the lcm-divisibility and coprimality criteria, then drops the
    // old pairs the new lead makes redundant.
    void install(int t) {
        const Monomial& lt = G[t].lm();
        std::vector<Pair> cand;
        cand.reserve(static_cast<std::size_t>(t));
        for (int k = 0; k < t; ++k)
            if (!G[k].zero()) cand.push_back({k, t, Monomial::lcm(G[k].lm(), lt)});

        std::vector<Pair> kept;
        for (std::size_t a = 0; a < cand.size(); ++a) {
            bool coprime = G[cand[a].i].lm().coprime_with(lt);
            bool dominated = false;
            if (!coprime) {
                for (std::size_t b = a + 1; b < cand.size() && !dominated; ++b)
                    if (cand[b].lcm.divides(cand[a].lcm) && cand[b].lcm != cand[a].lcm)
                        dominated = true;
                // equal lcms: the later candidate wins, matching the scan below
                for (std::size_t b = a + 1; b < cand.size() && !dominated; ++b)
                    if (cand[b].lcm == cand[a].lcm) dominated = true;
                for (const Pair& p : kept)
                    if (!dominated && p.lcm.divides(cand[a].lcm)) dominated = true;
            }
            if (coprime || !dominated) kept.push_back(cand[a]);
        }

        // old-pair criterion: lt | lcm(i,j) with both mixed lcms differing
        for (auto it = pairs.begin(); it != pairs.end();) {
            if (lt.divides(it->lcm) &&
                Monomial::lcm(G[it->i].lm(), lt) != it->lcm &&
                Monomial::lcm(G[it->j].lm(), lt) != it->lcm)
                it = pairs.erase(it);
            else
                ++it;
        }

        for (const Pair& p : kept)
            if (!G[p.i].lm().coprime_with(lt)) pairs.insert(p);
    }

    GBPoly spoly(const Pair& p) {
        const GBPoly& f = G[p.i];
        const GBPoly& g = G[p.j];
        GBPoly a;
        a.t.reserve(f.t.size());
        Monomial mf = p.lcm.divided_by(f.lm());
        for (const GBTerm& t : f.t) a.t.push_back({t.m * mf, t.c * g.lc()});
        // subtract (lcm/lm g) * g * lc(f); leads cancel exactly
        submul(a, f.lc(), p.lcm.divided_by(g.lm()), g, ord, budget, stage);
        return a;
    }

    // Completion loop; returns true early when a unit is found and
    // `stop_on_unit` is set.
    bool complete(bool stop_on_unit) {
        for (const GBPoly& g : G)
            if (!g.zero() && g.lm().is_unit()) return true;
        // install incrementally so GM prunes from the start
        std::vector<GBPoly> input = std::move(G);
        G.clear();
        for (GBPoly& g : input) {
            if (g.zero()) continue;
            G.push_back(std::move(g));
            install(static_cast<int>(G.size()) - 1);
        }
        while (!pairs.empty()) {
            Pair p = *pairs.begin();
            pairs.erase(pairs.begin());
            budget.spend(1, stage);
            if (limits.degree_cap > 0 && p.lcm.degree() > limits.degree_cap)
                throw resource_error(std::string(stage) + " (degree cap)",
                                     budget.limit());
            GBPoly h = divide(spoly(p), G, ord, budget, stage);
            if (h.zero()) continue;
            make_primitive(h);
            G.push_back(std::move(h));
            int t = static_cast<int>(G.size()) - 1;
            if (G[t].lm().is_unit()) {
                if (stop_on_unit) return true;
                // ideal is the whole ring; no pair can contribute anything
                pairs.clear();
                return true;
            }
            install(t);
        }
        return false;
    }

    // Minimal, tail-reduced, monic form of the completed basis.
    std::vector<GBPoly> reduce() {
        std::vector<int> idx;
        for (int k = 0; k < static_cast<int>(G.size()); ++k)
            if (!G[k].zero()) idx.push_back(k);
        std::sort(idx.begin(), idx.end(),
                  [&](int a, int b) { return ord.less(G[a].lm(), G[b].lm()); });
        std::vector<int> kept;
        for (int k : idx) {
            bool redundant = false;
            for (int j : kept)
                if (G[j].lm().divides(G[k].lm())) { redundant = true; break; }
            if (!redundant) kept.push_back(k);
        }
        std::vector<GBPoly> minimal;
        minimal.reserve(kept.size());
        for (int k : kept) minimal.push_back(std::move(G[k]));

        std::vector<GBPoly> out;
        out.reserve(minimal.size());
        for (std::size_t k = 0; k < minimal.size(); ++k) {
            GBPoly r = divide(minimal[k], minimal, ord, budget, stage,
                              static_cast<int>(k));
            GaussianRational inv = r.lc().inverse();
            for (GBTerm& t : r.t) t.c *= inv;
            out.push_back(std::move(r));
        }
        std::sort(out.begin(), out.end(),
                  [&](const GBPoly& a, const GBPoly& b) { return ord.greater(a.lm(), b.lm()); });
        return out;
    }
};

std::vector<GBPoly> to_gb_all(const std::vector<Polynomial>& ps, const MonomialOrder& ord) {
    std::vector<GBPoly> out;
    out.reserve(ps.size());
    for (const Polynomial& p : ps)
        if (!p.is_zero()) out.push_back(to_gb(p, ord));
    return out;
}

} // namespace

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens,
                                       const MonomialOrder& ord, Budget& budget,
                                       const char* stage, const EngineLimits& limits) {
    ContextPtr ctx;
    for (const Polynomial& p : gens) {
        if (!ctx) ctx = p.context();
        require_same_context(ctx, p.context());
    }
    if (!ctx) throw input_error("groebner basis of an empty generator list");
    if (ctx->arity() != ord.arity()) throw input_error("order arity mismatch");

    Engine e(ord, budget, stage, limits);
    e.G = to_gb_all(gens, ord);
    for (GBPoly& g : e.G) make_primitive(g);
    if (e.G.empty()) return {};
    bool unit = e.complete(false);
    if (unit)
        return {Polynomial::constant(ctx, GaussianRational(1))};
    std::vector<GBPoly> red = e.reduce();
    std::vector<Polynomial> out;
    out.reserve(red.size());
    for (const GBPoly& g : red) out.push_back(from_gb(g, ctx));
    return out;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& ord, Budget& budget, const char* stage) {
    for (const Polynomial& g : basis) require_same_context(f.context(), g.context());
    std::vector<GBPoly> B = to_gb_all(basis, ord);
    GBPoly r = divide(to_gb(f, ord), B, ord, budget, stage);
    return from_gb(r, f.context());
}

bool reduces_to_zero(const Polynomial& f, const std::vector<Polynomial>& basis,
                     const MonomialOrder& ord, Budget& budget, const char* stage) {
    return normal_form(f, basis, ord, budget, stage).is_zero();
}

bool groebner_reaches_unit(const std::vector<Polynomial>& gens, const MonomialOrder& ord,
                           Budget& budget, const char* stage) {
    Engine e(ord, budget, stage, {});
    e.G = to_gb_all(gens, ord);
    for (GBPoly& g : e.G) make_primitive(g);
    if (e.G.empty()) return false;
    return e.complete(true);
}

bool basis_has_unit(const std::vector<Polynomial>& basis) {
    for (const Polynomial& p : basis)
        if (!p.is_zero() && p.is_constant()) return true;
    return false;
}

bool verify_groebner(const std::vector<Polynomial>& basis, const MonomialOrder& ord,
                     Budget& budget) {
    if (basis.empty()) return true;
    std::vector<GBPoly> B = to_gb_all(basis, ord);
    for (std::size_t i = 0; i < B.size(); ++i) {
        for (std::size_t j = i + 1; j < B.size(); ++j) {
            Monomial l = Monomial::lcm(B[i].lm(), B[j].lm());
            GBPoly a;
            Monomial mi = l.divided_by(B[i].lm());
            for (const GBTerm& t : B[i].t) a.t.push_back({t.m * mi, t.c * B[j].lc()});
            submul(a, B[i].lc(), l.divided_by(B[j].lm()), B[j], ord, budget,
                   "groebner verification");
            if (!divide(std::move(a), B, ord, budget, "groebner verification").zero())
                return false;
        }
    }
    return true;
}

} // namespace tci
