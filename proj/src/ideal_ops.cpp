#include "tci/ideal_ops.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>

namespace tci {

namespace {

int arity_of(const VariableContext& ctx) { return static_cast<int>(ctx.arity()); }

bool uses_var(const Polynomial& f, int v) {
  for (const auto& [mono, coeff] : f.terms())
    if (mono[static_cast<std::size_t>(v)] > 0) return true;
  return false;
}

// Fresh auxiliary variable name not colliding with the context.
std::string fresh_name(const VariableContext& ctx, const std::string& want) {
  if (!ctx.index_of(want) && want != "i") return want;
  for (int k = 0;; ++k) {
    std::string cand = want + "_" + std::to_string(k);
    if (!ctx.index_of(cand)) return cand;
  }
}

// Elimination order for the given variables: they form the leading block.
MonomialOrder elim_order(int arity, const std::vector<int>& drop_idx) {
  std::vector<bool> dropped(arity, false);
  for (int v : drop_idx) dropped[v] = true;
  std::vector<int> keep;
  for (int v = 0; v < arity; ++v)
    if (!dropped[v]) keep.push_back(v);
  std::vector<std::vector<int>> groups;
  groups.push_back(drop_idx);
  if (!keep.empty()) groups.push_back(keep);
  std::vector<MonomialOrder::InnerKind> inner(groups.size(),
                                              MonomialOrder::InnerKind::grevlex);
  return MonomialOrder::blocks(static_cast<std::size_t>(arity), groups, inner);
}

// Context with one extra variable appended; identity map for the old vars.
struct Extended {
  ContextPtr ctx;
  int aux = -1;
  std::vector<int> var_map;
};

Extended extend(const VariableContext& ctx, const std::string& want) {
  Extended out;
  std::vector<std::string> names = ctx.names();
  names.push_back(fresh_name(ctx, want));
  out.ctx = VariableContext::make(names);
  out.aux = static_cast<int>(names.size()) - 1;
  out.var_map.resize(ctx.arity());
  for (int v = 0; v < arity_of(ctx); ++v) out.var_map[v] = v;
  return out;
}

std::vector<int> identity_map(int arity) {
  std::vector<int> id(arity);
  for (int v = 0; v < arity; ++v) id[v] = v;
  return id;
}

// Keep only the basis elements supported on the complement of `drop_idx`,
// remapped into `home` (which must carry exactly the kept names in order).
std::vector<Polynomial> restrict_basis(const std::vector<Polynomial>& basis,
                                       const VariableContext& big,
                                       const std::vector<int>& drop_idx,
                                       const ContextPtr& home) {
  std::vector<bool> dropped(big.arity(), false);
  for (int v : drop_idx) dropped[v] = true;
  std::vector<int> var_map(big.arity(), -1);
  int next = 0;
  for (int v = 0; v < arity_of(big); ++v)
    if (!dropped[v]) var_map[v] = next++;
  std::vector<Polynomial> kept;
  for (const Polynomial& g : basis) {
    bool pure = true;
    for (int v : drop_idx)
      if (uses_var(g, v)) { pure = false; break; }
    if (pure) kept.push_back(g.remapped(home, var_map));
  }
  return kept;
}

std::vector<int> indices_of(const VariableContext& ctx,
                            const std::vector<std::string>& names) {
  std::vector<int> idx;
  std::set<int> seen;
  for (const std::string& n : names) {
    auto v = ctx.index_of(n);
    if (!v) throw input_error("cannot eliminate unknown variable '" + n + "'");
    if (!seen.insert(*v).second)
      throw input_error("duplicate variable '" + n + "' in elimination list");
    idx.push_back(*v);
  }
  return idx;
}

} // namespace

Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop, Budget& budget,
                const char* stage) {
  const VariableContext& ctx = *I.context();
  std::vector<int> drop_idx = indices_of(ctx, drop);
  if (drop_idx.empty()) return I;
  MonomialOrder ord = elim_order(arity_of(ctx), drop_idx);
  const std::vector<Polynomial>& basis = I.groebner(ord, budget, stage);
  std::vector<bool> dropped(ctx.arity(), false);
  for (int v : drop_idx) dropped[v] = true;
  std::vector<std::string> keep_names;
  for (int v = 0; v < arity_of(ctx); ++v)
    if (!dropped[v]) keep_names.push_back(ctx.name(v));
  ContextPtr small = VariableContext::make(keep_names);
  return Ideal(small, restrict_basis(basis, ctx, drop_idx, small));
}

Ideal saturate_single(const Ideal& I, const Polynomial& g, Budget& budget,
                      const char* stage) {
  require_same_context(I.context(), g.context());
  const VariableContext& ctx = *I.context();
  int m = arity_of(ctx);
  if (g.is_zero()) return Ideal::unit(I.context());
  if (g.total_degree() == 0) return I;
  if (I.is_zero_ideal()) return I;

  // Reverse-lex shortcut: for homogeneous I and g a bare variable, a grevlex
  // basis with that variable least stays a basis after dividing out its
  // powers, and the divided set generates I : g^infty.
  std::optional<int> bare;
  if (g.term_count() == 1) {
    const auto& [mono, coeff] = *g.terms().begin();
    if (mono.degree() == 1)
      for (int v = 0; v < m; ++v)
        if (mono[v] == 1) { bare = v; break; }
  }
  if (bare) {
    bool homog = true;
    for (const Polynomial& f : I.generators())
      if (!f.is_homogeneous()) { homog = false; break; }
    if (homog) {
      std::vector<int> seq;
      for (int v = 0; v < m; ++v)
        if (v != *bare) seq.push_back(v);
      seq.push_back(*bare);
      MonomialOrder ord = MonomialOrder::grevlex_sequence(seq);
      const std::vector<Polynomial>& basis = I.groebner(ord, budget, stage);
      std::vector<Polynomial> out;
      for (const Polynomial& f : basis) {
        int e = f.total_degree(); // min exponent of the bare variable
        for (const auto& [mono, coeff] : f.terms())
          e = std::min(e, mono[*bare]);
        if (e == 0) { out.push_back(f); continue; }
        Monomial div = Monomial::variable(ctx.arity(), *bare, e);
        Polynomial::TermMap terms;
        for (const auto& [mono, coeff] : f.terms())
          terms.emplace(mono.divided_by(div), coeff);
        out.push_back(Polynomial::from_terms(I.context(), std::move(terms)));
      }
      return Ideal(I.context(), out);
    }
  }

  Extended ext = extend(ctx, "t");
  std::vector<Polynomial> gens;
  for (const Polynomial& f : I.generators())
    gens.push_back(f.remapped(ext.ctx, ext.var_map));
  Polynomial tg = g.remapped(ext.ctx, ext.var_map) *
                  Polynomial::variable(ext.ctx, ext.aux);
  gens.push_back(Polynomial::constant(ext.ctx, GaussianRational(1)) - tg);
  Ideal aux_ideal(ext.ctx, gens);
  MonomialOrder ord = elim_order(m + 1, {ext.aux});
  const std::vector<Polynomial>& basis = aux_ideal.groebner(ord, budget, stage);
  return Ideal(I.context(), restrict_basis(basis, *ext.ctx, {ext.aux}, I.context()));
}

Ideal saturate(const Ideal& I, const Ideal& J, Budget& budget, const char* stage) {
  require_same_context(I.context(), J.context());
  if (J.is_zero_ideal()) return Ideal::unit(I.context());
  std::optional<Ideal> acc;
  for (const Polynomial& g : J.generators()) {
    Ideal part = saturate_single(I, g, budget, stage);
    if (!acc)
      acc = part;
    else
      acc = intersect(*acc, part, budget, stage);
  }
  return *acc;
}

Ideal intersect(const Ideal& A, const Ideal& B, Budget& budget, const char* stage) {
  require_same_context(A.context(), B.context());
  if (A.is_zero_ideal() || B.is_zero_ideal()) return Ideal::zero(A.context());
  const VariableContext& ctx = *A.context();
  Extended ext = extend(ctx, "t");
  Polynomial t = Polynomial::variable(ext.ctx, ext.aux);
  Polynomial one_minus_t = Polynomial::constant(ext.ctx, GaussianRational(1)) - t;
  std::vector<Polynomial> gens;
  for (const Polynomial& f : A.generators())
    gens.push_back(t * f.remapped(ext.ctx, ext.var_map));
  for (const Polynomial& f : B.generators())
    gens.push_back(one_minus_t * f.remapped(ext.ctx, ext.var_map));
  Ideal aux_ideal(ext.ctx, gens);
  MonomialOrder ord = elim_order(arity_of(*ext.ctx), {ext.aux});
  const std::vector<Polynomial>& basis = aux_ideal.groebner(ord, budget, stage);
  return Ideal(A.context(), restrict_basis(basis, *ext.ctx, {ext.aux}, A.context()));
}

bool radical_membership(const Polynomial& g, const Ideal& I, Budget& budget,
                        const char* stage) {
  require_same_context(I.context(), g.context());
  if (g.is_zero()) return true;
  const VariableContext& ctx = *I.context();
  if (g.total_degree() == 0) {
    // Nonzero constants lie in the radical exactly when the ideal is unit.
    MonomialOrder ord = MonomialOrder::grevlex(ctx.arity());
    return basis_has_unit(I.groebner(ord, budget, stage));
  }
  Extended ext = extend(ctx, "t");
  std::vector<Polynomial> gens;
  for (const Polynomial& f : I.generators())
    gens.push_back(f.remapped(ext.ctx, ext.var_map));
  Polynomial tg = g.remapped(ext.ctx, ext.var_map) *
                  Polynomial::variable(ext.ctx, ext.aux);
  gens.push_back(Polynomial::constant(ext.ctx, GaussianRational(1)) - tg);
  MonomialOrder ord = MonomialOrder::grevlex(ext.ctx->arity());
  return groebner_reaches_unit(gens, ord, budget, stage);
}

namespace {

bool subset_independent(const std::vector<Monomial>& lms,
                        const std::vector<bool>& chosen) {
  for (const Monomial& m : lms) {
    bool inside = true;
    for (std::size_t v = 0; v < chosen.size(); ++v)
      if (m[v] > 0 && !chosen[v]) { inside = false; break; }
    if (inside) return false;
  }
  return true;
}

void max_independent(const std::vector<Monomial>& lms, std::vector<bool>& chosen,
                     int idx, int count, int& best) {
  int n = static_cast<int>(chosen.size());
  if (count + (n - idx) <= best) return;
  if (idx == n) {
    best = std::max(best, count);
    return;
  }
  chosen[idx] = true;
  if (subset_independent(lms, chosen))
    max_independent(lms, chosen, idx + 1, count + 1, best);
  chosen[idx] = false;
  max_independent(lms, chosen, idx + 1, count, best);
}

} // namespace

int dimension(const Ideal& I, Budget& budget, const char* stage) {
  const VariableContext& ctx = *I.context();
  if (I.is_zero_ideal()) return arity_of(ctx);
  MonomialOrder ord = MonomialOrder::grevlex(ctx.arity());
  const std::vector<Polynomial>& basis = I.groebner(ord, budget, stage);
  if (basis_has_unit(basis)) return -1;
  std::vector<Monomial> lms;
  for (const Polynomial& f : basis) lms.push_back(f.leading_term(ord).first);
  std::vector<bool> chosen(ctx.arity(), false);
  int best = 0;
  max_independent(lms, chosen, 0, 0, best);
  return best;
}

namespace {

using KPoly = std::vector<long long>; // numerator coefficients in t

KPoly kp_add(const KPoly& a, const KPoly& b) {
  KPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

KPoly kp_shift(const KPoly& a, int by) {
  if (a.empty()) return a;
  KPoly out(a.size() + by, 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i + by] = a[i];
  return out;
}

// Multiply by (1 - t^d).
KPoly kp_scale_edge(const KPoly& a, int d) {
  KPoly out(a.size() + d, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] += a[i];
    out[i + d] -= a[i];
  }
  return out;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return Monomial::KeyLess{}(a, b);
  });
  std::vector<Monomial> out;
  for (const Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& h : out)
      if (h.divides(g)) { redundant = true; break; }
    if (!redundant) out.push_back(g);
  }
  return out;
}

// Numerator of the Hilbert series of S/<gens> over (1-t)^arity, by splitting
// on the most shared variable; pairwise coprime generators are the closed
// base case.
KPoly kpolynomial(std::vector<Monomial> gens, int arity, Budget& budget,
                  const char* stage) {
  budget.spend(static_cast<long long>(gens.size()) + 1, stage);
  gens = minimalize(std::move(gens));
  if (gens.empty()) return KPoly{1};
  if (gens.front().degree() == 0) return KPoly{}; // unit ideal, zero series
  std::vector<int> occ(arity, 0);
  for (const Monomial& g : gens)
    for (int v = 0; v < arity; ++v)
      if (g[v] > 0) ++occ[v];
  int pivot = -1;
  for (int v = 0; v < arity; ++v)
    if (occ[v] >= 2 && (pivot < 0 || occ[v] > occ[pivot])) pivot = v;
  if (pivot < 0) { // every variable in at most one generator: coprime
    KPoly out{1};
    for (const Monomial& g : gens) out = kp_scale_edge(out, g.degree());
    return out;
  }
  Monomial xv = Monomial::variable(static_cast<std::size_t>(arity),
                                   static_cast<std::size_t>(pivot), 1);
  std::vector<Monomial> plus = gens;
  plus.push_back(xv);
  std::vector<Monomial> colon;
  for (const Monomial& g : gens)
    colon.push_back(g[pivot] > 0 ? g.divided_by(xv) : g);
  KPoly a = kpolynomial(std::move(plus), arity, budget, stage);
  KPoly b = kpolynomial(std::move(colon), arity, budget, stage);
  return kp_add(a, kp_shift(b, 1));
}

long long kp_at_one(const KPoly& a) {
  long long s = 0;
  for (long long c : a) s += c;
  return s;
}

// Exact division by (1 - t); callers establish divisibility via kp_at_one.
KPoly kp_divide_edge(const KPoly& a) {
  if (a.empty()) throw internal_error("dividing an empty hilbert numerator");
  KPoly q(a.size() - 1, 0);
  long long carry = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    carry += a[i];
    q[i] = carry;
  }
  return q;
}

} // namespace

HilbertData hilbert_projective(const Ideal& I, Budget& budget, const char* stage) {
  const VariableContext& ctx = *I.context();
  int m = arity_of(ctx);
  MonomialOrder ord = MonomialOrder::grevlex(ctx.arity());
  const std::vector<Polynomial>& basis = I.groebner(ord, budget, stage);
  HilbertData out;
  if (basis_has_unit(basis)) return out; // empty closure

  // Closure ideal: homogenize every generator with a fresh variable, then
  // saturate by it.  The saturation is what makes arbitrary generator lists
  // (not just graded bases) legal inputs.
  std::vector<std::string> names = ctx.names();
  names.push_back(fresh_name(ctx, "h"));
  ContextPtr pctx = VariableContext::make(names);
  int hv = m;
  std::vector<int> var_map = identity_map(m);
  std::vector<Polynomial> hgens;
  for (const Polynomial& f : I.generators()) {
    if (f.is_zero()) continue;
    hgens.push_back(f.remapped(pctx, var_map).homogenized_range(0, m + 1, hv));
  }
  if (hgens.empty()) hgens.push_back(Polynomial::zero(pctx));
  Ideal closure(pctx, hgens);
  Ideal sat = saturate_single(closure, Polynomial::variable(pctx, hv), budget, stage);
  MonomialOrder pord = MonomialOrder::grevlex(static_cast<std::size_t>(m + 1));
  const std::vector<Polynomial>& sbasis = sat.groebner(pord, budget, stage);
  std::vector<Monomial> lms;
  for (const Polynomial& f : sbasis) lms.push_back(f.leading_term(pord).first);

  out.numerator = kpolynomial(std::move(lms), m + 1, budget, stage);
  KPoly reduced = out.numerator;
  int cancelled = 0;
  while (!reduced.empty() && kp_at_one(reduced) == 0) {
    reduced = kp_divide_edge(reduced);
    ++cancelled;
  }
  if (reduced.empty()) throw internal_error("hilbert numerator vanished");
  out.projective_dimension = m - cancelled;
  out.degree = kp_at_one(reduced);
  return out;
}

long long degree(const Variety& X, Budget& budget) {
  HilbertData h = hilbert_projective(X.ideal(), budget, "degree");
  if (h.projective_dimension != X.dim())
    throw internal_error("projective closure dimension disagrees with affine dimension");
  if (h.degree <= 0) throw internal_error("nonpositive degree");
  return h.degree;
}

long long zero_dim_count(const Ideal& I, Budget& budget, const char* stage) {
  const VariableContext& ctx = *I.context();
  int m = arity_of(ctx);
  MonomialOrder ord = MonomialOrder::grevlex(ctx.arity());
  const std::vector<Polynomial>& basis = I.groebner(ord, budget, stage);
  if (basis_has_unit(basis)) return 0;
  if (dimension(I, budget, stage) > 0)
    throw input_error("fiber is positive-dimensional; point count is undefined");
  std::vector<Monomial> lms;
  for (const Polynomial& f : basis) lms.push_back(f.leading_term(ord).first);
  auto reducible = [&](const Monomial& mono) {
    for (const Monomial& l : lms)
      if (l.divides(mono)) return true;
    return false;
  };
  // Standard monomials: breadth-first closure under multiplication.
  std::set<Monomial, Monomial::KeyLess> seen;
  std::vector<Monomial> queue;
  Monomial one(ctx.arity());
  if (!reducible(one)) {
    seen.insert(one);
    queue.push_back(one);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    budget.spend(m, stage);
    for (int v = 0; v < m; ++v) {
      Monomial next = queue[head] * Monomial::variable(ctx.arity(), v, 1);
      if (reducible(next) || seen.count(next)) continue;
      seen.insert(next);
      queue.push_back(next);
    }
  }
  return static_cast<long long>(queue.size());
}

std::vector<std::vector<Polynomial>> jacobian_matrix(const std::vector<Polynomial>& F) {
  if (F.empty()) throw internal_error("jacobian of an empty system");
  const ContextPtr& ctx = F.front().context();
  std::vector<std::vector<Polynomial>> J;
  for (const Polynomial& f : F) {
    require_same_context(ctx, f.context());
    std::vector<Polynomial> row;
    for (int v = 0; v < arity_of(*ctx); ++v)
      row.push_back(f.derivative(static_cast<std::size_t>(v)));
    J.push_back(std::move(row));
  }
  return J;
}

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& M) {
  std::size_t n = M.size();
  if (n == 0) throw internal_error("determinant of an empty matrix");
  for (const auto& row : M)
    if (row.size() != n) throw internal_error("determinant of a non-square matrix");
  if (n == 1) return M[0][0];
  Polynomial out = Polynomial::zero(M[0][0].context());
  for (std::size_t j = 0; j < n; ++j) {
    if (M[0][j].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(M[r][c]);
      minor.push_back(std::move(row));
    }
    Polynomial term = M[0][j] * poly_det(minor);
    if (j % 2 == 0)
      out += term;
    else
      out -= term;
  }
  return out;
}

namespace {

void combinations(int n, int k, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& fn,
                  int start) {
  if (static_cast<int>(cur.size()) == k) {
    fn(cur);
    return;
  }
  for (int v = start; v <= n - (k - static_cast<int>(cur.size())); ++v) {
    cur.push_back(v);
    combinations(n, k, cur, fn, v + 1);
    cur.pop_back();
  }
}

} // namespace

Ideal singular_locus(const Variety& X, Budget& budget) {
  const Ideal& I = X.ideal();
  const VariableContext& ctx = *I.context();
  int m = arity_of(ctx);
  int c = m - X.dim();
  if (c == 0) return Ideal::unit(I.context());
  std::vector<Polynomial> gens;
  for (const Polynomial& f : I.generators())
    if (!f.is_zero()) gens.push_back(f);
  int l = static_cast<int>(gens.size());
  if (l < c) throw internal_error("fewer generators than the codimension");
  auto J = jacobian_matrix(gens);
  std::vector<Polynomial> out = gens;
  std::vector<int> rows_cur, cols_cur;
  combinations(l, c, rows_cur, [&](const std::vector<int>& rows) {
    std::vector<int> inner;
    combinations(m, c, inner, [&](const std::vector<int>& cols) {
      budget.spend(1, "singular locus");
      std::vector<std::vector<Polynomial>> sub;
      for (int r : rows) {
        std::vector<Polynomial> row;
        for (int col : cols) row.push_back(J[r][col]);
        sub.push_back(std::move(row));
      }
      Polynomial d = poly_det(sub);
      if (!d.is_zero()) out.push_back(d.primitive());
    }, 0);
  }, 0);
  return Ideal(I.context(), out);
}

bool ideal_contains(const Ideal& I, const Polynomial& f, Budget& budget) {
  require_same_context(I.context(), f.context());
  if (f.is_zero()) return true;
  if (I.is_zero_ideal()) return false;
  MonomialOrder ord = MonomialOrder::grevlex(I.context()->arity());
  const std::vector<Polynomial>& basis = I.groebner(ord, budget, "ideal membership");
  return normal_form(f, basis, ord, budget, "ideal membership").is_zero();
}

bool ideal_equal(const Ideal& A, const Ideal& B, Budget& budget) {
  for (const Polynomial& f : A.generators())
    if (!ideal_contains(B, f, budget)) return false;
  for (const Polynomial& f : B.generators())
    if (!ideal_contains(A, f, budget)) return false;
  return true;
}

bool same_variety(const Ideal& A, const Ideal& B, Budget& budget) {
  for (const Polynomial& f : A.generators())
    if (!radical_membership(f, B, budget)) return false;
  for (const Polynomial& f : B.generators())
    if (!radical_membership(f, A, budget)) return false;
  return true;
}

Variety Variety::analyze(Ideal ideal, Budget& budget, std::optional<int> claimed_dim) {
  int k = dimension(ideal, budget, "variety dimension");
  if (k < 0) throw input_error("the variety is empty (its ideal contains 1)");
  if (claimed_dim && *claimed_dim != k)
    throw input_error("declared dimension " + std::to_string(*claimed_dim) +
                      " does not match the computed dimension " + std::to_string(k));
  return Variety(std::move(ideal), k);
}

} // namespace tci
