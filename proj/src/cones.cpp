#include "tci/cones.hpp"

#include <algorithm>

namespace tci {

const char* cone_kind_name(ConeKind k) {
  switch (k) {
    case ConeKind::c3: return "c3";
    case ConeKind::c4: return "c4";
    case ConeKind::c5: return "c5";
  }
  return "c?";
}

ConeKind cone_kind_from_name(const std::string& name) {
  if (name == "c3") return ConeKind::c3;
  if (name == "c4") return ConeKind::c4;
  if (name == "c5") return ConeKind::c5;
  throw input_error("unknown cone kind '" + name + "' (expected c3, c4, or c5)");
}

const char* purity_name(Purity p) {
  switch (p) {
    case Purity::pure: return "pure";
    case Purity::unknown: return "unknown";
    case Purity::zero: return "zero";
  }
  return "?";
}

namespace {

std::vector<int> identity_map(int n) {
  std::vector<int> id(n);
  for (int v = 0; v < n; ++v) id[v] = v;
  return id;
}

void require_unbounded(const Variety& X) {
  if (X.dim() < 1)
    throw input_error("the variety is bounded (dimension 0); cones at infinity "
                      "require an unbounded set");
}

// pure only with a certificate: the origin alone, the whole space, a
// hypersurface, or a linear subspace.
Purity classify_purity(const Ideal& cone, int dim, Budget& budget) {
  if (dim <= 0) return Purity::zero;
  MonomialOrder ord = MonomialOrder::grevlex(cone.context()->arity());
  const std::vector<Polynomial>& basis = cone.groebner(ord, budget, "cone purity");
  if (basis.size() <= 1) return Purity::pure; // whole space or hypersurface
  bool linear = true;
  for (const Polynomial& f : basis)
    if (f.total_degree() != 1) { linear = false; break; }
  return linear ? Purity::pure : Purity::unknown;
}

// Homogeneity and the dimension window are consequences of the construction;
// violations are implementation bugs, never input properties.
void check_cone_postconditions(const ConeResult& r, const Variety& X, Budget& budget) {
  MonomialOrder ord = MonomialOrder::grevlex(r.ideal.context()->arity());
  for (const Polynomial& f : r.ideal.groebner(ord, budget, "cone check"))
    if (!f.is_homogeneous())
      throw internal_error(std::string(cone_kind_name(r.which)) +
                           " cone ideal has an inhomogeneous basis element: " + f.str());
  int m = X.ambient_dimension(), k = X.dim();
  int cap = std::min(m, 2 * k + 1);
  if (r.which != ConeKind::c3 && (r.dim < k || r.dim > cap))
    throw internal_error(std::string(cone_kind_name(r.which)) + " cone dimension " +
                         std::to_string(r.dim) + " falls outside [" + std::to_string(k) +
                         ", " + std::to_string(cap) + "]");
}

// 2x2 minors of the matrix with rows (x - y) and v, given the three blocks'
// starting indices in a shared context.
std::vector<Polynomial> secant_alignment_minors(const ContextPtr& ctx, int m,
                                                int x_at, int y_at, int v_at) {
  std::vector<Polynomial> minors;
  for (int r = 0; r < m; ++r) {
    Polynomial dr = Polynomial::variable(ctx, x_at + r) - Polynomial::variable(ctx, y_at + r);
    for (int s = r + 1; s < m; ++s) {
      Polynomial ds = Polynomial::variable(ctx, x_at + s) - Polynomial::variable(ctx, y_at + s);
      minors.push_back(dr * Polynomial::variable(ctx, v_at + s) -
                       ds * Polynomial::variable(ctx, v_at + r));
    }
  }
  return minors;
}

// Coordinate ideal of one block, for irrelevant-locus saturation.
Ideal block_ideal(const ContextPtr& ctx, int at, int m) {
  std::vector<Polynomial> gens;
  for (int r = 0; r < m; ++r) gens.push_back(Polynomial::variable(ctx, at + r));
  return Ideal(ctx, gens);
}

Ideal substitute_zero(const Ideal& I, const std::vector<int>& vars) {
  std::vector<Polynomial> out;
  for (const Polynomial& f : I.generators()) {
    Polynomial g = f;
    for (int v : vars) g = g.substituted(static_cast<std::size_t>(v), GaussianRational());
    out.push_back(g);
  }
  return Ideal(I.context(), out);
}

// Drops variables that occur in no generator anymore (after substitution).
Ideal drop_vars(const Ideal& I, const std::vector<int>& gone, const ContextPtr& small) {
  std::vector<bool> dead(I.context()->arity(), false);
  for (int v : gone) dead[v] = true;
  std::vector<int> var_map(I.context()->arity(), -1);
  int next = 0;
  for (std::size_t v = 0; v < I.context()->arity(); ++v)
    if (!dead[v]) var_map[v] = next++;
  std::vector<Polynomial> out;
  for (const Polynomial& f : I.generators()) out.push_back(f.remapped(small, var_map));
  return Ideal(small, out);
}

ConeResult finish(ConeKind which, const Variety& X, Ideal cone_ideal,
                  std::shared_ptr<const IncidenceBuild> build, Budget& budget) {
  ConeResult r{which, std::move(cone_ideal), 0, Purity::unknown, {}, nullptr};
  r.dim = dimension(r.ideal, budget, "cone dimension");
  r.purity = classify_purity(r.ideal, r.dim, budget);
  r.build = std::move(build);
  if (which == ConeKind::c3 && r.dim != X.dim())
    r.warnings.push_back("directions-at-infinity cone has dimension " +
                         std::to_string(r.dim) + ", expected dim X = " +
                         std::to_string(X.dim()));
  check_cone_postconditions(r, X, budget);
  return r;
}

} // namespace

ConeResult c3_infinity(const Variety& X, Budget& budget) {
  require_unbounded(X);
  const ContextPtr& ctx = X.context();
  int m = X.ambient_dimension();

  std::vector<std::string> names = ctx->names();
  std::string hname = "h";
  while (ctx->index_of(hname) || hname == "i") hname += "0";
  names.push_back(hname);
  ContextPtr pctx = VariableContext::make(names, {{"affine", 0, m}, {"scale", m, m + 1}});
  int hv = m;

  std::vector<int> var_map = identity_map(m);
  std::vector<Polynomial> hgens;
  for (const Polynomial& f : X.ideal().generators()) {
    if (f.is_zero()) continue;
    hgens.push_back(f.remapped(pctx, var_map).homogenized_range(0, m + 1, hv));
  }
  if (hgens.empty()) hgens.push_back(Polynomial::zero(pctx));
  Ideal closure(pctx, hgens);
  Ideal sat = saturate_single(closure, Polynomial::variable(pctx, hv), budget,
                              "projective closure saturation");
  Ideal sliced = substitute_zero(sat, {hv});
  Ideal cone = drop_vars(sliced, {hv}, ctx);
  return finish(ConeKind::c3, X, std::move(cone), nullptr, budget);
}

ConeResult c4_infinity(const Variety& X, Budget& budget) {
  require_unbounded(X);
  const ContextPtr& ctx = X.context();
  int m = X.ambient_dimension();

  // Incidence context: p-block (p1..pm, p0), v-block (v1..vm).
  std::vector<std::string> names;
  for (int r = 1; r <= m; ++r) names.push_back("p" + std::to_string(r));
  names.push_back("p0");
  for (int r = 1; r <= m; ++r) names.push_back("v" + std::to_string(r));
  ContextPtr big = VariableContext::make(
      names, {{"p", 0, m + 1}, {"v", m + 1, 2 * m + 1}});
  int p_at = 0, p0 = m, v_at = m + 1;

  std::vector<int> to_p(m);
  for (int r = 0; r < m; ++r) to_p[r] = p_at + r;

  std::vector<Polynomial> xgens;
  for (const Polynomial& f : X.ideal().generators())
    if (!f.is_zero()) xgens.push_back(f);
  if (xgens.empty())
    return finish(ConeKind::c4, X, Ideal::zero(ctx), nullptr, budget); // X = C^m

  auto build = std::make_shared<IncidenceBuild>();
  std::vector<Polynomial> agens;
  for (const Polynomial& f : xgens) agens.push_back(f.remapped(big, to_p));
  auto jac = jacobian_matrix(xgens);
  for (std::size_t row = 0; row < jac.size(); ++row) {
    Polynomial entry = Polynomial::zero(big);
    for (int r = 0; r < m; ++r)
      entry += jac[row][r].remapped(big, to_p) * Polynomial::variable(big, v_at + r);
    agens.push_back(entry);
  }
  Ideal A(big, agens);
  build->stages.emplace_back("tangent incidence", A);

  Ideal sing = singular_locus(X, budget);
  Ideal sing_p(big, [&] {
    std::vector<Polynomial> g;
    for (const Polynomial& f : sing.generators()) g.push_back(f.remapped(big, to_p));
    return g;
  }());
  Ideal smooth_part = saturate(A, sing_p, budget, "singular locus removal");
  build->stages.emplace_back("singular locus removed", smooth_part);

  std::vector<Polynomial> hgens;
  for (const Polynomial& f : smooth_part.generators()) {
    if (f.is_zero()) continue;
    hgens.push_back(f.homogenized_range(0, m + 1, p0));
  }
  if (hgens.empty()) hgens.push_back(Polynomial::zero(big));
  Ideal closure =
      saturate_single(Ideal(big, hgens), Polynomial::variable(big, p0), budget,
                      "projective closure saturation");
  build->stages.emplace_back("projective closure", closure);

  // Slice at infinity, then drop p0 from the context.
  std::vector<std::string> small_names;
  for (int r = 1; r <= m; ++r) small_names.push_back("p" + std::to_string(r));
  for (int r = 1; r <= m; ++r) small_names.push_back("v" + std::to_string(r));
  ContextPtr small = VariableContext::make(
      small_names, {{"p", 0, m}, {"v", m, 2 * m}});
  Ideal slice = drop_vars(substitute_zero(closure, {p0}), {p0}, small);
  Ideal relevant = saturate(slice, block_ideal(small, 0, m), budget,
                            "irrelevant locus saturation");
  build->stages.emplace_back("infinity slice", relevant);

  std::vector<std::string> pnames;
  for (int r = 1; r <= m; ++r) pnames.push_back("p" + std::to_string(r));
  Ideal eliminated = eliminate(relevant, pnames, budget, "direction elimination");
  std::vector<int> to_orig(m);
  for (int r = 0; r < m; ++r) to_orig[r] = r;
  std::vector<Polynomial> out;
  for (const Polynomial& f : eliminated.generators())
    out.push_back(f.remapped(ctx, to_orig));
  Ideal cone(ctx, out);
  build->stages.emplace_back("direction cone", cone);
  return finish(ConeKind::c4, X, std::move(cone), build, budget);
}

ConeResult c5_infinity(const Variety& X, Budget& budget) {
  require_unbounded(X);
  const ContextPtr& ctx = X.context();
  int m = X.ambient_dimension();

  // Incidence context: x-block (x1..xm, x0), y-block (y1..ym, y0), v-block.
  std::vector<std::string> names;
  for (int r = 1; r <= m; ++r) names.push_back("x" + std::to_string(r));
  names.push_back("x0");
  for (int r = 1; r <= m; ++r) names.push_back("y" + std::to_string(r));
  names.push_back("y0");
  for (int r = 1; r <= m; ++r) names.push_back("v" + std::to_string(r));
  ContextPtr big = VariableContext::make(
      names,
      {{"x", 0, m + 1}, {"y", m + 1, 2 * m + 2}, {"v", 2 * m + 2, 3 * m + 2}});
  int x_at = 0, x0 = m, y_at = m + 1, y0 = 2 * m + 1, v_at = 2 * m + 2;

  std::vector<int> to_x(m), to_y(m);
  for (int r = 0; r < m; ++r) {
    to_x[r] = x_at + r;
    to_y[r] = y_at + r;
  }

  auto build = std::make_shared<IncidenceBuild>();
  std::vector<Polynomial> agens;
  for (const Polynomial& f : X.ideal().generators()) {
    if (f.is_zero()) continue;
    agens.push_back(f.remapped(big, to_x));
    agens.push_back(f.remapped(big, to_y));
  }
  for (Polynomial& mnr : secant_alignment_minors(big, m, x_at, y_at, v_at))
    agens.push_back(std::move(mnr));
  Ideal A(big, agens);
  build->stages.emplace_back("secant incidence", A);

  std::vector<Polynomial> diag;
  for (int r = 0; r < m; ++r)
    diag.push_back(Polynomial::variable(big, x_at + r) -
                   Polynomial::variable(big, y_at + r));
  Ideal off_diagonal = saturate(A, Ideal(big, diag), budget, "diagonal removal");
  build->stages.emplace_back("diagonal removed", off_diagonal);

  std::vector<Polynomial> hgens;
  for (const Polynomial& f : off_diagonal.generators()) {
    if (f.is_zero()) continue;
    hgens.push_back(f.homogenized_range(0, m + 1, x0)
                        .homogenized_range(m + 1, 2 * m + 2, y0));
  }
  if (hgens.empty()) hgens.push_back(Polynomial::zero(big));
  Polynomial x0y0 = Polynomial::variable(big, x0) * Polynomial::variable(big, y0);
  Ideal closure = saturate_single(Ideal(big, hgens), x0y0, budget,
                                  "biprojective closure saturation");
  build->stages.emplace_back("biprojective closure", closure);

  std::vector<std::string> small_names;
  for (int r = 1; r <= m; ++r) small_names.push_back("x" + std::to_string(r));
  for (int r = 1; r <= m; ++r) small_names.push_back("y" + std::to_string(r));
  for (int r = 1; r <= m; ++r) small_names.push_back("v" + std::to_string(r));
  ContextPtr small = VariableContext::make(
      small_names, {{"x", 0, m}, {"y", m, 2 * m}, {"v", 2 * m, 3 * m}});
  Ideal slice = drop_vars(substitute_zero(closure, {x0, y0}), {x0, y0}, small);
  Ideal relevant_x = saturate(slice, block_ideal(small, 0, m), budget,
                              "irrelevant locus saturation");
  Ideal relevant = saturate(relevant_x, block_ideal(small, m, m), budget,
                            "irrelevant locus saturation");
  build->stages.emplace_back("infinity slice", relevant);

  std::vector<std::string> drop;
  for (int r = 1; r <= m; ++r) drop.push_back("x" + std::to_string(r));
  for (int r = 1; r <= m; ++r) drop.push_back("y" + std::to_string(r));
  Ideal eliminated = eliminate(relevant, drop, budget, "direction elimination");
  std::vector<int> to_orig(m);
  for (int r = 0; r < m; ++r) to_orig[r] = r;
  std::vector<Polynomial> out;
  for (const Polynomial& f : eliminated.generators())
    out.push_back(f.remapped(ctx, to_orig));
  Ideal cone(ctx, out);
  build->stages.emplace_back("direction cone", cone);
  return finish(ConeKind::c5, X, std::move(cone), build, budget);
}

ConeResult cone_infinity(ConeKind kind, const Variety& X, Budget& budget) {
  switch (kind) {
    case ConeKind::c3: return c3_infinity(X, budget);
    case ConeKind::c4: return c4_infinity(X, budget);
    case ConeKind::c5: return c5_infinity(X, budget);
  }
  throw input_error("unknown cone kind");
}

InclusionReport verify_inclusions(const Variety& X, const ConeResult& c3,
                                  const ConeResult& c4, const ConeResult& c5,
                                  Budget& budget) {
  InclusionReport r;
  r.k = X.dim();
  r.ambient = X.ambient_dimension();
  r.dim_c3 = c3.dim;
  r.dim_c4 = c4.dim;
  r.dim_c5 = c5.dim;

  r.c4_vanishes_on_c3 = true;
  for (const Polynomial& g : c4.ideal.generators()) {
    if (!radical_membership(g, c3.ideal, budget, "inclusion chain")) {
      r.c4_vanishes_on_c3 = false;
      r.failing_generator = g.str();
      break;
    }
  }
  r.c5_vanishes_on_c4 = true;
  for (const Polynomial& g : c5.ideal.generators()) {
    if (!radical_membership(g, c4.ideal, budget, "inclusion chain")) {
      r.c5_vanishes_on_c4 = false;
      if (r.failing_generator.empty()) r.failing_generator = g.str();
      break;
    }
  }
  r.dim_c3_is_k = (r.dim_c3 == r.k);
  int cap = std::min(r.ambient, 2 * r.k + 1);
  r.dim_window = (r.k <= r.dim_c4 && r.dim_c4 <= r.dim_c5 && r.dim_c5 <= cap);
  return r;
}

InclusionReport verify_inclusions(const Variety& X, Budget& budget) {
  ConeResult c3 = c3_infinity(X, budget);
  ConeResult c4 = c4_infinity(X, budget);
  ConeResult c5 = c5_infinity(X, budget);
  return verify_inclusions(X, c3, c4, c5, budget);
}

} // namespace tci
