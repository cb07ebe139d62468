#include "tci/witness.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "tci/errors.hpp"

namespace tci {

namespace {

double hermitian_norm(const std::vector<std::complex<double>>& v) {
    double s = 0;
    for (const auto& z : v) s += std::norm(z);
    return std::sqrt(s);
}

std::vector<std::complex<double>> scaled_by(
    std::vector<std::complex<double>> v, double factor) {
    for (auto& z : v) z *= factor;
    return v;
}

std::string fmt(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

// least-squares slope of log10(y) against log10(x)
std::optional<double> loglog_slope(const std::vector<double>& xs,
                                   const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2) return std::nullopt;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(xs.size());
    for (std::size_t j = 0; j < xs.size(); ++j) {
        if (xs[j] <= 0 || ys[j] <= 0) return std::nullopt;
        double lx = std::log10(xs[j]), ly = std::log10(ys[j]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    double den = n * sxx - sx * sx;
    if (std::abs(den) < 1e-12) return std::nullopt;
    return (n * sxy - sx * sy) / den;
}

}  // namespace

WitnessArc WitnessArc::make(const Variety& X, std::string parameter,
                            std::vector<Polynomial> components) {
    const auto m = X.context()->arity();
    if (components.size() != m)
        throw input_error("the arc needs one component per ambient variable (" +
                          std::to_string(m) + ")");
    if (components.empty())
        throw input_error("the arc has no components");
    ContextPtr pctx = components.front().context();
    if (pctx->arity() != 1)
        throw input_error("arc components must be polynomials in the single "
                          "parameter '" + parameter + "'");
    for (const auto& c : components) require_same_context(pctx, c.context());

    bool escapes = false;
    for (const auto& c : components)
        if (!c.is_constant()) escapes = true;
    if (!escapes)
        throw input_error("the arc is constant; witness curves must escape "
                          "to infinity");

    for (const auto& f : X.ideal().generators()) {
        if (f.is_zero()) continue;
        if (!f.composed(components).is_zero())
            throw input_error("the arc does not lie in the variety: "
                              "generator " + f.str() +
                              " does not vanish on it");
    }

    std::vector<Polynomial> derivs;
    derivs.reserve(components.size());
    for (const auto& c : components) derivs.push_back(c.derivative(0));
    return WitnessArc(X.context(), std::move(parameter),
                      std::move(components), std::move(derivs));
}

std::vector<std::complex<double>> WitnessArc::point(
    std::complex<double> s) const {
    std::vector<std::complex<double>> out;
    out.reserve(components_.size());
    for (const auto& c : components_) out.push_back(c.evaluate({s}));
    return out;
}

std::vector<std::complex<double>> WitnessArc::velocity(
    std::complex<double> s) const {
    std::vector<std::complex<double>> out;
    out.reserve(derivatives_.size());
    for (const auto& c : derivatives_) out.push_back(c.evaluate({s}));
    return out;
}

WitnessArc WitnessArc::shifted(long delta) const {
    ContextPtr pctx = components_.front().context();
    auto s_plus = Polynomial::variable(pctx, 0) +
                  Polynomial::constant(pctx, GaussianRational(delta));
    std::vector<Polynomial> comps, derivs;
    for (const auto& c : components_) comps.push_back(c.composed({s_plus}));
    for (const auto& c : comps) derivs.push_back(c.derivative(0));
    return WitnessArc(ambient_, parameter_, std::move(comps),
                      std::move(derivs));
}

SampleSchedule SampleSchedule::standard(unsigned long long seed) {
    return make({1e2, 1e3, 1e4, 1e5, 1e6}, seed);
}

SampleSchedule SampleSchedule::make(std::vector<double> radii,
                                    unsigned long long seed) {
    if (radii.size() < 2)
        throw input_error("the sample schedule needs at least two radii");
    for (std::size_t j = 0; j < radii.size(); ++j) {
        if (radii[j] <= 0)
            throw input_error("sample radii must be positive");
        if (j > 0 && radii[j] <= radii[j - 1])
            throw input_error("sample radii must be strictly increasing");
    }
    if (radii.back() < 1e3 * radii.front())
        throw input_error("the final radius must be at least 1000 times the "
                          "first (the samples must actually escape)");
    SampleSchedule s;
    s.radii = std::move(radii);
    s.seed = seed;
    return s;
}

std::vector<std::complex<double>> SampleSchedule::parameter_values() const {
    std::mt19937_64 gen(seed);
    auto angle = [&gen]() {
        // portable uniform angle in [0, 2*pi)
        return 2.0 * 3.14159265358979323846 *
               (static_cast<double>(gen() >> 11) * 0x1p-53);
    };
    std::vector<std::complex<double>> out;
    out.reserve(radii.size() * 2);
    for (double r : radii) {
        out.push_back({r, 0.0});
        double a = angle();
        out.push_back(std::polar(r, a));
    }
    return out;
}

SampleSet sample_directions(ConeKind kind, const WitnessArc& arc,
                            const SampleSchedule& sched) {
    if (kind == ConeKind::c5)
        throw input_error("secant sampling needs a pair of arcs; use the "
                          "secant sampler");
    SampleSet out;
    for (const auto& s : sched.parameter_values()) {
        auto v = kind == ConeKind::c3 ? arc.point(s) : arc.velocity(s);
        double n = hermitian_norm(v);
        if (n < 1e-300) {
            out.warnings.push_back(
                "skipped a degenerate sample at |s| = " + fmt(std::abs(s)) +
                (kind == ConeKind::c3 ? " (zero position)"
                                      : " (zero velocity)"));
            continue;
        }
        out.samples.push_back({std::abs(s), scaled_by(std::move(v), 1.0 / n)});
    }
    return out;
}

SampleSet sample_secants(const WitnessArc& arc1, const WitnessArc& arc2,
                         const SampleSchedule& sched) {
    require_same_context(arc1.ambient(), arc2.ambient());
    SampleSet out;
    for (const auto& s : sched.parameter_values()) {
        auto p = arc1.point(s);
        auto q = arc2.point(s);
        std::vector<std::complex<double>> d(p.size());
        for (std::size_t j = 0; j < p.size(); ++j) d[j] = p[j] - q[j];
        double n = hermitian_norm(d);
        if (n < 1e-300) {
            out.warnings.push_back("skipped a coincident pair at |s| = " +
                                   fmt(std::abs(s)));
            continue;
        }
        out.samples.push_back({std::abs(s), scaled_by(std::move(d), 1.0 / n)});
    }
    return out;
}

MembershipReport check_cone_membership(const ConeResult& cone,
                                       const SampleSet& samples) {
    MembershipReport rep;
    rep.notes = samples.warnings;
    if (samples.samples.empty()) {
        rep.notes.push_back("no usable samples");
        return rep;
    }

    // scale each generator so its largest coefficient has modulus 1
    std::vector<std::pair<Polynomial, double>> gens;
    for (const auto& g : cone.ideal.generators()) {
        if (g.is_zero()) continue;
        double biggest = 0;
        for (const auto& [mono, coeff] : g.terms())
            biggest = std::max(biggest, std::abs(coeff.to_complex()));
        gens.emplace_back(g, biggest);
    }

    std::map<double, double> by_radius;
    for (const auto& s : samples.samples) {
        double worst = 0;
        for (const auto& [g, scale] : gens)
            worst = std::max(worst, std::abs(g.evaluate(s.v)) / scale);
        auto [it, fresh] = by_radius.emplace(s.radius, worst);
        if (!fresh) it->second = std::max(it->second, worst);
    }
    for (const auto& [r, res] : by_radius) {
        rep.radii.push_back(r);
        rep.residuals.push_back(res);
    }

    bool decaying = true;
    for (std::size_t j = 1; j + 1 < rep.residuals.size(); ++j)
        if (rep.residuals[j + 1] > 1.1 * rep.residuals[j]) decaying = false;
    rep.pass = decaying && rep.residuals.back() < 1e-4;

    // fit the decay rate over samples above the double-precision floor
    std::vector<double> xs, ys;
    for (std::size_t j = 0; j < rep.residuals.size(); ++j)
        if (rep.residuals[j] > 1e-16) {
            xs.push_back(rep.radii[j]);
            ys.push_back(rep.residuals[j]);
        }
    if (xs.size() >= 2) rep.slope = loglog_slope(xs, ys);
    if (gens.empty())
        rep.notes.push_back("the cone ideal is zero; membership is vacuous");
    return rep;
}

RegionReport algebraic_region_check(const std::vector<WitnessArc>& arcs,
                                    const LinearSubspace& V1,
                                    const LinearSubspace& V2, double A,
                                    double B, const SampleSchedule& sched) {
    if (arcs.empty()) throw input_error("the region check needs at least one arc");
    (void)Splitting::make(V1, V2);  // exact complementarity validation
    const int m = V1.ambient();
    for (const auto& arc : arcs)
        if (static_cast<int>(arc.ambient()->arity()) != m)
            throw input_error("arc ambient dimension does not match the "
                              "subspaces'");

    // columns: V1 basis then V2 basis
    std::vector<std::vector<std::complex<double>>> M(
        static_cast<std::size_t>(m),
        std::vector<std::complex<double>>(static_cast<std::size_t>(m)));
    for (int j = 0; j < V1.dim(); ++j)
        for (int s = 0; s < m; ++s)
            M[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)] =
                V1.vectors()[static_cast<std::size_t>(j)]
                            [static_cast<std::size_t>(s)].to_complex();
    for (int j = 0; j < V2.dim(); ++j)
        for (int s = 0; s < m; ++s)
            M[static_cast<std::size_t>(s)]
             [static_cast<std::size_t>(V1.dim() + j)] =
                V2.vectors()[static_cast<std::size_t>(j)]
                            [static_cast<std::size_t>(s)].to_complex();

    RegionReport rep;
    rep.coeff_a = A;
    rep.exponent_b = B;
    std::vector<double> xs, ys;
    for (const auto& arc : arcs) {
        for (const auto& s : sched.parameter_values()) {
            auto z = arc.point(s);
            std::vector<std::complex<double>> c;
            if (!solve_complex(M, z, c))
                throw input_error("direct-sum decomposition failed; the "
                                  "subspace bases are numerically singular");
            std::vector<std::complex<double>> zp(z.size()), zpp(z.size());
            for (int j = 0; j < V1.dim(); ++j)
                for (int t = 0; t < m; ++t)
                    zp[static_cast<std::size_t>(t)] +=
                        c[static_cast<std::size_t>(j)] *
                        V1.vectors()[static_cast<std::size_t>(j)]
                                    [static_cast<std::size_t>(t)].to_complex();
            for (int j = 0; j < V2.dim(); ++j)
                for (int t = 0; t < m; ++t)
                    zpp[static_cast<std::size_t>(t)] +=
                        c[static_cast<std::size_t>(V1.dim() + j)] *
                        V2.vectors()[static_cast<std::size_t>(j)]
                                    [static_cast<std::size_t>(t)].to_complex();
            RegionSampleRow row;
            row.radius = std::abs(s);
            row.norm_v1 = hermitian_norm(zp);
            row.norm_v2 = hermitian_norm(zpp);
            row.bound = A * std::pow(1.0 + row.norm_v1, B);
            row.ok = row.norm_v2 <= row.bound;
            rep.rows.push_back(row);
            if (row.norm_v2 > 1e-300) {
                xs.push_back(1.0 + row.norm_v1);
                ys.push_back(row.norm_v2);
            }
        }
    }
    rep.holds = std::all_of(rep.rows.begin(), rep.rows.end(),
                            [](const RegionSampleRow& r) { return r.ok; });
    rep.fitted_exponent = loglog_slope(xs, ys);
    return rep;
}

}  // namespace tci
