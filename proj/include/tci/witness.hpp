#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "tci/cones.hpp"
#include "tci/ideal.hpp"
#include "tci/linalg.hpp"
#include "tci/polynomial.hpp"

namespace tci {

// A polynomial curve s -> phi(s) inside a variety, used to realize escaping
// point sequences.  Construction checks exactly that every generator of the
// variety vanishes on the curve and that the curve is non-constant.
class WitnessArc {
public:
    static WitnessArc make(const Variety& X, std::string parameter,
                           std::vector<Polynomial> components);

    const ContextPtr& ambient() const { return ambient_; }
    const std::string& parameter() const { return parameter_; }
    const std::vector<Polynomial>& components() const { return components_; }

    // phi and phi' at a complex parameter value.
    std::vector<std::complex<double>> point(std::complex<double> s) const;
    std::vector<std::complex<double>> velocity(std::complex<double> s) const;

    // The reparametrized curve s -> phi(s + delta), exact.
    WitnessArc shifted(long delta) const;

private:
    WitnessArc(ContextPtr ambient, std::string parameter,
               std::vector<Polynomial> components,
               std::vector<Polynomial> derivatives)
        : ambient_(std::move(ambient)), parameter_(std::move(parameter)),
          components_(std::move(components)),
          derivatives_(std::move(derivatives)) {}

    ContextPtr ambient_;
    std::string parameter_;
    std::vector<Polynomial> components_;   // in a one-variable context
    std::vector<Polynomial> derivatives_;  // d/ds of each component
};

// Sampling plan: parameter moduli (strictly increasing, spanning at least
// three decades) and the per-radius arguments (0 plus one seeded draw).
struct SampleSchedule {
    std::vector<double> radii;
    unsigned long long seed = 0;

    static SampleSchedule standard(unsigned long long seed);
    static SampleSchedule make(std::vector<double> radii,
                               unsigned long long seed);

    // Two parameter values per radius: argument 0 and a seeded random angle.
    std::vector<std::complex<double>> parameter_values() const;
};

struct DirectionSample {
    double radius = 0;
    std::vector<std::complex<double>> v;  // Hermitian-unit direction
};

struct SampleSet {
    std::vector<DirectionSample> samples;
    std::vector<std::string> warnings;
};

// Normalized positions phi(s)/|phi(s)| (kind c3) or normalized arc tangents
// phi'(s)/|phi'(s)| (kind c4).  Degenerate samples are skipped with a
// warning.  Kind c5 is rejected: secants need a pair of arcs.
SampleSet sample_directions(ConeKind kind, const WitnessArc& arc,
                            const SampleSchedule& sched);

// Normalized secants (phi(s) - psi(s))/|phi(s) - psi(s)| with both arcs
// taken at the same parameter value; coincident pairs are skipped with a
// warning.
SampleSet sample_secants(const WitnessArc& arc1, const WitnessArc& arc2,
                         const SampleSchedule& sched);

struct MembershipReport {
    std::vector<double> radii;      // one entry per distinct radius
    std::vector<double> residuals;  // max scaled residual at that radius
    std::optional<double> slope;    // log-log decay rate, absent near 0/0
    bool pass = false;
    std::vector<std::string> notes;
};

// Evaluates the cone's generators (scaled so the largest coefficient has
// modulus 1) at every sampled direction.  PASS iff the final residual is
// below 1e-4 and the per-radius residuals decay monotonically after the
// first step, with 10% slack.
MembershipReport check_cone_membership(const ConeResult& cone,
                                       const SampleSet& samples);

struct RegionSampleRow {
    double radius = 0;
    double norm_v1 = 0;  // |z'|
    double norm_v2 = 0;  // |z''|
    double bound = 0;    // A * (1 + |z'|)^B
    bool ok = false;
};

struct RegionReport {
    std::vector<RegionSampleRow> rows;
    bool holds = false;
    std::optional<double> fitted_exponent;  // log-log slope of |z''| vs 1+|z'|
    double coeff_a = 0;
    double exponent_b = 0;
    std::vector<std::string> warnings;
};

// Checks |z''| <= A (1 + |z'|)^B for every arc sample, where z = z' + z'' is
// the direct-sum decomposition along V1 and V2 (which must be complementary;
// exact rank validation).  Also fits the observed exponent.
RegionReport algebraic_region_check(const std::vector<WitnessArc>& arcs,
                                    const LinearSubspace& V1,
                                    const LinearSubspace& V2, double A,
                                    double B, const SampleSchedule& sched);

}  // namespace tci
