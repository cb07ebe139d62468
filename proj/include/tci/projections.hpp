#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tci/cones.hpp"
#include "tci/errors.hpp"
#include "tci/ideal.hpp"
#include "tci/linalg.hpp"

namespace tci {

// Outcome of a mechanically checked statement.
enum class Verdict {
  verified,                  // hypotheses certified, conclusions hold
  hypothesis_not_satisfied,  // a hypothesis provably fails
  hypothesis_not_certified,  // hypothesis status undecidable by our tests
  failed,                    // hypotheses certified but a conclusion fails
};

std::string verdict_name(Verdict v);

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;  // human-readable evidence (dims, counts, generators)
};

struct TheoremReport {
  std::string statement;  // which claim was checked
  std::vector<CheckItem> hypotheses;
  std::vector<CheckItem> conclusions;
  Verdict verdict = Verdict::hypothesis_not_certified;
  std::map<std::string, std::string> data;  // extra key/value evidence
};

// True iff the cone meets the subspace S only at the origin, i.e. the ideal
// obtained by substituting a generic point of S into the cone's equations is
// zero-dimensional (at most the origin).  S of dimension 0 is trivially fine.
bool cone_subspace_trivial(const ConeResult& cone, const LinearSubspace& S,
                           Budget& budget);

// Searches for a subspace W of the given dimension with W meeting the
// directions-at-infinity cone of X only at 0.  Entries are small Gaussian
// integers drawn from a seeded generator; throws input_error after the retry
// limit (a dimension that large may not admit such a subspace).
LinearSubspace find_transverse_subspace(const ConeResult& c3_cone,
                                        int w_dim, unsigned long long seed,
                                        Budget& budget, int retries = 64);

// True iff the linear projection along W restricted to X is proper, i.e.
// W meets the directions-at-infinity cone of X only at the origin.
bool check_proper(const ConeResult& c3_cone, const LinearSubspace& W,
                  Budget& budget);

// Counts the sheets of the projection of X along W onto a complement:
// the number of points (with multiplicity) of a generic fibre.  Requires the
// projection to be proper (input_error otherwise).  Deterministic for a
// fixed seed.
long long sheet_count(const Variety& X, const ConeResult& c3_cone,
                      const LinearSubspace& W, unsigned long long seed,
                      Budget& budget);

// Ideal of the critical locus of the projection of X along W: points of X
// where the complementary-coordinate block of the Jacobian drops rank, so
// the fibre direction W touches the tangent space.  Contains Sing(X).
Ideal critical_locus(const Variety& X, const LinearSubspace& W,
                     Budget& budget);

// Checks: if W meets the tangent-limit cone C4 of X only at 0, then away
// from Sing(X) the projection along W has only finitely many critical
// points.
TheoremReport verify_theorem_1_2(const Variety& X, const LinearSubspace& W,
                                 Budget& budget);

// Checks, for the i-th (1-based) coordinate form of the W-block of a
// splitting z = z' + z'': if the secant-limit cone C5 meets ker(pi_i) = the
// hyperplane of W-coordinates other than i only at 0, then the image of X
// under (z', z_i'') is a hypersurface (or all) of the target.
TheoremReport verify_theorem_1_3(const Variety& X, const Splitting& split,
                                 int index, Budget& budget);

// Checks the linearity criterion: if the secant-limit cone C5 is a linear
// subspace of dimension dim X, then X itself is an affine subspace.
TheoremReport check_affine_linearity(const Variety& X, Budget& budget);

}  // namespace tci
