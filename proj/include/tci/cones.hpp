#ifndef TCI_CONES_HPP
#define TCI_CONES_HPP

#include <memory>
#include <string>
#include <vector>

#include "tci/ideal_ops.hpp"

namespace tci {

enum class ConeKind { c3, c4, c5 };

const char* cone_kind_name(ConeKind k);
ConeKind cone_kind_from_name(const std::string& name);

// pure: certified equidimensional (principal ideal, linear forms, or the
// whole space); zero: the cone is the origin alone; unknown: no certificate
// (decomposition is out of scope, so no claim is made either way).
enum class Purity { pure, unknown, zero };

const char* purity_name(Purity p);

// Staged ideals of the incidence pipeline, kept for diagnostics.  Each
// stage's variety contains the image of the previous stage under the
// documented transformation.
struct IncidenceBuild {
    std::vector<std::pair<std::string, Ideal>> stages;
};

// A cone at infinity, expressed in the coordinates of the original ambient
// space (directions share the variety's coordinate names).
struct ConeResult {
    ConeKind which = ConeKind::c3;
    Ideal ideal;
    int dim = 0;
    Purity purity = Purity::unknown;
    std::vector<std::string> warnings;
    std::shared_ptr<const IncidenceBuild> build; // null for c3
};

// Directions of escape: homogenize with a fresh variable, saturate by it,
// slice at infinity.  The result's dimension should equal dim X; a mismatch
// is reported as a warning, not an error.
ConeResult c3_infinity(const Variety& X, Budget& budget);

// Limits of tangent vectors at smooth escaping points, via the incidence
// set {(p, v) : p in X smooth, v in ker d_pF}.
ConeResult c4_infinity(const Variety& X, Budget& budget);

// Limits of rescaled secants, via the incidence set
// {(x, y, v) : x, y in X, (x - y) parallel v} with the diagonal removed.
ConeResult c5_infinity(const Variety& X, Budget& budget);

ConeResult cone_infinity(ConeKind kind, const Variety& X, Budget& budget);

struct InclusionReport {
    int k = 0;
    int ambient = 0;
    int dim_c3 = 0, dim_c4 = 0, dim_c5 = 0;
    bool c4_vanishes_on_c3 = false; // V(C3) subset of V(C4)
    bool c5_vanishes_on_c4 = false; // V(C4) subset of V(C5)
    bool dim_c3_is_k = false;
    bool dim_window = false;        // k <= dim C4 <= dim C5 <= min(m, 2k+1)
    std::string failing_generator;  // first chain violation, if any

    bool pass() const {
        return c4_vanishes_on_c3 && c5_vanishes_on_c4 && dim_c3_is_k && dim_window;
    }
};

// Checks the chain V(C3) subset V(C4) subset V(C5) generator-by-generator
// via radical membership, plus the dimension window.
InclusionReport verify_inclusions(const Variety& X, const ConeResult& c3,
                                  const ConeResult& c4, const ConeResult& c5,
                                  Budget& budget);
InclusionReport verify_inclusions(const Variety& X, Budget& budget);

} // namespace tci

#endif
