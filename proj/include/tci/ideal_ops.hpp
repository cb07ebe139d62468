#ifndef TCI_IDEAL_OPS_HPP
#define TCI_IDEAL_OPS_HPP

#include <string>
#include <vector>

#include "tci/groebner.hpp"
#include "tci/ideal.hpp"

namespace tci {

// Elimination ideal I n Q(i)[remaining vars], computed with a block order
// (dropped variables first, graded inside each block).  The result lives in
// the restricted context; its generators generate the full elimination ideal.
Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop, Budget& budget,
                const char* stage = "elimination");

// I : g^infty.  General route adjoins t and eliminates it from I + <1 - t*g>.
// For homogeneous I and a plain variable g the reverse-lex shortcut (grevlex
// with g last, then divide out g powers) computes the same ideal without the
// auxiliary variable.
Ideal saturate_single(const Ideal& I, const Polynomial& g, Budget& budget,
                      const char* stage = "saturation");

// I : J^infty as the intersection of the single-generator saturations.
Ideal saturate(const Ideal& I, const Ideal& J, Budget& budget,
               const char* stage = "saturation");

// A n B via the auxiliary variable: eliminate t from t*A + (1-t)*B.
Ideal intersect(const Ideal& A, const Ideal& B, Budget& budget,
                const char* stage = "ideal intersection");

// g in rad(I), decided by whether I + <1 - t*g> reaches 1 (completion aborts
// at the first unit).
bool radical_membership(const Polynomial& g, const Ideal& I, Budget& budget,
                        const char* stage = "radical membership");

// Krull dimension of V(I) as a subset of C^m: the maximum size of a variable
// subset meeting no leading monomial of a graded-order basis; -1 when V(I)
// is empty.
int dimension(const Ideal& I, Budget& budget, const char* stage = "dimension");

// Hilbert series data of the projective closure: homogenize a graded-order
// basis with a fresh variable, saturate by it, and read the numerator off
// the leading-term ideal.
HilbertData hilbert_projective(const Ideal& I, Budget& budget,
                               const char* stage = "hilbert series");

// Degree of the projective closure of X (sum of the cancelled Hilbert
// numerator at 1).  Cross-checks the closure dimension against X.dim().
long long degree(const Variety& X, Budget& budget);

// Number of points of V(I) counted with multiplicity (= dim of the quotient
// as a C-vector space); input must have dimension <= 0.
long long zero_dim_count(const Ideal& I, Budget& budget,
                         const char* stage = "fiber count");

// rows = generators, columns = variables.
std::vector<std::vector<Polynomial>> jacobian_matrix(const std::vector<Polynomial>& F);

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& M);

// X.ideal plus the (m-k) x (m-k) minors of the Jacobian.  Callers assert the
// ideal is radical and equidimensional for the Jacobian criterion to mean
// "singular points".
Ideal singular_locus(const Variety& X, Budget& budget);

bool ideal_contains(const Ideal& I, const Polynomial& f, Budget& budget);
bool ideal_equal(const Ideal& A, const Ideal& B, Budget& budget);

// V(A) == V(B): every generator of each side lies in the radical of the
// other.
bool same_variety(const Ideal& A, const Ideal& B, Budget& budget);

} // namespace tci

#endif
