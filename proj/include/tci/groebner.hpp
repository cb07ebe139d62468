#ifndef TCI_GROEBNER_HPP
#define TCI_GROEBNER_HPP

#include <vector>

#include "tci/errors.hpp"
#include "tci/ideal.hpp"

namespace tci {

// Optional hard caps on top of the step budget.  A zero cap is inactive.
struct EngineLimits {
    int degree_cap = 0; // reject S-pairs whose lcm exceeds this total degree
};

// Reduced Groebner basis of the given generators: Buchberger completion with
// the Gebauer-Moeller pair criteria and normal (smallest-lcm) selection,
// followed by minimalization and tail reduction.  Elements come back monic,
// sorted by descending leading monomial.  The zero ideal yields {}.
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens,
                                       const MonomialOrder& ord, Budget& budget,
                                       const char* stage = "groebner basis",
                                       const EngineLimits& limits = {});

// Remainder of f under multivariate division by `basis` (scanned in order).
// Exact: f - result lies in the ideal generated by the basis.  Canonical
// normal form when `basis` is a Groebner basis in `ord`.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& ord, Budget& budget,
                       const char* stage = "normal form");

bool reduces_to_zero(const Polynomial& f, const std::vector<Polynomial>& basis,
                     const MonomialOrder& ord, Budget& budget,
                     const char* stage = "normal form");

// Runs completion only until a unit turns up; cheaper than a full basis when
// the answer is "the ideal is everything" (radical membership tests).
bool groebner_reaches_unit(const std::vector<Polynomial>& gens,
                           const MonomialOrder& ord, Budget& budget,
                           const char* stage);

bool basis_has_unit(const std::vector<Polynomial>& basis);

// Executable postcondition: every S-polynomial of the basis reduces to zero.
bool verify_groebner(const std::vector<Polynomial>& basis, const MonomialOrder& ord,
                     Budget& budget);

} // namespace tci

#endif
