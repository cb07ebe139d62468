#ifndef TCI_ORDER_HPP
#define TCI_ORDER_HPP

#include <string>
#include <vector>

#include "tci/monomial.hpp"

namespace tci {

// Multiplicative total order on monomials.
//
// Internal form: an optional weight row compared first, then a sequence of
// variable groups compared graded-reverse-lexicographically inside each
// group.  This one shape realizes every supported kind:
//   grevlex           = one group holding all variables
//   lex               = singleton groups in variable sequence
//   block elimination = one group per block (a group of earlier position
//                       dominates, so the first block is eliminated)
//   weighted          = weight row, ties broken by full grevlex
// Every instance is a well-order (Dickson), and the graded kinds refine
// total degree.
class MonomialOrder {
public:
    enum class InnerKind { grevlex, lex };

    static MonomialOrder lex(std::size_t arity);
    static MonomialOrder grevlex(std::size_t arity);

    // Groups listed first dominate.  Used with two groups this is the
    // classical elimination order for the first group.
    static MonomialOrder blocks(std::size_t arity,
                                const std::vector<std::vector<int>>& groups,
                                const std::vector<InnerKind>& inner);

    static MonomialOrder weighted(std::vector<long> weights);

    // grevlex on a permuted variable sequence; `sequence` runs from most to
    // least significant.  The least variable sits last, which is what the
    // reverse-lex saturation shortcut needs.
    static MonomialOrder grevlex_sequence(std::vector<int> sequence);

    // -1, 0, +1 for a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    std::size_t arity() const { return arity_; }

    // True when comparisons refine total degree (single all-variable group,
    // no weights).
    bool is_graded() const;

    // True when any monomial touching `drop` exceeds every monomial free of
    // it, i.e. a Groebner basis in this order solves elimination of `drop`.
    bool eliminates(const std::vector<int>& drop) const;

    // Stable serialization; doubles as the basis-cache key.
    std::string key() const;

private:
    std::size_t arity_ = 0;
    std::vector<long> weights_;              // empty: unweighted
    std::vector<std::vector<int>> groups_;   // each inner sequence: high -> low
};

} // namespace tci

#endif
