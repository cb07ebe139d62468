#ifndef TCI_IDEAL_HPP
#define TCI_IDEAL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "tci/polynomial.hpp"

namespace tci {

class Budget;

// Finitely generated ideal in Q(i)[x_1..x_m].  Value type with shared,
// immutable payload; reduced Groebner bases are memoized per order behind a
// mutex, so concurrent readers are safe.
class Ideal {
public:
    Ideal(ContextPtr ctx, std::vector<Polynomial> generators);

    static Ideal zero(ContextPtr ctx) {
        return Ideal(ctx, {Polynomial::zero(ctx)});
    }
    static Ideal unit(ContextPtr ctx) {
        return Ideal(ctx, {Polynomial::constant(ctx, GaussianRational(1))});
    }

    const ContextPtr& context() const { return impl_->ctx; }
    // Never empty: the zero ideal keeps one zero generator.
    const std::vector<Polynomial>& generators() const { return impl_->gens; }

    bool is_zero_ideal() const;

    // Reduced Groebner basis in `ord` (monic, autoreduced, sorted by
    // descending leading monomial).  The empty vector is the basis of the
    // zero ideal.  Results are cached per order key, write-once.
    const std::vector<Polynomial>& groebner(const MonomialOrder& ord, Budget& budget,
                                            const char* stage = "groebner basis") const;

    std::optional<std::vector<Polynomial>> cached_groebner(const MonomialOrder& ord) const;

private:
    struct Impl {
        ContextPtr ctx;
        std::vector<Polynomial> gens;
        mutable std::mutex lock;
        mutable std::map<std::string, std::shared_ptr<const std::vector<Polynomial>>> bases;
    };
    std::shared_ptr<Impl> impl_;
};

// Hilbert series data of a homogeneous (monomial) quotient: the numerator
// K(t) with K(t)/(1-t)^n the series over n variables, plus the values read
// off after cancelling every (1-t) factor.
struct HilbertData {
    std::vector<long long> numerator; // K(t) before cancellation
    int projective_dimension = -1;    // dim of the projective set, -1 if empty
    long long degree = 0;             // Q(1) after cancellation
};

// Affine algebraic set with its defining ideal; the Krull dimension k is
// computed eagerly at construction.  Callers assert the ideal is radical and
// equidimensional where the geometry requires it.
class Variety {
public:
    static Variety analyze(Ideal ideal, Budget& budget,
                           std::optional<int> claimed_dim = std::nullopt);

    const Ideal& ideal() const { return ideal_; }
    const ContextPtr& context() const { return ideal_.context(); }
    int ambient_dimension() const { return static_cast<int>(context()->arity()); }
    int dim() const { return k_; }

private:
    Variety(Ideal ideal, int k) : ideal_(std::move(ideal)), k_(k) {}
    Ideal ideal_;
    int k_;
};

} // namespace tci

#endif
