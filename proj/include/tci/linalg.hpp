#ifndef TCI_LINALG_HPP
#define TCI_LINALG_HPP

#include <complex>
#include <optional>
#include <vector>

#include "tci/rational.hpp"

namespace tci {

// Dense exact matrix, row-major; rows may be empty collectively (0 x n).
using QMatrix = std::vector<std::vector<GaussianRational>>;

int qmatrix_rank(QMatrix M);

// Inverse of a square matrix; nullopt when singular.
std::optional<QMatrix> qmatrix_inverse(const QMatrix& M);

// Linear subspace of C^m given by an explicit list of basis vectors.  The
// zero subspace (no vectors) is legal: projection kernels degenerate to it
// when m - k = 1.
class LinearSubspace {
public:
    static LinearSubspace make(int ambient, std::vector<std::vector<GaussianRational>> vectors);

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(vectors_.size()); }
    const std::vector<std::vector<GaussianRational>>& vectors() const { return vectors_; }

    // Subspace spanned by all basis vectors except the one at `skip`
    // (0-based).
    LinearSubspace without(int skip) const;

private:
    LinearSubspace(int ambient, std::vector<std::vector<GaussianRational>> vectors)
        : ambient_(ambient), vectors_(std::move(vectors)) {}
    int ambient_ = 0;
    std::vector<std::vector<GaussianRational>> vectors_;
};

// Greedy complement: extends S by standard basis vectors until the span is
// everything, and returns the subspace the added vectors span.
LinearSubspace standard_complement(const LinearSubspace& S);

// Decomposition C^m = V + W with V of the variety's dimension k and W of
// dimension m - k.  Only complementarity is required, not orthogonality:
// every symbolic conclusion checked downstream is invariant under invertible
// linear coordinate change.
struct Splitting {
    LinearSubspace V;
    LinearSubspace W;

    static Splitting make(LinearSubspace V, LinearSubspace W);
};

// Solves A x = b over complex doubles by partial-pivot elimination; false
// when the matrix is numerically singular.
bool solve_complex(std::vector<std::vector<std::complex<double>>> A,
                   std::vector<std::complex<double>> b,
                   std::vector<std::complex<double>>& out);

} // namespace tci

#endif
