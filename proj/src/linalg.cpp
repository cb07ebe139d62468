#include "tci/linalg.hpp"

#include <cmath>

#include "tci/errors.hpp"

namespace tci {

namespace {

bool is_zero(const GaussianRational& x) { return x.is_zero(); }

} // namespace

int qmatrix_rank(QMatrix M) {
  if (M.empty()) return 0;
  std::size_t rows = M.size(), cols = M[0].size();
  for (const auto& r : M)
    if (r.size() != cols) throw internal_error("ragged matrix");
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && is_zero(M[pivot][c])) ++pivot;
    if (pivot == rows) continue;
    std::swap(M[pivot], M[rank]);
    GaussianRational inv = M[rank][c].inverse();
    for (std::size_t j = c; j < cols; ++j) M[rank][j] = M[rank][j] * inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || is_zero(M[r][c])) continue;
      GaussianRational f = M[r][c];
      for (std::size_t j = c; j < cols; ++j)
        M[r][j] = M[r][j] - f * M[rank][j];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

std::optional<QMatrix> qmatrix_inverse(const QMatrix& M) {
  std::size_t n = M.size();
  for (const auto& r : M)
    if (r.size() != n) return std::nullopt;
  // Gauss-Jordan on [M | I].
  QMatrix A = M;
  QMatrix inv(n, std::vector<GaussianRational>(n));
  for (std::size_t k = 0; k < n; ++k) inv[k][k] = GaussianRational(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && is_zero(A[pivot][c])) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(A[pivot], A[c]);
    std::swap(inv[pivot], inv[c]);
    GaussianRational s = A[c][c].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      A[c][j] = A[c][j] * s;
      inv[c][j] = inv[c][j] * s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || is_zero(A[r][c])) continue;
      GaussianRational f = A[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        A[r][j] = A[r][j] - f * A[c][j];
        inv[r][j] = inv[r][j] - f * inv[c][j];
      }
    }
  }
  return inv;
}

LinearSubspace LinearSubspace::make(int ambient,
                                    std::vector<std::vector<GaussianRational>> vectors) {
  if (ambient < 0) throw input_error("negative ambient dimension");
  if (static_cast<int>(vectors.size()) > ambient)
    throw input_error("more basis vectors than the ambient dimension allows");
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != ambient)
      throw input_error("basis vector length does not match the ambient dimension");
  if (!vectors.empty() &&
      qmatrix_rank(vectors) != static_cast<int>(vectors.size()))
    throw input_error("basis vectors are linearly dependent");
  return LinearSubspace(ambient, std::move(vectors));
}

LinearSubspace LinearSubspace::without(int skip) const {
  if (skip < 0 || skip >= dim()) throw input_error("basis index out of range");
  std::vector<std::vector<GaussianRational>> rest;
  for (int j = 0; j < dim(); ++j)
    if (j != skip) rest.push_back(vectors_[j]);
  return LinearSubspace(ambient_, std::move(rest));
}

LinearSubspace standard_complement(const LinearSubspace& S) {
  int m = S.ambient();
  QMatrix stack = S.vectors();
  int rank = S.dim();
  std::vector<std::vector<GaussianRational>> added;
  for (int j = 0; j < m && rank + static_cast<int>(added.size()) < m; ++j) {
    std::vector<GaussianRational> e(m);
    e[j] = GaussianRational(1);
    stack.push_back(e);
    if (qmatrix_rank(stack) == static_cast<int>(stack.size()))
      added.push_back(std::move(e));
    else
      stack.pop_back();
  }
  return LinearSubspace::make(m, std::move(added));
}

Splitting Splitting::make(LinearSubspace V, LinearSubspace W) {
  if (V.ambient() != W.ambient())
    throw input_error("splitting factors live in different ambient spaces");
  int m = V.ambient();
  if (V.dim() + W.dim() != m)
    throw input_error("splitting dimensions do not sum to the ambient dimension");
  QMatrix stack = V.vectors();
  for (const auto& w : W.vectors()) stack.push_back(w);
  if (!stack.empty() && qmatrix_rank(stack) != m)
    throw input_error("splitting factors are not complementary");
  return Splitting{std::move(V), std::move(W)};
}

bool solve_complex(std::vector<std::vector<std::complex<double>>> A,
                   std::vector<std::complex<double>> b,
                   std::vector<std::complex<double>>& out) {
  std::size_t n = A.size();
  if (b.size() != n) return false;
  for (const auto& r : A)
    if (r.size() != n) return false;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    double best = std::abs(A[c][c]);
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(A[r][c]) > best) { best = std::abs(A[r][c]); pivot = r; }
    if (best < 1e-12) return false;
    std::swap(A[pivot], A[c]);
    std::swap(b[pivot], b[c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      std::complex<double> f = A[r][c] / A[c][c];
      if (f == std::complex<double>(0.0)) continue;
      for (std::size_t j = c; j < n; ++j) A[r][j] -= f * A[c][j];
      b[r] -= f * b[c];
    }
  }
  out.assign(n, {});
  for (std::size_t r = n; r-- > 0;) {
    std::complex<double> s = b[r];
    for (std::size_t j = r + 1; j < n; ++j) s -= A[r][j] * out[j];
    out[r] = s / A[r][r];
  }
  return true;
}

} // namespace tci
