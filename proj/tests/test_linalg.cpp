#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"
#include "tci/linalg.hpp"

using namespace tci;

namespace {

GaussianRational q(long n, long d = 1) {
    return GaussianRational::from_ratio(mpz_class(n), mpz_class(d));
}

QMatrix identity(int n) {
    QMatrix M(n, std::vector<GaussianRational>(n, q(0)));
    for (int i = 0; i < n; ++i) M[i][i] = q(1);
    return M;
}

QMatrix matmul(const QMatrix& A, const QMatrix& B) {
    QMatrix C(A.size(), std::vector<GaussianRational>(B[0].size(), q(0)));
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t k = 0; k < B.size(); ++k)
            for (std::size_t j = 0; j < B[0].size(); ++j)
                C[i][j] = C[i][j] + A[i][k] * B[k][j];
    return C;
}

} // namespace

TEST_CASE("rank worked examples") {
    CHECK(qmatrix_rank(identity(3)) == 3);
    CHECK(qmatrix_rank({{q(1), q(2)}, {q(2), q(4)}}) == 1);
    CHECK(qmatrix_rank({{q(0), q(0)}, {q(0), q(0)}}) == 0);
    CHECK(qmatrix_rank({}) == 0);
    // complex entries: the two rows (1, i) and (i, -1) are dependent
    auto i = GaussianRational::i();
    CHECK(qmatrix_rank({{q(1), i}, {i, q(-1)}}) == 1);
    CHECK(qmatrix_rank({{q(1), i}, {i, q(1)}}) == 2);
}

TEST_CASE("inverse round-trip and singularity") {
    QMatrix M = {{q(2), q(1)}, {q(7), q(4)}};
    auto inv = qmatrix_inverse(M);
    REQUIRE(inv.has_value());
    CHECK(matmul(*inv, M) == identity(2));
    CHECK(matmul(M, *inv) == identity(2));
    CHECK(!qmatrix_inverse({{q(1), q(2)}, {q(2), q(4)}}).has_value());
}

TEST_CASE("random invertible matrices invert exactly") {
    th::Rng rng(29);
    int done = 0;
    while (done < 50) {
        int n = static_cast<int>(rng.ival(1, 4));
        QMatrix M(n, std::vector<GaussianRational>(n));
        for (auto& row : M)
            for (auto& e : row) e = rng.coeff();
        auto inv = qmatrix_inverse(M);
        if (!inv) {
            CHECK(qmatrix_rank(M) < n);
            continue;
        }
        CHECK(qmatrix_rank(M) == n);
        CHECK(matmul(*inv, M) == identity(n));
        ++done;
    }
}

TEST_CASE("subspace construction validates its input") {
    CHECK_THROWS_AS(LinearSubspace::make(2, {{q(1)}}), input_error);
    CHECK_THROWS_AS(LinearSubspace::make(2, {{q(1), q(0)}, {q(2), q(0)}}),
                    input_error);
    CHECK_THROWS_AS(
        LinearSubspace::make(1, {{q(1)}, {q(0)}}), input_error);
    auto S = LinearSubspace::make(3, {{q(1), q(0), q(0)}, {q(0), q(1), q(1)}});
    CHECK(S.ambient() == 3);
    CHECK(S.dim() == 2);
    // the zero subspace is legal
    CHECK(LinearSubspace::make(2, {}).dim() == 0);
}

TEST_CASE("dropping one basis vector") {
    auto S = LinearSubspace::make(3, {{q(1), q(0), q(0)}, {q(0), q(1), q(1)}});
    auto T = S.without(0);
    REQUIRE(T.dim() == 1);
    CHECK(T.vectors()[0] == std::vector<GaussianRational>{q(0), q(1), q(1)});
    CHECK_THROWS_AS(S.without(2), input_error);
}

TEST_CASE("standard complement completes the span") {
    auto S = LinearSubspace::make(3, {{q(1), q(1), q(0)}});
    auto C = standard_complement(S);
    CHECK(C.ambient() == 3);
    CHECK(C.dim() == 2);
    QMatrix all;
    for (const auto& v : S.vectors()) all.push_back(v);
    for (const auto& v : C.vectors()) all.push_back(v);
    CHECK(qmatrix_rank(all) == 3);
    // complement of everything is the zero subspace
    auto full = LinearSubspace::make(2, {{q(1), q(0)}, {q(0), q(1)}});
    CHECK(standard_complement(full).dim() == 0);
}

TEST_CASE("splitting requires complementary factors") {
    auto V = LinearSubspace::make(2, {{q(0), q(1)}});
    auto W = LinearSubspace::make(2, {{q(1), q(0)}});
    auto sp = Splitting::make(V, W);
    CHECK(sp.V.dim() == 1);
    CHECK(sp.W.dim() == 1);
    CHECK_THROWS_AS(Splitting::make(V, V), input_error);
    auto W3 = LinearSubspace::make(3, {{q(1), q(0), q(0)}});
    CHECK_THROWS_AS(Splitting::make(V, W3), input_error);
    auto zero2 = LinearSubspace::make(2, {});
    CHECK_THROWS_AS(Splitting::make(V, zero2), input_error);
}

TEST_CASE("complex linear solve") {
    using cd = std::complex<double>;
    std::vector<std::vector<cd>> A = {{cd(0, 1), cd(1, 0)}, {cd(1, 0), cd(1, 0)}};
    std::vector<cd> x;
    REQUIRE(solve_complex(A, {cd(1, 1), cd(2, 0)}, x));
    REQUIRE(x.size() == 2);
    // residual check
    for (int r = 0; r < 2; ++r) {
        cd lhs = A[r][0] * x[0] + A[r][1] * x[1];
        cd rhs = r == 0 ? cd(1, 1) : cd(2, 0);
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
    std::vector<std::vector<cd>> S = {{cd(1, 0), cd(2, 0)}, {cd(2, 0), cd(4, 0)}};
    CHECK(!solve_complex(S, {cd(1, 0), cd(2, 0)}, x));
}
