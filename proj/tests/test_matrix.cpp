#include "doctest.h"

#include "tlforge/matrix.hpp"
#include "tlforge/permutation.hpp"
#include "tlforge/random.hpp"

using namespace tlforge;

namespace {

const cplx I(0.0, 1.0);

// Independent Kronecker oracle: direct index formula.
ComplexMatrix kron_oracle(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j)
            r(i, j) = a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
    return r;
}

ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.complex_gaussian();
    return m;
}

}  // namespace

TEST_CASE("kron of identities is the identity") {
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    CHECK((kron(i2, i2) - ComplexMatrix::identity(4)).max_norm() == 0.0);
}

TEST_CASE("kron of matrix units places a single one") {
    ComplexMatrix e11(2, 2), e22(2, 2);
    e11(0, 0) = 1.0;
    e22(1, 1) = 1.0;
    const ComplexMatrix k = kron(e11, e22);
    CHECK(k.rows() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(k(i, j) == ((i == 1 && j == 1) ? cplx(1.0, 0.0) : cplx(0.0, 0.0)));
}

TEST_CASE("kron matches the direct block expansion on random input") {
    Rng rng(7);
    const ComplexMatrix a = random_matrix(3, 2, rng);
    const ComplexMatrix b = random_matrix(2, 4, rng);
    CHECK((kron(a, b) - kron_oracle(a, b)).max_norm() == 0.0);
}

TEST_CASE("kron is multiplicative: (a x b)(c x d) = ac x bd") {
    Rng rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix a = random_matrix(3, 2, rng), c = random_matrix(2, 3, rng);
        const ComplexMatrix b = random_matrix(2, 2, rng), d = random_matrix(2, 2, rng);
        const ComplexMatrix lhs = kron(a, b) * kron(c, d);
        const ComplexMatrix rhs = kron(a * c, b * d);
        CHECK((lhs - rhs).max_norm() < 1e-12);
    }
}

TEST_CASE("dagger, conjugate, transpose") {
    const ComplexMatrix m = ComplexMatrix::from_rows({{0.0, I}, {0.0, 0.0}});
    const ComplexMatrix md = m.dagger();
    CHECK(md(0, 0) == cplx(0.0, 0.0));
    CHECK(md(1, 0) == -I);
    CHECK(md(0, 1) == cplx(0.0, 0.0));
    CHECK((m.dagger() - m.conjugate().transpose()).max_norm() == 0.0);

    const ComplexMatrix real = ComplexMatrix::from_rows({{1.0, 2.0}, {3.0, 4.0}});
    CHECK((real.conjugate() - real).max_norm() == 0.0);
}

TEST_CASE("transpose of a permutation matrix is the inverse permutation") {
    const Permutation s = Permutation::parse(3, "(1,2,3)");
    CHECK((permutation_matrix(s).transpose() - permutation_matrix(s.inverse())).max_norm() == 0.0);
}

TEST_CASE("unitarity residuals") {
    CHECK(unitarity_residual(ComplexMatrix::identity(3)) == 0.0);

    const cplx zeta = std::polar(1.0, 0.9);
    const ComplexMatrix d = ComplexMatrix::from_rows({{zeta, 0.0}, {0.0, std::conj(zeta)}});
    CHECK(is_unitary_within(d, Tolerance()));

    const ComplexMatrix bad = ComplexMatrix::from_rows({{2.0, 0.0}, {0.0, 0.5}});
    double res = 0.0;
    CHECK_FALSE(is_unitary_within(bad, Tolerance(), res));
    CHECK(res == doctest::Approx(3.0));

    CHECK_THROWS_AS(unitarity_residual(ComplexMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("diagonal matrices permute by moving entry k to sigma(k)") {
    const DiagonalMatrix d(std::vector<cplx>{1.0, 2.0, 3.0});
    const Permutation s = Permutation::parse(3, "(1,2,3)");
    // (D^sigma)_kk = D_{sigma^{-1}(k)}
    const DiagonalMatrix ds = d.permuted(s);
    CHECK(ds[0] == cplx(3.0, 0.0));
    CHECK(ds[1] == cplx(1.0, 0.0));
    CHECK(ds[2] == cplx(2.0, 0.0));
    // Same thing as the matrix product P D P^t.
    const ComplexMatrix p = permutation_matrix(s);
    CHECK((ds.to_matrix() - p * d.to_matrix() * p.transpose()).max_norm() == 0.0);
}

TEST_CASE("generalized permutation matrix layout") {
    const Permutation s = Permutation::parse(2, "(1,2)");
    const DiagonalMatrix d(std::vector<cplx>{cplx(0.0, 1.0), cplx(2.0, 0.0)});
    const ComplexMatrix v = generalized_permutation_matrix(d, s);
    // D * P_sigma: row i carries D_i, column sigma^{-1}(i).
    CHECK(v(0, 1) == cplx(0.0, 1.0));
    CHECK(v(1, 0) == cplx(2.0, 0.0));
    CHECK(v(0, 0) == cplx(0.0, 0.0));
    CHECK((v - d.to_matrix() * permutation_matrix(s)).max_norm() == 0.0);
}

TEST_CASE("finiteness guard") {
    ComplexMatrix m(2, 2);
    CHECK(m.all_finite());
    m(0, 1) = cplx(std::numeric_limits<double>::infinity(), 0.0);
    CHECK_FALSE(m.all_finite());
}
