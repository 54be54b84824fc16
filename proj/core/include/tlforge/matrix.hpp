// Dense complex matrices and diagonal matrices, the carriers for every
// construction in this library.  Sizes stay small (n <= a few hundred), so
// everything is plain row-major storage with straightforward loops.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace tlforge {

using cplx = std::complex<double>;

/// Violated parameter constraint of a construction (named in the message);
/// distinct from plain usage errors so callers can map it to its own exit
/// code.
class constraint_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Absolute tolerance used for all max-norm residual checks.
struct Tolerance {
    double eps = 1e-10;
    Tolerance() = default;
    explicit Tolerance(double e) : eps(e) {
        if (!(e > 0)) throw std::invalid_argument("Tolerance: eps must be > 0");
    }
};

class Permutation;  // permutation.hpp

class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, cplx(0.0, 0.0)) {}
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

    /// Build from nested braces, e.g. ComplexMatrix::from_rows({{1,0},{0,1}}).
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);
    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zero(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    std::size_t size() const { return rows_; }  // square shorthand

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    const std::vector<cplx>& data() const { return a_; }

    bool all_finite() const;

    ComplexMatrix operator+(const ComplexMatrix& o) const;
    ComplexMatrix operator-(const ComplexMatrix& o) const;
    ComplexMatrix operator*(const ComplexMatrix& o) const;
    ComplexMatrix operator*(cplx s) const;
    friend ComplexMatrix operator*(cplx s, const ComplexMatrix& m) { return m * s; }

    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    /// Conjugate transpose.
    ComplexMatrix dagger() const;

    cplx trace() const;
    /// Entrywise max modulus.
    double max_norm() const;
    double frobenius_norm() const;

    /// Copy a rows x cols block whose top-left corner is (i0, j0).
    ComplexMatrix block(std::size_t i0, std::size_t j0, std::size_t rows, std::size_t cols) const;
    /// Paste b with its top-left corner at (i0, j0).
    void set_block(std::size_t i0, std::size_t j0, const ComplexMatrix& b);

    std::string to_string(int precision = 4) const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cplx> a_;
};

/// Kronecker product; block (i,j) of the result is a(i,j) * b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// max(|a*a^dagger - I|, |a^dagger*a - I|) in the entrywise max norm.
double unitarity_residual(const ComplexMatrix& a);
bool is_unitary_within(const ComplexMatrix& a, const Tolerance& tol);
bool is_unitary_within(const ComplexMatrix& a, const Tolerance& tol, double& residual);

double hermiticity_residual(const ComplexMatrix& a);
bool is_hermitian_within(const ComplexMatrix& a, const Tolerance& tol);

class DiagonalMatrix {
  public:
    DiagonalMatrix() = default;
    explicit DiagonalMatrix(std::size_t n) : d_(n, cplx(0.0, 0.0)) {}
    explicit DiagonalMatrix(std::vector<cplx> diag) : d_(std::move(diag)) {}
    static DiagonalMatrix identity(std::size_t n) { return DiagonalMatrix(std::vector<cplx>(n, cplx(1.0, 0.0))); }

    std::size_t size() const { return d_.size(); }
    cplx& operator[](std::size_t k) { return d_[k]; }
    const cplx& operator[](std::size_t k) const { return d_[k]; }
    const std::vector<cplx>& diag() const { return d_; }

    DiagonalMatrix conjugate() const;
    /// Entrywise product (diagonal matrices commute).
    DiagonalMatrix operator*(const DiagonalMatrix& o) const;
    DiagonalMatrix operator*(cplx s) const;
    DiagonalMatrix operator+(const DiagonalMatrix& o) const;
    DiagonalMatrix operator-(const DiagonalMatrix& o) const;
    /// Entrywise inverse; throws if some entry is (near) zero.
    DiagonalMatrix inverse() const;

    bool nonsingular(double floor = 0.0) const;
    cplx trace() const;
    double max_norm() const;

    /// P_sigma D P_sigma^t: entry k becomes entry sigma^{-1}(k) of the original.
    DiagonalMatrix permuted(const Permutation& sigma) const;

    ComplexMatrix to_matrix() const;

  private:
    std::vector<cplx> d_;
};

/// D * P_sigma as a dense matrix (one nonzero per row and column).
ComplexMatrix generalized_permutation_matrix(const DiagonalMatrix& d, const Permutation& sigma);

}  // namespace tlforge
