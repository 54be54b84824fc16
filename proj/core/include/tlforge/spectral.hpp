// Small-matrix spectral primitives: a cyclic Jacobi eigensolver for Hermitian
// matrices, singular values through it, determinants via pivoted LU, and
// joint diagonalization of normal matrices.

#pragma once

#include "tlforge/matrix.hpp"

#include <utility>
#include <vector>

namespace tlforge {

struct Eigensystem {
    std::vector<double> values;   // ascending
    ComplexMatrix vectors;        // column k pairs with values[k]; unitary
};

/// Cyclic Jacobi on a Hermitian matrix.  Throws if the input fails the
/// Hermiticity check at 100*tol (scaled by the matrix norm).
Eigensystem hermitian_eigensystem(const ComplexMatrix& a, const Tolerance& tol = Tolerance());

/// Square roots of the eigenvalues of a^dagger * a, descending.
std::vector<double> singular_values(const ComplexMatrix& a, const Tolerance& tol = Tolerance());

/// LU determinant with partial pivoting.
cplx determinant(const ComplexMatrix& a);

/// Gauss-Jordan inverse with partial pivoting; throws on (near-)singular input.
ComplexMatrix inverse_matrix(const ComplexMatrix& a);

struct NormalSpectrum {
    bool available = false;       // false when the input is not normal
    std::vector<cplx> values;     // eigenvalues (unordered multiset)
    ComplexMatrix vectors;        // unitary, g^dagger W g diagonal
};

/// Spectrum of a normal matrix via its commuting Hermitian and
/// anti-Hermitian parts.  Returns available=false for non-normal input.
NormalSpectrum normal_eigensystem(const ComplexMatrix& w, const Tolerance& tol = Tolerance());

/// Relative spread (max-min)/max of the singular values; a matrix is a scalar
/// multiple of a unitary one exactly when this vanishes.
double singular_value_spread(const ComplexMatrix& a);

/// True when all singular values agree to relative 1e-8; scale receives the
/// factor alpha with alpha*a unitary.
bool is_almost_unitary(const ComplexMatrix& a, double& scale);

}  // namespace tlforge
