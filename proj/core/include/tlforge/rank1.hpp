// The complete rank-one family: generalized-permutation normal form,
// parameter solving, spectral pairing checks, and reduction of a scrambled
// solution back to normal form.

#pragma once

#include "tlforge/permutation.hpp"
#include "tlforge/tl.hpp"

namespace tlforge {

struct Rank1Params {
    std::size_t n = 0;
    Permutation sigma;            // involution with n mod 2 fixed points
    std::vector<cplx> free_z;     // length floor(n/2), nonzero, sum |z|^2 < 1
    int sign_choice = +1;         // sign of the fixed-point entry when n is odd
};

/// V = D * P_sigma with the paired entries filled in from the free ones and
/// Q derived from the normalization; family tag "rank1-normal".
TLSolution build_rank1(const Rank1Params& p);

/// Scale-free parametrization: Q = sum over pairs (|u|^2 + |u|^-2) (+1 when n
/// is odd) and z_k = u_k / sqrt(Q).  Solvable for every nonzero u.
TLSolution build_rank1_from_u(std::size_t n, const Permutation& sigma,
                              const std::vector<cplx>& u, int sign_choice = +1);

/// Residuals of V conj(V) V^t V^dagger = Q^-2 I and tr(V^dagger V) = 1, plus
/// the Q >= n bound; notes whether the bound is met with equality (V almost
/// unitary).
VerificationReport verify_rank1(const ComplexMatrix& v, double q, const Tolerance& tol = Tolerance());

/// Singular values must pair off to products 1/Q (middle value 1/sqrt(Q)
/// when n is odd); eigenvalues of Q*V*conj(V) must close under conjugation
/// with any unpaired one equal to 1.
VerificationReport spectral_pairing_check(const ComplexMatrix& v, double q,
                                          const Tolerance& tol = Tolerance());

struct Rank1NormalForm {
    DiagonalMatrix D;
    Permutation sigma;
    double Q = 0.0;
    ComplexMatrix g;  // unitary with g V g^t = D P_sigma
};

/// Recovers (D, sigma, g) for a verified rank-one solution whose spectrum of
/// V*conj(V) is simple.  Throws on degenerate spectrum.
Rank1NormalForm reduce_to_normal_form(const ComplexMatrix& v, double q,
                                      const Tolerance& tol = Tolerance());

struct CongruenceCheckResult {
    bool distinguished = false;
    std::string detail;  // which invariant separated the inputs
};

/// Necessary conditions for unitary congruence of nonsingular A and B: equal
/// singular values and matching invariants of A*conj(A) vs B*conj(B).  A
/// negative answer is conclusive; a positive one only means "not
/// distinguished".
CongruenceCheckResult congruence_necessary_check(const ComplexMatrix& a, const ComplexMatrix& b,
                                                 const Tolerance& tol = Tolerance());

}  // namespace tlforge
