// Construction of the partitioned matrix W, the orthogonal projector, and
// the generator from a spanning set; verification of the defining relations
// both directly and through the unitarity criterion; unitary congruence and
// its invariants.

#pragma once

#include "tlforge/matrix.hpp"
#include "tlforge/spectral.hpp"

#include <map>
#include <string>
#include <vector>

namespace tlforge {

/// Matrices of coefficients of an orthonormal set of vectors in C^n (x) C^n.
struct SpanningSet {
    std::size_t n = 0;
    std::vector<ComplexMatrix> mats;

    SpanningSet() = default;
    SpanningSet(std::size_t n_, std::vector<ComplexMatrix> mats_);
    std::size_t rank() const { return mats.size(); }
};

/// max_{s,m} |tr(V_s^dagger V_m) - delta_sm|.
double orthonormality_residual(const SpanningSet& s);
void check_spanning_orthonormality(const SpanningSet& s, const Tolerance& tol);

struct TLSolution {
    SpanningSet spanning;
    double Q = 0.0;
    std::string family;
    std::map<std::string, cplx> params;

    std::size_t n() const { return spanning.n; }
    std::size_t rank() const { return spanning.rank(); }
};

struct VerificationReport {
    // residual value and allowed bound, keyed by check name
    std::map<std::string, double> residuals;
    std::map<std::string, double> limits;
    bool passed = false;
    std::vector<std::string> notes;

    void set(const std::string& key, double value, double limit);
    void skip(const std::string& key, const std::string& why);
    void finalize();
    double max_residual() const;
    std::string to_string() const;
};

/// The rn x rn partitioned matrix with block (s,m) = V_m * conj(V_s).
ComplexMatrix build_w(const SpanningSet& s);

/// The n^2 x n^2 orthogonal projector onto the span; entry ((a,b),(c,d)) is
/// sum_s (V_s)_{ab} conj(V_s)_{cd} in row-major compound indices.
ComplexMatrix build_projector(const SpanningSet& s, const Tolerance& tol = Tolerance());

/// T = Q * projector.
ComplexMatrix build_generator(const TLSolution& sol, const Tolerance& tol = Tolerance());

/// Largest n for which the triple-product relations are checked densely
/// (the intermediate factors are n^3 x n^3).
inline constexpr std::size_t kAxiomsMaxN = 8;

/// Residuals of the defining relations evaluated directly:
///   t1: |T^dagger - T|      (skipped when hermitian = false)
///   t2: |T*T - Q*T|
///   t3: |T12*T23*T12 - T12|
///   t4: |T23*T12*T23 - T23|
/// Accepts complex Q so that analytically continued (non-Hermitian)
/// families can be checked; for solutions Q is real positive.
VerificationReport verify_tl_axioms(const ComplexMatrix& t, cplx q, std::size_t n,
                                    const Tolerance& tol = Tolerance(), bool hermitian = true);

/// Unitarity-criterion verification: orthonormality of the spanning set,
/// unitarity of Q*W, and det(Q*W) = 1 in the rank-one case.
VerificationReport verify_by_criterion(const TLSolution& sol, const Tolerance& tol = Tolerance());

/// V_k -> g V_k g^t (g unitary); the generator transforms by conjugation
/// with g (x) g.  Q and the family tag are preserved.
TLSolution apply_congruence(const TLSolution& sol, const ComplexMatrix& g,
                            const Tolerance& tol = Tolerance());

struct CongruenceFingerprint {
    std::vector<double> singulars;      // of V, descending
    bool spectrum_available = false;    // V*conj(V) normal?
    std::vector<cplx> spectrum_vvbar;   // eigenvalues when available
    cplx chi;                           // tr(V*conj(V))
};

/// Unitary-congruence invariants of a single matrix.
CongruenceFingerprint congruence_fingerprint(const ComplexMatrix& v, const Tolerance& tol = Tolerance());

/// Multiset comparison of two fingerprints; returns the name of the first
/// distinguishing invariant, or an empty string when not distinguished.
std::string compare_fingerprints(const CongruenceFingerprint& a, const CongruenceFingerprint& b,
                                 double tol);

}  // namespace tlforge
