// Rank-two constructions: the 3p-block factories, generalized-permutation
// systems and their diagonal equations, the odd-integer-vector family, the
// period-4 diagonal families for n divisible by four, the catalog of S_4
// pairs, and verification for all of them.

#pragma once

#include "tlforge/permutation.hpp"
#include "tlforge/rational.hpp"
#include "tlforge/tl.hpp"

#include <cstdint>
#include <optional>

namespace tlforge {

/// Pair of generalized permutation matrices V_i = D_i P_{sigma_i}.
struct Rank2System {
    Permutation sigma1, sigma2;
    DiagonalMatrix d1, d2;

    Rank2System() = default;
    Rank2System(Permutation s1, Permutation s2, DiagonalMatrix dd1, DiagonalMatrix dd2);
    std::size_t n() const { return sigma1.degree(); }
    SpanningSet to_spanning() const;
};

/// Residuals of the three product equations, orthonormality, the determinant
/// relations, and the Q bounds (sharpened when a block is almost unitary).
VerificationReport verify_rank2(const SpanningSet& s, double q, const Tolerance& tol = Tolerance());

/// Block data for n = 3p: F, G in M_p, scales with 1/a1^2 + 1/a2^2 = 1/p,
/// and the unit-modulus phase tying the two off-diagonal block combinations
/// together when p > 1.
struct N3pBlocks {
    std::size_t p = 0;
    ComplexMatrix f11, f12, f21, f22;
    ComplexMatrix g11, g12, g21, g22;
    double alpha1 = 0.0, alpha2 = 0.0;
    cplx zeta{1.0, 0.0};

    /// Throws with the violated condition named.
    void validate(const Tolerance& tol = Tolerance()) const;
};

/// Assembles the two 3p x 3p matrices (conjugated G blocks in the middle
/// band) with Q = alpha1*alpha2.
TLSolution build_n3p(const N3pBlocks& blocks, const Tolerance& tol = Tolerance(),
                     const std::string& family = "n3p");

/// Blocks harvested from a unitary U in U(2p): a1*F_ij = U_ij and
/// a2*G_ij = (U_ji)^dagger, so the two scaled block grids are U and U^dagger.
N3pBlocks n3p_from_unitary(const ComplexMatrix& u, double alpha1, double alpha2,
                           const Tolerance& tol = Tolerance());

/// One-parameter coupling of two diagonal block pairs; both sides of the
/// phase condition vanish identically.
N3pBlocks n3p_w_ansatz(const ComplexMatrix& f11, const ComplexMatrix& f22,
                       const ComplexMatrix& g11, const ComplexMatrix& g22, cplx w,
                       double alpha1, double alpha2, const Tolerance& tol = Tolerance());

struct N3pGenPermParams {
    Permutation sigma1, sigma2;            // degree p
    DiagonalMatrix d1, d2, d3, d4;         // p x p diagonal
    DiagonalMatrix z1, z2;                 // unitary diagonal
    cplx zeta{1.0, 0.0};
    double alpha1 = 0.0, alpha2 = 0.0;
};

/// Generalized-permutation block family; makes the phase condition hold with
/// both sides generically nonzero.
N3pBlocks n3p_genperm(const N3pGenPermParams& params, const Tolerance& tol = Tolerance());

/// Direct evaluation of the diagonal-matrix system equivalent to the rank-2
/// product equations for generalized permutation pairs, including the
/// structural requirement that the two derived permutations coincide.
VerificationReport check_deq_system(const Rank2System& sys, double q,
                                    const Tolerance& tol = Tolerance());

struct FixpCertificate {
    std::size_t trials = 0;
    std::string clause;        // violated admissibility clause driving the bound
    double min_entry = 0.0;    // min over trials of the witness entry modulus
    double min_floor = 0.0;    // min over trials of its analytic lower bound
    double min_deq3 = 0.0;     // min over trials of the full equation residual
    bool certified = false;
};

/// For a NON-admissible pair, random nonsingular diagonal draws can never
/// satisfy the third diagonal equation: the witness entry singled out by the
/// obstruction stays above an analytic floor.  Throws on admissible input.
FixpCertificate lemma_fixp_certificate(const PermutationPair& p, std::size_t trials,
                                       std::uint64_t seed = 0,
                                       const Tolerance& tol = Tolerance());

/// Input data for the odd-integer-vector construction.
struct DdssData {
    Permutation sigma1, sigma2;
    std::vector<double> x;  // P_{sigma_i} x = -x
    RationalVector u, v;    // A u + B v must have all-odd-integer entries
};

/// Integer matrices A = (I + P2)(P2 - P1) and B = (I + P1)(P1 - P2).
void ddss_ab_matrices(const Permutation& sigma1, const Permutation& sigma2, RationalMatrix& a,
                      RationalMatrix& b);

/// D_i entries mu^-1 exp(x_k + i pi u_k); Q = sum_k exp(2 x_k) / sqrt(2).
TLSolution build_ddss(const DdssData& d, const Tolerance& tol = Tolerance(),
                      const std::string& family = "ddss");

struct OddConditionSolution {
    bool solved = false;
    RationalVector u, v;
};

/// Searches for rational u, v making A u + B v an all-odd-integer vector:
/// exact solves against +-1 target vectors first, then an eighth-integer
/// grid over a pivot basis of the column space.  A negative answer only
/// means "not found within budget".
OddConditionSolution solve_odd_condition(const Permutation& sigma1, const Permutation& sigma2);

Permutation full_cycle(std::size_t n);          // (1,2,...,n)
Permutation reversal_involution(std::size_t n); // (1,n)(2,n-1)...
Permutation adjacent_involution(std::size_t n); // (1,2)(3,4)...

enum class N4kFamily { s1, s2 };  // (cycle, inverse cycle) vs (reversal, adjacent)

/// Period-4 diagonal family for n divisible by 4; |z1|^2 + |z2|^2 = 2/n and
/// Q = 1/(sqrt(2) |z1| |z2|).
TLSolution build_vvn4k(std::size_t n, N4kFamily which, cplx z1, cplx z2, cplx zeta,
                       const Tolerance& tol = Tolerance());

/// Three-parameter period-4 family on the (cycle, adjacent) pair;
/// 2|z1|^2 + |z2|^2 + |z3|^2 = 4/n and Q = 1/(|z1| sqrt(|z2|^2 + |z3|^2)).
/// z2 = 0 or z3 = 0 gives singular (still valid) solutions.
TLSolution build_vvn4(std::size_t n, cplx z1, cplx z2, cplx z3, cplx zeta,
                      const Tolerance& tol = Tolerance());

struct S4CatalogEntry {
    char label = '?';            // 'a'..'j'
    PermutationPair pair;
    RationalVector u, v;         // phase vectors, entries times pi
    double Q = 0.0;
    std::string path;            // "ddss" or "inspection"
    TLSolution solution;
};

/// The ten inequivalent admissible pairs for n = 4 with their phase vectors,
/// each packaged as a solution at Q = 2*sqrt(2).
std::vector<S4CatalogEntry> s4_catalog(const Tolerance& tol = Tolerance());

/// Pairs made of fixed points and even cycles with complementary fixed-point
/// sets; all diagonal entries have modulus 1/sqrt(n) and Q = n/sqrt(2).
TLSolution build_complementary(const Permutation& sigma1, const Permutation& sigma2,
                               const Tolerance& tol = Tolerance());

/// Analytic continuation of the period-4 family to complex q: drops
/// hermiticity but keeps the remaining relations.  The formal conjugates u1,
/// u2 replace entrywise conjugation in the projector formula.
struct ZparSolution {
    std::size_t n = 0;
    cplx q;
    cplx Q;                    // n*sqrt(2)*(q + 1/q)/4
    ComplexMatrix v1, v2;
    ComplexMatrix u1, u2;
    ComplexMatrix generator;   // n^2 x n^2
};

ZparSolution build_zpar(std::size_t n, N4kFamily which, cplx q, cplx xi1, cplx xi2, cplx zeta);

}  // namespace tlforge
