// Elements of S_n with cycle-notation I/O, permutation matrices, the
// admissibility test for pairs, and exhaustive enumeration of admissible
// pairs up to conjugation and exchange.

#pragma once

#include "tlforge/matrix.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace tlforge {

class Permutation {
  public:
    Permutation() = default;
    /// Identity on {1,...,n}.
    explicit Permutation(std::size_t n);
    /// image_one_based[k-1] = sigma(k); must be a bijection on {1,...,n}.
    static Permutation from_image(std::vector<int> image_one_based);
    /// Cycles use 1-based symbols; unmentioned symbols are fixed points.
    static Permutation from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles);
    /// Parses "(1,4)(2,3)" (whitespace ignored) or "id".
    static Permutation parse(std::size_t n, const std::string& text);

    std::size_t degree() const { return img_.size(); }
    /// sigma(k) for 1-based k.
    int operator()(int k) const { return img_[static_cast<std::size_t>(k) - 1] + 1; }
    /// sigma(k) for 0-based k.
    int apply0(int k) const { return img_[static_cast<std::size_t>(k)]; }

    bool is_identity() const;
    bool is_involution() const;
    bool commutes_with(const Permutation& o) const;
    Permutation inverse() const;

    std::vector<int> image_one_based() const;
    std::set<int> fixed_points() const;  // 1-based
    std::vector<std::vector<int>> cycles() const;  // nontrivial cycles, canonical order
    std::string to_cycle_string() const;

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return img_ != o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

    /// Successor in lexicographic order on images; false once past the last.
    bool next_lex();
    static std::size_t factorial(std::size_t n);

  private:
    std::vector<int> img_;  // 0-based images
    friend Permutation compose(const Permutation&, const Permutation&);
    friend ComplexMatrix permutation_matrix(const Permutation&);
};

/// compose(a,b)(k) = a(b(k)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& a);
/// tau o a o tau^{-1}.
Permutation conjugate(const Permutation& a, const Permutation& tau);

/// (P_sigma)_{ij} = delta_{i,sigma(j)}; real 0/1 entries.
ComplexMatrix permutation_matrix(const Permutation& sigma);

struct PermutationPair {
    Permutation first, second;
    PermutationPair() = default;
    PermutationPair(Permutation a, Permutation b);
    std::size_t degree() const { return first.degree(); }
    /// Concatenated 1-based images, the ordering key for canonical forms.
    std::vector<int> encoding() const;
    bool operator==(const PermutationPair& o) const { return first == o.first && second == o.second; }
    bool operator<(const PermutationPair& o) const { return encoding() < o.encoding(); }
};

enum class AdmissibilityStatus {
    admissible,
    fails_commutation,    // sigma2^-1 o sigma1 o sigma1 o sigma2^-1 != sigma1 o sigma2^-1 o sigma2^-1 o sigma1
    fails_common_fixed_point,
    fails_quotient_fixed_point,  // sigma2^-1 o sigma1 has a fixed point (involution/commuting case)
};

struct AdmissibilityResult {
    bool admissible = false;
    AdmissibilityStatus status = AdmissibilityStatus::admissible;
    std::string reason;  // empty when admissible
};

/// The three-clause admissibility test; n must be even.
AdmissibilityResult is_admissible_pair(const PermutationPair& p);

struct PairClass {
    PermutationPair canonical;
    std::size_t members_count = 0;  // ordered pairs in the orbit
    bool operator<(const PairClass& o) const { return canonical < o.canonical; }
};

/// Minimum encoding over the orbit under simultaneous conjugation and swap.
PairClass canonicalize(const PermutationPair& p);
/// Orbit representative only (no member count).
PermutationPair canonical_pair(const PermutationPair& p);

/// All admissible pairs in S_n x S_n grouped into classes, sorted by canonical
/// encoding.  n must be even and <= cap.
std::vector<PairClass> enumerate_admissible_classes(std::size_t n, std::size_t cap = 8);

}  // namespace tlforge
