#include "doctest.h"

#include "tlforge/permutation.hpp"
#include "tlforge/random.hpp"
#include "tlforge/rank2.hpp"

#include <algorithm>

using namespace tlforge;

namespace {

Permutation random_permutation(std::size_t n, Rng& rng) {
    std::vector<int> image(n);
    for (std::size_t k = 0; k < n; ++k) image[k] = static_cast<int>(k) + 1;
    std::shuffle(image.begin(), image.end(), rng.engine());
    return Permutation::from_image(image);
}

// The ten inequivalent admissible pairs for n = 4.
std::vector<PermutationPair> s4_reference_pairs() {
    auto pp = [](const char* a, const char* b) {
        return PermutationPair(Permutation::parse(4, a), Permutation::parse(4, b));
    };
    return {
        pp("id", "(1,2)(3,4)"),      pp("id", "(1,2,3,4)"),
        pp("(2,3)", "(1,4)"),        pp("(2,3)", "(1,3,4,2)"),
        pp("(2,3)", "(1,2)(3,4)"),   pp("(2,3,4)", "(3,2,1)"),
        pp("(1,2,3,4)", "(1,3)(2,4)"), pp("(1,2,3,4)", "(1,2)(3,4)"),
        pp("(1,2,3,4)", "(4,3,2,1)"), pp("(1,2)(3,4)", "(1,4)(2,3)"),
    };
}

}  // namespace

TEST_CASE("cycle construction") {
    const Permutation p = Permutation::from_cycles(4, {{1, 2, 3, 4}});
    CHECK(p.image_one_based() == std::vector<int>{2, 3, 4, 1});

    const Permutation q = Permutation::from_cycles(4, {{1, 4}, {2, 3}});
    CHECK(q.image_one_based() == std::vector<int>{4, 3, 2, 1});

    CHECK(Permutation::from_cycles(4, {}).is_identity());

    CHECK_THROWS_AS(Permutation::from_cycles(4, {{1, 2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_cycles(4, {{1, 5}}), std::invalid_argument);
}

TEST_CASE("cycle text round trip") {
    CHECK(Permutation::parse(4, "(1,4)(2,3)").to_cycle_string() == "(1,4)(2,3)");
    CHECK(Permutation::parse(4, " ( 1 , 4 ) ( 2 , 3 ) ").image_one_based() ==
          std::vector<int>{4, 3, 2, 1});
    CHECK(Permutation::parse(5, "id").is_identity());
    CHECK(Permutation(3).to_cycle_string() == "id");
    // fixed points are implicit
    CHECK(Permutation::parse(4, "(2,3)").to_cycle_string() == "(2,3)");
}

TEST_CASE("compose, inverse, conjugate") {
    Rng rng(2);
    const Permutation a = random_permutation(6, rng), b = random_permutation(6, rng);
    CHECK(compose(a, a.inverse()).is_identity());
    // compose(a,b)(k) = a(b(k))
    for (int k = 1; k <= 6; ++k) CHECK(compose(a, b)(k) == a(b(k)));

    // conjugating (2,3) by (1,2) relabels it to (1,3)
    const Permutation t = conjugate(Permutation::parse(4, "(2,3)"), Permutation::parse(4, "(1,2)"));
    CHECK(t == Permutation::parse(4, "(1,3)"));

    CHECK(inverse(Permutation::parse(4, "(1,2,3,4)")) == Permutation::parse(4, "(4,3,2,1)"));
}

TEST_CASE("permutation matrices act on basis vectors by the image map") {
    CHECK((permutation_matrix(Permutation(3)) - ComplexMatrix::identity(3)).max_norm() == 0.0);

    const ComplexMatrix p12 = permutation_matrix(Permutation::parse(2, "(1,2)"));
    CHECK(p12(0, 1) == cplx(1.0, 0.0));
    CHECK(p12(1, 0) == cplx(1.0, 0.0));

    const Permutation c = Permutation::parse(4, "(1,2,3,4)");
    const ComplexMatrix p = permutation_matrix(c);
    for (int j = 0; j < 4; ++j) {
        // column j has its one in row sigma(j): P e_j = e_{sigma(j)}
        for (int i = 0; i < 4; ++i)
            CHECK(p(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) ==
                  ((i == c.apply0(j)) ? cplx(1.0, 0.0) : cplx(0.0, 0.0)));
    }
}

TEST_CASE("fixed points") {
    CHECK(Permutation(3).fixed_points() == std::set<int>{1, 2, 3});
    CHECK(Permutation::parse(4, "(2,3)").fixed_points() == std::set<int>{1, 4});
    CHECK(Permutation::parse(4, "(1,2)(3,4)").fixed_points().empty());
}

TEST_CASE("admissibility: catalog case a, equal pair, common fixed point") {
    const Permutation id4(4);
    CHECK(is_admissible_pair(PermutationPair(id4, Permutation::parse(4, "(1,2)(3,4)"))).admissible);

    const Permutation s = Permutation::parse(4, "(1,2,3,4)");
    const AdmissibilityResult equal = is_admissible_pair(PermutationPair(s, s));
    CHECK_FALSE(equal.admissible);

    // violates clause (a) as well, which is reported first
    CHECK_FALSE(is_admissible_pair(
                    PermutationPair(Permutation::parse(4, "(2,3)"), Permutation::parse(4, "(1,2,3)")))
                    .admissible);

    // clause (a) holds for an equal pair, so the common fixed point is
    // what gets reported
    const AdmissibilityResult common = is_admissible_pair(
        PermutationPair(Permutation::parse(4, "(2,3)"), Permutation::parse(4, "(2,3)")));
    CHECK_FALSE(common.admissible);
    CHECK(common.status == AdmissibilityStatus::fails_common_fixed_point);

    CHECK_THROWS_AS(is_admissible_pair(PermutationPair(Permutation(3), Permutation(3))),
                    std::invalid_argument);
}

TEST_CASE("admissibility is invariant under conjugation and swap") {
    Rng rng(5);
    for (std::size_t n : {4, 6}) {
        int checked = 0;
        while (checked < 60) {
            const Permutation a = random_permutation(n, rng), b = random_permutation(n, rng);
            const PermutationPair pair(a, b);
            const bool adm = is_admissible_pair(pair).admissible;
            const Permutation tau = random_permutation(n, rng);
            const PermutationPair conj_pair(conjugate(a, tau), conjugate(b, tau));
            CHECK(is_admissible_pair(conj_pair).admissible == adm);
            CHECK(is_admissible_pair(PermutationPair(b, a)).admissible == adm);
            ++checked;
        }
    }
}

TEST_CASE("canonicalize groups swapped and conjugated pairs together") {
    const Permutation c = Permutation::parse(4, "(1,2,3,4)");
    const Permutation cinv = c.inverse();
    CHECK(canonical_pair(PermutationPair(c, cinv)) == canonical_pair(PermutationPair(cinv, c)));

    // conjugating by sigma1 itself keeps the class
    const Permutation s1 = Permutation::parse(4, "(2,3)");
    const Permutation s2 = Permutation::parse(4, "(1,3,4,2)");
    const PermutationPair p(s1, s2);
    const PermutationPair q(conjugate(s1, s1), conjugate(s2, s1));
    CHECK(canonical_pair(p) == canonical_pair(q));

    // tau = (3,4) relates the two partners of (1,2)(3,4)
    const Permutation a = Permutation::parse(4, "(1,2)(3,4)");
    const PermutationPair p1(a, Permutation::parse(4, "(1,3)(2,4)"));
    const PermutationPair p2(a, Permutation::parse(4, "(1,4)(2,3)"));
    CHECK(canonical_pair(p1) == canonical_pair(p2));
}

TEST_CASE("enumeration: n = 2 has exactly one class") {
    const auto classes = enumerate_admissible_classes(2);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].canonical.first.is_identity());
    CHECK(classes[0].canonical.second == Permutation::parse(2, "(1,2)"));
}

TEST_CASE("enumeration: n = 4 reproduces the ten reference classes") {
    const auto classes = enumerate_admissible_classes(4);
    REQUIRE(classes.size() == 10);

    std::set<std::vector<int>> canon_keys;
    for (const auto& cls : classes) canon_keys.insert(cls.canonical.encoding());
    for (const auto& ref : s4_reference_pairs()) {
        const auto key = canonical_pair(ref).encoding();
        CHECK(canon_keys.count(key) == 1);
    }

    // membership: ((1,2,3,4),(1,2)(3,4)) lands in the class of case h
    const PermutationPair h(Permutation::parse(4, "(1,2,3,4)"), Permutation::parse(4, "(1,2)(3,4)"));
    CHECK(canon_keys.count(canonical_pair(h).encoding()) == 1);

    // total ordered admissible pairs = sum of orbit sizes
    std::size_t total = 0;
    for (const auto& cls : classes) total += cls.members_count;
    std::size_t brute = 0;
    Permutation x(4);
    do {
        Permutation y(4);
        do {
            if (is_admissible_pair(PermutationPair(x, y)).admissible) ++brute;
        } while (y.next_lex());
    } while (x.next_lex());
    CHECK(total == brute);
}

TEST_CASE("enumeration guards") {
    CHECK_THROWS_AS(enumerate_admissible_classes(5), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_admissible_classes(10), std::invalid_argument);
}

TEST_CASE("the three standing pair families are admissible where expected") {
    // (cycle, inverse cycle): every even n >= 4
    for (std::size_t n : {4, 6, 8}) {
        const PermutationPair p(full_cycle(n), full_cycle(n).inverse());
        CHECK(is_admissible_pair(p).admissible);
    }
    // (reversal, adjacent transpositions): multiples of four only
    for (std::size_t n : {4, 8}) {
        const PermutationPair p(reversal_involution(n), adjacent_involution(n));
        CHECK(is_admissible_pair(p).admissible);
    }
    CHECK_FALSE(is_admissible_pair(PermutationPair(reversal_involution(6), adjacent_involution(6)))
                    .admissible);
    // (cycle, adjacent transpositions): every even n >= 4
    for (std::size_t n : {4, 6, 8}) {
        const PermutationPair p(full_cycle(n), adjacent_involution(n));
        CHECK(is_admissible_pair(p).admissible);
    }
}

TEST_CASE("complementary fixed-point pairs are admissible") {
    const Permutation s1 = Permutation::parse(6, "(1,2)(5,6)");
    const Permutation s2 = Permutation::parse(6, "(3,4)");
    CHECK(is_admissible_pair(PermutationPair(s1, s2)).admissible);

    const Permutation t1 = Permutation::parse(4, "(1,2,3,4)");
    CHECK(is_admissible_pair(PermutationPair(Permutation(4), t1)).admissible);
}

TEST_CASE("quotient fixed points are allowed except in the involution/commuting case") {
    // sigma2^-1 sigma1 has fixed points yet the pair is admissible
    const PermutationPair h(Permutation::parse(4, "(1,2,3,4)"), Permutation::parse(4, "(1,2)(3,4)"));
    const Permutation quot = compose(h.second.inverse(), h.first);
    CHECK_FALSE(quot.fixed_points().empty());
    CHECK(is_admissible_pair(h).admissible);

    // across the n = 4 classes, that pair's class is the only one whose
    // quotient has fixed points
    const auto h_key = canonical_pair(h).encoding();
    for (const auto& cls : enumerate_admissible_classes(4)) {
        const Permutation q = compose(cls.canonical.second.inverse(), cls.canonical.first);
        if (cls.canonical.encoding() == h_key)
            CHECK_FALSE(q.fixed_points().empty());
        else
            CHECK(q.fixed_points().empty());
    }
}
