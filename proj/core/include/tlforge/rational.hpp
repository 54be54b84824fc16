// Exact rational arithmetic for the discrete side of the constructions:
// integer matrices built from permutations, rational linear solves, and
// odd-integer parity validation (which must never pass through floating
// point).

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tlforge {

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;  // always > 0

    Rational() = default;
    Rational(std::int64_t n) : num(n) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d);

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational operator-() const { return Rational(-num, den); }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }
    bool is_odd_integer() const { return den == 1 && num % 2 != 0; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string to_string() const;
};

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Exact Gaussian elimination on [A | rhs]; returns a particular solution
/// with non-pivot variables set to zero, or empty if inconsistent.
struct RationalSolveResult {
    bool consistent = false;
    RationalVector solution;
};
RationalSolveResult solve_rational(const RationalMatrix& a, const RationalVector& rhs);

/// Column indices of a pivot basis of the column space.
std::vector<std::size_t> pivot_columns(const RationalMatrix& a);

RationalVector matvec(const RationalMatrix& a, const RationalVector& x);

}  // namespace tlforge
