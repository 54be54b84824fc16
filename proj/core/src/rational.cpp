#include "tlforge/rational.hpp"

#include <numeric>
#include <sstream>

namespace tlforge {

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    num = g ? n / g : 0;
    den = g ? d / g : 1;
}

namespace {
std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    const __int128 p = static_cast<__int128>(a) * b;
    if (p > INT64_MAX || p < INT64_MIN) throw std::overflow_error("Rational: overflow");
    return static_cast<std::int64_t>(p);
}
}  // namespace

Rational Rational::operator+(const Rational& o) const {
    return Rational(checked_mul(num, o.den) + checked_mul(o.num, den), checked_mul(den, o.den));
}
Rational Rational::operator-(const Rational& o) const {
    return Rational(checked_mul(num, o.den) - checked_mul(o.num, den), checked_mul(den, o.den));
}
Rational Rational::operator*(const Rational& o) const {
    return Rational(checked_mul(num, o.num), checked_mul(den, o.den));
}
Rational Rational::operator/(const Rational& o) const {
    if (o.num == 0) throw std::domain_error("Rational: division by zero");
    return Rational(checked_mul(num, o.den), checked_mul(den, o.num));
}

std::string Rational::to_string() const {
    std::ostringstream os;
    os << num;
    if (den != 1) os << "/" << den;
    return os.str();
}

namespace {

// Row echelon reduction of [a | rhs...]; returns pivot columns and the
// reduced augmented matrix.
struct Echelon {
    RationalMatrix m;
    std::vector<std::size_t> pivots;  // pivots[r] = column of row r's pivot
};

Echelon reduce(RationalMatrix m, std::size_t lead_cols) {
    Echelon e;
    const std::size_t rows = m.size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < lead_cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        const Rational inv = Rational(1) / m[r][c];
        for (auto& x : m[r]) x = x * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            const Rational f = m[i][c];
            for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.m = std::move(m);
    return e;
}

}  // namespace

RationalSolveResult solve_rational(const RationalMatrix& a, const RationalVector& rhs) {
    RationalSolveResult res;
    const std::size_t rows = a.size();
    if (rows == 0) {
        res.consistent = true;
        return res;
    }
    const std::size_t cols = a[0].size();
    if (rhs.size() != rows) throw std::invalid_argument("solve_rational: rhs size mismatch");
    RationalMatrix aug(rows, RationalVector(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = rhs[i];
    }
    Echelon e = reduce(std::move(aug), cols);
    for (std::size_t i = e.pivots.size(); i < rows; ++i)
        if (!e.m[i][cols].is_zero()) return res;  // 0 = nonzero row
    res.consistent = true;
    res.solution.assign(cols, Rational(0));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) res.solution[e.pivots[r]] = e.m[r][cols];
    return res;
}

std::vector<std::size_t> pivot_columns(const RationalMatrix& a) {
    if (a.empty()) return {};
    return reduce(a, a[0].size()).pivots;
}

RationalVector matvec(const RationalMatrix& a, const RationalVector& x) {
    RationalVector y(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != x.size()) throw std::invalid_argument("matvec: size mismatch");
        for (std::size_t j = 0; j < x.size(); ++j) y[i] = y[i] + a[i][j] * x[j];
    }
    return y;
}

}  // namespace tlforge
