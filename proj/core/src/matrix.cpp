#include "tlforge/matrix.hpp"

#include "tlforge/permutation.hpp"

#include <cmath>
#include <sstream>

namespace tlforge {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_)
        throw std::invalid_argument("ComplexMatrix: entries length must equal rows*cols");
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    ComplexMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("ComplexMatrix::from_rows: ragged rows");
        std::size_t j = 0;
        for (const auto& v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::zero(std::size_t rows, std::size_t cols) { return ComplexMatrix(rows, cols); }

bool ComplexMatrix::all_finite() const {
    for (const auto& v : a_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix +: shape mismatch");
    ComplexMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix -: shape mismatch");
    ComplexMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix *: inner dimension mismatch");
    ComplexMatrix r(rows_, o.cols_);
    // i-k-j order keeps both operands streaming in row-major storage.
    for (std::size_t i = 0; i < rows_; ++i) {
        const cplx* ai = &a_[i * cols_];
        cplx* ri = &r.a_[i * o.cols_];
        for (std::size_t k = 0; k < cols_; ++k) {
            const cplx aik = ai[k];
            if (aik == cplx(0.0, 0.0)) continue;
            const cplx* bk = &o.a_[k * o.cols_];
            for (std::size_t j = 0; j < o.cols_; ++j) ri[j] += aik * bk[j];
        }
    }
    return r;
}

ComplexMatrix ComplexMatrix::operator*(cplx s) const {
    ComplexMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * s;
    return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = std::conj(a_[k]);
    return r;
}

ComplexMatrix ComplexMatrix::dagger() const {
    ComplexMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

cplx ComplexMatrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace: matrix must be square");
    cplx t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_norm() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

ComplexMatrix ComplexMatrix::block(std::size_t i0, std::size_t j0, std::size_t rows, std::size_t cols) const {
    if (i0 + rows > rows_ || j0 + cols > cols_) throw std::out_of_range("block: out of range");
    ComplexMatrix b(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) b(i, j) = (*this)(i0 + i, j0 + j);
    return b;
}

void ComplexMatrix::set_block(std::size_t i0, std::size_t j0, const ComplexMatrix& b) {
    if (i0 + b.rows() > rows_ || j0 + b.cols() > cols_) throw std::out_of_range("set_block: out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) (*this)(i0 + i, j0 + j) = b(i, j);
}

std::string ComplexMatrix::to_string(int precision) const {
    std::ostringstream os;
    os.precision(precision);
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (std::size_t j = 0; j < cols_; ++j) {
            const cplx v = (*this)(i, j);
            os << "(" << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "i)";
            if (j + 1 < cols_) os << " ";
        }
        os << (i + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx(0.0, 0.0)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return r;
}

double unitarity_residual(const ComplexMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("unitarity_residual: matrix must be square");
    const std::size_t n = a.rows();
    const ComplexMatrix ad = a.dagger();
    const ComplexMatrix left = a * ad;
    const ComplexMatrix right = ad * a;
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const cplx e = (i == j) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
            m = std::max(m, std::abs(left(i, j) - e));
            m = std::max(m, std::abs(right(i, j) - e));
        }
    return m;
}

bool is_unitary_within(const ComplexMatrix& a, const Tolerance& tol) {
    return unitarity_residual(a) <= tol.eps;
}

bool is_unitary_within(const ComplexMatrix& a, const Tolerance& tol, double& residual) {
    residual = unitarity_residual(a);
    return residual <= tol.eps;
}

double hermiticity_residual(const ComplexMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("hermiticity_residual: matrix must be square");
    return (a - a.dagger()).max_norm();
}

bool is_hermitian_within(const ComplexMatrix& a, const Tolerance& tol) {
    return hermiticity_residual(a) <= tol.eps;
}

DiagonalMatrix DiagonalMatrix::conjugate() const {
    DiagonalMatrix r(size());
    for (std::size_t k = 0; k < size(); ++k) r[k] = std::conj(d_[k]);
    return r;
}

DiagonalMatrix DiagonalMatrix::operator*(const DiagonalMatrix& o) const {
    if (size() != o.size()) throw std::invalid_argument("diag *: size mismatch");
    DiagonalMatrix r(size());
    for (std::size_t k = 0; k < size(); ++k) r[k] = d_[k] * o.d_[k];
    return r;
}

DiagonalMatrix DiagonalMatrix::operator*(cplx s) const {
    DiagonalMatrix r(size());
    for (std::size_t k = 0; k < size(); ++k) r[k] = d_[k] * s;
    return r;
}

DiagonalMatrix DiagonalMatrix::operator+(const DiagonalMatrix& o) const {
    if (size() != o.size()) throw std::invalid_argument("diag +: size mismatch");
    DiagonalMatrix r(size());
    for (std::size_t k = 0; k < size(); ++k) r[k] = d_[k] + o.d_[k];
    return r;
}

DiagonalMatrix DiagonalMatrix::operator-(const DiagonalMatrix& o) const {
    if (size() != o.size()) throw std::invalid_argument("diag -: size mismatch");
    DiagonalMatrix r(size());
    for (std::size_t k = 0; k < size(); ++k) r[k] = d_[k] - o.d_[k];
    return r;
}

DiagonalMatrix DiagonalMatrix::inverse() const {
    DiagonalMatrix r(size());
    for (std::size_t k = 0; k < size(); ++k) {
        if (std::abs(d_[k]) == 0.0) throw std::domain_error("diag inverse: zero entry");
        r[k] = cplx(1.0, 0.0) / d_[k];
    }
    return r;
}

bool DiagonalMatrix::nonsingular(double floor) const {
    for (const auto& v : d_)
        if (!(std::abs(v) > floor)) return false;
    return true;
}

cplx DiagonalMatrix::trace() const {
    cplx t = 0.0;
    for (const auto& v : d_) t += v;
    return t;
}

double DiagonalMatrix::max_norm() const {
    double m = 0.0;
    for (const auto& v : d_) m = std::max(m, std::abs(v));
    return m;
}

DiagonalMatrix DiagonalMatrix::permuted(const Permutation& sigma) const {
    if (sigma.degree() != size()) throw std::invalid_argument("diag permuted: degree mismatch");
    const Permutation inv = sigma.inverse();
    DiagonalMatrix r(size());
    for (std::size_t k = 0; k < size(); ++k) r[k] = d_[static_cast<std::size_t>(inv.apply0(static_cast<int>(k)))];
    return r;
}

ComplexMatrix DiagonalMatrix::to_matrix() const {
    ComplexMatrix m(size(), size());
    for (std::size_t k = 0; k < size(); ++k) m(k, k) = d_[k];
    return m;
}

ComplexMatrix generalized_permutation_matrix(const DiagonalMatrix& d, const Permutation& sigma) {
    if (sigma.degree() != d.size()) throw std::invalid_argument("generalized_permutation_matrix: degree mismatch");
    const std::size_t n = d.size();
    ComplexMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t i = static_cast<std::size_t>(sigma.apply0(static_cast<int>(j)));
        m(i, j) = d[i];
    }
    return m;
}

}  // namespace tlforge
