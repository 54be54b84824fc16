#include "tlforge/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tlforge {

namespace {

double offdiag_frobenius(const ComplexMatrix& a) {
    const std::size_t n = a.rows();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// One cyclic Jacobi pass over a Hermitian matrix; rotations accumulate into v.
void jacobi_sweep(ComplexMatrix& a, ComplexMatrix& v, double threshold) {
    const std::size_t n = a.rows();
    for (std::size_t p = 0; p + 1 < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            const cplx apq = a(p, q);
            const double g = std::abs(apq);
            if (g <= threshold) continue;
            const double alpha = a(p, p).real();
            const double beta = a(q, q).real();
            const cplx phase = apq / g;  // e^{i phi}
            const double tau = (beta - alpha) / (2.0 * g);
            const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                          : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
            const double c = 1.0 / std::sqrt(1.0 + t * t);
            const double s = t * c;
            const cplx phc = std::conj(phase);
            // Columns (right multiplication by the plane rotation).
            for (std::size_t i = 0; i < n; ++i) {
                const cplx aip = a(i, p), aiq = a(i, q);
                a(i, p) = c * aip - s * phc * aiq;
                a(i, q) = s * aip + c * phc * aiq;
            }
            // Rows (left multiplication by its conjugate transpose).
            for (std::size_t j = 0; j < n; ++j) {
                const cplx apj = a(p, j), aqj = a(q, j);
                a(p, j) = c * apj - s * phase * aqj;
                a(q, j) = s * apj + c * phase * aqj;
            }
            a(p, q) = cplx(0.0, 0.0);
            a(q, p) = cplx(0.0, 0.0);
            a(p, p) = cplx(a(p, p).real(), 0.0);
            a(q, q) = cplx(a(q, q).real(), 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                const cplx vip = v(i, p), viq = v(i, q);
                v(i, p) = c * vip - s * phc * viq;
                v(i, q) = s * vip + c * phc * viq;
            }
        }
    }
}

}  // namespace

Eigensystem hermitian_eigensystem(const ComplexMatrix& a, const Tolerance& tol) {
    if (!a.is_square()) throw std::invalid_argument("hermitian_eigensystem: matrix must be square");
    const std::size_t n = a.rows();
    const double scale = std::max(1.0, a.max_norm());
    if (hermiticity_residual(a) > 100.0 * tol.eps * scale)
        throw std::invalid_argument("hermitian_eigensystem: input is not Hermitian within tolerance");

    ComplexMatrix w = (a + a.dagger()) * cplx(0.5, 0.0);  // symmetrize roundoff away
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double fnorm = std::max(1e-300, w.frobenius_norm());
    for (int sweep = 0; sweep < 64; ++sweep) {
        const double off = offdiag_frobenius(w);
        if (off <= 1e-15 * fnorm) break;
        // Early sweeps skip tiny elements; final sweeps rotate everything.
        const double threshold = (sweep < 3) ? 0.1 * off / static_cast<double>(n * n) : 0.0;
        jacobi_sweep(w, v, threshold);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return w(i, i).real() < w(j, j).real(); });

    Eigensystem es;
    es.values.resize(n);
    es.vectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        es.values[k] = w(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) es.vectors(i, k) = v(i, order[k]);
    }
    return es;
}

std::vector<double> singular_values(const ComplexMatrix& a, const Tolerance& tol) {
    if (!a.is_square()) throw std::invalid_argument("singular_values: matrix must be square");
    const ComplexMatrix gram = a.dagger() * a;
    Eigensystem es = hermitian_eigensystem(gram, tol);
    std::vector<double> s(es.values.size());
    for (std::size_t k = 0; k < s.size(); ++k)
        s[k] = std::sqrt(std::max(0.0, es.values[es.values.size() - 1 - k]));
    return s;
}

cplx determinant(const ComplexMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("determinant: matrix must be square");
    const std::size_t n = a.rows();
    if (n == 0) return cplx(1.0, 0.0);
    ComplexMatrix lu = a;
    cplx det(1.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t piv = i;
        double best = std::abs(lu(i, i));
        for (std::size_t k = i + 1; k < n; ++k)
            if (std::abs(lu(k, i)) > best) {
                best = std::abs(lu(k, i));
                piv = k;
            }
        if (best == 0.0) return cplx(0.0, 0.0);
        if (piv != i) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu(i, j), lu(piv, j));
            det = -det;
        }
        det *= lu(i, i);
        for (std::size_t k = i + 1; k < n; ++k) {
            const cplx f = lu(k, i) / lu(i, i);
            if (f == cplx(0.0, 0.0)) continue;
            for (std::size_t j = i; j < n; ++j) lu(k, j) -= f * lu(i, j);
        }
    }
    return det;
}

ComplexMatrix inverse_matrix(const ComplexMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("inverse_matrix: matrix must be square");
    const std::size_t n = a.rows();
    ComplexMatrix m = a;
    ComplexMatrix inv = ComplexMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t piv = i;
        double best = std::abs(m(i, i));
        for (std::size_t k = i + 1; k < n; ++k)
            if (std::abs(m(k, i)) > best) {
                best = std::abs(m(k, i));
                piv = k;
            }
        if (best < 1e-300) throw std::domain_error("inverse_matrix: singular matrix");
        if (piv != i)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(i, j), m(piv, j));
                std::swap(inv(i, j), inv(piv, j));
            }
        const cplx d = m(i, i);
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) /= d;
            inv(i, j) /= d;
        }
        for (std::size_t k = 0; k < n; ++k) {
            if (k == i) continue;
            const cplx f = m(k, i);
            if (f == cplx(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < n; ++j) {
                m(k, j) -= f * m(i, j);
                inv(k, j) -= f * inv(i, j);
            }
        }
    }
    return inv;
}

NormalSpectrum normal_eigensystem(const ComplexMatrix& w, const Tolerance& tol) {
    NormalSpectrum out;
    if (!w.is_square()) throw std::invalid_argument("normal_eigensystem: matrix must be square");
    const std::size_t n = w.rows();
    const ComplexMatrix wd = w.dagger();
    const double scale = std::max(1.0, w.max_norm() * w.max_norm());
    if ((w * wd - wd * w).max_norm() > 1e-8 * scale) return out;  // not normal

    const ComplexMatrix h = (w + wd) * cplx(0.5, 0.0);
    const ComplexMatrix k = (w - wd) * cplx(0.0, -0.5);

    for (double cluster_tol = std::max(1e-10, 1e-9 * std::max(1.0, h.max_norm()));
         cluster_tol < 1.0; cluster_tol *= 100.0) {
        Eigensystem eh = hermitian_eigensystem(h, tol);
        ComplexMatrix g = eh.vectors;
        // Split degenerate h-eigenspaces with the anti-Hermitian part.
        std::size_t start = 0;
        while (start < n) {
            std::size_t stop = start + 1;
            while (stop < n && eh.values[stop] - eh.values[stop - 1] <= cluster_tol) ++stop;
            const std::size_t m = stop - start;
            if (m > 1) {
                ComplexMatrix gc(n, m);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t c = 0; c < m; ++c) gc(i, c) = g(i, start + c);
                const ComplexMatrix b = gc.dagger() * (k * gc);
                Eigensystem eb = hermitian_eigensystem(b, tol);
                const ComplexMatrix rotated = gc * eb.vectors;
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t c = 0; c < m; ++c) g(i, start + c) = rotated(i, c);
            }
            start = stop;
        }
        const ComplexMatrix d = g.dagger() * (w * g);
        if (offdiag_frobenius(d) <= 1e-7 * std::max(1.0, d.frobenius_norm())) {
            out.available = true;
            out.vectors = g;
            out.values.resize(n);
            for (std::size_t i = 0; i < n; ++i) out.values[i] = d(i, i);
            return out;
        }
    }
    return out;
}

double singular_value_spread(const ComplexMatrix& a) {
    const std::vector<double> s = singular_values(a);
    if (s.empty() || s.front() <= 0.0) return 0.0;
    return (s.front() - s.back()) / s.front();
}

bool is_almost_unitary(const ComplexMatrix& a, double& scale) {
    const std::vector<double> s = singular_values(a);
    if (s.empty() || s.front() <= 0.0) return false;
    if ((s.front() - s.back()) / s.front() >= 1e-8) return false;
    double mean = 0.0;
    for (double v : s) mean += v;
    mean /= static_cast<double>(s.size());
    scale = 1.0 / mean;
    return true;
}

}  // namespace tlforge
