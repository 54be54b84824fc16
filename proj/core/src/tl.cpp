#include "tlforge/tl.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tlforge {

SpanningSet::SpanningSet(std::size_t n_, std::vector<ComplexMatrix> mats_)
    : n(n_), mats(std::move(mats_)) {
    for (const auto& m : mats) {
        if (m.rows() != n || m.cols() != n)
            throw std::invalid_argument("SpanningSet: all matrices must be n x n");
        if (!m.all_finite()) throw std::invalid_argument("SpanningSet: non-finite entry");
    }
}

double orthonormality_residual(const SpanningSet& s) {
    double r = 0.0;
    for (std::size_t a = 0; a < s.rank(); ++a)
        for (std::size_t b = 0; b < s.rank(); ++b) {
            const cplx g = (s.mats[a].dagger() * s.mats[b]).trace();
            const cplx expect = (a == b) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
            r = std::max(r, std::abs(g - expect));
        }
    return r;
}

void check_spanning_orthonormality(const SpanningSet& s, const Tolerance& tol) {
    const double r = orthonormality_residual(s);
    if (r > tol.eps) {
        std::ostringstream os;
        os << "spanning set is not orthonormal: residual " << r << " > " << tol.eps;
        throw std::invalid_argument(os.str());
    }
}

void VerificationReport::set(const std::string& key, double value, double limit) {
    residuals[key] = value;
    limits[key] = limit;
}

void VerificationReport::skip(const std::string& key, const std::string& why) {
    notes.push_back(key + " skipped: " + why);
}

void VerificationReport::finalize() {
    passed = true;
    for (const auto& [key, value] : residuals)
        if (!(value <= limits.at(key))) passed = false;
}

double VerificationReport::max_residual() const {
    double m = 0.0;
    for (const auto& [key, value] : residuals) m = std::max(m, value);
    return m;
}

std::string VerificationReport::to_string() const {
    std::ostringstream os;
    for (const auto& [key, value] : residuals)
        os << "  " << key << ": " << value << (value <= limits.at(key) ? "  (ok, <= " : "  (FAIL, > ")
           << limits.at(key) << ")\n";
    for (const auto& n : notes) os << "  note: " << n << "\n";
    os << (passed ? "  => pass" : "  => fail");
    return os.str();
}

ComplexMatrix build_w(const SpanningSet& s) {
    const std::size_t n = s.n, r = s.rank();
    ComplexMatrix w(r * n, r * n);
    for (std::size_t row = 0; row < r; ++row) {
        const ComplexMatrix vbar_s = s.mats[row].conjugate();
        for (std::size_t col = 0; col < r; ++col)
            w.set_block(row * n, col * n, s.mats[col] * vbar_s);
    }
    return w;
}

ComplexMatrix build_projector(const SpanningSet& s, const Tolerance& tol) {
    check_spanning_orthonormality(s, tol);
    const std::size_t n = s.n;
    ComplexMatrix p(n * n, n * n);
    for (const auto& v : s.mats) {
        // vec(V) vec(V)^dagger with row-major flattening of coefficients
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const cplx vab = v(a, b);
                if (vab == cplx(0.0, 0.0)) continue;
                for (std::size_t c = 0; c < n; ++c)
                    for (std::size_t d = 0; d < n; ++d)
                        p(a * n + b, c * n + d) += vab * std::conj(v(c, d));
            }
    }
    return p;
}

ComplexMatrix build_generator(const TLSolution& sol, const Tolerance& tol) {
    return build_projector(sol.spanning, tol) * cplx(sol.Q, 0.0);
}

VerificationReport verify_tl_axioms(const ComplexMatrix& t, cplx q, std::size_t n,
                                    const Tolerance& tol, bool hermitian) {
    if (t.rows() != n * n || t.cols() != n * n)
        throw std::invalid_argument("verify_tl_axioms: T must be n^2 x n^2");
    if (n > kAxiomsMaxN)
        throw std::invalid_argument("verify_tl_axioms: n exceeds the dense triple-product cap (8); "
                                    "use the unitarity criterion instead");
    VerificationReport rep;
    if (hermitian)
        rep.set("t1", (t.dagger() - t).max_norm(), tol.eps);
    else
        rep.skip("t1", "non-Hermitian mode");

    rep.set("t2", (t * t - t * q).max_norm(), tol.eps);

    const ComplexMatrix id = ComplexMatrix::identity(n);
    const ComplexMatrix t12 = kron(t, id);
    const ComplexMatrix t23 = kron(id, t);
    rep.set("t3", (t12 * t23 * t12 - t12).max_norm(), tol.eps);
    rep.set("t4", (t23 * t12 * t23 - t23).max_norm(), tol.eps);
    rep.finalize();
    return rep;
}

VerificationReport verify_by_criterion(const TLSolution& sol, const Tolerance& tol) {
    VerificationReport rep;
    rep.set("orthonormality", orthonormality_residual(sol.spanning), tol.eps);
    const ComplexMatrix qw = build_w(sol.spanning) * cplx(sol.Q, 0.0);
    rep.set("unitarity", unitarity_residual(qw), tol.eps);
    if (sol.rank() == 1) rep.set("det_qw", std::abs(determinant(qw) - cplx(1.0, 0.0)), tol.eps);
    rep.finalize();
    return rep;
}

TLSolution apply_congruence(const TLSolution& sol, const ComplexMatrix& g, const Tolerance& tol) {
    double res = 0.0;
    if (!is_unitary_within(g, tol, res)) {
        std::ostringstream os;
        os << "apply_congruence: g is not unitary (residual " << res << ")";
        throw std::invalid_argument(os.str());
    }
    TLSolution out = sol;
    const ComplexMatrix gt = g.transpose();
    for (auto& v : out.spanning.mats) v = g * v * gt;
    return out;
}

CongruenceFingerprint congruence_fingerprint(const ComplexMatrix& v, const Tolerance& tol) {
    if (!v.is_square()) throw std::invalid_argument("congruence_fingerprint: matrix must be square");
    CongruenceFingerprint fp;
    fp.singulars = singular_values(v, tol);
    const ComplexMatrix w = v * v.conjugate();
    fp.chi = w.trace();
    NormalSpectrum sp = normal_eigensystem(w, tol);
    fp.spectrum_available = sp.available;
    if (sp.available) fp.spectrum_vvbar = std::move(sp.values);
    return fp;
}

namespace {

// Greedy multiset match under absolute tolerance.
bool multisets_match(std::vector<cplx> a, std::vector<cplx> b, double tol) {
    if (a.size() != b.size()) return false;
    for (const cplx& x : a) {
        double best = tol;
        std::size_t pick = b.size();
        for (std::size_t j = 0; j < b.size(); ++j) {
            const double d = std::abs(x - b[j]);
            if (d <= best) {
                best = d;
                pick = j;
            }
        }
        if (pick == b.size()) return false;
        b.erase(b.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return true;
}

}  // namespace

std::string compare_fingerprints(const CongruenceFingerprint& a, const CongruenceFingerprint& b,
                                 double tol) {
    if (a.singulars.size() != b.singulars.size()) return "dimension";
    for (std::size_t k = 0; k < a.singulars.size(); ++k)
        if (std::abs(a.singulars[k] - b.singulars[k]) > tol) return "singular values";
    if (std::abs(a.chi - b.chi) > tol) return "chi";
    if (a.spectrum_available && b.spectrum_available) {
        if (!multisets_match(a.spectrum_vvbar, b.spectrum_vvbar, tol)) return "spectrum of V*conj(V)";
    }
    return "";
}

}  // namespace tlforge
