#include "tlforge/rank1.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tlforge {

namespace {

struct PairLayout {
    std::vector<std::pair<int, int>> pairs;  // (k, sigma(k)) 0-based, k < sigma(k)
    int fixed = -1;                          // 0-based fixed point, -1 if none
};

PairLayout involution_layout(const Permutation& sigma, std::size_t n) {
    if (sigma.degree() != n) throw std::invalid_argument("rank1: sigma degree mismatch");
    if (!sigma.is_involution()) throw constraint_error("constraint violated: sigma must be an involution");
    const auto fixed = sigma.fixed_points();
    if (fixed.size() != n % 2)
        throw constraint_error("constraint violated: sigma must have exactly n mod 2 fixed points");
    PairLayout lay;
    for (int k = 0; k < static_cast<int>(n); ++k) {
        const int m = sigma.apply0(k);
        if (m == k)
            lay.fixed = k;
        else if (k < m)
            lay.pairs.emplace_back(k, m);
    }
    return lay;
}

TLSolution assemble_rank1(std::size_t n, const Permutation& sigma, const DiagonalMatrix& d, double q,
                          const std::vector<cplx>& free_z, int sign_choice) {
    TLSolution sol;
    sol.spanning = SpanningSet(n, {generalized_permutation_matrix(d, sigma)});
    sol.Q = q;
    sol.family = "rank1-normal";
    for (std::size_t i = 0; i < free_z.size(); ++i)
        sol.params["z" + std::to_string(i + 1)] = free_z[i];
    if (n % 2 == 1) sol.params["sign"] = cplx(static_cast<double>(sign_choice), 0.0);
    return sol;
}

}  // namespace

TLSolution build_rank1(const Rank1Params& p) {
    const std::size_t n = p.n;
    const PairLayout lay = involution_layout(p.sigma, n);
    if (p.free_z.size() != n / 2)
        throw constraint_error("constraint violated: need floor(n/2) free parameters");
    double s = 0.0, r = 0.0;
    for (const cplx& z : p.free_z) {
        const double m2 = std::norm(z);
        if (m2 == 0.0) throw constraint_error("constraint violated: free parameters must be nonzero");
        s += m2;
        r += 1.0 / m2;
    }
    if (p.sign_choice != 1 && p.sign_choice != -1)
        throw constraint_error("constraint violated: sign_choice must be +1 or -1");

    if (s >= 1.0)
        throw constraint_error("constraint violated: normalization unsolvable, sum |z_k|^2 must be < 1");

    double q = 0.0;
    if (n % 2 == 0) {
        // s + r/Q^2 = 1
        q = std::sqrt(r / (1.0 - s));
    } else {
        // s + r/Q^2 + 1/Q = 1, decreasing in Q; root is >= n
        auto excess = [&](double qq) { return s + r / (qq * qq) + 1.0 / qq - 1.0; };
        double lo = static_cast<double>(n);
        if (excess(lo) < 0.0) lo = 1e-6;
        double hi = 1e8;
        while (excess(hi) > 0.0 && hi < 1e300) hi *= 2.0;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            (excess(mid) >= 0.0 ? lo : hi) = mid;
        }
        q = 0.5 * (lo + hi);
    }

    DiagonalMatrix d(n);
    for (std::size_t i = 0; i < lay.pairs.size(); ++i) {
        const auto [k, m] = lay.pairs[i];
        d[static_cast<std::size_t>(k)] = p.free_z[i];
        d[static_cast<std::size_t>(m)] = cplx(1.0, 0.0) / (q * p.free_z[i]);
    }
    if (lay.fixed >= 0)
        d[static_cast<std::size_t>(lay.fixed)] = cplx(static_cast<double>(p.sign_choice) / std::sqrt(q), 0.0);

    return assemble_rank1(n, p.sigma, d, q, p.free_z, p.sign_choice);
}

TLSolution build_rank1_from_u(std::size_t n, const Permutation& sigma, const std::vector<cplx>& u,
                              int sign_choice) {
    const PairLayout lay = involution_layout(sigma, n);
    if (u.size() != n / 2) throw constraint_error("constraint violated: need floor(n/2) parameters");
    double q = (n % 2 == 1) ? 1.0 : 0.0;
    for (const cplx& uk : u) {
        const double m2 = std::norm(uk);
        if (m2 == 0.0) throw constraint_error("constraint violated: parameters must be nonzero");
        q += m2 + 1.0 / m2;
    }
    std::vector<cplx> z(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) z[i] = u[i] / std::sqrt(q);
    Rank1Params p;
    p.n = n;
    p.sigma = sigma;
    p.free_z = std::move(z);
    p.sign_choice = sign_choice;
    TLSolution sol = build_rank1(p);
    // The normalization root must reproduce the closed-form Q.
    if (std::abs(sol.Q - q) > 1e-9 * q)
        throw std::runtime_error("build_rank1_from_u: inconsistent Q determination");
    sol.Q = q;
    return sol;
}

VerificationReport verify_rank1(const ComplexMatrix& v, double q, const Tolerance& tol) {
    if (!v.is_square()) throw std::invalid_argument("verify_rank1: matrix must be square");
    const std::size_t n = v.rows();
    VerificationReport rep;

    const ComplexMatrix lhs = v * v.conjugate() * v.transpose() * v.dagger();
    const ComplexMatrix target = ComplexMatrix::identity(n) * cplx(1.0 / (q * q), 0.0);
    rep.set("vv22", (lhs - target).max_norm(), tol.eps);
    rep.set("trvv", std::abs((v.dagger() * v).trace() - cplx(1.0, 0.0)), tol.eps);
    rep.set("q_bound", std::max(0.0, static_cast<double>(n) - q), tol.eps);

    double scale = 0.0;
    if (is_almost_unitary(v, scale)) {
        rep.set("q_equality", std::abs(q - static_cast<double>(n)), tol.eps);
        rep.notes.push_back("V is almost unitary; Q meets the lower bound n");
    }
    rep.finalize();
    return rep;
}

VerificationReport spectral_pairing_check(const ComplexMatrix& v, double q, const Tolerance& tol) {
    VerificationReport base = verify_rank1(v, q, tol);
    if (!base.passed)
        throw std::invalid_argument("spectral_pairing_check: input fails rank-one verification:\n" +
                                    base.to_string());
    const std::size_t n = v.rows();
    VerificationReport rep;

    const std::vector<double> sv = singular_values(v, tol);  // descending
    double pair_res = 0.0;
    for (std::size_t k = 0; k < n / 2; ++k)
        pair_res = std::max(pair_res, std::abs(sv[k] * sv[n - 1 - k] - 1.0 / q));
    rep.set("sv_pairing", pair_res, tol.eps);
    if (n % 2 == 1) rep.set("sv_middle", std::abs(sv[n / 2] - 1.0 / std::sqrt(q)), tol.eps);

    const ComplexMatrix qw = v * v.conjugate() * cplx(q, 0.0);
    const NormalSpectrum sp = normal_eigensystem(qw, tol);
    if (!sp.available) {
        rep.set("eig_available", 1.0, 0.5);  // hard failure marker
        rep.finalize();
        return rep;
    }
    double mod_res = 0.0;
    for (const cplx& z : sp.values) mod_res = std::max(mod_res, std::abs(std::abs(z) - 1.0));
    rep.set("eig_modulus", mod_res, tol.eps);

    // Greedy conjugate pairing; any leftover must be a single eigenvalue 1.
    std::vector<cplx> vals = sp.values;
    double conj_res = 0.0;
    std::vector<cplx> unpaired;
    std::vector<bool> used(vals.size(), false);
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        double best = 1e300;
        std::size_t pick = vals.size();
        for (std::size_t j = i + 1; j < vals.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(vals[j] - std::conj(vals[i]));
            if (d < best) {
                best = d;
                pick = j;
            }
        }
        const double self = std::abs(vals[i] - std::conj(vals[i]));
        if (pick != vals.size() && best <= self) {
            used[pick] = true;
            conj_res = std::max(conj_res, best);
        } else {
            unpaired.push_back(vals[i]);  // self-conjugate up to noise
        }
    }
    // Real eigenvalues pair among themselves (e.g. two copies near 1 for the
    // almost-unitary case); an odd leftover must equal 1.
    std::sort(unpaired.begin(), unpaired.end(),
              [](const cplx& a, const cplx& b) { return a.real() < b.real(); });
    while (unpaired.size() >= 2) {
        const cplx a = unpaired.back();
        unpaired.pop_back();
        const cplx b = unpaired.back();
        unpaired.pop_back();
        conj_res = std::max(conj_res, std::abs(a - std::conj(b)));
    }
    rep.set("eig_conjugate_pairing", conj_res, 10.0 * tol.eps);
    if (n % 2 == 1) {
        if (unpaired.size() != 1)
            rep.set("eig_unpaired", 1.0, 0.5);
        else
            rep.set("eig_unpaired", std::abs(unpaired[0] - cplx(1.0, 0.0)), 10.0 * tol.eps);
    } else if (!unpaired.empty()) {
        rep.set("eig_unpaired", 1.0, 0.5);
    }
    rep.finalize();
    return rep;
}

Rank1NormalForm reduce_to_normal_form(const ComplexMatrix& v, double q, const Tolerance& tol) {
    VerificationReport base = verify_rank1(v, q, tol);
    if (!base.passed)
        throw std::invalid_argument("reduce_to_normal_form: input fails rank-one verification:\n" +
                                    base.to_string());
    const std::size_t n = v.rows();
    const ComplexMatrix qw = v * v.conjugate() * cplx(q, 0.0);
    const NormalSpectrum sp = normal_eigensystem(qw, tol);
    if (!sp.available)
        throw std::runtime_error("reduce_to_normal_form: spectrum unavailable (non-normal product)");

    const double gap_floor = std::sqrt(tol.eps);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(sp.values[i] - sp.values[j]) <= gap_floor)
                throw std::runtime_error(
                    "reduce_to_normal_form: degenerate spectrum; compare congruence fingerprints "
                    "instead");

    // Pair eigenbasis indices by the reciprocal relation zeta_a * zeta_b = 1.
    std::vector<int> pair_of(n, -1);
    double pairing_res = 0.0;
    for (std::size_t a = 0; a < n; ++a) {
        if (pair_of[a] >= 0) continue;
        double best = 1e300;
        std::size_t pick = n;
        for (std::size_t b = a; b < n; ++b) {
            if (pair_of[b] >= 0) continue;
            const double d = std::abs(sp.values[a] * sp.values[b] - cplx(1.0, 0.0));
            if (d < best) {
                best = d;
                pick = b;
            }
        }
        if (pick == n || best > gap_floor)
            throw std::runtime_error("reduce_to_normal_form: eigenvalues do not pair to products 1");
        pair_of[a] = static_cast<int>(pick);
        pair_of[pick] = static_cast<int>(a);
        pairing_res = std::max(pairing_res, best);
    }
    std::vector<int> image(n);
    for (std::size_t k = 0; k < n; ++k) image[k] = pair_of[k] + 1;
    const Permutation sigma = Permutation::from_image(image);
    if (sigma.fixed_points().size() != n % 2)
        throw std::runtime_error("reduce_to_normal_form: unexpected pairing fixed-point count");

    // In the eigenbasis the solution is supported on (a, sigma(a)) only.
    const ComplexMatrix g0 = sp.vectors.dagger();
    ComplexMatrix v0 = g0 * v * g0.transpose();
    DiagonalMatrix d0(n);
    for (std::size_t a = 0; a < n; ++a) {
        d0[a] = v0(a, static_cast<std::size_t>(sigma.apply0(static_cast<int>(a))));
        if (std::abs(d0[a]) < 1e-150)
            throw std::runtime_error("reduce_to_normal_form: vanishing generalized-permutation entry");
    }

    // Strip the diagonal gauge: D0 = T w H with w^2 = Q W~ (w flips under the
    // pairing), T > 0, and H unit-modulus invariant under the pairing.
    DiagonalMatrix w(n), xi(n);
    for (std::size_t a = 0; a < n; ++a) {
        const int b = pair_of[a];
        if (b == static_cast<int>(a)) {
            w[a] = 1.0;
        } else if (static_cast<int>(a) < b) {
            w[a] = std::sqrt(sp.values[a]);
            w[static_cast<std::size_t>(b)] = cplx(1.0, 0.0) / w[a];
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        const cplx phase = d0[a] / (std::abs(d0[a]) * w[a]);
        xi[a] = phase / std::abs(phase);
    }
    DiagonalMatrix h(n);
    for (std::size_t a = 0; a < n; ++a) {
        const std::size_t b = static_cast<std::size_t>(pair_of[a]);
        if (a > b) continue;
        cplx mean = xi[a] + xi[b];
        if (std::abs(mean) < 1e-8) mean = xi[a];  // antipodal noise guard
        mean /= std::abs(mean);
        const cplx root = std::sqrt(mean);
        h[a] = root;
        h[b] = root;
    }

    Rank1NormalForm nf;
    nf.sigma = sigma;
    nf.Q = q;
    nf.g = h.inverse().to_matrix() * g0;
    nf.D = DiagonalMatrix(n);
    for (std::size_t a = 0; a < n; ++a) nf.D[a] = d0[a] / (h[a] * h[a]);

    const ComplexMatrix reduced = nf.g * v * nf.g.transpose();
    const ComplexMatrix target = generalized_permutation_matrix(nf.D, nf.sigma);
    if ((reduced - target).max_norm() > 100.0 * tol.eps)
        throw std::runtime_error("reduce_to_normal_form: residual exceeds 100*tol");

    // Normal-form identities: tr(D conj(D)) = 1 and D^-1 = Q D^sigma.
    double vdp2 = std::abs((nf.D * nf.D.conjugate()).trace() - cplx(1.0, 0.0));
    const DiagonalMatrix rhs = nf.D.permuted(sigma) * cplx(q, 0.0);
    vdp2 = std::max(vdp2, (nf.D.inverse() - rhs).max_norm());
    if (vdp2 > 100.0 * tol.eps)
        throw std::runtime_error("reduce_to_normal_form: normal-form identities violated");
    return nf;
}

CongruenceCheckResult congruence_necessary_check(const ComplexMatrix& a, const ComplexMatrix& b,
                                                 const Tolerance& tol) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw std::invalid_argument("congruence_necessary_check: need square matrices of equal size");
    const auto sa = singular_values(a, tol);
    const auto sb = singular_values(b, tol);
    if (sa.back() <= 1e-12 * std::max(1.0, sa.front()) ||
        sb.back() <= 1e-12 * std::max(1.0, sb.front()))
        throw std::invalid_argument("congruence_necessary_check: inputs must be nonsingular");

    CongruenceCheckResult res;
    const double eps = 100.0 * tol.eps;
    for (std::size_t k = 0; k < sa.size(); ++k)
        if (std::abs(sa[k] - sb[k]) > eps) {
            res.distinguished = true;
            res.detail = "singular values differ";
            return res;
        }
    const auto fa = congruence_fingerprint(a, tol);
    const auto fb = congruence_fingerprint(b, tol);
    const std::string diff = compare_fingerprints(fa, fb, eps);
    if (!diff.empty()) {
        res.distinguished = true;
        res.detail = diff + " of A*conj(A) differ";
        return res;
    }
    res.detail = "not distinguished";
    return res;
}

}  // namespace tlforge
