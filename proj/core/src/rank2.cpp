#include "tlforge/rank2.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

namespace tlforge {

namespace {

cplx unit_phase_from_pi_multiple(const Rational& r) {
    const double angle = std::numbers::pi * r.to_double();
    return cplx(std::cos(angle), std::sin(angle));
}

void require(bool ok, const std::string& condition) {
    if (!ok) throw constraint_error("constraint violated: " + condition);
}

}  // namespace

Rank2System::Rank2System(Permutation s1, Permutation s2, DiagonalMatrix dd1, DiagonalMatrix dd2)
    : sigma1(std::move(s1)), sigma2(std::move(s2)), d1(std::move(dd1)), d2(std::move(dd2)) {
    if (sigma1.degree() != sigma2.degree() || sigma1.degree() != d1.size() || d1.size() != d2.size())
        throw std::invalid_argument("Rank2System: inconsistent sizes");
}

SpanningSet Rank2System::to_spanning() const {
    return SpanningSet(n(), {generalized_permutation_matrix(d1, sigma1),
                             generalized_permutation_matrix(d2, sigma2)});
}

VerificationReport verify_rank2(const SpanningSet& s, double q, const Tolerance& tol) {
    if (s.rank() != 2) throw std::invalid_argument("verify_rank2: spanning set must have rank 2");
    const std::size_t n = s.n;
    const ComplexMatrix& v1 = s.mats[0];
    const ComplexMatrix& v2 = s.mats[1];
    const ComplexMatrix v1c = v1.conjugate(), v2c = v2.conjugate();
    const ComplexMatrix v1t = v1.transpose(), v2t = v2.transpose();
    const ComplexMatrix v1d = v1.dagger(), v2d = v2.dagger();
    const ComplexMatrix target = ComplexMatrix::identity(n) * cplx(1.0 / (q * q), 0.0);

    VerificationReport rep;
    rep.set("veq1", (v1 * v1c * v1t * v1d + v2 * v1c * v1t * v2d - target).max_norm(), tol.eps);
    rep.set("veq2", (v1 * v2c * v2t * v1d + v2 * v2c * v2t * v2d - target).max_norm(), tol.eps);
    rep.set("veq3", (v1 * v1c * v2t * v1d + v2 * v1c * v2t * v2d).max_norm(), tol.eps);
    rep.set("orthonormality", orthonormality_residual(s), tol.eps);

    const double det1 = std::abs(determinant(v1));
    const double det2 = std::abs(determinant(v2));
    rep.set("det_equal", std::abs(det1 - det2), tol.eps);
    if (n % 2 == 1) rep.set("det_odd_singular", std::max(det1, det2), tol.eps);

    if (n == 2)
        rep.set("q_bound", std::abs(q - std::sqrt(2.0)), tol.eps);
    else
        rep.set("q_bound", std::max(0.0, static_cast<double>(n) / 2.0 - q), tol.eps);

    // When a block of Q*W is almost unitary the bound sharpens to n/sqrt(2)
    // and the unitarizing scale must be sqrt(2)*Q.
    const ComplexMatrix blocks[4] = {v1 * v1c, v2 * v1c, v1 * v2c, v2 * v2c};
    for (int b = 0; b < 4; ++b) {
        double scale = 0.0;
        if (is_almost_unitary(blocks[b], scale)) {
            rep.set("q_bound_almost_unitary", std::max(0.0, static_cast<double>(n) / std::sqrt(2.0) - q),
                    tol.eps);
            rep.set("alpha_sqrt2q", std::abs(scale - std::sqrt(2.0) * q), 1e4 * tol.eps * q);
            rep.notes.push_back("block V" + std::to_string(b % 2 + 1) + "*conj(V" +
                                std::to_string(b / 2 + 1) + ") is almost unitary");
            break;
        }
    }
    rep.finalize();
    return rep;
}

void N3pBlocks::validate(const Tolerance& tol) const {
    require(p >= 1, "p >= 1");
    const ComplexMatrix* all[8] = {&f11, &f12, &f21, &f22, &g11, &g12, &g21, &g22};
    for (const auto* m : all)
        require(m->rows() == p && m->cols() == p, "all blocks must be p x p");
    require(alpha1 > 0.0 && alpha2 > 0.0, "alpha1, alpha2 > 0");
    require(std::abs(1.0 / (alpha1 * alpha1) + 1.0 / (alpha2 * alpha2) - 1.0 / static_cast<double>(p)) <=
                tol.eps,
            "betatr: 1/alpha1^2 + 1/alpha2^2 = 1/p");

    ComplexMatrix h1(2 * p, 2 * p), h2(2 * p, 2 * p);
    h1.set_block(0, 0, f11);
    h1.set_block(0, p, f12);
    h1.set_block(p, 0, f21);
    h1.set_block(p, p, f22);
    h2.set_block(0, 0, g11);
    h2.set_block(0, p, g12);
    h2.set_block(p, 0, g21);
    h2.set_block(p, p, g22);
    require(unitarity_residual(h1 * cplx(alpha1, 0.0)) <= tol.eps, "Hpart: alpha1*[F] unitary");
    require(unitarity_residual(h2 * cplx(alpha2, 0.0)) <= tol.eps, "Hpart: alpha2*[G] unitary");

    if (p > 1) {
        require(std::abs(std::abs(zeta) - 1.0) <= tol.eps, "gamHH: |zeta| = 1");
        const ComplexMatrix lhs = (g11 * f12 + g12 * f22) * zeta;
        const ComplexMatrix rhs = g21 * f11 + g22 * f21;
        require((lhs - rhs).max_norm() <= tol.eps,
                "gamHH: zeta*(G11 F12 + G12 F22) = G21 F11 + G22 F21");
    }
}

TLSolution build_n3p(const N3pBlocks& blocks, const Tolerance& tol, const std::string& family) {
    blocks.validate(tol);
    const std::size_t p = blocks.p, n = 3 * p;
    ComplexMatrix v1(n, n), v2(n, n);
    v1.set_block(0, p, blocks.f11);
    v1.set_block(p, 0, blocks.g11.conjugate());
    v1.set_block(p, 2 * p, blocks.g12.conjugate());
    v1.set_block(2 * p, p, blocks.f21);
    v2.set_block(0, p, blocks.f12);
    v2.set_block(p, 0, blocks.g21.conjugate());
    v2.set_block(p, 2 * p, blocks.g22.conjugate());
    v2.set_block(2 * p, p, blocks.f22);

    TLSolution sol;
    sol.spanning = SpanningSet(n, {v1, v2});
    sol.Q = blocks.alpha1 * blocks.alpha2;
    sol.family = family;
    sol.params["alpha1"] = cplx(blocks.alpha1, 0.0);
    sol.params["alpha2"] = cplx(blocks.alpha2, 0.0);
    sol.params["zeta"] = blocks.zeta;
    return sol;
}

N3pBlocks n3p_from_unitary(const ComplexMatrix& u, double alpha1, double alpha2,
                           const Tolerance& tol) {
    require(u.is_square() && u.rows() % 2 == 0, "U must be 2p x 2p");
    const std::size_t p = u.rows() / 2;
    require(unitarity_residual(u) <= tol.eps, "U must be unitary");
    require(alpha1 > 0.0 && alpha2 > 0.0, "alpha1, alpha2 > 0");
    require(std::abs(1.0 / (alpha1 * alpha1) + 1.0 / (alpha2 * alpha2) - 1.0 / static_cast<double>(p)) <=
                tol.eps,
            "betatr: 1/alpha1^2 + 1/alpha2^2 = 1/p");

    auto ub = [&](std::size_t i, std::size_t j) { return u.block(i * p, j * p, p, p); };
    N3pBlocks b;
    b.p = p;
    b.alpha1 = alpha1;
    b.alpha2 = alpha2;
    const cplx ia1(1.0 / alpha1, 0.0), ia2(1.0 / alpha2, 0.0);
    b.f11 = ub(0, 0) * ia1;
    b.f12 = ub(0, 1) * ia1;
    b.f21 = ub(1, 0) * ia1;
    b.f22 = ub(1, 1) * ia1;
    // Scaled G grid equals U^dagger, so both sides of the phase condition
    // are off-diagonal blocks of U^dagger U = I.
    b.g11 = ub(0, 0).dagger() * ia2;
    b.g12 = ub(1, 0).dagger() * ia2;
    b.g21 = ub(0, 1).dagger() * ia2;
    b.g22 = ub(1, 1).dagger() * ia2;
    b.zeta = cplx(1.0, 0.0);
    return b;
}

N3pBlocks n3p_w_ansatz(const ComplexMatrix& f11, const ComplexMatrix& f22,
                       const ComplexMatrix& g11, const ComplexMatrix& g22, cplx w,
                       double alpha1, double alpha2, const Tolerance& tol) {
    const std::size_t p = f11.rows();
    require(f11.is_square() && f22.is_square() && g11.is_square() && g22.is_square() &&
                f22.rows() == p && g11.rows() == p && g22.rows() == p,
            "diagonal blocks must be square of equal size");
    const double beta1 = alpha1 * std::sqrt(1.0 + std::norm(w));
    const double beta2 = alpha2 * std::sqrt(1.0 + std::norm(w));
    require(unitarity_residual(f11 * cplx(beta1, 0.0)) <= tol.eps, "beta1*F11 unitary");
    require(unitarity_residual(f22 * cplx(beta1, 0.0)) <= tol.eps, "beta1*F22 unitary");
    require(unitarity_residual(g11 * cplx(beta2, 0.0)) <= tol.eps, "beta2*G11 unitary");
    require(unitarity_residual(g22 * cplx(beta2, 0.0)) <= tol.eps, "beta2*G22 unitary");
    require(std::abs(1.0 / (alpha1 * alpha1) + 1.0 / (alpha2 * alpha2) - 1.0 / static_cast<double>(p)) <=
                tol.eps,
            "betatr: 1/alpha1^2 + 1/alpha2^2 = 1/p");

    N3pBlocks b;
    b.p = p;
    b.alpha1 = alpha1;
    b.alpha2 = alpha2;
    b.f11 = f11;
    b.f22 = f22;
    b.g11 = g11;
    b.g22 = g22;
    b.f12 = f22 * (-w);
    b.f21 = f11 * std::conj(w);
    b.g12 = g11 * w;
    b.g21 = g22 * (-std::conj(w));
    b.zeta = cplx(1.0, 0.0);  // both sides vanish identically
    return b;
}

N3pBlocks n3p_genperm(const N3pGenPermParams& params, const Tolerance& tol) {
    const std::size_t p = params.sigma1.degree();
    require(params.sigma2.degree() == p, "sigma1, sigma2 must act on p symbols");
    require(params.d1.size() == p && params.d2.size() == p && params.d3.size() == p &&
                params.d4.size() == p,
            "D1..D4 must be p x p diagonal");
    require(params.z1.size() == p && params.z2.size() == p, "Z1, Z2 must be p x p diagonal");
    for (std::size_t k = 0; k < p; ++k) {
        require(std::abs(std::abs(params.z1[k]) - 1.0) <= tol.eps, "Z1 unitary diagonal");
        require(std::abs(std::abs(params.z2[k]) - 1.0) <= tol.eps, "Z2 unitary diagonal");
    }
    require(std::abs(std::abs(params.zeta) - 1.0) <= tol.eps, "ZZss: |zeta| = 1");
    require(params.alpha1 > 0.0 && params.alpha2 > 0.0, "alpha1, alpha2 > 0");
    require(std::abs(1.0 / (params.alpha1 * params.alpha1) + 1.0 / (params.alpha2 * params.alpha2) -
                     1.0 / static_cast<double>(p)) <= tol.eps,
            "betatr: 1/alpha1^2 + 1/alpha2^2 = 1/p");
    const double a1sq = params.alpha1 * params.alpha1;
    const double a2sq = params.alpha2 * params.alpha2;
    for (std::size_t k = 0; k < p; ++k) {
        require(std::abs(a1sq * (std::norm(params.d1[k]) + std::norm(params.d4[k])) - 1.0) <= tol.eps,
                "Daa: alpha1^2 (D1 conj(D1) + D4 conj(D4)) = I");
        require(std::abs(a2sq * (std::norm(params.d2[k]) + std::norm(params.d3[k])) - 1.0) <= tol.eps,
                "Daa: alpha2^2 (D2 conj(D2) + D3 conj(D3)) = I");
    }

    const Permutation s21 = compose(params.sigma2, params.sigma1);
    const DiagonalMatrix m =
        params.d3 * params.d1.conjugate().permuted(s21) - params.d2 * params.d4.conjugate().permuted(s21);
    const DiagonalMatrix lhs = m * params.z1.permuted(s21) * params.zeta;
    const DiagonalMatrix rhs = params.z2 * m.conjugate();
    require((lhs - rhs).max_norm() <= tol.eps, "ZZss: zeta M Z1^{sigma2 o sigma1} = Z2 conj(M)");

    const ComplexMatrix p1 = permutation_matrix(params.sigma1);
    const ComplexMatrix p2 = permutation_matrix(params.sigma2);
    N3pBlocks b;
    b.p = p;
    b.alpha1 = params.alpha1;
    b.alpha2 = params.alpha2;
    b.f11 = p1 * params.d1.to_matrix();
    b.f12 = p1 * params.d4.conjugate().to_matrix() * params.z1.to_matrix() * cplx(-1.0, 0.0);
    b.f21 = p1 * params.d4.to_matrix();
    b.f22 = p1 * params.d1.conjugate().to_matrix() * params.z1.to_matrix();
    b.g11 = params.d2.to_matrix() * p2;
    b.g12 = params.d3.to_matrix() * p2;
    b.g21 = params.z2.to_matrix() * params.d3.conjugate().to_matrix() * p2 * cplx(-1.0, 0.0);
    b.g22 = params.z2.to_matrix() * params.d2.conjugate().to_matrix() * p2;
    // The off-diagonal block combinations come out as +-(diagonal)*P, so the
    // phase that ties them together is the negative of the one in ZZss.
    b.zeta = -params.zeta;
    return b;
}

VerificationReport check_deq_system(const Rank2System& sys, double q, const Tolerance& tol) {
    const std::size_t n = sys.n();
    const Permutation s1inv = sys.sigma1.inverse();
    const Permutation s2inv = sys.sigma2.inverse();
    const Permutation sp = compose(sys.sigma1, compose(sys.sigma1, compose(s2inv, s1inv)));
    const Permutation spp = compose(sys.sigma2, compose(sys.sigma1, compose(s2inv, s2inv)));

    VerificationReport rep;
    rep.set("ssss_structural", sp == spp ? 0.0 : 1.0, 0.5);
    if (!(sp == spp)) rep.notes.push_back("derived permutations differ; no nonsingular solution exists");

    const DiagonalMatrix dd1 = sys.d1 * sys.d1.conjugate();
    const DiagonalMatrix dd2 = sys.d2 * sys.d2.conjugate();
    rep.set("trdd12a",
            std::max(std::abs(dd1.trace() - cplx(1.0, 0.0)), std::abs(dd2.trace() - cplx(1.0, 0.0))),
            tol.eps);

    // tr(D1 conj(D2) P_{sigma1} P_{sigma2}^t) sums over fixed points of
    // sigma1 o sigma2^-1.
    const Permutation tau = compose(sys.sigma1, s2inv);
    cplx tr12(0.0, 0.0);
    for (int k : tau.fixed_points()) tr12 += sys.d1[static_cast<std::size_t>(k - 1)] *
                                             std::conj(sys.d2[static_cast<std::size_t>(k - 1)]);
    rep.set("trdd12b", std::abs(tr12), tol.eps);

    const double qinv2 = 1.0 / (q * q);
    DiagonalMatrix deq1 = dd1 * dd1.permuted(sys.sigma1) + dd2 * dd1.permuted(sys.sigma2);
    DiagonalMatrix deq2 = dd1 * dd2.permuted(sys.sigma1) + dd2 * dd2.permuted(sys.sigma2);
    double r1 = 0.0, r2 = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        r1 = std::max(r1, std::abs(deq1[k] - cplx(qinv2, 0.0)));
        r2 = std::max(r2, std::abs(deq2[k] - cplx(qinv2, 0.0)));
    }
    rep.set("deq1", r1, tol.eps);
    rep.set("deq2", r2, tol.eps);

    const DiagonalMatrix left1 = sys.d1 * sys.d1.conjugate().permuted(sys.sigma1);
    const DiagonalMatrix right1 = sys.d2.permuted(sys.sigma1) * sys.d1.conjugate();
    const DiagonalMatrix left2 = sys.d2 * sys.d1.conjugate().permuted(sys.sigma2);
    const DiagonalMatrix right2 = sys.d2.permuted(sys.sigma2) * sys.d2.conjugate();
    const ComplexMatrix term1 = left1.to_matrix() * permutation_matrix(sp) * right1.to_matrix();
    const ComplexMatrix term2 = left2.to_matrix() * permutation_matrix(spp) * right2.to_matrix();
    rep.set("deq3", (term1 + term2).max_norm(), tol.eps);

    rep.finalize();
    return rep;
}

FixpCertificate lemma_fixp_certificate(const PermutationPair& p, std::size_t trials,
                                       std::uint64_t seed, const Tolerance& tol) {
    const AdmissibilityResult adm = is_admissible_pair(p);
    if (adm.admissible)
        throw std::invalid_argument("lemma_fixp_certificate: pair is admissible, nothing to certify");
    const std::size_t n = p.degree();
    const Permutation& s1 = p.first;
    const Permutation& s2 = p.second;
    const Permutation s1inv = s1.inverse();
    const Permutation s2inv = s2.inverse();
    const Permutation sp = compose(s1, compose(s1, compose(s2inv, s1inv)));
    const Permutation spp = compose(s2, compose(s1, compose(s2inv, s2inv)));

    FixpCertificate cert;
    cert.trials = trials;
    cert.clause = adm.reason;
    cert.min_entry = 1e300;
    cert.min_floor = 1e300;
    cert.min_deq3 = 1e300;

    // Witness entry (0-based row i, column j) per the violated clause.
    std::size_t wi = 0, wj = 0;
    enum class Kind { structural, common_fixed, quotient_fixed } kind{};
    if (adm.status == AdmissibilityStatus::fails_commutation) {
        kind = Kind::structural;
        bool found = false;
        for (std::size_t j = 0; j < n && !found; ++j)
            if (sp.apply0(static_cast<int>(j)) != spp.apply0(static_cast<int>(j))) {
                wi = static_cast<std::size_t>(sp.apply0(static_cast<int>(j)));
                wj = j;
                found = true;
            }
    } else if (adm.status == AdmissibilityStatus::fails_common_fixed_point) {
        kind = Kind::common_fixed;
        for (std::size_t k = 0; k < n; ++k)
            if (s1.apply0(static_cast<int>(k)) == static_cast<int>(k) &&
                s2.apply0(static_cast<int>(k)) == static_cast<int>(k)) {
                wi = wj = k;
                break;
            }
    } else {
        kind = Kind::quotient_fixed;
        for (std::size_t k = 0; k < n; ++k)
            if (s1.apply0(static_cast<int>(k)) == s2.apply0(static_cast<int>(k))) {
                wi = wj = k;  // sigma2^-1 sigma1 fixes k
                break;
            }
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> mag(0.1, 1.0);
    std::uniform_real_distribution<double> arg(0.0, 2.0 * std::numbers::pi);
    auto draw_diag = [&](std::size_t m) {
        DiagonalMatrix d(m);
        for (std::size_t k = 0; k < m; ++k) {
            const double r = mag(rng), t = arg(rng);
            d[k] = cplx(r * std::cos(t), r * std::sin(t));
        }
        return d;
    };

    cert.certified = true;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const DiagonalMatrix d1 = draw_diag(n), d2 = draw_diag(n);

        const DiagonalMatrix left1 = d1 * d1.conjugate().permuted(s1);
        const DiagonalMatrix right1 = d2.permuted(s1) * d1.conjugate();
        const DiagonalMatrix left2 = d2 * d1.conjugate().permuted(s2);
        const DiagonalMatrix right2 = d2.permuted(s2) * d2.conjugate();
        const ComplexMatrix lhs = left1.to_matrix() * permutation_matrix(sp) * right1.to_matrix() +
                                  left2.to_matrix() * permutation_matrix(spp) * right2.to_matrix();

        const double entry = std::abs(lhs(wi, wj));
        double floor = 0.0;
        if (kind == Kind::structural) {
            const auto i1 = static_cast<std::size_t>(s1inv.apply0(static_cast<int>(wi)));
            const auto j1 = static_cast<std::size_t>(s1inv.apply0(static_cast<int>(wj)));
            floor = std::abs(d1[wi]) * std::abs(d1[i1]) * std::abs(d2[j1]) * std::abs(d1[wj]);
        } else if (kind == Kind::common_fixed) {
            floor = (std::norm(d1[wi]) + std::norm(d2[wi])) * std::abs(d1[wi]) * std::abs(d2[wi]);
        } else {
            const auto m = static_cast<std::size_t>(s1inv.apply0(static_cast<int>(wi)));
            floor = (std::norm(d1[wi]) + std::norm(d2[wi])) * std::abs(d1[m]) * std::abs(d2[m]);
        }

        cert.min_entry = std::min(cert.min_entry, entry);
        cert.min_floor = std::min(cert.min_floor, floor);
        cert.min_deq3 = std::min(cert.min_deq3, lhs.max_norm());
        if (!(floor > 0.0) || entry < floor - 1e-12 || lhs.max_norm() <= tol.eps)
            cert.certified = false;
    }
    return cert;
}

void ddss_ab_matrices(const Permutation& sigma1, const Permutation& sigma2, RationalMatrix& a,
                      RationalMatrix& b) {
    const std::size_t n = sigma1.degree();
    if (sigma2.degree() != n) throw std::invalid_argument("ddss_ab_matrices: degree mismatch");
    auto pm = [&](const Permutation& s) {
        RationalMatrix m(n, RationalVector(n, Rational(0)));
        for (std::size_t j = 0; j < n; ++j) m[static_cast<std::size_t>(s.apply0(static_cast<int>(j)))][j] = Rational(1);
        return m;
    };
    auto add = [&](const RationalMatrix& x, const RationalMatrix& y, int sign) {
        RationalMatrix m(n, RationalVector(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m[i][j] = x[i][j] + (sign > 0 ? y[i][j] : -y[i][j]);
        return m;
    };
    auto mul = [&](const RationalMatrix& x, const RationalMatrix& y) {
        RationalMatrix m(n, RationalVector(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                if (x[i][k].is_zero()) continue;
                for (std::size_t j = 0; j < n; ++j) m[i][j] = m[i][j] + x[i][k] * y[k][j];
            }
        return m;
    };
    RationalMatrix id(n, RationalVector(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = Rational(1);
    const RationalMatrix p1 = pm(sigma1), p2 = pm(sigma2);
    a = mul(add(id, p2, +1), add(p2, p1, -1));
    b = mul(add(id, p1, +1), add(p1, p2, -1));
}

TLSolution build_ddss(const DdssData& d, const Tolerance& tol, const std::string& family) {
    const std::size_t n = d.sigma1.degree();
    require(n % 2 == 0, "n must be even");
    require(d.sigma2.degree() == n, "sigma degrees must agree");
    require(d.x.size() == n && d.u.size() == n && d.v.size() == n, "x, u, v must have length n");

    const Permutation sq1 = compose(d.sigma1, d.sigma1);
    const Permutation sq2 = compose(d.sigma2, d.sigma2);
    require(d.sigma1.commutes_with(sq2), "zzeq0: sigma1 must commute with sigma2^2");
    require(d.sigma2.commutes_with(sq1), "zzeq0: sigma2 must commute with sigma1^2");
    const Permutation quot = compose(d.sigma2.inverse(), d.sigma1);
    require(quot.fixed_points().empty(), "sigma2^-1 o sigma1 must have no fixed points");

    const Permutation i1 = d.sigma1.inverse(), i2 = d.sigma2.inverse();
    for (std::size_t k = 0; k < n; ++k) {
        const double p1x = d.x[static_cast<std::size_t>(i1.apply0(static_cast<int>(k)))];
        const double p2x = d.x[static_cast<std::size_t>(i2.apply0(static_cast<int>(k)))];
        require(std::abs(p1x + d.x[k]) <= 1e-12 && std::abs(p2x + d.x[k]) <= 1e-12,
                "ppx: P_sigma1 x = P_sigma2 x = -x");
    }

    RationalMatrix a, b;
    ddss_ab_matrices(d.sigma1, d.sigma2, a, b);
    const RationalVector au = matvec(a, d.u);
    const RationalVector bv = matvec(b, d.v);
    for (std::size_t k = 0; k < n; ++k)
        require((au[k] + bv[k]).is_odd_integer(),
                "ABsub: component " + std::to_string(k + 1) + " of A u + B v is " +
                    (au[k] + bv[k]).to_string() + ", not an odd integer");

    double mu2 = 0.0;
    for (double xk : d.x) mu2 += std::exp(2.0 * xk);
    const double mu = std::sqrt(mu2);

    DiagonalMatrix d1(n), d2(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double r = std::exp(d.x[k]) / mu;
        d1[k] = unit_phase_from_pi_multiple(d.u[k]) * r;
        d2[k] = unit_phase_from_pi_multiple(d.v[k]) * r;
    }

    TLSolution sol;
    sol.spanning = Rank2System(d.sigma1, d.sigma2, d1, d2).to_spanning();
    sol.Q = mu2 / std::sqrt(2.0);
    sol.family = family;
    (void)tol;
    return sol;
}

OddConditionSolution solve_odd_condition(const Permutation& sigma1, const Permutation& sigma2) {
    const std::size_t n = sigma1.degree();
    const Permutation sq1 = compose(sigma1, sigma1);
    const Permutation sq2 = compose(sigma2, sigma2);
    if (!sigma1.commutes_with(sq2) || !sigma2.commutes_with(sq1))
        throw std::invalid_argument("solve_odd_condition: pair does not satisfy zzeq0");

    RationalMatrix a, b;
    ddss_ab_matrices(sigma1, sigma2, a, b);
    RationalMatrix ab(n, RationalVector(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            ab[i][j] = a[i][j];
            ab[i][n + j] = b[i][j];
        }
    }

    OddConditionSolution out;
    auto accept = [&](const RationalVector& x) {
        RationalVector u(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n));
        RationalVector v(x.begin() + static_cast<std::ptrdiff_t>(n), x.end());
        const RationalVector w0 = matvec(a, u);
        const RationalVector w1 = matvec(b, v);
        for (std::size_t k = 0; k < n; ++k)
            if (!(w0[k] + w1[k]).is_odd_integer()) return false;
        out.solved = true;
        out.u = std::move(u);
        out.v = std::move(v);
        return true;
    };

    // Exact solves against every +-1 target (capped at 2^12 sign patterns).
    const std::size_t sign_bits = std::min<std::size_t>(n, 12);
    const std::size_t patterns = std::size_t{1} << sign_bits;
    for (std::size_t mask = 0; mask < patterns; ++mask) {
        RationalVector target(n, Rational(1));
        for (std::size_t k = 0; k < sign_bits; ++k)
            if (mask & (std::size_t{1} << k)) target[k] = Rational(-1);
        const RationalSolveResult sol = solve_rational(ab, target);
        if (sol.consistent && accept(sol.solution)) return out;
    }

    // Grid over eighth-integer coefficients of a pivot basis of the column
    // space; "all components odd integers" becomes "all sums 8 mod 16".
    const std::vector<std::size_t> pivots = pivot_columns(ab);
    const std::size_t k = pivots.size();
    if (k == 0 || k > 6) return out;
    std::vector<std::vector<int>> cols(k, std::vector<int>(n));
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t i = 0; i < n; ++i)
            cols[c][i] = static_cast<int>(ab[i][pivots[c]].num);  // integer entries by construction

    std::vector<int> coeff(k, 0), acc(n, 0);
    std::function<bool(std::size_t)> dfs = [&](std::size_t depth) -> bool {
        if (depth == k) {
            for (std::size_t i = 0; i < n; ++i)
                if (((acc[i] % 16) + 16) % 16 != 8) return false;
            RationalVector x(2 * n, Rational(0));
            for (std::size_t c = 0; c < k; ++c) x[pivots[c]] = Rational(coeff[c], 8);
            return accept(x);
        }
        for (int m = 0; m < 16; ++m) {
            coeff[depth] = m;
            if (dfs(depth + 1)) return true;
            for (std::size_t i = 0; i < n; ++i) acc[i] += cols[depth][i];
        }
        for (std::size_t i = 0; i < n; ++i) acc[i] -= 16 * cols[depth][i];
        return false;
    };
    dfs(0);
    return out;
}

Permutation full_cycle(std::size_t n) {
    std::vector<int> image(n);
    for (std::size_t k = 0; k < n; ++k) image[k] = static_cast<int>((k + 1) % n) + 1;
    return Permutation::from_image(image);
}

Permutation reversal_involution(std::size_t n) {
    std::vector<int> image(n);
    for (std::size_t k = 0; k < n; ++k) image[k] = static_cast<int>(n - k);
    return Permutation::from_image(image);
}

Permutation adjacent_involution(std::size_t n) {
    if (n % 2 != 0) throw std::invalid_argument("adjacent_involution: n must be even");
    std::vector<int> image(n);
    for (std::size_t k = 0; k < n; k += 2) {
        image[k] = static_cast<int>(k) + 2;
        image[k + 1] = static_cast<int>(k) + 1;
    }
    return Permutation::from_image(image);
}

namespace {

DiagonalMatrix period4(std::size_t n, cplx a, cplx b, cplx c, cplx d) {
    DiagonalMatrix out(n);
    const cplx vals[4] = {a, b, c, d};
    for (std::size_t k = 0; k < n; ++k) out[k] = vals[k % 4];
    return out;
}

}  // namespace

TLSolution build_vvn4k(std::size_t n, N4kFamily which, cplx z1, cplx z2, cplx zeta,
                       const Tolerance& tol) {
    require(n >= 4 && n % 4 == 0, "n must be a positive multiple of 4");
    require(std::abs(std::abs(zeta) - 1.0) <= tol.eps, "zzet1: |zeta| = 1");
    require(std::abs(z1) > 0.0 && std::abs(z2) > 0.0, "zzet1: z1 z2 != 0");
    require(std::abs(std::norm(z1) + std::norm(z2) - 2.0 / static_cast<double>(n)) <= tol.eps,
            "zzet1: |z1|^2 + |z2|^2 = 2/n");

    const Permutation s1 = (which == N4kFamily::s1) ? full_cycle(n) : reversal_involution(n);
    const Permutation s2 = (which == N4kFamily::s1) ? full_cycle(n).inverse() : adjacent_involution(n);
    const DiagonalMatrix d1 = period4(n, z1, z2, z1, z2);
    const DiagonalMatrix d2 = period4(n, z1, -zeta * z2, z1, zeta * z2);

    TLSolution sol;
    sol.spanning = Rank2System(s1, s2, d1, d2).to_spanning();
    sol.Q = 1.0 / (std::sqrt(2.0) * std::abs(z1) * std::abs(z2));
    sol.family = (which == N4kFamily::s1) ? "vvn4k-s1" : "vvn4k-s2";
    sol.params["z1"] = z1;
    sol.params["z2"] = z2;
    sol.params["zeta"] = zeta;
    return sol;
}

TLSolution build_vvn4(std::size_t n, cplx z1, cplx z2, cplx z3, cplx zeta, const Tolerance& tol) {
    require(n >= 4 && n % 4 == 0, "n must be a positive multiple of 4");
    require(std::abs(std::abs(zeta) - 1.0) <= tol.eps, "zzet2: |zeta| = 1");
    require(std::abs(z1) > 0.0, "zzet2: z1 != 0");
    require(std::abs(z2) + std::abs(z3) > 0.0, "zzet2: |z2| + |z3| != 0");
    require(std::abs(2.0 * std::norm(z1) + std::norm(z2) + std::norm(z3) -
                     4.0 / static_cast<double>(n)) <= tol.eps,
            "zzet2: 2|z1|^2 + |z2|^2 + |z3|^2 = 4/n");

    const Permutation s1 = full_cycle(n);
    const Permutation s2 = adjacent_involution(n);
    const DiagonalMatrix d1 = period4(n, z1, z2, z1, z3);
    const DiagonalMatrix d2 = period4(n, z1, -zeta * std::conj(z3), z1, zeta * std::conj(z2));

    TLSolution sol;
    sol.spanning = Rank2System(s1, s2, d1, d2).to_spanning();
    sol.Q = 1.0 / (std::abs(z1) * std::sqrt(std::norm(z2) + std::norm(z3)));
    sol.family = "vvn4";
    sol.params["z1"] = z1;
    sol.params["z2"] = z2;
    sol.params["z3"] = z3;
    sol.params["zeta"] = zeta;
    return sol;
}

std::vector<S4CatalogEntry> s4_catalog(const Tolerance& tol) {
    struct Row {
        char label;
        const char* s1;
        const char* s2;
        std::array<Rational, 4> u;
        std::array<Rational, 4> v;
    };
    const Rational q4(1, 4), q2(1, 2);
    const std::vector<Row> rows = {
        {'a', "id", "(1,2)(3,4)", {0, 0, 0, 0}, {q4, -q4, q4, -q4}},
        {'b', "id", "(1,2,3,4)", {0, 0, 0, 0}, {q4, -q4, q4, -q4}},
        {'c', "(2,3)", "(1,4)", {0, q4, -q4, 0}, {q4, 0, 0, -q4}},
        {'d', "(2,3)", "(1,3,4,2)", {0, 0, 0, 0}, {q2, 0, 0, q2}},
        {'e', "(2,3)", "(1,2)(3,4)", {0, 0, 0, 0}, {q2, 0, 0, q2}},
        {'f', "(2,3,4)", "(3,2,1)", {0, 0, 0, 0}, {1, 1, 0, 0}},
        {'g', "(1,2,3,4)", "(1,3)(2,4)", {0, 0, 0, 0}, {1, 1, 0, 0}},
        {'h', "(1,2,3,4)", "(1,2)(3,4)", {0, 0, 0, 0}, {1, 1, 0, 0}},
        {'i', "(1,2,3,4)", "(4,3,2,1)", {0, 0, 0, 0}, {1, 0, 0, 0}},
        {'j', "(1,2)(3,4)", "(1,4)(2,3)", {0, 0, 0, 0}, {1, 0, 0, 0}},
    };

    std::vector<S4CatalogEntry> catalog;
    for (const Row& row : rows) {
        S4CatalogEntry e;
        e.label = row.label;
        e.pair = PermutationPair(Permutation::parse(4, row.s1), Permutation::parse(4, row.s2));
        e.u.assign(row.u.begin(), row.u.end());
        e.v.assign(row.v.begin(), row.v.end());
        e.Q = 2.0 * std::sqrt(2.0);
        e.path = (row.label == 'f' || row.label == 'h') ? "inspection" : "ddss";

        if (e.path == "ddss") {
            DdssData d;
            d.sigma1 = e.pair.first;
            d.sigma2 = e.pair.second;
            d.x.assign(4, 0.0);
            d.u = e.u;
            d.v = e.v;
            e.solution = build_ddss(d, tol, "s4-catalog");
        } else {
            // Direct construction; the system is then verified by inspection
            // of the diagonal equations rather than through the odd-vector
            // machinery (whose hypotheses these two pairs do not meet).
            DiagonalMatrix d1(4), d2(4);
            for (std::size_t k = 0; k < 4; ++k) {
                d1[k] = unit_phase_from_pi_multiple(e.u[k]) * 0.5;
                d2[k] = unit_phase_from_pi_multiple(e.v[k]) * 0.5;
            }
            const Rank2System sys(e.pair.first, e.pair.second, d1, d2);
            VerificationReport deq = check_deq_system(sys, e.Q, tol);
            if (!deq.passed)
                throw std::runtime_error(std::string("s4_catalog: inspection path failed for case ") +
                                         row.label + "\n" + deq.to_string());
            TLSolution sol;
            sol.spanning = sys.to_spanning();
            sol.Q = e.Q;
            sol.family = "s4-catalog";
            e.solution = sol;
        }
        e.solution.params["case"] = cplx(static_cast<double>(row.label - 'a'), 0.0);
        catalog.push_back(std::move(e));
    }
    return catalog;
}

TLSolution build_complementary(const Permutation& sigma1, const Permutation& sigma2,
                               const Tolerance& tol) {
    const std::size_t n = sigma1.degree();
    require(n % 2 == 0, "n must be even");
    require(sigma2.degree() == n, "sigma degrees must agree");
    for (const auto& cyc : sigma1.cycles())
        require(cyc.size() % 2 == 0, "sigma1 must consist of fixed points and even cycles");
    for (const auto& cyc : sigma2.cycles())
        require(cyc.size() % 2 == 0, "sigma2 must consist of fixed points and even cycles");
    for (std::size_t k = 1; k <= n; ++k) {
        const bool f1 = sigma1(static_cast<int>(k)) == static_cast<int>(k);
        const bool f2 = sigma2(static_cast<int>(k)) == static_cast<int>(k);
        require(f1 != f2, "fixed-point sets must be complementary (symbol " + std::to_string(k) + ")");
    }

    // Alternating +-1 around each nontrivial cycle; zero on fixed points.
    auto kernel_vector = [&](const Permutation& s) {
        RationalVector y(n, Rational(0));
        for (const auto& cyc : s.cycles()) {
            int sign = 1;
            for (int sym : cyc) {
                y[static_cast<std::size_t>(sym - 1)] = Rational(sign);
                sign = -sign;
            }
        }
        return y;
    };
    const RationalVector y1 = kernel_vector(sigma1);
    const RationalVector y2 = kernel_vector(sigma2);

    DdssData d;
    d.sigma1 = sigma1;
    d.sigma2 = sigma2;
    d.x.assign(n, 0.0);
    d.u.resize(n);
    d.v.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        d.u[k] = y1[k] * Rational(1, 4);
        d.v[k] = y2[k] * Rational(1, 4);
    }
    return build_ddss(d, tol, "complementary");
}

ZparSolution build_zpar(std::size_t n, N4kFamily which, cplx q, cplx xi1, cplx xi2, cplx zeta) {
    require(n >= 4 && n % 4 == 0, "n must be a positive multiple of 4");
    require(std::abs(q) > 0.0, "q must be nonzero");
    require(std::abs(xi1) > 0.0 && std::abs(xi2) > 0.0 && std::abs(zeta) > 0.0,
            "phases must be nonzero");
    const cplx q2p1 = q * q + cplx(1.0, 0.0);
    require(std::abs(q2p1) > 1e-12, "q^2 + 1 must not vanish");

    const cplx root = std::sqrt(q2p1);
    const double s = std::sqrt(2.0 / static_cast<double>(n));
    const cplx z1 = s * q * xi1 / root;
    const cplx z2 = s * xi2 / root;
    // Formal conjugation: invert the unit-modulus parameters, continue q.
    const cplx z1c = s * q / (xi1 * root);
    const cplx z2c = s / (xi2 * root);
    const cplx zetac = cplx(1.0, 0.0) / zeta;

    const Permutation s1 = (which == N4kFamily::s1) ? full_cycle(n) : reversal_involution(n);
    const Permutation s2 = (which == N4kFamily::s1) ? full_cycle(n).inverse() : adjacent_involution(n);

    ZparSolution out;
    out.n = n;
    out.q = q;
    out.Q = cplx(static_cast<double>(n) * std::sqrt(2.0) / 4.0, 0.0) * (q + cplx(1.0, 0.0) / q);
    out.v1 = generalized_permutation_matrix(period4(n, z1, z2, z1, z2), s1);
    out.v2 = generalized_permutation_matrix(period4(n, z1, -zeta * z2, z1, zeta * z2), s2);
    out.u1 = generalized_permutation_matrix(period4(n, z1c, z2c, z1c, z2c), s1);
    out.u2 = generalized_permutation_matrix(period4(n, z1c, -zetac * z2c, z1c, zetac * z2c), s2);

    // Projector formula with the formal conjugate in place of conj(V).
    ComplexMatrix p(n * n, n * n);
    const ComplexMatrix* vs[2] = {&out.v1, &out.v2};
    const ComplexMatrix* us[2] = {&out.u1, &out.u2};
    for (int m = 0; m < 2; ++m)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const cplx vab = (*vs[m])(a, b);
                if (vab == cplx(0.0, 0.0)) continue;
                for (std::size_t c = 0; c < n; ++c)
                    for (std::size_t e = 0; e < n; ++e)
                        p(a * n + b, c * n + e) += vab * (*us[m])(c, e);
            }
    out.generator = p * out.Q;
    return out;
}

}  // namespace tlforge
