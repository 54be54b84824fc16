// Command-line front end: enumerate admissible permutation pairs, build any
// of the solution families, verify a solution file against the defining
// relations, print the n = 4 catalog, and sample Q ranges to CSV.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage/IO error,
// 3 parameter constraint violation.

#include "CLI11.hpp"

#include "tlforge/permutation.hpp"
#include "tlforge/random.hpp"
#include "tlforge/rank1.hpp"
#include "tlforge/rank2.hpp"
#include "tlforge/solution_io.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace tlforge;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitConstraint = 3;

cplx parse_complex(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty complex literal");
    if (s.back() != 'i' && s.back() != 'I') {
        std::size_t pos = 0;
        const double re = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("bad complex literal: " + text);
        return cplx(re, 0.0);
    }
    s.pop_back();  // trailing i
    // split at the last +/- that is not an exponent sign and not leading
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) {
        // purely imaginary: "i", "-i", "2.5i"
        if (s.empty() || s == "+") return cplx(0.0, 1.0);
        if (s == "-") return cplx(0.0, -1.0);
        std::size_t pos = 0;
        const double im = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("bad complex literal: " + text);
        return cplx(0.0, im);
    }
    const std::string re_part = s.substr(0, split);
    std::string im_part = s.substr(split);
    if (im_part == "+") im_part = "1";
    if (im_part == "-") im_part = "-1";
    std::size_t pos = 0;
    const double re = std::stod(re_part, &pos);
    if (pos != re_part.size()) throw std::invalid_argument("bad complex literal: " + text);
    const double im = std::stod(im_part, &pos);
    if (pos != im_part.size()) throw std::invalid_argument("bad complex literal: " + text);
    return cplx(re, im);
}

double default_tolerance() {
    if (const char* env = std::getenv("TLFORGE_TOL")) {
        try {
            const double v = std::stod(env);
            if (v > 0) return v;
        } catch (...) {
        }
        std::cerr << "warning: ignoring invalid TLFORGE_TOL\n";
    }
    return 1e-10;
}

struct BuildOptions {
    std::string family;
    std::string output;
    bool force = false;
    std::uint64_t seed = 0;
    std::size_t n = 0, p = 0;
    std::string sigma, sigma1, sigma2;
    std::vector<std::string> z;  // rank-1 scale-free parameters
    int sign = 1;
    std::string z1, z2, z3, zeta = "1";
    std::string w = "0";
    double alpha1 = 0.0, alpha2 = 0.0;
    std::vector<double> x;
    std::string q;  // deformation parameter (possibly complex) for vvn4k
    std::string xi1 = "1", xi2 = "1";
    std::string catalog_case;
};

// Split 1/p = 1/a1^2 + 1/a2^2, honoring whichever scales were given.
void resolve_alphas(std::size_t p, double& a1, double& a2) {
    const double target = 1.0 / static_cast<double>(p);
    if (a1 > 0.0 && a2 > 0.0) return;
    if (a1 > 0.0) {
        const double rest = target - 1.0 / (a1 * a1);
        if (rest <= 0.0)
            throw constraint_error("constraint violated: betatr needs alpha1 > sqrt(p)");
        a2 = std::sqrt(1.0 / rest);
        return;
    }
    a1 = a2 = std::sqrt(2.0 * static_cast<double>(p));
}

TLSolution build_family(const BuildOptions& opt, const Tolerance& tol, std::string& extra_note) {
    Rng rng(opt.seed);
    if (opt.family == "rank1-normal") {
        if (opt.n == 0) throw std::invalid_argument("rank1-normal needs --n");
        const Permutation sigma =
            opt.sigma.empty() ? reversal_involution(opt.n) : Permutation::parse(opt.n, opt.sigma);
        std::vector<cplx> u;
        for (const auto& text : opt.z) u.push_back(parse_complex(text));
        if (u.empty()) u.assign(opt.n / 2, cplx(1.0, 0.0));
        return build_rank1_from_u(opt.n, sigma, u, opt.sign);
    }
    if (opt.family == "n3p-unitary") {
        if (opt.p == 0) throw std::invalid_argument("n3p-unitary needs --p");
        double a1 = opt.alpha1, a2 = opt.alpha2;
        resolve_alphas(opt.p, a1, a2);
        const ComplexMatrix u = random_unitary(2 * opt.p, rng);
        return build_n3p(n3p_from_unitary(u, a1, a2, tol), tol, "n3p-unitary");
    }
    if (opt.family == "n3p-w") {
        if (opt.p == 0) throw std::invalid_argument("n3p-w needs --p");
        double a1 = opt.alpha1, a2 = opt.alpha2;
        resolve_alphas(opt.p, a1, a2);
        const cplx w = parse_complex(opt.w);
        const double b1 = a1 * std::sqrt(1.0 + std::norm(w));
        const double b2 = a2 * std::sqrt(1.0 + std::norm(w));
        const N3pBlocks blocks = n3p_w_ansatz(
            random_unitary(opt.p, rng) * cplx(1.0 / b1, 0.0),
            random_unitary(opt.p, rng) * cplx(1.0 / b1, 0.0),
            random_unitary(opt.p, rng) * cplx(1.0 / b2, 0.0),
            random_unitary(opt.p, rng) * cplx(1.0 / b2, 0.0), w, a1, a2, tol);
        return build_n3p(blocks, tol, "n3p-w");
    }
    if (opt.family == "n3p-genperm") {
        if (opt.p == 0) throw std::invalid_argument("n3p-genperm needs --p");
        N3pGenPermParams gp;
        gp.sigma1 = opt.sigma1.empty() ? Permutation(opt.p) : Permutation::parse(opt.p, opt.sigma1);
        gp.sigma2 = opt.sigma2.empty() ? Permutation(opt.p) : Permutation::parse(opt.p, opt.sigma2);
        gp.alpha1 = opt.alpha1;
        gp.alpha2 = opt.alpha2;
        resolve_alphas(opt.p, gp.alpha1, gp.alpha2);
        gp.d1 = DiagonalMatrix(opt.p);
        gp.d2 = DiagonalMatrix(opt.p);
        gp.d3 = DiagonalMatrix(opt.p);
        gp.d4 = DiagonalMatrix(opt.p);
        gp.z1 = DiagonalMatrix(opt.p);
        gp.z2 = DiagonalMatrix(opt.p);
        for (std::size_t k = 0; k < opt.p; ++k) {
            const double t1 = rng.uniform(0.3, 1.2), t2 = rng.uniform(0.3, 1.2);
            gp.d1[k] = std::polar(std::cos(t1) / gp.alpha1, rng.uniform(0.0, 6.28));
            gp.d4[k] = std::polar(std::sin(t1) / gp.alpha1, rng.uniform(0.0, 6.28));
            gp.d2[k] = std::polar(std::cos(t2) / gp.alpha2, rng.uniform(0.0, 6.28));
            gp.d3[k] = std::polar(std::sin(t2) / gp.alpha2, rng.uniform(0.0, 6.28));
            gp.z1[k] = rng.phase();
        }
        gp.zeta = parse_complex(opt.zeta);
        const Permutation s21 = compose(gp.sigma2, gp.sigma1);
        const DiagonalMatrix m =
            gp.d3 * gp.d1.conjugate().permuted(s21) - gp.d2 * gp.d4.conjugate().permuted(s21);
        const DiagonalMatrix z1p = gp.z1.permuted(s21);
        for (std::size_t k = 0; k < opt.p; ++k)
            gp.z2[k] =
                std::abs(m[k]) > 1e-12 ? gp.zeta * m[k] * z1p[k] / std::conj(m[k]) : cplx(1.0, 0.0);
        return build_n3p(n3p_genperm(gp, tol), tol, "n3p-genperm");
    }
    if (opt.family == "ddss") {
        if (opt.n == 0) throw std::invalid_argument("ddss needs --n");
        DdssData d;
        // Default pair: the cycle and its inverse carry varying-Q solutions
        // when 4 | n; otherwise fall back to a complementary-type pair
        // (which forces x = 0, i.e. Q = n/sqrt(2)).
        const bool quads = opt.n % 4 == 0;
        d.sigma1 = opt.sigma1.empty() ? (quads ? full_cycle(opt.n) : Permutation(opt.n))
                                      : Permutation::parse(opt.n, opt.sigma1);
        d.sigma2 = opt.sigma2.empty()
                       ? (quads ? full_cycle(opt.n).inverse() : full_cycle(opt.n))
                       : Permutation::parse(opt.n, opt.sigma2);
        d.x = opt.x;
        if (d.x.empty()) d.x.assign(opt.n, 0.0);
        if (d.x.size() != opt.n)
            throw constraint_error("constraint violated: x must have n components");
        const OddConditionSolution odd = solve_odd_condition(d.sigma1, d.sigma2);
        if (!odd.solved)
            throw constraint_error(
                "constraint violated: ABsub has no solution within the search budget for this pair");
        d.u = odd.u;
        d.v = odd.v;
        return build_ddss(d, tol);
    }
    if (opt.family == "vvn4k-s1" || opt.family == "vvn4k-s2" || opt.family == "vvn4") {
        if (opt.n == 0) throw std::invalid_argument(opt.family + " needs --n");
        const cplx zeta = parse_complex(opt.zeta);
        const N4kFamily which = (opt.family == "vvn4k-s2") ? N4kFamily::s2 : N4kFamily::s1;
        if (!opt.q.empty() && opt.family != "vvn4") {
            // deformation parametrization (possibly analytically continued)
            const cplx q = parse_complex(opt.q);
            const cplx xi1 = parse_complex(opt.xi1), xi2 = parse_complex(opt.xi2);
            const ZparSolution zp = build_zpar(opt.n, which, q, xi1, xi2, zeta);
            TLSolution sol;
            sol.spanning = SpanningSet(opt.n, {zp.v1, zp.v2});
            sol.Q = std::abs(zp.Q);
            sol.family = opt.family;
            sol.params["q"] = q;
            sol.params["xi1"] = xi1;
            sol.params["xi2"] = xi2;
            sol.params["zeta"] = zeta;
            sol.params["Qc"] = zp.Q;
            if (std::abs(q.imag()) > 1e-14)
                extra_note = "non-Hermitian deformation; verify with --non-hermitian";
            return sol;
        }
        if (opt.z1.empty() || opt.z2.empty())
            throw std::invalid_argument(opt.family + " needs --z1 and --z2 (or --q)");
        const cplx z1 = parse_complex(opt.z1), z2 = parse_complex(opt.z2);
        if (opt.family == "vvn4") {
            if (opt.z3.empty()) throw std::invalid_argument("vvn4 needs --z3");
            return build_vvn4(opt.n, z1, z2, parse_complex(opt.z3), zeta, tol);
        }
        return build_vvn4k(opt.n, which, z1, z2, zeta, tol);
    }
    if (opt.family == "s4-catalog") {
        if (opt.catalog_case.size() != 1 || opt.catalog_case[0] < 'a' || opt.catalog_case[0] > 'j')
            throw std::invalid_argument("s4-catalog needs --case a..j");
        const auto catalog = s4_catalog(tol);
        return catalog[static_cast<std::size_t>(opt.catalog_case[0] - 'a')].solution;
    }
    if (opt.family == "complementary") {
        if (opt.n == 0 || opt.sigma1.empty() || opt.sigma2.empty())
            throw std::invalid_argument("complementary needs --n, --sigma1, --sigma2");
        return build_complementary(Permutation::parse(opt.n, opt.sigma1),
                                   Permutation::parse(opt.n, opt.sigma2), tol);
    }
    throw std::invalid_argument("unknown family: " + opt.family);
}

int cmd_enumerate(std::size_t n, std::size_t cap, bool as_json) {
    if (n % 2 != 0) {
        std::cerr << "error: n must be even\n";
        return kExitUsage;
    }
    if (n > cap) {
        std::cerr << "error: n exceeds the cap (" << cap << "); raise it with --cap\n";
        return kExitUsage;
    }
    const auto classes = enumerate_admissible_classes(n, cap);
    if (as_json) {
        std::ostringstream os;
        os << "{\"n\":" << n << ",\"classes\":[";
        for (std::size_t k = 0; k < classes.size(); ++k) {
            os << (k ? "," : "") << "{\"sigma1\":\"" << classes[k].canonical.first.to_cycle_string()
               << "\",\"sigma2\":\"" << classes[k].canonical.second.to_cycle_string()
               << "\",\"members\":" << classes[k].members_count << "}";
        }
        os << "]}";
        std::cout << os.str() << "\n";
    } else {
        std::cout << "admissible pair classes for n = " << n << ": " << classes.size()
                  << " classes\n";
        for (std::size_t k = 0; k < classes.size(); ++k)
            std::cout << "  " << (k + 1)
                      << ". sigma1 = " << classes[k].canonical.first.to_cycle_string()
                      << ", sigma2 = " << classes[k].canonical.second.to_cycle_string() << "  ["
                      << classes[k].members_count << " ordered pairs]\n";
    }
    return kExitPass;
}

int cmd_build(const BuildOptions& opt, double tol_eps) {
    const Tolerance tol(tol_eps);
    std::string note;
    const TLSolution sol = build_family(opt, tol, note);

    VerificationReport rep;
    const bool deformed_complex =
        sol.params.count("q") != 0 && std::abs(sol.params.at("q").imag()) > 1e-14;
    if (deformed_complex) {
        const ZparSolution zp =
            build_zpar(sol.n(), sol.family == "vvn4k-s2" ? N4kFamily::s2 : N4kFamily::s1,
                       sol.params.at("q"), sol.params.at("xi1"), sol.params.at("xi2"),
                       sol.params.at("zeta"));
        rep = verify_tl_axioms(zp.generator, zp.Q, sol.n(), Tolerance(std::max(tol_eps, 1e-8)),
                               false);
    } else {
        rep = verify_by_criterion(sol, tol);
    }
    if (!rep.passed && !opt.force) {
        std::cerr << "error: verification failed; refusing to write (use --force to override)\n"
                  << rep.to_string() << "\n";
        return kExitVerifyFail;
    }

    std::ostringstream prov;
    prov << "tlforge build --family " << opt.family << " --seed " << opt.seed;
    SolutionDocument doc = SolutionDocument::from_solution(sol, prov.str());
    if (!opt.output.empty())
        save_solution(doc, opt.output);
    else
        std::cout << to_json(doc) << "\n";

    std::printf("family %s: n = %zu, rank = %zu, Q = %.17g  [%s]\n", sol.family.c_str(), sol.n(),
                sol.rank(), sol.Q, rep.passed ? "verified" : "UNVERIFIED, forced");
    if (!note.empty()) std::printf("note: %s\n", note.c_str());
    if (!opt.output.empty()) std::printf("wrote %s\n", opt.output.c_str());
    return kExitPass;
}

int cmd_verify(const std::string& input, double tol_eps, bool non_hermitian,
               const std::string& report_path) {
    const auto t0 = std::chrono::steady_clock::now();
    std::ifstream in(input);
    if (!in) {
        std::cerr << "error: cannot open " << input << "\n";
        return kExitUsage;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    SolutionDocument doc;
    try {
        doc = solution_from_json(buf.str());
    } catch (const std::exception& e) {
        std::cerr << "error: malformed solution document: " << e.what() << "\n";
        return kExitUsage;
    }

    const Tolerance tol(tol_eps);
    ReportDocument rep;
    rep.input_digest = fnv1a_hex(buf.str());
    rep.tolerance = tol_eps;

    auto merge = [&rep](const VerificationReport& vr) {
        for (const auto& [key, value] : vr.residuals) {
            rep.residuals[key] = value;
            rep.limits[key] = vr.limits.at(key);
        }
        for (const auto& note : vr.notes) rep.notes.push_back(note);
    };

    bool passed = true;
    try {
        if (non_hermitian && doc.params.count("q")) {
            // rebuild the analytic continuation from its parameters
            const N4kFamily which = doc.family == "vvn4k-s2" ? N4kFamily::s2 : N4kFamily::s1;
            const ZparSolution zp =
                build_zpar(doc.n, which, doc.params.at("q"), doc.params.at("xi1"),
                           doc.params.at("xi2"), doc.params.at("zeta"));
            const double mdiff = std::max((zp.v1 - doc.matrices.at(0)).max_norm(),
                                          (zp.v2 - doc.matrices.at(1)).max_norm());
            rep.residuals["matrices_match_params"] = mdiff;
            rep.limits["matrices_match_params"] = 1e-12;
            const VerificationReport ax = verify_tl_axioms(zp.generator, zp.Q, doc.n, tol, false);
            merge(ax);
            passed = ax.passed && mdiff <= 1e-12;
        } else {
            const TLSolution sol = doc.to_solution();
            const VerificationReport crit = verify_by_criterion(sol, tol);
            merge(crit);
            passed = crit.passed;
            if (doc.n <= kAxiomsMaxN) {
                try {
                    const ComplexMatrix t =
                        build_projector(sol.spanning, Tolerance(1e-6)) * cplx(sol.Q, 0.0);
                    const VerificationReport ax =
                        verify_tl_axioms(t, cplx(sol.Q, 0.0), doc.n, tol, !non_hermitian);
                    merge(ax);
                    passed = passed && ax.passed;
                } catch (const std::exception& e) {
                    rep.notes.push_back(std::string("direct-relation check unavailable: ") +
                                        e.what());
                    passed = false;
                }
            } else {
                rep.notes.push_back("axioms skipped: n exceeds the dense triple-product cap");
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: verification aborted: " << e.what() << "\n";
        return kExitUsage;
    }
    rep.passed = passed;
    rep.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    const std::string text = to_json(rep);
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        out << text << "\n";
    }
    std::cout << text << "\n";
    if (!passed) {
        std::cerr << "verification FAILED\n";
        return kExitVerifyFail;
    }
    return kExitPass;
}

int cmd_catalog() {
    const auto catalog = s4_catalog();
    std::cout << "admissible pairs for n = 4 with Q = 2*sqrt(2) solutions\n";
    for (const auto& e : catalog) {
        std::cout << e.label << ") sigma1 = " << e.pair.first.to_cycle_string()
                  << ", sigma2 = " << e.pair.second.to_cycle_string() << "\n     u = (";
        for (std::size_t k = 0; k < e.u.size(); ++k)
            std::cout << e.u[k].to_string() << (k + 1 < e.u.size() ? "," : "");
        std::cout << "), v = (";
        for (std::size_t k = 0; k < e.v.size(); ++k)
            std::cout << e.v[k].to_string() << (k + 1 < e.v.size() ? "," : "");
        std::cout << "), Q = " << e.Q << "  [" << e.path << "]\n";
    }
    return kExitPass;
}

int cmd_sweep(const std::string& family, std::size_t n, std::size_t samples, std::uint64_t seed,
              double tol_eps) {
    const Tolerance tol(tol_eps);
    Rng rng(seed);
    std::cout << "family,n,param,Q,residual\n";
    auto emit = [&](double param, const TLSolution& sol) {
        const VerificationReport rep = verify_by_criterion(sol, tol);
        std::printf("%s,%zu,%.17g,%.17g,%.3e\n", family.c_str(), sol.n(), param, sol.Q,
                    rep.max_residual());
    };
    const double lo = 0.02, hi = 0.98;
    for (std::size_t s = 0; s < samples; ++s) {
        const double t = lo + (hi - lo) * static_cast<double>(s) /
                                  static_cast<double>(std::max<std::size_t>(1, samples - 1));
        if (family == "rank1-normal") {
            if (n < 2) throw std::invalid_argument("sweep needs --n >= 2");
            // one unbalanced parameter drives Q over [n, infinity)
            std::vector<cplx> u(n / 2, cplx(1.0, 0.0));
            u[0] = cplx(std::sqrt(t / (1.0 - t)), 0.0);
            emit(t, build_rank1_from_u(n, reversal_involution(n), u));
        } else if (family == "n3p-unitary" || family == "n3p-w" || family == "n3p-genperm") {
            const std::size_t p = std::max<std::size_t>(1, n / 3);
            const double a1 = std::sqrt(static_cast<double>(p) / t);
            const double a2 = std::sqrt(static_cast<double>(p) / (1.0 - t));
            emit(t, build_n3p(n3p_from_unitary(random_unitary(2 * p, rng), a1, a2, tol), tol,
                              family));
        } else if (family == "vvn4k-s1" || family == "vvn4k-s2") {
            const double m1 = 2.0 * t / static_cast<double>(n);
            const double m2 = 2.0 / static_cast<double>(n) - m1;
            emit(t, build_vvn4k(n, family == "vvn4k-s1" ? N4kFamily::s1 : N4kFamily::s2,
                                std::polar(std::sqrt(m1), 0.3), std::polar(std::sqrt(m2), 1.1),
                                rng.phase(), tol));
        } else if (family == "vvn4") {
            const double a = 2.0 * t / static_cast<double>(n);  // |z1|^2
            const double rest = 4.0 / static_cast<double>(n) - 2.0 * a;
            emit(t, build_vvn4(n, std::polar(std::sqrt(a), 0.2),
                               std::polar(std::sqrt(0.5 * rest), 0.9),
                               std::polar(std::sqrt(0.5 * rest), 2.2), rng.phase(), tol));
        } else if (family == "ddss") {
            DdssData d;
            if (n % 4 == 0) {
                d.sigma1 = full_cycle(n);
                d.sigma2 = full_cycle(n).inverse();
            } else {
                d.sigma1 = Permutation(n);  // x is forced to zero here
                d.sigma2 = full_cycle(n);
            }
            const double x = (n % 4 == 0) ? 2.0 * (t - 0.5) : 0.0;
            d.x.resize(n);
            for (std::size_t k = 0; k < n; ++k) d.x[k] = (k % 2 == 0) ? x : -x;
            const OddConditionSolution odd = solve_odd_condition(d.sigma1, d.sigma2);
            if (!odd.solved) throw std::runtime_error("odd-vector condition unsolvable");
            d.u = odd.u;
            d.v = odd.v;
            emit(x, build_ddss(d, tol));
            if (n % 4 != 0) break;  // single point: Q is pinned at n/sqrt(2)
        } else if (family == "complementary") {
            emit(0.0, build_complementary(Permutation(n), full_cycle(n), tol));
            break;  // no free parameter
        } else if (family == "s4-catalog") {
            for (const auto& e : s4_catalog(tol))
                emit(static_cast<double>(e.label - 'a'), e.solution);
            break;
        } else {
            throw std::invalid_argument("unknown family: " + family);
        }
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tensor-space representation toolkit: build, verify, and classify "
                 "projector solutions of the defining relations"};
    app.require_subcommand(1);

    auto* enumerate =
        app.add_subcommand("enumerate", "enumerate admissible permutation pair classes");
    std::size_t en_n = 4, en_cap = 6;
    bool en_json = false;
    enumerate->add_option("--n", en_n, "degree (even)")->required();
    enumerate->add_option("--cap", en_cap, "largest allowed n (scan cost grows as (n!)^2)");
    enumerate->add_flag("--json", en_json, "machine-readable output");

    auto* build = app.add_subcommand("build", "construct a solution family and write it as JSON");
    BuildOptions bo;
    build->add_option("--family", bo.family, "family tag")->required();
    build->add_option("--output,-o", bo.output, "output file (stdout if omitted)");
    build->add_flag("--force", bo.force, "write even if verification fails");
    build->add_option("--seed", bo.seed, "random seed for randomized factories");
    build->add_option("--n", bo.n, "matrix size n");
    build->add_option("--p", bo.p, "block size p (n = 3p families)");
    build->add_option("--sigma", bo.sigma, "involution in cycle notation (rank1-normal)");
    build->add_option("--sigma1", bo.sigma1, "first permutation in cycle notation");
    build->add_option("--sigma2", bo.sigma2, "second permutation in cycle notation");
    build->add_option("--z", bo.z, "scale-free rank-1 parameters, e.g. 2+0i (repeatable)");
    build->add_option("--sign", bo.sign, "fixed-point sign for odd n (+1/-1)");
    build->add_option("--z1", bo.z1, "complex parameter z1");
    build->add_option("--z2", bo.z2, "complex parameter z2");
    build->add_option("--z3", bo.z3, "complex parameter z3");
    build->add_option("--zeta", bo.zeta, "unit-modulus phase");
    build->add_option("--w", bo.w, "coupling parameter (n3p-w)");
    build->add_option("--alpha1", bo.alpha1, "first block scale");
    build->add_option("--alpha2", bo.alpha2, "second block scale");
    build->add_option("--x", bo.x, "real vector (ddss), repeatable");
    build->add_option("--q", bo.q, "deformation parameter, complex allowed (vvn4k families)");
    build->add_option("--xi1", bo.xi1, "unit phase for the deformation parametrization");
    build->add_option("--xi2", bo.xi2, "unit phase for the deformation parametrization");
    build->add_option("--case", bo.catalog_case, "catalog case a..j (s4-catalog)");

    auto* verify = app.add_subcommand("verify", "verify a solution document");
    std::string vin, vreport;
    double vtol = default_tolerance();
    bool vnh = false;
    verify->add_option("--input,-i", vin, "solution JSON file")->required();
    verify->add_option("--tol", vtol, "absolute tolerance (default 1e-10 or TLFORGE_TOL)");
    verify->add_flag("--non-hermitian", vnh, "skip hermiticity; use the continued parameters");
    verify->add_option("--report", vreport, "also write the report JSON here");

    app.add_subcommand("catalog", "print the n = 4 admissible-pair catalog with phase vectors");

    auto* sweep = app.add_subcommand("sweep", "sample the attainable Q range of a family (CSV)");
    std::string sw_family;
    std::size_t sw_n = 4, sw_samples = 25;
    std::uint64_t sw_seed = 0;
    sweep->add_option("--family", sw_family, "family tag")->required();
    sweep->add_option("--n", sw_n, "matrix size n");
    sweep->add_option("--samples", sw_samples, "number of samples");
    sweep->add_option("--seed", sw_seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    const double tol_eps = default_tolerance();
    try {
        if (app.got_subcommand("enumerate")) return cmd_enumerate(en_n, en_cap, en_json);
        if (app.got_subcommand("build")) return cmd_build(bo, tol_eps);
        if (app.got_subcommand("verify")) return cmd_verify(vin, vtol, vnh, vreport);
        if (app.got_subcommand("catalog")) return cmd_catalog();
        if (app.got_subcommand("sweep"))
            return cmd_sweep(sw_family, sw_n, sw_samples, sw_seed, tol_eps);
    } catch (const constraint_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConstraint;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
