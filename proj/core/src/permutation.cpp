#include "tlforge/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <future>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

namespace tlforge {

Permutation::Permutation(std::size_t n) : img_(n) {
    std::iota(img_.begin(), img_.end(), 0);
}

Permutation Permutation::from_image(std::vector<int> image_one_based) {
    const std::size_t n = image_one_based.size();
    std::vector<bool> seen(n, false);
    Permutation p;
    p.img_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const int v = image_one_based[k];
        if (v < 1 || v > static_cast<int>(n))
            throw std::invalid_argument("Permutation: image value out of range");
        if (seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("Permutation: image is not a bijection");
        seen[static_cast<std::size_t>(v - 1)] = true;
        p.img_[k] = v - 1;
    }
    return p;
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> image(n);
    std::iota(image.begin(), image.end(), 1);
    std::vector<bool> used(n, false);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const int from = cyc[i];
            const int to = cyc[(i + 1) % cyc.size()];
            if (from < 1 || from > static_cast<int>(n))
                throw std::invalid_argument("from_cycles: symbol out of range 1..n");
            if (used[static_cast<std::size_t>(from - 1)])
                throw std::invalid_argument("from_cycles: repeated symbol");
            used[static_cast<std::size_t>(from - 1)] = true;
            image[static_cast<std::size_t>(from - 1)] = to;
        }
    }
    return from_image(image);
}

Permutation Permutation::parse(std::size_t n, const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty() || s == "id" || s == "()") return Permutation(n);
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '(') throw std::invalid_argument("parse: expected '(' in cycle notation");
        const std::size_t close = s.find(')', i);
        if (close == std::string::npos) throw std::invalid_argument("parse: unterminated cycle");
        std::vector<int> cyc;
        std::stringstream ss(s.substr(i + 1, close - i - 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) throw std::invalid_argument("parse: empty symbol in cycle");
            std::size_t pos = 0;
            const int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument("parse: bad symbol '" + tok + "'");
            cyc.push_back(v);
        }
        if (cyc.empty()) throw std::invalid_argument("parse: empty cycle");
        cycles.push_back(std::move(cyc));
        i = close + 1;
    }
    return from_cycles(n, cycles);
}

bool Permutation::is_identity() const {
    for (std::size_t k = 0; k < img_.size(); ++k)
        if (img_[k] != static_cast<int>(k)) return false;
    return true;
}

bool Permutation::is_involution() const {
    for (std::size_t k = 0; k < img_.size(); ++k)
        if (img_[static_cast<std::size_t>(img_[k])] != static_cast<int>(k)) return false;
    return true;
}

bool Permutation::commutes_with(const Permutation& o) const {
    return compose(*this, o) == compose(o, *this);
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.img_.resize(img_.size());
    for (std::size_t k = 0; k < img_.size(); ++k) p.img_[static_cast<std::size_t>(img_[k])] = static_cast<int>(k);
    return p;
}

std::vector<int> Permutation::image_one_based() const {
    std::vector<int> v(img_.size());
    for (std::size_t k = 0; k < img_.size(); ++k) v[k] = img_[k] + 1;
    return v;
}

std::set<int> Permutation::fixed_points() const {
    std::set<int> f;
    for (std::size_t k = 0; k < img_.size(); ++k)
        if (img_[k] == static_cast<int>(k)) f.insert(static_cast<int>(k) + 1);
    return f;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t k = 0; k < img_.size(); ++k) {
        if (seen[k] || img_[k] == static_cast<int>(k)) continue;
        std::vector<int> cyc;
        int cur = static_cast<int>(k);
        while (!seen[static_cast<std::size_t>(cur)]) {
            seen[static_cast<std::size_t>(cur)] = true;
            cyc.push_back(cur + 1);
            cur = img_[static_cast<std::size_t>(cur)];
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

std::string Permutation::to_cycle_string() const {
    const auto cyc = cycles();
    if (cyc.empty()) return "id";
    std::ostringstream os;
    for (const auto& c : cyc) {
        os << "(";
        for (std::size_t i = 0; i < c.size(); ++i) os << c[i] << (i + 1 < c.size() ? "," : "");
        os << ")";
    }
    return os.str();
}

bool Permutation::next_lex() { return std::next_permutation(img_.begin(), img_.end()); }

std::size_t Permutation::factorial(std::size_t n) {
    std::size_t f = 1;
    for (std::size_t k = 2; k <= n; ++k) f *= k;
    return f;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("compose: degree mismatch");
    Permutation p;
    p.img_.resize(a.degree());
    for (std::size_t k = 0; k < a.degree(); ++k)
        p.img_[k] = a.img_[static_cast<std::size_t>(b.img_[k])];
    return p;
}

Permutation inverse(const Permutation& a) { return a.inverse(); }

Permutation conjugate(const Permutation& a, const Permutation& tau) {
    return compose(tau, compose(a, tau.inverse()));
}

ComplexMatrix permutation_matrix(const Permutation& sigma) {
    const std::size_t n = sigma.degree();
    ComplexMatrix p(n, n);
    for (std::size_t j = 0; j < n; ++j) p(static_cast<std::size_t>(sigma.img_[j]), j) = 1.0;
    return p;
}

PermutationPair::PermutationPair(Permutation a, Permutation b)
    : first(std::move(a)), second(std::move(b)) {
    if (first.degree() != second.degree())
        throw std::invalid_argument("PermutationPair: degree mismatch");
}

std::vector<int> PermutationPair::encoding() const {
    std::vector<int> e = first.image_one_based();
    const std::vector<int> s = second.image_one_based();
    e.insert(e.end(), s.begin(), s.end());
    return e;
}

AdmissibilityResult is_admissible_pair(const PermutationPair& p) {
    if (p.degree() % 2 != 0)
        throw std::invalid_argument("is_admissible_pair: defined for even n only");
    AdmissibilityResult r;
    const Permutation& s1 = p.first;
    const Permutation s2inv = p.second.inverse();

    const Permutation lhs = compose(s2inv, compose(s1, compose(s1, s2inv)));
    const Permutation rhs = compose(s1, compose(s2inv, compose(s2inv, s1)));
    if (!(lhs == rhs)) {
        r.status = AdmissibilityStatus::fails_commutation;
        r.reason = "sigma1*sigma2^-1 does not commute with sigma2^-1*sigma1";
        return r;
    }

    const std::set<int> f1 = s1.fixed_points();
    for (int k : p.second.fixed_points())
        if (f1.count(k)) {
            r.status = AdmissibilityStatus::fails_common_fixed_point;
            r.reason = "common fixed point at " + std::to_string(k);
            return r;
        }

    const bool involutions = s1.is_involution() && p.second.is_involution();
    if (involutions || s1.commutes_with(p.second)) {
        const Permutation quot = compose(s2inv, s1);
        const auto qf = quot.fixed_points();
        if (!qf.empty()) {
            r.status = AdmissibilityStatus::fails_quotient_fixed_point;
            r.reason = "sigma2^-1*sigma1 fixes " + std::to_string(*qf.begin());
            return r;
        }
    }
    r.admissible = true;
    return r;
}

PermutationPair canonical_pair(const PermutationPair& p) {
    const std::size_t n = p.degree();
    PermutationPair best = p;
    std::vector<int> best_key = p.encoding();
    Permutation tau(n);
    do {
        const Permutation c1 = conjugate(p.first, tau);
        const Permutation c2 = conjugate(p.second, tau);
        for (int swapped = 0; swapped < 2; ++swapped) {
            PermutationPair cand = swapped ? PermutationPair(c2, c1) : PermutationPair(c1, c2);
            std::vector<int> key = cand.encoding();
            if (key < best_key) {
                best_key = std::move(key);
                best = std::move(cand);
            }
        }
    } while (tau.next_lex());
    return best;
}

PairClass canonicalize(const PermutationPair& p) {
    const std::size_t n = p.degree();
    PairClass cls;
    cls.canonical = canonical_pair(p);
    // Orbit size = number of distinct ordered pairs reachable by conjugation + swap.
    std::set<std::vector<int>> orbit;
    Permutation tau(n);
    do {
        const PermutationPair c(conjugate(p.first, tau), conjugate(p.second, tau));
        orbit.insert(c.encoding());
        orbit.insert(PermutationPair(c.second, c.first).encoding());
    } while (tau.next_lex());
    cls.members_count = orbit.size();
    return cls;
}

namespace {

// Allocation-free admissibility test on raw 0-based image arrays.
bool admissible_fast(const int* s1, const int* s2, int* s2inv, int n) {
    for (int k = 0; k < n; ++k) s2inv[s2[k]] = k;
    // (b) no common fixed points -- cheapest first.
    for (int k = 0; k < n; ++k)
        if (s1[k] == k && s2[k] == k) return false;
    // (a) sigma2^-1 s1 s1 sigma2^-1 == s1 sigma2^-1 sigma2^-1 s1.
    for (int k = 0; k < n; ++k)
        if (s2inv[s1[s1[s2inv[k]]]] != s1[s2inv[s2inv[s1[k]]]]) return false;
    // (c) quotient fixed points, for involution or commuting pairs.
    bool involutions = true;
    for (int k = 0; k < n && involutions; ++k)
        involutions = s1[s1[k]] == k && s2[s2[k]] == k;
    bool commute = true;
    for (int k = 0; k < n && commute; ++k)
        commute = s1[s2[k]] == s2[s1[k]];
    if (involutions || commute) {
        for (int k = 0; k < n; ++k)
            if (s1[k] == s2[k]) return false;  // sigma2^-1 sigma1 fixes k
    }
    return true;
}

// Scan ordered pairs whose first permutation has lexicographic rank in
// [lo, hi); collect encodings of the admissible ones.
std::vector<std::vector<int>> scan_partition(std::size_t n, std::size_t lo, std::size_t hi) {
    std::vector<std::vector<int>> found;
    std::vector<int> img1(n), img2(n), s2inv(n);
    std::iota(img1.begin(), img1.end(), 0);
    for (std::size_t r = 0; r < lo; ++r) std::next_permutation(img1.begin(), img1.end());
    for (std::size_t r = lo; r < hi; ++r) {
        std::iota(img2.begin(), img2.end(), 0);
        do {
            if (admissible_fast(img1.data(), img2.data(), s2inv.data(), static_cast<int>(n))) {
                std::vector<int> enc(2 * n);
                for (std::size_t k = 0; k < n; ++k) {
                    enc[k] = img1[k] + 1;
                    enc[n + k] = img2[k] + 1;
                }
                found.push_back(std::move(enc));
            }
        } while (std::next_permutation(img2.begin(), img2.end()));
        std::next_permutation(img1.begin(), img1.end());
    }
    return found;
}

PermutationPair pair_from_encoding(std::size_t n, const std::vector<int>& enc) {
    std::vector<int> img1(enc.begin(), enc.begin() + static_cast<std::ptrdiff_t>(n));
    std::vector<int> img2(enc.begin() + static_cast<std::ptrdiff_t>(n), enc.end());
    return PermutationPair(Permutation::from_image(img1), Permutation::from_image(img2));
}

}  // namespace

std::vector<PairClass> enumerate_admissible_classes(std::size_t n, std::size_t cap) {
    if (n % 2 != 0) throw std::invalid_argument("enumerate_admissible_classes: n must be even");
    if (n > cap) throw std::invalid_argument("enumerate_admissible_classes: n exceeds cap");
    if (n == 0) return {};

    const std::size_t total = Permutation::factorial(n);
    std::size_t parts = 1;
    if (n >= 6) parts = std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), 16);

    std::vector<std::future<std::vector<std::vector<int>>>> jobs;
    for (std::size_t p = 0; p < parts; ++p) {
        const std::size_t lo = total * p / parts;
        const std::size_t hi = total * (p + 1) / parts;
        jobs.push_back(std::async(parts == 1 ? std::launch::deferred : std::launch::async,
                                  scan_partition, n, lo, hi));
    }
    std::set<std::vector<int>> admissible;
    for (auto& j : jobs)
        for (auto& enc : j.get()) admissible.insert(std::move(enc));

    // Group by orbit: one canonicalization per class, then claim the whole
    // orbit, so the cost scales with the number of classes, not of pairs.
    std::vector<PairClass> classes;
    std::set<std::vector<int>> claimed;
    for (const auto& enc : admissible) {
        if (claimed.count(enc)) continue;
        const PermutationPair pair = pair_from_encoding(n, enc);
        PairClass cls;
        cls.canonical = canonical_pair(pair);
        std::set<std::vector<int>> orbit;
        Permutation tau(n);
        do {
            const PermutationPair c(conjugate(pair.first, tau), conjugate(pair.second, tau));
            orbit.insert(c.encoding());
            orbit.insert(PermutationPair(c.second, c.first).encoding());
        } while (tau.next_lex());
        cls.members_count = orbit.size();
        claimed.merge(std::move(orbit));
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end());
    return classes;
}

}  // namespace tlforge
