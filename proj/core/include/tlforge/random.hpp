// Seeded random draws used by factories, sweeps, and property tests:
// Gaussian complex entries and unitaries from Gram-Schmidt on a Gaussian
// matrix.

#pragma once

#include "tlforge/matrix.hpp"

#include <cmath>
#include <random>

namespace tlforge {

class Rng {
  public:
    explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(engine_);
    }
    double gaussian() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }
    cplx complex_gaussian() { return cplx(gaussian(), gaussian()); }
    cplx phase() {
        const double t = uniform(0.0, 6.283185307179586476925286766559);
        return cplx(std::cos(t), std::sin(t));
    }
    std::uint64_t integer(std::uint64_t bound) {
        return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
    }
    std::mt19937_64& engine() { return engine_; }

  private:
    std::mt19937_64 engine_;
};

/// Gram-Schmidt orthonormalization of a complex Gaussian matrix.
inline ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
    ComplexMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.complex_gaussian();
    // Columns become an orthonormal set (re-orthogonalized once for safety).
    for (std::size_t j = 0; j < n; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                cplx proj(0.0, 0.0);
                for (std::size_t i = 0; i < n; ++i) proj += std::conj(g(i, k)) * g(i, j);
                for (std::size_t i = 0; i < n; ++i) g(i, j) -= proj * g(i, k);
            }
        }
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) norm += std::norm(g(i, j));
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < n; ++i) g(i, j) /= norm;
    }
    return g;
}

}  // namespace tlforge
