#ifndef FRAMECOMP_TEST_HELPERS_HPP
#define FRAMECOMP_TEST_HELPERS_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "framecomp/completion_solver.hpp"
#include "framecomp/majorization.hpp"
#include "framecomp/spectral_core.hpp"

namespace testutil {

using framecomp::cplx;
using framecomp::ProblemData;
using framecomp::RealVec;
using framecomp::VectorSequence;

using Rng = std::mt19937_64;

inline std::vector<double> random_vector(Rng& rng, std::size_t n, double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> v(n);
    for (double& x : v) x = u(rng);
    return v;
}

// x majorized by y, built by averaging random coordinate pairs of y (each
// such step is doubly stochastic, so majorization holds by construction).
inline std::pair<std::vector<double>, std::vector<double>> random_majorized_pair(Rng& rng,
                                                                                 std::size_t n,
                                                                                 double lo = 0.0,
                                                                                 double hi = 5.0) {
    std::vector<double> y = random_vector(rng, n, lo, hi);
    std::vector<double> x = y;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_real_distribution<double> blend(0.0, 1.0);
    const std::size_t steps = 2 * n + 3;
    for (std::size_t s = 0; s < steps; ++s) {
        const std::size_t i = pick(rng);
        const std::size_t j = pick(rng);
        if (i == j) continue;
        const double t = blend(rng);
        const double xi = x[i];
        const double xj = x[j];
        x[i] = t * xi + (1.0 - t) * xj;
        x[j] = (1.0 - t) * xi + t * xj;
    }
    return {x, y};
}

// Independent partial-sum check, kept deliberately separate from the library
// implementation.
inline bool majorized_oracle(std::vector<double> x, std::vector<double> y, double tol = 1e-9) {
    const std::size_t n = std::max(x.size(), y.size());
    x.resize(n, 0.0);
    y.resize(n, 0.0);
    std::sort(x.begin(), x.end(), std::greater<double>());
    std::sort(y.begin(), y.end(), std::greater<double>());
    double sx = 0.0;
    double sy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        if (sx > sy + tol) return false;
    }
    return std::fabs(sx - sy) <= tol;
}

// Random problem data with k >= d unless allow_wide is set.
inline ProblemData random_problem(Rng& rng, std::size_t dmax = 5, std::size_t kmax = 7,
                                  bool allow_wide = false, double scale = 5.0) {
    std::uniform_int_distribution<std::size_t> dd(1, dmax);
    const std::size_t d = dd(rng);
    std::uniform_int_distribution<std::size_t> kk(allow_wide ? 1 : d, kmax);
    std::size_t k = std::max<std::size_t>(1, kk(rng));
    std::uniform_real_distribution<double> uv(0.0, scale);
    std::uniform_real_distribution<double> unorm(0.05 * scale, scale);
    std::bernoulli_distribution zero(0.35);
    std::vector<double> lambda(d);
    for (std::size_t i = 0; i < d; ++i) lambda[i] = zero(rng) ? 0.0 : uv(rng);
    // honor the rank condition d - #nonzero <= k
    std::size_t zeros = 0;
    for (double v : lambda) {
        if (v == 0.0) ++zeros;
    }
    if (d > k && zeros > k) {
        for (std::size_t i = 0; i < d && zeros > k; ++i) {
            if (lambda[i] == 0.0) {
                lambda[i] = uv(rng) + 0.01;
                --zeros;
            }
        }
    }
    std::vector<double> norms(k);
    for (double& v : norms) v = unorm(rng);
    return ProblemData(RealVec(lambda), RealVec(norms));
}

inline VectorSequence random_sequence(Rng& rng, std::size_t d, std::size_t n, bool complex_entries) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::vector<std::vector<cplx>> rows(n, std::vector<cplx>(d));
    for (auto& row : rows) {
        for (cplx& z : row) z = complex_entries ? cplx(u(rng), u(rng)) : cplx(u(rng), 0.0);
    }
    return VectorSequence(d, std::move(rows));
}

inline framecomp::ComplexMatrix random_hermitian(Rng& rng, std::size_t d, bool complex_entries) {
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    framecomp::ComplexMatrix A(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        A(i, i) = u(rng);
        for (std::size_t j = i + 1; j < d; ++j) {
            const cplx z = complex_entries ? cplx(u(rng), u(rng)) : cplx(u(rng), 0.0);
            A(i, j) = z;
            A(j, i) = std::conj(z);
        }
    }
    return A;
}

} // namespace testutil

#endif
