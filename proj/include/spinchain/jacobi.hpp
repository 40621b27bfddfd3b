#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>

#include "spinchain/matrix4.hpp"

namespace spinchain::detail {

// Cyclic two-sided Jacobi diagonalization for small complex Hermitian
// matrices. Each rotation annihilates one off-diagonal pivot with a unitary
//   U = [[c, s], [-conj(s), c]],  s = t*c*g/|g|,  t the smaller root of
//   t^2 - 2*theta*t - 1 = 0,  theta = (a_pp - a_qq) / (2|g|).
// Convergence: off-diagonal Frobenius mass <= 1e-14 * ||A||_F, at most
// 100 sweeps (a 4x4 Hermitian matrix needs only a handful).

template <std::size_t N>
struct JacobiEig {
    std::array<double, N> values;        // ascending
    std::array<cplx, N * N> vectors;     // row-major; column k pairs with values[k]
    int sweeps = 0;
};

template <std::size_t N>
JacobiEig<N> jacobi_hermitian(std::array<cplx, N * N> a) {
    constexpr int max_sweeps = 100;
    auto at = [](std::array<cplx, N * N>& m, std::size_t r, std::size_t c) -> cplx& {
        return m[r * N + c];
    };

    std::array<cplx, N * N> v{};
    for (std::size_t i = 0; i < N; ++i) at(v, i, i) = 1.0;

    // enforce exact Hermitian structure before iterating
    for (std::size_t i = 0; i < N; ++i) {
        at(a, i, i) = std::real(at(a, i, i));
        for (std::size_t j = i + 1; j < N; ++j) {
            const cplx m = 0.5 * (at(a, i, j) + std::conj(at(a, j, i)));
            at(a, i, j) = m;
            at(a, j, i) = std::conj(m);
        }
    }

    double full_norm = 0.0;
    for (const cplx& z : a) full_norm += std::norm(z);
    full_norm = std::sqrt(full_norm);

    JacobiEig<N> out;
    if (full_norm > 0.0) {
        const double tol = 1e-14 * full_norm;
        for (out.sweeps = 1; out.sweeps <= max_sweeps; ++out.sweeps) {
            double off = 0.0;
            for (std::size_t p = 0; p < N; ++p)
                for (std::size_t q = p + 1; q < N; ++q) off += 2.0 * std::norm(at(a, p, q));
            if (std::sqrt(off) <= tol) break;

            for (std::size_t p = 0; p < N; ++p) {
                for (std::size_t q = p + 1; q < N; ++q) {
                    const cplx g = at(a, p, q);
                    const double gm = std::abs(g);
                    if (gm == 0.0) continue;

                    const double alpha = std::real(at(a, p, p));
                    const double beta = std::real(at(a, q, q));
                    const double theta = (alpha - beta) / (2.0 * gm);
                    const double t = (theta >= 0.0) ? -1.0 / (theta + std::hypot(theta, 1.0))
                                                    : 1.0 / (-theta + std::hypot(theta, 1.0));
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const double sigma = t * c;
                    const cplx s = sigma * (g / gm);

                    // rows/cols outside the pivot pair: A <- U^H A U
                    for (std::size_t k = 0; k < N; ++k) {
                        if (k == p || k == q) continue;
                        const cplx akp = at(a, k, p);
                        const cplx akq = at(a, k, q);
                        at(a, k, p) = akp * c - akq * std::conj(s);
                        at(a, k, q) = akp * s + akq * c;
                        at(a, p, k) = std::conj(at(a, k, p));
                        at(a, q, k) = std::conj(at(a, k, q));
                    }
                    const double cross = 2.0 * c * sigma * gm;
                    at(a, p, p) = alpha * c * c + beta * sigma * sigma - cross;
                    at(a, q, q) = alpha * sigma * sigma + beta * c * c + cross;
                    at(a, p, q) = 0.0;
                    at(a, q, p) = 0.0;

                    for (std::size_t k = 0; k < N; ++k) {
                        const cplx vkp = at(v, k, p);
                        const cplx vkq = at(v, k, q);
                        at(v, k, p) = vkp * c - vkq * std::conj(s);
                        at(v, k, q) = vkp * s + vkq * c;
                    }
                }
            }
        }
    }

    std::array<std::size_t, N> order{};
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return std::real(at(a, i, i)) < std::real(at(a, j, j));
    });

    for (std::size_t k = 0; k < N; ++k) {
        out.values[k] = std::real(at(a, order[k], order[k]));
        for (std::size_t r = 0; r < N; ++r) out.vectors[r * N + k] = at(v, r, order[k]);
    }
    return out;
}

}  // namespace spinchain::detail
