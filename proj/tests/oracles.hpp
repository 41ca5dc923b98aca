#pragma once

// Reference implementations used only by the tests. Each one takes a different
// route from the library code it checks.

#include "thetapairs/int_matrix.hpp"
#include "thetapairs/matrix.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using thetapairs::GaussRat;
using thetapairs::IntMatrix;
using thetapairs::Matrix;
using thetapairs::Vec;

// Leibniz expansion over all permutations.
inline GaussRat leibniz_det(const Matrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    GaussRat total(0);
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j] ? 1 : 0;
        GaussRat term(inversions % 2 == 0 ? 1 : -1);
        for (std::size_t i = 0; i < n; ++i) term *= m(i, p[i]);
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

// Faddeev-LeVerrier: monic, descending.
inline std::vector<GaussRat> faddeev_leverrier(const Matrix& a) {
    const std::size_t n = a.rows();
    std::vector<GaussRat> c(n + 1);
    c[0] = 1;
    Matrix m(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m + Matrix::identity(n) * c[k - 1];
        c[k] = -(a * m).trace() / GaussRat(static_cast<long>(k));
    }
    return c;
}

// Rank by counting the largest nonzero minor, n <= 4.
inline std::size_t minor_rank(const Matrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    for (std::size_t k = std::min(r, c); k > 0; --k) {
        std::vector<bool> rs(r, false), cs(c, false);
        std::fill(rs.begin(), rs.begin() + k, true);
        do {
            std::fill(cs.begin(), cs.end(), false);
            std::fill(cs.begin(), cs.begin() + k, true);
            do {
                Matrix sub(k, k);
                std::size_t a = 0;
                for (std::size_t i = 0; i < r; ++i) {
                    if (!rs[i]) continue;
                    std::size_t b = 0;
                    for (std::size_t j = 0; j < c; ++j)
                        if (cs[j]) sub(a, b++) = m(i, j);
                    ++a;
                }
                if (!leibniz_det(sub).is_zero()) return k;
            } while (std::prev_permutation(cs.begin(), cs.end()));
        } while (std::prev_permutation(rs.begin(), rs.end()));
    }
    return 0;
}

inline mpz_class int_leibniz(const IntMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    mpz_class total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j] ? 1 : 0;
        mpz_class term = inversions % 2 == 0 ? 1 : -1;
        for (std::size_t i = 0; i < n; ++i) term *= m(i, p[i]);
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

// k-th determinantal divisor: gcd of all k x k minors.
inline mpz_class determinantal_divisor(const IntMatrix& m, std::size_t k) {
    const std::size_t r = m.rows(), c = m.cols();
    mpz_class g = 0;
    std::vector<bool> rs(r, false), cs(c, false);
    std::fill(rs.begin(), rs.begin() + k, true);
    do {
        std::fill(cs.begin(), cs.end(), false);
        std::fill(cs.begin(), cs.begin() + k, true);
        do {
            IntMatrix sub(k, k);
            std::size_t a = 0;
            for (std::size_t i = 0; i < r; ++i) {
                if (!rs[i]) continue;
                std::size_t b = 0;
                for (std::size_t j = 0; j < c; ++j)
                    if (cs[j]) sub(a, b++) = m(i, j);
                ++a;
            }
            mpz_class d = int_leibniz(sub);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
    return g;
}

// Invariant factors d_k = D_k / D_{k-1}, stopping at the first zero divisor.
inline std::vector<mpz_class> invariant_factors(const IntMatrix& m) {
    std::vector<mpz_class> out;
    mpz_class prev = 1;
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        mpz_class d = determinantal_divisor(m, k);
        if (d == 0) {
            out.resize(std::min(m.rows(), m.cols()), 0);
            return out;
        }
        out.push_back(d / prev);
        prev = d;
    }
    return out;
}

// Orbit of the identity under integer reflection matrices s_i(v) = v - <v, a_i^vee> a_i
// in simple-root coordinates, built straight from a Cartan matrix.
inline std::size_t reflection_group_order(const std::vector<std::vector<int>>& cartan) {
    const std::size_t r = cartan.size();
    using M = std::vector<long>;
    std::vector<M> gens;
    for (std::size_t i = 0; i < r; ++i) {
        M s(r * r, 0);
        for (std::size_t c = 0; c < r; ++c) s[c * r + c] = 1;
        // column j is the image of a_j: a_j - <a_j, a_i^vee> a_i
        for (std::size_t j = 0; j < r; ++j) s[i * r + j] -= cartan[j][i];
        gens.push_back(s);
    }
    auto mul = [r](const M& a, const M& b) {
        M c(r * r, 0);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t k = 0; k < r; ++k)
                if (a[i * r + k] != 0)
                    for (std::size_t j = 0; j < r; ++j) c[i * r + j] += a[i * r + k] * b[k * r + j];
        return c;
    };
    M id(r * r, 0);
    for (std::size_t c = 0; c < r; ++c) id[c * r + c] = 1;
    std::set<M> seen{id};
    std::vector<M> frontier{id};
    while (!frontier.empty()) {
        std::vector<M> next;
        for (const auto& g : frontier)
            for (const auto& s : gens) {
                M h = mul(s, g);
                if (seen.insert(h).second) next.push_back(h);
            }
        frontier = std::move(next);
    }
    return seen.size();
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound = 4, bool complex = true) {
    std::uniform_int_distribution<long> d(-bound, bound);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = GaussRat(mpq_class(d(rng)), mpq_class(complex ? d(rng) : 0));
    return m;
}

inline IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound = 6) {
    std::uniform_int_distribution<long> d(-bound, bound);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
    return m;
}

// Product of random elementary integer operations, with its inverse.
inline std::pair<IntMatrix, IntMatrix> random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 6) {
    IntMatrix p = IntMatrix::identity(n), q = IntMatrix::identity(n);
    if (n < 2) return {p, q};
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<long> coef(-2, 2);
    for (int s = 0; s < steps; ++s) {
        std::size_t i = idx(rng), j = idx(rng);
        if (i == j) continue;
        long c = coef(rng);
        IntMatrix e = IntMatrix::identity(n), einv = IntMatrix::identity(n);
        e(i, j) = c;
        einv(i, j) = -c;
        p = e * p;
        q = q * einv;
    }
    return {p, q};
}

} // namespace oracle
