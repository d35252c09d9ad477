#ifndef ARBOREAL_TESTS_ORACLES_HPP
#define ARBOREAL_TESTS_ORACLES_HPP

// Independent reference computations for the tests.  None of these reuse the
// library's algorithms: roots are numeric (Durand-Kerner), certificates are
// checked through explicit inverses in Q[y]/(F), factor degrees come from
// trial division, characteristic polynomials from Faddeev-LeVerrier.

#include "arboreal/poly.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using arboreal::Integer;
using arboreal::IntPolynomial;
using arboreal::Rational;
using Real = long double;
using Complex = std::complex<Real>;

/// All complex roots of a polynomial with integer coefficients.
inline std::vector<Complex> complex_roots(const IntPolynomial& p) {
    const int n = p.degree();
    std::vector<Real> c(static_cast<std::size_t>(n) + 1);
    const Real lead = p.leading().get_d();
    for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = p.coeff(static_cast<std::size_t>(i)).get_d() / lead;
    Real bound = 1;
    for (int i = 0; i < n; ++i) bound = std::max(bound, 1 + std::abs(c[static_cast<std::size_t>(i)]));
    std::vector<Complex> z(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i)] = std::polar(bound * Real(0.9), Real(0.4) + Real(2) * Real(M_PI) * i / n);
    auto eval = [&](Complex x) {
        Complex r = 1;
        for (int i = n - 1; i >= 0; --i) r = r * x + c[static_cast<std::size_t>(i)];
        return r;
    };
    for (int it = 0; it < 5000; ++it) {
        Real change = 0;
        for (int i = 0; i < n; ++i) {
            Complex den = 1;
            for (int j = 0; j < n; ++j)
                if (j != i) den *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
            const Complex step = eval(z[static_cast<std::size_t>(i)]) / den;
            z[static_cast<std::size_t>(i)] -= step;
            change = std::max(change, std::abs(step));
        }
        if (change < 1e-17L * bound) break;
    }
    return z;
}

/// Real roots in ascending order (imaginary parts below tol are dropped).
inline std::vector<Real> real_roots(const IntPolynomial& p, Real tol = 1e-7L) {
    std::vector<Real> out;
    for (const auto& z : complex_roots(p))
        if (std::abs(z.imag()) < tol * std::max<Real>(1, std::abs(z.real()))) out.push_back(z.real());
    std::sort(out.begin(), out.end());
    return out;
}

inline bool all_roots_real_positive(const IntPolynomial& p) {
    const auto r = real_roots(p);
    return static_cast<int>(r.size()) == p.degree() && std::all_of(r.begin(), r.end(), [](Real x) { return x > 1e-9L; });
}

/// sum_k a_k / (r - k) at every root r, which must be 1.
inline bool certificate_holds_numeric(const IntPolynomial& F, const std::map<std::int64_t, Integer>& a, Real tol = 1e-6L) {
    for (Real r : real_roots(F)) {
        Real s = 0, scale = 0;
        for (const auto& [k, ak] : a) {
            const Real t = ak.get_d() / (r - static_cast<Real>(k));
            s += t;
            scale += std::abs(t);
        }
        if (std::abs(s - 1) > tol * std::max<Real>(1, scale)) return false;
    }
    return !a.empty();
}

/// Exact check in Q[y]/(F): 1/(y - k) is the polynomial u_k with
/// u_k (y - k) = 1 mod F, found by solving the linear system for u_k.
inline bool certificate_holds_inverse_route(const IntPolynomial& F, const std::map<std::int64_t, Integer>& a) {
    const std::size_t n = static_cast<std::size_t>(F.degree());
    std::vector<Rational> total(n);
    for (const auto& [k, ak] : a) {
        // Multiplication by (y - k) on the basis 1, y, ..., y^(n-1): build the
        // matrix column by column and solve M u = e_0 by Gauss-Jordan.
        std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n + 1));
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Rational> col(n + 1);
            col[j + 1] += 1;
            col[j] -= Rational(static_cast<long>(k));
            if (col[n] != 0) {
                const Rational top = col[n];
                for (std::size_t i = 0; i < n; ++i) col[i] -= top * Rational(F.coeff(i));
                col[n] = 0;
            }
            for (std::size_t i = 0; i < n; ++i) M[i][j] = col[i];
        }
        M[0][n] = 1;
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t piv = c;
            while (piv < n && M[piv][c] == 0) ++piv;
            if (piv == n) return false;
            std::swap(M[piv], M[c]);
            const Rational inv = 1 / M[c][c];
            for (auto& x : M[c]) x *= inv;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == c || M[r][c] == 0) continue;
                const Rational f = M[r][c];
                for (std::size_t j = c; j <= n; ++j) M[r][j] -= f * M[c][j];
            }
        }
        for (std::size_t i = 0; i < n; ++i) total[i] += Rational(ak) * M[i][n];
    }
    if (total.empty() || total[0] != 1) return false;
    for (std::size_t i = 1; i < n; ++i)
        if (total[i] != 0) return false;
    return !a.empty();
}

/// Irreducible factor degrees of F mod p by dividing out every monic
/// polynomial of degree 1, 2, ... in turn.
inline std::vector<int> brute_factor_degrees(const IntPolynomial& F, long p) {
    using P = std::vector<long>;
    auto md = [p](long x) { return ((x % p) + p) % p; };
    P f;
    for (const auto& c : F.coefficients()) f.push_back(md(static_cast<long>(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(p)))));
    while (!f.empty() && f.back() == 0) f.pop_back();
    auto inv = [&](long x) {
        for (long y = 1; y < p; ++y)
            if (md(x * y) == 1) return y;
        return 0L;
    };
    {
        const long li = inv(f.back());
        for (auto& c : f) c = md(c * li);
    }
    auto try_divide = [&](const P& g) -> bool {
        if (g.size() > f.size()) return false;
        P r = f, q(f.size() - g.size() + 1);
        for (std::size_t i = r.size(); i-- >= g.size();) {
            const long t = r[i];
            q[i - (g.size() - 1)] = t;
            for (std::size_t j = 0; j < g.size(); ++j) r[i - (g.size() - 1) + j] = md(r[i - (g.size() - 1) + j] - t * g[j]);
        }
        for (std::size_t i = 0; i + 1 < g.size(); ++i)
            if (r[i] != 0) return false;
        f = q;
        return true;
    };
    std::vector<int> out;
    for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long code = 0; code < count; ++code) {
            P g(static_cast<std::size_t>(d) + 1);
            long c = code;
            for (int i = 0; i < d; ++i) {
                g[static_cast<std::size_t>(i)] = c % p;
                c /= p;
            }
            g[static_cast<std::size_t>(d)] = 1;
            while (try_divide(g)) out.push_back(d);
        }
    }
    if (f.size() > 1) out.push_back(static_cast<int>(f.size()) - 1);
    std::sort(out.begin(), out.end());
    return out;
}

/// prod (x - 2 cos(2 pi k / m)) over 1 <= k <= m/2 coprime to m, rounded.
inline IntPolynomial numeric_real_cyclotomic(long m) {
    std::vector<Real> c{1};
    for (long k = 0; 2 * k <= m; ++k) {
        if (std::gcd(k, m) != 1) continue;
        if (m > 2 && (k == 0 || 2 * k == m)) continue;
        const Real r = 2 * std::cos(2 * static_cast<Real>(M_PI) * k / m);
        std::vector<Real> next(c.size() + 1);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = next;
    }
    std::vector<Integer> out;
    for (Real x : c) out.emplace_back(static_cast<long>(std::llround(x)));
    return IntPolynomial(std::move(out));
}

/// det(xI - A) by Faddeev-LeVerrier over Q.
inline IntPolynomial faddeev_charpoly(const std::vector<std::vector<long>>& A) {
    const std::size_t n = A.size();
    using Mat = std::vector<std::vector<Rational>>;
    Mat a(n, std::vector<Rational>(n)), M(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = A[i][j];
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Mat AM(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Rational s = 0;
                for (std::size_t l = 0; l < n; ++l) s += a[i][l] * M[l][j];
                AM[i][j] = s;
            }
        for (std::size_t i = 0; i < n; ++i) AM[i][i] += c[n - k + 1];
        M = AM;
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) tr += a[i][l] * M[l][i];
        c[n - k] = -tr / static_cast<long>(k);
    }
    std::vector<Integer> out;
    for (const auto& x : c) out.push_back(x.get_num());
    return IntPolynomial(std::move(out));
}

/// Adjacency matrix of a uniformly random labelled tree (Pruefer code).
inline std::vector<std::vector<long>> random_tree(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::vector<long>> A(n, std::vector<long>(n));
    if (n < 2) return A;
    std::vector<std::size_t> code(n - 2);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (auto& c : code) c = pick(rng);
    std::vector<int> degree(n, 1);
    for (auto c : code) ++degree[c];
    for (auto c : code) {
        for (std::size_t leaf = 0; leaf < n; ++leaf) {
            if (degree[leaf] == 1) {
                A[leaf][c] = A[c][leaf] = 1;
                --degree[leaf];
                --degree[c];
                break;
            }
        }
    }
    std::size_t u = n, v = n;
    for (std::size_t i = 0; i < n; ++i)
        if (degree[i] == 1) (u == n ? u : v) = i;
    A[u][v] = A[v][u] = 1;
    return A;
}

inline std::vector<std::vector<long>> random_symmetric(std::size_t n, long lo, long hi, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> d(lo, hi);
    std::vector<std::vector<long>> A(n, std::vector<long>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) A[i][j] = A[j][i] = d(rng);
    return A;
}

/// Does each gap between consecutive roots hold an integer?  (numeric)
inline bool interlacing_exists_numeric(const std::vector<Real>& roots) {
    for (std::size_t i = 0; i + 1 < roots.size(); ++i)
        if (std::floor(roots[i]) + 1 >= roots[i + 1]) return false;
    return true;
}

}  // namespace oracle

#endif
