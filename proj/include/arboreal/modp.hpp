#ifndef ARBOREAL_MODP_HPP
#define ARBOREAL_MODP_HPP

// Polynomials over small prime fields: squarefree decomposition and
// distinct-degree factorization.

#include "arboreal/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace arboreal {

inline bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace modp {

/// Ascending coefficients in [0, p); empty is zero.
using Poly = std::vector<std::int64_t>;

class Field {
public:
    explicit Field(std::int64_t p) : p_(p) {
        if (!is_prime(p)) throw std::invalid_argument("modp: modulus is not prime");
        if (p > (std::int64_t{1} << 31)) throw std::invalid_argument("modp: modulus too large");
    }

    std::int64_t p() const { return p_; }

    std::int64_t reduce(std::int64_t a) const {
        a %= p_;
        return a < 0 ? a + p_ : a;
    }

    std::int64_t inverse(std::int64_t a) const {
        // Fermat.
        return power(reduce(a), p_ - 2);
    }

    std::int64_t power(std::int64_t b, std::int64_t e) const {
        std::int64_t r = 1;
        b = reduce(b);
        while (e > 0) {
            if (e & 1) r = r * b % p_;
            b = b * b % p_;
            e >>= 1;
        }
        return r;
    }

    Poly from(const IntPolynomial& f) const {
        Poly out;
        out.reserve(f.coefficients().size());
        Integer m(static_cast<long>(p_));
        for (const auto& c : f.coefficients()) {
            Integer r;
            mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
            out.push_back(r.get_si());
        }
        trim(out);
        return out;
    }

    static void trim(Poly& a) {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }

    static int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

    Poly sub(Poly a, const Poly& b) const {
        if (b.size() > a.size()) a.resize(b.size(), 0);
        for (std::size_t i = 0; i < b.size(); ++i) a[i] = reduce(a[i] - b[i]);
        trim(a);
        return a;
    }

    Poly mul(const Poly& a, const Poly& b) const {
        if (a.empty() || b.empty()) return {};
        Poly r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p_;
        trim(r);
        return r;
    }

    std::pair<Poly, Poly> divrem(Poly a, const Poly& b) const {
        if (b.empty()) throw std::invalid_argument("modp: division by zero polynomial");
        if (a.size() < b.size()) return {Poly{}, a};
        const std::int64_t inv = inverse(b.back());
        Poly q(a.size() - b.size() + 1, 0);
        for (std::size_t i = a.size(); i-- >= b.size();) {
            const std::int64_t t = a[i] * inv % p_;
            if (t == 0) continue;
            const std::size_t shift = i - (b.size() - 1);
            q[shift] = t;
            for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = reduce(a[shift + j] - t * b[j]);
        }
        a.resize(b.size() - 1);
        trim(a);
        trim(q);
        return {q, a};
    }

    Poly rem(const Poly& a, const Poly& b) const { return divrem(a, b).second; }
    Poly quo(const Poly& a, const Poly& b) const { return divrem(a, b).first; }

    Poly monic(Poly a) const {
        if (a.empty()) return a;
        const std::int64_t inv = inverse(a.back());
        for (auto& c : a) c = c * inv % p_;
        return a;
    }

    Poly gcd(Poly a, Poly b) const {
        while (!b.empty()) {
            Poly r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(std::move(a));
    }

    Poly derivative(const Poly& a) const {
        if (a.size() <= 1) return {};
        Poly d(a.size() - 1);
        for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = reduce(a[i] * static_cast<std::int64_t>(i % static_cast<std::size_t>(p_)));
        trim(d);
        return d;
    }

    /// base^e mod m, e given as a big integer.
    Poly powmod(Poly base, Integer e, const Poly& m) const {
        Poly result{1};
        base = rem(base, m);
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) result = rem(mul(result, base), m);
            e >>= 1;
            if (e > 0) base = rem(mul(base, base), m);
        }
        return result;
    }

    /// g(x) with g(x)^p = a(x); requires a to be a polynomial in x^p.
    Poly pth_root(const Poly& a) const {
        Poly r;
        for (std::size_t i = 0; i < a.size(); i += static_cast<std::size_t>(p_)) r.push_back(a[i]);
        trim(r);
        return r;
    }

private:
    std::int64_t p_;
};

inline bool is_one(const Poly& a) { return a.size() == 1 && a[0] == 1; }

/// Squarefree factorization of a monic polynomial: pairs (factor, multiplicity).
inline std::vector<std::pair<Poly, int>> squarefree_factorization(const Field& fp, const Poly& f) {
    std::vector<std::pair<Poly, int>> out;
    if (Field::degree(f) < 1) return out;
    Poly d = fp.derivative(f);
    if (d.empty()) {
        for (auto& [g, m] : squarefree_factorization(fp, fp.pth_root(f))) out.emplace_back(g, m * static_cast<int>(fp.p()));
        return out;
    }
    Poly c = fp.gcd(f, d);
    Poly w = fp.quo(f, c);
    int i = 1;
    while (!is_one(w)) {
        Poly y = fp.gcd(w, c);
        Poly fac = fp.quo(w, y);
        if (!is_one(fac)) out.emplace_back(fp.monic(fac), i);
        ++i;
        w = std::move(y);
        c = fp.quo(c, w);
    }
    if (!is_one(c)) {
        for (auto& [g, m] : squarefree_factorization(fp, fp.pth_root(c))) out.emplace_back(g, m * static_cast<int>(fp.p()));
    }
    return out;
}

/// Degrees of the irreducible factors of a squarefree monic polynomial.
inline std::vector<int> distinct_degree_degrees(const Field& fp, Poly g) {
    std::vector<int> out;
    const Poly x{0, 1};
    Poly h = fp.rem(x, g);
    for (int d = 1; 2 * d <= Field::degree(g); ++d) {
        h = fp.powmod(h, Integer(static_cast<long>(fp.p())), g);
        Poly common = fp.gcd(g, fp.sub(h, x));
        if (!is_one(common)) {
            for (int j = 0; j < Field::degree(common) / d; ++j) out.push_back(d);
            g = fp.quo(g, common);
            h = fp.rem(h, g);
        }
    }
    if (Field::degree(g) >= 1) out.push_back(Field::degree(g));
    return out;
}

}  // namespace modp

/// Multiset (sorted ascending) of irreducible-factor degrees of F mod p,
/// repeated factors listed with multiplicity.
inline std::vector<int> modp_factor_degrees(const IntPolynomial& F, std::int64_t p) {
    const modp::Field fp(p);
    modp::Poly f = fp.from(F);
    if (f.empty()) throw std::invalid_argument("modp_factor_degrees: polynomial vanishes mod p");
    f = fp.monic(std::move(f));
    std::vector<int> out;
    for (const auto& [factor, mult] : modp::squarefree_factorization(fp, f)) {
        for (int d : modp::distinct_degree_degrees(fp, factor))
            for (int j = 0; j < mult; ++j) out.push_back(d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_irreducible_mod(const IntPolynomial& F, std::int64_t p) {
    if (F.degree() < 1) return false;
    if (mpz_divisible_ui_p(F.leading().get_mpz_t(), static_cast<unsigned long>(p))) return false;
    const auto degs = modp_factor_degrees(F, p);
    return degs.size() == 1 && degs[0] == F.degree();
}

}  // namespace arboreal

#endif
