#ifndef ARBOREAL_POLY_HPP
#define ARBOREAL_POLY_HPP

// Dense univariate polynomials with arbitrary-precision integer coefficients.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace arboreal {

using Integer = mpz_class;
using Rational = mpq_class;

inline int sign_of(const Integer& z) { return sgn(z); }
inline int sign_of(const Rational& q) { return sgn(q); }

/// Integer polynomial stored in ascending degree order.  The zero
/// polynomial is the empty coefficient vector; otherwise the last stored
/// coefficient is nonzero.
class IntPolynomial {
public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) {
        normalize();
    }

    static IntPolynomial ascending(std::initializer_list<long> c) {
        std::vector<Integer> v;
        v.reserve(c.size());
        for (long x : c) v.emplace_back(x);
        return IntPolynomial(std::move(v));
    }

    /// Highest degree first, the way polynomials are usually written.
    static IntPolynomial descending(std::initializer_list<long> c) {
        std::vector<Integer> v;
        v.reserve(c.size());
        for (long x : c) v.emplace_back(x);
        std::reverse(v.begin(), v.end());
        return IntPolynomial(std::move(v));
    }

    static IntPolynomial constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

    static IntPolynomial monomial(const Integer& c, std::size_t e) {
        std::vector<Integer> v(e + 1);
        v[e] = c;
        return IntPolynomial(std::move(v));
    }

    /// x - r
    static IntPolynomial linear_root(const Integer& r) {
        return IntPolynomial(std::vector<Integer>{-r, Integer(1)});
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
    bool is_constant() const { return coeffs_.size() <= 1; }

    std::span<const Integer> coefficients() const { return coeffs_; }
    const std::vector<Integer>& coefficient_vector() const { return coeffs_; }

    Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

    const Integer& leading() const {
        if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
        return coeffs_.back();
    }

    /// Horner evaluation at an integer point.
    Integer operator()(const Integer& x) const {
        Integer acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc *= x;
            acc += *it;
        }
        return acc;
    }

    Rational operator()(const Rational& x) const {
        // Evaluate num^d * F(num/den) * den^d to keep everything integral.
        if (is_zero()) return Rational(0);
        const Integer& p = x.get_num();
        const Integer& q = x.get_den();
        Integer acc = 0;
        Integer qpow = 1;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * p + *it * qpow;
            qpow *= q;
        }
        // acc = sum c_i p^i q^(d-i); qpow = q^(d+1)
        Rational r(acc, Integer(qpow / q));
        r.canonicalize();
        return r;
    }

    IntPolynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<Integer> d(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
        return IntPolynomial(std::move(d));
    }

    /// Nonnegative gcd of the coefficients (0 for the zero polynomial).
    Integer content() const {
        Integer g = 0;
        for (const auto& c : coeffs_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g == 1) break;
        }
        return g;
    }

    /// Divides out the content and makes the leading coefficient positive.
    IntPolynomial primitive_part() const {
        if (is_zero()) return {};
        Integer g = content();
        if (sgn(leading()) < 0) g = -g;
        std::vector<Integer> v(coeffs_.size());
        for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
        return IntPolynomial(std::move(v));
    }

    /// p(-x)
    IntPolynomial reflect() const {
        auto v = coeffs_;
        for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
        return IntPolynomial(std::move(v));
    }

    /// p(x^2)
    IntPolynomial substitute_square() const {
        if (is_zero()) return {};
        std::vector<Integer> v(2 * coeffs_.size() - 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) v[2 * i] = coeffs_[i];
        return IntPolynomial(std::move(v));
    }

    /// x^deg * p(1/x)
    IntPolynomial reversed() const {
        auto v = coeffs_;
        std::reverse(v.begin(), v.end());
        return IntPolynomial(std::move(v));
    }

    /// Largest v with x^v | p (0 for the zero polynomial).
    std::size_t x_valuation() const {
        std::size_t v = 0;
        while (v < coeffs_.size() && coeffs_[v] == 0) ++v;
        return is_zero() ? 0 : v;
    }

    IntPolynomial shift_down(std::size_t v) const {
        if (v >= coeffs_.size()) return {};
        return IntPolynomial(std::vector<Integer>(coeffs_.begin() + static_cast<std::ptrdiff_t>(v), coeffs_.end()));
    }

    IntPolynomial shift_up(std::size_t v) const {
        if (is_zero()) return {};
        std::vector<Integer> out(v);
        out.insert(out.end(), coeffs_.begin(), coeffs_.end());
        return IntPolynomial(std::move(out));
    }

    IntPolynomial& operator+=(const IntPolynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        normalize();
        return *this;
    }

    IntPolynomial& operator-=(const IntPolynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        normalize();
        return *this;
    }

    IntPolynomial& operator*=(const Integer& s) {
        if (s == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& c : coeffs_) c *= s;
        return *this;
    }

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, const Integer& s) { return a *= s; }
    friend IntPolynomial operator*(const Integer& s, IntPolynomial a) { return a *= s; }
    friend IntPolynomial operator-(IntPolynomial a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
            }
        }
        return IntPolynomial(std::move(v));
    }

    IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Integer> coeffs_;
};

inline IntPolynomial pow(const IntPolynomial& base, unsigned e) {
    IntPolynomial result = IntPolynomial::constant(1);
    IntPolynomial b = base;
    while (e) {
        if (e & 1u) result *= b;
        e >>= 1u;
        if (e) b *= b;
    }
    return result;
}

struct DivRem {
    IntPolynomial quotient;
    IntPolynomial remainder;
};

/// Long division a = q*b + r with deg r < deg b.  Every step divides by
/// lc(b) exactly; a monic divisor always succeeds.  Throws
/// std::domain_error when the quotient would leave the integers.
inline DivRem divrem(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    if (a.degree() < b.degree()) return {IntPolynomial{}, a};
    std::vector<Integer> r(a.coefficients().begin(), a.coefficients().end());
    const auto bc = b.coefficients();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    const Integer& lb = b.leading();
    std::vector<Integer> q(r.size() - db);
    for (std::size_t i = r.size(); i-- > db;) {
        if (r[i] == 0) continue;
        if (!mpz_divisible_p(r[i].get_mpz_t(), lb.get_mpz_t()))
            throw std::domain_error("polynomial division is not exact over the integers");
        Integer t;
        mpz_divexact(t.get_mpz_t(), r[i].get_mpz_t(), lb.get_mpz_t());
        const std::size_t shift = i - db;
        for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[shift + j].get_mpz_t(), t.get_mpz_t(), bc[j].get_mpz_t());
        q[shift] = std::move(t);
    }
    r.resize(db);
    return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r))};
}

/// a / b, requiring zero remainder.
inline IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::domain_error("polynomial does not divide exactly");
    return q;
}

/// Remainder of a modulo a monic polynomial (always integral).
inline IntPolynomial reduce_mod(const IntPolynomial& a, const IntPolynomial& monic) {
    return divrem(a, monic).remainder;
}

/// lc(b)^(deg a - deg b + 1) * a  mod  b.
inline IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::invalid_argument("pseudo-division by the zero polynomial");
    if (a.degree() < b.degree()) return a;
    std::vector<Integer> r(a.coefficients().begin(), a.coefficients().end());
    const auto bc = b.coefficients();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    const Integer& lb = b.leading();
    int e = a.degree() - b.degree() + 1;
    while (r.size() > db) {
        if (r.back() == 0) {
            r.pop_back();
            continue;
        }
        const Integer lr = r.back();
        const std::size_t shift = r.size() - 1 - db;
        for (auto& c : r) c *= lb;
        for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[shift + j].get_mpz_t(), lr.get_mpz_t(), bc[j].get_mpz_t());
        r.pop_back();
        --e;
    }
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(std::max(e, 0)));
    IntPolynomial rem(std::move(r));
    return rem * scale;
}

/// Primitive gcd with positive leading coefficient, via the subresultant
/// pseudo-remainder sequence.  gcd(0, 0) is rejected.
inline IntPolynomial gcd(IntPolynomial a, IntPolynomial b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
    if (a.degree() < b.degree()) std::swap(a, b);
    if (b.is_zero()) return a.primitive_part();
    a = a.primitive_part();
    b = b.primitive_part();
    Integer g = 1;
    Integer h = 1;
    for (;;) {
        const int delta = a.degree() - b.degree();
        IntPolynomial r = pseudo_remainder(a, b);
        if (r.is_zero()) break;
        if (r.degree() == 0) return IntPolynomial::constant(1);
        a = std::move(b);
        Integer divisor;
        mpz_pow_ui(divisor.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
        divisor *= g;
        b = exact_quotient(r, IntPolynomial::constant(divisor));
        g = a.leading();
        if (delta > 0) {
            Integer gd, hd;
            mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
            mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd.get_mpz_t());
        }
    }
    return b.primitive_part();
}

/// a / gcd(a, a'), primitive with positive leading coefficient.
inline IntPolynomial squarefree_part(const IntPolynomial& a) {
    if (a.is_zero()) throw std::invalid_argument("squarefree part of the zero polynomial");
    if (a.degree() == 0) return IntPolynomial::constant(1);
    const IntPolynomial g = gcd(a, a.derivative());
    return exact_quotient(a.primitive_part(), g).primitive_part();
}

inline bool is_squarefree(const IntPolynomial& a) {
    if (a.degree() <= 0) return true;
    return gcd(a, a.derivative()).degree() == 0;
}

inline int sign_at_integer(const IntPolynomial& f, const Integer& k) { return sgn(f(k)); }
inline int sign_at(const IntPolynomial& f, const Rational& x) { return sgn(f(x)); }

/// d^(2 deg f) f(x / d^2): the minimal polynomial of (d*lambda)^2 when f is
/// that of lambda^2.
inline IntPolynomial scale_roots(const IntPolynomial& f, const Integer& factor) {
    auto c = f.coefficient_vector();
    const std::size_t n = c.size();
    Integer p = 1;
    for (std::size_t i = n; i-- > 0;) {
        c[i] *= p;
        p *= factor;
    }
    return IntPolynomial(std::move(c));
}

}  // namespace arboreal

#endif
