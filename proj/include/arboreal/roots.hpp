#ifndef ARBOREAL_ROOTS_HPP
#define ARBOREAL_ROOTS_HPP

// Real root isolation by Sturm sequences over exact rationals.

#include "arboreal/poly.hpp"

#include <stdexcept>
#include <vector>

namespace arboreal {

struct RationalInterval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo < x && x < hi; }
    bool contains(const RationalInterval& o) const { return lo <= o.lo && o.hi <= hi; }
    friend bool operator==(const RationalInterval&, const RationalInterval&) = default;
};

/// 1 + max|c_i| / |c_lead|, rounded up.  Every complex root is strictly
/// smaller in absolute value.
inline Integer cauchy_bound(const IntPolynomial& f) {
    if (f.degree() < 1) return Integer(1);
    Integer m = 0;
    for (int i = 0; i < f.degree(); ++i) {
        Integer a = abs(f.coeff(static_cast<std::size_t>(i)));
        if (a > m) m = a;
    }
    Integer lc = abs(f.leading());
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), m.get_mpz_t(), lc.get_mpz_t());
    return q + 1;
}

class SturmChain {
public:
    explicit SturmChain(const IntPolynomial& f) {
        if (f.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
        chain_.push_back(f);
        IntPolynomial d = f.derivative();
        if (d.is_zero()) return;
        // Keep the sign of f': primitive_part() would make it positive.
        chain_.push_back(sgn(d.leading()) < 0 ? -d.primitive_part() : d.primitive_part());
        for (;;) {
            const IntPolynomial& a = chain_[chain_.size() - 2];
            const IntPolynomial& b = chain_.back();
            IntPolynomial r = pseudo_remainder(a, b);
            if (r.is_zero()) break;
            // prem carries lc(b)^(delta+1); undo its sign, then negate.
            const int delta = a.degree() - b.degree();
            const bool flip = sgn(b.leading()) < 0 && ((delta + 1) % 2 == 1);
            IntPolynomial next = r.primitive_part();
            // primitive_part forces a positive leading coefficient; restore
            // the true sign of -rem(a, b).
            const int true_sign = -sgn(r.leading()) * (flip ? -1 : 1);
            if (true_sign < 0) next = -next;
            chain_.push_back(std::move(next));
        }
    }

    int variations(const Rational& x) const {
        int count = 0;
        int last = 0;
        for (const auto& p : chain_) {
            int s = sign_at(p, x);
            if (s == 0) continue;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    }

    /// Distinct real roots in (a, b].
    int count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

    const std::vector<IntPolynomial>& polynomials() const { return chain_; }

private:
    std::vector<IntPolynomial> chain_;
};

namespace detail {

/// A point strictly inside (a, b) where f does not vanish: the midpoint if
/// possible, otherwise odd multiples of 1/4, 1/8, ... of the way across.
inline Rational nonroot_split(const IntPolynomial& f, const Rational& a, const Rational& b) {
    const Rational w = b - a;
    for (unsigned level = 1;; ++level) {
        Rational denom = Rational(Integer(1) << level);
        for (Integer j = 1; j < (Integer(1) << level); j += 2) {
            Rational t = Rational(j) / denom;
            Rational x = a + w * t;
            if (sign_at(f, x) != 0) return x;
        }
    }
}

}  // namespace detail

/// Isolating intervals for the positive real roots of a squarefree
/// polynomial, sorted ascending.  Each interval (lo, hi) has lo > 0, contains
/// exactly one root, and f is nonzero at both endpoints.
inline std::vector<RationalInterval> isolate_positive_roots(const IntPolynomial& f_in) {
    if (f_in.is_zero()) throw std::invalid_argument("isolate_positive_roots: zero polynomial");
    if (!is_squarefree(f_in)) throw std::invalid_argument("isolate_positive_roots: polynomial is not squarefree");
    const IntPolynomial f = f_in.shift_down(f_in.x_valuation());
    if (f.degree() < 1) return {};

    const SturmChain sturm(f);
    const Rational bound(cauchy_bound(f));
    std::vector<RationalInterval> out;

    struct Pending {
        Rational lo, hi;
        int roots;
    };
    std::vector<Pending> stack;
    const int total = sturm.count(Rational(0), bound);
    if (total > 0) stack.push_back({Rational(0), bound, total});
    while (!stack.empty()) {
        Pending cur = stack.back();
        stack.pop_back();
        if (cur.roots == 1) {
            out.push_back({cur.lo, cur.hi});
            continue;
        }
        Rational mid = detail::nonroot_split(f, cur.lo, cur.hi);
        int left = sturm.count(cur.lo, mid);
        int right = cur.roots - left;
        if (right > 0) stack.push_back({mid, cur.hi, right});
        if (left > 0) stack.push_back({cur.lo, mid, left});
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.lo < y.lo; });

    // Lift a zero lower endpoint off the origin.
    for (auto& iv : out) {
        while (iv.lo == 0) {
            Rational mid = detail::nonroot_split(f, iv.lo, iv.hi);
            if (sturm.count(mid, iv.hi) == 1)
                iv.lo = mid;
            else
                iv.hi = mid;
        }
    }
    return out;
}

/// Bisects an isolating interval until its width is below `width`.  Returns
/// the interval unchanged when it is already no wider than `width`.
inline RationalInterval refine_interval(const IntPolynomial& f, RationalInterval iv, const Rational& width) {
    if (width <= 0) throw std::invalid_argument("refine_interval: width must be positive");
    int slo = sign_at(f, iv.lo);
    int shi = sign_at(f, iv.hi);
    if (!(iv.lo < iv.hi) || slo == 0 || shi == 0 || slo == shi)
        throw std::invalid_argument("refine_interval: interval does not bracket a sign change");
    if (iv.width() <= width) return iv;
    while (iv.width() >= width) {
        Rational mid = (iv.lo + iv.hi) / 2;
        int s = sign_at(f, mid);
        if (s == 0) {
            // Exact dyadic root: centre a small dyadic interval on it.
            Rational eps = iv.width() / 4;
            while (2 * eps >= width) eps /= 2;
            return {mid - eps, mid + eps};
        }
        if (s == slo)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
    return iv;
}

}  // namespace arboreal

#endif
