#ifndef ARBOREAL_SPECTRUM_HPP
#define ARBOREAL_SPECTRUM_HPP

// The squared spectrum lambda_1^2 < ... < lambda_n^2 and interlacing sets.

#include "arboreal/poly.hpp"
#include "arboreal/roots.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace arboreal {

enum class Side { left, right };

inline const char* to_string(Side s) { return s == Side::left ? "left" : "right"; }

/// Integers k_1 < ... < k_n woven between the roots of F.  Left sets start
/// below the smallest root, right sets end above the largest.
struct InterlacingSet {
    std::vector<std::int64_t> ks;
    Side side = Side::left;

    std::size_t size() const { return ks.size(); }
    friend bool operator==(const InterlacingSet&, const InterlacingSet&) = default;
};

/// Minimal polynomial of lambda^2 given the minimal polynomial f of lambda:
/// the squarefree part of G, where G(x^2) = (-1)^deg f * f(x) f(-x).
inline IntPolynomial squares_min_poly(const IntPolynomial& f) {
    if (!f.is_monic()) throw std::invalid_argument("squares_min_poly: polynomial must be monic");
    IntPolynomial h = f * f.reflect();
    if (f.degree() % 2 == 1) h = -h;
    std::vector<Integer> even;
    const auto c = h.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i % 2 == 1) {
            if (c[i] != 0) throw std::logic_error("squares_min_poly: f(x)f(-x) is not even");
        } else {
            even.push_back(c[i]);
        }
    }
    return squarefree_part(IntPolynomial(std::move(even)));
}

/// Sign pattern test for an interlacing set: with F monic of degree n,
/// sign F(k_i) must be (-1)^(n-i+1) for a left set and (-1)^(n-i) for a
/// right set (i counted from 1).
inline bool is_interlacing(const IntPolynomial& F, const InterlacingSet& s) {
    const std::size_t n = static_cast<std::size_t>(F.degree());
    if (s.ks.size() != n || n == 0) return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (s.ks[i] < 0) return false;
        if (i > 0 && s.ks[i] <= s.ks[i - 1]) return false;
        const std::size_t above = s.side == Side::left ? n - i : n - i - 1;
        const int want = above % 2 == 0 ? 1 : -1;
        if (sign_at_integer(F, Integer(static_cast<long>(s.ks[i]))) != want) return false;
    }
    return true;
}

class SquaresSpectrum {
public:
    SquaresSpectrum(IntPolynomial F, std::vector<RationalInterval> roots)
        : F_(std::move(F)), roots_(std::move(roots)) {}

    const IntPolynomial& polynomial() const { return F_; }
    std::size_t degree() const { return roots_.size(); }
    const std::vector<RationalInterval>& roots() const { return roots_; }
    const RationalInterval& root(std::size_t i) const { return roots_.at(i); }

    /// Exact sign of (root_i - k), root index 0-based.
    int compare_root(std::size_t i, std::int64_t k) const {
        const auto& iv = roots_.at(i);
        const Rational kq(static_cast<long>(k));
        if (kq <= iv.lo) return 1;
        if (kq >= iv.hi) return -1;
        const int s = sign_at_integer(F_, Integer(static_cast<long>(k)));
        if (s == 0) return 0;
        return s == sign_at(F_, iv.lo) ? 1 : -1;
    }

    /// Least integer strictly greater than root_i.
    std::int64_t least_integer_above(std::size_t i) const {
        Integer fl;
        mpz_fdiv_q(fl.get_mpz_t(), roots_.at(i).lo.get_num_mpz_t(), roots_.at(i).lo.get_den_mpz_t());
        std::int64_t k = fl.get_si();
        while (compare_root(i, k) >= 0) ++k;
        return k;
    }

    /// Greatest integer strictly less than root_i.
    std::int64_t greatest_integer_below(std::size_t i) const {
        Integer cl;
        mpz_cdiv_q(cl.get_mpz_t(), roots_.at(i).hi.get_num_mpz_t(), roots_.at(i).hi.get_den_mpz_t());
        std::int64_t k = cl.get_si();
        while (compare_root(i, k) <= 0) --k;
        return k;
    }

    bool has_integer_root() const {
        for (std::size_t i = 0; i < roots_.size(); ++i) {
            std::int64_t k = least_integer_above(i) - 1;
            if (compare_root(i, k) == 0) return true;
        }
        return false;
    }

private:
    IntPolynomial F_;
    std::vector<RationalInterval> roots_;
};

/// Builds the squared spectrum of a monic squarefree F whose roots are all
/// real and positive.  Each isolating interval is shrunk until its interior
/// holds no integer other than an integer root.
inline SquaresSpectrum squared_spectrum(const IntPolynomial& F) {
    if (F.degree() < 1) throw std::invalid_argument("squared_spectrum: polynomial must have positive degree");
    if (!F.is_monic()) throw std::invalid_argument("squared_spectrum: polynomial must be monic");
    if (!is_squarefree(F)) throw std::invalid_argument("squared_spectrum: polynomial is not squarefree");
    auto roots = isolate_positive_roots(F);
    if (static_cast<int>(roots.size()) != F.degree())
        throw std::invalid_argument("squared_spectrum: polynomial has a non-real or non-positive root");
    const Rational limit(Integer(std::numeric_limits<std::int64_t>::max() / 4));
    for (auto& iv : roots) {
        if (iv.hi > limit) {
            iv = refine_interval(F, iv, Rational(1));
            if (iv.hi > limit) throw std::invalid_argument("squared_spectrum: root too large for 64-bit keys");
        }
        const int slo = sign_at(F, iv.lo);
        for (;;) {
            Integer k;
            mpz_fdiv_q(k.get_mpz_t(), iv.lo.get_num_mpz_t(), iv.lo.get_den_mpz_t());
            ++k;
            if (!(Rational(k) < iv.hi)) break;
            const int s = sign_at_integer(F, k);
            if (s == 0) {
                // Integer root: keep a half-unit window around it.
                Rational lo = Rational(k) - Rational(1, 2);
                Rational hi = Rational(k) + Rational(1, 2);
                if (lo > iv.lo) iv.lo = lo;
                if (hi < iv.hi) iv.hi = hi;
                break;
            }
            if (s == slo)
                iv.lo = Rational(k);
            else
                iv.hi = Rational(k);
        }
    }
    return SquaresSpectrum(F, std::move(roots));
}

/// Least integer k with lambda_gap^2 < k < lambda_{gap+1}^2; gaps are
/// numbered 1..n-1.
inline std::optional<std::int64_t> least_integer_in_gap(const SquaresSpectrum& spec, std::size_t gap) {
    if (gap < 1 || gap >= spec.degree()) throw std::out_of_range("least_integer_in_gap: gap index out of range");
    const std::int64_t k = spec.least_integer_above(gap - 1);
    if (spec.compare_root(gap, k) > 0) return k;
    return std::nullopt;
}

/// Canonical interlacing set built from the smallest admissible integers.
inline std::optional<InterlacingSet> find_interlacing(const SquaresSpectrum& spec, Side side) {
    const std::size_t n = spec.degree();
    InterlacingSet out{{}, side};
    out.ks.reserve(n);
    if (side == Side::left) out.ks.push_back(0);
    for (std::size_t gap = 1; gap < n; ++gap) {
        auto k = least_integer_in_gap(spec, gap);
        if (!k) return std::nullopt;
        out.ks.push_back(*k);
    }
    if (side == Side::right) out.ks.push_back(spec.least_integer_above(n - 1));
    return out;
}

struct EnumBudget {
    std::int64_t max_k = 0;
    std::size_t max_sets = 5000;
};

/// Inclusive integer ranges available to each position of an interlacing set.
inline std::optional<std::vector<std::pair<std::int64_t, std::int64_t>>> interlacing_ranges(
    const SquaresSpectrum& spec, Side side, std::int64_t max_k) {
    const std::size_t n = spec.degree();
    std::vector<std::pair<std::int64_t, std::int64_t>> r;
    r.reserve(n);
    if (side == Side::left) r.emplace_back(0, spec.greatest_integer_below(0));
    for (std::size_t i = 0; i + 1 < n; ++i)
        r.emplace_back(spec.least_integer_above(i), spec.greatest_integer_below(i + 1));
    if (side == Side::right) r.emplace_back(spec.least_integer_above(n - 1), max_k);
    for (auto& [lo, hi] : r) {
        hi = std::min(hi, max_k);
        if (lo > hi) return std::nullopt;
    }
    return r;
}

/// All interlacing sets with entries <= max_k in lexicographic order of
/// (k_n, ..., k_1), truncated at max_sets.
inline std::vector<InterlacingSet> enumerate_interlacing(const SquaresSpectrum& spec, Side side, const EnumBudget& budget) {
    std::vector<InterlacingSet> out;
    const auto ranges = interlacing_ranges(spec, side, budget.max_k);
    if (!ranges || budget.max_sets == 0) return out;
    const std::size_t n = ranges->size();
    std::vector<std::int64_t> cur(n);
    for (std::size_t i = 0; i < n; ++i) cur[i] = (*ranges)[i].first;
    for (;;) {
        InterlacingSet s{cur, side};
        if (!is_interlacing(spec.polynomial(), s)) throw std::logic_error("enumerate_interlacing: emitted an invalid set");
        out.push_back(std::move(s));
        if (out.size() >= budget.max_sets) break;
        // Odometer with k_1 fastest.
        std::size_t pos = 0;
        while (pos < n && cur[pos] == (*ranges)[pos].second) {
            cur[pos] = (*ranges)[pos].first;
            ++pos;
        }
        if (pos == n) break;
        ++cur[pos];
    }
    return out;
}

}  // namespace arboreal

#endif
