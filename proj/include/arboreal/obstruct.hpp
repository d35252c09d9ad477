#ifndef ARBOREAL_OBSTRUCT_HPP
#define ARBOREAL_OBSTRUCT_HPP

// Refutation evidence that lambda is not of arboreal height <= 2.

#include "arboreal/linalg.hpp"
#include "arboreal/modp.hpp"
#include "arboreal/poly.hpp"
#include "arboreal/spectrum.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace arboreal {

/// Three-adic data for lambda = zeta_48 + zeta_48^-1.  M is the matrix whose
/// columns are 1/(lambda^2 - j), j = 0..3, in the power basis
/// {1, lambda^2, lambda^4, lambda^6}.
struct Zeta48Report {
    std::int64_t k_max = 0;
    Rational y0;
    Integer detM;
    std::map<std::int64_t, Rational> bk0_values;
    bool all_three_integral = false;
    bool fk_one_mod_three = false;  // F(k) = 1 (mod 3) for every k in 0..k_max
};

struct NoInterlacing {
    std::size_t gap = 0;  // 1-based: no integer strictly between roots gap and gap+1
};

struct ModP {
    std::int64_t p = 0;
    int degree = 0;
};

struct ThreeAdicZeta48 {
    Zeta48Report report;
};

struct Obstruction {
    std::variant<NoInterlacing, ModP, ThreeAdicZeta48> kind;
    std::string detail;

    bool is_no_interlacing() const { return std::holds_alternative<NoInterlacing>(kind); }
    bool is_mod_p() const { return std::holds_alternative<ModP>(kind); }
    bool is_three_adic() const { return std::holds_alternative<ThreeAdicZeta48>(kind); }
};

inline IntPolynomial zeta48_squares_polynomial() { return IntPolynomial::descending({1, -8, 20, -16, 1}); }

/// First prime p < deg F (ascending) modulo which F has an irreducible factor
/// of degree > p; the reported degree is the largest such factor.
inline std::optional<ModP> modp_obstruction(const IntPolynomial& F) {
    for (std::int64_t p = 2; p < F.degree(); ++p) {
        if (!is_prime(p)) continue;
        if (mpz_divisible_ui_p(F.leading().get_mpz_t(), static_cast<unsigned long>(p))) continue;
        const auto degs = modp_factor_degrees(F, p);
        if (!degs.empty() && degs.back() > p) return ModP{p, degs.back()};
    }
    return std::nullopt;
}

inline Obstruction make_obstruction(const ModP& m) {
    return {m, "F mod " + std::to_string(m.p) + " has an irreducible factor of degree " + std::to_string(m.degree) +
                   " > " + std::to_string(m.p)};
}

inline std::optional<Obstruction> no_interlacing_obstruction(const SquaresSpectrum& spec) {
    for (std::size_t gap = 1; gap < spec.degree(); ++gap) {
        if (!least_integer_in_gap(spec, gap)) {
            return Obstruction{NoInterlacing{gap}, "no integer lies strictly between lambda_" + std::to_string(gap) +
                                                       "^2 and lambda_" + std::to_string(gap + 1) + "^2"};
        }
    }
    return std::nullopt;
}

namespace detail {

/// Power-basis coordinates of 1/(y - k) modulo F: -Q_k(y)/F(k) with
/// F(y) - F(k) = (y - k) Q_k(y).
inline std::vector<Rational> inverse_shift_coordinates(const IntPolynomial& F, std::int64_t k) {
    const Integer kz(static_cast<long>(k));
    const Integer fk = F(kz);
    if (fk == 0) throw std::logic_error("zeta48: F(k) vanished");
    const IntPolynomial q = exact_quotient(F - IntPolynomial::constant(fk), IntPolynomial::linear_root(kz));
    std::vector<Rational> out(static_cast<std::size_t>(F.degree()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = Rational(-q.coeff(i), fk);
        out[i].canonicalize();
    }
    return out;
}

inline bool three_integral(const Rational& q) { return !mpz_divisible_ui_p(q.get_den_mpz_t(), 3); }

}  // namespace detail

inline Zeta48Report zeta48_three_adic_report(std::int64_t k_max) {
    if (k_max < 4) throw std::invalid_argument("zeta48_three_adic_report: k_max must be at least 4");
    const IntPolynomial F = zeta48_squares_polynomial();
    RationalMatrix M(4, std::vector<Rational>(4));
    for (std::size_t j = 0; j < 4; ++j) {
        const auto col = detail::inverse_shift_coordinates(F, static_cast<std::int64_t>(j));
        for (std::size_t r = 0; r < 4; ++r) M[r][j] = col[r];
    }
    Zeta48Report rep;
    rep.k_max = k_max;
    const Rational det = determinant(M);
    if (det.get_den() != 1) throw std::logic_error("zeta48: det(M) is not an integer");
    rep.detM = det.get_num();
    const std::vector<Rational> one{Rational(1), Rational(0), Rational(0), Rational(0)};
    rep.y0 = determinant(with_column(M, 0, one)) / det;

    rep.all_three_integral = true;
    for (std::int64_t k = 4; k <= k_max; ++k) {
        const auto ck = detail::inverse_shift_coordinates(F, k);
        Rational b = determinant(with_column(M, 0, ck)) / det;
        if (!detail::three_integral(b)) rep.all_three_integral = false;
        rep.bk0_values.emplace(k, std::move(b));
    }
    rep.fk_one_mod_three = true;
    for (std::int64_t k = 0; k <= k_max; ++k) {
        Integer r;
        mpz_fdiv_r_ui(r.get_mpz_t(), F(Integer(static_cast<long>(k))).get_mpz_t(), 3);
        if (r != 1) rep.fk_one_mod_three = false;
    }
    return rep;
}

/// The three-adic refutation applies when y0 has 3 in its denominator while
/// every b_k^(0) is 3-integral.
inline bool refutes(const Zeta48Report& r) {
    return r.all_three_integral && mpz_divisible_ui_p(r.y0.get_den_mpz_t(), 3);
}

inline Obstruction make_obstruction(Zeta48Report rep) {
    std::string detail = "y0 = " + rep.y0.get_str() + " is not 3-integral, while b_k^(0) is 3-integral for k = 4.." +
                         std::to_string(rep.k_max) + " (det M = " + rep.detM.get_str() + ")";
    return {ThreeAdicZeta48{std::move(rep)}, std::move(detail)};
}

}  // namespace arboreal

#endif
