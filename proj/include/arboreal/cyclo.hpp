#ifndef ARBOREAL_CYCLO_HPP
#define ARBOREAL_CYCLO_HPP

// lambda = 2 cos(2 pi / m) and its classification.

#include "arboreal/analyze.hpp"
#include "arboreal/poly.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace arboreal {

inline long euler_phi(long m) {
    if (m < 1) throw std::invalid_argument("euler_phi: m must be positive");
    long result = m;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

/// Phi_m from x^m - 1 divided by Phi_d over the proper divisors d of m.
inline IntPolynomial cyclotomic_polynomial(long m) {
    if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
    static std::mutex mutex;
    static std::map<long, IntPolynomial> memo;
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(m); it != memo.end()) return it->second;
    }
    IntPolynomial p = IntPolynomial::monomial(1, static_cast<std::size_t>(m)) - IntPolynomial::constant(1);
    for (long d = 1; d < m; ++d)
        if (m % d == 0) p = exact_quotient(p, cyclotomic_polynomial(d));
    std::lock_guard lock(mutex);
    return memo.emplace(m, std::move(p)).first->second;
}

/// Minimal polynomial of 2 cos(2 pi / m).  For m > 2 it is the Psi with
/// x^h Psi(x + 1/x) = Phi_m(x), h = phi(m)/2, recovered from the top down.
inline IntPolynomial real_cyclotomic_min_poly(long m) {
    if (m < 1) throw std::invalid_argument("real_cyclotomic_min_poly: m must be positive");
    if (m == 1) return IntPolynomial::ascending({-2, 1});
    if (m == 2) return IntPolynomial::ascending({2, 1});
    IntPolynomial rest = cyclotomic_polynomial(m);
    const std::size_t h = static_cast<std::size_t>(rest.degree() / 2);
    const IntPolynomial x2p1 = IntPolynomial::ascending({1, 0, 1});
    std::vector<Integer> psi(h + 1);
    for (std::size_t j = h + 1; j-- > 0;) {
        psi[j] = rest.coeff(h + j);
        if (psi[j] != 0) rest -= pow(x2p1, static_cast<unsigned>(j)).shift_up(h - j) * psi[j];
    }
    if (!rest.is_zero()) throw std::logic_error("real_cyclotomic_min_poly: Phi_m is not palindromic");
    return IntPolynomial(std::move(psi));
}

/// Degree of lambda^2 over Q: 1 for m <= 4, else phi(m)/4 when 4 | m and
/// phi(m)/2 otherwise.
inline long expected_squares_degree(long m) {
    if (m <= 4) return 1;
    const long phi = euler_phi(m);
    return m % 4 == 0 ? phi / 4 : phi / 2;
}

struct CycloReport {
    long m = 0;
    IntPolynomial psi;
    IntPolynomial F;
    long n = 0;
    long expected_n = 0;
    AnalysisReport analysis;
};

inline CycloReport classify_cyclotomic(long m, const SearchBudget& budget = {}) {
    CycloReport r;
    r.m = m;
    r.psi = real_cyclotomic_min_poly(m);
    r.F = squares_min_poly(r.psi);
    r.n = r.F.degree();
    r.expected_n = expected_squares_degree(m);
    if (r.n != r.expected_n) throw std::logic_error("classify_cyclotomic: degree of lambda^2 disagrees with phi(m)");
    r.analysis = analyze(r.F, budget);
    return r;
}

}  // namespace arboreal

#endif
