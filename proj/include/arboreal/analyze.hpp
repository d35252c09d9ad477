#ifndef ARBOREAL_ANALYZE_HPP
#define ARBOREAL_ANALYZE_HPP

// Verdicts on lambda: height <= 1, in A_2 with a certificate, refuted by an
// obstruction, or unknown within the search budget.

#include "arboreal/certify.hpp"
#include "arboreal/modp.hpp"
#include "arboreal/obstruct.hpp"
#include "arboreal/spectrum.hpp"

#include <chrono>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace arboreal {

struct HeightAtMost1 {};
struct InA2 {
    Certificate certificate;
};
struct NotInA2 {
    std::vector<Obstruction> obstructions;
};
struct Unknown {
    std::string summary;
};

using Verdict = std::variant<HeightAtMost1, InA2, NotInA2, Unknown>;

inline const char* verdict_tag(const Verdict& v) {
    switch (v.index()) {
        case 0: return "height_at_most_1";
        case 1: return "in_a2";
        case 2: return "not_in_a2";
        default: return "unknown";
    }
}

struct Diagnostics {
    std::string path;  // which procedure produced the verdict
    std::string irreducibility;
    std::size_t sets_tried = 0;
    std::vector<Integer> gcd_trajectory;
    std::optional<Integer> delta_phase_gcd;
    std::size_t combinations_added = 0;
    bool timed_out = false;
    double elapsed_seconds = 0;
};

struct AnalysisReport {
    IntPolynomial F;
    std::vector<RationalInterval> roots;
    std::optional<InterlacingSet> left;
    std::optional<InterlacingSet> right;
    Verdict verdict;
    Diagnostics diagnostics;

    bool in_a2() const { return std::holds_alternative<InA2>(verdict); }
    bool not_in_a2() const { return std::holds_alternative<NotInA2>(verdict); }
    bool unknown() const { return std::holds_alternative<Unknown>(verdict); }
    const Certificate* certificate() const {
        const auto* p = std::get_if<InA2>(&verdict);
        return p ? &p->certificate : nullptr;
    }
    const std::vector<Obstruction>* obstructions() const {
        const auto* p = std::get_if<NotInA2>(&verdict);
        return p ? &p->obstructions : nullptr;
    }
};

/// Irreducibility status for a monic F without integer roots: degree <= 3
/// settles it; otherwise look for a prime p <= 100 modulo which F stays
/// irreducible.
inline std::string irreducibility_status(const IntPolynomial& F) {
    if (F.degree() <= 1) return "certified (linear)";
    if (F.degree() <= 3) return "certified (degree <= 3, no rational root)";
    for (std::int64_t p = 2; p <= 100; ++p)
        if (is_prime(p) && is_irreducible_mod(F, p)) return "certified (irreducible mod " + std::to_string(p) + ")";
    return "assumed";
}

namespace detail {

inline void check_no_integer_root(const SquaresSpectrum& spec) {
    if (spec.has_integer_root()) throw std::invalid_argument("F has an integer root, so it is not irreducible");
}

inline AnalysisReport skeleton(const SquaresSpectrum& spec) {
    AnalysisReport r;
    r.F = spec.polynomial();
    for (const auto& iv : spec.roots()) r.roots.push_back(refine_interval(r.F, iv, Rational(1, 1 << 20)));
    r.left = find_interlacing(spec, Side::left);
    r.right = find_interlacing(spec, Side::right);
    r.diagnostics.irreducibility = irreducibility_status(r.F);
    return r;
}

/// NoInterlacing first, then the mod-p scan; every obstruction found is kept.
inline std::vector<Obstruction> collect_obstructions(const SquaresSpectrum& spec) {
    std::vector<Obstruction> out;
    if (auto o = no_interlacing_obstruction(spec)) out.push_back(std::move(*o));
    if (auto m = modp_obstruction(spec.polynomial())) out.push_back(make_obstruction(*m));
    return out;
}

inline void record(Diagnostics& d, const MonoidState& s) {
    d.sets_tried = s.sets_tried;
    d.gcd_trajectory = s.gcd_trajectory;
    d.delta_phase_gcd = s.delta_phase_gcd;
    d.combinations_added = s.combinations_added;
    d.timed_out = s.timed_out;
}

/// Least k >= from with k == residue (mod modulus).
inline std::int64_t next_in_class(std::int64_t from, const Integer& residue, const Integer& modulus) {
    Integer diff = residue - to_integer(from);
    mpz_fdiv_r(diff.get_mpz_t(), diff.get_mpz_t(), modulus.get_mpz_t());
    if (!diff.fits_slong_p()) throw std::overflow_error("cubic: congruence class beyond 64-bit range");
    return from + diff.get_si();
}

}  // namespace detail

/// The cubic decision procedure.  With an interlacing set and a root of F
/// mod 2, right sets {k1, k1 + 1, k3} are added (k1 = floor(lambda_2^2)),
/// choosing k3 in a residue class that removes each prime of the running
/// gcd, next to the canonical left delta.
inline AnalysisReport cubic_analyze(const IntPolynomial& F) {
    if (F.degree() != 3) throw std::invalid_argument("cubic_analyze: F must have degree 3");
    const SquaresSpectrum spec = squared_spectrum(F);
    detail::check_no_integer_root(spec);
    AnalysisReport report = detail::skeleton(spec);
    report.diagnostics.path = "cubic";

    std::vector<Obstruction> obs;
    if (auto o = no_interlacing_obstruction(spec)) obs.push_back(std::move(*o));
    if (modp_factor_degrees(F, 2) == std::vector<int>{3}) obs.push_back(make_obstruction(ModP{2, 3}));
    if (!obs.empty()) {
        report.verdict = NotInA2{std::move(obs)};
        return report;
    }

    MonoidState state;
    state.add(signed_delta(F, weight_vector(F, *report.left)));
    ++state.sets_tried;
    const std::int64_t k1 = spec.greatest_integer_below(1);
    const std::int64_t k2 = k1 + 1;
    const std::int64_t above = spec.least_integer_above(2);
    auto add_right = [&](std::int64_t k3) {
        state.add(signed_delta(F, weight_vector(F, InterlacingSet{{k1, k2, k3}, Side::right})));
        ++state.sets_tried;
    };
    add_right(above);
    state.delta_phase_gcd = state.gcd_all;
    for (int round = 0; round < 64 && !state.reaches_one(); ++round) {
        for (const Integer& q : detail::small_prime_factors(state.gcd_all)) {
            if (q == 2) {
                // k_even - k3 == 2 (mod 4) where F(k_even) is even.
                const std::int64_t ke = mpz_even_p(F(to_integer(k1)).get_mpz_t()) ? k1 : k2;
                add_right(detail::next_in_class(above, to_integer(ke - 2), Integer(4)));
            } else {
                add_right(detail::next_in_class(above, to_integer(k1 + 2), q));
            }
        }
    }
    detail::record(report.diagnostics, state);
    auto cert = assemble_certificate(F, state);
    if (!cert) {
        report.verdict = Unknown{"cubic recipe did not reach gcd 1 (gcd " + state.gcd_all.get_str() + ")"};
        return report;
    }
    report.verdict = InA2{std::move(*cert)};
    return report;
}

enum class InputKind { lambda, lambda_squared };

/// Minimal polynomial of lambda^2 from the user's input.
inline IntPolynomial squares_polynomial(const IntPolynomial& input, InputKind kind) {
    if (!input.is_monic()) throw std::invalid_argument("input polynomial must be monic");
    if (input.degree() < 1) throw std::invalid_argument("input polynomial must have positive degree");
    if (kind == InputKind::lambda) return squares_min_poly(input);
    if (!is_squarefree(input)) throw std::invalid_argument("F is not squarefree");
    return input;
}

/// Full pipeline on F, the minimal polynomial of lambda^2.
inline AnalysisReport analyze(const IntPolynomial& F, const SearchBudget& budget = {}) {
    const auto start = std::chrono::steady_clock::now();
    auto finish = [&](AnalysisReport r) {
        r.diagnostics.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return r;
    };
    if (!F.is_monic()) throw std::invalid_argument("F must be monic");
    if (F.degree() == 1) {
        if (F.coeff(0) > 0) throw std::invalid_argument("lambda^2 is negative, so lambda is not real");
        AnalysisReport r;
        r.F = F;
        if (F.coeff(0) < 0) r.roots = squared_spectrum(F).roots();
        r.verdict = HeightAtMost1{};
        r.diagnostics.path = "degree one";
        r.diagnostics.irreducibility = irreducibility_status(F);
        return finish(std::move(r));
    }
    const SquaresSpectrum spec = squared_spectrum(F);
    detail::check_no_integer_root(spec);

    if (F.degree() == 3) return finish(cubic_analyze(F));

    AnalysisReport report = detail::skeleton(spec);
    auto obs = detail::collect_obstructions(spec);
    if (!obs.empty()) {
        report.diagnostics.path = "obstruction scan";
        report.verdict = NotInA2{std::move(obs)};
        return finish(std::move(report));
    }
    if (F.degree() == 2) {
        report.diagnostics.path = "quadratic";
        report.verdict = InA2{quadratic_certificate(F)};
        return finish(std::move(report));
    }
    if (F == zeta48_squares_polynomial()) {
        auto rep = zeta48_three_adic_report(100);
        if (refutes(rep)) {
            report.diagnostics.path = "three-adic";
            report.verdict = NotInA2{{make_obstruction(std::move(rep))}};
            return finish(std::move(report));
        }
    }
    report.diagnostics.path = "monoid search";
    const MonoidState state = monoid_search(spec, budget);
    detail::record(report.diagnostics, state);
    if (auto cert = assemble_certificate(F, state)) {
        report.verdict = InA2{std::move(*cert)};
    } else {
        std::string s = "no certificate within budget: " + std::to_string(state.sets_tried) + " sets, gcd " +
                        state.gcd_all.get_str();
        if (!(state.has_positive && state.has_negative)) s += ", one sign missing";
        if (state.timed_out) s += ", time limit reached";
        report.verdict = Unknown{std::move(s)};
    }
    return finish(std::move(report));
}

struct ScaledResult {
    Integer D;
    IntPolynomial scaled;  // minimal polynomial of (D lambda)^2
    Certificate certificate;
    std::optional<InterlacingSet> set;  // scaled left set when the scaling route was used
    bool via_engine = false;            // certificate found at D = 1 by analyze
};

/// A positive integer D with D lambda in A_2, with a verified certificate.
/// D = 1 when the analyzer already certifies lambda; otherwise
/// D = d * D' where d is the least factor giving a left set and D' is the
/// least integer whose square clears every denominator of that set's weight
/// vector.
inline ScaledResult scale_to_A2(const IntPolynomial& F, const SearchBudget& budget = {}) {
    if (F.degree() >= 2) {
        auto r = analyze(F, budget);
        if (const Certificate* c = r.certificate()) return {Integer(1), F, *c, std::nullopt, true};
    }
    for (long d = 1; d <= 100000; ++d) {
        const IntPolynomial Fd = scale_roots(F, Integer(d) * Integer(d));
        const SquaresSpectrum spec = squared_spectrum(Fd);
        auto left = find_interlacing(spec, Side::left);
        if (!left) continue;
        const WeightVector wv = weight_vector(Fd, *left);
        Integer need = 1;
        for (const auto& v : wv.v) mpz_lcm(need.get_mpz_t(), need.get_mpz_t(), v.get_den_mpz_t());
        // Least D' with need | D'^2: halve-up each prime exponent.
        Integer Dp = 1;
        for (const Integer& p : detail::small_prime_factors(need)) {
            const int e = detail::q_valuation(need, p);
            Integer pe;
            mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>((e + 1) / 2));
            Dp *= pe;
        }
        if (!Dp.fits_slong_p()) throw std::overflow_error("scale_to_A2: scale factor too large");
        const Integer D2 = Dp * Dp;
        ScaledResult out;
        out.D = Integer(d) * Dp;
        out.scaled = scale_roots(F, out.D * out.D);
        InterlacingSet scaled_set{{}, Side::left};
        out.certificate.F = out.scaled;
        for (std::size_t i = 0; i < left->ks.size(); ++i) {
            const Integer key = D2 * to_integer(left->ks[i]);
            if (!key.fits_slong_p()) throw std::overflow_error("scale_to_A2: key too large");
            scaled_set.ks.push_back(key.get_si());
            Rational a = wv.v[i] * D2;
            out.certificate.a[key.get_si()] = a.get_num();
        }
        drop_zeros(out.certificate.a);
        out.certificate.verified = verify_certificate(out.scaled, out.certificate.a);
        if (!out.certificate.verified) throw std::logic_error("scale_to_A2: scaled certificate failed verification");
        out.set = std::move(scaled_set);
        return out;
    }
    throw std::runtime_error("scale_to_A2: no left set for d <= 100000");
}

}  // namespace arboreal

#endif
