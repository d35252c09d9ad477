#ifndef ARBOREAL_CERTIFY_HPP
#define ARBOREAL_CERTIFY_HPP

// Weight vectors, the integer part of the monoid
//   Gamma(lambda) = { sum_k a_k / (lambda^2 - k) : a_k >= 0 },
// and certificates sum_k a_k / (lambda^2 - k) = 1.

#include "arboreal/poly.hpp"
#include "arboreal/spectrum.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace arboreal {

/// k -> a_k with zero entries omitted.
using CoefficientMap = std::map<std::int64_t, Integer>;

inline Integer to_integer(std::int64_t k) { return Integer(static_cast<long>(k)); }

/// 1 + sum_k a_k (k + 1): vertex count of the tree <prod k^a_k>.
inline Integer vertex_count(const CoefficientMap& a) {
    Integer v = 1;
    for (const auto& [k, ak] : a) v += ak * to_integer(k + 1);
    return v;
}

inline void drop_zeros(CoefficientMap& a) {
    std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
}

/// Checks sum_k c_k prod_{j != k}(x - j) == value * prod_j (x - j)  (mod F),
/// the polynomial form of sum_k c_k / (lambda^2 - k) = value.  F must be monic.
inline bool satisfies_identity(const IntPolynomial& F, const CoefficientMap& coeffs, const Integer& value) {
    if (!F.is_monic()) throw std::invalid_argument("satisfies_identity: F must be monic");
    const std::size_t m = coeffs.size();
    std::vector<std::int64_t> keys;
    keys.reserve(m);
    for (const auto& kv : coeffs) keys.push_back(kv.first);
    // prefix[i] = prod_{j < i}(x - k_j), suffix[i] = prod_{j >= i}(x - k_j), both mod F.
    std::vector<IntPolynomial> prefix(m + 1), suffix(m + 1);
    prefix[0] = reduce_mod(IntPolynomial::constant(1), F);
    suffix[m] = prefix[0];
    for (std::size_t i = 0; i < m; ++i)
        prefix[i + 1] = reduce_mod(prefix[i] * IntPolynomial::linear_root(to_integer(keys[i])), F);
    for (std::size_t i = m; i-- > 0;)
        suffix[i] = reduce_mod(suffix[i + 1] * IntPolynomial::linear_root(to_integer(keys[i])), F);
    IntPolynomial lhs;
    std::size_t i = 0;
    for (const auto& [k, c] : coeffs) {
        lhs += reduce_mod(prefix[i] * suffix[i + 1], F) * c;
        ++i;
    }
    lhs -= prefix[m] * value;
    return reduce_mod(lhs, F).is_zero();
}

/// The rational solution v of sum_i v_i / (lambda^2 - k_i) = 1, its least
/// common denominator, and the side's sign.
struct WeightVector {
    InterlacingSet set;
    std::vector<Rational> v;
    Integer delta;
    int sign = 1;
};

inline WeightVector weight_vector(const IntPolynomial& F, const InterlacingSet& ks) {
    if (!is_interlacing(F, ks)) throw std::invalid_argument("weight_vector: not an interlacing set for F");
    WeightVector w{ks, {}, Integer(1), ks.side == Side::left ? 1 : -1};
    const std::size_t n = ks.size();
    w.v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Integer den = 1;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) den *= to_integer(ks.ks[i] - ks.ks[j]);
        Rational vi(-F(to_integer(ks.ks[i])), den);
        vi.canonicalize();
        mpz_lcm(w.delta.get_mpz_t(), w.delta.get_mpz_t(), vi.get_den_mpz_t());
        w.v.push_back(std::move(vi));
    }
    return w;
}

/// An integer of Gamma(lambda) with the coefficients realizing it.
struct GammaElement {
    Integer value;
    CoefficientMap coeffs;
    std::vector<std::pair<InterlacingSet, Integer>> provenance;  // (set, multiplier)

    /// sum_k a_k (k + 1); the vertex count contributed by one copy.
    Integer weight() const { return vertex_count(coeffs) - 1; }
};

/// sum_i m_i v(set_i), collected by key and scaled by its least common
/// denominator.  All vectors must come from the same side.
inline GammaElement combine_vectors(const IntPolynomial& F, std::span<const WeightVector* const> wvs,
                                    std::span<const Integer> multipliers) {
    if (wvs.empty()) throw std::invalid_argument("combine_vectors: no vectors");
    if (wvs.size() != multipliers.size()) throw std::invalid_argument("combine_vectors: length mismatch");
    const Side side = wvs.front()->set.side;
    std::map<std::int64_t, Rational> summed;
    Integer total = 0;
    GammaElement out;
    for (std::size_t i = 0; i < wvs.size(); ++i) {
        if (wvs[i]->set.side != side) throw std::invalid_argument("combine_vectors: mixed sides");
        if (multipliers[i] <= 0) throw std::invalid_argument("combine_vectors: multipliers must be positive");
        for (std::size_t j = 0; j < wvs[i]->v.size(); ++j) summed[wvs[i]->set.ks[j]] += wvs[i]->v[j] * multipliers[i];
        total += multipliers[i];
        out.provenance.emplace_back(wvs[i]->set, multipliers[i]);
    }
    Integer lcd = 1;
    for (const auto& [k, q] : summed) mpz_lcm(lcd.get_mpz_t(), lcd.get_mpz_t(), q.get_den_mpz_t());
    for (const auto& [k, q] : summed) {
        Rational scaled = q * lcd;
        out.coeffs.emplace(k, abs(scaled.get_num()));
    }
    drop_zeros(out.coeffs);
    out.value = lcd * total * (side == Side::left ? 1 : -1);
    if (!satisfies_identity(F, out.coeffs, out.value)) throw std::logic_error("combine_vectors: identity check failed");
    return out;
}

inline GammaElement combine_vectors(const IntPolynomial& F, const std::vector<WeightVector>& wvs,
                                    const std::vector<Integer>& multipliers) {
    std::vector<const WeightVector*> ptrs;
    for (const auto& w : wvs) ptrs.push_back(&w);
    return combine_vectors(F, std::span<const WeightVector* const>(ptrs), std::span<const Integer>(multipliers));
}

/// +delta (left) or -delta (right) with coefficients delta * |v_i|.
inline GammaElement signed_delta(const IntPolynomial& F, const WeightVector& wv) {
    const WeightVector* p = &wv;
    const Integer one = 1;
    return combine_vectors(F, std::span<const WeightVector* const>(&p, 1), std::span<const Integer>(&one, 1));
}

struct SearchBudget {
    std::int64_t max_k = 0;  // 0: ceil(lambda_n^2) + 200
    std::size_t max_sets = 5000;
    std::int64_t max_multiplier = 50;
    std::size_t pair_window = 64;
    std::size_t triple_window = 10;
    double time_limit_seconds = 0;  // 0: unlimited
};

struct MonoidState {
    std::vector<GammaElement> elements;
    Integer gcd_all = 0;
    bool has_positive = false;
    bool has_negative = false;

    // diagnostics
    std::size_t sets_tried = 0;
    std::vector<Integer> gcd_trajectory;
    Integer delta_phase_gcd = 0;
    std::size_t combinations_added = 0;
    bool timed_out = false;

    bool has_unit() const {
        return std::any_of(elements.begin(), elements.end(), [](const auto& e) { return e.value == 1; });
    }

    /// 1 is a nonnegative combination of the collected values.
    bool reaches_one() const { return has_unit() || (has_positive && has_negative && gcd_all == 1); }

    void add(GammaElement e) {
        if (e.value == 0) return;
        const Integer before = gcd_all;
        mpz_gcd(gcd_all.get_mpz_t(), gcd_all.get_mpz_t(), e.value.get_mpz_t());
        if (e.value > 0) has_positive = true;
        if (e.value < 0) has_negative = true;
        if (gcd_trajectory.empty() || gcd_all != before) gcd_trajectory.push_back(gcd_all);
        elements.push_back(std::move(e));
    }

    /// Merge is set union plus gcd, so the result does not depend on order.
    void merge(const MonoidState& other) {
        for (const auto& e : other.elements) add(e);
        sets_tried += other.sets_tried;
    }
};

namespace detail {

inline int q_valuation(Integer z, const Integer& q) {
    if (z == 0) return 0;
    int v = 0;
    while (mpz_divisible_p(z.get_mpz_t(), q.get_mpz_t())) {
        mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t());
        ++v;
    }
    return v;
}

/// Prime factors of |z| by trial division up to 10^6; a remaining cofactor is
/// returned as one more entry.
inline std::vector<Integer> small_prime_factors(Integer z) {
    z = abs(z);
    std::vector<Integer> out;
    for (unsigned long d = 2; d <= 1000000 && z > 1; ++d) {
        if (Integer(d) * Integer(d) > z) break;
        if (mpz_divisible_ui_p(z.get_mpz_t(), d)) {
            out.emplace_back(d);
            while (mpz_divisible_ui_p(z.get_mpz_t(), d)) mpz_divexact_ui(z.get_mpz_t(), z.get_mpz_t(), d);
        }
    }
    if (z > 1) out.push_back(z);
    return out;
}

/// For each key where some vector has q in a denominator: the modulus q^e and
/// each vector's coefficient times q^e, reduced mod q^e.  m_1 v_1 + ... is
/// q-integral at that key iff sum m_i r_i == 0 (mod q^e).
struct QConstraint {
    Integer modulus;
    std::vector<Integer> residues;
};

inline std::vector<QConstraint> q_constraints(std::span<const WeightVector* const> wvs, const Integer& q) {
    std::map<std::int64_t, std::vector<Rational>> by_key;
    for (std::size_t i = 0; i < wvs.size(); ++i)
        for (std::size_t j = 0; j < wvs[i]->v.size(); ++j) {
            auto& slot = by_key[wvs[i]->set.ks[j]];
            slot.resize(wvs.size());
            slot[i] = wvs[i]->v[j];
        }
    std::vector<QConstraint> out;
    for (auto& [k, vals] : by_key) {
        vals.resize(wvs.size());
        int e = 0;
        for (const auto& r : vals) e = std::max(e, q_valuation(r.get_den(), q));
        if (e == 0) continue;
        QConstraint c;
        mpz_pow_ui(c.modulus.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(e));
        for (const auto& r : vals) {
            // r * q^e = n * q^(e - v) / d', with d' coprime to q.
            const int v = q_valuation(r.get_den(), q);
            Integer qv, qev, dprime, inv, res;
            mpz_pow_ui(qv.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(v));
            mpz_pow_ui(qev.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(e - v));
            mpz_divexact(dprime.get_mpz_t(), r.get_den_mpz_t(), qv.get_mpz_t());
            mpz_invert(inv.get_mpz_t(), dprime.get_mpz_t(), c.modulus.get_mpz_t());
            res = r.get_num() * qev * inv;
            mpz_fdiv_r(res.get_mpz_t(), res.get_mpz_t(), c.modulus.get_mpz_t());
            c.residues.push_back(res);
        }
        out.push_back(std::move(c));
    }
    return out;
}

inline bool q_free(const std::vector<QConstraint>& cs, const std::vector<std::int64_t>& m, const Integer& q) {
    std::int64_t s = std::accumulate(m.begin(), m.end(), std::int64_t{0});
    if (mpz_divisible_p(to_integer(s).get_mpz_t(), q.get_mpz_t())) return false;
    for (const auto& c : cs) {
        Integer acc = 0;
        for (std::size_t i = 0; i < m.size(); ++i) acc += c.residues[i] * to_integer(m[i]);
        if (!mpz_divisible_p(acc.get_mpz_t(), c.modulus.get_mpz_t())) return false;
    }
    return true;
}

/// Invokes fn on every vector of `count` positive multipliers <= max_mult
/// with sum exactly s, in lexicographic order.
template <typename Fn>
void for_each_composition(std::size_t count, std::int64_t s, std::int64_t max_mult, std::vector<std::int64_t>& cur, Fn&& fn) {
    const std::size_t pos = cur.size();
    const std::int64_t remaining_slots = static_cast<std::int64_t>(count - pos) - 1;
    if (remaining_slots == 0) {
        if (s >= 1 && s <= max_mult) {
            cur.push_back(s);
            fn(cur);
            cur.pop_back();
        }
        return;
    }
    for (std::int64_t m = 1; m <= max_mult && s - m >= remaining_slots; ++m) {
        if (s - m > remaining_slots * max_mult) continue;
        cur.push_back(m);
        for_each_composition(count, s - m, max_mult, cur, fn);
        cur.pop_back();
    }
}

/// Multipliers (all <= max_mult, jointly coprime) for which the combined
/// value is not divisible by q.  Minimizes the multiplier sum, then |value|,
/// then lexicographically.
inline std::optional<GammaElement> cancel_prime(const IntPolynomial& F, std::span<const WeightVector* const> wvs,
                                                const Integer& q, std::int64_t max_mult) {
    const auto cs = q_constraints(wvs, q);
    const std::size_t count = wvs.size();
    for (std::int64_t s = static_cast<std::int64_t>(count); s <= max_mult * static_cast<std::int64_t>(count); ++s) {
        std::optional<GammaElement> best;
        std::vector<std::int64_t> cur;
        for_each_composition(count, s, max_mult, cur, [&](const std::vector<std::int64_t>& m) {
            std::int64_t g = 0;
            for (auto x : m) g = std::gcd(g, x);
            if (g != 1 || !q_free(cs, m, q)) return;
            std::vector<Integer> mz;
            for (auto x : m) mz.push_back(to_integer(x));
            GammaElement e = combine_vectors(F, wvs, std::span<const Integer>(mz));
            if (mpz_divisible_p(e.value.get_mpz_t(), q.get_mpz_t())) return;
            if (!best || abs(e.value) < abs(best->value)) best = std::move(e);
        });
        if (best) return best;
    }
    return std::nullopt;
}

}  // namespace detail

/// Collects signed deltas over interlacing sets (alternating left and right,
/// in enumeration order) until 1 becomes reachable, then tries same-side
/// combinations that strip each prime of the common gcd.
inline MonoidState monoid_search(const SquaresSpectrum& spec, const SearchBudget& budget) {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    auto out_of_time = [&] {
        if (budget.time_limit_seconds <= 0) return false;
        return std::chrono::duration<double>(clock::now() - start).count() > budget.time_limit_seconds;
    };

    const IntPolynomial& F = spec.polynomial();
    MonoidState state;
    if (spec.degree() == 0) return state;
    const std::int64_t max_k = budget.max_k > 0 ? budget.max_k : spec.least_integer_above(spec.degree() - 1) + 200;
    const EnumBudget eb{max_k, budget.max_sets};
    const auto left_sets = enumerate_interlacing(spec, Side::left, eb);
    const auto right_sets = enumerate_interlacing(spec, Side::right, eb);

    std::vector<WeightVector> left, right;
    const std::size_t rounds = std::max(left_sets.size(), right_sets.size());
    for (std::size_t i = 0; i < rounds && !state.reaches_one(); ++i) {
        if (out_of_time()) {
            state.timed_out = true;
            break;
        }
        if (i < left_sets.size()) {
            left.push_back(weight_vector(F, left_sets[i]));
            state.add(signed_delta(F, left.back()));
            ++state.sets_tried;
        }
        if (state.reaches_one()) break;
        if (i < right_sets.size()) {
            right.push_back(weight_vector(F, right_sets[i]));
            state.add(signed_delta(F, right.back()));
            ++state.sets_tried;
        }
    }
    state.delta_phase_gcd = state.gcd_all;

    bool progress = true;
    while (progress && !state.reaches_one() && state.gcd_all > 1 && !state.timed_out) {
        progress = false;
        for (const Integer& q : detail::small_prime_factors(state.gcd_all)) {
            for (int width = 2; width <= 3 && !progress; ++width) {
                for (const auto* side : {&left, &right}) {
                    const std::size_t window =
                        std::min(side->size(), width == 2 ? budget.pair_window : budget.triple_window);
                    std::vector<std::size_t> idx(static_cast<std::size_t>(width));
                    // Index tuples i_1 < ... < i_width in lexicographic order.
                    std::function<bool(std::size_t, std::size_t)> walk = [&](std::size_t depth, std::size_t from) -> bool {
                        if (depth == idx.size()) {
                            if (out_of_time()) {
                                state.timed_out = true;
                                return true;
                            }
                            std::vector<const WeightVector*> pick;
                            for (auto i : idx) pick.push_back(&(*side)[i]);
                            auto e = detail::cancel_prime(F, pick, q, budget.max_multiplier);
                            if (!e) return false;
                            state.add(std::move(*e));
                            ++state.combinations_added;
                            return true;
                        }
                        for (std::size_t i = from; i < window; ++i) {
                            idx[depth] = i;
                            if (walk(depth + 1, i + 1)) return true;
                        }
                        return false;
                    };
                    if (walk(0, 0)) {
                        progress = !state.timed_out;
                        break;
                    }
                }
                if (state.timed_out) break;
            }
            if (progress || state.timed_out) break;
        }
    }
    return state;
}

/// Claimed solution of sum_k a_k / (lambda^2 - k) = 1.
struct Certificate {
    IntPolynomial F;
    CoefficientMap a;
    bool verified = false;

    Integer vertex_count() const { return arboreal::vertex_count(a); }
};

/// Exact check of sum_k a_k / (lambda^2 - k) = 1 as a congruence mod F.
inline bool verify_certificate(const IntPolynomial& F, const CoefficientMap& a) {
    for (const auto& [k, ak] : a) {
        if (ak < 0) throw std::invalid_argument("verify_certificate: negative coefficient");
        if (k < 0) throw std::invalid_argument("verify_certificate: negative key");
        if (F(to_integer(k)) == 0) throw std::invalid_argument("verify_certificate: F vanishes at a key");
    }
    CoefficientMap support = a;
    drop_zeros(support);
    if (support.empty()) return false;
    return satisfies_identity(F, support, Integer(1));
}

namespace detail {

inline CoefficientMap scaled_sum(std::initializer_list<std::pair<const GammaElement*, Integer>> parts) {
    CoefficientMap out;
    for (const auto& [e, c] : parts) {
        if (c == 0) continue;
        for (const auto& [k, ak] : e->coeffs) out[k] += ak * c;
    }
    drop_zeros(out);
    return out;
}

/// Nonnegative (c_pos, c_neg) with c_pos * pos + c_neg * neg = 1, smallest c_pos.
inline std::pair<Integer, Integer> pair_multipliers(const Integer& pos, const Integer& neg) {
    const Integer n = -neg;
    if (n == 1) return {Integer(1), pos - 1};
    Integer cp;
    if (mpz_invert(cp.get_mpz_t(), pos.get_mpz_t(), n.get_mpz_t()) == 0)
        throw std::invalid_argument("pair_multipliers: values are not coprime");
    Integer cn;
    mpz_divexact(cn.get_mpz_t(), Integer(cp * pos - 1).get_mpz_t(), n.get_mpz_t());
    return {cp, cn};
}

}  // namespace detail

/// Certificate c_pos * pos + c_neg * neg = 1 from two coprime elements of
/// opposite sign.
inline Certificate certificate_from_pair(const IntPolynomial& F, const GammaElement& pos, const GammaElement& neg) {
    if (pos.value <= 0 || neg.value >= 0) throw std::invalid_argument("certificate_from_pair: need opposite signs");
    auto [cp, cn] = detail::pair_multipliers(pos.value, neg.value);
    Certificate c{F, detail::scaled_sum({{&pos, cp}, {&neg, cn}}), false};
    c.verified = verify_certificate(F, c.a);
    if (!c.verified) throw std::logic_error("certificate_from_pair: assembled certificate failed verification");
    return c;
}

namespace detail {

/// General fallback: a subset with both signs and gcd 1, Bezout coefficients,
/// then zero-sum shifts (|n| * g_i + g_i * n = 0) into the nonnegative cone.
inline std::optional<CoefficientMap> bezout_combination(const std::vector<GammaElement>& elems) {
    std::vector<std::size_t> chosen;
    Integer g = 0;
    std::optional<std::size_t> pos, neg;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        const auto& v = elems[i].value;
        Integer ng;
        mpz_gcd(ng.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        const bool need_sign = (v > 0 && !pos) || (v < 0 && !neg);
        if (ng != g || need_sign) {
            chosen.push_back(i);
            g = ng;
            if (v > 0 && !pos) pos = i;
            if (v < 0 && !neg) neg = i;
        }
        if (g == 1 && pos && neg) break;
    }
    if (g != 1 || !pos || !neg) return std::nullopt;

    // Extended Euclid across the chosen values.
    std::map<std::size_t, Integer> x;
    Integer run = 0;
    for (std::size_t i : chosen) {
        const Integer& v = elems[i].value;
        Integer d, s, t;
        mpz_gcdext(d.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), run.get_mpz_t(), v.get_mpz_t());
        for (auto& [j, c] : x) c *= s;
        x[i] = t;
        run = d;
    }
    const Integer gp = elems[*pos].value;
    const Integer gn = -elems[*neg].value;
    auto ceil_div = [](const Integer& a, const Integer& b) {
        Integer r;
        mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return r;
    };
    for (auto& [i, c] : x) {
        if (i == *pos || i == *neg || c >= 0) continue;
        const Integer& v = elems[i].value;
        if (v > 0) {
            Integer t = ceil_div(-c, gn);
            c += t * gn;
            x[*neg] += t * v;
        } else {
            Integer t = ceil_div(-c, gp);
            c += t * gp;
            x[*pos] += t * (-v);
        }
    }
    if (x[*pos] < 0) {
        Integer t = ceil_div(-x[*pos], gn);
        x[*pos] += t * gn;
        x[*neg] += t * gp;
    }
    if (x[*neg] < 0) {
        Integer t = ceil_div(-x[*neg], gp);
        x[*neg] += t * gp;
        x[*pos] += t * gn;
    }
    CoefficientMap out;
    for (const auto& [i, c] : x)
        for (const auto& [k, ak] : elems[i].coeffs) out[k] += ak * c;
    drop_zeros(out);
    return out;
}

}  // namespace detail

/// Turns a state from which 1 is reachable into a verified certificate.
/// Prefers a single element equal to 1 or the coprime opposite-sign pair with
/// the fewest tree vertices (ties: lexicographic coefficients); otherwise
/// falls back to a Bezout combination over several elements.
inline std::optional<Certificate> assemble_certificate(const IntPolynomial& F, const MonoidState& state) {
    struct Candidate {
        Integer vertices;
        const GammaElement* pos;
        const GammaElement* neg;  // null for a unit element
        Integer cp, cn;
    };
    std::optional<Candidate> best;
    std::vector<Integer> weights;
    weights.reserve(state.elements.size());
    for (const auto& e : state.elements) weights.push_back(e.weight());

    auto materialize = [&](const Candidate& c) {
        if (!c.neg) return detail::scaled_sum({{c.pos, Integer(1)}});
        return detail::scaled_sum({{c.pos, c.cp}, {c.neg, c.cn}});
    };
    auto consider = [&](Candidate c) {
        if (best && c.vertices > best->vertices) return;
        if (best && c.vertices == best->vertices && !(materialize(c) < materialize(*best))) return;
        best = std::move(c);
    };

    for (std::size_t i = 0; i < state.elements.size(); ++i) {
        const auto& e = state.elements[i];
        if (e.value == 1) consider({1 + weights[i], &e, nullptr, Integer(1), Integer(0)});
    }
    for (std::size_t i = 0; i < state.elements.size(); ++i) {
        const auto& p = state.elements[i];
        if (p.value <= 0) continue;
        for (std::size_t j = 0; j < state.elements.size(); ++j) {
            const auto& n = state.elements[j];
            if (n.value >= 0) continue;
            Integer g;
            mpz_gcd(g.get_mpz_t(), p.value.get_mpz_t(), n.value.get_mpz_t());
            if (g != 1) continue;
            auto [cp, cn] = detail::pair_multipliers(p.value, n.value);
            Integer verts = 1 + cp * weights[i] + cn * weights[j];
            consider({std::move(verts), &p, &n, std::move(cp), std::move(cn)});
        }
    }

    Certificate cert{F, {}, false};
    if (best) {
        cert.a = materialize(*best);
    } else {
        auto combo = detail::bezout_combination(state.elements);
        if (!combo) return std::nullopt;
        cert.a = std::move(*combo);
    }
    cert.verified = verify_certificate(F, cert.a);
    if (!cert.verified) throw std::logic_error("assemble_certificate: assembled certificate failed verification");
    return cert;
}

/// For a real quadratic lambda^2: with k the least integer between the two
/// roots, {k-1, k} is left-interlacing with delta = 1, giving
/// a = {k-1: F(k-1), k: -F(k)}.
inline Certificate quadratic_certificate(const IntPolynomial& F) {
    if (F.degree() != 2) throw std::invalid_argument("quadratic_certificate: F must have degree 2");
    const SquaresSpectrum spec = squared_spectrum(F);
    if (spec.has_integer_root()) throw std::invalid_argument("quadratic_certificate: F has an integer root");
    const auto k = least_integer_in_gap(spec, 1);
    if (!k) throw std::logic_error("quadratic_certificate: no integer between the roots");
    Certificate c{F, {}, false};
    c.a[*k - 1] = F(to_integer(*k - 1));
    c.a[*k] = -F(to_integer(*k));
    if (c.a[*k - 1] <= 0 || c.a[*k] <= 0) throw std::logic_error("quadratic_certificate: coefficients not positive");
    c.verified = verify_certificate(F, c.a);
    if (!c.verified) throw std::logic_error("quadratic_certificate: verification failed");
    return c;
}

}  // namespace arboreal

#endif
