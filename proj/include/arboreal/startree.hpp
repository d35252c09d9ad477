#ifndef ARBOREAL_STARTREE_HPP
#define ARBOREAL_STARTREE_HPP

// Height-2 trees <prod k^a_k>: a root joined to the centers of a_k copies of
// the star S_k for every k.

#include "arboreal/certify.hpp"
#include "arboreal/parallel.hpp"
#include "arboreal/poly.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace arboreal {

class RootedStarTree {
public:
    RootedStarTree() = default;
    explicit RootedStarTree(CoefficientMap branches) : branches_(std::move(branches)) {}

    const CoefficientMap& branches() const { return branches_; }
    Integer vertex_count() const { return arboreal::vertex_count(branches_); }

    Integer root_degree() const {
        Integer d = 0;
        for (const auto& kv : branches_) d += kv.second;
        return d;
    }

    int height() const {
        if (branches_.empty()) return 0;
        return branches_.rbegin()->first >= 1 ? 2 : 1;
    }

private:
    CoefficientMap branches_;
};

inline RootedStarTree build_tree(CoefficientMap a) {
    for (const auto& [k, ak] : a) {
        if (k < 0) throw std::invalid_argument("build_tree: negative star size");
        if (ak < 0) throw std::invalid_argument("build_tree: negative multiplicity");
    }
    drop_zeros(a);
    if (a.empty()) throw std::invalid_argument("build_tree: empty branch map");
    return RootedStarTree(std::move(a));
}

/// x^E * B(x^2) with E = 1 + sum (k-1) a_k and
///   B(y) = prod (y-k)^a_k - sum_k a_k (y-k)^(a_k - 1) prod_{j != k} (y-j)^a_j.
/// Powers of y dividing B are moved into the x-exponent before expanding, so
/// E never goes negative.
inline IntPolynomial char_poly_closed_form(const RootedStarTree& t) {
    const auto& br = t.branches();
    if (br.empty()) return IntPolynomial::ascending({0, 1});
    for (const auto& kv : br)
        if (!kv.second.fits_ulong_p()) throw std::overflow_error("char_poly_closed_form: multiplicity too large");
    // B = R * (S - sum_k a_k S / (y - k)) with R = prod (y-k)^(a_k - 1), S = prod (y-k).
    IntPolynomial R = IntPolynomial::constant(1);
    IntPolynomial S = IntPolynomial::constant(1);
    for (const auto& [k, ak] : br) {
        const IntPolynomial lin = IntPolynomial::linear_root(to_integer(k));
        R *= pow(lin, static_cast<unsigned>(ak.get_ui() - 1));
        S *= lin;
    }
    IntPolynomial inner = S;
    for (const auto& [k, ak] : br) inner -= exact_quotient(S, IntPolynomial::linear_root(to_integer(k))) * ak;
    IntPolynomial B = R * inner;
    const std::size_t v = B.x_valuation();
    B = B.shift_down(v);
    Integer E = 1;
    for (const auto& [k, ak] : br) E += to_integer(k - 1) * ak;
    E += 2 * static_cast<long>(v);
    if (E < 0 || !E.fits_ulong_p()) throw std::logic_error("char_poly_closed_form: negative x-exponent");
    return B.substitute_square().shift_up(E.get_ui());
}

namespace detail {

/// Adjacency lists with root 0, branches by (k, copy), each center followed
/// by its leaves.
inline std::vector<std::pair<std::size_t, std::size_t>> tree_edges(const RootedStarTree& t) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t next = 1;
    for (const auto& [k, ak] : t.branches()) {
        for (unsigned long copy = 0; copy < ak.get_ui(); ++copy) {
            const std::size_t center = next++;
            edges.emplace_back(0, center);
            for (std::int64_t leaf = 0; leaf < k; ++leaf) edges.emplace_back(center, next++);
        }
    }
    return edges;
}

}  // namespace detail

/// det(xI - A) by fraction-free (Bareiss) elimination over Z[x].  Leading
/// principal minors of xI - A are monic, so no pivoting is needed.
inline IntPolynomial char_poly_bruteforce(const RootedStarTree& t, std::size_t max_vertices = 64) {
    const Integer nv = t.vertex_count();
    if (nv > Integer(static_cast<unsigned long>(max_vertices)))
        throw std::length_error("char_poly_bruteforce: tree has more than " + std::to_string(max_vertices) + " vertices");
    const std::size_t n = nv.get_ui();
    std::vector<std::vector<IntPolynomial>> m(n, std::vector<IntPolynomial>(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = IntPolynomial::ascending({0, 1});
    for (const auto& [u, w] : detail::tree_edges(t)) {
        m[u][w] = IntPolynomial::constant(-1);
        m[w][u] = IntPolynomial::constant(-1);
    }
    IntPolynomial prev = IntPolynomial::constant(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_quotient(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    return m[n - 1][n - 1];
}

inline bool verify_tree_eigenvalue(const RootedStarTree& t, const IntPolynomial& F) {
    return verify_certificate(F, t.branches());
}

enum class ExportFormat { edgelist, dot };

inline constexpr unsigned long default_export_cap = 10'000'000;

inline std::string export_tree(const RootedStarTree& t, ExportFormat format, unsigned long cap = default_export_cap) {
    if (t.vertex_count() > Integer(cap))
        throw std::length_error("export_tree: " + t.vertex_count().get_str() + " vertices exceeds the cap of " +
                                std::to_string(cap));
    std::ostringstream out;
    const auto edges = detail::tree_edges(t);
    if (format == ExportFormat::edgelist) {
        for (const auto& [u, w] : edges) out << u << ' ' << w << '\n';
    } else {
        out << "graph T {\n";
        if (edges.empty()) out << "  0;\n";
        for (const auto& [u, w] : edges) out << "  " << u << " -- " << w << ";\n";
        out << "}\n";
    }
    return out.str();
}

struct MinTreeResult {
    Certificate certificate;
    RootedStarTree tree;
};

namespace detail {

struct SupportSearch {
    const IntPolynomial& F;
    std::size_t n;
    Integer budget;  // max_vertices - 1 = max of sum a_k (k + 1)
    const std::vector<Integer>& Fk;

    std::optional<CoefficientMap> best;
    Integer best_vertices;

    void offer(CoefficientMap a) {
        const Integer v = vertex_count(a);
        if (v - 1 > budget) return;
        if (best && (v > best_vertices || (v == best_vertices && !(a < *best)))) return;
        best_vertices = v;
        best = std::move(a);
    }

    Integer cap() const { return best ? std::min(budget, Integer(best_vertices - 1)) : budget; }

    /// All solutions on support K with every a_k >= 1.  a_k = w_k L(k) with L
    /// monic of degree |K| - n; the last e keys are free and the rest follow
    /// affinely from them.
    void solve(const std::vector<std::int64_t>& K) {
        const std::size_t s = K.size();
        const std::size_t e = s - n;
        Integer min_weight = 0;
        for (auto k : K) min_weight += to_integer(k + 1);
        if (min_weight > cap()) return;

        // Sign of w_k = -F(k) / prod_{j != k} (k - j).
        std::vector<int> wsign(s);
        for (std::size_t i = 0; i < s; ++i) {
            const int above = static_cast<int>(s - 1 - i);
            wsign[i] = -sgn(Fk[static_cast<std::size_t>(K[i])]) * (above % 2 == 0 ? 1 : -1);
        }
        if (e == 0) {
            for (int sg : wsign)
                if (sg < 0) return;
        } else if (e == 1) {
            // a_k = w_k (k - t): negative weights must precede positive ones.
            bool seen_pos = false;
            for (int sg : wsign) {
                if (sg > 0) seen_pos = true;
                if (sg < 0 && seen_pos) return;
            }
        }

        std::vector<Rational> w(s);
        for (std::size_t i = 0; i < s; ++i) {
            Integer den = 1;
            for (std::size_t j = 0; j < s; ++j)
                if (j != i) den *= to_integer(K[i] - K[j]);
            w[i] = Rational(-Fk[static_cast<std::size_t>(K[i])], den);
            w[i].canonicalize();
        }
        const std::size_t fixed = s - e;
        // a_i = base_i + sum_f coef[i][f] * A_f for the dependent keys i < fixed.
        std::vector<Rational> base(fixed);
        std::vector<std::vector<Rational>> coef(fixed, std::vector<Rational>(e));
        for (std::size_t i = 0; i < fixed; ++i) {
            Rational b = w[i];
            for (std::size_t f = fixed; f < s; ++f) b *= to_integer(K[i] - K[f]);
            base[i] = b;
            for (std::size_t f = fixed; f < s; ++f) {
                Rational c = w[i] / w[f];
                for (std::size_t g = fixed; g < s; ++g)
                    if (g != f) c *= Rational(to_integer(K[i] - K[g]), to_integer(K[f] - K[g]));
                c.canonicalize();
                coef[i][f - fixed] = c;
            }
        }
        std::vector<Integer> A(e);
        walk(K, w, base, coef, A, 0, Integer(0));
    }

    void walk(const std::vector<std::int64_t>& K, const std::vector<Rational>& w, const std::vector<Rational>& base,
              const std::vector<std::vector<Rational>>& coef, std::vector<Integer>& A, std::size_t depth,
              const Integer& used) {
        const std::size_t s = K.size();
        const std::size_t e = A.size();
        const std::size_t fixed = s - e;
        if (e == 0) {
            CoefficientMap a;
            for (std::size_t i = 0; i < s; ++i) {
                if (w[i].get_den() != 1 || w[i] < 1) return;
                a.emplace(K[i], w[i].get_num());
            }
            offer(std::move(a));
            return;
        }
        Integer rest = 0;  // cheapest completion of the remaining free keys
        for (std::size_t f = depth + 1; f < e; ++f) rest += to_integer(K[fixed + f] + 1);
        const Integer kw = to_integer(K[fixed + depth] + 1);
        Rational lo(1);
        Rational hi{Integer((cap() - used - rest) / kw)};
        if (depth + 1 == e) {
            // Last free coordinate: intersect the half-lines a_i >= 1.
            for (std::size_t i = 0; i < fixed; ++i) {
                Rational b = base[i];
                for (std::size_t f = 0; f + 1 < e; ++f) b += coef[i][f] * A[f];
                const Rational& c = coef[i][depth];
                const Rational bound = (Rational(1) - b) / c;
                if (c > 0) {
                    if (bound > lo) lo = bound;
                } else if (c < 0) {
                    if (bound < hi) hi = bound;
                } else if (b < 1) {
                    return;
                }
            }
        }
        Integer first;
        mpz_cdiv_q(first.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
        Integer last;
        mpz_fdiv_q(last.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
        for (Integer x = first; x <= last; ++x) {
            if (used + x * kw + rest > cap()) break;
            A[depth] = x;
            if (depth + 1 < e) {
                walk(K, w, base, coef, A, depth + 1, used + x * kw);
                continue;
            }
            CoefficientMap a;
            bool ok = true;
            for (std::size_t i = 0; i < fixed && ok; ++i) {
                Rational v = base[i];
                for (std::size_t f = 0; f < e; ++f) v += coef[i][f] * A[f];
                if (v.get_den() != 1 || v < 1) ok = false;
                else a.emplace(K[i], v.get_num());
            }
            if (!ok) continue;
            for (std::size_t f = 0; f < e; ++f) a.emplace(K[fixed + f], A[f]);
            offer(std::move(a));
        }
    }
};

template <typename Fn>
void for_each_subset(std::int64_t below, std::size_t size, std::vector<std::int64_t>& cur, const std::vector<bool>& usable,
                     std::int64_t from, Fn&& fn) {
    if (cur.size() == size) {
        fn(cur);
        return;
    }
    for (std::int64_t k = from; k < below; ++k) {
        if (!usable[static_cast<std::size_t>(k)]) continue;
        if (static_cast<std::int64_t>(size - cur.size()) > below - k) break;
        cur.push_back(k);
        for_each_subset(below, size, cur, usable, k + 1, fn);
        cur.pop_back();
    }
}

}  // namespace detail

/// Smallest tree <prod k^a_k> with lambda as an eigenvalue among supports
/// K subset of {0..max_k} with n <= |K| <= n + max_support_excess and at most
/// max_vertices vertices.  Ties go to the lexicographically least branch map.
/// Work is split by max(K) across threads; the result does not depend on the
/// thread count.
inline std::optional<MinTreeResult> search_min_tree(const IntPolynomial& F, std::int64_t max_vertices,
                                                    std::int64_t max_k, std::int64_t max_support_excess,
                                                    unsigned workers = worker_count()) {
    if (!F.is_monic() || F.degree() < 1) throw std::invalid_argument("search_min_tree: F must be monic of positive degree");
    if (max_vertices < 2 || max_k < 0 || max_support_excess < 0) return std::nullopt;
    const std::size_t n = static_cast<std::size_t>(F.degree());
    std::vector<Integer> Fk(static_cast<std::size_t>(max_k) + 1);
    std::vector<bool> usable(Fk.size());
    for (std::size_t k = 0; k < Fk.size(); ++k) {
        Fk[k] = F(Integer(static_cast<unsigned long>(k)));
        usable[k] = Fk[k] != 0;
    }
    const std::size_t tops = static_cast<std::size_t>(max_k) + 1;
    std::vector<detail::SupportSearch> local;
    for (unsigned w = 0; w < std::max(1u, workers); ++w)
        local.push_back({F, n, Integer(static_cast<long>(max_vertices - 1)), Fk, std::nullopt, Integer(0)});
    parallel_for(tops, workers, [&](std::size_t top, unsigned w) {
        if (!usable[top]) return;
        auto& ss = local[w];
        for (std::size_t size = n; size <= n + static_cast<std::size_t>(max_support_excess); ++size) {
            std::vector<std::int64_t> cur;
            detail::for_each_subset(static_cast<std::int64_t>(top), size - 1, cur, usable, 0, [&](std::vector<std::int64_t>& K) {
                K.push_back(static_cast<std::int64_t>(top));
                ss.solve(K);
                K.pop_back();
            });
        }
    });
    detail::SupportSearch merged{F, n, Integer(static_cast<long>(max_vertices - 1)), Fk, std::nullopt, Integer(0)};
    for (auto& ss : local)
        if (ss.best) merged.offer(*ss.best);
    if (!merged.best) return std::nullopt;
    MinTreeResult out{{F, *merged.best, false}, RootedStarTree(*merged.best)};
    out.certificate.verified = verify_certificate(F, out.certificate.a);
    if (!out.certificate.verified) throw std::logic_error("search_min_tree: solution failed verification");
    return out;
}

}  // namespace arboreal

#endif
