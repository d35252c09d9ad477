#include "arboreal/spectrum.hpp"
#include "arboreal/cyclo.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace arboreal;

namespace {

IntPolynomial P(std::initializer_list<long> desc) { return IntPolynomial::descending(desc); }

const IntPolynomial octic_f = P({1, 0, -44, 0, 567, 0, -2660, 0, 3564});
const IntPolynomial octic_F = P({1, -44, 567, -2660, 3564});

// Left sets start positive, right sets start negative (F monic).
bool sign_pattern_ok(const IntPolynomial& F, const InterlacingSet& s) {
    int want = s.side == Side::left ? 1 : -1;
    for (auto k : s.ks) {
        if (sign_at_integer(F, Integer(static_cast<long>(k))) != want) return false;
        want = -want;
    }
    return true;
}

}  // namespace

TEST(SquaresMinPoly, Examples) {
    EXPECT_EQ(squares_min_poly(P({1, 0, -2})), P({1, -2}));
    EXPECT_EQ(squares_min_poly(octic_f), octic_F);
    // The minimal polynomial of 4*lambda^2 is x^3 - 20x^2 + 96x - 64.
    const auto F = squares_min_poly(P({1, 1, -2, -1}));
    EXPECT_EQ(F, P({1, -5, 6, -1}));
    EXPECT_EQ(scale_roots(F, Integer(4)), P({1, -20, 96, -64}));
}

TEST(SquaresMinPoly, RejectsNonMonic) { EXPECT_THROW(squares_min_poly(P({2, 0, -1})), std::invalid_argument); }

TEST(SquaresMinPoly, RecoversFFromEvenPolynomial) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> c(-20, 20);
    for (int t = 0; t < 200; ++t) {
        std::vector<Integer> co{c(rng), c(rng), c(rng), 1};
        IntPolynomial F(co);
        if (F.coeff(0) == 0 || !is_squarefree(F)) continue;
        EXPECT_EQ(squares_min_poly(F.substitute_square()), F);
    }
}

TEST(SquaresMinPoly, VanishesAtSquaredRoots) {
    const IntPolynomial fs[] = {octic_f, P({1, 1, -2, -1}), P({1, 0, -4, 1}), real_cyclotomic_min_poly(11)};
    for (const auto& f : fs) {
        const auto F = squares_min_poly(f);
        const auto Fd = F;
        for (auto r : oracle::real_roots(f)) {
            long double x = r * r, v = 0, scale = 0;
            for (int i = Fd.degree(); i >= 0; --i) {
                v = v * x + Fd.coeff(static_cast<std::size_t>(i)).get_d();
                scale = scale * std::abs(x) + std::abs(Fd.coeff(static_cast<std::size_t>(i)).get_d());
            }
            EXPECT_LT(std::abs(v), 1e-6L * scale);
        }
    }
}

TEST(SquaredSpectrum, Octic) {
    const auto s = squared_spectrum(octic_F);
    ASSERT_EQ(s.degree(), 4u);
    const double approx[] = {2.215, 6.813, 9.144, 25.827};
    for (std::size_t i = 0; i < 4; ++i) {
        const auto r = refine_interval(octic_F, s.root(i), Rational(1, 100000));
        EXPECT_NEAR(r.lo.get_d(), approx[i], 1e-3);
    }
}

TEST(SquaredSpectrum, SmallCases) {
    const auto one = squared_spectrum(P({1, -2}));
    ASSERT_EQ(one.degree(), 1u);
    EXPECT_TRUE(one.root(0).contains(Rational(2)));
    const auto q = squared_spectrum(P({1, -3, 1}));
    ASSERT_EQ(q.degree(), 2u);
    EXPECT_NEAR(refine_interval(q.polynomial(), q.root(0), Rational(1, 10000)).lo.get_d(), 0.382, 1e-3);
    EXPECT_NEAR(refine_interval(q.polynomial(), q.root(1), Rational(1, 10000)).lo.get_d(), 2.618, 1e-3);
}

TEST(SquaredSpectrum, RejectsBadInput) {
    EXPECT_THROW(squared_spectrum(P({1, 0, 1})), std::invalid_argument);       // complex roots
    EXPECT_THROW(squared_spectrum(P({1, 0, -1})), std::invalid_argument);      // root -1
    EXPECT_THROW(squared_spectrum(P({1, -4, 4})), std::invalid_argument);      // not squarefree
}

TEST(Gaps, LeastIntegerInGap) {
    const auto s = squared_spectrum(octic_F);
    EXPECT_EQ(least_integer_in_gap(s, 1), 3);
    EXPECT_EQ(least_integer_in_gap(s, 3), 10);
    EXPECT_EQ(least_integer_in_gap(squared_spectrum(P({1, -3, 1})), 1), 1);
}

TEST(FindInterlacing, Octic) {
    const auto s = squared_spectrum(octic_F);
    const auto l = find_interlacing(s, Side::left);
    const auto r = find_interlacing(s, Side::right);
    ASSERT_TRUE(l && r);
    EXPECT_EQ(l->ks, (std::vector<std::int64_t>{0, 3, 7, 10}));
    EXPECT_EQ(r->ks, (std::vector<std::int64_t>{3, 7, 10, 26}));
}

TEST(FindInterlacing, AbsentForElevenfoldCosine) {
    const auto F = squares_min_poly(real_cyclotomic_min_poly(11));
    ASSERT_EQ(F.degree(), 5);
    const auto s = squared_spectrum(F);
    EXPECT_FALSE(find_interlacing(s, Side::left));
    EXPECT_FALSE(find_interlacing(s, Side::right));
}

TEST(EnumerateInterlacing, OcticPrefix) {
    const auto s = squared_spectrum(octic_F);
    const auto sets = enumerate_interlacing(s, Side::left, {12, 5000});
    ASSERT_GE(sets.size(), 4u);
    EXPECT_EQ(sets[0].ks, (std::vector<std::int64_t>{0, 3, 7, 10}));
    EXPECT_EQ(sets[1].ks, (std::vector<std::int64_t>{1, 3, 7, 10}));
    EXPECT_EQ(sets[2].ks, (std::vector<std::int64_t>{2, 3, 7, 10}));
    EXPECT_EQ(sets[3].ks, (std::vector<std::int64_t>{0, 4, 7, 10}));
    // {0,1,2} x {3..6} x {7,8,9} x {10,11,12}
    EXPECT_EQ(sets.size(), 3u * 4u * 3u * 3u);
}

TEST(EnumerateInterlacing, Linear) {
    const auto sets = enumerate_interlacing(squared_spectrum(P({1, -2})), Side::left, {1, 100});
    ASSERT_EQ(sets.size(), 2u);
    EXPECT_EQ(sets[0].ks, std::vector<std::int64_t>{0});
    EXPECT_EQ(sets[1].ks, std::vector<std::int64_t>{1});
}

TEST(EnumerateInterlacing, EmptyGapGivesNothing) {
    const auto F = squares_min_poly(real_cyclotomic_min_poly(11));
    EXPECT_TRUE(enumerate_interlacing(squared_spectrum(F), Side::left, {50, 100}).empty());
}

TEST(EnumerateInterlacing, TruncatesAtBudget) {
    const auto sets = enumerate_interlacing(squared_spectrum(octic_F), Side::right, {200, 17});
    EXPECT_EQ(sets.size(), 17u);
}

TEST(InterlacingProperty, SignsAlternateAndSidesAgree) {
    std::mt19937_64 rng(23);
    int seen = 0;
    for (int t = 0; t < 400 && seen < 60; ++t) {
        const auto A = oracle::random_symmetric(4, -4, 4, rng);
        auto cp = oracle::faddeev_charpoly(A);
        // Shift so all eigenvalues are positive: use the squares polynomial.
        if (!is_squarefree(cp) || cp.coeff(0) == 0) continue;
        IntPolynomial F;
        try {
            F = squares_min_poly(cp);
            (void)squared_spectrum(F);
        } catch (const std::exception&) {
            continue;
        }
        const auto s = squared_spectrum(F);
        if (s.has_integer_root()) continue;
        ++seen;
        const auto l = find_interlacing(s, Side::left);
        const auto r = find_interlacing(s, Side::right);
        EXPECT_EQ(l.has_value(), r.has_value());
        const auto numeric = oracle::real_roots(F);
        EXPECT_EQ(l.has_value(), oracle::interlacing_exists_numeric(numeric));
        for (Side side : {Side::left, Side::right}) {
            const auto top = static_cast<std::int64_t>(numeric.back()) + 6;
            for (const auto& set : enumerate_interlacing(s, side, {top, 300})) {
                EXPECT_TRUE(sign_pattern_ok(F, set));
                EXPECT_TRUE(is_interlacing(F, set));
            }
        }
    }
    EXPECT_GE(seen, 30);
}
