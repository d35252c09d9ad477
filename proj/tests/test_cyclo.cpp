#include "arboreal/cyclo.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace arboreal;

namespace {
IntPolynomial P(std::initializer_list<long> desc) { return IntPolynomial::descending(desc); }
}  // namespace

TEST(RealCyclotomic, Examples) {
    EXPECT_EQ(real_cyclotomic_min_poly(12), P({1, 0, -3}));
    EXPECT_EQ(real_cyclotomic_min_poly(7), P({1, 1, -2, -1}));
    EXPECT_EQ(real_cyclotomic_min_poly(5), P({1, 1, -1}));
    EXPECT_EQ(real_cyclotomic_min_poly(1), P({1, -2}));
    EXPECT_EQ(real_cyclotomic_min_poly(2), P({1, 2}));
}

TEST(RealCyclotomic, MatchesNumericProduct) {
    for (long m = 1; m <= 60; ++m) EXPECT_EQ(real_cyclotomic_min_poly(m), oracle::numeric_real_cyclotomic(m)) << m;
}

TEST(RealCyclotomic, DegreeFormula) {
    for (long m = 1; m <= 200; ++m)
        EXPECT_EQ(real_cyclotomic_min_poly(m).degree(), std::max(1L, euler_phi(m) / 2)) << m;
}

TEST(RealCyclotomic, SquaresDegreeFormula) {
    for (long m = 5; m <= 200; ++m) {
        const auto F = squares_min_poly(real_cyclotomic_min_poly(m));
        EXPECT_EQ(F.degree(), expected_squares_degree(m)) << m;
        EXPECT_EQ(F.degree(), m % 4 == 0 ? euler_phi(m) / 4 : euler_phi(m) / 2) << m;
    }
}

TEST(Cyclotomic, PhiDividesXmMinusOne) {
    for (long m = 1; m <= 100; ++m) {
        const auto phi = cyclotomic_polynomial(m);
        EXPECT_EQ(phi.degree(), euler_phi(m));
        const auto xm1 = IntPolynomial::monomial(Integer(1), static_cast<std::size_t>(m)) - IntPolynomial::constant(1);
        EXPECT_TRUE(divrem(xm1, phi).remainder.is_zero()) << m;
    }
}

TEST(ClassifyCyclotomic, Examples) {
    const auto r24 = classify_cyclotomic(24);
    EXPECT_EQ(r24.n, 2);
    EXPECT_TRUE(r24.analysis.in_a2());

    const auto r9 = classify_cyclotomic(9);
    EXPECT_EQ(r9.n, 3);
    ASSERT_TRUE(r9.analysis.not_in_a2());
    const auto* mp = std::get_if<ModP>(&r9.analysis.obstructions()->front().kind);
    ASSERT_TRUE(mp);
    EXPECT_EQ(mp->p, 2);
    EXPECT_EQ(mp->degree, 3);

    const auto r48 = classify_cyclotomic(48);
    EXPECT_EQ(r48.n, 4);
    ASSERT_TRUE(r48.analysis.not_in_a2());
    EXPECT_TRUE(r48.analysis.obstructions()->front().is_three_adic());
}

TEST(ClassifyCyclotomic, LargeDegreeHasNoInterlacing) {
    for (long m = 61; m <= 120; ++m) {
        if (expected_squares_degree(m) <= 4) continue;
        const auto r = classify_cyclotomic(m);
        ASSERT_TRUE(r.analysis.not_in_a2()) << m;
        EXPECT_TRUE(r.analysis.obstructions()->front().is_no_interlacing()) << m;
    }
}
