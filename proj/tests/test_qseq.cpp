#include "atanpoly/qseq.hpp"

#include <gtest/gtest.h>

using namespace atanpoly;

namespace {

IntPolynomial P(std::initializer_list<long long> c) {
    std::vector<BigInt> v(c.begin(), c.end());
    return IntPolynomial(std::move(v));
}

const QSequence& seq512() {
    static const QSequence q = gen_recurrence(512);
    return q;
}

std::vector<BigInt> row(std::initializer_list<long long> c) { return {c.begin(), c.end()}; }

}  // namespace

TEST(ClosedForm, SmallIndices) {
    EXPECT_EQ(gen_closed_form(0), P({1}));
    EXPECT_EQ(gen_closed_form(2), P({-1, 0, 3}));
    EXPECT_EQ(gen_closed_form(5), P({0, -6, 0, 20, 0, -6}));
}

TEST(Recurrence, SmallIndices) {
    const QSequence q1 = gen_recurrence(1);
    ASSERT_EQ(q1.max_n(), 1u);
    EXPECT_EQ(q1[0], P({1}));
    EXPECT_EQ(q1[1], P({0, -2}));
    EXPECT_EQ(gen_recurrence(3)[3], P({0, 4, 0, -4}));
    EXPECT_EQ(gen_recurrence(4)[4], P({1, 0, -10, 0, 5}));
    EXPECT_EQ(gen_recurrence(0).max_n(), 0u);
}

TEST(ValueAtZero, Parity) {
    EXPECT_EQ(value_at_zero(1), 0);
    EXPECT_EQ(value_at_zero(4), 1);
    EXPECT_EQ(value_at_zero(2), -1);
    EXPECT_EQ(value_at_zero(0), 1);
}

TEST(CoefficientTriangle, Rows) {
    const auto t = coefficient_triangle(3);
    ASSERT_EQ(t.size(), 4u);
    EXPECT_EQ(t[0], row({1}));
    EXPECT_EQ(t[1], row({2, 0}));
    EXPECT_EQ(t[2], row({3, 0, -1}));
    EXPECT_EQ(t[3], row({4, 0, -4, 0}));
}

TEST(CoefficientTriangle, OddColumnsVanish) {
    const auto t = coefficient_triangle(60);
    for (unsigned n = 0; n <= 60; ++n) {
        ASSERT_EQ(t[n].size(), n + 1);
        for (unsigned k = 1; k <= n; k += 2) ASSERT_EQ(t[n][k], 0);
        // alpha_{n,k} = (-1)^{k/2} binom(n+1, k+1) for even k
        for (unsigned k = 0; k <= n; k += 2) {
            const BigInt b = binomial(n + 1, k + 1);
            ASSERT_EQ(t[n][k], (k / 2) % 2 == 0 ? b : BigInt(-b));
        }
    }
}

TEST(DerivativeIdentity, Examples) {
    EXPECT_TRUE(check_derivative_identity(1));
    EXPECT_TRUE(check_derivative_identity(2));
    EXPECT_TRUE(check_derivative_identity(4));
    EXPECT_THROW(check_derivative_identity(0), std::invalid_argument);
}

TEST(DerivativeIdentity, DetectsCorruption) {
    auto polys = std::vector<IntPolynomial>(seq512().polys().begin(), seq512().polys().begin() + 6);
    polys[4] = polys[4] + P({0, 1});
    const QSequence bad(std::move(polys));
    EXPECT_FALSE(check_derivative_identity(bad, 4));
    EXPECT_FALSE(check_derivative_identity(bad, 5));
    EXPECT_TRUE(check_derivative_identity(bad, 3));
}

TEST(Orthogonality, WitnessValues) {
    const OrthogonalityWitness w = orthogonality_counterexample();
    EXPECT_EQ(w.alpha, Rational(-5, 4));
    EXPECT_EQ(w.beta, Rational(0));
    EXPECT_EQ(w.gamma, Rational(1));
    ASSERT_EQ(w.residuals.size(), 5u);
    EXPECT_EQ(w.residuals[2].required, Rational(-10));
    EXPECT_EQ(w.residuals[2].achieved, Rational(-8));
    EXPECT_EQ(w.residuals[2].mismatch(), Rational(2));
    EXPECT_EQ(w.residuals[1].required, Rational(0));
    EXPECT_EQ(w.residuals[1].achieved, Rational(0));
    for (unsigned k : {0u, 1u, 3u, 4u}) EXPECT_EQ(w.residuals[k].mismatch(), 0) << k;
    EXPECT_TRUE(w.infeasible());
    EXPECT_EQ(w.failing_power(), 2u);
}

// Properties up to n = 512.

TEST(QSequenceProperty, ClosedFormEqualsRecurrence) {
    for (unsigned n = 0; n <= 512; ++n) ASSERT_EQ(gen_closed_form(n), seq512()[n]) << n;
}

TEST(QSequenceProperty, DegreeLeadingAndParityGaps) {
    for (unsigned n = 0; n <= 512; ++n) {
        const auto& q = seq512()[n];
        ASSERT_EQ(q.degree(), n);
        ASSERT_EQ(q.leading(), n % 2 == 0 ? BigInt(n + 1) : BigInt(-BigInt(n + 1)));
        for (unsigned k = 1; k <= n; k += 2) ASSERT_EQ(q.coeff(n - k), 0) << n << "," << k;
    }
}

TEST(QSequenceProperty, ParityAtRationalPoints) {
    for (unsigned n = 0; n <= 512; ++n) {
        for (const Rational& x : {Rational(1, 3), Rational(2), Rational(7, 5)}) {
            const Rational v = eval_rational(seq512()[n], x);
            const Rational w = eval_rational(seq512()[n], Rational(-x));
            ASSERT_EQ(w, n % 2 == 0 ? v : Rational(-v)) << n;
        }
    }
}

TEST(QSequenceProperty, ConstantTermIsValueAtZero) {
    for (unsigned n = 0; n <= 512; ++n) ASSERT_EQ(gen_closed_form(n).coeff(0), value_at_zero(n)) << n;
}

TEST(QSequenceProperty, DerivativeIdentity) {
    for (unsigned n = 1; n <= 512; ++n) ASSERT_TRUE(check_derivative_identity(seq512(), n)) << n;
}

TEST(QSequenceProperty, ClosedFormSatisfiesRecurrence) {
    const IntPolynomial two_x = P({0, 2});
    const IntPolynomial s = P({1, 0, 1});
    IntPolynomial prev2 = gen_closed_form(0);
    IntPolynomial prev1 = gen_closed_form(1);
    for (unsigned n = 2; n <= 512; ++n) {
        IntPolynomial cur = gen_closed_form(n);
        ASSERT_TRUE((cur + two_x * prev1 + s * prev2).is_zero()) << n;
        prev2 = std::move(prev1);
        prev1 = std::move(cur);
    }
}
