#include "atanpoly/polycore.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace atanpoly;

namespace {

IntPolynomial P(std::initializer_list<long long> c) {
    std::vector<BigInt> v(c.begin(), c.end());
    return IntPolynomial(std::move(v));
}

IntPolynomial random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 8);
    std::uniform_int_distribution<int> coef(-9, 9);
    std::vector<BigInt> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& v : c) v = coef(rng);
    return IntPolynomial(std::move(c));
}

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> den(1, 30);
    return Rational(num(rng), den(rng));
}

}  // namespace

TEST(IntPolynomial, ZeroIsEmpty) {
    const IntPolynomial z;
    EXPECT_TRUE(z.is_zero());
    EXPECT_FALSE(z.degree().has_value());
    EXPECT_TRUE(P({0, 0, 0}).is_zero());
    EXPECT_EQ(P({1, 2, 0, 0}).degree(), 1u);
    EXPECT_EQ(P({1, 2, 0, 0}).coeffs().size(), 2u);
}

TEST(IntPolynomial, Add) {
    EXPECT_TRUE(add(P({1}), P({-1})).is_zero());
    EXPECT_EQ(add(P({-1, 0, 3}), P({1})), P({0, 0, 3}));
    EXPECT_EQ(add(P({0, -2}), P({-1, 0, 3})), P({-1, -2, 3}));
}

TEST(IntPolynomial, Mul) {
    EXPECT_EQ(mul(P({-1, 1}), P({1, 1})), P({-1, 0, 1}));
    EXPECT_EQ(mul(P({1, 0, 1}), P({1})), P({1, 0, 1}));
    EXPECT_EQ(mul(P({1, 0, 1}), P({-1, 0, 3})), P({-1, 0, 2, 0, 3}));
    EXPECT_TRUE(mul(P({1, 2}), IntPolynomial{}).is_zero());
}

TEST(IntPolynomial, Differentiate) {
    EXPECT_EQ(differentiate(P({-1, 0, 3})), P({0, 6}));
    EXPECT_TRUE(differentiate(P({1})).is_zero());
    EXPECT_EQ(differentiate(P({1, 0, -10, 0, 5})), P({0, -20, 0, 20}));
    EXPECT_TRUE(differentiate(IntPolynomial{}).is_zero());
}

TEST(IntPolynomial, EvalRational) {
    EXPECT_EQ(eval_rational(P({-1, 0, 3}), Rational(0)), Rational(-1));
    EXPECT_EQ(eval_rational(P({0, -2}), Rational(1)), Rational(-2));
    EXPECT_EQ(eval_rational(P({1, 0, -10, 0, 5}), Rational(1, 2)), Rational(-19, 16));
    EXPECT_EQ(eval_rational(IntPolynomial{}, Rational(3)), Rational(0));
}

TEST(IntPolynomial, EvalFloat) {
    EXPECT_EQ(eval_float(P({-1, 0, 3}), 0.0), -1.0);
    EXPECT_EQ(eval_float(P({0, -2}), 1.0), -2.0);
    EXPECT_EQ(eval_float(P({1, 0, -10, 0, 5}), 0.5), -19.0 / 16.0);
}

TEST(IntPolynomial, ToString) {
    EXPECT_EQ(to_string(P({-1, 0, 3})), "3x^2 - 1");
    EXPECT_EQ(to_string(P({0, -2})), "-2x");
    EXPECT_EQ(to_string(P({0, 1, 0, -4})), "-4x^3 + x");
    EXPECT_EQ(to_string(IntPolynomial{}), "0");
}

TEST(IntPolynomialProperty, RingLaws) {
    std::mt19937 rng(20261015);
    for (int trial = 0; trial < 300; ++trial) {
        const auto a = random_poly(rng);
        const auto b = random_poly(rng);
        const auto c = random_poly(rng);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(differentiate(a * b), differentiate(a) * b + a * differentiate(b));
        ASSERT_TRUE((a - a).is_zero());
    }
}

TEST(IntPolynomialProperty, EvaluationIsAHomomorphism) {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_poly(rng);
        const auto b = random_poly(rng);
        for (int i = 0; i < 10; ++i) {
            const Rational x = random_rational(rng);
            const Rational ea = eval_rational(a, x);
            const Rational eb = eval_rational(b, x);
            ASSERT_EQ(eval_rational(a + b, x), ea + eb);
            ASSERT_EQ(eval_rational(a * b, x), ea * eb);
            ASSERT_EQ(eval_rational(to_rational(a), x), ea);
        }
    }
}

TEST(CompensatedHorner, BeatsPlainHornerOnCancellation) {
    // (x - 1)^9 near its root, condition number about 2^63: plain Horner
    // loses every digit, the compensated form keeps about 1e-13.
    IntPolynomial p{BigInt(1)};
    for (int i = 0; i < 9; ++i) p = p * P({-1, 1});
    const double x = 1.015625;  // 1 + 2^-6, exact
    const double exact = to_double(eval_rational(p, rational_from_double(x)));
    const double comp = eval_compensated(p, x);
    const double plain = eval_float(p, x);
    EXPECT_NEAR(comp, exact, 1e-11 * std::fabs(exact));
    EXPECT_GT(std::fabs(plain - exact), 1e3 * std::fabs(comp - exact));
}

TEST(CompensatedHorner, CoefficientsBeyondTwoToFiftyThree) {
    // 2^60 + 1 is not a double; the split keeps the low part.
    const IntPolynomial p{BigInt((BigInt(1) << 60) + 1), BigInt(-(BigInt(1) << 60))};
    EXPECT_EQ(eval_compensated(p, 1.0), 1.0);
    EXPECT_EQ(eval_float(p, 1.0), 0.0);
}

TEST(RatPolynomial, Basics) {
    const RatPolynomial p{Rational(-1, 3), Rational(0), Rational(1)};
    EXPECT_EQ(p.degree(), 2u);
    EXPECT_EQ(differentiate(p), (RatPolynomial{Rational(0), Rational(2)}));
    EXPECT_EQ(eval_rational(p, Rational(1, 2)), Rational(-1, 12));
    EXPECT_EQ(to_string(p), "x^2 - 1/3");
    EXPECT_TRUE((Rational(0) * p).is_zero());
}
