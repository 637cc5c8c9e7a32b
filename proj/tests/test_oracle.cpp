#include "atanpoly/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace atanpoly;

namespace {

double factorial(unsigned n) {
    double f = 1.0;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

double full_derivative(unsigned n, const Rational& x) { return factorial(n - 1) * to_double(exact_g(n, x)); }

}  // namespace

TEST(ExactG, Examples) {
    EXPECT_EQ(exact_g(1, Rational(1, 2)), Rational(4, 5));
    EXPECT_EQ(exact_g(2, Rational(0)), Rational(0));
    EXPECT_EQ(exact_g(3, Rational(1)), Rational(1, 4));
    // q_3(1/2) / (5/4)^4 = (3/2) / (625/256)
    EXPECT_EQ(exact_g(4, Rational(1, 2)), Rational(384, 625));
    EXPECT_THROW(exact_g(0, Rational(0)), std::invalid_argument);
}

TEST(ExactG, ConsistentWithDefinition) {
    const QSequence q = gen_recurrence(100);
    for (unsigned n = 1; n <= 100; ++n) {
        for (const Rational& x : {Rational(0), Rational(1, 3), Rational(-2), Rational(7, 5), Rational(-11, 4)}) {
            Rational s_pow = 1;
            for (unsigned k = 0; k < n; ++k) s_pow *= 1 + x * x;
            ASSERT_EQ(exact_g(n, x) * s_pow - eval_rational(q[n - 1], x), 0) << n;
        }
    }
}

TEST(FdWeights, Stencils) {
    EXPECT_EQ(fd_weights(1), (std::vector<double>{-0.5, 0.0, 0.5}));
    EXPECT_EQ(fd_weights(2), (std::vector<double>{1.0, -2.0, 1.0}));
    EXPECT_EQ(fd_weights(3), (std::vector<double>{-0.5, 1.0, 0.0, -1.0, 0.5}));
    EXPECT_EQ(fd_weights(4), (std::vector<double>{1.0, -4.0, 6.0, -4.0, 1.0}));
    for (unsigned n = 1; n <= 5; ++n) EXPECT_EQ(fd_weights(n).size(), natural_stencil_width(n));
}

TEST(FdWeights, MomentsAndTruncationConstant) {
    // Taylor expansion: sum_j w_j f(x + jh) / h^n = sum_k f^(k) h^(k-n) M_k / k!
    // with M_k = sum_j w_j j^k.  Consistency needs M_k = n! [k == n] for k <= n+1;
    // the leading error coefficient is M_{n+2} / (n+2)!.
    for (unsigned n = 1; n <= 5; ++n) {
        const auto w = fd_weights(n);
        const int r = static_cast<int>(w.size() / 2);
        for (unsigned k = 0; k <= n + 2; ++k) {
            double m = 0.0;
            for (int j = -r; j <= r; ++j) m += w[static_cast<std::size_t>(j + r)] * std::pow(j, k);
            if (k <= n + 1) {
                EXPECT_DOUBLE_EQ(m, k == n ? factorial(n) : 0.0) << n << " " << k;
            } else {
                EXPECT_DOUBLE_EQ(m / factorial(n + 2), fd_truncation_constant(n)) << n;
            }
        }
    }
}

TEST(FdDerivative, Examples) {
    EXPECT_NEAR(fd_derivative(1, 0.0, {1, 1e-5, 3}), 1.0, 1e-9);
    EXPECT_NEAR(fd_derivative(2, 1.0, {2, 1e-4, 3}), -0.5, 1e-6);
    EXPECT_NEAR(fd_derivative(4, 0.5, {4, 1e-2, 5}), full_derivative(4, Rational(1, 2)), 1e-3);
    EXPECT_NEAR(full_derivative(4, Rational(1, 2)), 2304.0 / 625.0, 1e-15);
}

TEST(FdDerivative, DefaultSteps) {
    EXPECT_EQ(default_fd_config(1).step, 1e-5);
    EXPECT_EQ(default_fd_config(2).step, 1e-4);
    EXPECT_EQ(default_fd_config(3).step, 1e-3);
    EXPECT_EQ(default_fd_config(4).step, 1e-2);
    EXPECT_EQ(default_fd_config(5).step, 1e-2);
    for (unsigned n = 1; n <= 5; ++n) EXPECT_EQ(default_fd_config(n).stencil_width % 2, 1u);
}

TEST(FdDerivative, Errors) {
    EXPECT_THROW(fd_derivative(6, 0.0, {6, 1e-2, 7}), std::invalid_argument);
    EXPECT_THROW(default_fd_config(6), std::invalid_argument);
    EXPECT_THROW(fd_derivative(1, 0.0, {1, 0.0, 3}), std::invalid_argument);
    EXPECT_THROW(fd_derivative(1, 0.0, {1, -1e-3, 3}), std::invalid_argument);
    EXPECT_THROW(fd_derivative(2, 0.0, {2, 1e-3, 4}), std::invalid_argument);
    EXPECT_THROW(fd_derivative(3, 0.0, {3, 1e-3, 3}), std::invalid_argument);
    EXPECT_THROW(fd_derivative(2, 0.0, {3, 1e-3, 5}), std::invalid_argument);
    EXPECT_THROW(fd_derivative(1, NAN, {1, 1e-3, 3}), std::domain_error);
}

TEST(FdDerivative, WiderStencilIsPadding) {
    EXPECT_EQ(fd_derivative(2, 0.3, {2, 1e-3, 7}), fd_derivative(2, 0.3, {2, 1e-3, 3}));
}

TEST(FdDerivative, LowOrdersWithinTightTolerance) {
    for (unsigned n = 1; n <= 3; ++n) {
        for (const Rational& x : {Rational(0), Rational(1, 2), Rational(-1, 2), Rational(1), Rational(-1), Rational(2),
                                  Rational(-2)}) {
            const double exact = full_derivative(n, x);
            const double err = std::fabs(fd_derivative(n, to_double(x)) - exact) / std::max(1.0, std::fabs(exact));
            EXPECT_LE(err, 1e-5) << n << " " << to_string(x);
        }
    }
}

TEST(FdDerivative, ErrorFollowsTruncationModel) {
    // At the default steps orders 4 and 5 are truncation dominated:
    // fd - f^(n) ~ c_n h^2 f^(n+2).
    for (unsigned n = 4; n <= 5; ++n) {
        const double h = default_fd_config(n).step;
        for (const Rational& x : {Rational(1, 2), Rational(1), Rational(2)}) {
            const double predicted = fd_truncation_constant(n) * h * h * full_derivative(n + 2, x);
            const double actual = fd_derivative(n, to_double(x)) - full_derivative(n, x);
            // rounding in the stencil: eps * sum |w| * max|atan| / h^n
            double wsum = 0.0;
            for (double w : fd_weights(n)) wsum += std::fabs(w);
            const double rounding = 1.2e-16 * wsum * 1.6 / std::pow(h, n);
            EXPECT_NEAR(actual, predicted, 0.2 * std::fabs(predicted) + rounding) << n << " " << to_string(x);
        }
    }
}
