#ifndef ATANPOLY_QSEQ_HPP
#define ATANPOLY_QSEQ_HPP

// The arctan polynomials q_n: numerators of the derivatives
//   arctan^(n)(x) = (n-1)! q_{n-1}(x) / (1+x^2)^n.

#include "atanpoly/polycore.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace atanpoly {

/// q_0 ... q_max_n, immutable once built.
class QSequence {
public:
    explicit QSequence(std::vector<IntPolynomial> polys) : polys_(std::move(polys)) {
        if (polys_.empty()) throw std::invalid_argument("QSequence: empty");
    }

    std::size_t max_n() const { return polys_.size() - 1; }

    const IntPolynomial& operator[](std::size_t n) const { return polys_.at(n); }

    std::span<const IntPolynomial> polys() const { return polys_; }

private:
    std::vector<IntPolynomial> polys_;
};

/// q_n from the binomial sum: coefficient of x^(n-k) is
/// (-1)^n (-1)^(k/2) binom(n+1, k+1) for even k, zero for odd k.
inline IntPolynomial gen_closed_form(unsigned n) {
    std::vector<BigInt> c(n + 1);
    // binom(n+1, k+1) updated in place by the running product as k advances.
    BigInt b = n + 1;
    for (unsigned k = 0; k <= n; ++k) {
        if (k > 0) {
            b *= n + 1 - k;
            b /= k + 1;
        }
        if (k % 2 != 0) continue;
        const bool negative = ((n + k / 2) % 2) != 0;
        c[n - k] = negative ? BigInt(-b) : b;
    }
    return IntPolynomial(std::move(c));
}

/// q_0 = 1, q_1 = -2x, q_n = -2x q_{n-1} - (1+x^2) q_{n-2}.
inline QSequence gen_recurrence(unsigned n_max) {
    std::vector<IntPolynomial> q;
    q.reserve(n_max + 1);
    q.push_back(IntPolynomial{BigInt(1)});
    if (n_max >= 1) q.push_back(IntPolynomial{BigInt(0), BigInt(-2)});
    for (unsigned n = 2; n <= n_max; ++n) {
        const auto a = q[n - 1].coeffs();
        const auto b = q[n - 2].coeffs();
        std::vector<BigInt> c(n + 1);
        for (std::size_t i = 0; i < a.size(); ++i) c[i + 1] -= 2 * a[i];
        for (std::size_t i = 0; i < b.size(); ++i) {
            c[i] -= b[i];
            c[i + 2] -= b[i];
        }
        q.emplace_back(std::move(c));
    }
    return QSequence(std::move(q));
}

/// q_n(0) without building q_n: 0 for odd n, (-1)^(n/2) for even n.
inline BigInt value_at_zero(unsigned n) {
    if (n % 2 != 0) return 0;
    return (n / 2) % 2 == 0 ? 1 : -1;
}

/// alpha_{n,k} = (-1)^n [x^(n-k)] q_n, k = 0..n.
inline std::vector<BigInt> alpha_row(const IntPolynomial& q_n, unsigned n) {
    std::vector<BigInt> row(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        BigInt c = q_n.coeff(n - k);
        row[k] = n % 2 == 0 ? c : BigInt(-c);
    }
    return row;
}

/// Rows 0..n_max of the triangle alpha_{n,k} (row n, column k).
inline std::vector<std::vector<BigInt>> coefficient_triangle(unsigned n_max) {
    const QSequence q = gen_recurrence(n_max);
    std::vector<std::vector<BigInt>> rows;
    rows.reserve(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) rows.push_back(alpha_row(q[n], n));
    return rows;
}

/// q_n' == -(n+1) q_{n-1}, using entries of an existing sequence.
inline bool check_derivative_identity(const QSequence& q, unsigned n) {
    if (n < 1) throw std::invalid_argument("check_derivative_identity: n must be >= 1");
    return differentiate(q[n]) == BigInt(-static_cast<long long>(n) - 1) * q[n - 1];
}

inline bool check_derivative_identity(unsigned n) {
    if (n < 1) throw std::invalid_argument("check_derivative_identity: n must be >= 1");
    return check_derivative_identity(gen_recurrence(n), n);
}

struct CoefficientResidual {
    unsigned power;    // x^power
    Rational required; // coefficient in q_4
    Rational achieved; // coefficient in (alpha x - beta) q_3 - gamma q_2
    Rational mismatch() const { return achieved - required; }
};

/// Attempted fit q_4 = (alpha x - beta) q_3 - gamma q_2.
struct OrthogonalityWitness {
    Rational alpha;
    Rational beta;
    Rational gamma;
    std::vector<CoefficientResidual> residuals; // powers 0..4
    /// Lowest power whose mismatch is nonzero, if any.
    std::optional<unsigned> failing_power() const {
        for (const auto& r : residuals) {
            if (r.mismatch() != 0) return r.power;
        }
        return std::nullopt;
    }
    bool infeasible() const { return failing_power().has_value(); }
};

/// Solves the determined part of the coefficient match (alpha from x^4, beta
/// from x^3, gamma from x^0) and reports the residual of every coefficient.
/// A nonzero residual shows that q_n admits no three-term recurrence of the
/// orthogonal-polynomial form at degree 4.
inline OrthogonalityWitness orthogonality_counterexample() {
    const QSequence q = gen_recurrence(4);
    auto c2 = [&](unsigned i) { return Rational(q[2].coeff(i)); };
    auto c3 = [&](unsigned i) { return Rational(q[3].coeff(i)); };
    auto c4 = [&](unsigned i) { return Rational(q[4].coeff(i)); };

    // [x^k] of (alpha x - beta) q_3 - gamma q_2
    auto fitted = [&](const Rational& a, const Rational& b, const Rational& g, unsigned k) {
        Rational v = -b * c3(k) - g * c2(k);
        if (k >= 1) v += a * c3(k - 1);
        return v;
    };

    OrthogonalityWitness w;
    w.alpha = c4(4) / c3(3);
    w.beta = (w.alpha * c3(2) - c4(3)) / c3(3);
    w.gamma = -(c4(0) + w.beta * c3(0)) / c2(0);
    for (unsigned k = 0; k <= 4; ++k) {
        w.residuals.push_back({k, c4(k), fitted(w.alpha, w.beta, w.gamma, k)});
    }
    return w;
}

}  // namespace atanpoly

#endif  // ATANPOLY_QSEQ_HPP
