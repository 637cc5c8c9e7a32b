#ifndef ATANPOLY_POLYCORE_HPP
#define ATANPOLY_POLYCORE_HPP

// Dense univariate polynomials over exact coefficient rings.
//
// Coefficients are stored in ascending order (index i holds the coefficient of
// x^i).  The zero polynomial is the empty sequence; every other value has a
// nonzero last entry.

#include "atanpoly/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace atanpoly {

template <class C>
class Polynomial {
public:
    using coefficient_type = C;

    Polynomial() = default;

    explicit Polynomial(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    Polynomial(std::initializer_list<C> coeffs) : coeffs_(coeffs) { trim(); }

    static Polynomial constant(C c) { return Polynomial(std::vector<C>{std::move(c)}); }

    /// c * x^k
    static Polynomial monomial(C c, std::size_t k) {
        std::vector<C> v(k + 1);
        v[k] = std::move(c);
        return Polynomial(std::move(v));
    }

    /// Degree, or nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    bool is_zero() const { return coeffs_.empty(); }

    std::span<const C> coeffs() const { return coeffs_; }

    /// Coefficient of x^i; zero beyond the degree.
    C coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : C(0); }

    const C& leading() const { return coeffs_.back(); }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        const auto& longer = a.coeffs_.size() >= b.coeffs_.size() ? a.coeffs_ : b.coeffs_;
        const auto& shorter = a.coeffs_.size() >= b.coeffs_.size() ? b.coeffs_ : a.coeffs_;
        std::vector<C> out(longer);
        for (std::size_t i = 0; i < shorter.size(); ++i) out[i] += shorter[i];
        return Polynomial(std::move(out));
    }

    friend Polynomial operator-(const Polynomial& a) {
        std::vector<C> out(a.coeffs_);
        for (auto& c : out) c = -c;
        return Polynomial(std::move(out));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<C> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(const C& s, const Polynomial& a) {
        if (s == 0) return {};
        std::vector<C> out(a.coeffs_);
        for (auto& c : out) c *= s;
        return Polynomial(std::move(out));
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<C> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<Rational>;

template <class C>
Polynomial<C> add(const Polynomial<C>& a, const Polynomial<C>& b) {
    return a + b;
}

template <class C>
Polynomial<C> mul(const Polynomial<C>& a, const Polynomial<C>& b) {
    return a * b;
}

template <class C>
Polynomial<C> differentiate(const Polynomial<C>& a) {
    const auto c = a.coeffs();
    if (c.size() <= 1) return {};
    std::vector<C> out(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * static_cast<unsigned long>(i);
    return Polynomial<C>(std::move(out));
}

/// x as a polynomial.
template <class C>
Polynomial<C> identity_poly() {
    return Polynomial<C>::monomial(C(1), 1);
}

/// 1 + x^2
template <class C>
Polynomial<C> one_plus_x_squared() {
    return Polynomial<C>{C(1), C(0), C(1)};
}

inline RatPolynomial to_rational(const IntPolynomial& a) {
    std::vector<Rational> out(a.coeffs().begin(), a.coeffs().end());
    return RatPolynomial(std::move(out));
}

/// Exact value at a rational point.  For integer coefficients and x = p/q the
/// Horner recurrence runs over integers on the homogenised form
/// sum c_i p^i q^(d-i), with a single normalisation at the end.
inline Rational eval_rational(const IntPolynomial& a, const Rational& x) {
    const auto c = a.coeffs();
    if (c.empty()) return Rational(0);
    const BigInt& p = numerator(x);
    const BigInt& q = denominator(x);
    BigInt acc = c.back();
    BigInt qpow = 1;
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        qpow *= q;
        acc = acc * p + c[i] * qpow;
    }
    return Rational(acc, qpow);
}

inline Rational eval_rational(const RatPolynomial& a, const Rational& x) {
    Rational acc = 0;
    const auto c = a.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

/// Plain double Horner.  Each coefficient is rounded to double at use, which
/// is lossy once |c| exceeds 2^53.
inline double eval_float(const IntPolynomial& a, double x) {
    const auto c = a.coeffs();
    double acc = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + to_double(c[i]);
    return acc;
}

/// Coefficients carried as unevaluated sums hi + lo of two doubles, which
/// represent integers up to ~2^106 exactly.
struct SplitPolynomial {
    std::vector<double> hi;
    std::vector<double> lo;
};

inline SplitPolynomial split(const IntPolynomial& a) {
    SplitPolynomial out;
    out.hi.reserve(a.coeffs().size());
    out.lo.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs()) {
        const double h = to_double(c);
        out.hi.push_back(h);
        out.lo.push_back(std::isfinite(h) ? to_double(BigInt(c - BigInt(h))) : 0.0);
    }
    return out;
}

namespace detail {

inline void two_sum(double a, double b, double& s, double& e) {
    s = a + b;
    const double bb = s - a;
    e = (a - (s - bb)) + (b - bb);
}

inline void two_prod(double a, double b, double& p, double& e) {
    p = a * b;
    e = std::fma(a, b, -p);
}

}  // namespace detail

/// Compensated Horner: the rounding error of every product and sum is
/// captured exactly and accumulated in a second Horner pass, so the result is
/// as accurate as plain Horner run in twice the working precision.
inline double eval_compensated(const SplitPolynomial& a, double x) {
    const std::size_t n = a.hi.size();
    if (n == 0) return 0.0;
    double s = a.hi[n - 1];
    double err = a.lo[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) {
        double p, pe, se;
        detail::two_prod(s, x, p, pe);
        detail::two_sum(p, a.hi[i], s, se);
        err = err * x + (pe + se + a.lo[i]);
    }
    return s + err;
}

inline double eval_compensated(const IntPolynomial& a, double x) { return eval_compensated(split(a), x); }

template <class C>
std::string to_string(const Polynomial<C>& a) {
    if (a.is_zero()) return "0";
    std::string out;
    const auto c = a.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        std::string mag = atanpoly::to_string(C(abs(c[i])));
        if (!out.empty()) out += c[i] < 0 ? " - " : " + ";
        else if (c[i] < 0) out += "-";
        if (i == 0 || mag != "1") out += mag;
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace atanpoly

#endif  // ATANPOLY_POLYCORE_HPP
