#ifndef ATANPOLY_DERIV_HPP
#define ATANPOLY_DERIV_HPP

// n-th derivative of arctan through five equivalent formulations.
//
// Every route computes the normalised quantity
//   g_n(x) = arctan^(n)(x) / (n-1)! = q_{n-1}(x) / (1+x^2)^n,
// which stays representable long after (n-1)! overflows a double.  The full
// derivative is available as a ScaledValue from eval_full.

#include "atanpoly/chebyshev.hpp"
#include "atanpoly/polycore.hpp"
#include "atanpoly/qseq.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace atanpoly {

enum class Route { ExactRational, HornerFloat, Chebyshev, Trigonometric, PartialFraction };

inline constexpr std::array<Route, 5> all_routes{Route::ExactRational, Route::HornerFloat, Route::Chebyshev,
                                                 Route::Trigonometric, Route::PartialFraction};

inline constexpr std::array<Route, 4> floating_routes{Route::HornerFloat, Route::Chebyshev, Route::Trigonometric,
                                                      Route::PartialFraction};

inline std::string_view to_string(Route r) {
    switch (r) {
        case Route::ExactRational: return "exact";
        case Route::HornerFloat: return "horner";
        case Route::Chebyshev: return "cheb";
        case Route::Trigonometric: return "trig";
        case Route::PartialFraction: return "pf";
    }
    return "?";
}

inline std::optional<Route> parse_route(std::string_view name) {
    if (name == "exact" || name == "rational") return Route::ExactRational;
    if (name == "horner") return Route::HornerFloat;
    if (name == "cheb" || name == "chebyshev") return Route::Chebyshev;
    if (name == "trig" || name == "trigonometric") return Route::Trigonometric;
    if (name == "pf" || name == "partial-fraction") return Route::PartialFraction;
    return std::nullopt;
}

/// Evaluation point: exact for the rational route, double for the others.
using Point = std::variant<Rational, double>;

struct NormalizedDerivative {
    std::variant<Rational, double> value;
    unsigned n = 0;
    Point x;
    Route route = Route::ExactRational;

    double as_double() const {
        if (const auto* r = std::get_if<Rational>(&value)) return to_double(*r);
        return std::get<double>(value);
    }
};

/// Full derivative value carried as sign and magnitude so that (n-1)! never
/// has to fit in a double: |v| = exp(log_magnitude) = mantissa * 2^binary_exponent.
/// Zero is {0, -inf, 0, 0}.
struct ScaledValue {
    int sign = 0;
    double log_magnitude = -std::numeric_limits<double>::infinity();
    double mantissa = 0.0;  // in [1, 2), or 0
    std::int64_t binary_exponent = 0;

    /// The value as a double; +-inf or 0 outside the double range.
    double to_double() const {
        if (sign == 0) return 0.0;
        const auto e = static_cast<int>(std::clamp<std::int64_t>(binary_exponent, -100000, 100000));
        return sign * std::ldexp(mantissa, e);
    }
};

namespace detail {

inline void require_order(unsigned n) {
    if (n < 1) throw std::invalid_argument("derivative order must be >= 1");
}

inline void require_finite(double x) {
    if (!std::isfinite(x)) throw std::domain_error("evaluation point must be finite");
}

inline double alternating(unsigned k) { return k % 2 == 0 ? 1.0 : -1.0; }

/// v / s^n without forming s^n when v is large but the quotient is not.
inline double divide_by_power(double v, double s, unsigned n) {
    return v / std::pow(s, static_cast<double>(n - n / 2)) / std::pow(s, static_cast<double>(n / 2));
}

inline std::complex<double> complex_pow(std::complex<double> base, unsigned n) {
    std::complex<double> result{1.0, 0.0};
    while (n > 0) {
        if (n & 1u) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

inline Rational rational_pow(const Rational& r, unsigned n) {
    return Rational(boost::multiprecision::pow(numerator(r), n), boost::multiprecision::pow(denominator(r), n));
}

}  // namespace detail

/// sin(n * arccot x) with arccot taking values in (0, pi).
inline double sin_n_arccot(unsigned n, double x) {
    detail::require_order(n);
    detail::require_finite(x);
    // atan2(1, x) is pi/2 - arctan(x) on the (0, pi) branch, without the
    // cancellation of the subtraction for large |x|.
    const double theta = std::atan2(1.0, x);
    return std::sin(static_cast<double>(n) * theta);
}

/// Evaluates g_n by every route.  Holds q_0 .. q_{n_max-1} and their
/// double-double splits; read-only after construction, so a single instance
/// may serve concurrent callers.
class DerivativeEvaluator {
public:
    explicit DerivativeEvaluator(unsigned n_max) : q_(gen_recurrence(n_max == 0 ? 0 : n_max - 1)) { init(); }

    explicit DerivativeEvaluator(QSequence q) : q_(std::move(q)) { init(); }

    unsigned max_order() const { return static_cast<unsigned>(q_.max_n()) + 1; }

    const QSequence& sequence() const { return q_; }

    Rational exact(unsigned n, const Rational& x) const {
        check(n);
        const Rational s = 1 + x * x;
        return eval_rational(q_[n - 1], x) / detail::rational_pow(s, n);
    }

    double horner(unsigned n, double x) const {
        check(n);
        detail::require_finite(x);
        return detail::divide_by_power(eval_compensated(split_[n - 1], x), std::fma(x, x, 1.0), n);
    }

    /// Parity dispatch: n = 2m+1 uses (-1)^m T_{2m+1}(t), n = 2m uses
    /// (-1)^m x U_{2m-1}(t), t = 1/sqrt(1+x^2), both over (1+x^2)^(m+1/2).
    double chebyshev(unsigned n, double x) const {
        check(n);
        detail::require_finite(x);
        const double s = std::fma(x, x, 1.0);
        const double root = std::sqrt(s);
        const double t = 1.0 / root;
        double numer;
        unsigned m;
        if (n % 2 == 1) {
            m = (n - 1) / 2;
            numer = detail::alternating(m) * cheb_value(ChebKind::FirstKind, n, t);
        } else {
            m = n / 2;
            numer = detail::alternating(m) * x * cheb_value(ChebKind::SecondKind, n - 1, t);
        }
        return numer / root / std::pow(s, static_cast<double>(m));
    }

    double trigonometric(unsigned n, double x) const {
        check(n);
        const double s = std::fma(x, x, 1.0);
        double v = detail::alternating(n - 1) * sin_n_arccot(n, x) / std::pow(s, static_cast<double>(n / 2));
        if (n % 2 == 1) v /= std::sqrt(s);
        return v;
    }

    /// (-1)^(n-1) ((x+i)^n - (x-i)^n) / (2i) over (1+x^2)^n in complex doubles.
    double partial_fraction(unsigned n, double x) const {
        check(n);
        detail::require_finite(x);
        const std::complex<double> plus = detail::complex_pow({x, 1.0}, n);
        const std::complex<double> minus = detail::complex_pow({x, -1.0}, n);
        const std::complex<double> numer = (plus - minus) / std::complex<double>{0.0, 2.0};
        return detail::divide_by_power(detail::alternating(n - 1) * numer.real(), std::fma(x, x, 1.0), n);
    }

    double evaluate(unsigned n, double x, Route route) const {
        switch (route) {
            case Route::ExactRational: return to_double(exact(n, rational_from_double(x)));
            case Route::HornerFloat: return horner(n, x);
            case Route::Chebyshev: return chebyshev(n, x);
            case Route::Trigonometric: return trigonometric(n, x);
            case Route::PartialFraction: return partial_fraction(n, x);
        }
        throw std::invalid_argument("unknown route");
    }

private:
    void init() {
        split_.reserve(q_.max_n() + 1);
        for (const auto& p : q_.polys()) split_.push_back(split(p));
    }

    void check(unsigned n) const {
        detail::require_order(n);
        if (n > max_order()) {
            throw std::out_of_range("order " + std::to_string(n) + " exceeds evaluator capacity " +
                                    std::to_string(max_order()));
        }
    }

    QSequence q_;
    std::vector<SplitPolynomial> split_;
};

/// g_n(x) by the requested route.  The exact route requires a rational
/// point; floating routes round a rational point to the nearest double.
inline NormalizedDerivative eval_normalized(unsigned n, const Point& x, Route route,
                                            const QSequence* cache = nullptr) {
    detail::require_order(n);
    if (const auto* d = std::get_if<double>(&x)) detail::require_finite(*d);
    const bool cached = cache != nullptr && cache->max_n() + 1 >= n;
    auto run = [&](const DerivativeEvaluator& ev) -> NormalizedDerivative {
        if (route == Route::ExactRational) {
            const auto* r = std::get_if<Rational>(&x);
            if (r == nullptr) throw std::invalid_argument("exact route requires a rational evaluation point");
            return {ev.exact(n, *r), n, x, route};
        }
        const double xd = std::holds_alternative<double>(x) ? std::get<double>(x) : to_double(std::get<Rational>(x));
        detail::require_finite(xd);
        return {ev.evaluate(n, xd, route), n, x, route};
    };
    if (cached) return run(DerivativeEvaluator(*cache));
    return run(DerivativeEvaluator(n));
}

/// ScaledValue of an exact rational.
inline ScaledValue scaled_from_rational(const Rational& v) {
    ScaledValue out;
    if (v == 0) return out;
    out.sign = v.sign();
    const BigInt num = abs(numerator(v));
    const BigInt& den = denominator(v);
    auto e = static_cast<std::int64_t>(bit_length(num)) - static_cast<std::int64_t>(bit_length(den));
    double m = e >= 0 ? ratio_to_double(num, den << static_cast<unsigned>(e))
                      : ratio_to_double(num << static_cast<unsigned>(-e), den);
    // num/den / 2^e lies in (1/2, 2); rounding may also land exactly on 2.
    if (m < 1.0) {
        m *= 2.0;
        --e;
    }
    if (m >= 2.0) {
        m /= 2.0;
        ++e;
    }
    out.mantissa = m;
    out.binary_exponent = e;
    out.log_magnitude = std::log(m) + static_cast<double>(e) * std::numbers::ln2;
    return out;
}

/// arctan^(n)(x) = (n-1)! g_n(x) as sign and magnitude, evaluated exactly at
/// the dyadic rational value of x.
inline ScaledValue eval_full(unsigned n, double x, const QSequence* cache = nullptr) {
    detail::require_order(n);
    detail::require_finite(x);
    const Rational g = std::get<Rational>(eval_normalized(n, rational_from_double(x), Route::ExactRational, cache).value);
    BigInt factorial = 1;
    for (unsigned k = 2; k < n; ++k) factorial *= k;
    return scaled_from_rational(g * factorial);
}

/// [x^k] of the Maclaurin series of arctan: arctan^(k)(0)/k! = q_{k-1}(0)/k.
inline Rational maclaurin_coeff(unsigned k) {
    if (k == 0) return Rational(0);
    return Rational(value_at_zero(k - 1), BigInt(k));
}

}  // namespace atanpoly

#endif  // ATANPOLY_DERIV_HPP
