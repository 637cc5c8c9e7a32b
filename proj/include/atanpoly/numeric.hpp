#ifndef ATANPOLY_NUMERIC_HPP
#define ATANPOLY_NUMERIC_HPP

// Exact scalar types and the conversions between them and IEEE doubles.

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>

namespace atanpoly {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign(const BigInt& v) { return v.sign(); }
inline int sign(const Rational& v) { return v.sign(); }

/// Index of the most significant set bit of |v|; v must be nonzero.
inline std::size_t bit_length(const BigInt& v) {
    return static_cast<std::size_t>(boost::multiprecision::msb(abs(v))) + 1;
}

/// binom(n, k) by the running product  prod_{j=1..k} (n-k+j)/j, every
/// intermediate quotient being exact.
inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (unsigned j = 1; j <= k; ++j) {
        result *= n - k + j;
        result /= j;
    }
    return result;
}

/// Correctly rounded num/den (round to nearest even). Returns +-inf when the
/// quotient exceeds the double range.
inline double ratio_to_double(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("ratio_to_double: zero denominator");
    if (num == 0) return 0.0;
    const bool negative = (num.sign() < 0) != (den.sign() < 0);
    BigInt a = abs(num);
    BigInt b = abs(den);
    // Scale so the integer quotient carries 55..56 bits: two guard bits beyond
    // the 53-bit significand plus a sticky bit for the remainder.
    const long long shift = 55 - (static_cast<long long>(bit_length(a)) -
                                  static_cast<long long>(bit_length(b)));
    if (shift > 0) {
        a <<= static_cast<unsigned>(shift);
    } else if (shift < 0) {
        b <<= static_cast<unsigned>(-shift);
    }
    BigInt q;
    BigInt r;
    boost::multiprecision::divide_qr(a, b, q, r);
    auto bits = q.convert_to<std::uint64_t>();
    if (r != 0) bits |= 1u;
    // bits < 2^57, so the uint64 -> double conversion performs the one rounding.
    // ldexp saturates to inf / flushes toward zero outside the double range.
    const double v = std::ldexp(static_cast<double>(bits), static_cast<int>(-shift));
    return negative ? -v : v;
}

inline double to_double(const Rational& v) {
    return ratio_to_double(numerator(v), denominator(v));
}

inline double to_double(const BigInt& v) { return ratio_to_double(v, BigInt(1)); }

/// The exact rational value of a finite double.
inline Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw std::domain_error("rational_from_double: non-finite input");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    const double frac = std::frexp(std::fabs(x), &exp);
    const auto mant = static_cast<std::int64_t>(std::ldexp(frac, 53));
    exp -= 53;
    BigInt num = mant;
    BigInt den = 1;
    if (exp >= 0) {
        num <<= static_cast<unsigned>(exp);
    } else {
        den <<= static_cast<unsigned>(-exp);
    }
    Rational r(num, den);
    return x < 0 ? Rational(-r) : r;
}

/// Natural log of |v|, v nonzero; accurate to double precision for any size.
inline double log_abs(const BigInt& v) {
    if (v == 0) return -std::numeric_limits<double>::infinity();
    const std::size_t bits = bit_length(v);
    if (bits <= 1000) return std::log(std::fabs(to_double(v)));
    const std::size_t drop = bits - 64;
    const BigInt top = abs(v) >> static_cast<unsigned>(drop);
    return std::log(top.convert_to<double>()) + static_cast<double>(drop) * std::log(2.0);
}

inline double log_abs(const Rational& v) {
    if (v == 0) return -std::numeric_limits<double>::infinity();
    return log_abs(numerator(v)) - log_abs(denominator(v));
}

/// "p" or "p/q", lowest terms, sign on the numerator.
inline std::string to_string(const Rational& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Shortest decimal string that round-trips to the same double.
inline std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) throw std::runtime_error("format_double: to_chars failed");
    return std::string(buf, ptr);
}

namespace detail {

inline BigInt parse_integer(std::string_view s, std::string_view whole) {
    if (s.empty()) throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
    }
    // cpp_int reads a leading 0 as octal
    const auto first = s.find_first_not_of('0');
    return first == std::string_view::npos ? BigInt(0) : BigInt(std::string(s.substr(first)));
}

inline BigInt pow10(unsigned e) {
    BigInt r = 1;
    for (unsigned i = 0; i < e; ++i) r *= 10;
    return r;
}

}  // namespace detail

/// Parse an exact rational from "p", "p/q", or a decimal such as "-0.25",
/// "1e-3", "2.5E2". Decimals denote their exact decimal value.
inline Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    Rational value;
    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const BigInt num = detail::parse_integer(s.substr(0, slash), text);
        const BigInt den = detail::parse_integer(s.substr(slash + 1), text);
        if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        value = Rational(num, den);
    } else {
        long long exponent = 0;
        if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
            std::string_view exp_text = s.substr(e + 1);
            bool exp_negative = false;
            if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
                exp_negative = exp_text.front() == '-';
                exp_text.remove_prefix(1);
            }
            const BigInt mag = detail::parse_integer(exp_text, text);
            if (mag > 100000) throw std::invalid_argument("exponent out of range in '" + std::string(text) + "'");
            exponent = mag.convert_to<long long>();
            if (exp_negative) exponent = -exponent;
            s = s.substr(0, e);
        }
        std::string digits;
        if (const auto dot = s.find('.'); dot != std::string_view::npos) {
            const std::string_view int_part = s.substr(0, dot);
            const std::string_view frac_part = s.substr(dot + 1);
            if (int_part.empty() && frac_part.empty()) {
                throw std::invalid_argument("malformed number: '" + std::string(text) + "'");
            }
            digits = std::string(int_part) + std::string(frac_part);
            exponent -= static_cast<long long>(frac_part.size());
        } else {
            digits = std::string(s);
        }
        const BigInt mant = detail::parse_integer(digits, text);
        if (exponent >= 0) {
            value = Rational(mant * detail::pow10(static_cast<unsigned>(exponent)));
        } else {
            value = Rational(mant, detail::pow10(static_cast<unsigned>(-exponent)));
        }
    }
    return negative ? Rational(-value) : value;
}

}  // namespace atanpoly

#endif  // ATANPOLY_NUMERIC_HPP
