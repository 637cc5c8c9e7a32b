#ifndef ATANPOLY_CHEBYSHEV_HPP
#define ATANPOLY_CHEBYSHEV_HPP

#include "atanpoly/polycore.hpp"

#include <stdexcept>
#include <string_view>
#include <vector>

namespace atanpoly {

enum class ChebKind { FirstKind, SecondKind };

/// P_0 .. P_n_max of the requested kind by P_{k+1} = 2x P_k - P_{k-1}.
inline std::vector<IntPolynomial> cheb_sequence(ChebKind kind, unsigned n_max) {
    std::vector<IntPolynomial> p;
    p.reserve(n_max + 1);
    p.push_back(IntPolynomial{BigInt(1)});
    if (n_max >= 1) {
        p.push_back(kind == ChebKind::FirstKind ? IntPolynomial{BigInt(0), BigInt(1)}
                                                : IntPolynomial{BigInt(0), BigInt(2)});
    }
    for (unsigned k = 1; k < n_max; ++k) {
        const auto a = p[k].coeffs();
        const auto b = p[k - 1].coeffs();
        std::vector<BigInt> c(k + 2);
        for (std::size_t i = 0; i < a.size(); ++i) c[i + 1] += 2 * a[i];
        for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
        p.emplace_back(std::move(c));
    }
    return p;
}

inline IntPolynomial cheb(ChebKind kind, unsigned n) { return cheb_sequence(kind, n).back(); }

/// T_n(x) = sum_{k=0}^{floor(n/2)} binom(n, 2k) (x^2 - 1)^k x^(n-2k), expanded
/// literally with exact polynomial arithmetic.
inline IntPolynomial cheb_T_via_formula(unsigned n) {
    const IntPolynomial x_sq_minus_1{BigInt(-1), BigInt(0), BigInt(1)};
    IntPolynomial sum;
    IntPolynomial power{BigInt(1)};  // (x^2 - 1)^k
    for (unsigned k = 0; 2 * k <= n; ++k) {
        sum = sum + binomial(n, 2 * k) * (power * IntPolynomial::monomial(BigInt(1), n - 2 * k));
        power = power * x_sq_minus_1;
    }
    return sum;
}

/// T_n(t) or U_n(t) in double by the three-term recurrence.  Stable on
/// [-1, 1], unlike Horner on the monomial coefficients whose magnitudes grow
/// like 2^n.
inline double cheb_value(ChebKind kind, unsigned n, double t) {
    double prev = 1.0;
    if (n == 0) return prev;
    double cur = kind == ChebKind::FirstKind ? t : 2.0 * t;
    for (unsigned k = 1; k < n; ++k) {
        const double next = 2.0 * t * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

inline std::string_view to_string(ChebKind kind) {
    return kind == ChebKind::FirstKind ? "T" : "U";
}

}  // namespace atanpoly

#endif  // ATANPOLY_CHEBYSHEV_HPP
