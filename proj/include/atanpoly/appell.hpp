#ifndef ATANPOLY_APPELL_HPP
#define ATANPOLY_APPELL_HPP

// Monic normalisation p_n = (-1)^n q_n / (n+1), an Appell sequence
// (p_n' = n p_{n-1}).

#include "atanpoly/polycore.hpp"
#include "atanpoly/qseq.hpp"

#include <stdexcept>
#include <vector>

namespace atanpoly {

class AppellSequence {
public:
    explicit AppellSequence(std::vector<RatPolynomial> polys) : polys_(std::move(polys)) {
        if (polys_.empty()) throw std::invalid_argument("AppellSequence: empty");
    }

    std::size_t max_n() const { return polys_.size() - 1; }
    const RatPolynomial& operator[](std::size_t n) const { return polys_.at(n); }
    std::span<const RatPolynomial> polys() const { return polys_; }

private:
    std::vector<RatPolynomial> polys_;
};

inline RatPolynomial appell_from_q(const IntPolynomial& q_n, unsigned n) {
    const Rational scale(BigInt(n % 2 == 0 ? 1 : -1), BigInt(n + 1));
    return scale * to_rational(q_n);
}

inline AppellSequence gen_appell(unsigned n_max) {
    const QSequence q = gen_recurrence(n_max);
    std::vector<RatPolynomial> p;
    p.reserve(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) p.push_back(appell_from_q(q[n], n));
    return AppellSequence(std::move(p));
}

/// p_n from its own binomial sum: [x^(n-k)] = binom(n,k) (-1)^(k/2) / (k+1)
/// for even k.
inline RatPolynomial appell_explicit(unsigned n) {
    std::vector<Rational> c(n + 1);
    for (unsigned k = 0; k <= n; k += 2) {
        const BigInt b = binomial(n, k);
        c[n - k] = Rational((k / 2) % 2 == 0 ? b : BigInt(-b), BigInt(k + 1));
    }
    return RatPolynomial(std::move(c));
}

inline bool check_appell_property(const AppellSequence& p, unsigned n) {
    if (n < 1) throw std::invalid_argument("check_appell_property: n must be >= 1");
    return differentiate(p[n]) == Rational(n) * p[n - 1];
}

inline bool check_appell_property(unsigned n) { return check_appell_property(gen_appell(n), n); }

/// arctan^(n)(x) = (-1)^(n-1) n! p_{n-1}(x) / (1+x^2)^n, exactly.
inline Rational arctan_derivative_via_appell(unsigned n, const Rational& x, const AppellSequence* cache = nullptr) {
    if (n < 1) throw std::invalid_argument("derivative order must be >= 1");
    const RatPolynomial p = cache != nullptr && cache->max_n() + 1 >= n ? (*cache)[n - 1] : gen_appell(n - 1)[n - 1];
    BigInt factorial = 1;
    for (unsigned k = 2; k <= n; ++k) factorial *= k;
    const Rational s = 1 + x * x;
    Rational denom = 1;
    for (unsigned k = 0; k < n; ++k) denom *= s;
    const Rational v = Rational(factorial) * eval_rational(p, x) / denom;
    return (n - 1) % 2 == 0 ? v : Rational(-v);
}

}  // namespace atanpoly

#endif  // ATANPOLY_APPELL_HPP
