#ifndef ATANPOLY_VERIFY_HPP
#define ATANPOLY_VERIFY_HPP

// Identity suites behind `atanpoly verify`.  Each suite reports pass/fail and
// the worst error it observed (0 for exact suites that pass).

#include "atanpoly/appell.hpp"
#include "atanpoly/chebyshev.hpp"
#include "atanpoly/deriv.hpp"
#include "atanpoly/oracle.hpp"
#include "atanpoly/polycore.hpp"
#include "atanpoly/qseq.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace atanpoly {

inline constexpr double route_rel_tol = 1e-8;
inline constexpr double route_abs_tol = 1e-12;

/// Evaluation grid "lo:hi:count", inclusive endpoints; count 1 is the single
/// point lo.  Points are exact rationals.
inline std::vector<Rational> parse_grid(std::string_view text) {
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
    if (c1 == std::string_view::npos || c2 == std::string_view::npos) {
        throw std::invalid_argument("grid must be lo:hi:count, got '" + std::string(text) + "'");
    }
    const Rational lo = parse_rational(text.substr(0, c1));
    const Rational hi = parse_rational(text.substr(c1 + 1, c2 - c1 - 1));
    const Rational count_r = parse_rational(text.substr(c2 + 1));
    if (denominator(count_r) != 1 || count_r < 1 || count_r > 1000000) {
        throw std::invalid_argument("grid count must be a positive integer");
    }
    const auto count = numerator(count_r).convert_to<unsigned>();
    std::vector<Rational> pts;
    pts.reserve(count);
    if (count == 1) {
        pts.push_back(lo);
        return pts;
    }
    for (unsigned i = 0; i < count; ++i) pts.push_back(lo + (hi - lo) * Rational(i, count - 1));
    return pts;
}

/// {0, +-1/2, +-1, +-2, +-10}
inline std::vector<Rational> route_grid() {
    std::vector<Rational> g{Rational(0)};
    for (const Rational& v : {Rational(1, 2), Rational(1), Rational(2), Rational(10)}) {
        g.push_back(v);
        g.push_back(-v);
    }
    return g;
}

/// 41 equally spaced points on [-5, 5].
inline std::vector<Rational> identity_grid() { return parse_grid("-5:5:41"); }

/// Error of an approximation to a known exact value: relative when the exact
/// value is nonzero, otherwise |approx| / zero_scale.
inline double relative_error(double approx, const Rational& exact, double zero_scale = 1.0) {
    if (exact == 0) return std::fabs(approx) / zero_scale;
    const double e = to_double(exact);
    return std::fabs(approx - e) / std::fabs(e);
}

/// (-1)^(n-1) ((x+i)^n - (x-i)^n) / (2i) expanded over Gaussian integers.
/// Returns nullopt if the expansion is not a real integer polynomial.
inline std::optional<IntPolynomial> gaussian_expansion(unsigned n) {
    struct G {
        BigInt re, im;
    };
    std::vector<G> plus{{1, 0}};
    std::vector<G> minus{{1, 0}};
    // multiply by (x + sigma i)
    auto step = [](const std::vector<G>& p, int sigma) {
        std::vector<G> out(p.size() + 1, G{0, 0});
        for (std::size_t k = 0; k < p.size(); ++k) {
            out[k + 1].re += p[k].re;
            out[k + 1].im += p[k].im;
            out[k].re -= sigma * p[k].im;
            out[k].im += sigma * p[k].re;
        }
        return out;
    };
    for (unsigned k = 0; k < n; ++k) {
        plus = step(plus, 1);
        minus = step(minus, -1);
    }
    std::vector<BigInt> c(plus.size());
    for (std::size_t k = 0; k < plus.size(); ++k) {
        const BigInt a = plus[k].re - minus[k].re;
        const BigInt b = plus[k].im - minus[k].im;
        // (a + bi) / (2i) = (b - ai) / 2
        if (a != 0 || b % 2 != 0) return std::nullopt;
        c[k] = (n - 1) % 2 == 0 ? BigInt(b / 2) : BigInt(-b / 2);
    }
    return IntPolynomial(std::move(c));
}

/// Right-hand side of the Chebyshev representation as an exact polynomial.
/// With t = 1/sqrt(s), s = 1+x^2, an odd Chebyshev polynomial sum c_j t^(2j+1)
/// times s^(k+1/2) equals sum c_j s^(k-j).
///   m = 2k:   (-1)^k s^(k+1/2) T_{2k+1}(t)
///   m = 2k-1: (-1)^k s^(k-1/2) x U_{2k-1}(t)
inline std::optional<IntPolynomial> chebyshev_homogenized(unsigned m, const IntPolynomial& cheb_poly) {
    const unsigned k = m % 2 == 0 ? m / 2 : (m + 1) / 2;
    const unsigned top = m % 2 == 0 ? k : k - 1;  // power of s paired with t^1
    const auto c = cheb_poly.coeffs();
    const IntPolynomial s = one_plus_x_squared<BigInt>();
    IntPolynomial sum;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (i % 2 == 0) return std::nullopt;  // not odd
        const auto j = static_cast<unsigned>(i / 2);
        if (j > top) return std::nullopt;
        IntPolynomial term{c[i]};
        for (unsigned e = 0; e < top - j; ++e) term = term * s;
        sum = sum + term;
    }
    if (m % 2 == 1) sum = sum * identity_poly<BigInt>();
    return k % 2 == 0 ? sum : -sum;
}

struct SuiteResult {
    explicit SuiteResult(std::string suite_name) : name(std::move(suite_name)) {}

    std::string name;
    bool passed = true;
    double worst_error = 0.0;
    std::size_t checks = 0;
    std::string detail;  // first failure, if any

    void record(bool ok, const std::string& what) {
        ++checks;
        if (!ok && passed) {
            passed = false;
            detail = what;
        }
    }

    void record_error(double err, double tol, const std::string& what) {
        worst_error = std::max(worst_error, std::isnan(err) ? std::numeric_limits<double>::infinity() : err);
        record(err <= tol, what + " error " + format_double(err));
    }
};

struct VerifyOptions {
    unsigned n_max = 64;
    /// Replaces every pointwise grid when set.
    std::optional<std::vector<Rational>> grid;
    /// Perturbs one coefficient of the recurrence-generated sequence; every
    /// suite that reads it must then fail.
    bool inject_fault = false;
};

namespace detail {

inline std::string at(unsigned n, const Rational& x) { return "n=" + std::to_string(n) + " x=" + to_string(x); }

}  // namespace detail

class Verifier {
public:
    explicit Verifier(VerifyOptions opts) : opts_(std::move(opts)), q_(make_sequence(opts_)), eval_(q_) {}

    std::vector<SuiteResult> run_all() const {
        return {golden(),
                generator_equivalence(),
                degree_and_leading(),
                parity(),
                value_at_zero_suite(),
                derivative_identity(),
                recurrence_residual(),
                chebyshev_polynomials(),
                chebyshev_representation_exact(),
                chebyshev_representation_points(),
                trigonometric_representation(),
                partial_fraction_algebraic(),
                route_agreement(),
                non_orthogonality(),
                appell(),
                maclaurin(),
                finite_difference()};
    }

    SuiteResult golden() const {
        SuiteResult r("golden");
        const std::vector<IntPolynomial> expected{
            IntPolynomial{1},
            IntPolynomial{0, -2},
            IntPolynomial{-1, 0, 3},
            IntPolynomial{0, 4, 0, -4},
            IntPolynomial{1, 0, -10, 0, 5},
            IntPolynomial{0, -6, 0, 20, 0, -6},
        };
        for (unsigned n = 0; n <= 5; ++n) {
            r.record(q_[n] == expected[n], "q_" + std::to_string(n) + " = " + to_string(q_[n]));
        }
        const long long factorials[] = {1, 1, 2, 6, 24, 120};
        for (unsigned n = 1; n <= 6; ++n) {
            // arctan^(n)(1) = (n-1)! q_{n-1}(1) / 2^n
            const ScaledValue full = eval_full(n, 1.0);
            const Rational expect = Rational(factorials[n - 1]) * eval_rational(expected[n - 1], Rational(1)) /
                                    Rational(BigInt(1) << n);
            r.record(full.sign == expect.sign() && (expect == 0 || full.to_double() == to_double(expect)),
                     "eval_full prefactor at n=" + std::to_string(n));
        }
        return r;
    }

    SuiteResult generator_equivalence() const {
        SuiteResult r("generator-equivalence");
        for (unsigned n = 0; n <= opts_.n_max; ++n) {
            r.record(gen_closed_form(n) == q_[n], "q_" + std::to_string(n) + " closed form != recurrence");
        }
        return r;
    }

    SuiteResult degree_and_leading() const {
        SuiteResult r("degree-leading");
        for (unsigned n = 0; n <= opts_.n_max; ++n) {
            const auto& p = q_[n];
            const BigInt lead = n % 2 == 0 ? BigInt(n + 1) : BigInt(-static_cast<long long>(n) - 1);
            r.record(p.degree() == n && p.leading() == lead, "q_" + std::to_string(n) + " degree/leading");
            bool odd_gaps = true;
            for (unsigned k = 1; k <= n; k += 2) odd_gaps = odd_gaps && p.coeff(n - k) == 0;
            r.record(odd_gaps, "q_" + std::to_string(n) + " has a term of the wrong parity");
        }
        return r;
    }

    SuiteResult parity() const {
        SuiteResult r("parity");
        for (unsigned n = 0; n <= opts_.n_max; ++n) {
            for (const Rational& x : {Rational(1, 3), Rational(2), Rational(7, 5)}) {
                const Rational plus = eval_rational(q_[n], x);
                const Rational minus = eval_rational(q_[n], Rational(-x));
                r.record(minus == (n % 2 == 0 ? plus : Rational(-plus)), "parity " + detail::at(n, x));
            }
        }
        return r;
    }

    SuiteResult value_at_zero_suite() const {
        SuiteResult r("value-at-zero");
        for (unsigned n = 0; n <= opts_.n_max; ++n) {
            r.record(q_[n].coeff(0) == value_at_zero(n) && gen_closed_form(n).coeff(0) == value_at_zero(n),
                     "q_" + std::to_string(n) + "(0)");
        }
        return r;
    }

    SuiteResult derivative_identity() const {
        SuiteResult r("derivative-identity");
        for (unsigned n = 1; n <= opts_.n_max; ++n) {
            r.record(check_derivative_identity(q_, n), "q_" + std::to_string(n) + "' != -(n+1) q_{n-1}");
        }
        return r;
    }

    /// Closed-form q's substituted into q_n + 2x q_{n-1} + (1+x^2) q_{n-2}.
    SuiteResult recurrence_residual() const {
        SuiteResult r("recurrence-residual");
        const IntPolynomial two_x{0, 2};
        const IntPolynomial s = one_plus_x_squared<BigInt>();
        std::vector<IntPolynomial> cf;
        for (unsigned n = 0; n <= opts_.n_max; ++n) cf.push_back(gen_closed_form(n));
        for (unsigned n = 2; n <= opts_.n_max; ++n) {
            const IntPolynomial res = cf[n] + two_x * cf[n - 1] + s * cf[n - 2];
            r.record(res.is_zero(), "residual at n=" + std::to_string(n) + ": " + to_string(res));
        }
        return r;
    }

    SuiteResult chebyshev_polynomials() const {
        SuiteResult r("chebyshev-polynomials");
        const unsigned top = std::max<unsigned>(opts_.n_max, 2);
        const auto t = cheb_sequence(ChebKind::FirstKind, top);
        const auto u = cheb_sequence(ChebKind::SecondKind, top);
        const IntPolynomial two_x{0, 2};
        for (unsigned n = 0; n <= top; ++n) {
            r.record(t[n] == cheb_T_via_formula(n), "T_" + std::to_string(n) + " recurrence != formula");
        }
        for (unsigned n = 1; n < top; ++n) {
            r.record((t[n + 1] - two_x * t[n] + t[n - 1]).is_zero(), "T recurrence residual n=" + std::to_string(n));
            r.record((u[n + 1] - two_x * u[n] + u[n - 1]).is_zero(), "U recurrence residual n=" + std::to_string(n));
        }
        for (unsigned n = 1; n <= top; ++n) {
            r.record(differentiate(t[n]) == BigInt(n) * u[n - 1], "T_n' != n U_{n-1} at n=" + std::to_string(n));
        }
        return r;
    }

    SuiteResult chebyshev_representation_exact() const {
        SuiteResult r("chebyshev-representation-exact");
        const auto t = cheb_sequence(ChebKind::FirstKind, opts_.n_max + 1);
        const auto u = cheb_sequence(ChebKind::SecondKind, opts_.n_max + 1);
        for (unsigned m = 0; m <= opts_.n_max; ++m) {
            const auto rhs = chebyshev_homogenized(m, m % 2 == 0 ? t[m + 1] : u[m]);
            r.record(rhs.has_value() && *rhs == q_[m], "q_" + std::to_string(m) + " != Chebyshev form");
        }
        return r;
    }

    /// q_m(x) against the Chebyshev right-hand side evaluated in double.
    SuiteResult chebyshev_representation_points() const {
        SuiteResult r("chebyshev-representation-points");
        for (unsigned m = 0; m <= opts_.n_max; ++m) {
            for (const auto& xr : point_grid()) {
                const double x = to_double(xr);
                const double s = std::fma(x, x, 1.0);
                const double tt = 1.0 / std::sqrt(s);
                double rhs;
                if (m % 2 == 0) {
                    const unsigned k = m / 2;
                    rhs = detail::alternating(k) * std::pow(s, k) * std::sqrt(s) * cheb_value(ChebKind::FirstKind, m + 1, tt);
                } else {
                    const unsigned k = (m + 1) / 2;
                    rhs = detail::alternating(k) * std::pow(s, k - 1) * std::sqrt(s) * x *
                          cheb_value(ChebKind::SecondKind, m, tt);
                }
                const Rational exact = eval_rational(q_[m], xr);
                r.record_error(relative_error(rhs, exact, std::pow(s, (m + 1) / 2.0)), route_rel_tol,
                               "Chebyshev form q_" + std::to_string(m) + " x=" + to_string(xr));
            }
        }
        return r;
    }

    /// sin(n arccot x) (1+x^2)^(n/2) against (-1)^(n-1) q_{n-1}(x).
    SuiteResult trigonometric_representation() const {
        SuiteResult r("trigonometric-representation");
        for (unsigned n = 1; n <= opts_.n_max; ++n) {
            for (const auto& xr : point_grid()) {
                const double x = to_double(xr);
                const double envelope = std::pow(std::fma(x, x, 1.0), n / 2.0);
                const double lhs = sin_n_arccot(n, x) * envelope;
                const Rational exact = (n - 1) % 2 == 0 ? eval_rational(q_[n - 1], xr) : Rational(-eval_rational(q_[n - 1], xr));
                r.record_error(relative_error(lhs, exact, envelope), route_rel_tol,
                               "trigonometric form " + detail::at(n, xr));
            }
        }
        return r;
    }

    SuiteResult partial_fraction_algebraic() const {
        SuiteResult r("partial-fraction-algebraic");
        for (unsigned n = 1; n <= opts_.n_max + 1; ++n) {
            const auto g = gaussian_expansion(n);
            r.record(g.has_value() && *g == q_[n - 1], "Gaussian expansion n=" + std::to_string(n));
        }
        return r;
    }

    SuiteResult route_agreement() const {
        SuiteResult r("route-agreement");
        for (unsigned n = 1; n <= opts_.n_max; ++n) {
            for (const auto& xr : route_points()) {
                const Rational exact = exact_g(n, xr);
                r.record(eval_.exact(n, xr) == exact, "exact route " + detail::at(n, xr));
                const double x = to_double(xr);
                for (const Route route : floating_routes) {
                    const double v = eval_.evaluate(n, x, route);
                    const double err = relative_error(v, exact);
                    const double tol = exact == 0 ? route_abs_tol : route_rel_tol;
                    r.record_error(err, tol, std::string(to_string(route)) + " " + detail::at(n, xr));
                }
            }
        }
        return r;
    }

    SuiteResult non_orthogonality() const {
        SuiteResult r("non-orthogonality");
        const OrthogonalityWitness w = orthogonality_counterexample();
        r.record(w.alpha == Rational(-5, 4) && w.beta == 0 && w.gamma == 1, "forced alpha, beta, gamma");
        r.record(w.failing_power() == 2u, "first failing power");
        r.record(w.residuals[2].mismatch() == 2, "x^2 mismatch");
        r.record(w.residuals[1].mismatch() == 0, "x^1 consistency");
        return r;
    }

    SuiteResult appell() const {
        SuiteResult r("appell");
        std::vector<RatPolynomial> p;
        for (unsigned n = 0; n <= opts_.n_max; ++n) p.push_back(appell_from_q(q_[n], n));
        const AppellSequence seq(std::move(p));
        for (unsigned n = 0; n <= opts_.n_max; ++n) {
            r.record(seq[n].degree() == n && seq[n].leading() == 1, "p_" + std::to_string(n) + " monic");
            r.record(seq[n] == appell_explicit(n), "p_" + std::to_string(n) + " constructions differ");
            if (n >= 1) r.record(check_appell_property(seq, n), "p_" + std::to_string(n) + "' != n p_{n-1}");
        }
        const unsigned top = std::min<unsigned>(opts_.n_max, 60);
        for (unsigned n = 1; n <= top; ++n) {
            BigInt fact = 1;
            for (unsigned k = 2; k < n; ++k) fact *= k;
            for (const Rational& x : {Rational(0), Rational(1, 2), Rational(-1, 2), Rational(1), Rational(-1),
                                     Rational(2), Rational(-2)}) {
                r.record(arctan_derivative_via_appell(n, x, &seq) == Rational(fact) * exact_g(n, x),
                         "Appell derivative " + detail::at(n, x));
            }
        }
        return r;
    }

    SuiteResult maclaurin() const {
        SuiteResult r("maclaurin");
        const unsigned top = std::max<unsigned>(101, opts_.n_max + 1);
        for (unsigned k = 0; k <= top; ++k) {
            const Rational expect = k % 2 == 0 ? Rational(0) : Rational(BigInt((k / 2) % 2 == 0 ? 1 : -1), BigInt(k));
            r.record(maclaurin_coeff(k) == expect, "Maclaurin coefficient " + std::to_string(k));
            if (k >= 1 && k <= q_.max_n() + 1) {
                r.record(Rational(q_[k - 1].coeff(0), BigInt(k)) == expect, "q_{k-1}(0)/k at k=" + std::to_string(k));
            }
        }
        return r;
    }

    /// Finite differences against the stencil's error model: truncation
    /// c_n h^2 |f^(n+2)| (with an h^4 |f^(n+4)| margin) plus rounding
    /// sum|w| eps max|atan| / h^n.
    SuiteResult finite_difference() const {
        SuiteResult r("finite-difference");
        constexpr double eps = std::numeric_limits<double>::epsilon();
        for (unsigned n = 1; n <= max_fd_order; ++n) {
            const FDConfig cfg = default_fd_config(n);
            double weight_sum = 0.0;
            for (const double w : fd_weights(n)) weight_sum += std::fabs(w);
            for (const Rational& xr : {Rational(0), Rational(1, 2), Rational(-1, 2), Rational(1), Rational(-1),
                                      Rational(2), Rational(-2)}) {
                const double x = to_double(xr);
                auto deriv = [&](unsigned k) {
                    BigInt fact = 1;
                    for (unsigned j = 2; j < k; ++j) fact *= j;
                    return std::fabs(to_double(Rational(fact) * exact_g(k, xr)));
                };
                const double exact = deriv(n) * static_cast<double>(exact_g(n, xr).sign());
                const double h2 = cfg.step * cfg.step;
                const double bound = 2.0 * fd_truncation_constant(n) * h2 * (deriv(n + 2) + h2 * deriv(n + 4)) +
                                     4.0 * weight_sum * eps * (std::fabs(std::atan(x)) + 1.0) /
                                         std::pow(cfg.step, static_cast<double>(n));
                const double err = std::fabs(fd_derivative(n, x, cfg) - exact);
                r.record_error(err / std::max(1.0, std::fabs(exact)), std::numeric_limits<double>::infinity(),
                               detail::at(n, xr));
                r.record(err <= bound, "finite difference " + detail::at(n, xr) + " error " + format_double(err) +
                                           " > model bound " + format_double(bound));
            }
        }
        return r;
    }

private:
    static QSequence make_sequence(const VerifyOptions& opts) {
        QSequence q = gen_recurrence(std::max<unsigned>(opts.n_max, 5));
        if (!opts.inject_fault) return q;
        std::vector<IntPolynomial> polys(q.polys().begin(), q.polys().end());
        const unsigned victim = std::min<unsigned>(3, opts.n_max);
        std::vector<BigInt> c(polys[victim].coeffs().begin(), polys[victim].coeffs().end());
        c[0] += 1;
        polys[victim] = IntPolynomial(std::move(c));
        return QSequence(std::move(polys));
    }

    std::vector<Rational> point_grid() const { return opts_.grid ? *opts_.grid : identity_grid(); }
    std::vector<Rational> route_points() const { return opts_.grid ? *opts_.grid : route_grid(); }

    VerifyOptions opts_;
    QSequence q_;
    DerivativeEvaluator eval_;
};

}  // namespace atanpoly

#endif  // ATANPOLY_VERIFY_HPP
