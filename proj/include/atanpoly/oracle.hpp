#ifndef ATANPOLY_ORACLE_HPP
#define ATANPOLY_ORACLE_HPP

// Ground truth for the evaluation routes: an exact rational value built from
// the closed-form q_n (not the recurrence the routes use), and a finite
// difference differentiator that only knows std::atan.

#include "atanpoly/polycore.hpp"
#include "atanpoly/qseq.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

namespace atanpoly {

/// q_{n-1}(x) / (1+x^2)^n exactly.
inline Rational exact_g(unsigned n, const Rational& x) {
    if (n < 1) throw std::invalid_argument("exact_g: n must be >= 1");
    const Rational s = 1 + x * x;
    Rational denom = 1;
    for (unsigned k = 0; k < n; ++k) denom *= s;
    return eval_rational(gen_closed_form(n - 1), x) / denom;
}

struct FDConfig {
    unsigned order = 1;
    double step = 1e-5;
    unsigned stencil_width = 3;
};

inline constexpr unsigned max_fd_order = 5;

/// Points used by the iterated stencil: n+1 for even n, n+2 for odd n.
inline unsigned natural_stencil_width(unsigned order) { return order % 2 == 0 ? order + 1 : order + 2; }

/// h = eps^(1/(n+2)) rounded to a decade.
inline FDConfig default_fd_config(unsigned order) {
    static constexpr double steps[] = {0.0, 1e-5, 1e-4, 1e-3, 1e-2, 1e-2};
    if (order < 1 || order > max_fd_order) throw std::invalid_argument("finite differences support orders 1..5");
    return {order, steps[order], natural_stencil_width(order)};
}

/// Weights w_j on offsets j = -r..r (r = width/2) of the stencil
/// (mu delta)^(n mod 2) (delta^2)^(n div 2), i.e. the central first difference
/// composed with repeated second differences.  Applied as sum w_j f(x + j h) / h^n.
inline std::vector<double> fd_weights(unsigned order) {
    std::vector<double> w{1.0};
    auto convolve = [](const std::vector<double>& a, const std::vector<double>& b) {
        std::vector<double> out(a.size() + b.size() - 1, 0.0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
        }
        return out;
    };
    for (unsigned k = 0; k < order / 2; ++k) w = convolve(w, {1.0, -2.0, 1.0});
    if (order % 2 == 1) w = convolve(w, {-0.5, 0.0, 0.5});
    return w;
}

inline void validate(const FDConfig& cfg) {
    if (cfg.order < 1 || cfg.order > max_fd_order) {
        throw std::invalid_argument("finite differences support orders 1..5");
    }
    if (!(cfg.step > 0.0) || !std::isfinite(cfg.step)) throw std::invalid_argument("step must be positive");
    if (cfg.stencil_width % 2 == 0 || cfg.stencil_width < natural_stencil_width(cfg.order)) {
        throw std::invalid_argument("stencil width must be odd and cover the iterated stencil");
    }
}

/// Central finite-difference estimate of arctan^(n)(x).
inline double fd_derivative(unsigned n, double x, const FDConfig& cfg) {
    if (cfg.order != n) throw std::invalid_argument("FDConfig order does not match requested order");
    validate(cfg);
    if (!std::isfinite(x)) throw std::domain_error("evaluation point must be finite");
    // A wider configured stencil only adds zero weights.
    const std::vector<double> w = fd_weights(n);
    const int r = static_cast<int>(w.size() / 2);
    double acc = 0.0;
    for (int j = -r; j <= r; ++j) {
        const double wj = w[static_cast<std::size_t>(j + r)];
        if (wj != 0.0) acc += wj * std::atan(x + j * cfg.step);
    }
    return acc / std::pow(cfg.step, static_cast<double>(n));
}

inline double fd_derivative(unsigned n, double x) { return fd_derivative(n, x, default_fd_config(n)); }

/// Leading truncation constant c_n of the iterated stencil:
/// estimate = f^(n) + c_n h^2 f^(n+2) + O(h^4).
inline double fd_truncation_constant(unsigned order) {
    return order % 2 == 0 ? order / 24.0 : 1.0 / 6.0 + (order - 1) / 24.0;
}

}  // namespace atanpoly

#endif  // ATANPOLY_ORACLE_HPP
