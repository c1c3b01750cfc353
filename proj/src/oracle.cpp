#include "voigt/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace voigt {

double CharacteristicSolution::blowup_time() const { return burgers_blowup_time(amplitude); }

double burgers_blowup_time(double amplitude) {
    if (!(amplitude > 0.0))
        throw std::invalid_argument("burgers_blowup_time: amplitude must be positive");
    return 1.0 / amplitude;
}

double burgers_eval(double x, double t, const CharacteristicSolution& sol) {
    const double a = sol.amplitude;
    if (t < 0.0) throw std::invalid_argument("burgers_eval: t must be >= 0");
    if (a > 0.0 && t >= (1.0 - sol.blowup_margin) / a)
        throw std::invalid_argument("burgers_eval: t too close to the blow-up time");
    if (a == 0.0) return 0.0;

    // g(xi) = xi - t a sin(xi) - x is strictly increasing for t a < 1.
    auto g = [&](double xi) { return xi - t * a * std::sin(xi) - x; };
    double xi = x;
    for (int it = 0; it < sol.max_iterations; ++it) {
        const double r = g(xi);
        if (std::abs(r) < sol.newton_tol) return -a * std::sin(xi);
        xi -= r / (1.0 - t * a * std::cos(xi));
    }
    // Bisection fallback: |u0| <= a brackets the root.
    double left = x - t * a, right = x + t * a;
    if (g(left) > 0.0 || g(right) < 0.0)
        throw std::runtime_error("burgers_eval: characteristic root not bracketed");
    for (int it = 0; it < 200; ++it) {
        xi = 0.5 * (left + right);
        const double r = g(xi);
        if (std::abs(r) < sol.newton_tol) return -a * std::sin(xi);
        (r < 0.0 ? left : right) = xi;
    }
    throw std::runtime_error("burgers_eval: no convergence (t too close to blow-up)");
}

double burgers_grad_norm(double t, const CharacteristicSolution& sol) {
    const double a = sol.amplitude;
    if (a == 0.0) return 0.0;
    if (!(t < 1.0 / a)) throw std::invalid_argument("burgers_grad_norm: t must be below T*");

    // u_x = u0'(xi) / (1 + t u0'(xi)); substituting x -> xi turns the norm
    // into int a^2 cos^2(xi) / (1 - t a cos(xi)) dxi. The integrand is
    // periodic and smooth, so the trapezoid rule converges fast; refine by
    // doubling until stable.
    auto integral_with = [&](int nodes) {
        const double h = 2.0 * std::numbers::pi / nodes;
        double sum = 0.0;
        for (int i = 0; i < nodes; ++i) {
            const double c = std::cos(-std::numbers::pi + i * h);
            sum += a * a * c * c / (1.0 - t * a * c);
        }
        return sum * h;
    };
    int nodes = 4096;
    double value = integral_with(nodes);
    for (int pass = 0; pass < 10; ++pass) {
        nodes *= 2;
        const double refined = integral_with(nodes);
        const double change = std::abs(refined - value);
        value = refined;
        if (change <= 1e-8 * std::abs(value)) break;
    }
    return std::sqrt(value);
}

}  // namespace voigt
