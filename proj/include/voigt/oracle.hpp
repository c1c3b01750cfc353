#pragma once

namespace voigt {

/// Exact pre-shock Burgers solution for u0(x) = -amplitude * sin(x) on the
/// 2*pi torus, via the method of characteristics: solve x = xi + t u0(xi),
/// then u(x,t) = u0(xi). Valid for t < T* = 1/amplitude.
struct CharacteristicSolution {
    double amplitude = 1.0;
    double newton_tol = 1e-13;
    int max_iterations = 64;
    double blowup_margin = 1e-3;  // evaluations require t < T* (1 - margin)

    double blowup_time() const;
};

/// T* = -1 / min u0' = 1 / amplitude. Throws for amplitude <= 0.
double burgers_blowup_time(double amplitude);

/// Point evaluation by Newton iteration on the characteristic equation with
/// a bisection fallback; the accepted root satisfies
/// |xi + t u0(xi) - x| < newton_tol.
double burgers_eval(double x, double t, const CharacteristicSolution& sol);

/// ||u_x(., t)||_L2 by quadrature in characteristic coordinates,
///   integral of u0'(xi)^2 / (1 + t u0'(xi)) dxi over one period,
/// refined until the relative change drops below 1e-8 (>= 4096 nodes).
double burgers_grad_norm(double t, const CharacteristicSolution& sol);

}  // namespace voigt
