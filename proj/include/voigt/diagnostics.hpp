#pragma once

#include "voigt/spectral_field.hpp"

#include <vector>

namespace voigt {

/// One sampled row of the run diagnostics. vort_max is meaningful for 3D
/// fields only, dissipation for 1D viscous runs only; both default to zero
/// elsewhere.
struct DiagnosticRecord {
    double t = 0.0;
    double l2_energy = 0.0;        // ||u||^2_L2
    double scaled_enstrophy = 0.0; // alpha^2 ||grad u||^2_L2
    double alpha_energy = 0.0;     // conserved alpha-energy (incl. dissipation term)
    double grad_norm = 0.0;        // ||grad u||_L2
    double vort_max = 0.0;         // ||curl u||_Linf
    double dissipation = 0.0;      // 2 nu int_0^t ||u_x||^2 ds
    double running_sup_grad = 0.0; // per-step max of ||grad u||_L2 over [0,t]
};

/// Time-sampled diagnostics, column-oriented.
struct DiagnosticSeries {
    std::vector<double> times;
    std::vector<double> l2_energy;
    std::vector<double> scaled_enstrophy;
    std::vector<double> alpha_energy;
    std::vector<double> grad_norm;
    std::vector<double> vort_max;
    std::vector<double> dissipation;
    std::vector<double> running_sup_grad;

    void push(const DiagnosticRecord& r);
    std::size_t size() const { return times.size(); }
    DiagnosticRecord row(std::size_t i) const;
};

/// ||f||^2_L2 via Parseval (conjugate half-lattice entries weighted twice).
double energy_l2(const SpectralField& f);

/// ||grad f||^2_L2; uses the derivative wavenumber convention so it equals
/// the summed energy of the spectral derivatives exactly.
double grad_norm_sq(const SpectralField& f);

/// L2 inner product <f,g> (fields must share shape).
double inner_product_l2(const SpectralField& f, const SpectralField& g);

/// <grad f, grad g> summed over axes.
double grad_inner_product(const SpectralField& f, const SpectralField& g);

/// energy + alpha^2 * grad_norm_sq, plus the accumulated dissipation integral
/// when nu > 0.
double alpha_energy(const SpectralField& f, double alpha, double nu = 0.0,
                    double dissipation = 0.0);

/// max_t |(E_alpha(t) - E_alpha(0)) / E_alpha(0)| over the recorded samples.
/// Throws std::invalid_argument on an empty series or E_alpha(0) == 0.
double relative_energy_error(const DiagnosticSeries& series);

/// Shell-averaged energy: E(kappa) sums |coeff|^2 (times volume) over integer
/// modes with kappa-1/2 <= |m| < kappa+1/2, each conjugate pair counted once
/// per member. Returned vector is indexed kappa-1 and covers every shell the
/// lattice can populate, so the entries always sum to energy_l2.
std::vector<double> spectrum(const SpectralField& f);

/// max over gridpoints of |curl f| (3D only).
double vorticity_max(const SpectralField& f);

/// max over gridpoints of the Euclidean velocity magnitude.
double max_pointwise_speed(const SpectralField& f);

/// max over gridpoints of |div f| (3D only).
double divergence_max(const SpectralField& f);

}  // namespace voigt
