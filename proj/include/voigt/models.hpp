#pragma once

#include "voigt/spectral_field.hpp"

#include <vector>

namespace voigt {

/// Regularization and model selection for a single run.
struct VoigtParams {
    enum class Model { EulerVoigt3D, BBM1D };

    double alpha = 0.0;  // regularization length, > 0 for production runs
    double nu = 0.0;     // viscosity, 1D only
    Model model = Model::EulerVoigt3D;

    void validate() const;
};

/// Taylor-Green initial data on the unit cube,
///   u1 =  sin(2 pi x) cos(2 pi y) cos(2 pi z),
///   u2 = -cos(2 pi x) sin(2 pi y) cos(2 pi z),
///   u3 =  0,
/// built directly in spectral form (eight modes per component).
SpectralField taylor_green(const GridSpec& grid);

/// u0(x) = -sin(x) on the 2*pi interval, single spectral mode.
SpectralField bbm_initial(const GridSpec& grid);

/// Euler-Voigt tendency
///   du/dt = -(I - alpha^2 Lap)^{-1} P dealias[(u.grad)u],
/// with gradients taken spectrally and the nine products pointwise on the
/// grid. Output is divergence-free, zero-mean, and dealiased. Throws if the
/// input carries spectral divergence above 1e-10 (relative).
SpectralField ev3d_rhs(const SpectralField& u, const VoigtParams& p);

/// Full BBM tendency per mode:
///   (1 + alpha^2 k^2)^{-1} ( -F[u u_x] - nu k^2 u_hat ),
/// with the product dealiased. Use bbm_advective_rhs + bbm_linear_symbol
/// when the viscous part is handled by the integrating factor.
SpectralField bbm_rhs(const SpectralField& u, const VoigtParams& p);

/// Advection-only part of bbm_rhs (the integrating factor carries the rest).
SpectralField bbm_advective_rhs(const SpectralField& u, const VoigtParams& p);

/// Diagonal viscous symbol lambda(k) = -nu k^2 / (1 + alpha^2 k^2) per stored
/// mode. Throws when nu <= 0 (no integrating factor needed then).
std::vector<double> bbm_linear_symbol(const GridSpec& grid, const VoigtParams& p);

}  // namespace voigt
