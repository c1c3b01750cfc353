#pragma once

#include "voigt/spectral_field.hpp"

namespace voigt {

/// Spectral derivative along `axis`: coefficient at mode m is multiplied by
/// i * 2*pi*m_axis / length_axis. Throws std::invalid_argument on a bad axis.
SpectralField derivative(const SpectralField& f, int axis);

/// Sharp 2/3-rule truncation: zero every coefficient with any |m_j| beyond
/// floor(n_j/3); everything else is unchanged. Idempotent.
SpectralField dealias(SpectralField f);

/// Apply (I - alpha^2 Laplacian)^-1, diagonal in Fourier space: each
/// coefficient is divided by 1 + alpha^2 |k|^2. alpha = 0 is the identity.
SpectralField helmholtz_invert(SpectralField f, double alpha);

/// Exact spectral Leray projector onto divergence-free fields:
/// coeff <- coeff - k (k.coeff)/|k|^2 per mode (mean mode untouched).
/// Idempotent; requires a 3-component 3D field.
SpectralField leray_project(SpectralField f);

/// Spectral curl i k x coeff; requires a 3-component 3D field.
SpectralField curl(const SpectralField& f);

/// Spectral divergence sum_j i k_j coeff_j as a scalar field (3D).
SpectralField divergence(const SpectralField& f);

}  // namespace voigt
