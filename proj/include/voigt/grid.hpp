#pragma once

#include <array>
#include <cstdint>
#include <numbers>

namespace voigt {

/// Uniform periodic-domain discretization: 1D interval or 3D box.
/// Axes with index >= dim hold n = 1, length = 1 so products stay valid.
struct GridSpec {
    int dim = 0;
    std::array<int, 3> n{1, 1, 1};
    std::array<double, 3> length{1.0, 1.0, 1.0};

    static GridSpec line(int points, double extent = 2.0 * std::numbers::pi);
    static GridSpec cube(int points, double extent = 1.0);

    /// Throws std::invalid_argument unless dim in {1,3}, every axis has
    /// n even and >= 4, and every length is positive.
    void validate() const;

    std::int64_t point_count() const;
    /// Stored coefficients per component in the real-to-complex half layout
    /// (last axis keeps n/2+1 entries).
    std::int64_t coeff_count() const;
    double volume() const;
    double cell_volume() const;
    double min_dx() const;
    /// 2/3-rule cutoff: modes with |m| > floor(n/3) on this axis are dropped.
    int dealias_cutoff(int axis) const { return n[axis] / 3; }
    /// Stored extent per axis (last axis halved by Hermitian symmetry).
    int stored(int axis) const;
    /// Physical coordinate of gridpoint `index` along `axis` (origin 0).
    double coordinate(int axis, int index) const;

    bool operator==(const GridSpec&) const = default;
};

/// Signed integer mode for stored index i along axis; the Nyquist entry
/// maps to +n/2.
int mode_of_index(const GridSpec& g, int axis, int i);

/// Physical wavenumber 2*pi*m/length used by first derivatives; zero at the
/// Nyquist index so odd-order operators stay conjugate-symmetric.
double deriv_wavenumber(const GridSpec& g, int axis, int i);

/// Physical wavenumber magnitude for even (symmetric) symbols; the Nyquist
/// entry keeps |m| = n/2.
double mode_wavenumber(const GridSpec& g, int axis, int i);

}  // namespace voigt
