#pragma once

#include "voigt/grid.hpp"

#include <complex>
#include <span>
#include <vector>

namespace voigt {

/// Real-valued periodic field stored as Fourier coefficients in the FFTW
/// real-to-complex half layout, component-major. Coefficients follow the
/// Fourier-series convention u(x) = sum_m coeff(m) exp(i k(m).x), so the
/// stored values are the series amplitudes themselves (Parseval then reads
/// ||u||^2_L2 = volume * sum |coeff|^2 with conjugate pairs double-counted).
class SpectralField {
  public:
    SpectralField() = default;
    SpectralField(GridSpec grid, int components);

    const GridSpec& grid() const { return grid_; }
    int components() const { return components_; }
    std::int64_t coeffs_per_component() const { return grid_.coeff_count(); }
    bool empty() const { return data_.empty(); }
    bool same_shape(const SpectralField& other) const {
        return grid_ == other.grid_ && components_ == other.components_;
    }

    std::span<std::complex<double>> component(int c);
    std::span<const std::complex<double>> component(int c) const;
    std::complex<double>& at(int c, int i0, int i1 = 0, int i2 = 0);
    const std::complex<double>& at(int c, int i0, int i1 = 0, int i2 = 0) const;

    void fill_zero();
    void add_scaled(double a, const SpectralField& other);  // *this += a*other
    SpectralField& operator*=(double a);
    SpectralField& operator+=(const SpectralField& other);
    SpectralField& operator-=(const SpectralField& other);

  private:
    std::int64_t offset(int c, int i0, int i1, int i2) const;

    GridSpec grid_{};
    int components_ = 0;
    std::vector<std::complex<double>> data_;
};

inline void add_scaled(SpectralField& y, double a, const SpectralField& k) { y.add_scaled(a, k); }

/// Physical-space sample lattice matching a GridSpec, component-major,
/// row-major over grid indices.
class PhysicalField {
  public:
    PhysicalField() = default;
    PhysicalField(GridSpec grid, int components);
    PhysicalField(GridSpec grid, int components, std::vector<double> samples);

    const GridSpec& grid() const { return grid_; }
    int components() const { return components_; }
    std::int64_t points_per_component() const { return grid_.point_count(); }

    std::span<double> component(int c);
    std::span<const double> component(int c) const;
    double& at(int c, int i0, int i1 = 0, int i2 = 0);
    const double& at(int c, int i0, int i1 = 0, int i2 = 0) const;

  private:
    GridSpec grid_{};
    int components_ = 0;
    std::vector<double> data_;
};

}  // namespace voigt
