#include "voigt/spectral_field.hpp"

#include <stdexcept>

namespace voigt {

SpectralField::SpectralField(GridSpec grid, int components)
    : grid_(grid), components_(components) {
    grid_.validate();
    if (components != 1 && components != 3)
        throw std::invalid_argument("SpectralField: components must be 1 or 3");
    data_.assign(static_cast<std::size_t>(components_) * grid_.coeff_count(), {0.0, 0.0});
}

std::span<std::complex<double>> SpectralField::component(int c) {
    return {data_.data() + static_cast<std::size_t>(c) * grid_.coeff_count(),
            static_cast<std::size_t>(grid_.coeff_count())};
}

std::span<const std::complex<double>> SpectralField::component(int c) const {
    return {data_.data() + static_cast<std::size_t>(c) * grid_.coeff_count(),
            static_cast<std::size_t>(grid_.coeff_count())};
}

std::int64_t SpectralField::offset(int c, int i0, int i1, int i2) const {
    const std::int64_t s1 = grid_.dim > 1 ? grid_.stored(1) : 1;
    const std::int64_t s2 = grid_.dim > 2 ? grid_.stored(2) : 1;
    return (static_cast<std::int64_t>(c) * grid_.coeff_count()) + ((i0 * s1 + i1) * s2 + i2);
}

std::complex<double>& SpectralField::at(int c, int i0, int i1, int i2) {
    return data_[offset(c, i0, i1, i2)];
}

const std::complex<double>& SpectralField::at(int c, int i0, int i1, int i2) const {
    return data_[offset(c, i0, i1, i2)];
}

void SpectralField::fill_zero() { std::fill(data_.begin(), data_.end(), std::complex<double>{}); }

void SpectralField::add_scaled(double a, const SpectralField& other) {
    if (!same_shape(other)) throw std::invalid_argument("add_scaled: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += a * other.data_[i];
}

SpectralField& SpectralField::operator*=(double a) {
    for (auto& v : data_) v *= a;
    return *this;
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
    add_scaled(1.0, other);
    return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
    add_scaled(-1.0, other);
    return *this;
}

PhysicalField::PhysicalField(GridSpec grid, int components)
    : grid_(grid), components_(components) {
    grid_.validate();
    if (components != 1 && components != 3)
        throw std::invalid_argument("PhysicalField: components must be 1 or 3");
    data_.assign(static_cast<std::size_t>(components_) * grid_.point_count(), 0.0);
}

PhysicalField::PhysicalField(GridSpec grid, int components, std::vector<double> samples)
    : grid_(grid), components_(components), data_(std::move(samples)) {
    grid_.validate();
    if (data_.size() != static_cast<std::size_t>(components_) * grid_.point_count())
        throw std::invalid_argument("PhysicalField: sample count does not match grid");
}

std::span<double> PhysicalField::component(int c) {
    return {data_.data() + static_cast<std::size_t>(c) * grid_.point_count(),
            static_cast<std::size_t>(grid_.point_count())};
}

std::span<const double> PhysicalField::component(int c) const {
    return {data_.data() + static_cast<std::size_t>(c) * grid_.point_count(),
            static_cast<std::size_t>(grid_.point_count())};
}

double& PhysicalField::at(int c, int i0, int i1, int i2) {
    const std::int64_t s1 = grid_.dim > 1 ? grid_.n[1] : 1;
    const std::int64_t s2 = grid_.dim > 2 ? grid_.n[2] : 1;
    return data_[static_cast<std::size_t>(c) * grid_.point_count() + (i0 * s1 + i1) * s2 + i2];
}

const double& PhysicalField::at(int c, int i0, int i1, int i2) const {
    return const_cast<PhysicalField*>(this)->at(c, i0, i1, i2);
}

}  // namespace voigt
