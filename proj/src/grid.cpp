#include "voigt/grid.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace voigt {

GridSpec GridSpec::line(int points, double extent) {
    GridSpec g;
    g.dim = 1;
    g.n = {points, 1, 1};
    g.length = {extent, 1.0, 1.0};
    g.validate();
    return g;
}

GridSpec GridSpec::cube(int points, double extent) {
    GridSpec g;
    g.dim = 3;
    g.n = {points, points, points};
    g.length = {extent, extent, extent};
    g.validate();
    return g;
}

void GridSpec::validate() const {
    if (dim != 1 && dim != 3)
        throw std::invalid_argument("GridSpec: dim must be 1 or 3, got " + std::to_string(dim));
    for (int a = 0; a < dim; ++a) {
        if (n[a] < 4 || n[a] % 2 != 0)
            throw std::invalid_argument("GridSpec: n must be even and >= 4 on every axis, got " +
                                        std::to_string(n[a]));
        if (!(length[a] > 0.0))
            throw std::invalid_argument("GridSpec: length must be positive on every axis");
    }
}

std::int64_t GridSpec::point_count() const {
    std::int64_t total = 1;
    for (int a = 0; a < dim; ++a) total *= n[a];
    return total;
}

std::int64_t GridSpec::coeff_count() const {
    std::int64_t total = 1;
    for (int a = 0; a < dim; ++a) total *= stored(a);
    return total;
}

double GridSpec::volume() const {
    double v = 1.0;
    for (int a = 0; a < dim; ++a) v *= length[a];
    return v;
}

double GridSpec::cell_volume() const { return volume() / static_cast<double>(point_count()); }

double GridSpec::min_dx() const {
    double dx = length[0] / n[0];
    for (int a = 1; a < dim; ++a) dx = std::min(dx, length[a] / n[a]);
    return dx;
}

int GridSpec::stored(int axis) const {
    return axis == dim - 1 ? n[axis] / 2 + 1 : n[axis];
}

double GridSpec::coordinate(int axis, int index) const {
    return length[axis] * static_cast<double>(index) / static_cast<double>(n[axis]);
}

int mode_of_index(const GridSpec& g, int axis, int i) {
    if (axis == g.dim - 1) return i;  // half lattice: 0..n/2
    return i <= g.n[axis] / 2 ? i : i - g.n[axis];
}

double deriv_wavenumber(const GridSpec& g, int axis, int i) {
    if (i == g.n[axis] / 2) return 0.0;
    return 2.0 * std::numbers::pi * mode_of_index(g, axis, i) / g.length[axis];
}

double mode_wavenumber(const GridSpec& g, int axis, int i) {
    return 2.0 * std::numbers::pi * mode_of_index(g, axis, i) / g.length[axis];
}

}  // namespace voigt
