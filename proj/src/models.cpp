#include "voigt/models.hpp"

#include "voigt/spectral_ops.hpp"
#include "voigt/transforms.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <stdexcept>

namespace voigt {

void VoigtParams::validate() const {
    if (alpha < 0.0) throw std::invalid_argument("VoigtParams: alpha must be >= 0");
    if (nu < 0.0) throw std::invalid_argument("VoigtParams: nu must be >= 0");
    if (model == Model::EulerVoigt3D && nu != 0.0)
        throw std::invalid_argument("VoigtParams: EulerVoigt3D is inviscid (nu must be 0)");
}

SpectralField taylor_green(const GridSpec& grid) {
    grid.validate();
    if (grid.dim != 3) throw std::invalid_argument("taylor_green: requires a 3D grid");
    for (int a = 0; a < 3; ++a)
        if (std::abs(grid.length[a] - 1.0) > 1e-12)
            throw std::invalid_argument("taylor_green: requires the unit cube");

    SpectralField u(grid, 3);
    // Eight logical modes (+-1,+-1,+-1); the half lattice stores the four with
    // m_z = +1. Component 3 is identically zero.
    for (int sx : {1, -1})
        for (int sy : {1, -1}) {
            const int ix = sx == 1 ? 1 : grid.n[0] - 1;
            const int iy = sy == 1 ? 1 : grid.n[1] - 1;
            u.at(0, ix, iy, 1) = std::complex<double>(0.0, -sx / 8.0);
            u.at(1, ix, iy, 1) = std::complex<double>(0.0, sy / 8.0);
        }
    return u;
}

SpectralField bbm_initial(const GridSpec& grid) {
    grid.validate();
    if (grid.dim != 1) throw std::invalid_argument("bbm_initial: requires a 1D grid");
    if (std::abs(grid.length[0] - 2.0 * std::numbers::pi) > 1e-12)
        throw std::invalid_argument("bbm_initial: requires a 2*pi interval");
    SpectralField u(grid, 1);
    u.at(0, 1) = std::complex<double>(0.0, 0.5);  // -sin(x)
    return u;
}

namespace {

// Per-thread scratch for the 3D tendency: reused physical lattices plus one
// spectral component, so a right-hand-side evaluation allocates only its
// output field.
struct Ev3dWorkspace {
    PhysicalField u_phys;
    PhysicalField du;
    PhysicalField conv;
    std::vector<std::complex<double>> scratch;

    explicit Ev3dWorkspace(const GridSpec& g)
        : u_phys(g, 3), du(g, 1), conv(g, 3), scratch(g.coeff_count()) {}
};

Ev3dWorkspace& ev3d_workspace(const GridSpec& g) {
    using Key = std::array<int, 3>;
    thread_local std::map<Key, std::unique_ptr<Ev3dWorkspace>> cache;
    auto& slot = cache[g.n];
    if (!slot) slot = std::make_unique<Ev3dWorkspace>(g);
    return *slot;
}

void check_divergence_free(const SpectralField& u) {
    const GridSpec& g = u.grid();
    std::array<std::vector<double>, 3> kd;
    for (int a = 0; a < 3; ++a) {
        kd[a].resize(g.stored(a));
        for (int i = 0; i < g.stored(a); ++i) kd[a][i] = deriv_wavenumber(g, a, i);
    }
    auto u0 = u.component(0);
    auto u1 = u.component(1);
    auto u2 = u.component(2);
    double max_div = 0.0, scale = 0.0;
    std::int64_t idx = 0;
    for (int i0 = 0; i0 < g.stored(0); ++i0)
        for (int i1 = 0; i1 < g.stored(1); ++i1)
            for (int i2 = 0; i2 < g.stored(2); ++i2, ++idx) {
                const double k0 = kd[0][i0], k1 = kd[1][i1], k2 = kd[2][i2];
                max_div = std::max(max_div,
                                   std::abs(k0 * u0[idx] + k1 * u1[idx] + k2 * u2[idx]));
                const double kmag = std::sqrt(k0 * k0 + k1 * k1 + k2 * k2);
                scale = std::max(scale, kmag * std::sqrt(std::norm(u0[idx]) + std::norm(u1[idx]) +
                                                         std::norm(u2[idx])));
            }
    if (max_div > 1e-10 * std::max(scale, 1e-30))
        throw std::invalid_argument("ev3d_rhs: input field is not divergence-free");
}

// scratch <- i * k_axis * u_hat
void derivative_into(const SpectralField& u, int comp, int axis,
                     std::vector<std::complex<double>>& scratch) {
    const GridSpec& g = u.grid();
    std::vector<double> kd(g.stored(axis));
    for (int i = 0; i < g.stored(axis); ++i) kd[i] = deriv_wavenumber(g, axis, i);
    auto src = u.component(comp);
    std::int64_t idx = 0;
    for (int i0 = 0; i0 < g.stored(0); ++i0)
        for (int i1 = 0; i1 < g.stored(1); ++i1)
            for (int i2 = 0; i2 < g.stored(2); ++i2, ++idx) {
                const int ia = axis == 0 ? i0 : axis == 1 ? i1 : i2;
                scratch[idx] = std::complex<double>(0.0, kd[ia]) * src[idx];
            }
}

void zero_mean(SpectralField& f) {
    for (int c = 0; c < f.components(); ++c) f.at(c, 0, 0, 0) = {};
}

}  // namespace

SpectralField ev3d_rhs(const SpectralField& u, const VoigtParams& p) {
    p.validate();
    if (p.model != VoigtParams::Model::EulerVoigt3D)
        throw std::invalid_argument("ev3d_rhs: params are not EulerVoigt3D");
    if (!(p.alpha > 0.0)) throw std::invalid_argument("ev3d_rhs: alpha must be > 0");
    if (u.grid().dim != 3 || u.components() != 3)
        throw std::invalid_argument("ev3d_rhs: requires a 3-component 3D field");
    check_divergence_free(u);

    const GridSpec& g = u.grid();
    auto& ws = ev3d_workspace(g);
    for (int c = 0; c < 3; ++c)
        detail::backward_component(g, u.component(c).data(), ws.u_phys.component(c).data());

    // Advective form: conv_i = sum_j u_j d_j u_i, products on the grid.
    const std::int64_t npts = g.point_count();
    for (int i = 0; i < 3; ++i) {
        auto conv = ws.conv.component(i);
        std::fill(conv.begin(), conv.end(), 0.0);
        for (int j = 0; j < 3; ++j) {
            derivative_into(u, i, j, ws.scratch);
            detail::backward_component(g, ws.scratch.data(), ws.du.component(0).data());
            auto uj = ws.u_phys.component(j);
            auto du = ws.du.component(0);
            for (std::int64_t q = 0; q < npts; ++q) conv[q] += uj[q] * du[q];
        }
    }

    SpectralField tend(g, 3);
    for (int i = 0; i < 3; ++i)
        detail::forward_component(g, ws.conv.component(i).data(), tend.component(i).data());

    tend = dealias(std::move(tend));
    zero_mean(tend);
    tend = helmholtz_invert(leray_project(std::move(tend)), p.alpha);
    tend *= -1.0;
    return tend;
}

namespace {

// dealias(F[u u_x]) with the mean removed; shared by both BBM tendencies.
SpectralField bbm_nonlinear(const SpectralField& u) {
    const GridSpec& g = u.grid();
    PhysicalField up = to_physical(u);
    PhysicalField dup = to_physical(derivative(u, 0));
    PhysicalField prod(g, 1);
    auto a = up.component(0);
    auto b = dup.component(0);
    auto c = prod.component(0);
    for (std::int64_t i = 0; i < g.point_count(); ++i) c[i] = a[i] * b[i];
    SpectralField nl = dealias(to_spectral(prod));
    nl.at(0, 0) = {};
    return nl;
}

void require_bbm(const SpectralField& u, const VoigtParams& p, const char* op) {
    p.validate();
    if (p.model != VoigtParams::Model::BBM1D)
        throw std::invalid_argument(std::string(op) + ": params are not BBM1D");
    if (u.grid().dim != 1 || u.components() != 1)
        throw std::invalid_argument(std::string(op) + ": requires a scalar 1D field");
}

}  // namespace

SpectralField bbm_advective_rhs(const SpectralField& u, const VoigtParams& p) {
    require_bbm(u, p, "bbm_advective_rhs");
    SpectralField tend = helmholtz_invert(bbm_nonlinear(u), p.alpha);
    tend *= -1.0;
    return tend;
}

SpectralField bbm_rhs(const SpectralField& u, const VoigtParams& p) {
    require_bbm(u, p, "bbm_rhs");
    const GridSpec& g = u.grid();
    SpectralField nl = bbm_nonlinear(u);
    SpectralField tend(g, 1);
    auto src = u.component(0);
    auto n = nl.component(0);
    auto out = tend.component(0);
    const double a2 = p.alpha * p.alpha;
    for (int i = 0; i < g.stored(0); ++i) {
        const double k = mode_wavenumber(g, 0, i);
        const double ksq = k * k;
        out[i] = (-n[i] - p.nu * ksq * src[i]) / (1.0 + a2 * ksq);
    }
    return tend;
}

std::vector<double> bbm_linear_symbol(const GridSpec& grid, const VoigtParams& p) {
    p.validate();
    if (grid.dim != 1) throw std::invalid_argument("bbm_linear_symbol: requires a 1D grid");
    if (!(p.nu > 0.0))
        throw std::invalid_argument("bbm_linear_symbol: nu must be > 0 (use plain RK4 otherwise)");
    std::vector<double> symbol(grid.coeff_count());
    const double a2 = p.alpha * p.alpha;
    for (int i = 0; i < grid.stored(0); ++i) {
        const double k = mode_wavenumber(grid, 0, i);
        const double ksq = k * k;
        symbol[i] = -p.nu * ksq / (1.0 + a2 * ksq);
    }
    return symbol;
}

}  // namespace voigt
