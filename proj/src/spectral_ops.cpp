#include "voigt/spectral_ops.hpp"

#include <stdexcept>
#include <vector>

namespace voigt {

namespace {

using cplx = std::complex<double>;

struct AxisTables {
    std::vector<double> kd;  // derivative wavenumber per stored index
    std::vector<double> km;  // symmetric-symbol wavenumber
    std::vector<int> m;      // signed mode
};

AxisTables tables_for(const GridSpec& g, int axis) {
    AxisTables t;
    const int s = g.stored(axis);
    t.kd.resize(s);
    t.km.resize(s);
    t.m.resize(s);
    for (int i = 0; i < s; ++i) {
        t.kd[i] = deriv_wavenumber(g, axis, i);
        t.km[i] = mode_wavenumber(g, axis, i);
        t.m[i] = mode_of_index(g, axis, i);
    }
    return t;
}

void require_vector3(const SpectralField& f, const char* op) {
    if (f.grid().dim != 3 || f.components() != 3)
        throw std::invalid_argument(std::string(op) + ": requires a 3-component 3D field");
}

}  // namespace

SpectralField derivative(const SpectralField& f, int axis) {
    const GridSpec& g = f.grid();
    if (axis < 0 || axis >= g.dim)
        throw std::invalid_argument("derivative: axis out of range for grid dimension");
    const auto t = tables_for(g, axis);
    SpectralField out = f;
    const int s0 = g.stored(0);
    const int s1 = g.dim > 1 ? g.stored(1) : 1;
    const int s2 = g.dim > 2 ? g.stored(2) : 1;
    for (int c = 0; c < f.components(); ++c) {
        auto dst = out.component(c);
        std::int64_t idx = 0;
        for (int i0 = 0; i0 < s0; ++i0)
            for (int i1 = 0; i1 < s1; ++i1)
                for (int i2 = 0; i2 < s2; ++i2, ++idx) {
                    const int ia = axis == 0 ? i0 : axis == 1 ? i1 : i2;
                    dst[idx] *= cplx(0.0, t.kd[ia]);
                }
    }
    return out;
}

SpectralField dealias(SpectralField f) {
    const GridSpec& g = f.grid();
    std::array<AxisTables, 3> t;
    for (int a = 0; a < g.dim; ++a) t[a] = tables_for(g, a);
    const int s0 = g.stored(0);
    const int s1 = g.dim > 1 ? g.stored(1) : 1;
    const int s2 = g.dim > 2 ? g.stored(2) : 1;
    for (int c = 0; c < f.components(); ++c) {
        auto dst = f.component(c);
        std::int64_t idx = 0;
        for (int i0 = 0; i0 < s0; ++i0) {
            const bool kill0 = std::abs(t[0].m[i0]) > g.dealias_cutoff(0);
            for (int i1 = 0; i1 < s1; ++i1) {
                const bool kill1 =
                    kill0 || (g.dim > 1 && std::abs(t[1].m[i1]) > g.dealias_cutoff(1));
                for (int i2 = 0; i2 < s2; ++i2, ++idx) {
                    const bool kill =
                        kill1 || (g.dim > 2 && std::abs(t[2].m[i2]) > g.dealias_cutoff(2));
                    if (kill) dst[idx] = cplx{};
                }
            }
        }
    }
    return f;
}

SpectralField helmholtz_invert(SpectralField f, double alpha) {
    if (alpha < 0.0) throw std::invalid_argument("helmholtz_invert: alpha must be >= 0");
    if (alpha == 0.0) return f;
    const GridSpec& g = f.grid();
    std::array<AxisTables, 3> t;
    for (int a = 0; a < g.dim; ++a) t[a] = tables_for(g, a);
    const int s0 = g.stored(0);
    const int s1 = g.dim > 1 ? g.stored(1) : 1;
    const int s2 = g.dim > 2 ? g.stored(2) : 1;
    const double a2 = alpha * alpha;
    for (int c = 0; c < f.components(); ++c) {
        auto dst = f.component(c);
        std::int64_t idx = 0;
        for (int i0 = 0; i0 < s0; ++i0) {
            const double k0sq = t[0].km[i0] * t[0].km[i0];
            for (int i1 = 0; i1 < s1; ++i1) {
                const double k01sq = k0sq + (g.dim > 1 ? t[1].km[i1] * t[1].km[i1] : 0.0);
                for (int i2 = 0; i2 < s2; ++i2, ++idx) {
                    const double ksq = k01sq + (g.dim > 2 ? t[2].km[i2] * t[2].km[i2] : 0.0);
                    dst[idx] /= 1.0 + a2 * ksq;
                }
            }
        }
    }
    return f;
}

SpectralField leray_project(SpectralField f) {
    require_vector3(f, "leray_project");
    const GridSpec& g = f.grid();
    const auto t0 = tables_for(g, 0), t1 = tables_for(g, 1), t2 = tables_for(g, 2);
    auto u0 = f.component(0);
    auto u1 = f.component(1);
    auto u2 = f.component(2);
    std::int64_t idx = 0;
    for (int i0 = 0; i0 < g.stored(0); ++i0)
        for (int i1 = 0; i1 < g.stored(1); ++i1)
            for (int i2 = 0; i2 < g.stored(2); ++i2, ++idx) {
                const double k0 = t0.kd[i0], k1 = t1.kd[i1], k2 = t2.kd[i2];
                const double ksq = k0 * k0 + k1 * k1 + k2 * k2;
                if (ksq == 0.0) continue;
                const cplx kd = (k0 * u0[idx] + k1 * u1[idx] + k2 * u2[idx]) / ksq;
                u0[idx] -= k0 * kd;
                u1[idx] -= k1 * kd;
                u2[idx] -= k2 * kd;
            }
    return f;
}

SpectralField curl(const SpectralField& f) {
    require_vector3(f, "curl");
    const GridSpec& g = f.grid();
    const auto t0 = tables_for(g, 0), t1 = tables_for(g, 1), t2 = tables_for(g, 2);
    SpectralField out(g, 3);
    auto u0 = f.component(0);
    auto u1 = f.component(1);
    auto u2 = f.component(2);
    auto w0 = out.component(0);
    auto w1 = out.component(1);
    auto w2 = out.component(2);
    const cplx I(0.0, 1.0);
    std::int64_t idx = 0;
    for (int i0 = 0; i0 < g.stored(0); ++i0)
        for (int i1 = 0; i1 < g.stored(1); ++i1)
            for (int i2 = 0; i2 < g.stored(2); ++i2, ++idx) {
                const double k0 = t0.kd[i0], k1 = t1.kd[i1], k2 = t2.kd[i2];
                w0[idx] = I * (k1 * u2[idx] - k2 * u1[idx]);
                w1[idx] = I * (k2 * u0[idx] - k0 * u2[idx]);
                w2[idx] = I * (k0 * u1[idx] - k1 * u0[idx]);
            }
    return out;
}

SpectralField divergence(const SpectralField& f) {
    require_vector3(f, "divergence");
    const GridSpec& g = f.grid();
    const auto t0 = tables_for(g, 0), t1 = tables_for(g, 1), t2 = tables_for(g, 2);
    SpectralField out(g, 1);
    auto u0 = f.component(0);
    auto u1 = f.component(1);
    auto u2 = f.component(2);
    auto d = out.component(0);
    const cplx I(0.0, 1.0);
    std::int64_t idx = 0;
    for (int i0 = 0; i0 < g.stored(0); ++i0)
        for (int i1 = 0; i1 < g.stored(1); ++i1)
            for (int i2 = 0; i2 < g.stored(2); ++i2, ++idx)
                d[idx] = I * (t0.kd[i0] * u0[idx] + t1.kd[i1] * u1[idx] + t2.kd[i2] * u2[idx]);
    return out;
}

}  // namespace voigt
