#include "voigt/diagnostics.hpp"

#include "voigt/spectral_ops.hpp"
#include "voigt/transforms.hpp"

#include <cmath>
#include <stdexcept>

namespace voigt {

namespace {

// Weight of a stored coefficient in full-lattice sums: entries with an
// implicit conjugate partner (0 < m_last < n/2) count twice.
inline double pair_weight(const GridSpec& g, int i_last) {
    const int n_last = g.n[g.dim - 1];
    return (i_last == 0 || i_last == n_last / 2) ? 1.0 : 2.0;
}

// Visits every stored coefficient; i_last is the index along the halved axis.
template <class PerMode>
void for_each_mode(const GridSpec& g, PerMode&& fn) {
    const int s0 = g.stored(0);
    const int s1 = g.dim > 1 ? g.stored(1) : 1;
    const int s2 = g.dim > 2 ? g.stored(2) : 1;
    std::int64_t idx = 0;
    for (int i0 = 0; i0 < s0; ++i0)
        for (int i1 = 0; i1 < s1; ++i1)
            for (int i2 = 0; i2 < s2; ++i2, ++idx)
                fn(idx, i0, i1, i2, g.dim == 1 ? i0 : i2);
}

}  // namespace

void DiagnosticSeries::push(const DiagnosticRecord& r) {
    times.push_back(r.t);
    l2_energy.push_back(r.l2_energy);
    scaled_enstrophy.push_back(r.scaled_enstrophy);
    alpha_energy.push_back(r.alpha_energy);
    grad_norm.push_back(r.grad_norm);
    vort_max.push_back(r.vort_max);
    dissipation.push_back(r.dissipation);
    running_sup_grad.push_back(r.running_sup_grad);
}

DiagnosticRecord DiagnosticSeries::row(std::size_t i) const {
    return {times[i],     l2_energy[i], scaled_enstrophy[i], alpha_energy[i],
            grad_norm[i], vort_max[i],  dissipation[i],      running_sup_grad[i]};
}

double energy_l2(const SpectralField& f) {
    const GridSpec& g = f.grid();
    double sum = 0.0;
    for (int c = 0; c < f.components(); ++c) {
        auto u = f.component(c);
        for_each_mode(g, [&](std::int64_t idx, int, int, int, int i_last) {
            sum += pair_weight(g, i_last) * std::norm(u[idx]);
        });
    }
    return g.volume() * sum;
}

double grad_norm_sq(const SpectralField& f) {
    const GridSpec& g = f.grid();
    std::array<std::vector<double>, 3> kd;
    for (int a = 0; a < g.dim; ++a) {
        kd[a].resize(g.stored(a));
        for (int i = 0; i < g.stored(a); ++i) kd[a][i] = deriv_wavenumber(g, a, i);
    }
    double sum = 0.0;
    for (int c = 0; c < f.components(); ++c) {
        auto u = f.component(c);
        for_each_mode(g, [&](std::int64_t idx, int i0, int i1, int i2, int i_last) {
            double ksq = kd[0][i0] * kd[0][i0];
            if (g.dim > 1) ksq += kd[1][i1] * kd[1][i1] + kd[2][i2] * kd[2][i2];
            sum += pair_weight(g, i_last) * ksq * std::norm(u[idx]);
        });
    }
    return g.volume() * sum;
}

double inner_product_l2(const SpectralField& f, const SpectralField& g) {
    if (!f.same_shape(g)) throw std::invalid_argument("inner_product_l2: shape mismatch");
    const GridSpec& gr = f.grid();
    double sum = 0.0;
    for (int c = 0; c < f.components(); ++c) {
        auto a = f.component(c);
        auto b = g.component(c);
        for_each_mode(gr, [&](std::int64_t idx, int, int, int, int i_last) {
            sum += pair_weight(gr, i_last) * (a[idx] * std::conj(b[idx])).real();
        });
    }
    return gr.volume() * sum;
}

double grad_inner_product(const SpectralField& f, const SpectralField& g) {
    double sum = 0.0;
    for (int a = 0; a < f.grid().dim; ++a)
        sum += inner_product_l2(derivative(f, a), derivative(g, a));
    return sum;
}

double alpha_energy(const SpectralField& f, double alpha, double nu, double dissipation) {
    double e = energy_l2(f) + alpha * alpha * grad_norm_sq(f);
    if (nu > 0.0) e += dissipation;
    return e;
}

double relative_energy_error(const DiagnosticSeries& series) {
    if (series.size() == 0)
        throw std::invalid_argument("relative_energy_error: empty series");
    const double e0 = series.alpha_energy[0];
    if (e0 == 0.0)
        throw std::invalid_argument("relative_energy_error: E_alpha(0) is zero");
    double worst = 0.0;
    for (double e : series.alpha_energy)
        worst = std::max(worst, std::abs((e - e0) / e0));
    return worst;
}

std::vector<double> spectrum(const SpectralField& f) {
    const GridSpec& g = f.grid();
    double max_msq = 0.0;
    for (int a = 0; a < g.dim; ++a)
        max_msq += static_cast<double>(g.n[a] / 2) * (g.n[a] / 2);
    const int kappa_max = static_cast<int>(std::floor(std::sqrt(max_msq) + 0.5));
    std::vector<double> shells(static_cast<std::size_t>(kappa_max), 0.0);

    std::array<std::vector<int>, 3> modes;
    for (int a = 0; a < g.dim; ++a) {
        modes[a].resize(g.stored(a));
        for (int i = 0; i < g.stored(a); ++i) modes[a][i] = mode_of_index(g, a, i);
    }
    const double vol = g.volume();
    for (int c = 0; c < f.components(); ++c) {
        auto u = f.component(c);
        for_each_mode(g, [&](std::int64_t idx, int i0, int i1, int i2, int i_last) {
            double msq = static_cast<double>(modes[0][i0]) * modes[0][i0];
            if (g.dim > 1)
                msq += static_cast<double>(modes[1][i1]) * modes[1][i1] +
                       static_cast<double>(modes[2][i2]) * modes[2][i2];
            const int kappa = static_cast<int>(std::floor(std::sqrt(msq) + 0.5));
            if (kappa < 1) return;  // mean mode
            shells[kappa - 1] += vol * pair_weight(g, i_last) * std::norm(u[idx]);
        });
    }
    return shells;
}

namespace {

double max_magnitude(const PhysicalField& p) {
    double best = 0.0;
    const std::int64_t n = p.points_per_component();
    if (p.components() == 1) {
        auto u = p.component(0);
        for (std::int64_t i = 0; i < n; ++i) best = std::max(best, std::abs(u[i]));
    } else {
        auto u0 = p.component(0);
        auto u1 = p.component(1);
        auto u2 = p.component(2);
        for (std::int64_t i = 0; i < n; ++i)
            best = std::max(best, u0[i] * u0[i] + u1[i] * u1[i] + u2[i] * u2[i]);
        best = std::sqrt(best);
    }
    return best;
}

}  // namespace

double vorticity_max(const SpectralField& f) {
    if (f.grid().dim != 3 || f.components() != 3)
        throw std::invalid_argument("vorticity_max: requires a 3-component 3D field");
    return max_magnitude(to_physical(curl(f)));
}

double max_pointwise_speed(const SpectralField& f) { return max_magnitude(to_physical(f)); }

double divergence_max(const SpectralField& f) {
    return max_magnitude(to_physical(divergence(f)));
}

}  // namespace voigt
