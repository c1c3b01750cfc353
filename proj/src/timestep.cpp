#include "voigt/timestep.hpp"

#include <cmath>
#include <string>

namespace voigt {

void StepperConfig::validate() const {
    if (!(cfl > 0.0) || cfl > 1.0)
        throw std::invalid_argument("StepperConfig: cfl must lie in (0, 1]");
    if (!(sample_interval > 0.0))
        throw std::invalid_argument("StepperConfig: sample_interval must be positive");
    if (t_end < 0.0) throw std::invalid_argument("StepperConfig: t_end must be >= 0");
    if (t_end > 0.0) {
        const double ratio = t_end / sample_interval;
        if (std::abs(ratio - std::round(ratio)) > 1e-12 * std::max(1.0, ratio))
            throw std::invalid_argument(
                "StepperConfig: t_end must be a multiple of sample_interval");
    }
}

std::int64_t StepperConfig::sample_count() const {
    return static_cast<std::int64_t>(std::llround(t_end / sample_interval));
}

double cfl_dt(const SpectralField& u, const StepperConfig& cfg) {
    const double speed = max_pointwise_speed(u);
    const double dt_max = cfg.effective_dt_max();
    if (speed == 0.0) return dt_max;
    return std::min(dt_max, cfg.cfl * u.grid().min_dx() / speed);
}

namespace {

void scale_by_exp(SpectralField& f, std::span<const double> symbol, double factor) {
    auto coeffs = f.component(0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] *= std::exp(symbol[i] * factor);
}

}  // namespace

OdeState ifrk4_step(const OdeState& y, double t, double dt, std::span<const double> symbol,
                    const OdeRhs& rhs) {
    // RK4 on w = exp(-L (t - t_n)) u:
    //   k1 = N(u)
    //   k2 = N(E (u + dt/2 k1))          E  = exp(L dt/2)
    //   k3 = N(E u + dt/2 k2)
    //   k4 = N(E2 u + dt E k3)           E2 = exp(L dt)
    //   u+ = E2 u + dt/6 (E2 k1 + 2 E k2 + 2 E k3 + k4)
    OdeState k1 = rhs(y, t);

    OdeState stage = y;
    stage.add_scaled(dt / 2.0, k1);
    scale_by_exp(stage.field, symbol, dt / 2.0);
    OdeState k2 = rhs(stage, t + dt / 2.0);

    stage = y;
    scale_by_exp(stage.field, symbol, dt / 2.0);
    stage.add_scaled(dt / 2.0, k2);
    OdeState k3 = rhs(stage, t + dt / 2.0);

    OdeState ek3 = k3;
    scale_by_exp(ek3.field, symbol, dt / 2.0);
    stage = y;
    scale_by_exp(stage.field, symbol, dt);
    stage.add_scaled(dt, ek3);
    OdeState k4 = rhs(stage, t + dt);

    OdeState out = y;
    scale_by_exp(out.field, symbol, dt);
    scale_by_exp(k1.field, symbol, dt);
    out.add_scaled(dt / 6.0, k1);
    scale_by_exp(k2.field, symbol, dt / 2.0);
    out.add_scaled(dt / 3.0, k2);
    out.add_scaled(dt / 3.0, ek3);
    out.add_scaled(dt / 6.0, k4);
    return out;
}

NonFiniteStateError::NonFiniteStateError(double t)
    : std::runtime_error("non-finite value in state at t = " + std::to_string(t) +
                         " (under-resolved run)"),
      time_(t) {}

namespace {

DiagnosticRecord make_record(const SpectralField& u, const VoigtParams& p, double t,
                             double dissipation, double sup_grad) {
    DiagnosticRecord r;
    r.t = t;
    r.l2_energy = energy_l2(u);
    const double gsq = grad_norm_sq(u);
    r.scaled_enstrophy = p.alpha * p.alpha * gsq;
    r.grad_norm = std::sqrt(gsq);
    r.dissipation = p.nu > 0.0 ? dissipation : 0.0;
    r.alpha_energy = r.l2_energy + r.scaled_enstrophy + (p.nu > 0.0 ? dissipation : 0.0);
    r.vort_max = u.grid().dim == 3 ? vorticity_max(u) : 0.0;
    r.running_sup_grad = std::max(sup_grad, r.grad_norm);
    return r;
}

}  // namespace

IntegrationResult integrate(const SpectralField& u0, const VoigtParams& params,
                            const StepperConfig& cfg, const SampleCallback& on_sample) {
    cfg.validate();
    params.validate();
    const bool is_bbm = params.model == VoigtParams::Model::BBM1D;
    if (is_bbm != (u0.grid().dim == 1))
        throw std::invalid_argument("integrate: field dimension does not match model");
    if (cfg.scheme == StepperConfig::Scheme::IFRK4 && !(is_bbm && params.nu > 0.0))
        throw std::invalid_argument("integrate: IFRK4 requires viscous BBM (use RK4 instead)");

    OdeRhs rhs;
    std::vector<double> symbol;
    if (cfg.scheme == StepperConfig::Scheme::IFRK4) {
        symbol = bbm_linear_symbol(u0.grid(), params);
        rhs = [&params](const OdeState& s, double) {
            return OdeState{bbm_advective_rhs(s.field, params),
                            2.0 * params.nu * grad_norm_sq(s.field)};
        };
    } else if (is_bbm) {
        rhs = [&params](const OdeState& s, double) {
            return OdeState{bbm_rhs(s.field, params),
                            params.nu > 0.0 ? 2.0 * params.nu * grad_norm_sq(s.field) : 0.0};
        };
    } else {
        rhs = [&params](const OdeState& s, double) {
            return OdeState{ev3d_rhs(s.field, params), 0.0};
        };
    }

    IntegrationResult result;
    OdeState y{u0, 0.0};
    double t = 0.0;
    double sup_grad = std::sqrt(grad_norm_sq(y.field));

    auto record = [&](double at) {
        const DiagnosticRecord r = make_record(y.field, params, at, y.aux, sup_grad);
        result.series.push(r);
        if (on_sample) on_sample(r, y.field);
    };
    record(0.0);

    const std::int64_t samples = cfg.sample_count();
    for (std::int64_t j = 1; j <= samples; ++j) {
        const double target = static_cast<double>(j) * cfg.sample_interval;
        while (t < target) {
            double dt = cfl_dt(y.field, cfg);
            const double remaining = target - t;
            bool landing = false;
            if (dt >= remaining * (1.0 - 1e-12)) {
                dt = remaining;
                landing = true;
            } else if (dt > 0.5 * remaining) {
                dt = 0.5 * remaining;  // avoid a sliver of a final step
            }
            y = cfg.scheme == StepperConfig::Scheme::IFRK4
                    ? ifrk4_step(y, t, dt, symbol, rhs)
                    : rk4_step(y, t, dt, rhs);
            ++result.steps;
            t = landing ? target : t + dt;
            const double g = std::sqrt(grad_norm_sq(y.field));
            if (!std::isfinite(g) || !std::isfinite(y.aux)) throw NonFiniteStateError(t);
            sup_grad = std::max(sup_grad, g);
        }
        record(target);
    }

    result.final_state = std::move(y.field);
    result.final_dissipation = y.aux;
    return result;
}

}  // namespace voigt
