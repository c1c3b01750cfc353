#pragma once

#include "voigt/diagnostics.hpp"
#include "voigt/models.hpp"
#include "voigt/spectral_field.hpp"

#include <functional>
#include <span>
#include <stdexcept>

namespace voigt {

/// Time-stepping controls for one integration.
struct StepperConfig {
    enum class Scheme { RK4, IFRK4 };

    double cfl = 0.5;
    double dt_max = 0.0;  // <= 0 means "derive as sample_interval / 10"
    double t_end = 0.0;
    double sample_interval = 0.0;
    Scheme scheme = Scheme::RK4;

    /// Throws unless 0 < cfl <= 1, sample_interval > 0 and t_end is a
    /// positive multiple of sample_interval (within 1e-12).
    void validate() const;
    double effective_dt_max() const {
        return dt_max > 0.0 ? dt_max : sample_interval / 10.0;
    }
    std::int64_t sample_count() const;  // samples after t=0
};

/// Advective CFL step: min(dt_max, cfl * dx_min / max|u|); dt_max for a
/// quiescent field.
double cfl_dt(const SpectralField& u, const StepperConfig& cfg);

/// ODE state for the integrators: the spectral field plus one scalar
/// accumulator (the viscous dissipation integral) advanced by the same
/// tableau.
struct OdeState {
    SpectralField field;
    double aux = 0.0;

    void add_scaled(double a, const OdeState& k) {
        field.add_scaled(a, k.field);
        aux += a * k.aux;
    }
};

inline void add_scaled(OdeState& y, double a, const OdeState& k) { y.add_scaled(a, k); }
inline void add_scaled(double& y, double a, double k) { y += a * k; }

/// One classical RK4 step (weights 1/6, 1/3, 1/3, 1/6). Works on any state
/// type providing copy and an ADL-visible add_scaled(state, a, k); plain
/// doubles qualify, so scalar ODEs can use it directly.
template <class State, class Rhs>
State rk4_step(const State& y, double t, double dt, Rhs&& rhs) {
    State k = rhs(y, t);
    State acc = y;
    add_scaled(acc, dt / 6.0, k);
    State stage = y;
    add_scaled(stage, dt / 2.0, k);
    k = rhs(stage, t + dt / 2.0);
    add_scaled(acc, dt / 3.0, k);
    stage = y;
    add_scaled(stage, dt / 2.0, k);
    k = rhs(stage, t + dt / 2.0);
    add_scaled(acc, dt / 3.0, k);
    stage = y;
    add_scaled(stage, dt, k);
    k = rhs(stage, t + dt);
    add_scaled(acc, dt / 6.0, k);
    return acc;
}

using OdeRhs = std::function<OdeState(const OdeState&, double)>;

/// Integrating-factor RK4 for a diagonal linear symbol: RK4 is applied to
/// exp(-symbol t) u, so a vanishing advective term propagates the linear part
/// exactly (coefficient *= exp(symbol dt)). The aux accumulator sees no
/// linear part and is advanced with the standard weights.
OdeState ifrk4_step(const OdeState& y, double t, double dt, std::span<const double> symbol,
                    const OdeRhs& advective_rhs);

/// Raised when the state stops being finite mid-run; carries the failure
/// time (signals under-resolution).
class NonFiniteStateError : public std::runtime_error {
  public:
    explicit NonFiniteStateError(double t);
    double time() const { return time_; }

  private:
    double time_;
};

struct IntegrationResult {
    DiagnosticSeries series;
    SpectralField final_state;
    double final_dissipation = 0.0;
    std::int64_t steps = 0;
};

using SampleCallback = std::function<void(const DiagnosticRecord&, const SpectralField&)>;

/// Advance u0 from t=0 to cfg.t_end, re-measuring the CFL step every step and
/// clipping so each multiple of sample_interval is landed on exactly. Records
/// a DiagnosticRecord per sample; the running supremum of ||grad u||_L2 is
/// maintained at every step, not just at samples.
IntegrationResult integrate(const SpectralField& u0, const VoigtParams& params,
                            const StepperConfig& cfg, const SampleCallback& on_sample = {});

}  // namespace voigt
