#include "voigt/transforms.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace voigt {

namespace {

// FFTW plan creation/destruction is not thread-safe; execution is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

// One set of plans + scratch per grid shape. Plans are bound to the scratch
// buffers, so execution never needs the new-array interface. Each thread
// keeps its own cache (see workspace_for), making transforms reentrant.
class FftWorkspace {
  public:
    explicit FftWorkspace(const GridSpec& g)
        : points_(g.point_count()), coeffs_(g.coeff_count()) {
        real_ = fftw_alloc_real(points_);
        cplx_ = fftw_alloc_complex(coeffs_);
        if (!real_ || !cplx_) throw std::bad_alloc();
        std::scoped_lock lock(planner_mutex());
        if (g.dim == 1) {
            r2c_ = fftw_plan_dft_r2c_1d(g.n[0], real_, cplx_, FFTW_ESTIMATE);
            c2r_ = fftw_plan_dft_c2r_1d(g.n[0], cplx_, real_, FFTW_ESTIMATE);
        } else {
            r2c_ = fftw_plan_dft_r2c_3d(g.n[0], g.n[1], g.n[2], real_, cplx_, FFTW_ESTIMATE);
            c2r_ = fftw_plan_dft_c2r_3d(g.n[0], g.n[1], g.n[2], cplx_, real_, FFTW_ESTIMATE);
        }
    }

    FftWorkspace(const FftWorkspace&) = delete;
    FftWorkspace& operator=(const FftWorkspace&) = delete;

    ~FftWorkspace() {
        std::scoped_lock lock(planner_mutex());
        fftw_destroy_plan(r2c_);
        fftw_destroy_plan(c2r_);
        fftw_free(real_);
        fftw_free(cplx_);
    }

    void forward(const double* in, std::complex<double>* out) {
        std::memcpy(real_, in, sizeof(double) * points_);
        fftw_execute(r2c_);
        const double scale = 1.0 / static_cast<double>(points_);
        for (std::int64_t i = 0; i < coeffs_; ++i)
            out[i] = scale * std::complex<double>(cplx_[i][0], cplx_[i][1]);
    }

    void backward(const std::complex<double>* in, double* out) {
        std::memcpy(cplx_, in, sizeof(fftw_complex) * coeffs_);
        fftw_execute(c2r_);
        std::memcpy(out, real_, sizeof(double) * points_);
    }

  private:
    std::int64_t points_;
    std::int64_t coeffs_;
    double* real_ = nullptr;
    fftw_complex* cplx_ = nullptr;
    fftw_plan r2c_{};
    fftw_plan c2r_{};
};

FftWorkspace& workspace_for(const GridSpec& g) {
    using Key = std::pair<int, std::array<int, 3>>;
    thread_local std::map<Key, std::unique_ptr<FftWorkspace>> cache;
    auto& slot = cache[{g.dim, g.n}];
    if (!slot) slot = std::make_unique<FftWorkspace>(g);
    return *slot;
}

}  // namespace

PhysicalField to_physical(const SpectralField& f) {
    auto& ws = workspace_for(f.grid());
    PhysicalField out(f.grid(), f.components());
    for (int c = 0; c < f.components(); ++c)
        ws.backward(f.component(c).data(), out.component(c).data());
    return out;
}

SpectralField to_spectral(const PhysicalField& samples) {
    auto& ws = workspace_for(samples.grid());
    SpectralField out(samples.grid(), samples.components());
    for (int c = 0; c < samples.components(); ++c)
        ws.forward(samples.component(c).data(), out.component(c).data());
    return out;
}

SpectralField to_spectral(std::span<const double> samples, const GridSpec& grid, int components) {
    grid.validate();
    if (samples.size() != static_cast<std::size_t>(components) * grid.point_count())
        throw std::invalid_argument("to_spectral: sample count does not match grid");
    auto& ws = workspace_for(grid);
    SpectralField out(grid, components);
    for (int c = 0; c < components; ++c)
        ws.forward(samples.data() + static_cast<std::size_t>(c) * grid.point_count(),
                   out.component(c).data());
    return out;
}

namespace detail {

void backward_component(const GridSpec& grid, const std::complex<double>* in, double* out) {
    workspace_for(grid).backward(in, out);
}

void forward_component(const GridSpec& grid, const double* in, std::complex<double>* out) {
    workspace_for(grid).forward(in, out);
}

}  // namespace detail

}  // namespace voigt

