#include "mlaf/transform.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "mlaf/error.hpp"

namespace mlaf {

namespace {

// The FFTW planner is not re-entrant.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

int read_thread_env() {
    const char* env = std::getenv("MLAF_THREADS");
    if (env == nullptr) {
        return 1;
    }
    const int v = std::atoi(env);
    return v > 0 ? v : 1;
}

// One r2c/c2r pair with its own aligned scratch. Plans use FFTW_ESTIMATE so
// the chosen algorithm, and hence every rounding, is identical across runs.
class FftPlan {
public:
    explicit FftPlan(int n) : n_(n) {
        const std::size_t nreal = static_cast<std::size_t>(n) * n * n;
        const std::size_t ncplx = static_cast<std::size_t>(n) * n * (n / 2 + 1);
        real_ = fftw_alloc_real(nreal);
        cplx_ = fftw_alloc_complex(ncplx);
        std::lock_guard lock(planner_mutex());
        static const bool threads_ready = [] {
            fftw_init_threads();
            return true;
        }();
        (void)threads_ready;
        fftw_plan_with_nthreads(transform_threads());
        forward_ = fftw_plan_dft_r2c_3d(n, n, n, real_, cplx_, FFTW_ESTIMATE);
        backward_ = fftw_plan_dft_c2r_3d(n, n, n, cplx_, real_, FFTW_ESTIMATE);
    }

    ~FftPlan() {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(forward_);
        fftw_destroy_plan(backward_);
        fftw_free(real_);
        fftw_free(cplx_);
    }

    FftPlan(const FftPlan&) = delete;
    FftPlan& operator=(const FftPlan&) = delete;

    void inverse(std::span<const Complex> in, std::span<double> out) {
        auto* dst = reinterpret_cast<Complex*>(cplx_);
        std::copy(in.begin(), in.end(), dst);
        fftw_execute(backward_);
        std::copy(real_, real_ + out.size(), out.begin());
    }

    void forward(std::span<const double> in, std::span<Complex> out) {
        std::copy(in.begin(), in.end(), real_);
        fftw_execute(forward_);
        const double scale = 1.0 / (static_cast<double>(n_) * n_ * n_);
        const auto* src = reinterpret_cast<const Complex*>(cplx_);
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = src[i] * scale;
        }
    }

private:
    int n_;
    double* real_ = nullptr;
    fftw_complex* cplx_ = nullptr;
    fftw_plan forward_ = nullptr;
    fftw_plan backward_ = nullptr;
};

FftPlan& plan_for(int n) {
    thread_local std::unordered_map<int, std::unique_ptr<FftPlan>> cache;
    auto& slot = cache[n];
    if (!slot) {
        slot = std::make_unique<FftPlan>(n);
    }
    return *slot;
}

void check_sizes(const TorusGrid& grid, std::size_t ncoeff, std::size_t nsamples) {
    if (ncoeff != grid.spectral_size() || nsamples != grid.physical_size()) {
        throw ShapeError("transform buffer sizes do not match the grid");
    }
}

} // namespace

int transform_threads() {
    static const int threads = read_thread_env();
    return threads;
}

void inverse_transform(const TorusGrid& grid, std::span<const Complex> coeffs,
                       std::span<double> samples) {
    check_sizes(grid, coeffs.size(), samples.size());
    plan_for(grid.n()).inverse(coeffs, samples);
}

void forward_transform(const TorusGrid& grid, std::span<const double> samples,
                       std::span<Complex> coeffs) {
    check_sizes(grid, coeffs.size(), samples.size());
    plan_for(grid.n()).forward(samples, coeffs);
}

PhysicalVectorField to_physical(const SpectralVectorField& field) {
    PhysicalVectorField out(field.grid());
    for (int c = 0; c < 3; ++c) {
        inverse_transform(field.grid(), field.component(c), out.component(c));
    }
    return out;
}

SpectralVectorField to_spectral(const PhysicalVectorField& samples) {
    SpectralVectorField out(samples.grid());
    for (int c = 0; c < 3; ++c) {
        forward_transform(samples.grid(), samples.component(c), out.component(c));
    }
    return out;
}

} // namespace mlaf
