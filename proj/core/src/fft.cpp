#include "hykin/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace hykin {

namespace {

std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}

std::vector<std::complex<double>> make_phase(int n) {
    // First node of the cell-centered grid on [-pi, pi]: w_0 = -pi + h/2.
    const double w0 = -M_PI + M_PI / n;
    std::vector<std::complex<double>> ph(n);
    for (int idx = 0; idx < n; ++idx) {
        const int k = fft_frequency(idx, n);
        ph[idx] = std::polar(1.0, -k * w0);
    }
    return ph;
}

} // namespace

FftWorkspace3d::FftWorkspace3d(int n)
    : n_(n), in_(size_t(n) * n * n), out_(size_t(n) * n * n), phase_fwd_(make_phase(n)) {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fwd_ = fftw_plan_dft_3d(n, n, n, reinterpret_cast<fftw_complex*>(in_.data()),
                            reinterpret_cast<fftw_complex*>(out_.data()), FFTW_FORWARD,
                            FFTW_ESTIMATE);
    bwd_ = fftw_plan_dft_3d(n, n, n, reinterpret_cast<fftw_complex*>(in_.data()),
                            reinterpret_cast<fftw_complex*>(out_.data()), FFTW_BACKWARD,
                            FFTW_ESTIMATE);
}

FftWorkspace3d::~FftWorkspace3d() {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(fwd_));
    fftw_destroy_plan(static_cast<fftw_plan>(bwd_));
}

void FftWorkspace3d::to_spectral(std::span<const double> f, std::complex<double>* coeff) {
    const int n = n_, total = size();
    for (int i = 0; i < total; ++i)
        in_[i] = f[i];
    fftw_execute(static_cast<fftw_plan>(fwd_));
    const double scale = 1.0 / total;
    int idx = 0;
    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2) {
            const std::complex<double> p12 = phase_fwd_[i1] * phase_fwd_[i2] * scale;
            for (int i3 = 0; i3 < n; ++i3, ++idx)
                coeff[idx] = out_[idx] * p12 * phase_fwd_[i3];
        }
}

void FftWorkspace3d::to_nodal(const std::complex<double>* coeff,
                              std::complex<double>* values) {
    const int n = n_;
    int idx = 0;
    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2) {
            const std::complex<double> p12 =
                std::conj(phase_fwd_[i1] * phase_fwd_[i2]);
            for (int i3 = 0; i3 < n; ++i3, ++idx)
                in_[idx] = coeff[idx] * p12 * std::conj(phase_fwd_[i3]);
        }
    fftw_execute_dft(static_cast<fftw_plan>(bwd_),
                     reinterpret_cast<fftw_complex*>(in_.data()),
                     reinterpret_cast<fftw_complex*>(out_.data()));
    const int total = size();
    for (int i = 0; i < total; ++i)
        values[i] = out_[i];
}

FftWorkspace3d& FftWorkspace3d::local(int n) {
    thread_local std::map<int, std::unique_ptr<FftWorkspace3d>> pool;
    auto& slot = pool[n];
    if (!slot)
        slot = std::make_unique<FftWorkspace3d>(n);
    return *slot;
}

FftWorkspace2d::FftWorkspace2d(int n)
    : n_(n), in_(size_t(n) * n), out_(size_t(n) * n), phase_fwd_(make_phase(n)) {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fwd_ = fftw_plan_dft_2d(n, n, reinterpret_cast<fftw_complex*>(in_.data()),
                            reinterpret_cast<fftw_complex*>(out_.data()), FFTW_FORWARD,
                            FFTW_ESTIMATE);
    bwd_ = fftw_plan_dft_2d(n, n, reinterpret_cast<fftw_complex*>(in_.data()),
                            reinterpret_cast<fftw_complex*>(out_.data()), FFTW_BACKWARD,
                            FFTW_ESTIMATE);
}

FftWorkspace2d::~FftWorkspace2d() {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(fwd_));
    fftw_destroy_plan(static_cast<fftw_plan>(bwd_));
}

void FftWorkspace2d::to_spectral(std::span<const double> f, std::complex<double>* coeff) {
    const int n = n_, total = size();
    for (int i = 0; i < total; ++i)
        in_[i] = f[i];
    fftw_execute(static_cast<fftw_plan>(fwd_));
    const double scale = 1.0 / total;
    int idx = 0;
    for (int i1 = 0; i1 < n; ++i1) {
        const std::complex<double> p1 = phase_fwd_[i1] * scale;
        for (int i2 = 0; i2 < n; ++i2, ++idx)
            coeff[idx] = out_[idx] * p1 * phase_fwd_[i2];
    }
}

void FftWorkspace2d::to_nodal(const std::complex<double>* coeff,
                              std::complex<double>* values) {
    const int n = n_;
    int idx = 0;
    for (int i1 = 0; i1 < n; ++i1) {
        const std::complex<double> p1 = std::conj(phase_fwd_[i1]);
        for (int i2 = 0; i2 < n; ++i2, ++idx)
            in_[idx] = coeff[idx] * p1 * std::conj(phase_fwd_[i2]);
    }
    fftw_execute_dft(static_cast<fftw_plan>(bwd_),
                     reinterpret_cast<fftw_complex*>(in_.data()),
                     reinterpret_cast<fftw_complex*>(out_.data()));
    const int total = size();
    for (int i = 0; i < total; ++i)
        values[i] = out_[i];
}

FftWorkspace2d& FftWorkspace2d::local(int n) {
    thread_local std::map<int, std::unique_ptr<FftWorkspace2d>> pool;
    auto& slot = pool[n];
    if (!slot)
        slot = std::make_unique<FftWorkspace2d>(n);
    return *slot;
}

} // namespace hykin
