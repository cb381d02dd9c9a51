#pragma once

#include <complex>
#include <span>
#include <vector>

namespace hykin {

/// Complex 3D FFT workspace for one cube size, wrapping FFTW. Converts
/// between nodal values on the cell-centered grid of [-pi, pi]^3 and Fourier
/// coefficients F_k, k in [-n/2, n/2)^3 (stored in FFT index order, signed
/// frequency = idx < n/2 ? idx : idx - n).
///
/// FFTW plan creation/destruction is not thread-safe and is serialized
/// behind a global mutex; execution only touches this instance's buffers, so
/// each worker thread must use its own workspace (see thread_local()).
class FftWorkspace3d {
public:
    explicit FftWorkspace3d(int n);
    ~FftWorkspace3d();
    FftWorkspace3d(const FftWorkspace3d&) = delete;
    FftWorkspace3d& operator=(const FftWorkspace3d&) = delete;

    int n() const { return n_; }
    int size() const { return n_ * n_ * n_; }

    /// F_k = (1/n^3) sum_j f_j exp(-i k . w_j) for real nodal data.
    void to_spectral(std::span<const double> f, std::complex<double>* coeff);

    /// values_j = sum_k coeff_k exp(i k . w_j).
    void to_nodal(const std::complex<double>* coeff, std::complex<double>* values);

    /// Exclusive per-thread instance for this cube size.
    static FftWorkspace3d& local(int n);

private:
    int n_ = 0;
    std::vector<std::complex<double>> in_, out_;
    std::vector<std::complex<double>> phase_fwd_; // per-axis exp(-i k w_0)
    void* fwd_ = nullptr; // fftw_plan
    void* bwd_ = nullptr;
};

/// 2D counterpart used by the planar collision kernel fixture.
class FftWorkspace2d {
public:
    explicit FftWorkspace2d(int n);
    ~FftWorkspace2d();
    FftWorkspace2d(const FftWorkspace2d&) = delete;
    FftWorkspace2d& operator=(const FftWorkspace2d&) = delete;

    int n() const { return n_; }
    int size() const { return n_ * n_; }

    void to_spectral(std::span<const double> f, std::complex<double>* coeff);
    void to_nodal(const std::complex<double>* coeff, std::complex<double>* values);

    static FftWorkspace2d& local(int n);

private:
    int n_ = 0;
    std::vector<std::complex<double>> in_, out_;
    std::vector<std::complex<double>> phase_fwd_;
    void* fwd_ = nullptr;
    void* bwd_ = nullptr;
};

/// Signed frequency of FFT index idx for transform size n.
inline int fft_frequency(int idx, int n) { return idx < n / 2 ? idx : idx - n; }

} // namespace hykin
