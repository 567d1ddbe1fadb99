#pragma once

#include <complex>
#include <vector>

#include "absns/torus_grid.hpp"

namespace absns {

/// Two-dimensional complex FFT pair for one n x n scalar component.
///
/// Forward maps collocation values to Fourier coefficients with the 1/n^2
/// normalization, so that u(x) = sum_k uhat(k) exp(i k.x).  Plans are created
/// with FFTW_ESTIMATE: planning is then deterministic, which the bitwise
/// reproducibility contract of the solver relies on.
class Fft2d {
  public:
    explicit Fft2d(int n);
    ~Fft2d();

    Fft2d(const Fft2d&) = delete;
    Fft2d& operator=(const Fft2d&) = delete;

    int n() const { return n_; }

    /// Collocation values (row-major, size n*n) -> coefficients (size n*n).
    void forward(const double* phys, std::complex<double>* spec);

    /// Coefficients -> collocation values (imaginary parts discarded).
    void inverse(const std::complex<double>* spec, double* phys);

    /// Thread-local instance cache keyed by grid size.
    static Fft2d& for_size(int n);

  private:
    int n_;
    void* plan_fwd_;
    void* plan_inv_;
    std::complex<double>* buf_in_;
    std::complex<double>* buf_out_;
};

}  // namespace absns
