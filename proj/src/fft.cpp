#include "absns/fft.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>

namespace absns {

namespace {
// FFTW plan creation/destruction is not thread-safe; execution on distinct
// buffers is.
std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

Fft2d::Fft2d(int n) : n_(n) {
    std::lock_guard<std::mutex> lock(plan_mutex());
    buf_in_ = reinterpret_cast<std::complex<double>*>(fftw_alloc_complex(n * n));
    buf_out_ = reinterpret_cast<std::complex<double>*>(fftw_alloc_complex(n * n));
    plan_fwd_ = fftw_plan_dft_2d(n, n, reinterpret_cast<fftw_complex*>(buf_in_),
                                 reinterpret_cast<fftw_complex*>(buf_out_),
                                 FFTW_FORWARD, FFTW_ESTIMATE);
    plan_inv_ = fftw_plan_dft_2d(n, n, reinterpret_cast<fftw_complex*>(buf_in_),
                                 reinterpret_cast<fftw_complex*>(buf_out_),
                                 FFTW_BACKWARD, FFTW_ESTIMATE);
}

Fft2d::~Fft2d() {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
    fftw_destroy_plan(static_cast<fftw_plan>(plan_inv_));
    fftw_free(buf_in_);
    fftw_free(buf_out_);
}

void Fft2d::forward(const double* phys, std::complex<double>* spec) {
    const int m = n_ * n_;
    for (int i = 0; i < m; ++i) buf_in_[i] = {phys[i], 0.0};
    fftw_execute_dft(static_cast<fftw_plan>(plan_fwd_),
                     reinterpret_cast<fftw_complex*>(buf_in_),
                     reinterpret_cast<fftw_complex*>(buf_out_));
    const double scale = 1.0 / m;
    for (int i = 0; i < m; ++i) spec[i] = buf_out_[i] * scale;
}

void Fft2d::inverse(const std::complex<double>* spec, double* phys) {
    const int m = n_ * n_;
    for (int i = 0; i < m; ++i) buf_in_[i] = spec[i];
    fftw_execute_dft(static_cast<fftw_plan>(plan_inv_),
                     reinterpret_cast<fftw_complex*>(buf_in_),
                     reinterpret_cast<fftw_complex*>(buf_out_));
    for (int i = 0; i < m; ++i) phys[i] = buf_out_[i].real();
}

Fft2d& Fft2d::for_size(int n) {
    thread_local std::map<int, std::unique_ptr<Fft2d>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, std::make_unique<Fft2d>(n)).first;
    return *it->second;
}

}  // namespace absns
