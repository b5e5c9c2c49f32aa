#pragma once

// Minimal owning wrapper around an in-place complex FFTW transform.

#include <complex>
#include <cstddef>
#include <mutex>
#include <new>

#include <fftw3.h>

namespace dodson::detail {

class FftBuffer {
public:
    explicit FftBuffer(std::size_t n)
        : n_(n), data_(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n))) {
        if (!data_) throw std::bad_alloc();
        for (std::size_t i = 0; i < n_; ++i) (*this)[i] = 0.0;
    }
    ~FftBuffer() { fftw_free(data_); }
    FftBuffer(const FftBuffer&) = delete;
    FftBuffer& operator=(const FftBuffer&) = delete;

    std::size_t size() const noexcept { return n_; }
    std::complex<double>& operator[](std::size_t i) noexcept {
        return reinterpret_cast<std::complex<double>*>(data_)[i];
    }

    /// Unnormalized transform, sign FFTW_FORWARD (e^-) or FFTW_BACKWARD (e^+).
    void execute(int sign) {
        fftw_plan plan;
        {
            std::lock_guard lock(planner_mutex());
            plan = fftw_plan_dft_1d(static_cast<int>(n_), data_, data_, sign, FFTW_ESTIMATE);
        }
        fftw_execute(plan);
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan);
    }

private:
    // Planning and plan destruction are not reentrant in FFTW.
    static std::mutex& planner_mutex() {
        static std::mutex m;
        return m;
    }

    std::size_t n_;
    fftw_complex* data_;
};

}  // namespace dodson::detail
