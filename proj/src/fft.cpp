#include "halfline/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <mutex>

namespace halfline::detail {

namespace {

std::mutex planner_mutex;  // FFTW planner is not thread-safe

struct R2RSlot {
    fftw_plan plan = nullptr;
    double* buf = nullptr;
    std::size_t len = 0;

    void ensure(std::size_t n, fftw_r2r_kind kind) {
        if (plan && len == n) return;
        release();
        buf = fftw_alloc_real(n);
        len = n;
        std::lock_guard<std::mutex> lock(planner_mutex);
        plan = fftw_plan_r2r_1d(static_cast<int>(n), buf, buf, kind, FFTW_ESTIMATE);
    }
    void release() {
        if (plan) fftw_destroy_plan(plan);
        if (buf) fftw_free(buf);
        plan = nullptr;
        buf = nullptr;
        len = 0;
    }
    ~R2RSlot() { release(); }
};

struct C2CSlot {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
    fftw_complex* buf = nullptr;
    std::size_t len = 0;

    void ensure(std::size_t m) {
        if (buf && len == m) return;
        release();
        buf = fftw_alloc_complex(m);
        len = m;
        std::lock_guard<std::mutex> lock(planner_mutex);
        fwd = fftw_plan_dft_1d(static_cast<int>(m), buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd = fftw_plan_dft_1d(static_cast<int>(m), buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    void release() {
        if (fwd) fftw_destroy_plan(fwd);
        if (bwd) fftw_destroy_plan(bwd);
        if (buf) fftw_free(buf);
        fwd = bwd = nullptr;
        buf = nullptr;
        len = 0;
    }
    ~C2CSlot() { release(); }
};

thread_local std::map<std::size_t, R2RSlot> dst_slots;
thread_local std::map<std::size_t, R2RSlot> dct_slots;
thread_local std::map<std::size_t, C2CSlot> cfft_slots;

}  // namespace

void dst1(const double* in, double* out, std::size_t n) {
    R2RSlot& slot = dst_slots[n];
    slot.ensure(n, FFTW_RODFT00);
    std::memcpy(slot.buf, in, n * sizeof(double));
    fftw_execute(slot.plan);
    std::memcpy(out, slot.buf, n * sizeof(double));
}

void dct1_ext(const double* in, double* out, std::size_t n) {
    const std::size_t m = n + 2;
    R2RSlot& slot = dct_slots[m];
    slot.ensure(m, FFTW_REDFT00);
    std::memcpy(slot.buf, in, m * sizeof(double));
    fftw_execute(slot.plan);
    std::memcpy(out, slot.buf, m * sizeof(double));
}

void cfft(std::complex<double>* data, std::size_t m, bool forward) {
    C2CSlot& slot = cfft_slots[m];
    slot.ensure(m);
    // std::complex<double> is layout-compatible with fftw_complex
    std::memcpy(static_cast<void*>(slot.buf), static_cast<const void*>(data),
                m * sizeof(fftw_complex));
    fftw_execute(forward ? slot.fwd : slot.bwd);
    std::memcpy(static_cast<void*>(data), static_cast<const void*>(slot.buf),
                m * sizeof(fftw_complex));
}

}  // namespace halfline::detail
