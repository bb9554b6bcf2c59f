#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace halfline::detail {

// Thin FFTW layer.  Plans are cached per thread (the FFTW planner is not
// thread-safe; creation is serialized behind a global mutex, execution is
// lock-free).  All routines are pure maps from input to output vectors.

// Unnormalized DST-I of length n (FFTW RODFT00, logical length 2(n+1)):
//   out[k] = 2 * sum_{j=1..n} in[j] * sin(pi*j*k/(n+1)),  k = 1..n
// (both arrays 0-based: in[j-1], out[k-1]).
void dst1(const double* in, double* out, std::size_t n);

// Unnormalized DCT-I of length n+2 on the extended index range 0..n+1
// (FFTW REDFT00, logical length 2(n+1)):
//   out[k] = in[0] + (-1)^k in[n+1] + 2 * sum_{j=1..n} in[j] cos(pi*j*k/(n+1))
// for k = 0..n+1.  in and out have n+2 entries.
void dct1_ext(const double* in, double* out, std::size_t n);

// In-place complex DFT of length m, FFTW sign conventions:
//   forward:  out[k] = sum_j in[j] e^{-2 pi i j k / m}
//   backward: out[j] = sum_k in[k] e^{+2 pi i j k / m}   (unnormalized)
void cfft(std::complex<double>* data, std::size_t m, bool forward);

}  // namespace halfline::detail
