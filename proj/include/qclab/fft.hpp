#ifndef QCLAB_FFT_HPP
#define QCLAB_FFT_HPP

#include <complex>
#include <vector>

namespace qclab::detail {

// In-place radix-2 FFT; size must be a power of two. The inverse transform
// includes the 1/N factor.
void fft(std::vector<std::complex<double>>& a, bool inverse);

// Zero-mean periodic harmonic conjugate of uniformly sampled real data
// (power-of-two length).
std::vector<double> conjugate_samples(const std::vector<double>& u);

size_t next_pow2(size_t n);

}  // namespace qclab::detail

#endif
