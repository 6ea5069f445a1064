#include "qclab/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace qclab::detail {

size_t next_pow2(size_t n) {
    size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

void fft(std::vector<std::complex<double>>& a, bool inverse) {
    const size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("fft: size must be a power of two");
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        double ang = 2.0 * M_PI / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
        std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (size_t k = 0; k < len / 2; ++k) {
                std::complex<double> u = a[i + k];
                std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
    if (inverse)
        for (auto& x : a) x /= static_cast<double>(n);
}

std::vector<double> conjugate_samples(const std::vector<double>& u) {
    const size_t n = u.size();
    std::vector<std::complex<double>> a(n);
    for (size_t k = 0; k < n; ++k) a[k] = u[k];
    fft(a, false);
    // multiply mode m by -i sign(m); kill mean and Nyquist
    a[0] = 0.0;
    for (size_t m = 1; m < n / 2; ++m) {
        a[m] *= std::complex<double>(0.0, -1.0);
        a[n - m] *= std::complex<double>(0.0, 1.0);
    }
    if (n % 2 == 0) a[n / 2] = 0.0;
    fft(a, true);
    std::vector<double> v(n);
    for (size_t k = 0; k < n; ++k) v[k] = a[k].real();
    return v;
}

}  // namespace qclab::detail
