#include "skdv/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace skdv {

void fft_pow2(std::vector<std::complex<double>>& a, int sign) {
  const std::size_t n = a.size();
  if (!is_pow2(n)) throw std::invalid_argument("fft_pow2: size not a power of two");
  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * M_PI / double(len);
    const std::complex<double> wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

std::vector<std::complex<double>> dft_forward(
    const std::vector<std::complex<double>>& in) {
  const std::size_t K = in.size();
  if (K == 0) return {};
  if (is_pow2(K)) {
    auto out = in;
    fft_pow2(out, -1);
    return out;
  }
  if (K > 16384) throw std::invalid_argument("dft_forward: non-pow2 size too large");
  std::vector<std::complex<double>> out(K);
  const double w = -2.0 * M_PI / double(K);
  for (std::size_t m = 0; m < K; ++m) {
    std::complex<double> s(0.0, 0.0);
    for (std::size_t k = 0; k < K; ++k) {
      // reduce the phase index mod K first; keeps accuracy for large m*k
      const std::size_t idx = (m * k) % K;
      s += in[k] * std::complex<double>(std::cos(w * double(idx)),
                                        std::sin(w * double(idx)));
    }
    out[m] = s;
  }
  return out;
}

}  // namespace skdv
