#pragma once

#include <complex>
#include <vector>

namespace skdv {

/// In-place complex FFT, radix-2 (size must be a power of two).
/// sign = -1 forward (e^{-i...}), +1 inverse without the 1/n factor.
void fft_pow2(std::vector<std::complex<double>>& a, int sign);

/// DFT for arbitrary sizes: forward coefficients
///   out[m] = sum_k in[k] e^{-2*pi*i*m*k/K}.
/// Uses the radix-2 path when K is a power of two, a direct O(K^2)
/// evaluation otherwise (sizes here are small).
std::vector<std::complex<double>> dft_forward(
    const std::vector<std::complex<double>>& in);

inline bool is_pow2(std::size_t n) { return n && (n & (n - 1)) == 0; }

inline std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace skdv
