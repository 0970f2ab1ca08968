#include "skdv/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace skdv {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

struct Block {
  std::uint32_t x[4];
};

inline void philox_round(Block& b, std::uint32_t k0, std::uint32_t k1) {
  const std::uint64_t p0 = std::uint64_t(kPhiloxM0) * b.x[0];
  const std::uint64_t p1 = std::uint64_t(kPhiloxM1) * b.x[2];
  const std::uint32_t hi0 = std::uint32_t(p0 >> 32), lo0 = std::uint32_t(p0);
  const std::uint32_t hi1 = std::uint32_t(p1 >> 32), lo1 = std::uint32_t(p1);
  b.x[0] = hi1 ^ b.x[1] ^ k0;
  b.x[1] = lo1;
  b.x[2] = hi0 ^ b.x[3] ^ k1;
  b.x[3] = lo0;
}

inline Block philox4x32_10(Block ctr, std::uint32_t k0, std::uint32_t k1) {
  for (int r = 0; r < 10; ++r) {
    philox_round(ctr, k0, k1);
    k0 += kPhiloxW0;
    k1 += kPhiloxW1;
  }
  return ctr;
}

inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// (x >> 11) keeps 53 bits; the half-ulp shift keeps the value strictly
// inside (0,1) so the normal inverse never sees 0 or 1.
inline double u01(std::uint64_t x) {
  return (double((x >> 11)) + 0.5) * (1.0 / 9007199254740992.0);
}

}  // namespace

std::pair<double, double> RngStream::uniform_pair(std::uint64_t realization,
                                                  std::uint32_t mode,
                                                  std::uint64_t step,
                                                  std::uint32_t kind) const {
  const std::uint64_t key = splitmix64(seed_ ^ splitmix64(realization));
  Block ctr{{std::uint32_t(step), std::uint32_t(step >> 32), mode, kind}};
  const Block out =
      philox4x32_10(ctr, std::uint32_t(key), std::uint32_t(key >> 32));
  const std::uint64_t a = (std::uint64_t(out.x[0]) << 32) | out.x[1];
  const std::uint64_t b = (std::uint64_t(out.x[2]) << 32) | out.x[3];
  return {u01(a), u01(b)};
}

std::pair<double, double> RngStream::normal_pair(std::uint64_t realization,
                                                 std::uint32_t mode,
                                                 std::uint64_t step,
                                                 std::uint32_t kind) const {
  auto [u, v] = uniform_pair(realization, mode, step, kind);
  return {inverse_normal_cdf(u), inverse_normal_cdf(v)};
}

double inverse_normal_cdf(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("inverse_normal_cdf: p outside (0,1)");

  static const double a[8] = {
      3.3871328727963666080e0,  1.3314166789178437745e2,
      1.9715909503065514427e3,  1.3731693765509461125e4,
      4.5921953931549871457e4,  6.7265770927008700853e4,
      3.3430575583588128105e4,  2.5090809287301226727e3};
  static const double b[8] = {
      1.0,                      4.2313330701600911252e1,
      6.8718700749205790830e2,  5.3941960214247511077e3,
      2.1213794301586595867e4,  3.9307895800092710610e4,
      2.8729085735721942674e4,  5.2264952788528545610e3};
  static const double c[8] = {
      1.42343711074968357734,   4.63033784615654529590,
      5.76949722146069140550,   3.64784832476320460504,
      1.27045825245236838258,   2.41780725177450611770e-1,
      2.27238449892691845833e-2, 7.74545014278341407640e-4};
  static const double d[8] = {
      1.0,                      2.05319162663775882187,
      1.67638483018380384940,   6.89767334985100004550e-1,
      1.48103976427480074590e-1, 1.51986665636164571966e-2,
      5.47593808499534494600e-4, 1.05075007164441684324e-9};
  static const double e[8] = {
      6.65790464350110377720,   5.46378491116411436990,
      1.78482653991729133580,   2.96560571828504891230e-1,
      2.65321895265761230930e-2, 1.24266094738807843860e-3,
      2.71155556874348757815e-5, 2.01033439929228813265e-7};
  static const double f[8] = {
      1.0,                      5.99832206555887937690e-1,
      1.36929880922735805310e-1, 1.48753612908506148525e-2,
      7.86869131145613259100e-4, 1.84631831751005468180e-5,
      1.42151175831644588870e-7, 2.04426310338993978564e-15};

  auto ratio = [](const double* num, const double* den, double r) {
    double n = num[7], m = den[7];
    for (int i = 6; i >= 0; --i) {
      n = n * r + num[i];
      m = m * r + den[i];
    }
    return n / m;
  };

  const double q = p - 0.5;
  if (std::fabs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q * ratio(a, b, r);
  }
  double r = (q < 0.0) ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double v;
  if (r <= 5.0) {
    v = ratio(c, d, r - 1.6);
  } else {
    v = ratio(e, f, r - 5.0);
  }
  return (q < 0.0) ? -v : v;
}

}  // namespace skdv
