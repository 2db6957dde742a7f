#include "fqho/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fqho {

void fft_pow2(std::vector<std::complex<double>>& a, int sign) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("fft size must be a power of two");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("fft sign must be +1 or -1");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  // Twiddles from one polar table so rounding does not accumulate per stage.
  std::vector<std::complex<double>> tw(n / 2);
  for (std::size_t j = 0; j < n / 2; ++j) {
    double ang = sign * 2.0 * std::numbers::pi *
                 static_cast<double>(j) / static_cast<double>(n);
    tw[j] = std::polar(1.0, ang);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        std::complex<double> u = a[i + j];
        std::complex<double> v = a[i + j + len / 2] * tw[j * stride];
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
      }
    }
  }
}

std::vector<std::complex<double>> centered_inverse_dft(
    std::vector<std::complex<double>> phi, double dk) {
  const std::size_t n = phi.size();
  if (n < 4 || (n & (n - 1)) != 0)
    throw std::invalid_argument("grid size must be a power of two >= 4");
  if (!(dk > 0.0)) throw std::invalid_argument("dk must be positive");
  for (std::size_t j = 1; j < n; j += 2) phi[j] = -phi[j];
  fft_pow2(phi, +1);
  double scale = dk / (2.0 * std::numbers::pi);
  for (std::size_t m = 0; m < n; ++m) {
    double s = (m % 2 == 0) ? scale : -scale;
    phi[m] *= s;
  }
  return phi;
}

}  // namespace fqho
