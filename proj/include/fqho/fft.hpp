#pragma once
// Radix-2 complex FFT and the centered continuum-transform wrapper that maps
// momentum-grid samples to position-grid samples of (1/2pi) int e^{ikx} phi dk.

#include <complex>
#include <vector>

namespace fqho {

// In-place DFT a_m <- sum_j a_j exp(sign * 2 pi i j m / N); N a power of two.
void fft_pow2(std::vector<std::complex<double>>& a, int sign);

// Input: phi sampled at k_j = (j - N/2) dk, j = 0..N-1, N a power of two
// (>= 4). Output: psi at x_m = (m - N/2) dx, dx = 2 pi / (N dk), using
// psi_m = (dk / 2 pi) (-1)^m sum_j [(-1)^j phi_j] exp(+2 pi i j m / N),
// the rectangle-rule approximation of (1/2pi) int e^{ikx} phi(k) dk.
std::vector<std::complex<double>> centered_inverse_dft(
    std::vector<std::complex<double>> phi, double dk);

}  // namespace fqho
