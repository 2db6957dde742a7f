#pragma once
// Confluent hypergeometric 1F1(a; b; -z) on the negative real axis, tuned for
// the Gaussian-windowed power transforms: b in {1/2, 3/2}, a in (-2, 4).

namespace fqho {

// 1F1(a; b; -z) for z >= 0. Kummer-transformed series below the branch
// point, large-argument expansion above it; both branches agree to ~1e-12
// in the overlap.
double hyp1f1_neg(double a, double b, double z);

}  // namespace fqho
