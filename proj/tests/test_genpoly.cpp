#include "fqho/genpoly.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"

using namespace fqho;

namespace {

// Classical physicists' Hermite polynomials via H_{n+1} = 2k H_n - H_n',
// kept as a plain coefficient table (index = power of k).
std::vector<double> classical_hermite(int n) {
  std::vector<double> h = {1.0};
  for (int m = 0; m < n; ++m) {
    std::vector<double> next(h.size() + 1, 0.0);
    for (std::size_t p = 0; p < h.size(); ++p) {
      next[p + 1] += 2.0 * h[p];
      if (p >= 1) next[p - 1] -= static_cast<double>(p) * h[p];
    }
    h = std::move(next);
  }
  return h;
}

bool same_exponent(const PolyTerm& a, const PolyTerm& b) {
  return a.expo == b.expo;
}

}  // namespace

TEST_CASE("recurrence produces the documented term structure") {
  const double alpha = 1.7;
  for (int n = 1; n <= 8; ++n) {
    GeneralizedPolynomial h = hermite_tilde(n, alpha);
    REQUIRE(h.terms().size() == static_cast<std::size_t>(n));
    CHECK(h.parity() == n % 2);
    for (int j = 0; j < n; ++j) {
      const PolyTerm& t = h.terms()[static_cast<std::size_t>(j)];
      CHECK(t.expo.half_alpha == n - j);
      CHECK(t.expo.shift == -j);
      double expected_expo = (n - j) * alpha / 2.0 - j;
      CHECK(t.expo.value(alpha) == doctest::Approx(expected_expo).epsilon(1e-15));
    }
    CHECK(h.terms().front().coeff == doctest::Approx(std::pow(2.0, n)));
    for (std::size_t j = 0; j + 1 < h.terms().size(); ++j)
      CHECK(h.terms()[j].expo.value(alpha) > h.terms()[j + 1].expo.value(alpha));
  }
}

TEST_CASE("closed forms for the first polynomials") {
  GeneralizedPolynomial h0 = hermite_tilde(0, 1.5);
  REQUIRE(h0.terms().size() == 1);
  CHECK(h0.terms()[0].coeff == 1.0);
  CHECK(h0.terms()[0].expo.value(1.5) == 0.0);

  double alpha = 1.5;
  GeneralizedPolynomial h2 = hermite_tilde(2, alpha);
  REQUIRE(h2.terms().size() == 2);
  CHECK(h2.terms()[0].coeff == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(h2.terms()[0].expo.value(alpha) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(h2.terms()[1].coeff == doctest::Approx(-alpha).epsilon(1e-15));
  CHECK(h2.terms()[1].expo.value(alpha) == doctest::Approx(-0.25).epsilon(1e-15));

  alpha = 1.7;
  GeneralizedPolynomial h3 = hermite_tilde(3, alpha);
  REQUIRE(h3.terms().size() == 3);
  CHECK(h3.terms()[0].coeff == doctest::Approx(8.0));
  CHECK(h3.terms()[1].coeff == doctest::Approx(-6.0 * alpha));
  CHECK(h3.terms()[2].coeff ==
        doctest::Approx(alpha * (alpha / 2.0 - 1.0)).epsilon(1e-14));

  // Fourth order: middle coefficient is 7a^2 - 8a = 2a(a/2-1) + 6a(a-1).
  GeneralizedPolynomial h4 = hermite_tilde(4, alpha);
  REQUIRE(h4.terms().size() == 4);
  CHECK(h4.terms()[0].coeff == doctest::Approx(16.0));
  CHECK(h4.terms()[1].coeff == doctest::Approx(-24.0 * alpha));
  CHECK(h4.terms()[2].coeff ==
        doctest::Approx(7.0 * alpha * alpha - 8.0 * alpha).epsilon(1e-14));
  CHECK(h4.terms()[3].coeff ==
        doctest::Approx(-alpha * (alpha / 2.0 - 1.0) * (alpha / 2.0 - 2.0))
            .epsilon(1e-14));
}

TEST_CASE("alpha = 2 collapses to the classical Hermite polynomials") {
  for (int n = 0; n <= 6; ++n) {
    GeneralizedPolynomial h = hermite_tilde(n, 2.0);
    std::vector<double> classical = classical_hermite(n);
    // At alpha = 2 the exponents are the integers n, n-2, ...; vanished
    // coefficients are pruned, so walk the classical table by parity.
    for (const PolyTerm& t : h.terms()) {
      double e = t.expo.value(2.0);
      REQUIRE(e == doctest::Approx(std::round(e)).epsilon(1e-14));
      int p = static_cast<int>(std::lround(e));
      REQUIRE(p >= 0);
      REQUIRE(p < static_cast<int>(classical.size()));
      CHECK(t.coeff == doctest::Approx(classical[static_cast<std::size_t>(p)])
                           .epsilon(1e-9));
      classical[static_cast<std::size_t>(p)] = 0.0;  // consumed
    }
    for (double leftover : classical) CHECK(leftover == doctest::Approx(0.0));
  }
  // a(a/2 - 1) dies at alpha = 2, so the cubic keeps only two terms.
  CHECK(hermite_tilde(3, 2.0).terms().size() == 2);
}

TEST_CASE("recurrence and weight-differentiation derivations agree") {
  for (double alpha : {1.1, 1.25, 1.5, 1.75, 2.0}) {
    for (int n = 0; n <= 8; ++n) {
      GeneralizedPolynomial a = hermite_tilde(n, alpha);
      GeneralizedPolynomial b = rodrigues_oracle(n, alpha);
      REQUIRE(a.terms().size() == b.terms().size());
      CHECK(a.parity() == b.parity());
      for (std::size_t j = 0; j < a.terms().size(); ++j) {
        CHECK(a.terms()[j].expo.value(alpha) ==
              doctest::Approx(b.terms()[j].expo.value(alpha)).epsilon(1e-14));
        double scale = std::max(1.0, std::abs(a.terms()[j].coeff));
        CHECK(std::abs(a.terms()[j].coeff - b.terms()[j].coeff) <=
              1e-10 * scale);
      }
    }
  }
}

TEST_CASE("rodrigues oracle matches the documented quadratic") {
  GeneralizedPolynomial r = rodrigues_oracle(2, 1.5);
  REQUIRE(r.terms().size() == 2);
  CHECK(r.terms()[0].coeff == doctest::Approx(4.0));
  CHECK(r.terms()[0].expo.value(1.5) == doctest::Approx(1.5));
  CHECK(r.terms()[1].coeff == doctest::Approx(-1.5));
  CHECK(r.terms()[1].expo.value(1.5) == doctest::Approx(-0.25));
}

TEST_CASE("differentiation steps every exponent down by one") {
  double alpha = 1.5;
  GeneralizedPolynomial d = hermite_tilde(2, alpha).differentiate();
  REQUIRE(d.terms().size() == 2);
  CHECK(d.parity() == 1);
  CHECK(d.terms()[0].coeff == doctest::Approx(4.0 * alpha));
  CHECK(d.terms()[0].expo.value(alpha) == doctest::Approx(alpha - 1.0));
  CHECK(d.terms()[1].coeff ==
        doctest::Approx(-alpha * (alpha / 2.0 - 1.0)).epsilon(1e-14));
  CHECK(d.terms()[1].expo.value(alpha) == doctest::Approx(alpha / 2.0 - 2.0));
  // Differentiating a constant gives the empty polynomial.
  CHECK(hermite_tilde(0, alpha).differentiate().empty());
}

TEST_CASE("momentum state metadata") {
  MomentumState s = momentum_state(3, 1.6);
  CHECK(s.n == 3);
  CHECK(s.alpha == 1.6);
  CHECK(s.decay_exponent == doctest::Approx(1.8));
  CHECK(s.decay_rate == doctest::Approx(2.0 / 3.6));
  CHECK(s.imaginary_flag);
  CHECK(!s.norm.has_value());
  CHECK(!momentum_state(2, 1.6).imaginary_flag);
}

TEST_CASE("pointwise evaluation and the constant phase") {
  using cd = std::complex<double>;
  CHECK(state_phase(0) == cd{1.0, 0.0});
  CHECK(state_phase(1) == cd{0.0, -1.0});
  CHECK(state_phase(2) == cd{-1.0, 0.0});
  CHECK(state_phase(3) == cd{0.0, 1.0});

  // Ground state at alpha = 2 is the Gaussian e^{-k^2/2}.
  MomentumState s0 = momentum_state(0, 2.0);
  for (double k : {-2.0, -0.3, 0.0, 1.0, 3.5}) {
    auto v = evaluate(s0, k);
    REQUIRE(v.has_value());
    CHECK(v->real() == doctest::Approx(std::exp(-k * k / 2.0)).epsilon(1e-14));
    CHECK(v->imag() == 0.0);
  }

  MomentumState s1 = momentum_state(1, 2.0);
  auto v1 = evaluate(s1, 1.0);
  REQUIRE(v1.has_value());
  CHECK(v1->real() == doctest::Approx(0.0));
  CHECK(v1->imag() == doctest::Approx(-2.0 * std::exp(-0.5)).epsilon(1e-14));
  // Odd parity: sign flips across the origin, and the origin value is 0.
  auto v1m = evaluate(s1, -1.0);
  CHECK(v1m->imag() == doctest::Approx(2.0 * std::exp(-0.5)).epsilon(1e-14));
  CHECK(evaluate(s1, 0.0)->imag() == 0.0);
  CHECK(evaluate(s1, 0.0)->real() == 0.0);

  // Negative bottom exponent: the origin is a singular point.
  CHECK(!evaluate(momentum_state(2, 1.5), 0.0).has_value());
  CHECK(evaluate(momentum_state(2, 1.5), 0.5).has_value());

  // At alpha = 2 the n = 2 state has bottom exponent 0: constant term -2.
  auto v2 = evaluate(momentum_state(2, 2.0), 0.0);
  REQUIRE(v2.has_value());
  CHECK(v2->real() == doctest::Approx(2.0));  // phase (-1) times coeff -2

  // Applied amplitude scales evaluation.
  MomentumState scaled = momentum_state(0, 2.0);
  scaled.norm = 0.25;
  CHECK(evaluate(scaled, 1.0)->real() ==
        doctest::Approx(0.25 * std::exp(-0.5)).epsilon(1e-14));
}

TEST_CASE("explicit n = 2 radial form against the closed expression") {
  double alpha = 1.4;
  MomentumState s = momentum_state(2, alpha);
  for (double t : {0.05, 0.3, 1.0, 2.2}) {
    double expected = (4.0 * std::pow(t, alpha) -
                       alpha * std::pow(t, alpha / 2.0 - 1.0)) *
                      std::exp(-2.0 * std::pow(t, alpha / 2.0 + 1.0) /
                               (alpha + 2.0));
    CHECK(s.radial_value(t) == doctest::Approx(expected).epsilon(1e-13));
  }
}

TEST_CASE("minimum exponents") {
  CHECK(min_exponent(momentum_state(0, 1.3)) == 0.0);
  CHECK(min_exponent(momentum_state(2, 1.2)) == doctest::Approx(-0.4));
  CHECK(min_exponent(hermite_tilde(1, 1.8)) == doctest::Approx(0.9));
}

TEST_CASE("domain checks") {
  CHECK_THROWS_AS(hermite_tilde(2, 1.0), std::domain_error);
  CHECK_THROWS_AS(hermite_tilde(2, 0.9), std::domain_error);
  CHECK_THROWS_AS(hermite_tilde(2, 2.1), std::domain_error);
  CHECK_THROWS_AS(hermite_tilde(-1, 1.5), std::domain_error);
  CHECK_THROWS_AS(momentum_state(1, 2.5), std::domain_error);
  CHECK_THROWS_AS(rodrigues_oracle(2, 0.5), std::domain_error);
  // The boundary entry point admits alpha = 1 for reconciliation work.
  CHECK_NOTHROW(detail::momentum_state_boundary(2, 1.0));
  CHECK_THROWS_AS(detail::momentum_state_boundary(2, 0.99), std::domain_error);
}

TEST_CASE("polynomial arithmetic keeps the exponent lattice exact") {
  double alpha = 2.0;
  GeneralizedPolynomial h2 = hermite_tilde(2, alpha);
  GeneralizedPolynomial sq = h2.times(h2);
  // (4k^2 - 2)^2 = 16k^4 - 16k^2 + 4: collisions on the lattice must merge.
  REQUIRE(sq.terms().size() == 3);
  CHECK(sq.terms()[0].coeff == doctest::Approx(16.0));
  CHECK(sq.terms()[1].coeff == doctest::Approx(-16.0));
  CHECK(sq.terms()[2].coeff == doctest::Approx(4.0));
  GeneralizedPolynomial zero = h2.subtract(h2);
  CHECK(zero.empty());
  CHECK(zero.evaluate_positive(1.7) == 0.0);
}
