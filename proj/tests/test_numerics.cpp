#include "doctest.h"
#include "qse/numerics.hpp"

#include <cmath>
#include <limits>
#include <vector>

using namespace qse;

TEST_CASE("log_factorial against the direct product") {
  CHECK(log_factorial(0) == 0.0);
  CHECK(log_factorial(1) == 0.0);
  CHECK(log_factorial(10) == doctest::Approx(std::log(3628800.0)).epsilon(1e-14));

  long double prod = 1.0L;
  for (int n = 1; n <= 170; ++n) {
    prod *= n;
    const double ref = static_cast<double>(std::log(prod));
    CHECK(std::abs(log_factorial(n) - ref) <= 1e-12 * std::max(ref, 1.0));
    // exp(lf) recovers n! itself to 1e-12 relative
    CHECK(std::abs(std::exp(log_factorial(n)) - static_cast<double>(prod)) <=
          1e-12 * static_cast<double>(prod));
  }
  // monotone above 1! = 0!, increments equal ln(n) up to the cancellation
  // floor of storing the accumulated sum in a double
  for (int n = 2; n <= 300; ++n) {
    CHECK(log_factorial(n) > log_factorial(n - 1));
    const double floor_err =
        4.0 * std::numeric_limits<double>::epsilon() * log_factorial(n);
    CHECK(std::abs((log_factorial(n) - log_factorial(n - 1)) -
                   std::log(double(n))) <
          std::max(1e-14 * std::log(double(n)), floor_err));
  }
}

TEST_CASE("hermite low orders and the shift identity") {
  CHECK(hermite(0, 0.37) == 1.0);
  CHECK(hermite(2, 1.0) == doctest::Approx(2.0).epsilon(1e-14));
  for (double x = -5.0; x <= 5.0; x += 0.5) {
    CHECK(hermite(1, x) == doctest::Approx(2 * x).epsilon(1e-12));
    CHECK(hermite(3, x) == doctest::Approx(8 * x * x * x - 12 * x).epsilon(1e-12));
    CHECK(hermite(4, x) ==
          doctest::Approx(16 * std::pow(x, 4) - 48 * x * x + 12).epsilon(1e-12));
  }
  // sum_k z^k/k! H_{k+n}(x) = exp(2xz - z^2) H_n(x - z)
  const double x = 0.7, z = 0.3;
  const int n = 1;
  double lhs = 0.0, zk = 1.0;
  for (int k = 0; k <= 60; ++k) {
    lhs += zk * hermite(k + n, x);
    zk *= z / (k + 1);
  }
  const double rhs = std::exp(2 * x * z - z * z) * hermite(n, x - z);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
}

TEST_CASE("laguerre low orders, summation identity, derivative rule") {
  CHECK(laguerre(0, 1.7, 5.0) == 1.0);
  CHECK(laguerre(1, 0.0, 2.0) == doctest::Approx(-1.0).epsilon(1e-14));
  for (double x = -5.0; x <= 5.0; x += 0.5) {
    const double a = 0.5;
    CHECK(laguerre(2, a, x) ==
          doctest::Approx(0.5 * (x * x - 2 * (a + 2) * x + (a + 1) * (a + 2)))
              .epsilon(1e-12));
  }
  // sum_{l<=n} x^l/Gamma(l+v) C(n,l) = n!/Gamma(n+v) L_n^{v-1}(-x)
  {
    const int n = 3;
    const double v = 2.0, x = 0.5;
    double lhs = 0.0;
    for (int l = 0; l <= n; ++l)
      lhs += std::pow(x, l) / std::tgamma(l + v) * binomial_d(n, l);
    const double rhs =
        factorial_d(n) / std::tgamma(n + v) * laguerre(n, v - 1.0, -x);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
  // d/dx L_n^a = -L_{n-1}^{a+1}, central differences
  for (int n : {1, 3, 6}) {
    for (double a : {0.0, 1.5}) {
      for (double x : {0.3, 1.2, 4.0}) {
        const double h = 1e-5;
        const double num =
            (laguerre(n, a, x + h) - laguerre(n, a, x - h)) / (2 * h);
        CHECK(num == doctest::Approx(-laguerre(n - 1, a + 1.0, x)).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("laguerre negative integer upper index matches the reflection rule") {
  // L_n^{-k}(x) = (-x)^k (n-k)!/n! L_{n-k}^{k}(x) for integer 0 < k <= n
  for (int n : {2, 5, 9}) {
    for (int k = 1; k <= n; ++k) {
      for (double x : {0.7, 2.9}) {
        const double lhs = laguerre(n, -static_cast<double>(k), x);
        const double rhs = std::pow(-x, k) * factorial_d(n - k) /
                           factorial_d(n) * laguerre(n - k, k, x);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
      }
    }
  }
}

TEST_CASE("laguerre_scaled agrees with the plain recurrence in range") {
  for (int n : {0, 1, 7, 40}) {
    for (double a : {0.0, 3.0, 17.0}) {
      for (double x : {0.1, 5.0, 60.0}) {
        const double plain = laguerre(n, a, x);
        const SignedLog sl = laguerre_scaled(n, a, x);
        CHECK(sl.value() == doctest::Approx(plain).epsilon(1e-11));
      }
    }
  }
  // large-degree case that overflows a naive magnitude estimate
  const SignedLog big = laguerre_scaled(180, 120.0, 140.0);
  CHECK(std::isfinite(big.log_abs));
}

TEST_CASE("jacobi boundary values and low orders") {
  // P_l(1) = C(l+a, l); P_l(-1) = (-1)^l C(l+b, l), exact for integer a >= 0
  for (int l = 0; l <= 10; ++l) {
    for (int a : {0, 1, 2, 3}) {
      for (int b = -10; b <= 10; ++b) {
        CHECK(jacobi_poly(l, a, b, 1.0) ==
              doctest::Approx(gen_binomial(l + a, l)).epsilon(1e-12));
        const double expect = ((l % 2 == 0) ? 1.0 : -1.0) * gen_binomial(l + b, l);
        CHECK(jacobi_poly(l, a, b, -1.0) ==
              doctest::Approx(expect).epsilon(1e-10).scale(
                  std::max(1.0, std::abs(expect))));
      }
    }
  }
  CHECK(jacobi_poly(0, 0.3, -2.7, 0.42) == 1.0);
  for (double z = -5.0; z <= 5.0; z += 0.5) {
    const double a = 0.7, b = -1.3;
    const double p1 = 0.5 * (a - b) + 0.5 * (a + b + 2) * z;
    CHECK(jacobi_poly(1, a, b, z) == doctest::Approx(p1).epsilon(1e-12));
    // classical recurrence step as the independent degree-2 route
    const double a1 = 2.0 * 2 * (1 + a + b + 1) * (2 + a + b);
    const double a2 = (2 + a + b + 1) * (a * a - b * b);
    const double a3 = (2 + a + b) * (2 + a + b + 1) * (2 + a + b + 2);
    const double a4 = 2.0 * (1 + a) * (1 + b) * (2 + a + b + 2);
    const double p2 = ((a2 + a3 * z) * p1 - a4) / a1;
    CHECK(jacobi_poly(2, a, b, z) ==
          doctest::Approx(p2).epsilon(1e-12).scale(std::max(1.0, std::abs(p2))));
  }
}

TEST_CASE("jacobi high degree against the classical recurrence") {
  // for generic a, b > -1 the classical recurrence is stable and serves as
  // an independent oracle up to degree 100
  const double a = 0.7, b = 0.3;
  for (double z : {-0.9, -0.2, 0.5, 0.95}) {
    std::vector<double> p(101);
    p[0] = 1.0;
    p[1] = 0.5 * (a - b) + 0.5 * (a + b + 2) * z;
    for (int n = 1; n < 100; ++n) {
      const double a1 = 2.0 * (n + 1) * (n + a + b + 1) * (2 * n + a + b);
      const double a2 = (2 * n + a + b + 1) * (a * a - b * b);
      const double a3 = (2 * n + a + b) * (2 * n + a + b + 1) * (2 * n + a + b + 2);
      const double a4 = 2.0 * (n + a) * (n + b) * (2 * n + a + b + 2);
      p[n + 1] = ((a2 + a3 * z) * p[n] - a4 * p[n - 1]) / a1;
    }
    CHECK(std::abs(jacobi_poly(30, a, b, z) - p[30]) <=
          1e-12 * std::max(1.0, std::abs(p[30])));
    CHECK(std::abs(jacobi_poly(100, a, b, z) - p[100]) <=
          1e-9 * std::max(1.0, std::abs(p[100])));
  }
}

TEST_CASE("polynomial kind dispatch") {
  CHECK(evaluate_polynomial(PolynomialKind{HermitePhysicists{}}, 2, 1.0) ==
        doctest::Approx(2.0));
  CHECK(evaluate_polynomial(PolynomialKind{AssociatedLaguerre{0.0}}, 1, 2.0) ==
        doctest::Approx(-1.0));
  CHECK(evaluate_polynomial(PolynomialKind{Jacobi{1.0, -2.0}}, 0, 0.3) == 1.0);
}
