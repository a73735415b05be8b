#include "qse/numerics.hpp"

#include <cmath>
#include <limits>
#include <mutex>
#include <vector>

namespace qse {

namespace {

// Accumulated-log table; grown on demand, never shrunk.
class LogFactorialTable {
 public:
  double value(int n) {
    if (n < 0) throw std::domain_error("log_factorial: negative argument");
    std::lock_guard<std::mutex> lock(mu_);
    if (static_cast<std::size_t>(n) >= vals_.size()) grow(n);
    return vals_[static_cast<std::size_t>(n)];
  }

 private:
  void grow(int n) {
    std::size_t old = vals_.size();
    vals_.resize(static_cast<std::size_t>(n) + 1);
    if (old == 0) {
      vals_[0] = 0.0;
      old = 1;
    }
    for (std::size_t i = old; i < vals_.size(); ++i)
      vals_[i] = vals_[i - 1] + std::log(static_cast<double>(i));
  }
  std::mutex mu_;
  std::vector<double> vals_;
};

LogFactorialTable& table() {
  static LogFactorialTable t;
  return t;
}

}  // namespace

double log_factorial(int n) { return table().value(n); }

double factorial_d(int n) {
  if (n < 0) throw std::domain_error("factorial_d: negative argument");
  if (n <= 22) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
  }
  return std::exp(log_factorial(n));
}

double log_binomial(int n, int k) {
  if (k < 0 || k > n) throw std::domain_error("log_binomial: k out of range");
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

double binomial_d(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (n <= 60) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  }
  return std::exp(log_binomial(n, k));
}

double gen_binomial(double x, int j) {
  if (j < 0) throw std::domain_error("gen_binomial: negative order");
  double r = 1.0;
  for (int i = 1; i <= j; ++i) r *= (x - j + i) / i;
  return r;
}

namespace {

template <class T>
T hermite_impl(int k, T x) {
  if (k < 0) throw std::domain_error("hermite: negative degree");
  if (k == 0) return T(1);
  T hm = T(1);
  T h = 2.0 * x;
  for (int i = 1; i < k; ++i) {
    T next = 2.0 * x * h - 2.0 * static_cast<double>(i) * hm;
    hm = h;
    h = next;
  }
  return h;
}

template <class T>
T laguerre_impl(int n, double a, T x) {
  if (n < 0) throw std::domain_error("laguerre: negative degree");
  if (n == 0) return T(1);
  T lm = T(1);
  T l = T(1.0 + a) - x;
  for (int i = 1; i < n; ++i) {
    T next = ((T(2.0 * i + 1.0 + a) - x) * l - (i + a) * lm) / (i + 1.0);
    lm = l;
    l = next;
  }
  return l;
}

}  // namespace

double hermite(int k, double x) { return hermite_impl(k, x); }
cdouble hermite(int k, cdouble x) { return hermite_impl(k, x); }

void hermite_normalized_sequence(int kmax, double x, double* out) {
  // h_{k+1} = x sqrt(2/(k+1)) h_k - sqrt(k/(k+1)) h_{k-1}
  if (kmax < 0) return;
  out[0] = 1.0;
  if (kmax == 0) return;
  out[1] = std::sqrt(2.0) * x;
  for (int k = 1; k < kmax; ++k)
    out[k + 1] = x * std::sqrt(2.0 / (k + 1)) * out[k] -
                 std::sqrt(k / (k + 1.0)) * out[k - 1];
}

double laguerre(int n, double a, double x) { return laguerre_impl(n, a, x); }
cdouble laguerre(int n, double a, cdouble x) { return laguerre_impl(n, a, x); }

double SignedLog::value() const { return sign * std::exp(log_abs); }

SignedLog laguerre_scaled(int n, double a, double x) {
  constexpr double rescale_at = 1e250;
  constexpr double rescale_by = 1e-250;
  if (n < 0) throw std::domain_error("laguerre_scaled: negative degree");
  auto pack = [](double v, double shift) {
    if (v == 0.0)
      return SignedLog{-std::numeric_limits<double>::infinity(), 0.0};
    return SignedLog{std::log(std::abs(v)) + shift, v > 0 ? 1.0 : -1.0};
  };
  if (n == 0) return pack(1.0, 0.0);
  double lm = 1.0, l = 1.0 + a - x, shift = 0.0;
  const double log_rescale = std::log(rescale_at);
  for (int i = 1; i < n; ++i) {
    double next = ((2.0 * i + 1.0 + a - x) * l - (i + a) * lm) / (i + 1.0);
    lm = l;
    l = next;
    if (std::abs(l) > rescale_at || std::abs(lm) > rescale_at) {
      l *= rescale_by;
      lm *= rescale_by;
      shift += log_rescale;
    }
  }
  return pack(l, shift);
}

namespace {

double jacobi_finite_sum(int l, double a, double b, double z) {
  const double zm = 0.5 * (z - 1.0);
  const double zp = 0.5 * (z + 1.0);
  double sum = 0.0;
  for (int s = 0; s <= l; ++s)
    sum += gen_binomial(l + a, l - s) * gen_binomial(l + b, s) *
           std::pow(zm, s) * std::pow(zp, l - s);
  return sum;
}

// The classical three-term recurrence divides by (n + a + b + 1) and
// (2n + a + b); those hit zero when a + b is a negative integer, which is
// exactly the regime the number-operator-valued parameter produces.
bool jacobi_recurrence_singular(int l, double a, double b) {
  for (int n = 1; n < l; ++n) {
    if (std::abs(n + a + b + 1.0) < 1e-6) return true;
    if (std::abs(2.0 * n + a + b) < 1e-6) return true;
  }
  return false;
}

double jacobi_recurrence(int l, double a, double b, double z) {
  double pm = 1.0;
  double p = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * z;
  for (int n = 1; n < l; ++n) {
    const double a1 = 2.0 * (n + 1) * (n + a + b + 1) * (2 * n + a + b);
    const double a2 = (2 * n + a + b + 1) * (a * a - b * b);
    const double a3 =
        (2 * n + a + b) * (2 * n + a + b + 1) * (2 * n + a + b + 2);
    const double a4 = 2.0 * (n + a) * (n + b) * (2 * n + a + b + 2);
    const double next = ((a2 + a3 * z) * p - a4 * pm) / a1;
    pm = p;
    p = next;
  }
  return p;
}

}  // namespace

double jacobi_poly(int l, double a, double b, double z) {
  if (l < 0) throw std::domain_error("jacobi_poly: negative degree");
  if (l == 0) return 1.0;
  // The explicit sum in (a, b) is exact-in-structure for every parameter
  // value but cancels badly at high degree; the recurrence is stable there
  // whenever its denominators stay away from zero.
  if (l <= 14 || jacobi_recurrence_singular(l, a, b))
    return jacobi_finite_sum(l, a, b, z);
  return jacobi_recurrence(l, a, b, z);
}

double evaluate_polynomial(const PolynomialKind& kind, int degree, double x) {
  return std::visit(
      [&](const auto& k) -> double {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, HermitePhysicists>)
          return hermite(degree, x);
        else if constexpr (std::is_same_v<K, AssociatedLaguerre>)
          return laguerre(degree, k.alpha, x);
        else
          return jacobi_poly(degree, k.alpha, k.beta, x);
      },
      kind);
}

}  // namespace qse
