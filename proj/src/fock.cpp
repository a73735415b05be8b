#include "qse/fock.hpp"

#include <algorithm>
#include <cmath>

namespace qse {

double FockVector::norm_sq() const {
  double s = 0.0;
  for (const auto& a : amps) s += std::norm(a);
  return s;
}

double FockVector::norm() const { return std::sqrt(norm_sq()); }

double FockVector::tail_mass() const {
  return amps.empty() ? 0.0 : std::norm(amps.back());
}

FockVector FockVector::unit() const {
  const double n = norm();
  if (!(n > 0.0))
    throw UnreachableOutcomeError("normalize: zero-norm state");
  FockVector out = *this;
  for (auto& a : out.amps) a /= n;
  out.normalized = true;
  return out;
}

cdouble FockVector::overlap(const FockVector& other) const {
  const int d = std::min(dim(), other.dim());
  cdouble s = 0.0;
  for (int k = 0; k < d; ++k) s += std::conj(amps[k]) * other.amps[k];
  return s;
}

double FockVector::fidelity(const FockVector& other) const {
  const double na = norm(), nb = other.norm();
  if (!(na > 0.0) || !(nb > 0.0))
    throw UnreachableOutcomeError("fidelity: zero-norm state");
  return std::norm(overlap(other)) / (na * na * nb * nb);
}

double FockVector::mean_photon() const {
  double s = 0.0, n2 = 0.0;
  for (int k = 0; k < dim(); ++k) {
    s += k * std::norm(amps[k]);
    n2 += std::norm(amps[k]);
  }
  return s / n2;
}

double FockVector::mean_photon_sq() const {
  double s = 0.0, n2 = 0.0;
  for (int k = 0; k < dim(); ++k) {
    s += static_cast<double>(k) * k * std::norm(amps[k]);
    n2 += std::norm(amps[k]);
  }
  return s / n2;
}

std::vector<double> FockVector::number_dist() const {
  std::vector<double> p(amps.size());
  const double n2 = norm_sq();
  for (int k = 0; k < dim(); ++k) p[k] = std::norm(amps[k]) / n2;
  return p;
}

int FockVector::support_max(double eps) const {
  for (int k = dim() - 1; k >= 0; --k)
    if (std::abs(amps[k]) > eps) return k;
  return -1;
}

cdouble SqueezeParams::kappa() const {
  const double r = std::abs(xi);
  if (r == 0.0) return 0.0;
  const double phase = std::arg(xi);
  return -std::exp(cdouble(0.0, phase)) * std::tanh(r);
}

FockVector coherent_state(const CoherentParams& p, int dim,
                          double tail_threshold) {
  FockVector v(dim);
  if (p.beta == 0.0) {
    v[0] = 1.0;
    v.normalized = true;
    return v;
  }
  const cdouble logb = std::log(p.beta);
  const double b2 = std::norm(p.beta);
  for (int k = 0; k < dim; ++k)
    v[k] = std::exp(-0.5 * b2 + static_cast<double>(k) * logb -
                    0.5 * log_factorial(k));
  if (v.tail_mass() > tail_threshold)
    throw TruncationError("coherent_state: tail mass above threshold");
  return v.unit();
}

FockVector squeezed_vacuum(const SqueezeParams& p, int dim,
                           double tail_threshold) {
  if (dim < 2) throw std::domain_error("squeezed_vacuum: dim must be >= 2");
  FockVector v(dim);
  const cdouble kap = p.kappa();
  if (kap == 0.0) {
    v[0] = 1.0;
    v.normalized = true;
    return v;
  }
  const double pref = std::pow(1.0 - std::norm(kap), 0.25);
  const cdouble logk = std::log(kap);
  for (int q = 0; q < dim; q += 2) {
    const int h = q / 2;
    v[q] = pref * std::exp(0.5 * log_factorial(q) - h * std::log(2.0) -
                           log_factorial(h) + static_cast<double>(h) * logk);
  }
  const double tail =
      std::norm(v[dim - 1]) + (dim >= 2 ? std::norm(v[dim - 2]) : 0.0);
  if (tail > tail_threshold)
    throw TruncationError("squeezed_vacuum: tail mass above threshold");
  return v.unit();
}

FockVector fock_state(int k, int dim) {
  if (k < 0 || k >= dim) throw std::domain_error("fock_state: k out of range");
  FockVector v(dim);
  v[k] = 1.0;
  v.normalized = true;
  return v;
}

FockVector padded(const FockVector& v, int extra) {
  if (extra < 0) throw std::domain_error("padded: negative padding");
  FockVector out(v.dim() + extra);
  for (int k = 0; k < v.dim(); ++k) out[k] = v[k];
  out.normalized = v.normalized;
  return out;
}

FockVector apply_creation(const FockVector& v, int times, double lost_tol) {
  if (times < 0) throw std::domain_error("apply_creation: negative count");
  FockVector out = v;
  out.normalized = false;
  const double in_norm2 = v.norm_sq();
  for (int t = 0; t < times; ++t) {
    FockVector next(out.dim());
    const double lost = std::norm(out[out.dim() - 1]);
    if (lost > lost_tol * std::max(in_norm2, 1e-300))
      throw TruncationError("apply_creation: support crossed the truncation edge");
    for (int k = 0; k + 1 < out.dim(); ++k)
      next[k + 1] = std::sqrt(k + 1.0) * out[k];
    out = std::move(next);
  }
  return out;
}

FockVector apply_annihilation(const FockVector& v, int times) {
  if (times < 0) throw std::domain_error("apply_annihilation: negative count");
  FockVector out = v;
  out.normalized = false;
  for (int t = 0; t < times; ++t) {
    FockVector next(out.dim());
    for (int k = 1; k < out.dim(); ++k)
      next[k - 1] = std::sqrt(static_cast<double>(k)) * out[k];
    out = std::move(next);
  }
  return out;
}

FockVector attenuate_raw(const FockVector& v, cdouble T) {
  FockVector out = v;
  out.normalized = false;
  cdouble pw = 1.0;
  for (int k = 0; k < v.dim(); ++k) {
    out[k] = v[k] * pw;
    pw *= T;
  }
  return out;
}

FockVector attenuate(const FockVector& v, cdouble T) {
  if (std::abs(T) > 1.0 + 1e-12)
    throw std::domain_error("attenuate: |T| must be <= 1");
  return attenuate_raw(v, T).unit();
}

int adaptive_dim(double beta_abs, int n, int m) {
  const double b2 = beta_abs * beta_abs;
  const int floor_dim =
      static_cast<int>(std::ceil(b2 + 10.0 * std::sqrt(b2) + n + m + 10));
  return std::max(floor_dim, 16);
}

}  // namespace qse
