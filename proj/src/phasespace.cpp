#include "qse/phasespace.hpp"

#include <cmath>
#include <numbers>

namespace qse {

namespace {

constexpr double kPi = std::numbers::pi;

// (-1)^k k! alpha^{l-k} L_k^{l-k}(|alpha|^2) for l >= k, mirrored otherwise.
// The Laguerre pair kernel of the closed-form Wigner function.
cdouble wigner_pair_kernel(int l, int k, cdouble alpha) {
  const double x = std::norm(alpha);
  if (l >= k) {
    const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
    return sgn * factorial_d(k) * std::pow(alpha, l - k) * laguerre(k, l - k, x);
  }
  const double sgn = (l % 2 == 0) ? 1.0 : -1.0;
  return sgn * factorial_d(l) * std::pow(std::conj(alpha), k - l) *
         laguerre(l, k - l, x);
}

}  // namespace

void QuadratureSpec::validate() const {
  if (grid.empty()) throw std::domain_error("QuadratureSpec: empty grid");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1]))
      throw std::domain_error("QuadratureSpec: grid must be strictly increasing");
  for (double x : grid)
    if (std::abs(x) > 40.0)
      throw std::domain_error("QuadratureSpec: |x| > 40 rejected");
}

std::vector<double> linspace(double lo, double hi, int count) {
  if (count < 2 || !(hi > lo)) throw std::domain_error("linspace: bad range");
  std::vector<double> out(static_cast<std::size_t>(count));
  const double h = (hi - lo) / (count - 1);
  for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = lo + i * h;
  out.back() = hi;
  return out;
}

double quadrature_point_numeric(const FockVector& v, double x, double phi) {
  const int d = v.dim();
  std::vector<double> h(static_cast<std::size_t>(d));
  hermite_normalized_sequence(d - 1, x, h.data());
  const double envelope = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
  cdouble s = 0.0;
  for (int k = 0; k < d; ++k)
    s += v[k] * std::exp(cdouble(0.0, -phi * k)) * h[static_cast<std::size_t>(k)];
  return std::norm(envelope * s);
}

std::vector<double> quadrature_dist_numeric(const FockVector& v,
                                            const QuadratureSpec& spec,
                                            Exec exec) {
  spec.validate();
  std::vector<double> out(spec.grid.size());
  parallel_for(static_cast<std::ptrdiff_t>(spec.grid.size()), exec,
               [&](std::ptrdiff_t i) {
                 out[static_cast<std::size_t>(i)] = quadrature_point_numeric(
                     v, spec.grid[static_cast<std::size_t>(i)], spec.phi);
               });
  return out;
}

double husimi_numeric(const FockVector& v, const PhasePoint& pt) {
  const cdouble al = pt.alpha();
  const double a2 = std::norm(al);
  cdouble s = 0.0;
  if (al == cdouble(0.0)) {
    s = v[0];
  } else {
    const cdouble logac = std::log(std::conj(al));
    for (int k = 0; k < v.dim(); ++k)
      s += v[k] * std::exp(static_cast<double>(k) * logac -
                           0.5 * log_factorial(k) - 0.5 * a2);
  }
  return std::norm(s) / (2.0 * kPi);
}

namespace {

// Slow path: every pair through the rescaling Laguerre recurrence. Only
// used when the tabulated fast path leaves double range.
double wigner_numeric_scaled(const FockVector& v, const PhasePoint& pt) {
  const double r2 = pt.x * pt.x + pt.p * pt.p;
  const double log_ar = (r2 > 0.0) ? std::log(std::sqrt(2.0 * r2)) : 0.0;
  const double phase_ar = std::atan2(pt.p, pt.x);
  const int d = v.dim();
  double tot = 0.0;
  for (int k = 0; k < d; ++k) {
    if (v[k] == cdouble(0.0)) continue;
    {
      const SignedLog L = laguerre_scaled(k, 0.0, 2.0 * r2);
      const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
      tot += std::norm(v[k]) * sgn * L.sign * std::exp(L.log_abs - r2);
    }
    for (int l = k + 1; l < d; ++l) {
      if (v[l] == cdouble(0.0)) continue;
      if (r2 == 0.0) continue;  // off-diagonal kernel vanishes at the origin
      const SignedLog L = laguerre_scaled(k, l - k, 2.0 * r2);
      if (L.sign == 0.0) continue;
      const double mag =
          std::exp(0.5 * (log_factorial(k) - log_factorial(l)) +
                   (l - k) * log_ar + L.log_abs - r2);
      const double sgn = ((k % 2 == 0) ? 1.0 : -1.0) * L.sign;
      const cdouble w = sgn * mag * std::exp(cdouble(0.0, (l - k) * phase_ar));
      tot += 2.0 * (v[k] * std::conj(v[l]) * w).real();
    }
  }
  return tot / kPi;
}

}  // namespace

double wigner_numeric(const FockVector& v, const PhasePoint& pt) {
  const double r2 = pt.x * pt.x + pt.p * pt.p;
  const double x = 2.0 * r2;
  const int d = v.dim();

  // L[k][a] = L_k^a(x) over the triangle k + a < d, built column-first from
  // the degree recurrence and extended across the upper index through
  // L_n^{a+1} = L_n^a + L_{n-1}^{a+1}
  std::vector<double> table(static_cast<std::size_t>(d) * d);
  auto L = [&](int k, int a) -> double& {
    return table[static_cast<std::size_t>(k) * d + a];
  };
  for (int k = 0; k < d; ++k)
    L(k, 0) = (k == 0) ? 1.0
                       : (k == 1 ? 1.0 - x
                                 : ((2.0 * (k - 1) + 1.0 - x) * L(k - 1, 0) -
                                    (k - 1) * L(k - 2, 0)) /
                                       k);
  bool in_range = true;
  for (int a = 1; a < d && in_range; ++a) {
    L(0, a) = 1.0;
    for (int k = 1; k + a < d; ++k) {
      const double val = L(k, a - 1) + L(k - 1, a);
      L(k, a) = val;
      if (!(std::abs(val) < 1e280)) in_range = false;
    }
  }
  if (!in_range) return wigner_numeric_scaled(v, pt);

  const double emr2 = std::exp(-r2);
  const cdouble ar = std::sqrt(2.0) * cdouble(pt.x, pt.p);
  double tot = 0.0;
  // powers of the rotated argument, with the Gaussian factor folded in
  std::vector<cdouble> pw(static_cast<std::size_t>(d));
  pw[0] = emr2;
  for (int j = 1; j < d; ++j) pw[static_cast<std::size_t>(j)] = pw[j - 1] * ar;
  if (!std::isfinite(pw.back().real()) || !std::isfinite(pw.back().imag()))
    return wigner_numeric_scaled(v, pt);

  for (int k = 0; k < d; ++k) {
    if (v[k] == cdouble(0.0)) continue;
    const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
    tot += std::norm(v[k]) * sgn * L(k, 0) * emr2;
    double ratio = 1.0;  // sqrt(k!/l!)
    for (int l = k + 1; l < d; ++l) {
      ratio /= std::sqrt(static_cast<double>(l));
      if (v[l] == cdouble(0.0)) continue;
      const cdouble w = sgn * ratio * pw[static_cast<std::size_t>(l - k)] *
                        L(k, l - k);
      tot += 2.0 * (v[k] * std::conj(v[l]) * w).real();
    }
  }
  if (!std::isfinite(tot)) return wigner_numeric_scaled(v, pt);
  return tot / kPi;
}

double quadrature_point_closed_coherent(const CoherentParams& beta,
                                        const ConditionalIndices& idx,
                                        const BeamSplitterParams& bs, double x,
                                        double phi) {
  const cdouble bp = bs.T() * beta.beta;
  const int nu = idx.nu();
  const int mu = idx.mu();
  const double r2 = bs.r2();
  const double np = coherent_norm_constant(beta, idx, bs);
  const double phb = std::arg(bp);
  const double gauss = std::exp(
      -std::pow(x - std::sqrt(2.0) * std::abs(bp) * std::cos(phi - phb), 2));
  const cdouble w =
      std::conj(bp) * std::exp(cdouble(0.0, phi)) / std::sqrt(2.0);
  cdouble s = 0.0;
  for (int k = mu; k <= idx.n; ++k) {
    cdouble inner = 0.0;
    for (int l = mu; l <= k; ++l)
      inner += binomial_d(k, l) * std::pow(w, l) / factorial_d(l - nu) *
               hermite(l, cdouble(x) - w);
    const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
    s += sgn * std::pow(r2, k) * binomial_d(idx.n, k) * inner;
  }
  return std::pow(std::norm(bp), -nu) / (np * std::sqrt(kPi)) * gauss *
         std::norm(s);
}

std::vector<double> quadrature_dist_closed_coherent(
    const CoherentParams& beta, const ConditionalIndices& idx,
    const BeamSplitterParams& bs, const QuadratureSpec& spec, Exec exec) {
  spec.validate();
  std::vector<double> out(spec.grid.size());
  parallel_for(static_cast<std::ptrdiff_t>(spec.grid.size()), exec,
               [&](std::ptrdiff_t i) {
                 out[static_cast<std::size_t>(i)] =
                     quadrature_point_closed_coherent(
                         beta, idx, bs, spec.grid[static_cast<std::size_t>(i)],
                         spec.phi);
               });
  return out;
}

double husimi_closed_coherent(const CoherentParams& beta,
                              const ConditionalIndices& idx,
                              const BeamSplitterParams& bs,
                              const PhasePoint& pt) {
  const cdouble bp = bs.T() * beta.beta;
  const int nu = idx.nu();
  const int mu = idx.mu();
  const int delta = idx.delta();
  const double np = coherent_norm_constant(beta, idx, bs);
  const cdouble al = pt.alpha();
  const double ratio = bs.r2() / bs.t2();
  const cdouble arg = ratio * bp * std::conj(al);
  const cdouble L = laguerre(idx.n - mu, std::abs(nu), arg);
  const double logpref =
      2.0 * idx.n * std::log(bs.t2()) + 2.0 * log_factorial(idx.n) -
      nu * std::log(std::norm(bp)) + 2.0 * mu * std::log(ratio) -
      2.0 * log_factorial(idx.n + delta) - std::norm(al - bp);
  const double mupow = mu == 0 ? 1.0 : std::pow(std::norm(bp * std::conj(al)), mu);
  return std::exp(logpref) * mupow * std::norm(L) / (2.0 * kPi) / np;
}

double wigner_closed_coherent(const CoherentParams& beta,
                              const ConditionalIndices& idx,
                              const BeamSplitterParams& bs,
                              const PhasePoint& pt) {
  const cdouble bp = bs.T() * beta.beta;
  const int nu = idx.nu();
  const int mu = idx.mu();
  const double r2 = bs.r2();
  const double np = coherent_norm_constant(beta, idx, bs);
  const cdouble z = cdouble(pt.x, pt.p);
  const cdouble arg = std::sqrt(2.0) * (z - bp / std::sqrt(2.0));
  cdouble s = 0.0;
  for (int k = mu; k <= idx.n; ++k) {
    for (int j = mu; j <= idx.n; ++j) {
      cdouble inner = 0.0;
      for (int l = mu; l <= k; ++l)
        for (int lp = mu; lp <= j; ++lp)
          inner += binomial_d(k, l) * binomial_d(j, lp) * std::pow(bp, l) *
                   std::pow(std::conj(bp), lp) * wigner_pair_kernel(lp, l, arg) /
                   (factorial_d(l - nu) * factorial_d(lp - nu));
      const double sgn = ((k + j) % 2 == 0) ? 1.0 : -1.0;
      s += sgn * std::pow(r2, k + j) * binomial_d(idx.n, k) *
           binomial_d(idx.n, j) * inner;
    }
  }
  const double gauss = std::exp(-std::norm(z - std::sqrt(2.0) * bp));
  return (gauss * s / (std::pow(std::norm(bp), nu) * kPi * np)).real();
}

namespace {

template <class F>
GridResult grid_eval(std::vector<double> xs, std::vector<double> ps, Exec exec,
                     F&& point) {
  GridResult g;
  g.xs = std::move(xs);
  g.ps = std::move(ps);
  g.values.resize(g.xs.size() * g.ps.size());
  const std::ptrdiff_t total = static_cast<std::ptrdiff_t>(g.values.size());
  const std::size_t np_ = g.ps.size();
  parallel_for(total, exec, [&](std::ptrdiff_t i) {
    const std::size_t ix = static_cast<std::size_t>(i) / np_;
    const std::size_t ip = static_cast<std::size_t>(i) % np_;
    g.values[static_cast<std::size_t>(i)] =
        point(PhasePoint{g.xs[ix], g.ps[ip]});
  });
  return g;
}

}  // namespace

double GridResult::min_value() const {
  double m = values.empty() ? 0.0 : values[0];
  for (double v : values) m = std::min(m, v);
  return m;
}

double GridResult::max_value() const {
  double m = values.empty() ? 0.0 : values[0];
  for (double v : values) m = std::max(m, v);
  return m;
}

GridResult wigner_grid(const FockVector& v, std::vector<double> xs,
                       std::vector<double> ps, Exec exec) {
  return grid_eval(std::move(xs), std::move(ps), exec,
                   [&](const PhasePoint& pt) { return wigner_numeric(v, pt); });
}

GridResult husimi_grid(const FockVector& v, std::vector<double> xs,
                       std::vector<double> ps, Exec exec) {
  return grid_eval(std::move(xs), std::move(ps), exec,
                   [&](const PhasePoint& pt) { return husimi_numeric(v, pt); });
}

GridResult wigner_grid_closed_coherent(const CoherentParams& beta,
                                       const ConditionalIndices& idx,
                                       const BeamSplitterParams& bs,
                                       std::vector<double> xs,
                                       std::vector<double> ps, Exec exec) {
  return grid_eval(std::move(xs), std::move(ps), exec,
                   [&](const PhasePoint& pt) {
                     return wigner_closed_coherent(beta, idx, bs, pt);
                   });
}

GridResult husimi_grid_closed_coherent(const CoherentParams& beta,
                                       const ConditionalIndices& idx,
                                       const BeamSplitterParams& bs,
                                       std::vector<double> xs,
                                       std::vector<double> ps, Exec exec) {
  return grid_eval(std::move(xs), std::move(ps), exec,
                   [&](const PhasePoint& pt) {
                     return husimi_closed_coherent(beta, idx, bs, pt);
                   });
}

double grid_integral(const GridResult& g) {
  // trapezoid in p per x row, then trapezoid in x; serial for determinism
  const int nx = static_cast<int>(g.xs.size());
  const int np_ = static_cast<int>(g.ps.size());
  std::vector<double> row(static_cast<std::size_t>(nx), 0.0);
  for (int ix = 0; ix < nx; ++ix) {
    double s = 0.0;
    for (int ip = 0; ip + 1 < np_; ++ip)
      s += 0.5 * (g.at(ix, ip) + g.at(ix, ip + 1)) *
           (g.ps[static_cast<std::size_t>(ip + 1)] -
            g.ps[static_cast<std::size_t>(ip)]);
    row[static_cast<std::size_t>(ix)] = s;
  }
  double total = 0.0;
  for (int ix = 0; ix + 1 < nx; ++ix)
    total += 0.5 *
             (row[static_cast<std::size_t>(ix)] +
              row[static_cast<std::size_t>(ix + 1)]) *
             (g.xs[static_cast<std::size_t>(ix + 1)] -
              g.xs[static_cast<std::size_t>(ix)]);
  return total;
}

std::vector<double> p_marginal(const GridResult& g) {
  const int nx = static_cast<int>(g.xs.size());
  const int np_ = static_cast<int>(g.ps.size());
  std::vector<double> out(static_cast<std::size_t>(nx), 0.0);
  for (int ix = 0; ix < nx; ++ix) {
    double s = 0.0;
    for (int ip = 0; ip + 1 < np_; ++ip)
      s += 0.5 * (g.at(ix, ip) + g.at(ix, ip + 1)) *
           (g.ps[static_cast<std::size_t>(ip + 1)] -
            g.ps[static_cast<std::size_t>(ip)]);
    out[static_cast<std::size_t>(ix)] = s;
  }
  return out;
}

}  // namespace qse
