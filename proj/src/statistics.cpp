#include "qse/statistics.hpp"

#include <cmath>

namespace qse {

namespace {

cdouble coherent_ladder_moment(int l, int k, cdouble alpha) {
  const double x = std::norm(alpha);
  if (l >= k)
    return factorial_d(k) * std::pow(alpha, l - k) * laguerre(k, l - k, -x);
  return factorial_d(l) * std::pow(std::conj(alpha), k - l) *
         laguerre(l, k - l, -x);
}

}  // namespace

double antinormal_moment(const CoherentParams& beta,
                         const ConditionalIndices& idx,
                         const BeamSplitterParams& bs, int p) {
  const cdouble bp = bs.T() * beta.beta;
  const int nu = idx.nu();
  const int mu = idx.mu();
  const double r2 = bs.r2();
  const double np = coherent_norm_constant(beta, idx, bs);
  cdouble sum = 0.0;
  for (int k = mu; k <= idx.n; ++k) {
    for (int j = mu; j <= idx.n; ++j) {
      cdouble inner = 0.0;
      for (int l = mu; l <= k; ++l)
        for (int lp = mu; lp <= j; ++lp)
          inner += binomial_d(k, l) * binomial_d(j, lp) * std::pow(bp, l) *
                   std::pow(std::conj(bp), lp) *
                   coherent_ladder_moment(lp + p, l + p, bp) /
                   (factorial_d(l - nu) * factorial_d(lp - nu));
      const double sgn = ((k + j) % 2 == 0) ? 1.0 : -1.0;
      sum += sgn * std::pow(r2, k + j) * binomial_d(idx.n, k) *
             binomial_d(idx.n, j) * inner;
    }
  }
  return sum.real() / std::pow(std::norm(bp), nu) / np;
}

PhotonStats photon_stats_closed(const CoherentParams& beta,
                                const ConditionalIndices& idx,
                                const BeamSplitterParams& bs, int lmax) {
  const cdouble bp = bs.T() * beta.beta;
  const int nu = idx.nu();
  const int mu = idx.mu();
  const double r2 = bs.r2();
  const double np = coherent_norm_constant(beta, idx, bs);
  if (lmax < 0) lmax = adaptive_dim(std::abs(bp), idx.n, idx.m);

  PhotonStats st;
  st.distribution.resize(static_cast<std::size_t>(lmax) + 1);
  const double x = std::norm(bp);
  for (int l = 0; l <= lmax; ++l) {
    double inner_abs2;
    {
      cdouble tot = 0.0;
      for (int k = mu; k <= idx.n; ++k) {
        double inner = 0.0;
        for (int j = mu; j <= std::min(k, l); ++j)
          inner += binomial_d(k, j) /
                   (factorial_d(j - nu) * factorial_d(l - j));
        const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
        tot += sgn * std::pow(r2, k) * binomial_d(idx.n, k) * inner;
      }
      inner_abs2 = std::norm(tot);
    }
    st.distribution[static_cast<std::size_t>(l)] =
        std::exp(-x + log_factorial(l) + l * std::log(x)) /
        (np * std::pow(x, nu)) * inner_abs2;
  }
  const double a1 = antinormal_moment(beta, idx, bs, 1);
  const double a2 = antinormal_moment(beta, idx, bs, 2);
  st.mean = a1 - 1.0;
  st.second_moment = a2 - 3.0 * a1 + 1.0;
  st.mandel_q = (st.second_moment - st.mean * st.mean) / st.mean - 1.0;
  return st;
}

double probability_kernel_closed(int k, int j, cdouble alpha, int nu) {
  const double x = std::norm(alpha);
  if (nu >= 0) {
    if (k - nu < 0 || j - nu < 0)
      throw std::domain_error("probability_kernel_closed: indices below nu");
    double s = 0.0;
    for (int l = 0; l <= k; ++l)
      s += binomial_d(k, l) * std::pow(x, l) / factorial_d(l) *
           laguerre(j - nu, nu + l, -x);
    return std::exp(x) * factorial_d(j - nu) / factorial_d(j) * s;
  }
  const int anu = -nu;
  double s = 0.0;
  for (int l = 0; l <= k; ++l)
    s += binomial_d(k, l) * factorial_d(j + l) /
         (factorial_d(l) * factorial_d(j)) * laguerre(j + l, anu - l, -x);
  return std::exp(x) * std::pow(x, anu) * s;
}

double probability_kernel_series(int k, int j, cdouble alpha, int nu) {
  const double x = std::norm(alpha);
  const int delta = nu < 0 ? -nu : 0;
  double sum = 0.0;
  for (int p = delta; p < 100000; ++p) {
    const double term = binomial_d(p + k, k) * binomial_d(p + j, j) *
                        std::exp(p * std::log(x) - log_factorial(p + nu));
    sum += term;
    if (p > delta + 5 && term < 1e-16 * sum) break;
  }
  return sum;
}

double probability_closed_coherent(const CoherentParams& beta,
                                   const ConditionalIndices& idx,
                                   const BeamSplitterParams& bs) {
  const cdouble bp = bs.T() * beta.beta;
  const int nu = idx.nu();
  const int mu = idx.mu();
  const double r2 = bs.r2();
  double s = 0.0;
  for (int k = mu; k <= idx.n; ++k)
    for (int j = mu; j <= idx.n; ++j) {
      if (k - nu > idx.m || j - nu > idx.m) continue;
      const double sgn = ((k + j) % 2 == 0) ? 1.0 : -1.0;
      s += sgn * std::pow(r2, k + j) * binomial_d(idx.m, k - nu) *
           binomial_d(idx.m, j - nu) * probability_kernel_closed(k, j, bp, nu);
    }
  const double logpref = -std::norm(beta.beta) - nu * std::log(r2) +
                         log_factorial(idx.n) - idx.m * std::log(bs.t2()) -
                         log_factorial(idx.m);
  return std::exp(logpref) * s;
}

}  // namespace qse
