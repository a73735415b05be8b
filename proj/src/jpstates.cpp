#include "qse/jpstates.hpp"

#include <algorithm>
#include <cmath>

namespace qse {

namespace {

// <alpha| a^l (a^dag)^k |alpha>, Laguerre form.
cdouble coherent_ladder_moment(int l, int k, cdouble alpha) {
  const double x = std::norm(alpha);
  if (l >= k)
    return factorial_d(k) * std::pow(alpha, l - k) * laguerre(k, l - k, -x);
  return factorial_d(l) * std::pow(std::conj(alpha), k - l) *
         laguerre(l, k - l, -x);
}

}  // namespace

double probability_from_norm_constant(double norm_constant,
                                      const ConditionalIndices& idx,
                                      const BeamSplitterParams& bs) {
  const double logp = log_factorial(idx.m) - log_factorial(idx.n) -
                      idx.m * std::log(bs.t2()) - idx.nu() * std::log(bs.r2());
  return std::exp(logp) * norm_constant;
}

ConditionalState jp_state_general(const FockVector& input,
                                  const ConditionalIndices& idx,
                                  const BeamSplitterParams& bs) {
  const int nu = idx.nu();
  const int mu = idx.mu();
  const double r2 = bs.r2();
  // working room for the intermediate (a^dag)^k raise
  const int wdim = input.dim() + idx.n + 1;
  FockVector base(wdim);
  {
    FockVector att = attenuate_raw(input, bs.T());
    for (int k = 0; k < input.dim(); ++k) base[k] = att[k];
  }
  FockVector acc(wdim);
  for (int k = mu; k <= idx.n; ++k) {
    FockVector term = apply_creation(base, k);
    term = apply_annihilation(term, k - nu);
    const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
    const double coef = sgn * std::exp(k * std::log(r2) - log_factorial(k - nu) +
                                       log_binomial(idx.n, k));
    for (int q = 0; q < wdim; ++q) acc[q] += coef * term[q];
  }
  ConditionalState out;
  out.norm_constant = acc.norm_sq();
  if (!(out.norm_constant > 0.0))
    throw UnreachableOutcomeError("jp_state_general: zero-norm outcome");
  out.probability = probability_from_norm_constant(out.norm_constant, idx, bs);
  out.state = acc.unit();
  return out;
}

FockVector jp_state_jacobi_form(const FockVector& input,
                                const ConditionalIndices& idx,
                                const BeamSplitterParams& bs) {
  const int nu = idx.nu();
  const double z = 2.0 * bs.t2() - 1.0;
  const int deg = nu > 0 ? idx.m : idx.n;
  const int wdim = input.dim() + (nu > 0 ? nu : 0) + 1;
  FockVector w(wdim);
  {
    FockVector att = attenuate_raw(input, bs.T());
    for (int k = 0; k < input.dim(); ++k)
      w[k] = att[k] * jacobi_poly(deg, std::abs(nu), k - idx.m, z);
  }
  if (nu < 0)
    w = apply_annihilation(w, -nu);
  else if (nu > 0)
    w = apply_creation(w, nu);
  if (w.is_zero())
    throw UnreachableOutcomeError("jp_state_jacobi_form: zero-norm outcome");
  return w.unit();
}

double coherent_norm_constant(const CoherentParams& beta,
                              const ConditionalIndices& idx,
                              const BeamSplitterParams& bs) {
  const cdouble bp = bs.T() * beta.beta;
  const int nu = idx.nu();
  const int mu = idx.mu();
  const double r2 = bs.r2();
  cdouble sum = 0.0;
  for (int k = mu; k <= idx.n; ++k) {
    for (int j = mu; j <= idx.n; ++j) {
      cdouble inner = 0.0;
      for (int l = mu; l <= k; ++l) {
        for (int lp = mu; lp <= j; ++lp) {
          inner += binomial_d(k, l) * binomial_d(j, lp) * std::pow(bp, l) *
                   std::pow(std::conj(bp), lp) *
                   coherent_ladder_moment(lp, l, bp) /
                   (factorial_d(l - nu) * factorial_d(lp - nu));
        }
      }
      const double sgn = ((k + j) % 2 == 0) ? 1.0 : -1.0;
      sum += sgn * std::pow(r2, k + j) * binomial_d(idx.n, k) *
             binomial_d(idx.n, j) * inner;
    }
  }
  return sum.real() / std::pow(std::norm(bp), nu);
}

ConditionalState psjp_pajp_coherent(const CoherentParams& beta,
                                    const ConditionalIndices& idx,
                                    const BeamSplitterParams& bs, int dim) {
  if (std::abs(beta.beta) == 0.0) {
    // vacuum input: delegate to the operator sum, which handles it exactly
    return jp_state_general(fock_state(0, 2), idx, bs);
  }
  const cdouble bp = bs.T() * beta.beta;
  const int nu = idx.nu();
  const int mu = idx.mu();
  const double r2 = bs.r2();
  const double npc = coherent_norm_constant(beta, idx, bs);

  FockVector amps(dim);
  const cdouble logbp = std::log(bp);
  for (int s = 0; s < dim; ++s) {
    cdouble tot = 0.0;
    for (int k = mu; k <= idx.n; ++k) {
      cdouble inner = 0.0;
      const int ltop = std::min(k, s);
      for (int l = mu; l <= ltop; ++l)
        inner += binomial_d(k, l) *
                 std::exp(static_cast<double>(l - nu) * logbp -
                          log_factorial(l - nu) +
                          static_cast<double>(s - l) * logbp -
                          log_factorial(s - l));
      const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
      tot += sgn * std::pow(r2, k) * binomial_d(idx.n, k) * inner;
    }
    amps[s] = std::exp(-0.5 * std::norm(bp) + 0.5 * log_factorial(s)) * tot;
  }
  if (amps.is_zero())
    throw UnreachableOutcomeError("psjp_pajp_coherent: zero-norm outcome");
  ConditionalState out;
  // N_{n,m} = e^{-|beta R|^2} N'_{n,m}
  out.norm_constant = std::exp(-r2 * std::norm(beta.beta)) * npc;
  out.probability = probability_from_norm_constant(out.norm_constant, idx, bs);
  out.state = amps.unit();
  return out;
}

namespace {

cdouble kappa_prime(const SqueezeParams& xi, const BeamSplitterParams& bs) {
  const cdouble T = bs.T();
  return T * T * xi.kappa();
}

// Summand shared by the squeezed-input state and its cat components:
// sum_k (-|R|^2)^k / (k - nu)! C(n,k) (p - nu + k)!  scaled by
// 1 / (((p-nu)/2)! sqrt(p!)) with the half-power factor handled by callers.
cdouble squeezed_shell_sum(int p, const ConditionalIndices& idx, double r2) {
  const int nu = idx.nu();
  const int mu = idx.mu();
  double sum = 0.0;
  for (int k = mu; k <= idx.n; ++k) {
    const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
    sum += sgn * std::exp(k * std::log(r2) - log_factorial(k - nu) +
                          log_binomial(idx.n, k) + log_factorial(p - nu + k) -
                          0.5 * log_factorial(p) -
                          std::lgamma(0.5 * (p - nu) + 1.0));
  }
  return sum;
}

}  // namespace

ConditionalState psjp_pajp_squeezed(const SqueezeParams& xi,
                                    const ConditionalIndices& idx,
                                    const BeamSplitterParams& bs, int dim) {
  const cdouble kp = kappa_prime(xi, bs);
  const cdouble kap = xi.kappa();
  const int nu = idx.nu();
  const int mu = idx.mu();
  FockVector amps(dim);
  if (kp == cdouble(0.0)) {
    // degenerate squeeze: input is vacuum
    return jp_state_general(fock_state(0, 2), idx, bs);
  }
  const cdouble log_half_kp = std::log(kp / 2.0);
  for (int p = mu; p < dim; ++p) {
    if ((p - nu) % 2 != 0) continue;  // parity selection, exact zeros
    const int q = (p - nu) / 2;
    amps[p] = squeezed_shell_sum(p, idx, bs.r2()) *
              std::exp(static_cast<double>(q) * log_half_kp);
  }
  const double tail = std::norm(amps[dim - 1]) +
                      (dim >= 2 ? std::norm(amps[dim - 2]) : 0.0);
  double raw = amps.norm_sq();
  if (!(raw > 0.0))
    throw UnreachableOutcomeError("psjp_pajp_squeezed: zero-norm outcome");
  if (tail > 1e-12 * raw)
    throw TruncationError("psjp_pajp_squeezed: tail mass above threshold");
  ConditionalState out;
  const double np = raw * std::sqrt(1.0 - std::norm(kp));
  const double n_const =
      std::sqrt((1.0 - std::norm(kap)) / (1.0 - std::norm(kp))) * np;
  out.norm_constant = n_const;
  out.probability = probability_from_norm_constant(n_const, idx, bs);
  out.state = amps.unit();
  return out;
}

CatComponents cat_split(const SqueezeParams& xi, const ConditionalIndices& idx,
                        const BeamSplitterParams& bs, int dim) {
  const cdouble kp = kappa_prime(xi, bs);
  const int nu = idx.nu();
  const int mu = idx.mu();
  CatComponents out;
  if (kp == cdouble(0.0)) {
    if (nu < 0)
      throw UnreachableOutcomeError("cat_split: zero-norm outcome at kappa = 0");
    out.plus = fock_state(nu, std::max(dim, nu + 1));
    out.minus = out.plus;
    out.degenerate = true;
    return out;
  }
  const cdouble sq = std::sqrt(kp / 2.0);
  const cdouble log_sq = std::log(sq);
  FockVector plus(dim), minus(dim);
  for (int p = mu; p < dim; ++p) {
    const cdouble common = squeezed_shell_sum(p, idx, bs.r2()) *
                           std::exp(static_cast<double>(p - nu) * log_sq);
    plus[p] = common;
    minus[p] = ((p - nu) % 2 == 0) ? common : -common;
  }
  if (plus.is_zero())
    throw UnreachableOutcomeError("cat_split: zero-norm outcome");
  out.plus = plus.unit();
  out.minus = minus.unit();
  return out;
}

// ---- displacement / squeeze kernels ------------------------------------

std::vector<cdouble> displacement_matrix(cdouble beta, int rows, int cols) {
  std::vector<cdouble> D(static_cast<std::size_t>(rows) * cols, cdouble(0.0));
  const double x = std::norm(beta);
  if (beta == cdouble(0.0)) {
    for (int j = 0; j < std::min(rows, cols); ++j)
      D[static_cast<std::size_t>(j) * cols + j] = 1.0;
    return D;
  }
  const cdouble logb = std::log(beta);
  const cdouble logmb = std::log(-std::conj(beta));
  for (int j = 0; j < rows; ++j) {
    for (int k = 0; k < cols; ++k) {
      if (j >= k) {
        D[static_cast<std::size_t>(j) * cols + k] =
            std::exp(0.5 * (log_factorial(k) - log_factorial(j)) - 0.5 * x +
                     static_cast<double>(j - k) * logb) *
            laguerre(k, j - k, x);
      } else {
        D[static_cast<std::size_t>(j) * cols + k] =
            std::exp(0.5 * (log_factorial(j) - log_factorial(k)) - 0.5 * x +
                     static_cast<double>(k - j) * logmb) *
            laguerre(j, k - j, x);
      }
    }
  }
  return D;
}

namespace {

FockVector apply_dense(const std::vector<cdouble>& M, int rows, int cols,
                       const FockVector& v) {
  FockVector out(rows);
  const int kmax = std::min(cols, v.dim());
  for (int j = 0; j < rows; ++j) {
    cdouble s = 0.0;
    for (int k = 0; k < kmax; ++k)
      s += M[static_cast<std::size_t>(j) * cols + k] * v[k];
    out[j] = s;
  }
  return out;
}

}  // namespace

FockVector displace(const FockVector& v, cdouble beta, double norm_tol) {
  const double b = std::abs(beta);
  const int support = std::max(0, v.support_max());
  int pad = static_cast<int>(
      std::ceil(b * b + 8.0 * b * (1.0 + std::sqrt(support + 1.0)) + 24.0));
  const double in_norm = v.norm();
  for (int attempt = 0; attempt < 4; ++attempt) {
    const int rows = support + 1 + pad;
    auto D = displacement_matrix(beta, rows, support + 1);
    FockVector out = apply_dense(D, rows, support + 1, v);
    if (std::abs(out.norm() - in_norm) <= norm_tol * std::max(in_norm, 1e-300))
      return out;
    pad *= 2;
  }
  throw TruncationError("displace: norm defect persists after padding");
}

std::vector<cdouble> squeeze_matrix(const SqueezeParams& xi, int rows,
                                    int cols) {
  const double r = std::abs(xi.xi);
  const double phase = r == 0.0 ? 0.0 : std::arg(xi.xi);
  const double ch = std::cosh(r);
  const cdouble sh = std::exp(cdouble(0.0, phase)) * std::sinh(r);
  const cdouble kap = xi.kappa();
  // each column step consumes one padded row from the top
  const int pad = rows + cols + 2;
  std::vector<cdouble> S(static_cast<std::size_t>(pad) * cols, cdouble(0.0));
  auto at = [&](int j, int k) -> cdouble& {
    return S[static_cast<std::size_t>(j) * cols + k];
  };
  if (kap == cdouble(0.0)) {
    for (int k = 0; k < cols && k < pad; ++k) at(k, k) = 1.0;
  } else {
    const double pref = std::pow(1.0 - std::norm(kap), 0.25);
    const cdouble logk = std::log(kap);
    for (int q = 0; q < pad; q += 2) {
      const int h = q / 2;
      at(q, 0) = pref * std::exp(0.5 * log_factorial(q) - h * std::log(2.0) -
                                 log_factorial(h) +
                                 static_cast<double>(h) * logk);
    }
    for (int k = 0; k + 1 < cols; ++k) {
      for (int j = 0; j < pad; ++j) {
        cdouble t = 0.0;
        if (j >= 1) t += ch * std::sqrt(static_cast<double>(j)) * at(j - 1, k);
        if (j + 1 < pad)
          t += std::conj(sh) * std::sqrt(j + 1.0) * at(j + 1, k);
        at(j, k + 1) = t / std::sqrt(k + 1.0);
      }
    }
  }
  std::vector<cdouble> out(static_cast<std::size_t>(rows) * cols, cdouble(0.0));
  for (int j = 0; j < rows; ++j)
    for (int k = 0; k < cols; ++k)
      out[static_cast<std::size_t>(j) * cols + k] = at(j, k);
  return out;
}

FockVector squeeze_apply(const FockVector& v, const SqueezeParams& xi,
                         double norm_tol) {
  const double r = std::abs(xi.xi);
  const int support = std::max(0, v.support_max());
  // squeezing spreads support roughly by e^{2r}
  int rows = static_cast<int>(
      std::ceil((support + 8.0) * std::exp(2.0 * r) + 16.0));
  const double in_norm = v.norm();
  for (int attempt = 0; attempt < 4; ++attempt) {
    auto S = squeeze_matrix(xi, rows, support + 1);
    FockVector out = apply_dense(S, rows, support + 1, v);
    if (std::abs(out.norm() - in_norm) <= norm_tol * std::max(in_norm, 1e-300))
      return out;
    rows *= 2;
  }
  throw TruncationError("squeeze_apply: norm defect persists after padding");
}

// ---- related state families ---------------------------------------------

FockVector photon_added_coherent_displacedfock(const CoherentParams& beta,
                                               int n, int dim) {
  if (n < 0) throw std::domain_error("photon_added_coherent: n must be >= 0");
  auto D = displacement_matrix(beta.beta, dim, n + 1);
  FockVector acc(dim);
  for (int k = 0; k <= n; ++k) {
    const cdouble c = binomial_d(n, k) * std::exp(0.5 * log_factorial(k)) *
                      std::pow(std::conj(beta.beta), n - k);
    for (int j = 0; j < dim; ++j)
      acc[j] += c * D[static_cast<std::size_t>(j) * (n + 1) + k];
  }
  return acc.unit();
}

FockVector near_photon_number_state(const CoherentParams& beta, int n,
                                    int dim) {
  if (n < 0) throw std::domain_error("near_photon_number_state: n must be >= 0");
  FockVector v = padded(coherent_state({2.0 * beta.beta}, dim), n);
  v = apply_creation(v, n);
  FockVector shifted = displace(v, -beta.beta);
  return shifted.unit();
}

std::vector<LadderTerm> normal_order_coeffs(int n, cdouble epsilon) {
  if (n < 0) throw std::domain_error("normal_order_coeffs: n must be >= 0");
  std::vector<LadderTerm> terms;
  for (int l = 0; l <= n; ++l) {
    for (int k = 0; k <= l / 2; ++k) {
      // Gamma(k + 1/2)/sqrt(pi) = (2k)!/(4^k k!)
      const double gk = std::exp(log_factorial(2 * k) - k * std::log(2.0) -
                                 log_factorial(k));
      const cdouble c = binomial_d(n, l) * binomial_d(l, 2 * k) * gk *
                        std::pow(epsilon, n - l + k);
      terms.push_back({l - 2 * k, n - l, c});
    }
  }
  return terms;
}

FockVector apply_ladder_terms(const FockVector& v,
                              const std::vector<LadderTerm>& terms) {
  int max_create = 0;
  for (const auto& t : terms) max_create = std::max(max_create, t.create);
  FockVector acc(v.dim() + max_create + 1);
  for (const auto& t : terms) {
    FockVector w(acc.dim());
    for (int k = 0; k < v.dim(); ++k) w[k] = v[k];
    w = apply_annihilation(w, t.annihilate);
    w = apply_creation(w, t.create);
    for (int k = 0; k < acc.dim(); ++k) acc[k] += t.coeff * w[k];
  }
  return acc;
}

SqueezedFockDecomposition photon_added_subtracted_squeezed_decomposition(
    const SqueezeParams& xi, int count, LadderMode mode, int dim) {
  if (count < 0)
    throw std::domain_error("squeezed_decomposition: count must be >= 0");
  const cdouble kap = xi.kappa();
  if (mode == LadderMode::Subtracted && kap == cdouble(0.0))
    throw std::domain_error(
        "squeezed_decomposition: subtraction from an unsqueezed vacuum is empty");
  SqueezedFockDecomposition out;
  auto S = squeeze_matrix(xi, dim, count + 1);
  FockVector acc(dim);
  for (int k = 0; k <= count / 2; ++k) {
    const int fock = count - 2 * k;
    const cdouble ratio =
        mode == LadderMode::Added ? std::conj(kap) : cdouble(1.0) / kap;
    const cdouble w = factorial_d(count) * std::pow(ratio, k) /
                      (std::pow(2.0, k) * factorial_d(k) *
                       std::exp(0.5 * log_factorial(fock)));
    out.terms.push_back({fock, w});
    for (int j = 0; j < dim; ++j)
      acc[j] += w * S[static_cast<std::size_t>(j) * (count + 1) + fock];
  }
  out.reconstructed = acc.unit();
  return out;
}

FockVector squeezed_state_excitation(const CoherentParams& beta,
                                     const SqueezeParams& xi, int n, int dim) {
  if (n < 0) throw std::domain_error("squeezed_state_excitation: n must be >= 0");
  // Conjugating the raised ladder operator through the squeeze adjoint
  // turns S^dag(xi) (a^dag)^n S(2 xi)|0> into
  // (cosh r a^dag - e^{i phi} sinh r a)^n S(xi)|0>, which keeps every
  // factor inside the accurately representable low-order subspace. A
  // truncated squeeze matrix applied to the raised state cannot hold the
  // 1e-9 unitarity budget at this support.
  const double r = std::abs(xi.xi);
  const double phase = r == 0.0 ? 0.0 : std::arg(xi.xi);
  const cdouble sh = std::exp(cdouble(0.0, phase)) * std::sinh(r);
  const double ch = std::cosh(r);
  FockVector v = padded(squeezed_vacuum(xi, dim), n);
  for (int rep = 0; rep < n; ++rep) {
    const FockVector up = apply_creation(v, 1);
    const FockVector dn = apply_annihilation(v, 1);
    for (int k = 0; k < v.dim(); ++k) v[k] = ch * up[k] - sh * dn[k];
  }
  v = displace(v, beta.beta);
  return v.unit();
}

}  // namespace qse
