#include "qse/beamsplitter.hpp"

#include <cmath>

namespace qse {

BeamSplitterParams BeamSplitterParams::from_t2(double t2, double phi_t,
                                               double phi_r) {
  if (!(t2 > 0.0) || !(t2 < 1.0))
    throw std::domain_error("BeamSplitterParams: |T|^2 must lie in (0,1)");
  BeamSplitterParams p;
  p.theta = std::acos(std::sqrt(t2));
  p.phi_t = phi_t;
  p.phi_r = phi_r;
  return p;
}

cdouble BeamSplitterParams::T() const {
  return std::cos(theta) * std::exp(cdouble(0.0, phi_t));
}

cdouble BeamSplitterParams::R() const {
  return std::sin(theta) * std::exp(cdouble(0.0, phi_r));
}

double BeamSplitterParams::t2() const {
  const double c = std::cos(theta);
  return c * c;
}

double BeamSplitterParams::r2() const {
  const double s = std::sin(theta);
  return s * s;
}

TwoModeState::TwoModeState(int d1_, int d2_)
    : d1(d1_), d2(d2_), amps(static_cast<std::size_t>(d1_) * d2_) {
  if (d1_ < 1 || d2_ < 1)
    throw std::domain_error("TwoModeState: dims must be >= 1");
}

double TwoModeState::norm_sq() const {
  double s = 0.0;
  for (const auto& a : amps) s += std::norm(a);
  return s;
}

double TwoModeState::mean_total_photons() const {
  double s = 0.0;
  for (int k1 = 0; k1 < d1; ++k1)
    for (int k2 = 0; k2 < d2; ++k2) s += (k1 + k2) * std::norm(at(k1, k2));
  return s / norm_sq();
}

TwoModeState product_state(const FockVector& mode1, const FockVector& mode2) {
  TwoModeState psi(mode1.dim(), mode2.dim());
  for (int k1 = 0; k1 < psi.d1; ++k1)
    for (int k2 = 0; k2 < psi.d2; ++k2)
      psi.at(k1, k2) = mode1[k1] * mode2[k2];
  return psi;
}

namespace {

// One application of a1^dag a2 (up = true) or a2^dag a1 (up = false),
// scaled by c. Amplitude crossing the receiving-mode edge is returned as
// lost squared magnitude.
double ladder_hop(const TwoModeState& in, TwoModeState& out, cdouble c,
                  bool raise_mode1) {
  double lost = 0.0;
  out.amps.assign(in.amps.size(), cdouble(0.0));
  for (int k1 = 0; k1 < in.d1; ++k1) {
    for (int k2 = 0; k2 < in.d2; ++k2) {
      const cdouble a = in.at(k1, k2);
      if (a == cdouble(0.0)) continue;
      if (raise_mode1) {
        if (k2 == 0) continue;
        const cdouble v = c * std::sqrt(static_cast<double>(k2)) *
                          std::sqrt(k1 + 1.0) * a;
        if (k1 + 1 >= in.d1)
          lost += std::norm(v);
        else
          out.at(k1 + 1, k2 - 1) = v;
      } else {
        if (k1 == 0) continue;
        const cdouble v = c * std::sqrt(static_cast<double>(k1)) *
                          std::sqrt(k2 + 1.0) * a;
        if (k2 + 1 >= in.d2)
          lost += std::norm(v);
        else
          out.at(k1 - 1, k2 + 1) = v;
      }
    }
  }
  return lost;
}

// exp(c * hop) as a terminating series; each hop lowers the source mode,
// so at most max(d1, d2) terms contribute.
double apply_exp_ladder(TwoModeState& psi, cdouble c, bool raise_mode1) {
  TwoModeState cur = psi;
  TwoModeState next(psi.d1, psi.d2);
  double lost_total = 0.0;
  const int max_steps = raise_mode1 ? psi.d2 : psi.d1;
  for (int j = 1; j <= max_steps; ++j) {
    lost_total += ladder_hop(cur, next, c / static_cast<double>(j), raise_mode1);
    bool all_zero = true;
    for (std::size_t i = 0; i < next.amps.size(); ++i) {
      psi.amps[i] += next.amps[i];
      if (next.amps[i] != cdouble(0.0)) all_zero = false;
    }
    if (all_zero) break;
    std::swap(cur, next);
  }
  return lost_total;
}

}  // namespace

TransformResult transform_two_mode(const TwoModeState& in,
                                   const BeamSplitterParams& bs,
                                   double leak_tol) {
  const cdouble T = bs.T();
  const cdouble R = bs.R();
  TransformResult res;
  res.state = in;
  res.leakage = 0.0;

  // T^{-n2}
  {
    const cdouble invT = 1.0 / T;
    cdouble pw = 1.0;
    for (int k2 = 0; k2 < in.d2; ++k2) {
      for (int k1 = 0; k1 < in.d1; ++k1) res.state.at(k1, k2) *= pw;
      pw *= invT;
    }
  }
  // exp(R a1^dag a2)
  res.leakage += apply_exp_ladder(res.state, R, true);
  // exp(-R* a2^dag a1)
  res.leakage += apply_exp_ladder(res.state, -std::conj(R), false);
  // T^{n1}
  {
    cdouble pw = 1.0;
    for (int k1 = 0; k1 < in.d1; ++k1) {
      for (int k2 = 0; k2 < in.d2; ++k2) res.state.at(k1, k2) *= pw;
      pw *= T;
    }
  }
  if (res.leakage > leak_tol)
    throw TruncationError("transform_two_mode: truncation leakage above tolerance");
  return res;
}

ConditionalOutcome condition_on_count(const TwoModeState& out, int m,
                                      int n_bookkeeping,
                                      double unreachable_tol) {
  if (m < 0 || m >= out.d2)
    throw std::domain_error("condition_on_count: m outside the mode-2 basis");
  ConditionalOutcome oc;
  oc.n = n_bookkeeping;
  oc.m = m;
  oc.state = FockVector(out.d1);
  double p = 0.0;
  for (int k1 = 0; k1 < out.d1; ++k1) {
    oc.state[k1] = out.at(k1, m);
    p += std::norm(out.at(k1, m));
  }
  oc.probability = p;
  if (p < unreachable_tol)
    throw UnreachableOutcomeError("condition_on_count: outcome probability below threshold");
  oc.state = oc.state.unit();
  return oc;
}

namespace {

// Dimensions making the factored transform exactly leak-free: both hops
// conserve k1 + k2, so a square basis holding the full input support works.
TwoModeState embed_for_oracle(const FockVector& input, int n) {
  const int d = input.dim() + n + 1;
  TwoModeState psi(d, d);
  for (int k = 0; k < input.dim(); ++k) psi.at(k, n) = input[k];
  return psi;
}

}  // namespace

ConditionalOutcome conditional_oracle(const FockVector& input, int n, int m,
                                      const BeamSplitterParams& bs) {
  if (n < 0 || m < 0)
    throw std::domain_error("conditional_oracle: n, m must be >= 0");
  TwoModeState psi = embed_for_oracle(input, n);
  TransformResult tr = transform_two_mode(psi, bs);
  ConditionalOutcome oc = condition_on_count(tr.state, m, n);
  return oc;
}

std::vector<double> probability_map(const FockVector& input, int n,
                                    const BeamSplitterParams& bs, int mMax) {
  TwoModeState psi = embed_for_oracle(input, n);
  TransformResult tr = transform_two_mode(psi, bs);
  // counts beyond the embedded basis exceed the available photons and
  // carry exactly zero probability
  std::vector<double> p(static_cast<std::size_t>(mMax) + 1, 0.0);
  for (int m = 0; m <= std::min(mMax, psi.d2 - 1); ++m) {
    double s = 0.0;
    for (int k1 = 0; k1 < tr.state.d1; ++k1) s += std::norm(tr.state.at(k1, m));
    p[static_cast<std::size_t>(m)] = s;
  }
  return p;
}

double probability_from_number_dist(const std::vector<double>& number_dist,
                                    int n, int m,
                                    const BeamSplitterParams& bs) {
  const int nu = n - m;
  const int mu = nu > 0 ? nu : 0;
  const int delta = mu - nu;
  const double r2 = bs.r2();
  const double t2 = bs.t2();
  double total = 0.0;
  for (int j = mu; j <= n; ++j) {
    for (int k = mu; k <= n; ++k) {
      if (j - nu > m || k - nu > m) continue;
      double inner = 0.0;
      for (int q = delta; q < static_cast<int>(number_dist.size()); ++q) {
        if (number_dist[static_cast<std::size_t>(q)] == 0.0) continue;
        const double logterm = log_factorial(q) + q * std::log(t2) -
                               log_factorial(q + nu) + log_binomial(q + j, j) +
                               log_binomial(q + k, k);
        inner += std::exp(logterm) * number_dist[static_cast<std::size_t>(q)];
      }
      const double sgn = ((j + k) % 2 == 0) ? 1.0 : -1.0;
      total += sgn * std::pow(r2, j + k) * binomial_d(m, j - nu) *
               binomial_d(m, k - nu) * inner;
    }
  }
  return std::pow(r2, -nu) * factorial_d(n) / (std::pow(t2, m) * factorial_d(m)) *
         total;
}

}  // namespace qse
