#include "qse/detection.hpp"

#include <cmath>
#include <random>

namespace qse {

double ProbMatrix::column_sum(int c) const {
  double s = 0.0;
  for (int r = 0; r < rows; ++r) s += at(r, c);
  return s;
}

namespace {

long double pow_int_ld(long double base, int exp) {
  long double r = 1.0L;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

long double binom_ld(int n, int k) {
  long double r = 1.0L;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

ProbMatrix chopping_matrix(int N, int mMax) {
  if (N < 1) throw std::domain_error("chopping_matrix: N must be >= 1");
  ProbMatrix P(N + 1, mMax + 1);
  for (int m = 0; m <= mMax; ++m) {
    if (m == 0) {
      P.at(0, 0) = 1.0;
      continue;
    }
    const long double Nm = pow_int_ld(static_cast<long double>(N), m);
    for (int k = 1; k <= std::min(N, m); ++k) {
      // alternating sum with heavy cancellation for N, m above ~15;
      // extended precision plus compensated accumulation keeps the
      // column-stochasticity defect below 1e-12 ((k - l)^m terms are
      // exact-zero at l = k by construction)
      long double sum = 0.0L, comp = 0.0L;
      for (int l = 0; l < k; ++l) {
        const long double mag =
            binom_ld(k, l) * pow_int_ld(static_cast<long double>(k - l), m);
        const long double term = (l % 2 == 0) ? mag : -mag;
        const long double y = term - comp;
        const long double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
      }
      P.at(k, m) = static_cast<double>(binom_ld(N, k) * sum / Nm);
    }
  }
  return P;
}

ProbMatrix loss_matrix(double eta, int mMax) {
  if (!(eta > 0.0) || eta > 1.0)
    throw std::domain_error("loss_matrix: eta must lie in (0, 1]");
  ProbMatrix M(mMax + 1, mMax + 1);
  for (int m = 0; m <= mMax; ++m)
    for (int l = 0; l <= m; ++l)
      M.at(l, m) = binomial_d(m, l) * std::pow(eta, l) *
                   std::pow(1.0 - eta, m - l);
  return M;
}

ProbMatrix click_given_photons(const DetectorModel& det, int mMax) {
  ProbMatrix C = chopping_matrix(det.ports, mMax);
  ProbMatrix L = loss_matrix(det.eta, mMax);
  ProbMatrix out(det.ports + 1, mMax + 1);
  for (int k = 0; k <= det.ports; ++k)
    for (int m = 0; m <= mMax; ++m) {
      double s = 0.0;
      for (int l = 0; l <= std::min(m, mMax); ++l) s += C.at(k, l) * L.at(l, m);
      out.at(k, m) = s;
    }
  return out;
}

int detection_m_cutoff(const FockVector& input, int n0) {
  const double b = std::sqrt(input.mean_photon());
  return n0 + static_cast<int>(std::ceil(b * b + 8.0 * b)) + 8;
}

std::vector<double> posterior_photons_given_clicks(const DetectorModel& det,
                                                   const FockVector& input,
                                                   int n,
                                                   const BeamSplitterParams& bs,
                                                   int k, int mMax) {
  if (mMax < 0) mMax = detection_m_cutoff(input, n);
  if (k > det.ports)
    throw std::domain_error("posterior: more clicks than ports");
  ProbMatrix C = click_given_photons(det, mMax);
  std::vector<double> prior = probability_map(input, n, bs, mMax);
  double evidence = 0.0;
  for (int m = 0; m <= mMax; ++m)
    evidence += C.at(k, m) * prior[static_cast<std::size_t>(m)];
  if (!(evidence > 0.0))
    throw UnreachableOutcomeError("posterior: zero evidence for this click count");
  std::vector<double> post(static_cast<std::size_t>(mMax) + 1, 0.0);
  for (int m = 0; m <= mMax; ++m)
    post[static_cast<std::size_t>(m)] =
        C.at(k, m) * prior[static_cast<std::size_t>(m)] / evidence;
  return post;
}

double FockMixture::mean() const {
  double s = 0.0;
  for (std::size_t n = 0; n < weights.size(); ++n) s += n * weights[n];
  return s;
}

double FockMixture::variance() const {
  const double mu = mean();
  double s = 0.0;
  for (std::size_t n = 0; n < weights.size(); ++n)
    s += (n - mu) * (n - mu) * weights[n];
  return s;
}

FockMixture binomial_mixture(int n0, double p) {
  if (n0 < 0) throw std::domain_error("binomial_mixture: n0 must be >= 0");
  if (!(p > 0.0) || !(p < 1.0))
    throw std::domain_error("binomial_mixture: p must lie in (0, 1)");
  FockMixture mix;
  mix.weights.resize(static_cast<std::size_t>(n0) + 1);
  const double logp = std::log(p), logq = std::log1p(-p);
  for (int n = 0; n <= n0; ++n)
    mix.weights[static_cast<std::size_t>(n)] =
        std::exp(log_binomial(n0, n) + n * logp + (n0 - n) * logq);
  return mix;
}

ConditionalEnsemble mixed_conditional_output(const FockVector& input,
                                             const FockMixture& mix,
                                             const BeamSplitterParams& bs,
                                             const DetectorModel& det, int k,
                                             double weight_cutoff, int mMax) {
  const int n0 = static_cast<int>(mix.weights.size()) - 1;
  if (mMax < 0) mMax = detection_m_cutoff(input, n0);
  ProbMatrix C = click_given_photons(det, mMax);

  ConditionalEnsemble ens;
  double total = 0.0;
  std::vector<std::vector<double>> priors(static_cast<std::size_t>(n0) + 1);
  for (int n = 0; n <= n0; ++n) {
    priors[static_cast<std::size_t>(n)] = probability_map(input, n, bs, mMax);
    double ev = 0.0;
    for (int m = 0; m <= mMax; ++m)
      ev += C.at(k, m) * priors[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
    total += mix.weights[static_cast<std::size_t>(n)] * ev;
  }
  ens.total_probability = total;
  if (!(total > 0.0))
    throw UnreachableOutcomeError("mixed_conditional_output: unreachable click count");

  // raw member weight p~_n P(n,m|k) = p~_n P~(k|m) P(n,m) / evidence(n)
  for (int n = 0; n <= n0; ++n) {
    double ev = 0.0;
    for (int m = 0; m <= mMax; ++m)
      ev += C.at(k, m) * priors[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
    if (!(ev > 0.0)) continue;
    for (int m = 0; m <= mMax; ++m) {
      const double w = mix.weights[static_cast<std::size_t>(n)] * C.at(k, m) *
                       priors[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] / ev;
      if (w < weight_cutoff) continue;
      EnsembleMember mem;
      mem.weight = w;
      mem.n = n;
      mem.m = m;
      mem.state = jp_state_general(input, ConditionalIndices(n, m), bs).state;
      ens.members.push_back(std::move(mem));
    }
  }
  double wsum = 0.0;
  for (const auto& mem : ens.members) wsum += mem.weight;
  for (auto& mem : ens.members) mem.weight /= wsum;
  return ens;
}

std::vector<double> ensemble_quadrature(const ConditionalEnsemble& ens,
                                        const QuadratureSpec& spec, Exec exec) {
  std::vector<double> out(spec.grid.size(), 0.0);
  for (const auto& mem : ens.members) {
    const auto d = quadrature_dist_numeric(mem.state, spec, exec);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += mem.weight * d[i];
  }
  return out;
}

GridResult ensemble_wigner(const ConditionalEnsemble& ens,
                           std::vector<double> xs, std::vector<double> ps,
                           Exec exec) {
  GridResult g;
  g.xs = std::move(xs);
  g.ps = std::move(ps);
  g.values.assign(g.xs.size() * g.ps.size(), 0.0);
  for (const auto& mem : ens.members) {
    GridResult part = wigner_grid(mem.state, g.xs, g.ps, exec);
    for (std::size_t i = 0; i < g.values.size(); ++i)
      g.values[i] += mem.weight * part.values[i];
  }
  return g;
}

std::vector<double> ensemble_photon_dist(const ConditionalEnsemble& ens) {
  std::size_t dmax = 0;
  for (const auto& mem : ens.members)
    dmax = std::max(dmax, mem.state.amps.size());
  std::vector<double> out(dmax, 0.0);
  for (const auto& mem : ens.members) {
    const auto d = mem.state.number_dist();
    for (std::size_t i = 0; i < d.size(); ++i) out[i] += mem.weight * d[i];
  }
  return out;
}

std::vector<double> simulate_click_distribution(const DetectorModel& det,
                                                int m, std::uint64_t samples,
                                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution survive(det.eta);
  std::uniform_int_distribution<int> port(0, det.ports - 1);
  std::vector<double> hist(static_cast<std::size_t>(det.ports) + 1, 0.0);
  std::vector<std::uint8_t> hit(static_cast<std::size_t>(det.ports));
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::fill(hit.begin(), hit.end(), 0);
    int clicks = 0;
    for (int ph = 0; ph < m; ++ph) {
      if (!survive(rng)) continue;
      const int q = port(rng);
      if (!hit[static_cast<std::size_t>(q)]) {
        hit[static_cast<std::size_t>(q)] = 1;
        ++clicks;
      }
    }
    hist[static_cast<std::size_t>(clicks)] += 1.0;
  }
  for (auto& h : hist) h /= static_cast<double>(samples);
  return hist;
}

}  // namespace qse
