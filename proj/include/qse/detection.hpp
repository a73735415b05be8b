#ifndef QSE_DETECTION_HPP
#define QSE_DETECTION_HPP

#include <cstdint>
#include <vector>

#include "qse/phasespace.hpp"

namespace qse {

/// Photon-chopping detector: the mode is split across N on/off diodes with
/// per-photon efficiency eta.
struct DetectorModel {
  int ports = 1;
  double eta = 1.0;

  DetectorModel(int ports_, double eta_) : ports(ports_), eta(eta_) {
    if (ports_ < 1) throw std::domain_error("DetectorModel: ports must be >= 1");
    if (!(eta_ > 0.0) || eta_ > 1.0)
      throw std::domain_error("DetectorModel: eta must lie in (0, 1]");
  }
};

/// Column-stochastic real matrix, rows x cols, row-major.
struct ProbMatrix {
  int rows = 0, cols = 0;
  std::vector<double> a;

  ProbMatrix(int r, int c)
      : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}
  double& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  double at(int r, int c) const {
    return a[static_cast<std::size_t>(r) * cols + c];
  }
  double column_sum(int c) const;
};

/// P(k clicks | m photons) for an ideal N-port chopper; rows k = 0..N,
/// columns m = 0..mMax. Zero for k > m.
ProbMatrix chopping_matrix(int N, int mMax);

/// Binomial loss: P(l survive | m present), rows l = 0..mMax, columns m.
ProbMatrix loss_matrix(double eta, int mMax);

/// Chopping after loss: P(k clicks | m photons at the detector face).
ProbMatrix click_given_photons(const DetectorModel& det, int mMax);

/// Posterior over the photon number m given k clicks, for the conditional
/// scheme with `input` in the signal port and n reference photons. Sums to
/// one; throws UnreachableOutcomeError on zero evidence.
std::vector<double> posterior_photons_given_clicks(const DetectorModel& det,
                                                   const FockVector& input,
                                                   int n,
                                                   const BeamSplitterParams& bs,
                                                   int k, int mMax = -1);

/// Normalized weights over n = 0..n0.
struct FockMixture {
  std::vector<double> weights;
  double mean() const;
  double variance() const;
};

FockMixture binomial_mixture(int n0, double p);

struct EnsembleMember {
  double weight = 0.0;
  FockVector state;
  int n = 0;
  int m = 0;
};

/// Convex mixture of pure conditional states, with the click probability
/// that prepared it.
struct ConditionalEnsemble {
  std::vector<EnsembleMember> members;
  double total_probability = 0.0;  // P_{N,eta}(k)
};

/// The conditional mixed output after k clicks behind a chopping detector,
/// with the reference port drawn from `mix`. Members below
/// `weight_cutoff` (relative) are dropped and the weights renormalized.
ConditionalEnsemble mixed_conditional_output(const FockVector& input,
                                             const FockMixture& mix,
                                             const BeamSplitterParams& bs,
                                             const DetectorModel& det, int k,
                                             double weight_cutoff = 1e-10,
                                             int mMax = -1);

/// Adaptive photon cutoff for the click sums.
int detection_m_cutoff(const FockVector& input, int n0);

std::vector<double> ensemble_quadrature(const ConditionalEnsemble& ens,
                                        const QuadratureSpec& spec,
                                        Exec exec = Exec::Parallel);
GridResult ensemble_wigner(const ConditionalEnsemble& ens,
                           std::vector<double> xs, std::vector<double> ps,
                           Exec exec = Exec::Parallel);
std::vector<double> ensemble_photon_dist(const ConditionalEnsemble& ens);

/// Monte-Carlo estimate of the click column P(k | m): photons thinned with
/// eta, then assigned to ports uniformly; occupied ports counted. Used to
/// cross-check the matrices.
std::vector<double> simulate_click_distribution(const DetectorModel& det,
                                                int m, std::uint64_t samples,
                                                std::uint64_t seed);

}  // namespace qse

#endif
