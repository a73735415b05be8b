#ifndef QSE_STATISTICS_HPP
#define QSE_STATISTICS_HPP

#include <vector>

#include "qse/jpstates.hpp"

namespace qse {

/// Photon-number statistics of a coherent-input conditional state.
struct PhotonStats {
  std::vector<double> distribution;
  double mean = 0.0;
  double second_moment = 0.0;  // <n^2>
  double mandel_q = 0.0;       // (<n^2> - <n>^2)/<n> - 1
};

/// Closed-form distribution and moments. The moments come from the
/// antinormally ordered forms reordered back; the distribution from the
/// explicit amplitude-square sum. `lmax` < 0 selects an adaptive length.
PhotonStats photon_stats_closed(const CoherentParams& beta,
                                const ConditionalIndices& idx,
                                const BeamSplitterParams& bs, int lmax = -1);

/// Antinormal moment <a^p (a^dag)^p> of the conditional state (exposed for
/// the reordering identities in the tests).
double antinormal_moment(const CoherentParams& beta,
                         const ConditionalIndices& idx,
                         const BeamSplitterParams& bs, int p);

/// Event probability from the Laguerre-kernel closed form.
double probability_closed_coherent(const CoherentParams& beta,
                                   const ConditionalIndices& idx,
                                   const BeamSplitterParams& bs);

/// The Laguerre-sum kernel of the closed-form probability, split by the
/// sign of nu. Includes the e^{|alpha|^2} factor so that it equals the
/// defining series below.
double probability_kernel_closed(int k, int j, cdouble alpha, int nu);

/// The defining series of the same kernel, summed until the running term
/// falls below 1e-16 of the partial sum.
double probability_kernel_series(int k, int j, cdouble alpha, int nu);

}  // namespace qse

#endif
