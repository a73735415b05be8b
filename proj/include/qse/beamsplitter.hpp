#ifndef QSE_BEAMSPLITTER_HPP
#define QSE_BEAMSPLITTER_HPP

#include <vector>

#include "qse/exec.hpp"
#include "qse/fock.hpp"

namespace qse {

/// Lossless beam splitter: T = cos(theta) e^{i phi_t}, R = sin(theta) e^{i phi_r}.
/// |T|^2 + |R|^2 = 1 holds by construction.
struct BeamSplitterParams {
  double theta = 0.0;
  double phi_t = 0.0;
  double phi_r = 0.0;

  static BeamSplitterParams from_t2(double t2, double phi_t = 0.0,
                                    double phi_r = 0.0);

  cdouble T() const;
  cdouble R() const;
  double t2() const;
  double r2() const;
};

/// Pure two-mode state over the product basis |k1>|k2>, row-major in k1.
struct TwoModeState {
  int d1 = 0, d2 = 0;
  std::vector<cdouble> amps;

  TwoModeState() = default;
  TwoModeState(int d1_, int d2_);

  cdouble& at(int k1, int k2) { return amps[static_cast<std::size_t>(k1) * d2 + k2]; }
  const cdouble& at(int k1, int k2) const {
    return amps[static_cast<std::size_t>(k1) * d2 + k2];
  }
  double norm_sq() const;
  double mean_total_photons() const;
};

TwoModeState product_state(const FockVector& mode1, const FockVector& mode2);

struct TransformResult {
  TwoModeState state;
  double leakage;  // squared amplitude pushed past the basis edges
};

/// Applies the factored beam-splitter unitary (scale mode 2 down, raise
/// mode 1 from mode 2, lower mode 1 into mode 2, scale mode 1) as exact
/// sparse actions; the two exponential series terminate within the
/// truncated basis. Leakage is measured and reported, never renormalized
/// away; it exceeds `leak_tol` only when the basis is too small.
TransformResult transform_two_mode(const TwoModeState& in,
                                   const BeamSplitterParams& bs,
                                   double leak_tol = 1e-10);

/// Conditional outcome after detecting m photons in output mode 2.
struct ConditionalOutcome {
  FockVector state;
  double probability = 0.0;
  int n = 0;  // photons fed into input mode 2
  int m = 0;  // photons detected in output mode 2
  int nu() const { return n - m; }
  int mu() const { return nu() > 0 ? nu() : 0; }
  int delta() const { return mu() - nu(); }
};

/// Projects output mode 2 onto |m>. probability = squared norm before
/// normalization. Below `unreachable_tol` the normalized state is
/// numerically meaningless and the outcome is rejected.
ConditionalOutcome condition_on_count(const TwoModeState& out, int m,
                                      int n_bookkeeping = 0,
                                      double unreachable_tol = 1e-300);

/// Brute-force conditional preparation: |input> x |n>, transform, project
/// onto m counts. Basis sizes are chosen so the transform is leak-free.
ConditionalOutcome conditional_oracle(const FockVector& input, int n, int m,
                                      const BeamSplitterParams& bs);

/// P(n, m) for m = 0..mMax from one brute-force transform.
std::vector<double> probability_map(const FockVector& input, int n,
                                    const BeamSplitterParams& bs, int mMax);

/// The same probability from the direct double sum over the input
/// photon-number distribution (independent of the two-mode transform path).
double probability_from_number_dist(const std::vector<double>& number_dist,
                                    int n, int m,
                                    const BeamSplitterParams& bs);

}  // namespace qse

#endif
