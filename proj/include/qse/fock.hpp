#ifndef QSE_FOCK_HPP
#define QSE_FOCK_HPP

#include <complex>
#include <stdexcept>
#include <vector>

#include "qse/numerics.hpp"

namespace qse {

/// Amplitude lost to a finite number-basis cutoff exceeded its budget.
struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A conditional measurement outcome carries (numerically) no probability.
struct UnreachableOutcomeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Single-mode state over the truncated number basis |0>..|dim-1>.
/// Value type: every operation returns a new vector.
struct FockVector {
  std::vector<cdouble> amps;
  bool normalized = false;

  FockVector() = default;
  explicit FockVector(int dim) : amps(static_cast<std::size_t>(dim)) {
    if (dim < 1) throw std::domain_error("FockVector: dim must be >= 1");
  }

  int dim() const { return static_cast<int>(amps.size()); }
  cdouble& operator[](int k) { return amps[static_cast<std::size_t>(k)]; }
  const cdouble& operator[](int k) const { return amps[static_cast<std::size_t>(k)]; }

  double norm_sq() const;
  double norm() const;
  bool is_zero(double eps = 0.0) const { return norm_sq() <= eps; }

  /// |amps[dim-1]|^2; the truncation-adequacy indicator.
  double tail_mass() const;

  /// Normalized copy; throws UnreachableOutcomeError on a zero vector.
  FockVector unit() const;

  /// <this|other>, zero-padding the shorter vector.
  cdouble overlap(const FockVector& other) const;

  /// |<a|b>|^2 of the normalized states.
  double fidelity(const FockVector& other) const;

  double mean_photon() const;
  double mean_photon_sq() const;
  std::vector<double> number_dist() const;

  /// Index of the last amplitude above `eps` in magnitude (-1 if none).
  int support_max(double eps = 1e-16) const;
};

struct CoherentParams {
  cdouble beta;
};

struct SqueezeParams {
  cdouble xi;
  /// kappa = -e^{i arg xi} tanh|xi|; |kappa| < 1 always.
  cdouble kappa() const;
};

/// Coherent state truncated to `dim` amplitudes and renormalized.
/// Throws TruncationError when the pre-normalization tail mass exceeds
/// `tail_threshold`.
FockVector coherent_state(const CoherentParams& p, int dim,
                          double tail_threshold = 1e-12);

/// Squeezed vacuum; even components only.
FockVector squeezed_vacuum(const SqueezeParams& p, int dim,
                           double tail_threshold = 1e-12);

/// Number state |k>.
FockVector fock_state(int k, int dim);

/// Copy of v with `extra` zero amplitudes appended (headroom for raising
/// operators).
FockVector padded(const FockVector& v, int extra);

/// Unnormalized (a^dag)^times v. The truncation window is kept fixed;
/// amplitude that would cross the top edge raises TruncationError when its
/// squared magnitude exceeds `lost_tol` (relative to the input norm).
FockVector apply_creation(const FockVector& v, int times,
                          double lost_tol = 1e-12);

/// Unnormalized a^times v. A zero result is legal (it flags annihilation of
/// the entire support); callers check is_zero() before normalizing.
FockVector apply_annihilation(const FockVector& v, int times);

/// T^{n} v followed by normalization; |T| <= 1 required.
FockVector attenuate(const FockVector& v, cdouble T);

/// Same scaling without the normalization step (building block for the
/// conditional-state sums, where the overall norm is the observable).
FockVector attenuate_raw(const FockVector& v, cdouble T);

/// Smallest dimension satisfying the adaptive truncation rule for a
/// coherent-scale input of amplitude |beta| mixed with n extra photons and
/// conditioned on m counts.
int adaptive_dim(double beta_abs, int n, int m);

}  // namespace qse

#endif
