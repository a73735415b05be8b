#ifndef QSE_JPSTATES_HPP
#define QSE_JPSTATES_HPP

#include <vector>

#include "qse/beamsplitter.hpp"
#include "qse/fock.hpp"

namespace qse {

/// Conditioning indices: n photons fed into the reference port, m photons
/// detected behind the beam splitter. nu < 0 is the photon-subtracted
/// regime, nu > 0 the photon-added one.
struct ConditionalIndices {
  int n = 0;
  int m = 0;

  ConditionalIndices(int n_, int m_) : n(n_), m(m_) {
    if (n_ < 0 || m_ < 0)
      throw std::domain_error("ConditionalIndices: n, m must be >= 0");
  }
  int nu() const { return n - m; }
  int mu() const { return nu() > 0 ? nu() : 0; }
  int delta() const { return mu() - nu(); }
};

/// A conditional state together with the quantities the tests compare:
/// the normalization constant of the defining operator sum and the event
/// probability.
struct ConditionalState {
  FockVector state;
  double norm_constant = 0.0;  // squared norm of the unnormalized sum
  double probability = 0.0;    // P(n, m)
};

/// Event probability from the operator-sum normalization constant:
/// P(n,m) = m! / (n! |T|^{2m} |R|^{2 nu}) * N_{n,m}.
double probability_from_norm_constant(double norm_constant,
                                      const ConditionalIndices& idx,
                                      const BeamSplitterParams& bs);

/// Termwise evaluation of the defining ladder-operator sum; works for any
/// input vector. Throws UnreachableOutcomeError on a zero-norm result.
ConditionalState jp_state_general(const FockVector& input,
                                  const ConditionalIndices& idx,
                                  const BeamSplitterParams& bs);

/// The same state built from the operator-valued Jacobi polynomial acting
/// diagonally in the number basis, followed by the residual ladder
/// operators. Returns the normalized state only (the closed form fixes the
/// state up to an overall constant).
FockVector jp_state_jacobi_form(const FockVector& input,
                                const ConditionalIndices& idx,
                                const BeamSplitterParams& bs);

/// Normalization constant of the coherent-input closed form (Laguerre
/// moment kernel), defined relative to the attenuated amplitude T*beta.
double coherent_norm_constant(const CoherentParams& beta,
                              const ConditionalIndices& idx,
                              const BeamSplitterParams& bs);

/// Coherent-input conditional state from the explicit Fock-amplitude sum.
ConditionalState psjp_pajp_coherent(const CoherentParams& beta,
                                    const ConditionalIndices& idx,
                                    const BeamSplitterParams& bs, int dim);

/// Squeezed-vacuum-input conditional state; only components with p - nu
/// even are populated (parity selection is built into the sum).
ConditionalState psjp_pajp_squeezed(const SqueezeParams& xi,
                                    const ConditionalIndices& idx,
                                    const BeamSplitterParams& bs, int dim);

/// The two mesoscopically distinct components whose sum recovers the
/// squeezed-input conditional state. Both are normalized; they share the
/// same norm, so the recombination is an equal-weight sum.
struct CatComponents {
  FockVector plus;
  FockVector minus;
  bool degenerate = false;  // kappa' == 0 collapses both onto one Fock state
};

CatComponents cat_split(const SqueezeParams& xi, const ConditionalIndices& idx,
                        const BeamSplitterParams& bs, int dim);

// ---- displacement / squeeze kernels ------------------------------------

/// Dense truncated displacement matrix <j|D(beta)|k>, Laguerre form,
/// row-major rows x cols.
std::vector<cdouble> displacement_matrix(cdouble beta, int rows, int cols);

/// D(beta) v computed in an adaptively padded basis; the returned vector
/// keeps the padded dimension. Norm defect beyond `norm_tol` raises
/// TruncationError.
FockVector displace(const FockVector& v, cdouble beta, double norm_tol = 1e-9);

/// Squeeze matrix columns <j|S(xi)|k> for k < cols, built by the exact
/// column recurrence seeded with the squeezed vacuum; `rows` rows are kept
/// and the recurrence is run in a padded basis so every kept entry is exact.
std::vector<cdouble> squeeze_matrix(const SqueezeParams& xi, int rows, int cols);

/// S(xi) v with adaptive padding and a norm-defect check.
FockVector squeeze_apply(const FockVector& v, const SqueezeParams& xi,
                         double norm_tol = 1e-9);

// ---- related state families ---------------------------------------------

/// Photon-added coherent state built from its displaced-Fock expansion.
FockVector photon_added_coherent_displacedfock(const CoherentParams& beta,
                                               int n, int dim);

/// Crescent state: displaced photon-added coherent state
/// D(-beta) (a^dag)^n |2 beta>, normalized.
FockVector near_photon_number_state(const CoherentParams& beta, int n, int dim);

/// One normally ordered term c * (a^dag)^create a^annihilate.
struct LadderTerm {
  int create = 0;
  int annihilate = 0;
  cdouble coeff;
};

/// Normal ordering of (a^dag + eps a)^n.
std::vector<LadderTerm> normal_order_coeffs(int n, cdouble epsilon);

/// Applies a normally ordered operator sum to a state (unnormalized).
FockVector apply_ladder_terms(const FockVector& v,
                              const std::vector<LadderTerm>& terms);

enum class LadderMode { Added, Subtracted };

struct SqueezedFockTerm {
  int fock = 0;
  cdouble weight;
};

/// Decomposition of (a^dag)^count S|0> (Added) or a^count S|0> (Subtracted)
/// over squeezed Fock states S|count - 2k>, plus the reconstructed vector.
struct SqueezedFockDecomposition {
  std::vector<SqueezedFockTerm> terms;
  FockVector reconstructed;  // normalized
};

SqueezedFockDecomposition photon_added_subtracted_squeezed_decomposition(
    const SqueezeParams& xi, int count, LadderMode mode, int dim);

/// Squeezed-state excitation D(beta) S^dag(xi) (a^dag)^n S(2 xi)|0>,
/// normalized. S(2 xi) doubles |xi| at fixed phase.
FockVector squeezed_state_excitation(const CoherentParams& beta,
                                     const SqueezeParams& xi, int n, int dim);

}  // namespace qse

#endif
