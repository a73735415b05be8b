#ifndef QSE_NUMERICS_HPP
#define QSE_NUMERICS_HPP

#include <complex>
#include <stdexcept>
#include <variant>

namespace qse {

using cdouble = std::complex<double>;

/// ln(n!) from a cached table of accumulated logs.
double log_factorial(int n);

/// n! in double precision (exact up to n = 22, correctly rounded product above).
double factorial_d(int n);

/// ln C(n,k); requires 0 <= k <= n.
double log_binomial(int n, int k);

/// C(n,k) as a double.
double binomial_d(int n, int k);

/// Generalized binomial C(x, j) = x(x-1)...(x-j+1)/j! for real x, integer j >= 0.
/// Remains a polynomial in x, so negative and non-integer x are fine.
double gen_binomial(double x, int j);

/// Physicists' Hermite polynomial H_k(x), three-term recurrence.
double hermite(int k, double x);
cdouble hermite(int k, cdouble x);

/// Hermite function weight: h_k(x) = H_k(x) / sqrt(2^k k!), recurrence with
/// the normalization fused in so intermediate values stay representable.
/// psi_k(x) = pi^{-1/4} e^{-x^2/2} h_k(x) is the number-basis wavefunction.
void hermite_normalized_sequence(int kmax, double x, double* out);

/// Associated Laguerre L_n^a(x), three-term recurrence in n.
/// Valid for any real a, including negative integers (the recurrence is a
/// polynomial identity in a).
double laguerre(int n, double a, double x);
cdouble laguerre(int n, double a, cdouble x);

/// Sign and log-magnitude pair for values whose natural scale overflows.
struct SignedLog {
  double log_abs;  // ln|v|; -inf when v == 0
  double sign;     // -1, 0, +1
  double value() const;
};

/// Laguerre evaluated with dynamic rescaling; safe for n, a up to a few
/// hundred where the plain recurrence would overflow.
SignedLog laguerre_scaled(int n, double a, double x);

/// Jacobi polynomial P_l^{(a,b)}(z) via the explicit finite sum in (a, b).
/// Chosen over the classical recurrence because b is a (possibly negative)
/// integer shifted by a number operator in the conditional-state formulas,
/// where the recurrence has removable singularities.
double jacobi_poly(int l, double a, double b, double z);

/// Tagged family selector for the classical polynomials used here.
struct HermitePhysicists {};
struct AssociatedLaguerre { double alpha; };
struct Jacobi { double alpha; double beta; };
using PolynomialKind = std::variant<HermitePhysicists, AssociatedLaguerre, Jacobi>;

double evaluate_polynomial(const PolynomialKind& kind, int degree, double x);

}  // namespace qse

#endif
