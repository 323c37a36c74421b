#pragma once

#include <functional>

#include "zb/families.hpp"

namespace zb {

enum class BoundMethod {
  ClosedForm,
  NumericWindow,
  Resultant,
  ReferenceSzego,
};

// Intermediate quantities of the closed-form derivations; NaN when a symbol
// does not apply to the family at hand.
struct BoundIntermediates {
  double r;
  double s;
  double q;
  double R;
  double y1;
  double y2;
  double theta;

  BoundIntermediates();
};

// Two-sided enclosure of the extreme zeros: min_zero_lower is a lower bound
// on the least zero (least positive zero for the generalized Hermite family),
// max_zero_upper an upper bound on the largest zero.  A side that a method
// does not provide is NaN (reference bounds have no lower side; the Bessel
// equation has no largest zero, so its upper side is +infinity).
struct ExtremeBounds {
  double min_zero_lower;
  double max_zero_upper;
  BoundMethod method = BoundMethod::ClosedForm;
  BoundIntermediates intermediates;
  // Set when a radicand had to be clamped at zero (generalized Hermite with
  // k + mu - r < 0; the lower bound degenerates to the trivial 0).
  bool clamped = false;

  ExtremeBounds();
};

// Closed form ((2 nu + 1)^(2/3) + 2^(2/3))^(3/2) / 2, a strict lower bound on
// j_{nu,1}; exceeds nu + 1/2.  Requires nu > -1/2.
double bessel_lower_bound(double nu);

// Closed-form bounds on the least and largest positive zero of the degree-k
// generalized Hermite polynomial, mu > -1/2:
//   lower = sqrt(k+mu-r) + (3/2) ((k+mu-r)/(4 r^2))^(1/6)
//   upper = sqrt(k+mu+r) - (3/2) ((k+mu+r)/(4 r^2))^(1/6),
// r = sqrt(k^2 + 2 k mu - theta_k).  Caveat: for even k with mu < 0 the
// lower bound is not valid (a(x) misses the branch of f'/f through the
// origin, whose range there is (-inf, 0]); the verification sweep reports
// exactly that regime as bracketing failures.
ExtremeBounds gen_hermite_bounds(int k, double mu);

// Closed-form bounds for Laguerre, alpha > -1, with
// r = sqrt(k+alpha+1) - sqrt(k), s = sqrt(k+alpha+1) + sqrt(k):
//   lower = r^2 + 3 r^(4/3) (s^2-r^2)^(-1/3)
//   upper = s^2 - 3 s^(4/3) (s^2-r^2)^(-1/3) + 2.
ExtremeBounds laguerre_bounds(int k, double alpha);

// Closed-form bounds for Jacobi, alpha >= beta > -1 (throws
// std::domain_error otherwise; see jacobi_bounds_any for the symmetry
// adapter).  With s = alpha+beta+1, q = alpha-beta, r = 2k+alpha+beta+1,
// R = sqrt((r^2-q^2+2s+1)(r^2-s^2)):
//   lower = y1 + 3 (1-y1^2)^(2/3) (2R)^(-1/3)
//   upper = y2 - 3 (1-y2^2)^(2/3) (2R)^(-1/3) + 4q(s+1)/(r^2+2s+1)^(3/2).
ExtremeBounds jacobi_bounds(int k, double alpha, double beta);

// Symmetry adapter: for alpha < beta uses the reflected family (zeros of
// P^(a,b) are the negated zeros of P^(b,a)) and reports swapped = true.
struct JacobiAdapted {
  ExtremeBounds bounds;
  bool swapped = false;
};
JacobiAdapted jacobi_bounds_any(int k, double alpha, double beta);

// Dispatch to the family's closed form.
ExtremeBounds closed_form_bounds(const FamilySpec& spec, int k);

// Numeric version of the window bounds: extremize x + 1/sqrt(D(x)) (lower)
// and x - 1/sqrt(D(x)) (upper) over the discriminant window by a 64-point
// bracketing grid plus golden-section refinement of every candidate bracket.
// Never weaker than the closed forms (those relax this extremum).
ExtremeBounds numeric_window_bounds(const FamilySpec& spec, int k);
// Bessel analogue; only the lower side exists (max_zero_upper = +inf).
ExtremeBounds numeric_window_bounds(const BesselSpec& spec);

// Lower bounds on zero spacing derived from the discriminant:
//   gap_lower_simple = min over (xi,xj) of 2/sqrt(D)   (consecutive zeros)
//   gap_sq_lower     = min over (xi,xj) of 8/D         (any pair, squared gap)
// Both reduce to the maximum of D on [xi,xj], found by grid + golden section.
struct SpacingBound {
  double gap_lower_simple = 0.0;
  double gap_sq_lower = 0.0;
  double xi = 0.0;
  double xj = 0.0;
};

// i < j are 0-based indices into the oracle zero set of (spec, k).  Throws
// std::domain_error if the discriminant is not positive throughout the open
// interval (zeros outside the window, or a coefficient pole inside).
SpacingBound spacing_lower_bounds(const FamilySpec& spec, int k, int i, int j);

// Same bounds from a caller-supplied discriminant (for non-family equations
// such as f'' + f = 0, whose discriminant is identically 1).
SpacingBound spacing_from_discriminant(const std::function<double(double)>& delta,
                                       double xi, double xj);

// Nonnegativity certificate D(x) - 2 a'(x) valid at every zero x of a
// Laguerre-Polya solution of the equation; for Hermite mu=0 it equals
// 2k - x^2 - 2.  Throws std::domain_error at a coefficient pole.
double zero_slack(const OdeCoefficients& c, double x);

// Quartic certificate in the shift parameter lambda, from damping the
// solution twice (g = f - 2 lambda f' + lambda^2 f''): at a zero x of f,
//   phi(lambda) = (b^2 - 8a^2a' - 4ba' + 4a'^2 + 4ab' - 4aa'') lambda^4
//               - 4 (ab - 4aa' + b' - a'') lambda^3
//               + 2 (2a^2 + b - 2a') lambda^2 - 4a lambda + 1 >= 0,
// coefficients evaluated at x.  quartic_min is the minimum over real lambda
// (critical points via closed-form cubic roots, Newton-polished); when the
// polynomial is unbounded below (negative leading coefficient beyond
// tolerance -- a certificate violation at a true zero) unbounded is set and
// quartic_min is -infinity.
struct LambdaFormReport {
  double zero = 0.0;
  double quad_value = 0.0;    // the zero_slack value at the same point
  double quartic_min = 0.0;
  double argmin_lambda = 0.0;
  double leading_coeff = 0.0;
  bool unbounded = false;
};

LambdaFormReport zero_quartic_min(const OdeCoefficients& c, double x);

// Closed form from the resultant of the Hermite (mu = 0) quartic certificate:
//   m = (2k + 2 + sqrt(4k^2+8k+5))^(1/6),  bound = (m^4-1)^(3/2)/(sqrt(2) m^3)
// an upper bound on the largest zero; asymptotically
// sqrt(2k) - 3*2^(-11/6) k^(-1/6) + O(k^(-1/2)).
double hermite_resultant_bound(int k);

// Literature comparison bounds (upper side only):
//   Hermite mu=0:  sqrt(2k+1) - 1.85575 (2k+1)^(-1/6)
//   Laguerre, |alpha| >= 1/4:  (sqrt(4k+2a+2) - 1.85575 (4k+2a+2)^(-1/6))^2
// Throws std::domain_error outside those hypotheses.
ExtremeBounds reference_bounds(const FamilySpec& spec, int k);

}  // namespace zb
