#pragma once

#include <vector>

#include "zb/families.hpp"

namespace zb {

// Ground-truth zero set of the degree-k family member.  zeros are strictly
// increasing; residuals[i] is the dimensionless certificate
// |p(x_i)/p'(x_i)| / max(1, |x_i|) of the Newton polish.
struct ZeroSet {
  int degree = 0;
  std::vector<double> zeros;
  std::vector<double> residuals;
  double tol = 0.0;

  // Positive zeros only (drops the origin zero of odd generalized Hermite).
  std::vector<double> positive() const;
};

inline constexpr int kOracleDegreeMax = 2000;

// Golub-Welsch eigenvalues polished by safeguarded Newton on the recurrence.
// Requires 1 <= k <= kOracleDegreeMax and tol >= 1e-14.  Throws
// std::runtime_error if the eigensolver fails to converge.
ZeroSet zeros(const FamilySpec& spec, int k, double tol = 1e-12);

// Largest zero only, by monotone Newton started just above the discriminant
// window; usable far beyond the eigenvalue path (k up to ~10^5).
double largest_zero(const FamilySpec& spec, int k, double tol = 1e-13);

// Least positive zero j_{nu,1} of the Bessel-type function u: bracketed by
// stepping right from nu + 1/2 until the series changes sign, then bisected.
// Requires -1/2 < nu <= 100.  Throws std::runtime_error when no sign change
// is found within the step cap.
double bessel_first_zero(double nu, double tol = 1e-12);

// Power-series value of u at x; term_scale receives the magnitude of the
// largest term.  The alternating sum is fully accurate at small orders but
// cancels catastrophically near the first zero once nu grows past ~20
// (bessel_first_zero switches to a backward-recurrence evaluator there).
double bessel_series(double nu, double x, double* term_scale = nullptr);

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss rule of the family: nodes are the degree-k zeros, weights are
// positive and sum to weight_mass(spec).
QuadratureRule gauss_weights(const FamilySpec& spec, int k);

// Exact weighted moment integral x^j over the family weight (the independent
// certificate for quadrature exactness tests).
double weight_moment(const FamilySpec& spec, int j);

// Implicit-shift QL eigensolver for a symmetric tridiagonal matrix.
// d (size n) and e (size n-1) are overwritten; on return d holds ascending
// eigenvalues.  Throws std::runtime_error after the per-eigenvalue
// iteration cap.
void tridiagonal_eigen(std::vector<double>& d, std::vector<double>& e);

}  // namespace zb
