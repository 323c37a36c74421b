#pragma once

#include <string>
#include <variant>
#include <vector>

namespace zb {

// Weight |x|^(2*mu) exp(-x^2) on (-inf, inf); requires mu > -1/2.
struct GeneralizedHermite {
  double mu = 0.0;
};

// Weight x^alpha exp(-x) on [0, inf); requires alpha > -1.
struct Laguerre {
  double alpha = 0.0;
};

// Weight (1-x)^alpha (1+x)^beta on [-1, 1]; requires alpha, beta > -1.
struct Jacobi {
  double alpha = 0.0;
  double beta = 0.0;
};

using FamilySpec = std::variant<GeneralizedHermite, Laguerre, Jacobi>;

// u(x) = sum_i (-1)^i (x/2)^(2i) / (i! Gamma(i+nu+1)); shares its positive
// zeros with x^(-nu) J_nu(x).  Requires nu > -1/2.
struct BesselSpec {
  double nu = 0.0;
};

// Throw std::domain_error when the family parameters violate the
// orthogonality constraints above.
void validate(const FamilySpec& spec);
void validate(const BesselSpec& spec);

std::string family_name(const FamilySpec& spec);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Coefficients of the normalized second-order equation
//
//     f'' - 2 a(x) f' + b(x) f = 0
//
// for the degree-k member of a polynomial family, or for the entire Bessel
// function u above.  All evaluators are closed forms; discriminant(x) is
// b(x) - a(x)^2.
class OdeCoefficients {
 public:
  static OdeCoefficients hermite(int k, double mu);
  static OdeCoefficients laguerre(int k, double alpha);
  static OdeCoefficients jacobi(int k, double alpha, double beta);
  static OdeCoefficients bessel(double nu);

  double a(double x) const;
  double b(double x) const;
  double da(double x) const;   // a'
  double d2a(double x) const;  // a''
  double db(double x) const;   // b'
  double discriminant(double x) const { return b(x) - a(x) * a(x); }

  // Open interval on which the equation (and the coefficient formulas) hold.
  Interval domain() const { return domain_; }
  int degree() const { return k_; }
  // Parity term of the generalized Hermite equation: 0 for even degree,
  // 2*mu for odd degree; 0 for every other family.
  double theta() const { return theta_; }

  // True where a coefficient evaluator has a pole (x = 0 for the generalized
  // Hermite family with mu != 0; never for Hermite mu = 0, Laguerre and
  // Jacobi poles are outside the zero range).
  bool singular_at(double x) const;

 private:
  enum class Kind { Hermite, Laguerre, Jacobi, Bessel };
  Kind kind_;
  int k_ = 0;
  double p1_ = 0.0;  // mu / alpha / nu
  double p2_ = 0.0;  // beta
  double theta_ = 0.0;
  Interval domain_{};
};

OdeCoefficients ode_coefficients(const FamilySpec& spec, int k);
OdeCoefficients ode_coefficients(const BesselSpec& spec);

// Roots y1 < y2 of the discriminant, bracketing the region where
// discriminant > 0 inside window_domain.  For the generalized Hermite family
// with mu != 0 this is the positive-axis component (y1 clamped to 0, flagged,
// when the discriminant stays positive down to the origin); for mu = 0 the
// component is symmetric about the origin.  For the Bessel equation y2 is
// +infinity.
struct DiscriminantWindow {
  double y1 = 0.0;
  double y2 = 0.0;
  Interval window_domain{};
  bool clamped = false;
};

DiscriminantWindow discriminant_window(const FamilySpec& spec, int k);
DiscriminantWindow discriminant_window(const BesselSpec& spec);

// Value and first derivative of the monic degree-k member, as
// value * exp(log_scale) and derivative * exp(log_scale).  log_scale is 0
// until the recurrence renormalizes to dodge overflow; value keeps the true
// sign and value/derivative is the true Newton ratio either way.
struct PolyEval {
  double value = 0.0;
  double derivative = 0.0;
  double log_scale = 0.0;
};

PolyEval eval_poly(const FamilySpec& spec, int k, double x);

// Symmetric tridiagonal Jacobi matrix of the monic three-term recurrence:
// eigenvalues are the zeros of the degree-k member.  offdiag has k-1 strictly
// positive entries.
struct JacobiMatrix {
  std::vector<double> diag;
  std::vector<double> offdiag;
};

JacobiMatrix jacobi_matrix(const FamilySpec& spec, int k);

// Total mass of the orthogonality weight (mu_0), used by the quadrature rule.
double weight_mass(const FamilySpec& spec);

}  // namespace zb
