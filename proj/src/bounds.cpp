#include "zb/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "zb/zero_oracle.hpp"

namespace zb {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double sixth_root(double t) { return std::pow(t, 1.0 / 6.0); }

double two_thirds_pow(double t) {
  const double c = std::cbrt(t);
  return c * c;
}

struct Extremum {
  double value = kInf;
  double arg = kNaN;
};

// Golden-section minimization on (a, b); never evaluates the endpoints.
Extremum golden_min(const std::function<double(double)>& f, double a, double b,
                    double tol_x) {
  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < 300 && (b - a) > tol_x; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  Extremum e;
  e.arg = 0.5 * (a + b);
  e.value = f(e.arg);
  return e;
}

// 64-point bracketing grid, then golden-section refinement of every local
// bracket (interior minima and both boundary cells); global best wins, so a
// non-unimodal objective is still handled.
Extremum minimize_on_window(const std::function<double(double)>& f, double lo,
                            double hi) {
  constexpr int kGrid = 64;
  const double width = hi - lo;
  const double tol_x =
      std::max(1e-12 * width, 8.0 * std::numeric_limits<double>::epsilon() *
                                  (std::fabs(lo) + std::fabs(hi)));
  std::vector<double> xs(kGrid), fs(kGrid);
  for (int j = 0; j < kGrid; ++j) {
    xs[j] = lo + width * (j + 1) / (kGrid + 1);
    fs[j] = f(xs[j]);
  }
  Extremum best;
  for (int j = 0; j < kGrid; ++j) {
    if (std::isfinite(fs[j]) && fs[j] < best.value) {
      best.value = fs[j];
      best.arg = xs[j];
    }
  }
  auto refine = [&](double a, double b) {
    const Extremum e = golden_min(f, a, b, tol_x);
    if (std::isfinite(e.value) && e.value < best.value) best = e;
  };
  if (fs[0] <= fs[1]) refine(lo, xs[1]);
  for (int j = 1; j + 1 < kGrid; ++j) {
    if (fs[j] <= fs[j - 1] && fs[j] <= fs[j + 1]) refine(xs[j - 1], xs[j + 1]);
  }
  if (fs[kGrid - 1] <= fs[kGrid - 2]) refine(xs[kGrid - 2], hi);
  return best;
}

double guarded_obj_low(const OdeCoefficients& c, double x) {
  const double d = c.discriminant(x);
  if (!(d > 0.0)) return kInf;
  return x + 1.0 / std::sqrt(d);
}

double guarded_obj_high_neg(const OdeCoefficients& c, double x) {
  const double d = c.discriminant(x);
  if (!(d > 0.0)) return kInf;
  return -(x - 1.0 / std::sqrt(d));
}

std::vector<double> real_cubic_roots(double a, double b, double c, double d) {
  std::vector<double> roots;
  if (a == 0.0) {
    if (b == 0.0) {
      if (c != 0.0) roots.push_back(-d / c);
      return roots;
    }
    const double disc = c * c - 4.0 * b * d;
    if (disc >= 0.0) {
      const double sq = std::sqrt(disc);
      roots.push_back((-c + sq) / (2.0 * b));
      roots.push_back((-c - sq) / (2.0 * b));
    }
    return roots;
  }
  // Depressed form t^3 + p2 t + q2, x = t - b/(3a).
  const double shift = b / (3.0 * a);
  const double p2 = (3.0 * a * c - b * b) / (3.0 * a * a);
  const double q2 =
      (2.0 * b * b * b - 9.0 * a * b * c + 27.0 * a * a * d) / (27.0 * a * a * a);
  const double disc = 0.25 * q2 * q2 + p2 * p2 * p2 / 27.0;
  if (disc > 0.0) {
    const double sq = std::sqrt(disc);
    const double u = std::cbrt(-0.5 * q2 + sq);
    const double v = std::cbrt(-0.5 * q2 - sq);
    roots.push_back(u + v - shift);
  } else if (p2 == 0.0 && q2 == 0.0) {
    roots.push_back(-shift);
  } else {
    const double m = 2.0 * std::sqrt(-p2 / 3.0);
    const double arg = std::clamp(3.0 * q2 / (p2 * m), -1.0, 1.0);
    const double phi = std::acos(arg) / 3.0;
    for (int i = 0; i < 3; ++i) {
      roots.push_back(m * std::cos(phi - 2.0 * M_PI * i / 3.0) - shift);
    }
  }
  // One Newton step per root against the original cubic tightens them up.
  for (double& r : roots) {
    const double fr = ((a * r + b) * r + c) * r + d;
    const double dfr = (3.0 * a * r + 2.0 * b) * r + c;
    if (dfr != 0.0) r -= fr / dfr;
  }
  return roots;
}

}  // namespace

BoundIntermediates::BoundIntermediates()
    : r(kNaN), s(kNaN), q(kNaN), R(kNaN), y1(kNaN), y2(kNaN), theta(kNaN) {}

ExtremeBounds::ExtremeBounds() : min_zero_lower(kNaN), max_zero_upper(kNaN) {}

double bessel_lower_bound(double nu) {
  validate(BesselSpec{nu});
  const double c = 2.0 * nu + 1.0;
  const double t = two_thirds_pow(c) + two_thirds_pow(2.0);
  return 0.5 * t * std::sqrt(t);
}

ExtremeBounds gen_hermite_bounds(int k, double mu) {
  const OdeCoefficients c = OdeCoefficients::hermite(k, mu);
  ExtremeBounds out;
  out.method = BoundMethod::ClosedForm;
  const double theta = c.theta();
  const double r = std::sqrt(k * static_cast<double>(k) + 2.0 * k * mu - theta);
  const double t1_raw = k + mu - r;
  const double t2 = k + mu + r;
  const double t1 = std::max(t1_raw, 0.0);
  out.clamped = t1_raw < 0.0;
  out.min_zero_lower = std::sqrt(t1) + 1.5 * sixth_root(t1 / (4.0 * r * r));
  out.max_zero_upper = std::sqrt(t2) - 1.5 * sixth_root(t2 / (4.0 * r * r));
  out.intermediates.r = r;
  out.intermediates.theta = theta;
  out.intermediates.y1 = std::sqrt(t1);
  out.intermediates.y2 = std::sqrt(t2);
  return out;
}

ExtremeBounds laguerre_bounds(int k, double alpha) {
  validate(FamilySpec{Laguerre{alpha}});
  if (k < 1) throw std::domain_error("laguerre_bounds: k must be >= 1");
  ExtremeBounds out;
  out.method = BoundMethod::ClosedForm;
  const double r = std::sqrt(k + alpha + 1.0) - std::sqrt(static_cast<double>(k));
  const double s = std::sqrt(k + alpha + 1.0) + std::sqrt(static_cast<double>(k));
  const double span = s * s - r * r;
  const double span_cbrt = std::cbrt(span);
  out.min_zero_lower = r * r + 3.0 * std::pow(r, 4.0 / 3.0) / span_cbrt;
  out.max_zero_upper = s * s - 3.0 * std::pow(s, 4.0 / 3.0) / span_cbrt + 2.0;
  out.intermediates.r = r;
  out.intermediates.s = s;
  out.intermediates.y1 = r * r;
  out.intermediates.y2 = s * s;
  return out;
}

ExtremeBounds jacobi_bounds(int k, double alpha, double beta) {
  validate(FamilySpec{Jacobi{alpha, beta}});
  if (k < 1) throw std::domain_error("jacobi_bounds: k must be >= 1");
  if (!(alpha >= beta)) {
    throw std::domain_error(
        "Jacobi closed-form bound requires alpha >= beta (use the symmetry "
        "adapter for alpha < beta)");
  }
  ExtremeBounds out;
  out.method = BoundMethod::ClosedForm;
  const double s = alpha + beta + 1.0;
  const double q = alpha - beta;
  const double r = 2.0 * k + alpha + beta + 1.0;
  const double R = std::sqrt((r * r - q * q + 2.0 * s + 1.0) * (r * r - s * s));
  const double den = r * r + 2.0 * s + 1.0;
  const double y1 = -(R + q * (s + 1.0)) / den;
  const double y2 = (R - q * (s + 1.0)) / den;
  const double edge = std::cbrt(2.0 * R);
  out.min_zero_lower = y1 + 3.0 * two_thirds_pow(1.0 - y1 * y1) / edge;
  out.max_zero_upper = y2 - 3.0 * two_thirds_pow(1.0 - y2 * y2) / edge +
                       4.0 * q * (s + 1.0) / (den * std::sqrt(den));
  out.intermediates.r = r;
  out.intermediates.s = s;
  out.intermediates.q = q;
  out.intermediates.R = R;
  out.intermediates.y1 = y1;
  out.intermediates.y2 = y2;
  return out;
}

JacobiAdapted jacobi_bounds_any(int k, double alpha, double beta) {
  JacobiAdapted out;
  if (alpha >= beta) {
    out.bounds = jacobi_bounds(k, alpha, beta);
    return out;
  }
  const ExtremeBounds mirrored = jacobi_bounds(k, beta, alpha);
  out.swapped = true;
  out.bounds = mirrored;
  out.bounds.min_zero_lower = -mirrored.max_zero_upper;
  out.bounds.max_zero_upper = -mirrored.min_zero_lower;
  out.bounds.intermediates.y1 = -mirrored.intermediates.y2;
  out.bounds.intermediates.y2 = -mirrored.intermediates.y1;
  out.bounds.intermediates.q = -mirrored.intermediates.q;
  return out;
}

ExtremeBounds closed_form_bounds(const FamilySpec& spec, int k) {
  if (const auto* h = std::get_if<GeneralizedHermite>(&spec)) {
    return gen_hermite_bounds(k, h->mu);
  }
  if (const auto* l = std::get_if<Laguerre>(&spec)) {
    return laguerre_bounds(k, l->alpha);
  }
  const auto& j = std::get<Jacobi>(spec);
  return jacobi_bounds(k, j.alpha, j.beta);
}

ExtremeBounds numeric_window_bounds(const FamilySpec& spec, int k) {
  const OdeCoefficients c = ode_coefficients(spec, k);
  DiscriminantWindow w = discriminant_window(spec, k);
  double lo = w.y1;
  const double hi = w.y2;
  if (std::holds_alternative<GeneralizedHermite>(spec)) {
    lo = std::max(lo, 0.0);  // positive-zero window
  }
  if (!(lo < hi)) throw std::domain_error("numeric_window_bounds: empty window");

  ExtremeBounds out;
  out.method = BoundMethod::NumericWindow;
  out.clamped = w.clamped;
  out.intermediates.y1 = lo;
  out.intermediates.y2 = hi;
  const Extremum mn =
      minimize_on_window([&](double x) { return guarded_obj_low(c, x); }, lo, hi);
  const Extremum mx = minimize_on_window(
      [&](double x) { return guarded_obj_high_neg(c, x); }, lo, hi);
  out.min_zero_lower = mn.value;
  out.max_zero_upper = -mx.value;
  return out;
}

ExtremeBounds numeric_window_bounds(const BesselSpec& spec) {
  const OdeCoefficients c = ode_coefficients(spec);
  const double lo = spec.nu + 0.5;
  // The minimizer sits within 2^(-4/3) (2 nu + 1)^(1/3) of the window edge;
  // this cap covers it with slack while keeping the search bounded.
  const double hi = lo + std::max(1.0, std::cbrt(2.0 * spec.nu + 1.0)) + 1.0;
  ExtremeBounds out;
  out.method = BoundMethod::NumericWindow;
  out.intermediates.y1 = lo;
  out.intermediates.y2 = kInf;
  const Extremum mn =
      minimize_on_window([&](double x) { return guarded_obj_low(c, x); }, lo, hi);
  out.min_zero_lower = mn.value;
  out.max_zero_upper = kInf;
  return out;
}

SpacingBound spacing_from_discriminant(const std::function<double(double)>& delta,
                                       double xi, double xj) {
  if (!(xi < xj)) throw std::domain_error("spacing bounds need xi < xj");
  constexpr int kGrid = 129;
  double dmax = -kInf;
  for (int j = 0; j < kGrid; ++j) {
    const double x = xi + (xj - xi) * j / (kGrid - 1);
    const double d = delta(x);
    if (!(d > 0.0)) {
      throw std::domain_error(
          "spacing bounds inapplicable: discriminant not positive on the "
          "interval");
    }
    dmax = std::max(dmax, d);
  }
  const Extremum refined = minimize_on_window(
      [&](double x) {
        const double d = delta(x);
        return (d > 0.0) ? -d : kInf;
      },
      xi, xj);
  dmax = std::max(dmax, -refined.value);
  SpacingBound out;
  out.xi = xi;
  out.xj = xj;
  out.gap_lower_simple = 2.0 / std::sqrt(dmax);
  out.gap_sq_lower = 8.0 / dmax;
  return out;
}

SpacingBound spacing_lower_bounds(const FamilySpec& spec, int k, int i, int j) {
  if (i < 0 || j >= k || i >= j) {
    throw std::domain_error("spacing_lower_bounds: need 0 <= i < j < k");
  }
  const ZeroSet zs = zeros(spec, k);
  const OdeCoefficients c = ode_coefficients(spec, k);
  return spacing_from_discriminant(
      [&](double x) { return c.discriminant(x); }, zs.zeros[i], zs.zeros[j]);
}

double zero_slack(const OdeCoefficients& c, double x) {
  if (c.singular_at(x)) {
    throw std::domain_error("zero_slack: coefficient pole at x");
  }
  return c.discriminant(x) - 2.0 * c.da(x);
}

LambdaFormReport zero_quartic_min(const OdeCoefficients& c, double x) {
  if (c.singular_at(x)) {
    throw std::domain_error("zero_quartic_min: coefficient pole at x");
  }
  const double A = c.a(x), A1 = c.da(x), A2 = c.d2a(x);
  const double B = c.b(x), B1 = c.db(x);
  // The lambda^4 and lambda^3 coefficients carry f''' and f'''' through the
  // equation; at a zero of a degree-1 or degree-2 solution they vanish
  // identically, and the degree-1 case kills the lower ones too (a(x_i) = 0
  // there).  Evaluating the formulas anyway returns pure cancellation noise
  // near a coefficient pole, so zero them structurally.
  const int deg = c.degree();
  double c4 = 0.0, c3 = 0.0, c2 = 0.0, c1 = 0.0;
  if (deg == 0 || deg >= 3) {  // entire (Bessel) case or high degree
    c4 = B * B - 8.0 * A * A * A1 - 4.0 * B * A1 + 4.0 * A1 * A1 +
         4.0 * A * B1 - 4.0 * A * A2;
    c3 = -4.0 * (A * B - 4.0 * A * A1 + B1 - A2);
  }
  if (deg != 1) {
    c2 = 2.0 * (2.0 * A * A + B - 2.0 * A1);
    c1 = -4.0 * A;
  }

  LambdaFormReport rep;
  rep.zero = x;
  rep.quad_value = zero_slack(c, x);
  rep.leading_coeff = c4;

  auto phi = [&](double l) {
    return (((c4 * l + c3) * l + c2) * l + c1) * l + 1.0;
  };
  const double scale = std::max(
      {1.0, std::fabs(c4), std::fabs(c3), std::fabs(c2), std::fabs(c1)});
  const double tau = 1e-10 * scale;

  if (c4 > tau) {
    const std::vector<double> crit =
        real_cubic_roots(4.0 * c4, 3.0 * c3, 2.0 * c2, c1);
    rep.quartic_min = kInf;
    for (double l : crit) {
      const double v = phi(l);
      if (v < rep.quartic_min) {
        rep.quartic_min = v;
        rep.argmin_lambda = l;
      }
    }
    return rep;
  }
  if (std::fabs(c3) > tau || c4 < -tau || c2 < -tau) {
    rep.unbounded = true;
    rep.quartic_min = -kInf;
    rep.argmin_lambda = kNaN;
    return rep;
  }
  if (c2 > tau) {
    rep.argmin_lambda = -c1 / (2.0 * c2);
    rep.quartic_min = phi(rep.argmin_lambda);
    return rep;
  }
  if (std::fabs(c1) > tau) {
    rep.unbounded = true;
    rep.quartic_min = -kInf;
    rep.argmin_lambda = kNaN;
    return rep;
  }
  rep.quartic_min = 1.0;
  rep.argmin_lambda = 0.0;
  return rep;
}

double hermite_resultant_bound(int k) {
  if (k < 1) throw std::domain_error("hermite_resultant_bound: k must be >= 1");
  const double kk = k;
  const double m = sixth_root(2.0 * kk + 2.0 +
                              std::sqrt(4.0 * kk * kk + 8.0 * kk + 5.0));
  const double m2 = m * m;
  const double t = m2 * m2 - 1.0;
  return t * std::sqrt(t) / (std::sqrt(2.0) * m2 * m);
}

ExtremeBounds reference_bounds(const FamilySpec& spec, int k) {
  validate(spec);
  if (k < 1) throw std::domain_error("reference_bounds: k must be >= 1");
  constexpr double kAiry = 1.85575;
  ExtremeBounds out;
  out.method = BoundMethod::ReferenceSzego;
  if (const auto* h = std::get_if<GeneralizedHermite>(&spec)) {
    if (h->mu != 0.0) {
      throw std::domain_error("reference bound for Hermite requires mu = 0");
    }
    const double t = 2.0 * k + 1.0;
    out.max_zero_upper = std::sqrt(t) - kAiry / sixth_root(t);
    return out;
  }
  if (const auto* l = std::get_if<Laguerre>(&spec)) {
    if (!(std::fabs(l->alpha) >= 0.25)) {
      throw std::domain_error(
          "reference bound for Laguerre requires |alpha| >= 1/4");
    }
    const double t = 4.0 * k + 2.0 * l->alpha + 2.0;
    const double root = std::sqrt(t) - kAiry / sixth_root(t);
    out.max_zero_upper = root * root;
    return out;
  }
  throw std::domain_error("reference bounds cover Hermite (mu=0) and Laguerre only");
}

}  // namespace zb
