#include "zb/families.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace zb {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_odd(int k) { return (k % 2) != 0; }

void require(bool ok, const char* msg) {
  if (!ok) throw std::domain_error(msg);
}

void require_degree(int k) {
  require(k >= 1, "polynomial degree k must be >= 1");
}

}  // namespace

void validate(const FamilySpec& spec) {
  std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GeneralizedHermite>) {
          require(s.mu > -0.5, "generalized Hermite requires mu > -1/2");
        } else if constexpr (std::is_same_v<T, Laguerre>) {
          require(s.alpha > -1.0, "Laguerre requires alpha > -1");
        } else {
          require(s.alpha > -1.0 && s.beta > -1.0,
                  "Jacobi requires alpha > -1 and beta > -1");
        }
      },
      spec);
}

void validate(const BesselSpec& spec) {
  require(spec.nu > -0.5, "Bessel requires nu > -1/2");
}

std::string family_name(const FamilySpec& spec) {
  if (std::holds_alternative<GeneralizedHermite>(spec)) return "hermite";
  if (std::holds_alternative<Laguerre>(spec)) return "laguerre";
  return "jacobi";
}

OdeCoefficients OdeCoefficients::hermite(int k, double mu) {
  validate(FamilySpec{GeneralizedHermite{mu}});
  require_degree(k);
  OdeCoefficients c;
  c.kind_ = Kind::Hermite;
  c.k_ = k;
  c.p1_ = mu;
  c.theta_ = is_odd(k) ? 2.0 * mu : 0.0;
  c.domain_ = (mu == 0.0) ? Interval{-kInf, kInf} : Interval{0.0, kInf};
  return c;
}

OdeCoefficients OdeCoefficients::laguerre(int k, double alpha) {
  validate(FamilySpec{Laguerre{alpha}});
  require_degree(k);
  OdeCoefficients c;
  c.kind_ = Kind::Laguerre;
  c.k_ = k;
  c.p1_ = alpha;
  c.domain_ = {0.0, kInf};
  return c;
}

OdeCoefficients OdeCoefficients::jacobi(int k, double alpha, double beta) {
  validate(FamilySpec{Jacobi{alpha, beta}});
  require_degree(k);
  OdeCoefficients c;
  c.kind_ = Kind::Jacobi;
  c.k_ = k;
  c.p1_ = alpha;
  c.p2_ = beta;
  c.domain_ = {-1.0, 1.0};
  return c;
}

OdeCoefficients OdeCoefficients::bessel(double nu) {
  validate(BesselSpec{nu});
  OdeCoefficients c;
  c.kind_ = Kind::Bessel;
  c.k_ = 0;
  c.p1_ = nu;
  c.domain_ = {0.0, kInf};
  return c;
}

double OdeCoefficients::a(double x) const {
  switch (kind_) {
    case Kind::Hermite:
      return (p1_ == 0.0) ? x : x - p1_ / x;
    case Kind::Laguerre:
      return (x - (p1_ + 1.0)) / (2.0 * x);
    case Kind::Jacobi: {
      const double s = p1_ + p2_ + 1.0, q = p1_ - p2_;
      return ((s + 1.0) * x + q) / (2.0 * (1.0 - x * x));
    }
    case Kind::Bessel:
      return -(2.0 * p1_ + 1.0) / (2.0 * x);
  }
  return 0.0;
}

double OdeCoefficients::b(double x) const {
  switch (kind_) {
    case Kind::Hermite:
      return (theta_ == 0.0) ? 2.0 * k_ : 2.0 * k_ - theta_ / (x * x);
    case Kind::Laguerre:
      return static_cast<double>(k_) / x;
    case Kind::Jacobi: {
      const double s = p1_ + p2_ + 1.0;
      return k_ * (k_ + s) / (1.0 - x * x);
    }
    case Kind::Bessel:
      return 1.0;
  }
  return 0.0;
}

double OdeCoefficients::da(double x) const {
  switch (kind_) {
    case Kind::Hermite:
      return (p1_ == 0.0) ? 1.0 : 1.0 + p1_ / (x * x);
    case Kind::Laguerre:
      return (p1_ + 1.0) / (2.0 * x * x);
    case Kind::Jacobi: {
      const double s = p1_ + p2_ + 1.0, q = p1_ - p2_;
      const double om = 1.0 - x * x;
      return ((s + 1.0) * x * x + 2.0 * q * x + (s + 1.0)) / (2.0 * om * om);
    }
    case Kind::Bessel:
      return (2.0 * p1_ + 1.0) / (2.0 * x * x);
  }
  return 0.0;
}

double OdeCoefficients::d2a(double x) const {
  switch (kind_) {
    case Kind::Hermite:
      return (p1_ == 0.0) ? 0.0 : -2.0 * p1_ / (x * x * x);
    case Kind::Laguerre:
      return -(p1_ + 1.0) / (x * x * x);
    case Kind::Jacobi: {
      const double s = p1_ + p2_ + 1.0, q = p1_ - p2_;
      const double om = 1.0 - x * x;
      return ((s + 1.0) * x * x * x + 3.0 * q * x * x + 3.0 * (s + 1.0) * x + q) /
             (om * om * om);
    }
    case Kind::Bessel:
      return -(2.0 * p1_ + 1.0) / (x * x * x);
  }
  return 0.0;
}

double OdeCoefficients::db(double x) const {
  switch (kind_) {
    case Kind::Hermite:
      return (theta_ == 0.0) ? 0.0 : 2.0 * theta_ / (x * x * x);
    case Kind::Laguerre:
      return -static_cast<double>(k_) / (x * x);
    case Kind::Jacobi: {
      const double s = p1_ + p2_ + 1.0;
      const double om = 1.0 - x * x;
      return 2.0 * k_ * (k_ + s) * x / (om * om);
    }
    case Kind::Bessel:
      return 0.0;
  }
  return 0.0;
}

bool OdeCoefficients::singular_at(double x) const {
  switch (kind_) {
    case Kind::Hermite:
      return (p1_ != 0.0 || theta_ != 0.0) && x == 0.0;
    case Kind::Laguerre:
    case Kind::Bessel:
      return x == 0.0;
    case Kind::Jacobi:
      return x == 1.0 || x == -1.0;
  }
  return false;
}

OdeCoefficients ode_coefficients(const FamilySpec& spec, int k) {
  return std::visit(
      [k](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GeneralizedHermite>) {
          return OdeCoefficients::hermite(k, s.mu);
        } else if constexpr (std::is_same_v<T, Laguerre>) {
          return OdeCoefficients::laguerre(k, s.alpha);
        } else {
          return OdeCoefficients::jacobi(k, s.alpha, s.beta);
        }
      },
      spec);
}

OdeCoefficients ode_coefficients(const BesselSpec& spec) {
  return OdeCoefficients::bessel(spec.nu);
}

DiscriminantWindow discriminant_window(const FamilySpec& spec, int k) {
  validate(spec);
  if (k < 1) throw std::domain_error("polynomial degree k must be >= 1");
  DiscriminantWindow w;
  if (const auto* h = std::get_if<GeneralizedHermite>(&spec)) {
    const double mu = h->mu;
    const double theta = is_odd(k) ? 2.0 * mu : 0.0;
    const double r = std::sqrt(k * static_cast<double>(k) + 2.0 * k * mu - theta);
    const double t1 = k + mu - r;
    const double y2 = std::sqrt(k + mu + r);
    if (mu == 0.0 && theta == 0.0) {
      // No coefficient pole: the positive-discriminant set is one interval
      // symmetric about the origin.
      w.y1 = -y2;
      w.y2 = y2;
      w.window_domain = {-kInf, kInf};
    } else {
      w.clamped = t1 < 0.0;
      w.y1 = std::sqrt(std::max(t1, 0.0));
      w.y2 = y2;
      w.window_domain = {0.0, kInf};
    }
  } else if (const auto* l = std::get_if<Laguerre>(&spec)) {
    const double rt = std::sqrt(k + l->alpha + 1.0) - std::sqrt(static_cast<double>(k));
    const double st = std::sqrt(k + l->alpha + 1.0) + std::sqrt(static_cast<double>(k));
    w.y1 = rt * rt;
    w.y2 = st * st;
    w.window_domain = {0.0, kInf};
  } else {
    const auto& j = std::get<Jacobi>(spec);
    const double s = j.alpha + j.beta + 1.0;
    const double q = j.alpha - j.beta;
    const double r = 2.0 * k + j.alpha + j.beta + 1.0;
    const double R = std::sqrt((r * r - q * q + 2.0 * s + 1.0) * (r * r - s * s));
    const double den = r * r + 2.0 * s + 1.0;
    w.y1 = -(R + q * (s + 1.0)) / den;
    w.y2 = (R - q * (s + 1.0)) / den;
    w.window_domain = {-1.0, 1.0};
  }
  return w;
}

DiscriminantWindow discriminant_window(const BesselSpec& spec) {
  validate(spec);
  DiscriminantWindow w;
  w.y1 = spec.nu + 0.5;
  w.y2 = kInf;
  w.window_domain = {0.0, kInf};
  return w;
}

namespace {

// Renormalized monic recurrence: p_{n+1} = (x - A_n) p_n - B_n p_{n-1} with
// the derivative carried alongside; all four state values share one scale.
struct RecurrenceState {
  double p0 = 1.0, p1 = 0.0;  // p_{n-1}, p_n
  double d0 = 0.0, d1 = 0.0;  // derivatives
  double log_scale = 0.0;

  void init(double first_p, double first_d) {
    p0 = 1.0;
    d0 = 0.0;
    p1 = first_p;
    d1 = first_d;
  }

  void step(double x, double A, double B) {
    const double p2 = (x - A) * p1 - B * p0;
    const double d2 = p1 + (x - A) * d1 - B * d0;
    p0 = p1;
    p1 = p2;
    d0 = d1;
    d1 = d2;
    const double m = std::max(std::max(std::fabs(p0), std::fabs(p1)),
                              std::max(std::fabs(d0), std::fabs(d1)));
    if (m > 1e250 || (m > 0.0 && m < 1e-250)) {
      p0 /= m;
      p1 /= m;
      d0 /= m;
      d1 /= m;
      log_scale += std::log(m);
    }
  }
};

PolyEval eval_laguerre(int k, double alpha, double x) {
  if (k == 0) return {1.0, 0.0, 0.0};
  RecurrenceState st;
  st.init(x - (alpha + 1.0), 1.0);
  for (int n = 1; n < k; ++n) {
    st.step(x, 2.0 * n + alpha + 1.0, n * (n + alpha));
  }
  return {st.p1, st.d1, st.log_scale};
}

double jacobi_diag(int n, double alpha, double beta) {
  if (n == 0) return (beta - alpha) / (alpha + beta + 2.0);
  const double t = 2.0 * n + alpha + beta;
  return (beta * beta - alpha * alpha) / (t * (t + 2.0));
}

double jacobi_offdiag_sq(int n, double alpha, double beta) {
  if (n == 1) {
    const double t = 2.0 + alpha + beta;
    return 4.0 * (1.0 + alpha) * (1.0 + beta) / (t * t * (t + 1.0));
  }
  const double t = 2.0 * n + alpha + beta;
  return 4.0 * n * (n + alpha) * (n + beta) * (n + alpha + beta) /
         (t * t * (t + 1.0) * (t - 1.0));
}

PolyEval eval_jacobi(int k, double alpha, double beta, double x) {
  if (k == 0) return {1.0, 0.0, 0.0};
  RecurrenceState st;
  st.init(x - jacobi_diag(0, alpha, beta), 1.0);
  for (int n = 1; n < k; ++n) {
    st.step(x, jacobi_diag(n, alpha, beta), jacobi_offdiag_sq(n, alpha, beta));
  }
  return {st.p1, st.d1, st.log_scale};
}

}  // namespace

PolyEval eval_poly(const FamilySpec& spec, int k, double x) {
  validate(spec);
  if (k < 0) throw std::domain_error("polynomial degree k must be >= 0");
  if (!std::isfinite(x)) throw std::domain_error("eval_poly requires finite x");
  if (const auto* h = std::get_if<GeneralizedHermite>(&spec)) {
    // Parity reduction: p_{2m}(x) = L_m(x^2) with alpha = mu - 1/2,
    // p_{2m+1}(x) = x L_m(x^2) with alpha = mu + 1/2 (monic throughout).
    const int m = k / 2;
    const double z = x * x;
    if (is_odd(k)) {
      const PolyEval q = eval_laguerre(m, h->mu + 0.5, z);
      return {x * q.value, q.value + 2.0 * z * q.derivative, q.log_scale};
    }
    if (k == 0) return {1.0, 0.0, 0.0};
    const PolyEval q = eval_laguerre(m, h->mu - 0.5, z);
    return {q.value, 2.0 * x * q.derivative, q.log_scale};
  }
  if (const auto* l = std::get_if<Laguerre>(&spec)) {
    return eval_laguerre(k, l->alpha, x);
  }
  const auto& j = std::get<Jacobi>(spec);
  return eval_jacobi(k, j.alpha, j.beta, x);
}

JacobiMatrix jacobi_matrix(const FamilySpec& spec, int k) {
  validate(spec);
  if (k < 1) throw std::domain_error("polynomial degree k must be >= 1");
  JacobiMatrix m;
  m.diag.assign(k, 0.0);
  m.offdiag.assign(k - 1, 0.0);
  if (const auto* h = std::get_if<GeneralizedHermite>(&spec)) {
    for (int n = 1; n < k; ++n) {
      const double bn = 0.5 * n + (is_odd(n) ? h->mu : 0.0);
      m.offdiag[n - 1] = std::sqrt(bn);
    }
  } else if (const auto* l = std::get_if<Laguerre>(&spec)) {
    for (int n = 0; n < k; ++n) m.diag[n] = 2.0 * n + l->alpha + 1.0;
    for (int n = 1; n < k; ++n) m.offdiag[n - 1] = std::sqrt(n * (n + l->alpha));
  } else {
    const auto& j = std::get<Jacobi>(spec);
    for (int n = 0; n < k; ++n) m.diag[n] = jacobi_diag(n, j.alpha, j.beta);
    for (int n = 1; n < k; ++n) {
      m.offdiag[n - 1] = std::sqrt(jacobi_offdiag_sq(n, j.alpha, j.beta));
    }
  }
  return m;
}

double weight_mass(const FamilySpec& spec) {
  validate(spec);
  if (const auto* h = std::get_if<GeneralizedHermite>(&spec)) {
    return std::exp(std::lgamma(h->mu + 0.5));
  }
  if (const auto* l = std::get_if<Laguerre>(&spec)) {
    return std::exp(std::lgamma(l->alpha + 1.0));
  }
  const auto& j = std::get<Jacobi>(spec);
  return std::exp((j.alpha + j.beta + 1.0) * std::log(2.0) +
                  std::lgamma(j.alpha + 1.0) + std::lgamma(j.beta + 1.0) -
                  std::lgamma(j.alpha + j.beta + 2.0));
}

}  // namespace zb
