#include "zb/zero_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace zb {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double sign_of(double v) { return v >= 0.0 ? 1.0 : -1.0; }

}  // namespace

void tridiagonal_eigen(std::vector<double>& d, std::vector<double>& e) {
  const int n = static_cast<int>(d.size());
  if (n == 0) return;
  if (static_cast<int>(e.size()) < n) e.resize(n, 0.0);
  e[n - 1] = 0.0;

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= kEps * dd) break;
      }
      if (m != l) {
        if (iter++ == 60) {
          throw std::runtime_error(
              "tridiagonal_eigen: implicit QL failed to converge");
        }
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double bb = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * bb;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - bb;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }

  std::sort(d.begin(), d.end());
}

namespace {

// Safeguarded Newton inside a sign-change bracket; returns the polished root
// and fills the scaled residual.
double polish_root(const FamilySpec& spec, int k, double x0, double lo,
                   double hi, double tol, double* residual) {
  const double sign_lo = sign_of(eval_poly(spec, k, lo).value);
  double x = x0;
  PolyEval pe = eval_poly(spec, k, x);
  for (int it = 0; it < 60 && pe.value != 0.0 && pe.derivative != 0.0; ++it) {
    const double step = pe.value / pe.derivative;
    if (std::fabs(step) <= tol * std::max(1.0, std::fabs(x))) {
      // Converged; the increment may be below the ulp of x, so take it and
      // stop before the bracket logic can reject the no-op move.
      x -= step;
      pe = eval_poly(spec, k, x);
      break;
    }
    if (sign_of(pe.value) == sign_lo) {
      lo = x;
    } else {
      hi = x;
    }
    double next = x - step;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    x = next;
    pe = eval_poly(spec, k, x);
  }
  if (residual) {
    *residual = (pe.derivative == 0.0)
                    ? std::fabs(pe.value)
                    : std::fabs(pe.value / pe.derivative) / std::max(1.0, std::fabs(x));
  }
  return x;
}

std::vector<double> eigen_zeros(const FamilySpec& spec, int k) {
  JacobiMatrix m = jacobi_matrix(spec, k);
  tridiagonal_eigen(m.diag, m.offdiag);
  return m.diag;
}

ZeroSet polished_zero_set(const FamilySpec& spec, int k, double tol,
                          std::vector<double> raw) {
  ZeroSet zs;
  zs.degree = k;
  zs.tol = tol;
  const int n = static_cast<int>(raw.size());
  zs.zeros.resize(n);
  zs.residuals.resize(n);
  // One local gap of slack beyond the end nodes; anything wider lets a
  // rejected step bisect far away from the (already accurate) eigenvalue.
  const double end_pad =
      (n > 1) ? raw[n - 1] - raw[n - 2] : std::max(1.0, std::fabs(raw[0]));
  const double front_pad = (n > 1) ? raw[1] - raw[0] : end_pad;
  for (int i = 0; i < n; ++i) {
    // Midpoints to the neighbours bracket each simple zero.
    const double gap_lo =
        (i > 0) ? 0.5 * (raw[i - 1] + raw[i]) : raw[i] - front_pad;
    const double gap_hi =
        (i + 1 < n) ? 0.5 * (raw[i] + raw[i + 1]) : raw[i] + end_pad;
    zs.zeros[i] = polish_root(spec, k, raw[i], gap_lo, gap_hi, tol, &zs.residuals[i]);
  }
  std::sort(zs.zeros.begin(), zs.zeros.end());
  return zs;
}

}  // namespace

std::vector<double> ZeroSet::positive() const {
  std::vector<double> out;
  for (double z : zeros) {
    if (z > 0.0) out.push_back(z);
  }
  return out;
}

ZeroSet zeros(const FamilySpec& spec, int k, double tol) {
  validate(spec);
  if (k < 1 || k > kOracleDegreeMax) {
    throw std::domain_error("zeros: degree out of range [1, 2000]");
  }
  if (tol < 1e-14) throw std::domain_error("zeros: tol must be >= 1e-14");

  if (const auto* h = std::get_if<GeneralizedHermite>(&spec)) {
    // Parity reduction: the positive zeros are the square roots of the
    // degree-(k/2) Laguerre zeros; odd degrees add the origin.
    const int m = k / 2;
    const double alpha = (k % 2 == 1) ? h->mu + 0.5 : h->mu - 0.5;
    ZeroSet zs;
    zs.degree = k;
    zs.tol = tol;
    if (m >= 1) {
      const FamilySpec lag{Laguerre{alpha}};
      std::vector<double> raw = eigen_zeros(lag, m);
      for (double& z : raw) z = std::sqrt(std::max(z, 0.0));
      // Polish in x on the full family so residuals certify the actual
      // polynomial, not the reduced one.
      const double end_pad = (m > 1) ? raw[m - 1] - raw[m - 2] : 0.5 * raw[0];
      for (int i = 0; i < m; ++i) {
        const double lo = (i > 0) ? 0.5 * (raw[i - 1] + raw[i]) : 0.5 * raw[i];
        const double hi =
            (i + 1 < m) ? 0.5 * (raw[i] + raw[i + 1]) : raw[i] + end_pad;
        double res = 0.0;
        raw[i] = polish_root(spec, k, raw[i], lo, hi, tol, &res);
        zs.residuals.push_back(res);
      }
      for (int i = m - 1; i >= 0; --i) {
        zs.zeros.push_back(-raw[i]);
      }
      if (k % 2 == 1) zs.zeros.push_back(0.0);
      zs.zeros.insert(zs.zeros.end(), raw.begin(), raw.end());
      // Mirror residuals; the origin zero is exact by construction.
      const std::vector<double> pos_res = zs.residuals;
      zs.residuals.assign(pos_res.rbegin(), pos_res.rend());
      if (k % 2 == 1) zs.residuals.push_back(0.0);
      zs.residuals.insert(zs.residuals.end(), pos_res.begin(), pos_res.end());
    } else if (k == 1) {
      zs.zeros = {0.0};
      zs.residuals = {0.0};
    }
    return zs;
  }

  return polished_zero_set(spec, k, tol, eigen_zeros(spec, k));
}

double largest_zero(const FamilySpec& spec, int k, double tol) {
  validate(spec);
  if (k < 1) throw std::domain_error("largest_zero: degree must be >= 1");
  const DiscriminantWindow w = discriminant_window(spec, k);
  // All zeros lie strictly below y2; a monic polynomial with real zeros is
  // positive and convex there, so Newton descends monotonically to the
  // largest zero.
  double x = w.y2;
  for (int it = 0; it < 500; ++it) {
    const PolyEval pe = eval_poly(spec, k, x);
    if (pe.derivative == 0.0) break;
    const double step = pe.value / pe.derivative;
    if (step <= 0.0) break;  // at or below the zero, within rounding
    x -= step;
    if (step <= tol * std::max(1.0, std::fabs(x))) break;
  }
  return x;
}

double bessel_series(double nu, double x, double* term_scale) {
  const double q = 0.25 * x * x;
  double term = std::exp(-std::lgamma(nu + 1.0));
  double sum = term;
  double max_term = std::fabs(term);
  for (int i = 0; i < 100000; ++i) {
    term *= -q / ((i + 1.0) * (i + nu + 1.0));
    sum += term;
    max_term = std::max(max_term, std::fabs(term));
    if (std::fabs(term) <= 1e-20 * max_term && (i + 1.0) * (i + nu + 1.0) > q) {
      break;
    }
  }
  if (term_scale) *term_scale = max_term;
  return sum;
}

namespace {

// u near its first zero for large nu: the alternating series cancels beyond
// double precision there (the largest term exceeds the sum by ~e^(0.5 nu)),
// so evaluate through the Bessel backward recurrence instead.  Miller's
// scheme with the Neumann normalization sum_k c_k J_{nu+2k}(x) =
// (x/2)^nu / Gamma(nu+1), c_0 = 1, c_k = (nu+2k) Gamma(nu+k) / (k! Gamma(nu+1)),
// returns u(x) = (x/2)^(-nu) J_nu(x) up to full working accuracy.
double bessel_u_miller(double nu, double x) {
  const int m_half =
      static_cast<int>(std::ceil(0.5 * (std::max(x - nu, 0.0) +
                                        12.0 * std::cbrt(std::max(x, 1.0)) + 30.0)));
  const int M = 2 * m_half;
  std::vector<double> c(m_half + 1);
  c[0] = 1.0;
  const double lg_nu1 = std::lgamma(nu + 1.0);
  for (int k = 1; k <= m_half; ++k) {
    c[k] = (nu + 2.0 * k) *
           std::exp(std::lgamma(nu + k) - std::lgamma(k + 1.0) - lg_nu1);
  }
  double f_hi = 0.0;        // J_{nu+n+1} (scaled)
  double f_lo = 1e-280;     // J_{nu+n}   (scaled)
  double norm = (M % 2 == 0) ? c[m_half] * f_lo : 0.0;
  for (int n = M; n >= 1; --n) {
    const double f_prev = (2.0 * (nu + n) / x) * f_lo - f_hi;
    f_hi = f_lo;
    f_lo = f_prev;
    if ((n - 1) % 2 == 0) norm += c[(n - 1) / 2] * f_lo;
    if (std::fabs(f_lo) > 1e250) {
      f_lo *= 1e-250;
      f_hi *= 1e-250;
      norm *= 1e-250;
    }
  }
  // f_lo/norm = J_nu(x) Gamma(nu+1) (2/x)^nu = Gamma(nu+1) u(x)
  return (f_lo / norm) * std::exp(-lg_nu1);
}

double bessel_u(double nu, double x) {
  return (nu <= 15.0) ? bessel_series(nu, x) : bessel_u_miller(nu, x);
}

}  // namespace

double bessel_first_zero(double nu, double tol) {
  validate(BesselSpec{nu});
  if (nu > 100.0) throw std::domain_error("bessel_first_zero: nu must be <= 100");
  if (tol < 1e-14) tol = 1e-14;

  // The function is positive below its least positive zero, which exceeds
  // nu + 1/2.  The step stays below the width of the first negative lobe
  // (~1.39 nu^(1/3) for large nu) so the lobe cannot be skipped.
  const double step = std::max(0.5, std::cbrt(std::max(nu, 1.0)));
  double lo = nu + 0.5;
  double flo = bessel_u(nu, lo);
  if (flo <= 0.0) {
    // Already past the zero (cannot happen for valid nu); fall back to 0+.
    lo = 1e-8;
    flo = bessel_u(nu, lo);
  }
  double hi = lo;
  double fhi = flo;
  bool bracketed = false;
  for (int i = 0; i < 10000; ++i) {
    hi = lo + step;
    fhi = bessel_u(nu, hi);
    if (fhi <= 0.0) {
      bracketed = true;
      break;
    }
    lo = hi;
    flo = fhi;
  }
  if (!bracketed) {
    throw std::runtime_error("bessel_first_zero: no sign change within step cap");
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= tol * std::max(1.0, mid)) break;
    const double fm = bessel_u(nu, mid);
    if (fm <= 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

QuadratureRule gauss_weights(const FamilySpec& spec, int k) {
  validate(spec);
  if (k < 1 || k > kOracleDegreeMax) {
    throw std::domain_error("gauss_weights: degree out of range [1, 2000]");
  }
  // Nodes are the polished zeros.  Weights are reciprocal Christoffel sums
  // over the orthonormal recurrence, w_i = 1 / sum_{n<k} phat_n(x_i)^2:
  // every term is positive and the leading term is exact, so even the
  // dominant weight of a hard-edge parameter set (beta -> -1) keeps full
  // relative accuracy, unlike the eigenvector route.
  const ZeroSet zs = zeros(spec, k);
  const JacobiMatrix m = jacobi_matrix(spec, k);
  const double mass = weight_mass(spec);
  QuadratureRule rule;
  rule.nodes = zs.zeros;
  rule.weights.resize(k);
  for (int i = 0; i < k; ++i) {
    const double x = zs.zeros[i];
    // q_n = sqrt(mass) * phat_n: q_0 = 1, so w_i = mass / sum q_n^2.
    double qa = 1.0;
    double qb = (k >= 2) ? (x - m.diag[0]) / m.offdiag[0] : 0.0;
    double sum = 1.0 + qb * qb;
    double log_rescale = 0.0;
    for (int n = 1; n <= k - 2; ++n) {
      const double qc =
          ((x - m.diag[n]) * qb - m.offdiag[n - 1] * qa) / m.offdiag[n];
      qa = qb;
      qb = qc;
      sum += qc * qc;
      if (sum > 1e260) {
        qa *= 1e-130;
        qb *= 1e-130;
        sum *= 1e-260;
        log_rescale += 260.0 * M_LN10;
      }
    }
    rule.weights[i] = std::exp(std::log(mass) - std::log(sum) - log_rescale);
  }
  return rule;
}

double weight_moment(const FamilySpec& spec, int j) {
  validate(spec);
  if (j < 0) throw std::domain_error("weight_moment: j must be >= 0");
  if (const auto* h = std::get_if<GeneralizedHermite>(&spec)) {
    if (j % 2 == 1) return 0.0;
    return std::exp(std::lgamma(0.5 * j + h->mu + 0.5));
  }
  if (const auto* l = std::get_if<Laguerre>(&spec)) {
    return std::exp(std::lgamma(j + l->alpha + 1.0));
  }
  // Jacobi moments by the stable Pearson recursion
  //   (j + alpha + beta + 2) M_{j+1} = j M_{j-1} + (beta - alpha) M_j.
  const auto& jc = std::get<Jacobi>(spec);
  double m0 = weight_mass(spec);
  if (j == 0) return m0;
  double m1 = (jc.beta - jc.alpha) / (jc.alpha + jc.beta + 2.0) * m0;
  for (int i = 1; i < j; ++i) {
    const double m2 =
        (i * m0 + (jc.beta - jc.alpha) * m1) / (i + 2.0 + jc.alpha + jc.beta);
    m0 = m1;
    m1 = m2;
  }
  return m1;
}

}  // namespace zb
