#include "zb/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "zb/zero_oracle.hpp"

#include "json.hpp"

namespace zb {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kMarginTol = 1e-9;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

bool margin_ok(double margin, double zero) {
  return margin > kMarginTol * std::max(1.0, std::fabs(zero));
}

SweepRecord make_record(const FamilySpec& spec, int k, double p1, double p2,
                        const SweepConfig& cfg) {
  SweepRecord rec;
  rec.family = family_name(spec);
  rec.k = k;
  rec.param1 = p1;
  rec.param2 = p2;

  // Closed forms first: they define the pass criterion.
  ExtremeBounds closed;
  if (const auto* j = std::get_if<Jacobi>(&spec)) {
    const JacobiAdapted adapted = jacobi_bounds_any(k, j->alpha, j->beta);
    closed = adapted.bounds;
    rec.hypothesis_swapped = adapted.swapped;
  } else {
    closed = closed_form_bounds(spec, k);
  }
  rec.lb_closed = closed.min_zero_lower;
  rec.ub_closed = closed.max_zero_upper;

  if (cfg.run_numeric) {
    try {
      const ExtremeBounds num = numeric_window_bounds(spec, k);
      rec.lb_numeric = num.min_zero_lower;
      rec.ub_numeric = num.max_zero_upper;
    } catch (const std::domain_error&) {
      // degenerate window; leave missing
    }
  }
  if (cfg.run_resultant) {
    if (const auto* h = std::get_if<GeneralizedHermite>(&spec); h && h->mu == 0.0) {
      rec.ub_resultant = hermite_resultant_bound(k);
    }
  }
  if (cfg.run_reference) {
    try {
      rec.ub_reference = reference_bounds(spec, k).max_zero_upper;
    } catch (const std::domain_error&) {
      // out of hypothesis; leave missing
    }
  }

  try {
    const ZeroSet zs = zeros(spec, k, cfg.tol);
    const bool positive_only = std::holds_alternative<GeneralizedHermite>(spec);
    std::vector<double> relevant =
        positive_only ? zs.positive() : zs.zeros;
    if (relevant.empty()) {
      rec.pass = true;  // no positive zeros to bracket (k = 1): vacuous
      return rec;
    }
    rec.xmin_true = relevant.front();
    rec.xmax_true = relevant.back();
    rec.margin_lb = rec.xmin_true - rec.lb_closed;
    rec.margin_ub = rec.ub_closed - rec.xmax_true;
    rec.pass = margin_ok(rec.margin_lb, rec.xmin_true) &&
               margin_ok(rec.margin_ub, rec.xmax_true);
  } catch (const std::exception&) {
    rec.oracle_failed = true;
    rec.pass = false;
  }
  return rec;
}

nlohmann::json value_or_null(double v) {
  if (std::isnan(v)) return nullptr;
  return v;
}

double value_from_json(const nlohmann::json& j) {
  if (j.is_null()) return kNaN;
  return j.get<double>();
}

}  // namespace

SweepRecord::SweepRecord()
    : param1(kNaN),
      param2(kNaN),
      xmin_true(kNaN),
      xmax_true(kNaN),
      lb_closed(kNaN),
      ub_closed(kNaN),
      lb_numeric(kNaN),
      ub_numeric(kNaN),
      ub_resultant(kNaN),
      ub_reference(kNaN),
      margin_lb(kNaN),
      margin_ub(kNaN) {}

SharpnessRow::SharpnessRow()
    : closed_const(kNaN), oracle_const(kNaN), resultant_const(kNaN) {}

SharpnessSummary::SharpnessSummary()
    : ref_resultant(3.0 * std::pow(2.0, -11.0 / 6.0)) {}

SweepConfig SweepConfig::defaults(int kmax) {
  SweepConfig cfg;
  cfg.hermite_mu = {-0.49, -0.25, 0.0, 0.5, 1.0, 5.0, 25.0};
  cfg.laguerre_alpha = {-0.99, -0.5, 0.0, 0.5, 1.0, 10.0, 50.0};
  for (double a : cfg.laguerre_alpha) {
    for (double b : cfg.laguerre_alpha) {
      if (a >= b) cfg.jacobi_ab.emplace_back(a, b);
    }
  }
  for (int k = 1; k <= 100; ++k) cfg.degrees.push_back(k);
  for (int k : {200, 500, 1000, 2000}) cfg.degrees.push_back(k);
  if (kmax > 0) {
    std::erase_if(cfg.degrees, [kmax](int k) { return k > kmax; });
  }
  return cfg;
}

std::vector<SweepRecord> run_sweep(const SweepConfig& config) {
  std::vector<SweepRecord> records;
  for (double mu : config.hermite_mu) {
    for (int k : config.degrees) {
      records.push_back(
          make_record(FamilySpec{GeneralizedHermite{mu}}, k, mu, kNaN, config));
    }
  }
  for (double alpha : config.laguerre_alpha) {
    for (int k : config.degrees) {
      records.push_back(
          make_record(FamilySpec{Laguerre{alpha}}, k, alpha, kNaN, config));
    }
  }
  for (const auto& [a, b] : config.jacobi_ab) {
    for (int k : config.degrees) {
      records.push_back(make_record(FamilySpec{Jacobi{a, b}}, k, a, b, config));
    }
  }
  std::sort(records.begin(), records.end(),
            [](const SweepRecord& x, const SweepRecord& y) {
              if (x.family != y.family) return x.family < y.family;
              if (x.k != y.k) return x.k < y.k;
              if (x.param1 != y.param1) return x.param1 < y.param1;
              // param2 is NaN for the one-parameter families; NaN compares
              // false both ways, which is the equivalence we want.
              return x.param2 < y.param2;
            });
  return records;
}

std::string to_csv(const std::vector<SweepRecord>& records) {
  std::string out =
      "family,k,param1,param2,xmin_true,xmax_true,lb_closed,ub_closed,"
      "lb_numeric,ub_numeric,ub_resultant,ub_reference,margin_lb,margin_ub,"
      "pass\n";
  auto cell = [](double v) { return std::isnan(v) ? std::string() : fmt17(v); };
  for (const auto& r : records) {
    out += r.family;
    out += ',' + std::to_string(r.k);
    out += ',' + cell(r.param1);
    out += ',' + cell(r.param2);
    out += ',' + cell(r.xmin_true);
    out += ',' + cell(r.xmax_true);
    out += ',' + cell(r.lb_closed);
    out += ',' + cell(r.ub_closed);
    out += ',' + cell(r.lb_numeric);
    out += ',' + cell(r.ub_numeric);
    out += ',' + cell(r.ub_resultant);
    out += ',' + cell(r.ub_reference);
    out += ',' + cell(r.margin_lb);
    out += ',' + cell(r.margin_ub);
    out += ',';
    out += r.pass ? "true" : "false";
    out += '\n';
  }
  return out;
}

std::string to_json(const std::vector<SweepRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json j;
    j["family"] = r.family;
    j["k"] = r.k;
    j["param1"] = value_or_null(r.param1);
    j["param2"] = value_or_null(r.param2);
    j["xmin_true"] = value_or_null(r.xmin_true);
    j["xmax_true"] = value_or_null(r.xmax_true);
    j["lb_closed"] = value_or_null(r.lb_closed);
    j["ub_closed"] = value_or_null(r.ub_closed);
    j["lb_numeric"] = value_or_null(r.lb_numeric);
    j["ub_numeric"] = value_or_null(r.ub_numeric);
    j["ub_resultant"] = value_or_null(r.ub_resultant);
    j["ub_reference"] = value_or_null(r.ub_reference);
    j["margin_lb"] = value_or_null(r.margin_lb);
    j["margin_ub"] = value_or_null(r.margin_ub);
    j["pass"] = r.pass;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::vector<SweepRecord> records_from_json(const std::string& text) {
  const nlohmann::json arr = nlohmann::json::parse(text);
  std::vector<SweepRecord> records;
  for (const auto& j : arr) {
    SweepRecord r;
    r.family = j.at("family").get<std::string>();
    r.k = j.at("k").get<int>();
    r.param1 = value_from_json(j.at("param1"));
    r.param2 = value_from_json(j.at("param2"));
    r.xmin_true = value_from_json(j.at("xmin_true"));
    r.xmax_true = value_from_json(j.at("xmax_true"));
    r.lb_closed = value_from_json(j.at("lb_closed"));
    r.ub_closed = value_from_json(j.at("ub_closed"));
    r.lb_numeric = value_from_json(j.at("lb_numeric"));
    r.ub_numeric = value_from_json(j.at("ub_numeric"));
    r.ub_resultant = value_from_json(j.at("ub_resultant"));
    r.ub_reference = value_from_json(j.at("ub_reference"));
    r.margin_lb = value_from_json(j.at("margin_lb"));
    r.margin_ub = value_from_json(j.at("margin_ub"));
    r.pass = j.at("pass").get<bool>();
    records.push_back(std::move(r));
  }
  return records;
}

void write_report(const std::vector<SweepRecord>& records, ReportFormat format,
                  const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("write_report: cannot open '" + path + "' for writing");
  }
  out << (format == ReportFormat::Csv ? to_csv(records) : to_json(records));
  if (!out) {
    throw std::runtime_error("write_report: write to '" + path + "' failed");
  }
}

namespace {

FamilySpec scale_spec(const FamilySpec& prototype, SharpnessRegime regime, int k) {
  if (regime == SharpnessRegime::FixedParameter) return prototype;
  FamilySpec out = prototype;
  std::visit(
      [k](auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GeneralizedHermite>) {
          s.mu *= k;
        } else if constexpr (std::is_same_v<T, Laguerre>) {
          s.alpha *= k;
        } else {
          s.alpha *= k;
          s.beta *= k;
        }
      },
      out);
  return out;
}

bool is_plain_hermite(const FamilySpec& spec) {
  const auto* h = std::get_if<GeneralizedHermite>(&spec);
  return h && h->mu == 0.0;
}

// |D'(y2)| from the closed forms of each family's discriminant.
double window_edge_slope(const FamilySpec& spec, int k) {
  const OdeCoefficients c = ode_coefficients(spec, k);
  const DiscriminantWindow w = discriminant_window(spec, k);
  const double h = 1e-6 * std::max(1.0, std::fabs(w.y2));
  return std::fabs((c.discriminant(w.y2 - h) - c.discriminant(w.y2 + h)) /
                   (2.0 * h));
}

}  // namespace

SharpnessSummary sharpness_constants(const FamilySpec& prototype,
                                     SharpnessRegime regime,
                                     const std::vector<int>& k_list) {
  validate(prototype);
  SharpnessSummary summary;
  summary.family = family_name(prototype);
  summary.regime = regime;
  for (int k : k_list) {
    const FamilySpec spec = scale_spec(prototype, regime, k);
    SharpnessRow row;
    row.k = k;
    const ExtremeBounds closed = closed_form_bounds(spec, k);
    double x_max = kNaN;
    if (k <= kOracleDegreeMax) {
      const ZeroSet zs = zeros(spec, k);
      if (!zs.zeros.empty()) x_max = zs.zeros.back();
      row.oracle_ok = true;
    } else if (k <= 100000) {
      x_max = largest_zero(spec, k);
      row.oracle_ok = true;
    }
    if (is_plain_hermite(spec)) {
      const double two_k = 2.0 * k;
      row.closed_const = (std::sqrt(two_k) - closed.max_zero_upper) *
                         std::pow(two_k, 1.0 / 6.0);
      if (row.oracle_ok) {
        row.oracle_const = (std::sqrt(two_k + 1.0) - x_max) *
                           std::pow(two_k + 1.0, 1.0 / 6.0);
      }
      row.resultant_const = (std::sqrt(two_k) - hermite_resultant_bound(k)) *
                            std::pow(static_cast<double>(k), 1.0 / 6.0);
    } else {
      const double slope = window_edge_slope(spec, k);
      const double scale = std::cbrt(4.0 * slope);
      const DiscriminantWindow w = discriminant_window(spec, k);
      row.closed_const = (w.y2 - closed.max_zero_upper) * scale;
      if (row.oracle_ok) row.oracle_const = (w.y2 - x_max) * scale;
    }
    summary.rows.push_back(row);
  }
  return summary;
}

ChebyshevGapCheck chebyshev_gap_check(int k) {
  if (k < 2) throw std::domain_error("chebyshev_gap_check: k must be >= 2");
  ChebyshevGapCheck out;
  // Analytic zeros of T_k, ascending.
  std::vector<double> z(k);
  for (int i = 1; i <= k; ++i) {
    z[k - i] = std::cos((2.0 * i - 1.0) * M_PI / (2.0 * k));
  }
  int arg = 0;
  double min_gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i + 1 < k; ++i) {
    const double gap = z[i + 1] - z[i];
    if (gap < min_gap) {
      min_gap = gap;
      arg = i;
    }
  }
  const SpacingBound sb = [&] {
    const OdeCoefficients c = OdeCoefficients::jacobi(k, -0.5, -0.5);
    return spacing_from_discriminant(
        [&](double x) { return c.discriminant(x); }, z[arg], z[arg + 1]);
  }();
  out.min_gap_ratio = min_gap / std::sqrt(sb.gap_sq_lower);
  const ExtremeBounds jb = jacobi_bounds(k, -0.5, -0.5);
  out.scaled_edge_gap = (1.0 - jb.max_zero_upper) * k * static_cast<double>(k);
  out.true_edge_scaled =
      (1.0 - std::cos(M_PI / (2.0 * k))) * k * static_cast<double>(k);
  return out;
}

}  // namespace zb
