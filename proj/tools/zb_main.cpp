// Command-line front end: extreme-zero bounds, oracle zeros, Bessel bounds,
// verification sweeps, sharpness studies, and spacing bounds.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "zb/bounds.hpp"
#include "zb/families.hpp"
#include "zb/verify.hpp"
#include "zb/zero_oracle.hpp"

namespace {

struct CommonOpts {
  std::string family = "hermite";
  int k = 1;
  double mu = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double nu = 0.0;
  double tol = 1e-12;
  std::string method = "all";
  std::string format = "table";
  std::string out;
  int kmax = 0;
  std::string klist;
};

std::string f17(double v) {
  if (std::isnan(v)) return "";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

zb::FamilySpec make_spec(const CommonOpts& o) {
  if (o.family == "hermite") return zb::GeneralizedHermite{o.mu};
  if (o.family == "laguerre") return zb::Laguerre{o.alpha};
  if (o.family == "jacobi") return zb::Jacobi{o.alpha, o.beta};
  throw std::domain_error("unknown family '" + o.family +
                          "' (expected hermite|laguerre|jacobi)");
}

// A row-oriented mini-table that can also render itself as CSV or JSON.
class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add_row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

  std::string render(const std::string& format) const {
    if (format == "csv") return render_csv();
    if (format == "json") return render_json();
    return render_table();
  }

 private:
  std::string render_csv() const {
    std::string out = join(columns_);
    for (const auto& r : rows_) out += join(r);
    return out;
  }

  std::string render_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows_) {
      nlohmann::json obj;
      for (size_t i = 0; i < columns_.size(); ++i) {
        if (r[i].empty()) {
          obj[columns_[i]] = nullptr;
        } else {
          obj[columns_[i]] = r[i];
        }
      }
      arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
  }

  std::string render_table() const {
    std::vector<size_t> w(columns_.size());
    for (size_t i = 0; i < columns_.size(); ++i) w[i] = columns_[i].size();
    for (const auto& r : rows_) {
      for (size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
    }
    std::string out;
    auto line = [&](const std::vector<std::string>& cells) {
      for (size_t i = 0; i < cells.size(); ++i) {
        out += cells[i];
        if (i + 1 < cells.size()) out.append(w[i] - cells[i].size() + 2, ' ');
      }
      out += '\n';
    };
    line(columns_);
    for (const auto& r : rows_) line(r);
    return out;
  }

  static std::string join(const std::vector<std::string>& cells) {
    std::string out;
    for (size_t i = 0; i < cells.size(); ++i) {
      out += cells[i];
      out += (i + 1 < cells.size()) ? "," : "\n";
    }
    return out;
  }

  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + out_path + "' for writing");
  f << text;
}

int cmd_bounds(const CommonOpts& o) {
  const zb::FamilySpec spec = make_spec(o);
  Table t({"method", "min_zero_lower", "max_zero_upper"});
  const bool all = o.method == "all";
  if (all || o.method == "closed") {
    zb::ExtremeBounds b;
    if (o.family == "jacobi") {
      const zb::JacobiAdapted a = zb::jacobi_bounds_any(o.k, o.alpha, o.beta);
      b = a.bounds;
      if (a.swapped) {
        std::cerr << "note: alpha < beta; bounds obtained from the reflected "
                     "family (alpha <-> beta, zeros negated)\n";
      }
    } else {
      b = zb::closed_form_bounds(spec, o.k);
    }
    t.add_row({"closed", f17(b.min_zero_lower), f17(b.max_zero_upper)});
  }
  if (all || o.method == "numeric") {
    const zb::ExtremeBounds b = zb::numeric_window_bounds(spec, o.k);
    t.add_row({"numeric", f17(b.min_zero_lower), f17(b.max_zero_upper)});
  }
  if (all || o.method == "resultant") {
    if (o.family == "hermite" && o.mu == 0.0) {
      t.add_row({"resultant", "", f17(zb::hermite_resultant_bound(o.k))});
    } else if (!all) {
      throw std::domain_error("resultant bound applies to Hermite mu = 0 only");
    }
  }
  if (all || o.method == "reference") {
    try {
      const zb::ExtremeBounds b = zb::reference_bounds(spec, o.k);
      t.add_row({"reference", "", f17(b.max_zero_upper)});
    } catch (const std::domain_error& e) {
      if (!all) throw;
    }
  }
  if (o.k <= zb::kOracleDegreeMax) {
    const zb::ZeroSet zs = zb::zeros(spec, o.k, o.tol);
    const auto rel = (o.family == "hermite") ? zs.positive() : zs.zeros;
    if (!rel.empty()) {
      t.add_row({"oracle", f17(rel.front()), f17(rel.back())});
    }
  }
  emit(t.render(o.format), o.out);
  return 0;
}

int cmd_zeros(const CommonOpts& o) {
  const zb::FamilySpec spec = make_spec(o);
  const zb::ZeroSet zs = zb::zeros(spec, o.k, o.tol);
  Table t({"i", "zero", "residual"});
  for (size_t i = 0; i < zs.zeros.size(); ++i) {
    t.add_row({std::to_string(i), f17(zs.zeros[i]), f17(zs.residuals[i])});
  }
  emit(t.render(o.format), o.out);
  return 0;
}

int cmd_bessel(const CommonOpts& o) {
  const double bound = zb::bessel_lower_bound(o.nu);
  const double oracle = zb::bessel_first_zero(o.nu, o.tol);
  Table t({"nu", "lower_bound", "oracle_j1", "margin"});
  t.add_row({f17(o.nu), f17(bound), f17(oracle), f17(oracle - bound)});
  emit(t.render(o.format), o.out);
  return (oracle > bound) ? 0 : 1;
}

int cmd_verify(const CommonOpts& o, const std::string& suite) {
  if (suite != "default") {
    throw std::domain_error("unknown suite '" + suite + "' (expected: default)");
  }
  if (!o.out.empty()) {
    // Fail on an unwritable path before spending time on the sweep.
    std::ofstream probe(o.out, std::ios::binary);
    if (!probe) {
      throw std::runtime_error("cannot open '" + o.out + "' for writing");
    }
  }
  const zb::SweepConfig cfg = zb::SweepConfig::defaults(o.kmax);
  const std::vector<zb::SweepRecord> records = zb::run_sweep(cfg);
  size_t failed = 0;
  for (const auto& r : records) {
    if (!r.pass) ++failed;
  }
  if (!o.out.empty()) {
    const auto fmt = (o.format == "json") ? zb::ReportFormat::Json
                                          : zb::ReportFormat::Csv;
    zb::write_report(records, fmt, o.out);
  } else {
    emit(o.format == "json" ? zb::to_json(records) : zb::to_csv(records), "");
  }
  std::cerr << "verify: " << records.size() - failed << "/" << records.size()
            << " records pass\n";
  return failed == 0 ? 0 : 1;
}

int cmd_sharpness(const CommonOpts& o) {
  std::vector<int> ks;
  std::stringstream ss(o.klist.empty() ? "10,100,1000,10000,1000000" : o.klist);
  for (std::string item; std::getline(ss, item, ',');) {
    ks.push_back(std::stoi(item));
  }
  const zb::FamilySpec spec = make_spec(o);
  const zb::SharpnessSummary s =
      zb::sharpness_constants(spec, zb::SharpnessRegime::FixedParameter, ks);
  Table t({"k", "closed_const", "oracle_const", "resultant_const"});
  for (const auto& row : s.rows) {
    t.add_row({std::to_string(row.k), f17(row.closed_const),
               row.oracle_ok ? f17(row.oracle_const) : "",
               f17(row.resultant_const)});
  }
  emit(t.render(o.format), o.out);
  std::cerr << "references: closed 1.5, second-term " << s.ref_airy
            << ", resultant " << f17(s.ref_resultant) << "\n";
  return 0;
}

int cmd_spacing(const CommonOpts& o, int i, int j) {
  const zb::FamilySpec spec = make_spec(o);
  Table t({"i", "j", "gap_true", "gap_lower_simple", "gap_sq_lower"});
  const zb::ZeroSet zs = zb::zeros(spec, o.k, o.tol);
  auto add_pair = [&](int a, int b) {
    const zb::SpacingBound sb = zb::spacing_lower_bounds(spec, o.k, a, b);
    t.add_row({std::to_string(a), std::to_string(b),
               f17(zs.zeros[b] - zs.zeros[a]), f17(sb.gap_lower_simple),
               f17(sb.gap_sq_lower)});
  };
  if (i >= 0 && j >= 0) {
    add_pair(i, j);
  } else {
    for (int a = 0; a + 1 < o.k; ++a) add_pair(a, a + 1);
  }
  emit(t.render(o.format), o.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounds on extreme zeros and zero spacings of classical "
               "orthogonal polynomials and Bessel functions"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string suite = "default";
  int pair_i = -1, pair_j = -1;

  auto add_common = [&](CLI::App* cmd, bool family_cmd) {
    if (family_cmd) {
      cmd->add_option("--family", o.family, "hermite|laguerre|jacobi");
      cmd->add_option("--k", o.k, "polynomial degree");
      cmd->add_option("--mu", o.mu, "generalized Hermite parameter");
      cmd->add_option("--alpha", o.alpha, "Laguerre/Jacobi parameter");
      cmd->add_option("--beta", o.beta, "Jacobi parameter");
    }
    cmd->add_option("--tol", o.tol, "oracle tolerance");
    cmd->add_option("--format", o.format, "table|csv|json");
    cmd->add_option("--out", o.out, "write output to this path");
  };

  CLI::App* bounds = app.add_subcommand("bounds", "extreme-zero bounds");
  add_common(bounds, true);
  bounds->add_option("--method", o.method, "closed|numeric|resultant|reference|all");

  CLI::App* zeros_cmd = app.add_subcommand("zeros", "oracle zeros with residuals");
  add_common(zeros_cmd, true);

  CLI::App* bessel = app.add_subcommand("bessel", "first Bessel zero bound vs oracle");
  bessel->add_option("--nu", o.nu, "Bessel order")->required();
  add_common(bessel, false);

  CLI::App* verify = app.add_subcommand("verify", "oracle-vs-bound sweep");
  verify->add_option("--suite", suite, "grid suite (default)");
  verify->add_option("--kmax", o.kmax, "cap the degree grid");
  add_common(verify, false);

  CLI::App* sharp = app.add_subcommand("sharpness", "second-term constants");
  add_common(sharp, true);
  sharp->add_option("--klist", o.klist, "comma-separated degree list");

  CLI::App* spacing = app.add_subcommand("spacing", "zero-spacing lower bounds");
  add_common(spacing, true);
  spacing->add_option("--i", pair_i, "first zero index (0-based)");
  spacing->add_option("--j", pair_j, "second zero index (0-based)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (bounds->parsed()) return cmd_bounds(o);
    if (zeros_cmd->parsed()) return cmd_zeros(o);
    if (bessel->parsed()) return cmd_bessel(o);
    if (verify->parsed()) return cmd_verify(o, suite);
    if (sharp->parsed()) return cmd_sharpness(o);
    if (spacing->parsed()) return cmd_spacing(o, pair_i, pair_j);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
