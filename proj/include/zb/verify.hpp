#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "zb/bounds.hpp"
#include "zb/families.hpp"

namespace zb {

// Parameter grids for the oracle-vs-bound sweep.
struct SweepConfig {
  std::vector<double> hermite_mu;
  std::vector<double> laguerre_alpha;
  std::vector<std::pair<double, double>> jacobi_ab;  // alpha >= beta expected
  std::vector<int> degrees;
  double tol = 1e-12;
  bool run_numeric = true;
  bool run_resultant = true;
  bool run_reference = true;

  // The stock grids: mu in {-0.49,-0.25,0,0.5,1,5,25}, alpha in
  // {-0.99,-0.5,0,0.5,1,10,50}, all Jacobi pairs of that set with
  // alpha >= beta, k in 1..100 plus {200,500,1000,2000}.  kmax > 0 caps the
  // degree list (for quick runs).
  static SweepConfig defaults(int kmax = 0);
};

// One grid point of the sweep.  Bounds that a method does not provide (or
// whose hypotheses fail) are NaN and serialize as missing.  margin_lb and
// margin_ub are xmin_true - lb_closed and ub_closed - xmax_true; pass means
// both exceed 1e-9 * max(1, |zero|).  Degrees with no positive zero
// (generalized Hermite k = 1) pass vacuously with NaN extremes.
struct SweepRecord {
  std::string family;
  int k = 0;
  double param1;
  double param2;
  double xmin_true;
  double xmax_true;
  double lb_closed;
  double ub_closed;
  double lb_numeric;
  double ub_numeric;
  double ub_resultant;
  double ub_reference;
  double margin_lb;
  double margin_ub;
  bool pass = false;
  bool oracle_failed = false;
  bool hypothesis_swapped = false;

  SweepRecord();
};

// Deterministic: records are sorted by (family, k, param1, param2).  An
// oracle failure marks the record failed instead of aborting the sweep.
std::vector<SweepRecord> run_sweep(const SweepConfig& config);

enum class ReportFormat { Csv, Json };

// CSV columns: family,k,param1,param2,xmin_true,xmax_true,lb_closed,
// ub_closed,lb_numeric,ub_numeric,ub_resultant,ub_reference,margin_lb,
// margin_ub,pass.  Floats carry 17 significant digits; missing values are
// empty cells (CSV) or null (JSON).
std::string to_csv(const std::vector<SweepRecord>& records);
std::string to_json(const std::vector<SweepRecord>& records);
std::vector<SweepRecord> records_from_json(const std::string& text);

// Writes the serialized records; throws std::runtime_error with the path in
// the message on I/O failure.
void write_report(const std::vector<SweepRecord>& records, ReportFormat format,
                  const std::string& path);

// Second-term sharpness diagnostics.  For Hermite mu = 0 the scaled
// constants pin down the correction term of the extreme-zero location:
//   closed_const    = (sqrt(2k) - closed upper bound) * (2k)^(1/6)   == 1.5
//   oracle_const    = (sqrt(2k+1) - largest zero)     * (2k+1)^(1/6)
//   resultant_const = (sqrt(2k) - resultant bound)    * k^(1/6)
// For other families closed_const/oracle_const are the window-edge constants
// (y2 - x) * (4 |D'(y2)|)^(1/3), for which the closed form predicts 3.
struct SharpnessRow {
  int k = 0;
  double closed_const;
  double oracle_const;
  double resultant_const;
  bool oracle_ok = false;

  SharpnessRow();
};

enum class SharpnessRegime { FixedParameter, ParameterTimesK };

struct SharpnessSummary {
  std::string family;
  SharpnessRegime regime = SharpnessRegime::FixedParameter;
  std::vector<SharpnessRow> rows;
  // Reference constants the measured sequences are compared against.
  double ref_closed = 1.5;
  double ref_airy = 1.85575;
  double ref_resultant;  // 3 * 2^(-11/6)

  SharpnessSummary();
};

// k_list ascending.  Under ParameterTimesK the prototype's parameters are
// multiplied by k at each row (parameter-proportional regime).  Rows whose
// degree exceeds the oracle capability keep oracle_ok = false.
SharpnessSummary sharpness_constants(const FamilySpec& prototype,
                                     SharpnessRegime regime,
                                     const std::vector<int>& k_list);

// Chebyshev T_k diagnostics (Jacobi alpha = beta = -1/2, zeros
// cos((2i-1) pi / 2k) known analytically as a second oracle):
//   min_gap_ratio    = (smallest consecutive gap) / (its pairwise bound);
//                      at most sqrt((pi^2-1)/2) ~ 2.106
//   scaled_edge_gap  = (1 - closed upper bound) * k^2     -> ~0.72
//   true_edge_scaled = (1 - cos(pi/2k)) * k^2             -> pi^2/8
struct ChebyshevGapCheck {
  double min_gap_ratio = 0.0;
  double scaled_edge_gap = 0.0;
  double true_edge_scaled = 0.0;
};

ChebyshevGapCheck chebyshev_gap_check(int k);

}  // namespace zb
