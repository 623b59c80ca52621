#ifndef EUR_SCAN_HPP
#define EUR_SCAN_HPP

#include <string>
#include <vector>

#include "eur/bound_report.hpp"

namespace eur {

enum class ScanParameter { A, Phi };

struct ScanSpec {
  ScanParameter parameter = ScanParameter::A;
  double start = 0.0;
  double stop = 1.0;
  int steps = 101;
  double fixed = 1.5707963267948966;  // value of the other parameter
  std::vector<BoundName> bounds{BoundName::MuMulti, BoundName::ScbMax, BoundName::DeutschMulti};
  bool best_order = true;

  /// Throws InvalidInput naming the violated condition.
  void validate() const;
  double grid_point(int k) const;
};

struct ScanRow {
  double a = 0;
  double phi = 0;
  std::vector<double> values;  // one per ScanSpec::bounds entry
};

/// Evaluates the requested pure-state bounds of the three-measurement d = 3
/// family on the grid.
std::vector<ScanRow> run_scan(const ScanSpec& spec);

/// Header "a,phi,<bound columns>" and one line per row, 12 significant digits.
std::string scan_csv(const ScanSpec& spec, const std::vector<ScanRow>& rows);

}  // namespace eur

#endif  // EUR_SCAN_HPP
