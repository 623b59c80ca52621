#include "eur/scan.hpp"

#include <cmath>

#include "eur/generators.hpp"
#include "eur/io.hpp"

namespace eur {

void ScanSpec::validate() const {
  if (steps < 2) throw InvalidInput("scan requires steps >= 2 (got " + std::to_string(steps) + ")");
  if (!std::isfinite(start) || !std::isfinite(stop) || !(start < stop))
    throw InvalidInput("scan requires finite start < stop (got " + detail::str(start) + ":" +
                       detail::str(stop) + ")");
  if (!std::isfinite(fixed)) throw InvalidInput("scan requires a finite fixed parameter");
  if (bounds.empty()) throw InvalidInput("scan requires at least one bound");
  for (BoundName name : bounds) {
    if (name == BoundName::MemoryMulti || name == BoundName::MemoryPure ||
        name == BoundName::BertaTwo || name == BoundName::StateDependent)
      throw InvalidInput("bound " + std::string(to_string(name)) + " needs a state and cannot be scanned");
  }
  const double a_lo = parameter == ScanParameter::A ? start : fixed;
  const double a_hi = parameter == ScanParameter::A ? stop : fixed;
  if (a_lo < 0.0 || a_hi > 1.0) throw InvalidInput("paper-d3 requires 0 <= a <= 1");
}

double ScanSpec::grid_point(int k) const {
  if (k == steps - 1) return stop;
  return start + (stop - start) * static_cast<double>(k) / static_cast<double>(steps - 1);
}

std::vector<ScanRow> run_scan(const ScanSpec& spec) {
  spec.validate();
  std::vector<ScanRow> rows;
  rows.reserve(static_cast<std::size_t>(spec.steps));
  for (int k = 0; k < spec.steps; ++k) {
    ScanRow row;
    const double x = spec.grid_point(k);
    row.a = spec.parameter == ScanParameter::A ? x : spec.fixed;
    row.phi = spec.parameter == ScanParameter::Phi ? x : spec.fixed;
    const auto chain = paper_d3_bases<double>({row.a, row.phi});
    const auto reports = bound_reports<double>(chain, {}, {.best_order = spec.best_order});
    for (BoundName name : spec.bounds) {
      auto it = std::find_if(reports.begin(), reports.end(),
                             [&](const auto& r) { return r.bound_name == name; });
      row.values.push_back(it->value);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string scan_csv(const ScanSpec& spec, const std::vector<ScanRow>& rows) {
  std::string out = "a,phi";
  for (BoundName name : spec.bounds) out += "," + column_name(name);
  out += "\n";
  for (const auto& row : rows) {
    out += format_number(row.a, 12) + "," + format_number(row.phi, 12);
    for (double v : row.values) out += "," + format_number(v, 12);
    out += "\n";
  }
  return out;
}

}  // namespace eur
