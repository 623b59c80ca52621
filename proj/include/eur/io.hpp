#ifndef EUR_IO_HPP
#define EUR_IO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "eur/bound_report.hpp"
#include "eur/types.hpp"

// Measurement-set and state files.
//
// Measurement set (format_version 1):
//   {
//     "format_version": 1,
//     "dim": 2,
//     "bases": [
//       {
//         "label": "computational",
//         "vectors": [
//           [[1, 0], [0, 0]],
//           [[0, 0], [1, 0]]
//         ]
//       }
//     ]
//   }
// Each vector is a list of dim [re, im] pairs. Numbers are written with 17
// significant digits so files round-trip exactly.
//
// State (format_version 1): "dim" plus either "vector" (a pure state, a list
// of [re, im]) or "matrix" (rows of [re, im]). An optional "dim_b" marks a
// joint state on A (x) B with dim = dimA and the vector/matrix of size
// dim * dim_b.

namespace eur {

struct MeasurementSet {
  int format_version = 1;
  Eigen::Index dim = 0;
  std::vector<MeasurementBasisd> bases;

  /// Throws InvalidInput("chain requires N ≥ 2") for a single basis.
  MeasurementChaind to_chain() const { return MeasurementChaind(bases); }
};

MeasurementSet parse_measurement_set(const std::string& text);
MeasurementSet read_measurement_set(const std::filesystem::path& path);
std::string serialize_measurement_set(const MeasurementSet& set);
void write_measurement_set(const std::filesystem::path& path, const MeasurementSet& set);

StateInput<double> parse_state(const std::string& text);
StateInput<double> read_state(const std::filesystem::path& path);
std::string serialize_state(const DensityMatrixd& rho);

/// Shortest "%.<digits>g" rendering, with -0 written as 0.
std::string format_number(double value, int significant_digits);

}  // namespace eur

#endif  // EUR_IO_HPP
