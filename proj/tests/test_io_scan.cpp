#include "support.hpp"

#include <fstream>

#include "eur/io.hpp"
#include "eur/scan.hpp"

using namespace eur;

namespace {

std::string qubit_text(const std::string& vectors_of_second) {
  return R"({"format_version": 1, "dim": 2, "bases": [
    {"label": "z", "vectors": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]]},
    {"label": "x", "vectors": )" + vectors_of_second + "}]}";
}

}  // namespace

TEST_CASE("measurement set parses and validates") {
  const auto set = parse_measurement_set(
      qubit_text("[[[0.70710678118654752, 0], [0.70710678118654752, 0]], [[0.70710678118654752, 0], "
                 "[-0.70710678118654752, 0]]]"));
  CHECK(set.dim == 2);
  CHECK(set.bases.size() == 2);
  CHECK(set.bases[1].label() == "x");
  CHECK(mu_multi_bound(set.to_chain()) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("measurement set errors name the failing field") {
  CHECK_THROWS_WITH_AS(parse_measurement_set("{"), doctest::Contains("malformed JSON"), InvalidInput);
  CHECK_THROWS_WITH_AS(parse_measurement_set(R"({"dim": 2, "bases": []})"), doctest::Contains("format_version"),
                       InvalidInput);
  CHECK_THROWS_WITH_AS(parse_measurement_set(R"({"format_version": 2, "dim": 2, "bases": []})"),
                       doctest::Contains("unsupported format_version"), InvalidInput);
  CHECK_THROWS_WITH_AS(parse_measurement_set(qubit_text("[[[1, 0], [0, 0]], [[0, 0], [1]]]")),
                       doctest::Contains("bases[1].vectors[1][1]"), InvalidInput);
  CHECK_THROWS_WITH_AS(parse_measurement_set(qubit_text("[[[1, 0], [0, 0]]]")),
                       doctest::Contains("bases[1].vectors"), InvalidInput);
  CHECK_THROWS_WITH_AS(parse_measurement_set(qubit_text("[[[1, 0], [0, 0]], [[1, 0], [0, 0]]]")),
                       doctest::Contains("orthogonal"), InvalidInput);
  const auto single = parse_measurement_set(R"({"format_version": 1, "dim": 2, "bases": [
    {"label": "z", "vectors": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]]}]})");
  CHECK_THROWS_WITH_AS(single.to_chain(), doctest::Contains("chain requires N ≥ 2"), InvalidInput);
}

TEST_CASE("measurement set round-trips exactly") {
  Rng rng(71);
  MeasurementSet set;
  set.dim = 4;
  for (int k = 0; k < 3; ++k) set.bases.push_back(random_basis<double>(4, rng));
  set.bases[1] = MeasurementBasisd(set.bases[1].vectors(), "quote \" and \\ label");
  const std::string text = serialize_measurement_set(set);
  const auto back = parse_measurement_set(text);
  REQUIRE(back.bases.size() == 3);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(back.bases[k].vectors() == set.bases[k].vectors());
    CHECK(back.bases[k].label() == set.bases[k].label());
  }
  CHECK(serialize_measurement_set(back) == text);
}

TEST_CASE("state files") {
  const auto pure = parse_state(R"({"format_version": 1, "dim": 2, "vector": [[1, 0], [0, 0]]})");
  REQUIRE(std::holds_alternative<DensityMatrixd>(pure));
  CHECK(std::get<DensityMatrixd>(pure).purity() == doctest::Approx(1.0));

  const auto joint = parse_state(
      R"({"format_version": 1, "dim": 2, "dim_b": 2, "vector": [[0.70710678118654752, 0], [0, 0], [0, 0], [0.70710678118654752, 0]]})");
  REQUIRE(std::holds_alternative<BipartiteStated>(joint));
  CHECK(std::get<BipartiteStated>(joint).dim_b() == 2);

  Rng rng(72);
  const auto rho = random_density_matrix<double>(3, 2, rng);
  const auto back = parse_state(serialize_state(rho));
  CHECK(std::get<DensityMatrixd>(back).matrix() == rho.matrix());

  CHECK_THROWS_WITH_AS(parse_state(R"({"format_version": 1, "dim": 2})"), doctest::Contains("'vector' or a 'matrix'"),
                       InvalidInput);
  CHECK_THROWS_WITH_AS(parse_state(R"({"format_version": 1, "dim": 2, "matrix": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]]})"),
                       doctest::Contains("trace"), InvalidInput);
}

TEST_CASE("format_number") {
  CHECK(format_number(-0.0, 12) == "0");
  CHECK(format_number(0.1, 17) == "0.10000000000000001");
  CHECK(format_number(1.0 / 3.0, 12) == "0.333333333333");
}

TEST_CASE("scan over a at phi = pi/2") {
  ScanSpec spec;
  const auto rows = run_scan(spec);
  REQUIRE(rows.size() == 101);
  CHECK(rows.front().a == 0.0);
  CHECK(rows.back().a == 1.0);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& row = rows[k];
    CHECK(row.values[0] >= row.values[1] - 1e-9);
    const auto& mirror = rows[rows.size() - 1 - k];
    for (std::size_t c = 0; c < row.values.size(); ++c) CHECK(std::abs(row.values[c] - mirror.values[c]) < 1e-9);
  }
  const std::string csv = scan_csv(spec, rows);
  CHECK(csv.rfind("a,phi,mu_multi,scb_max,deutsch_multi\n", 0) == 0);
  CHECK(csv == scan_csv(spec, run_scan(spec)));
}

TEST_CASE("scan with two steps and custom bounds") {
  ScanSpec spec;
  spec.steps = 2;
  spec.bounds = {BoundName::MuMulti, BoundName::ScbMax};
  const auto rows = run_scan(spec);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].a == 0.0);
  CHECK(rows[1].a == 1.0);
  CHECK(scan_csv(spec, rows).rfind("a,phi,mu_multi,scb_max\n", 0) == 0);
}

TEST_CASE("scan spec validation") {
  ScanSpec spec;
  spec.steps = 1;
  CHECK_THROWS_WITH_AS(run_scan(spec), doctest::Contains("steps >= 2"), InvalidInput);
  spec = {};
  spec.start = 0.5;
  spec.stop = 0.5;
  CHECK_THROWS_WITH_AS(run_scan(spec), doctest::Contains("start < stop"), InvalidInput);
  spec = {};
  spec.stop = 1.5;
  CHECK_THROWS_AS(run_scan(spec), InvalidInput);
  spec = {};
  spec.bounds = {BoundName::MemoryMulti};
  CHECK_THROWS_AS(run_scan(spec), InvalidInput);
  spec = {};
  spec.parameter = ScanParameter::Phi;
  spec.start = 0;
  spec.stop = 3.14;
  spec.fixed = 0.3;
  CHECK(run_scan(spec).front().a == 0.3);
}
