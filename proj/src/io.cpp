#include "eur/io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace eur {

namespace {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

void require_version(const json& doc) {
  if (!doc.is_object()) throw InvalidInput("top level must be an object");
  if (!doc.contains("format_version") || !doc["format_version"].is_number_integer())
    throw InvalidInput("missing integer 'format_version'");
  if (doc["format_version"].get<int>() != 1)
    throw InvalidInput("unsupported format_version " + doc["format_version"].dump() + " (expected 1)");
}

Eigen::Index require_dim(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<long long>() < 1)
    throw InvalidInput(std::string("'") + key + "' must be an integer >= 1");
  return doc[key].get<Eigen::Index>();
}

std::complex<double> parse_complex(const json& pair, const std::string& where) {
  if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
    throw InvalidInput(where + ": expected a [re, im] pair of numbers");
  return {pair[0].get<double>(), pair[1].get<double>()};
}

ComplexVector<double> parse_vector(const json& v, Eigen::Index length, const std::string& where) {
  if (!v.is_array() || static_cast<Eigen::Index>(v.size()) != length)
    throw InvalidInput(where + ": expected a list of " + std::to_string(length) + " [re, im] pairs");
  ComplexVector<double> out(length);
  for (Eigen::Index i = 0; i < length; ++i)
    out(i) = parse_complex(v[static_cast<std::size_t>(i)], where + "[" + std::to_string(i) + "]");
  return out;
}

std::string complex_text(std::complex<double> z) {
  return "[" + format_number(z.real(), 17) + ", " + format_number(z.imag(), 17) + "]";
}

std::string vector_text(const auto& v) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += complex_text(v(i));
  }
  return out + "]";
}

}  // namespace

std::string format_number(double value, int significant_digits) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant_digits, value);
  return buf;
}

MeasurementSet parse_measurement_set(const std::string& text) {
  const json doc = parse_json(text);
  require_version(doc);
  MeasurementSet set;
  set.dim = require_dim(doc, "dim");
  if (!doc.contains("bases") || !doc["bases"].is_array())
    throw InvalidInput("'bases' must be a list");
  const auto& bases = doc["bases"];
  for (std::size_t b = 0; b < bases.size(); ++b) {
    const std::string where = "bases[" + std::to_string(b) + "]";
    const auto& entry = bases[b];
    if (!entry.is_object()) throw InvalidInput(where + ": expected an object");
    std::string label;
    if (entry.contains("label")) {
      if (!entry["label"].is_string()) throw InvalidInput(where + ".label: expected a string");
      label = entry["label"].get<std::string>();
    }
    if (!entry.contains("vectors") || !entry["vectors"].is_array())
      throw InvalidInput(where + ".vectors: expected a list");
    const auto& vectors = entry["vectors"];
    if (static_cast<Eigen::Index>(vectors.size()) != set.dim)
      throw InvalidInput(where + ".vectors: expected " + std::to_string(set.dim) +
                         " vectors (dim), got " + std::to_string(vectors.size()));
    ComplexMatrix<double> columns(set.dim, set.dim);
    for (Eigen::Index k = 0; k < set.dim; ++k)
      columns.col(k) = parse_vector(vectors[static_cast<std::size_t>(k)], set.dim,
                                    where + ".vectors[" + std::to_string(k) + "]");
    set.bases.emplace_back(std::move(columns), label);
  }
  return set;
}

MeasurementSet read_measurement_set(const std::filesystem::path& path) {
  return parse_measurement_set(read_file(path));
}

std::string serialize_measurement_set(const MeasurementSet& set) {
  std::string out = "{\n";
  out += "  \"format_version\": " + std::to_string(set.format_version) + ",\n";
  out += "  \"dim\": " + std::to_string(set.dim) + ",\n";
  out += "  \"bases\": [\n";
  for (std::size_t b = 0; b < set.bases.size(); ++b) {
    const auto& basis = set.bases[b];
    out += "    {\n";
    out += "      \"label\": " + json(basis.label()).dump() + ",\n";
    out += "      \"vectors\": [\n";
    for (Eigen::Index k = 0; k < basis.dim(); ++k) {
      out += "        " + vector_text(basis.vector(k));
      out += k + 1 < basis.dim() ? ",\n" : "\n";
    }
    out += "      ]\n";
    out += b + 1 < set.bases.size() ? "    },\n" : "    }\n";
  }
  out += "  ]\n}\n";
  return out;
}

void write_measurement_set(const std::filesystem::path& path, const MeasurementSet& set) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path.string() + "'");
  out << serialize_measurement_set(set);
  if (!out) throw InvalidInput("failed writing '" + path.string() + "'");
}

StateInput<double> parse_state(const std::string& text) {
  const json doc = parse_json(text);
  require_version(doc);
  const Eigen::Index dim = require_dim(doc, "dim");
  const Eigen::Index dim_b = doc.contains("dim_b") ? require_dim(doc, "dim_b") : 1;
  const Eigen::Index total = dim * dim_b;
  const bool joint = doc.contains("dim_b");

  auto wrap = [&](DensityMatrixd rho) -> StateInput<double> {
    if (joint) return BipartiteStated(dim, dim_b, std::move(rho));
    return rho;
  };

  if (doc.contains("vector")) {
    return wrap(DensityMatrixd(PureStated(parse_vector(doc["vector"], total, "vector"))));
  }
  if (!doc.contains("matrix")) throw InvalidInput("state needs a 'vector' or a 'matrix'");
  const auto& rows = doc["matrix"];
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != total)
    throw InvalidInput("matrix: expected " + std::to_string(total) + " rows");
  ComplexMatrix<double> m(total, total);
  for (Eigen::Index i = 0; i < total; ++i)
    m.row(i) = parse_vector(rows[static_cast<std::size_t>(i)], total,
                            "matrix[" + std::to_string(i) + "]").transpose();
  return wrap(DensityMatrixd(m));
}

StateInput<double> read_state(const std::filesystem::path& path) {
  return parse_state(read_file(path));
}

std::string serialize_state(const DensityMatrixd& rho) {
  std::string out = "{\n  \"format_version\": 1,\n  \"dim\": " + std::to_string(rho.dim()) +
                    ",\n  \"matrix\": [\n";
  for (Eigen::Index i = 0; i < rho.dim(); ++i) {
    out += "    " + vector_text(rho.matrix().row(i));
    out += i + 1 < rho.dim() ? ",\n" : "\n";
  }
  return out + "  ]\n}\n";
}

}  // namespace eur
