#include "qdis/state_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace qdis {

namespace {

json complex_json(const complex& z) {
  return json::array({z.real(), z.imag()});
}

json matrix_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(complex_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json vec3_json(const Vec3& v) { return json::array({v(0), v(1), v(2)}); }

}  // namespace

StateFile read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw FileFormatError("cannot open state file: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw FileFormatError("invalid JSON in " + path.string() + ": " +
                          e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("matrix"))
    throw FileFormatError("state file needs \"dim\" and \"matrix\" fields");
  if (!j["dim"].is_number_integer() || j["dim"].get<int>() != 4)
    throw FileFormatError("state file dim must be 4");
  const json& m = j["matrix"];
  if (!m.is_array() || m.size() != 4)
    throw FileFormatError("matrix must have 4 rows");
  StateFile out;
  for (int i = 0; i < 4; ++i) {
    const json& row = m[i];
    if (!row.is_array() || row.size() != 4)
      throw FileFormatError("matrix row " + std::to_string(i) +
                            " must have 4 entries");
    for (int k = 0; k < 4; ++k) {
      const json& entry = row[k];
      if (!entry.is_array() || entry.size() != 2 ||
          !entry[0].is_number() || !entry[1].is_number())
        throw FileFormatError("matrix entries must be [re, im] pairs");
      out.matrix(i, k) =
          complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  if (j.contains("label")) {
    if (!j["label"].is_string())
      throw FileFormatError("label must be a string");
    out.label = j["label"].get<std::string>();
  }
  return out;
}

json state_file_json(const Mat4& m, const std::optional<std::string>& label) {
  json j;
  j["dim"] = 4;
  if (label) j["label"] = *label;
  j["matrix"] = matrix_json(m);
  return j;
}

void write_state_file(const std::filesystem::path& path, const Mat4& m,
                      const std::optional<std::string>& label) {
  std::ofstream out(path);
  if (!out)
    throw FileFormatError("cannot write state file: " + path.string());
  out << state_file_json(m, label).dump(2) << '\n';
}

std::string format_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string region_name(Region region) {
  return region == Region::separability_correlation
             ? "separability_correlation"
             : "inseparability_correlation";
}

std::string verdict_name(Verdict verdict) {
  return verdict == Verdict::separable ? "separable" : "entangled";
}

std::string profile_csv_row(const CorrelationProfile& p) {
  std::ostringstream out;
  for (int i = 0; i < 3; ++i) out << format_double(p.singular_values(i)) << ',';
  for (int i = 0; i < 3; ++i) out << format_double(p.t_canonical(i)) << ',';
  out << format_double(p.trace_norm) << ',' << format_double(p.fef) << ','
      << format_double(p.ic) << ',' << region_name(p.region);
  return out.str();
}

std::string verdict_csv_row(const SeparabilityVerdict& v) {
  return verdict_name(v.verdict) + "," + format_double(v.min_pt_eigenvalue);
}

json decomposition_json(const BlochDecomposition& d) {
  json j;
  j["r"] = vec3_json(d.r);
  j["s"] = vec3_json(d.s);
  json t = json::array();
  for (int i = 0; i < 3; ++i)
    t.push_back(json::array({d.T(i, 0), d.T(i, 1), d.T(i, 2)}));
  j["T"] = t;
  return j;
}

json profile_json(const CorrelationProfile& p) {
  json j;
  j["sigma"] = vec3_json(p.singular_values);
  j["t_canonical"] = vec3_json(p.t_canonical);
  j["N"] = p.trace_norm;
  j["f"] = p.fef;
  j["Ic"] = p.ic;
  j["region"] = region_name(p.region);
  return j;
}

json verdict_json(const SeparabilityVerdict& v) {
  json j;
  j["verdict"] = verdict_name(v.verdict);
  j["min_pt_eigenvalue"] = v.min_pt_eigenvalue;
  j["negativity_margin"] = v.negativity_margin;
  return j;
}

json report_json(const DisentanglementReport& r) {
  json j;
  j["reduced_a_delta"] = r.reduced_a_delta;
  j["reduced_b_delta"] = r.reduced_b_delta;
  j["verdict"] = verdict_json(r.verdict);
  j["ic_before"] = r.ic_before;
  j["ic_after"] = r.ic_after;
  json terms = json::array();
  for (const ProductTerm& t : r.product_weights) {
    json term;
    term["weight"] = t.weight;
    term["a"] = matrix_json(t.a.matrix());
    term["b"] = matrix_json(t.b.matrix());
    terms.push_back(term);
  }
  j["product_weights"] = terms;
  return j;
}

}  // namespace qdis
