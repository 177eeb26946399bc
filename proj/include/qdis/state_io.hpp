#pragma once

// State-file JSON schema and the serialization helpers shared by the CLI
// and the tests. A state file is:
//   { "dim": 4, "matrix": [[[re, im], ...4], ...4], "label": "optional" }
// with the matrix row-major in the |00>, |01>, |10>, |11> basis.

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "qdis/correlation.hpp"
#include "qdis/disentangle.hpp"
#include "qdis/matrix.hpp"
#include "qdis/separability.hpp"

namespace qdis {

using json = nlohmann::ordered_json;

struct StateFile {
  Mat4 matrix = Mat4::Zero();
  std::optional<std::string> label;
};

// Throws FileFormatError on unreadable files, malformed JSON, or schema
// violations. Validation of the matrix itself is the caller's job (so the
// CLI can honor its own tolerance).
StateFile read_state_file(const std::filesystem::path& path);

json state_file_json(const Mat4& m, const std::optional<std::string>& label);
void write_state_file(const std::filesystem::path& path, const Mat4& m,
                      const std::optional<std::string>& label);

// Shortest representation that parses back to exactly the same double.
std::string format_double(double x);

// Fixed CSV schemas.
inline constexpr const char* kProfileCsvHeader =
    "sigma1,sigma2,sigma3,t1,t2,t3,N,f,Ic,region";
inline constexpr const char* kVerdictCsvHeader = "verdict,min_pt_eig";
inline constexpr const char* kSweepCsvHeader =
    "eta1,eta2,product,worst_margin,ppt_all_theta,threshold_predict,agree";

std::string region_name(Region region);
std::string verdict_name(Verdict verdict);
std::string profile_csv_row(const CorrelationProfile& p);
std::string verdict_csv_row(const SeparabilityVerdict& v);

// JSON views of the analysis types.
json decomposition_json(const BlochDecomposition& d);
json profile_json(const CorrelationProfile& p);
json verdict_json(const SeparabilityVerdict& v);
json report_json(const DisentanglementReport& r);

}  // namespace qdis
