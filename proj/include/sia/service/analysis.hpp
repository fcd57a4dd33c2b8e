#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "sia/identfield/identfield.hpp"
#include "sia/model/model.hpp"
#include "sia/sian/sian.hpp"

namespace sia::service {

using nlohmann::json;

/// Malformed request body (not a model error).
struct RequestError : std::invalid_argument {
  explicit RequestError(const std::string& what) : std::invalid_argument(what) {}
};

struct AnalysisRequest {
  std::string model_text;
  model::Syntax syntax = model::Syntax::Auto;
  sian::AnalysisOptions options;
  bool compute_combinations = false;
  bool refine_bound = false;
  unsigned refine_attempts = 4;
  bool attempt_bypass = true;
  std::uint64_t seed = 1;
  double timeout_seconds = 600;
};

struct PhaseTiming {
  std::string phase;
  double seconds = 0;
};

struct AnalysisResult {
  sian::IdentReport ident;
  std::optional<identfield::FieldReport> field;
  std::vector<PhaseTiming> timings;
  std::string probability;
  std::uint64_t seed = 1;
  std::vector<std::string> warnings;
};

/// Phase names, in order: "parse", "identifiability", "combinations".
using Progress = std::function<void(const std::string& phase, const std::string& line)>;

/// Parse errors propagate as model::ModelError before any analysis runs.
AnalysisResult run_analysis(const AnalysisRequest& req, const Progress& progress = {},
                            const algebra::Interrupt* interrupt = nullptr);

/// Throws RequestError on missing or mistyped fields. Absent fields take
/// their value from `defaults`.
AnalysisRequest request_from_json(const json& j, const AnalysisRequest& defaults = {});
json to_json(const AnalysisRequest& r);

/// Timings are left out when `timings` is false, which makes the document a
/// function of the request alone.
json to_json(const AnalysisResult& r, bool timings = true);

json to_json(const model::ModelError& e);

/// Listing in the order Globally, Locally not Globally, Non-Identifiable,
/// then the combinations and beta when present.
std::string render_human(const AnalysisResult& r);

}  // namespace sia::service
