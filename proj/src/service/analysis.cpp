#include "sia/service/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

namespace sia::service {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// parameters before initial values
std::vector<std::string> ordered(std::vector<std::string> xs) {
  std::stable_partition(xs.begin(), xs.end(), [](const std::string& x) { return !x.ends_with("(0)"); });
  return xs;
}

std::string list(const std::vector<std::string>& symbols) {
  const auto xs = ordered(symbols);
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i];
  return s + "]";
}

std::vector<std::string> rendered(const std::vector<algebra::RatFun>& fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(f.str());
  return out;
}

template <class T>
T field_of(const json& obj, const char* key, T fallback, const char* type) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw RequestError(std::string("field '") + key + "' must be " + type);
  }
}

void reject_unknown(const json& obj, const std::set<std::string>& known, const std::string& where) {
  for (const auto& [k, v] : obj.items())
    if (!known.count(k)) throw RequestError("unknown field '" + k + "' in " + where);
}

}  // namespace

AnalysisResult run_analysis(const AnalysisRequest& req, const Progress& progress, const algebra::Interrupt* interrupt) {
  auto log = [&](const char* phase, const std::string& line) {
    if (progress) progress(phase, line);
  };
  AnalysisResult res;
  res.probability = req.options.probability;
  res.seed = req.seed;

  auto t0 = Clock::now();
  log("parse", "parsing model");
  model::ModelSystem m = model::parse_model(req.model_text, req.syntax);
  log("parse", std::to_string(m.states.size()) + " states, " + std::to_string(m.params.size()) + " parameters, " +
                   std::to_string(m.outputs.size()) + " outputs, " + std::to_string(m.inputs.size()) + " inputs");
  res.timings.push_back({"parse", since(t0)});
  if (interrupt) interrupt->poll();

  t0 = Clock::now();
  sian::AnalysisOptions opt = req.options;
  if (interrupt) opt.groebner.interrupt = interrupt;
  log("identifiability", "prolonging and sampling (p = " + opt.probability + ", copies = " + std::to_string(opt.copies) + ")");
  res.ident = sian::assess(m, opt, req.seed, interrupt);
  {
    std::string orders;
    for (auto o : res.ident.orders) orders += (orders.empty() ? "" : ",") + std::to_string(o);
    log("identifiability", "prime " + std::to_string(res.ident.prime) + ", orders " + orders + ", " +
                               std::to_string(res.ident.groebner_steps) + " reduction steps");
  }
  res.timings.push_back({"identifiability", since(t0)});
  res.warnings = res.ident.warnings;
  if (interrupt) interrupt->poll();

  t0 = Clock::now();
  if (req.compute_combinations) {
    log("combinations", "computing identifiable functions");
    identfield::FieldOptions fo;
    fo.refine = req.refine_bound;
    fo.attempts = req.refine_attempts;
    fo.attempt_bypass = req.attempt_bypass;
    res.field = identfield::identifiable_functions(m, opt, fo, req.seed, &res.ident, interrupt);
    log("combinations", res.field->bypassed ? "bypass: all parameters globally identifiable"
                                            : "beta " + std::to_string(res.field->beta));
    res.timings.push_back({"combinations", since(t0)});
  } else if (req.attempt_bypass) {
    res.field = identfield::bypass(res.ident, m);
  }
  if (res.field)
    res.warnings.insert(res.warnings.end(), res.field->warnings.begin(), res.field->warnings.end());
  return res;
}

AnalysisRequest request_from_json(const json& j, const AnalysisRequest& defaults) {
  if (!j.is_object()) throw RequestError("request must be a JSON object");
  reject_unknown(j, {"model_text", "syntax", "options", "seed", "timeout_seconds"}, "request");
  AnalysisRequest r = defaults;
  auto it = j.find("model_text");
  if (it == j.end() || !it->is_string()) throw RequestError("field 'model_text' (string) is required");
  r.model_text = it->get<std::string>();
  try {
    r.syntax = model::syntax_from_string(field_of<std::string>(j, "syntax", model::to_string(r.syntax), "a string"));
  } catch (const std::invalid_argument& e) {
    throw RequestError(e.what());
  }
  r.seed = field_of<std::uint64_t>(j, "seed", r.seed, "a non-negative integer");
  r.timeout_seconds = field_of<double>(j, "timeout_seconds", r.timeout_seconds, "a number");
  if (!(r.timeout_seconds > 0)) throw RequestError("timeout_seconds must be positive");

  json o = j.value("options", json::object());
  if (!o.is_object()) throw RequestError("field 'options' must be an object");
  reject_unknown(o,
                 {"probability", "copies", "query_initial_conditions", "check_local_global", "print_num_solutions",
                  "compute_combinations", "refine_bound", "refine_attempts", "attempt_bypass"},
                 "options");
  auto& a = r.options;
  a.probability = field_of<std::string>(o, "probability", a.probability, "a decimal string");
  try {
    (void)sian::parse_probability(a.probability);
  } catch (const std::invalid_argument& e) {
    throw RequestError(e.what());
  }
  a.copies = field_of<unsigned>(o, "copies", a.copies, "a positive integer");
  if (a.copies < 1 || a.copies > 16) throw RequestError("copies must be between 1 and 16");
  a.query_initial_conditions = field_of<bool>(o, "query_initial_conditions", a.query_initial_conditions, "a boolean");
  a.check_local_global = field_of<bool>(o, "check_local_global", a.check_local_global, "a boolean");
  a.print_num_solutions = field_of<bool>(o, "print_num_solutions", a.print_num_solutions, "a boolean");
  r.compute_combinations = field_of<bool>(o, "compute_combinations", r.compute_combinations, "a boolean");
  r.refine_bound = field_of<bool>(o, "refine_bound", r.refine_bound, "a boolean");
  r.refine_attempts = field_of<unsigned>(o, "refine_attempts", r.refine_attempts, "a non-negative integer");
  if (r.refine_attempts > 64) throw RequestError("refine_attempts must be at most 64");
  r.attempt_bypass = field_of<bool>(o, "attempt_bypass", r.attempt_bypass, "a boolean");
  return r;
}

json to_json(const AnalysisRequest& r) {
  const auto& a = r.options;
  return {{"model_text", r.model_text},
          {"syntax", model::to_string(r.syntax)},
          {"seed", r.seed},
          {"timeout_seconds", r.timeout_seconds},
          {"options",
           {{"probability", a.probability},
            {"copies", a.copies},
            {"query_initial_conditions", a.query_initial_conditions},
            {"check_local_global", a.check_local_global},
            {"print_num_solutions", a.print_num_solutions},
            {"compute_combinations", r.compute_combinations},
            {"refine_bound", r.refine_bound},
            {"refine_attempts", r.refine_attempts},
            {"attempt_bypass", r.attempt_bypass}}}};
}

json to_json(const AnalysisResult& r, bool timings) {
  const auto& id = r.ident;
  json ident = {{"globally", id.globally},
                {"locally_not_globally", id.locally_not_globally},
                {"non_identifiable", id.non_identifiable},
                {"undetermined", id.undetermined},
                {"num_solutions", id.num_solutions},
                {"copies", id.copies}};
  json out = {{"probability", r.probability}, {"seed", r.seed}, {"ident", ident}};
  out["run"] = {{"prime", id.prime}, {"orders", id.orders}, {"groebner_steps", id.groebner_steps}};
  if (r.field) {
    const auto& f = *r.field;
    out["field"] = {{"single_experiment", rendered(f.single_experiment)},
                    {"multi_experiment", rendered(f.multi_experiment)},
                    {"beta", f.beta},
                    {"relation_beta", f.relation_beta},
                    {"bypassed", f.bypassed}};
  } else {
    out["field"] = nullptr;
  }
  out["warnings"] = r.warnings;
  if (timings) {
    json t = json::object();
    for (const auto& p : r.timings) t[p.phase] = p.seconds;
    out["timings"] = t;
  }
  return out;
}

json to_json(const model::ModelError& e) {
  return {{"error", e.code()},
          {"message", e.what()},
          {"location", {{"line", e.loc().line}, {"column", e.loc().column}, {"offset", e.loc().offset}}}};
}

std::string render_human(const AnalysisResult& r) {
  std::ostringstream os;
  const auto& id = r.ident;
  os << "Globally: " << list(id.globally) << "\n";
  os << "Locally not Globally: " << list(id.locally_not_globally) << "\n";
  os << "Non-Identifiable: " << list(id.non_identifiable) << "\n";
  if (!id.undetermined.empty()) os << "Undetermined: " << list(id.undetermined) << "\n";
  if (r.field) {
    os << "Single-Experiment: " << list(rendered(r.field->single_experiment)) << "\n";
    os << "Multi-Experiment: " << list(rendered(r.field->multi_experiment)) << "\n";
    os << "beta = " << r.field->beta << "\n";
  }
  if (!id.num_solutions.empty()) {
    os << "Number of solutions:";
    // listing order rather than map order
    for (const auto* names : {&id.globally, &id.locally_not_globally})
      for (const auto& s : ordered(*names))
        if (auto it = id.num_solutions.find(s); it != id.num_solutions.end()) os << " " << s << "=" << it->second;
    os << "\n";
  }
  for (const auto& w : r.warnings) os << "warning: " << w << "\n";
  return os.str();
}

}  // namespace sia::service
