#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sia/model/examples.hpp"
#include "sia/service/analysis.hpp"

using namespace sia;

namespace {

std::string slurp(std::istream& in) {
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structural identifiability analysis of rational ODE models"};
  std::string path, example, syntax = "auto", format = "human";
  service::AnalysisRequest req;
  bool no_bypass = false, no_ic = false, no_local = false, no_counts = false, no_timings = false, emit = false;
  app.add_option("model", path, "model file, '-' for stdin");
  app.add_option("--example", example, "built-in example instead of a file");
  app.add_option("--syntax", syntax, "auto, maple-like or slash-d")->capture_default_str();
  app.add_option("--probability", req.options.probability, "probability of correctness, 0 < p < 1")
      ->capture_default_str();
  app.add_option("--copies", req.options.copies, "experiment copies sharing the parameters")->capture_default_str();
  app.add_flag("--combinations", req.compute_combinations, "compute identifiable functions");
  app.add_flag("--refine", req.refine_bound, "try other rankings to lower beta");
  app.add_option("--attempts", req.refine_attempts, "refinement attempts")->capture_default_str();
  app.add_flag("--no-bypass", no_bypass, "always run the elimination for combinations");
  app.add_flag("--no-initial-conditions", no_ic, "report parameters only");
  app.add_flag("--no-local-global", no_local, "skip the global check (local verdicts only)");
  app.add_flag("--no-num-solutions", no_counts, "omit solution counts");
  app.add_option("--seed", req.seed, "random seed")->capture_default_str();
  app.add_option("--format", format, "human or json")->check(CLI::IsMember({"human", "json"}))->capture_default_str();
  app.add_option("--timeout", req.timeout_seconds, "wall-clock limit in seconds")->capture_default_str();
  app.add_flag("--no-timings", no_timings, "leave phase timings out of json output");
  app.add_flag("--emit-request", emit, "print the equivalent service request and exit");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  if (!example.empty()) {
    auto* ex = model::find_example(example);
    if (!ex) {
      std::cerr << "unknown example '" << example << "'\n";
      return 1;
    }
    req.model_text = ex->text;
  } else if (path.empty() || path == "-") {
    req.model_text = slurp(std::cin);
  } else {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "cannot read " << path << "\n";
      return 1;
    }
    req.model_text = slurp(in);
  }
  req.attempt_bypass = !no_bypass;
  req.options.query_initial_conditions = !no_ic;
  req.options.check_local_global = !no_local;
  req.options.print_num_solutions = !no_counts;

  try {
    req.syntax = model::syntax_from_string(syntax);
    // same validation as the service
    req = service::request_from_json(service::to_json(req));
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  if (emit) {
    std::cout << service::to_json(req).dump(2) << "\n";
    return 0;
  }

  algebra::Interrupt interrupt(std::chrono::duration_cast<algebra::Interrupt::Clock::duration>(
      std::chrono::duration<double>(req.timeout_seconds)));
  try {
    auto res = service::run_analysis(req, {}, &interrupt);
    if (format == "json")
      std::cout << service::to_json(res, !no_timings).dump(2) << "\n";
    else
      std::cout << service::render_human(res);
    return 0;
  } catch (const model::ModelError& e) {
    std::cerr << e.loc().line << ":" << e.loc().column << ": " << e.code() << ": " << e.what() << "\n";
    return 2;
  } catch (const algebra::ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
