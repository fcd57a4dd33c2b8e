#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sia/algebra/budget.hpp"
#include "sia/algebra/groebner.hpp"
#include "sia/algebra/ratfun.hpp"
#include "sia/model/model.hpp"

namespace sia::sian {

using algebra::QPoly;
using algebra::RatFun;
using algebra::Rational;
using algebra::RingPtr;
using model::ModelSystem;

struct DegeneratePoint : std::runtime_error {
  DegeneratePoint() : std::runtime_error("could not sample a point avoiding all denominators") {}
};

struct AnalysisOptions {
  std::string probability = "0.99";  // decimal string in (0, 1)
  unsigned copies = 1;
  /// Query x*(0) as well as parameters. Forced off when copies > 1.
  bool query_initial_conditions = true;
  bool check_local_global = true;
  bool print_num_solutions = true;
  // the largest corpus system needs about 1.2M steps under unlucky symbol orders
  algebra::GroebnerOptions groebner{.max_steps = 4'000'000};
};

/// Parses and checks 0 < p < 1.
Rational parse_probability(const std::string& text);

enum class Verdict { Global, Local, NonIdentifiable, Undetermined };
std::string to_string(Verdict v);

struct IdentReport {
  std::vector<std::string> globally;
  std::vector<std::string> locally_not_globally;
  std::vector<std::string> non_identifiable;
  std::vector<std::string> undetermined;
  std::map<std::string, std::size_t> num_solutions;
  std::string probability;
  unsigned copies = 1;
  std::vector<std::string> warnings;

  // run details
  std::uint32_t prime = 0;
  std::vector<unsigned> orders;  // per output, highest derivative order used
  std::size_t groebner_steps = 0;

  Verdict verdict(const std::string& symbol) const;
};

/// Indexed copies sharing the parameters: states, outputs and inputs of copy
/// c get the suffix "_c". r = 1 returns the model unchanged.
ModelSystem replicate(const ModelSystem& m, unsigned copies);

/// Truncation policy: n + lambda per output (states + parameters).
std::vector<unsigned> default_orders(const ModelSystem& m);

/// Polynomial jet system E^t.
///
/// Ring variables, in order: z (saturation), then x_i^(j) for every state
/// and j = 0..H, y_k^(j), u_l^(j), and finally the parameters. Jet names are
/// "<name>_<j>".
struct ProlongedSystem {
  RingPtr ring;
  std::size_t horizon = 0;  // H
  std::size_t nstates = 0, noutputs = 0, ninputs = 0, nparams = 0;
  std::vector<QPoly> equations;       // Y-equations first, then X-equations
  std::vector<std::string> labels;    // "y1^(2)", "x3^(1)" ...
  QPoly saturation;                   // z*Q - 1, or zero when Q is constant
  std::vector<unsigned> orders;       // per output

  std::size_t z() const { return 0; }
  std::size_t x(std::size_t i, std::size_t j) const { return 1 + i * (horizon + 1) + j; }
  std::size_t y(std::size_t k, std::size_t j) const { return 1 + (nstates + k) * (horizon + 1) + j; }
  std::size_t u(std::size_t l, std::size_t j) const { return 1 + (nstates + noutputs + l) * (horizon + 1) + j; }
  std::size_t mu(std::size_t q) const { return 1 + (nstates + noutputs + ninputs) * (horizon + 1) + q; }

  /// Equations plus saturation polynomial.
  std::vector<QPoly> all() const;
};

/// y_k-equations up to order orders[k] and the X-equations they need
/// (closure over the state jets that occur).
ProlongedSystem prolong(const ModelSystem& m, const std::vector<unsigned>& orders);

/// Largest value drawn for the sampled point; monotone in p.
std::uint64_t sampling_range(const Rational& probability, std::uint64_t degree_bound);

/// A random point of E^t over GF(prime): parameters, initial values and
/// input jets are drawn uniformly from [1, range]; every other jet follows
/// from the equations. Resamples when a denominator vanishes.
struct SamplePoint {
  std::uint32_t prime = 0;
  std::vector<std::optional<algebra::Zp>> values;  // per ProlongedSystem ring variable (z included)
};
SamplePoint sample_point(const ProlongedSystem& sys, const ModelSystem& m, std::uint64_t range,
                         std::uint32_t prime, std::mt19937_64& rng);

/// Function of the parameters queried alongside the symbols.
struct FunctionQuery {
  std::string name;
  RatFun f;  // over the model ring, parameters only
};

struct FunctionVerdict {
  std::string name;
  Verdict verdict = Verdict::Undetermined;
  std::size_t num_solutions = 0;
};

struct AssessResult {
  IdentReport report;
  std::vector<FunctionVerdict> functions;
};

/// Parameter and initial-condition identifiability (and, for each extra
/// function, whether its value is determined by one experiment).
AssessResult assess_full(const ModelSystem& m, const AnalysisOptions& opt, std::uint64_t seed,
                         const std::vector<FunctionQuery>& functions = {},
                         const algebra::Interrupt* interrupt = nullptr);

IdentReport assess(const ModelSystem& m, const AnalysisOptions& opt, std::uint64_t seed,
                   const algebra::Interrupt* interrupt = nullptr);

}  // namespace sia::sian
