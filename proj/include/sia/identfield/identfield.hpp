#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sia/algebra/budget.hpp"
#include "sia/algebra/poly.hpp"
#include "sia/algebra/ratfun.hpp"
#include "sia/model/model.hpp"
#include "sia/sian/sian.hpp"

namespace sia::identfield {

using algebra::RatFun;
using algebra::RingPtr;
using model::ModelSystem;

/// Coefficients live in the field of rational functions of the parameters.
using KPoly = algebra::Poly<RatFun>;

/// Jet ranking of the triangular set, outputs listed from highest to lowest.
/// Orderly compares derivative order first, elimination the output first.
enum class RankingKind { Orderly, Elimination };
struct Ranking {
  RankingKind kind = RankingKind::Orderly;
  std::vector<std::size_t> outputs;  // permutation; identity when empty
};

/// One input-output relation with leader y_k^(h), k = output.
struct IOEquation {
  std::size_t output = 0;
  unsigned order = 0;  // h
  KPoly eq;            // over IOEquationSet::ring, monic
};

/// Differential polynomials in output and input jets with coefficients in
/// Q(mu), triangular for the ranking: each equation involves its leader and
/// lower jets that are not derivatives of other leaders.
struct IOEquationSet {
  RingPtr ring;    // jets: y_k^(j) then u_l^(j), named "<name>_<j>"
  RingPtr params;  // coefficient ring, parameters in model order
  Ranking ranking;
  std::vector<IOEquation> equations;
  std::size_t jet_order = 0;  // J: jets 0..J per output and input
  std::size_t noutputs = 0, ninputs = 0;
  std::size_t y(std::size_t k, std::size_t j) const { return k * (jet_order + 1) + j; }
  std::size_t u(std::size_t l, std::size_t j) const { return (noutputs + l) * (jet_order + 1) + j; }
};

/// Moves a function of the parameters between the model ring and the
/// parameter-only ring.
RatFun to_params(const ModelSystem& m, const RingPtr& params, const RatFun& f);
RatFun to_model(const ModelSystem& m, const RatFun& f);
RingPtr parameter_ring(const ModelSystem& m);

/// Elimination of the states from the output relations.
IOEquationSet io_equations(const ModelSystem& m, Ranking ranking = {},
                           const algebra::GroebnerOptions& opt = {}, std::uint64_t seed = 1);

/// Experiment bound for one ranking. Works over GF(p) at a random parameter
/// point, so it is cheap enough to repeat for refinement.
unsigned experiment_bound(const ModelSystem& m, Ranking ranking = {},
                          const algebra::GroebnerOptions& opt = {}, std::uint64_t seed = 1);

struct CoefficientField {
  std::vector<RatFun> generators;    // simplified, over the parameter ring
  std::vector<RatFun> coefficients;  // raw normalized coefficients
  unsigned beta = 1;
};
CoefficientField coefficient_field(const IOEquationSet& io, const ModelSystem& m,
                                   const algebra::GroebnerOptions& opt = {}, std::uint64_t seed = 1);

/// candidate in Q(generators). Randomized: the fibre of the generator map
/// through a random point over GF(p) must keep the candidate constant.
bool field_membership(const RatFun& candidate, const std::vector<RatFun>& generators,
                      std::uint64_t seed = 1, const algebra::GroebnerOptions& opt = {});

/// Exact version over Q: tags t_i = g_i, parameters eliminated, candidate tag
/// of degree one over the others.
bool field_membership_exact(const RatFun& candidate, const std::vector<RatFun>& generators,
                            const algebra::GroebnerOptions& opt = {});

bool fields_equal(const std::vector<RatFun>& a, const std::vector<RatFun>& b, std::uint64_t seed = 1,
                  const algebra::GroebnerOptions& opt = {});

/// Generating set of the same field, none of its members in the field of the
/// others. Polynomials lose their constant term and content; rational
/// functions are reduced with integer coprime parts.
std::vector<RatFun> simplify_generators(const std::vector<RatFun>& gens, std::uint64_t seed = 1,
                                        const algebra::GroebnerOptions& opt = {});

/// Members of Q(generators) (plus the extra candidates) that one experiment
/// determines, as a simplified generating set. Functions over the model ring.
/// One experiment on opt.copies copies when that is above one.
std::vector<RatFun> single_experiment_filter(const std::vector<RatFun>& generators, const ModelSystem& m,
                                             const sian::AnalysisOptions& opt, std::uint64_t seed,
                                             const std::vector<RatFun>& extra = {},
                                             const algebra::Interrupt* interrupt = nullptr);

/// Functions of parameters and initial values fixed by one experiment: the
/// single-experiment generators and the output jets at t = 0 (those free of
/// inputs). Over the model ring, states standing for x(0).
std::vector<RatFun> initial_value_generators(const ModelSystem& m, const std::vector<RatFun>& single);

/// Smallest bound over the default ranking and up to `attempts` others.
unsigned refine_bound(const ModelSystem& m, unsigned attempts = 4, std::uint64_t seed = 1,
                      const algebra::GroebnerOptions& opt = {});

struct FieldReport {
  std::vector<RatFun> single_experiment;  // over the model ring
  std::vector<RatFun> multi_experiment;
  unsigned beta = 1;
  unsigned relation_beta = 1;  // from the relations, before the single-experiment check
  bool bypassed = false;
  std::vector<std::string> warnings;
};

/// All parameters globally identifiable: they are their own combinations.
std::optional<FieldReport> bypass(const sian::IdentReport& report, const ModelSystem& m);

struct FieldOptions {
  bool refine = false;
  unsigned attempts = 4;
  bool attempt_bypass = true;
  algebra::GroebnerOptions groebner;  // relations, bounds and field checks
};

/// Full combinations path. Relations and beta come from m itself; bypass and
/// the single-experiment check use opt.copies copies, so beta drops to 1 when
/// one replicated experiment determines the whole field.
FieldReport identifiable_functions(const ModelSystem& m, const sian::AnalysisOptions& opt,
                                   const FieldOptions& fopt, std::uint64_t seed,
                                   const sian::IdentReport* report = nullptr,
                                   const algebra::Interrupt* interrupt = nullptr);

}  // namespace sia::identfield
