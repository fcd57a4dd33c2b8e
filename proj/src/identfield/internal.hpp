#pragma once

#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "../sian/series.hpp"
#include "sia/algebra/groebner.hpp"
#include "sia/identfield/identfield.hpp"

namespace sia::identfield::detail {

std::string fresh(std::set<std::string>& taken, std::string base);

/// Ring [x, u_l^(0..J), mu] for Lie derivatives along the vector field.
struct LieRing {
  LieRing(const ModelSystem& m, std::size_t J);

  std::size_t x(std::size_t i) const { return i; }
  std::size_t u(std::size_t l, std::size_t j) const { return n + l * (J + 1) + j; }
  std::size_t mu(std::size_t q) const { return n + nu * (J + 1) + q; }
  const RatFun& output(std::size_t k) const { return g_[k]; }
  RatFun derive(const RatFun& h) const;
  /// lcm of the denominators of the right-hand sides.
  algebra::QPoly state_denominators() const;

  RingPtr ring;
  std::size_t n, nu, J;

 private:
  std::vector<RatFun> f_, g_;
};

struct Jet {
  bool input = false;
  std::size_t index = 0;  // output or input
  unsigned order = 0;
};

class JetNames {
 public:
  JetNames(const ModelSystem& m, std::size_t J);
  const std::string& name(const Jet& j) const { return j.input ? u_[j.index][j.order] : y_[j.index][j.order]; }
  const std::set<std::string>& all() const { return all_; }

 private:
  std::vector<std::vector<std::string>> y_, u_;
  std::set<std::string> all_;
};

struct Trajectory {
  sian::detail::SeriesSolution sol;
  std::vector<sian::detail::DualSeries> inputs;
};

/// Random initial values and inputs at fixed parameters, optionally seeded
/// in the initial values.
Trajectory trajectory(const ModelSystem& m, const std::vector<std::uint64_t>& mu, std::size_t len, bool seeded,
                      std::uint32_t p, std::mt19937_64& rng);

/// One equation of the triangular set: its leader and the jets it may
/// involve (leader first, then the lower free jets, highest first).
struct Leader {
  Jet leader;
  std::vector<Jet> jets;
};

/// Walks the output jets in ranking order. A jet whose gradient in x(0)
/// depends on the free jets before it becomes the leader of its output;
/// later jets of that output are skipped.
std::vector<Leader> triangular_structure(const ModelSystem& m, const Ranking& ranking,
                                         const std::vector<std::uint64_t>& mu, std::uint32_t p, std::mt19937_64& rng);

/// Elimination problem for one equation: y-jets equal their Lie expressions,
/// plus saturation. Ring [z, x] >> [jets] >> [mu]; elim_ring drops mu.
struct Elimination {
  Elimination(const ModelSystem& m, const LieRing& lie, const JetNames& names, const std::vector<Jet>& jets,
              const std::vector<std::vector<RatFun>>& lie_jets);

  KPoly over_field(const algebra::QPoly& p, const RingPtr& params) const;
  algebra::ZpPoly specialized(const algebra::QPoly& p, const std::vector<std::uint64_t>& mu, std::uint32_t prime) const;

  RingPtr ring, elim_ring;
  std::vector<Jet> jets;  // block two, in ring order
  std::vector<algebra::QPoly> gens;
  std::size_t nelim = 0, nparams = 0;
};

std::vector<std::vector<RatFun>> lie_derivatives(const LieRing& lie, const std::vector<Leader>& eqs, std::size_t ny);
Ranking check_ranking(const ModelSystem& m, Ranking ranking);
std::vector<std::uint64_t> random_params(const ModelSystem& m, std::uint32_t p, std::mt19937_64& rng);

template <class K>
std::optional<algebra::Poly<K>> eliminant(const algebra::GroebnerBasis<K>& gb, std::size_t nelim);

/// Taylor coefficients 0..N-1 (rows) of the N monomials of e (columns)
/// along one trajectory.
std::vector<std::vector<std::uint64_t>> taylor_rows(const algebra::ZpPoly& e, const Elimination& el,
                                                    const Trajectory& t, std::uint32_t p);

}  // namespace sia::identfield::detail
