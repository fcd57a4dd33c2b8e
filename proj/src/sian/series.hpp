#pragma once

#include <cstdint>
#include <vector>

#include "sia/algebra/poly.hpp"

namespace sia::sian::detail {

/// Truncated power series in t whose coefficients are dual vectors over
/// GF(p): entry 0 is the value, entries 1..W-1 are first-order partial
/// derivatives with respect to the seeded unknowns (forward-mode AD).
class DualSeries {
 public:
  DualSeries(std::size_t len, std::size_t width, std::uint32_t p) : len_(len), w_(width), p_(p), c_(len * width, 0) {}

  std::size_t len() const { return len_; }
  std::size_t width() const { return w_; }
  std::uint64_t& at(std::size_t k, std::size_t d) { return c_[k * w_ + d]; }
  std::uint64_t at(std::size_t k, std::size_t d) const { return c_[k * w_ + d]; }

  DualSeries& add_scaled(const DualSeries& o, std::uint64_t s);
  DualSeries mul(const DualSeries& o) const;
  /// 1/this; needs an invertible constant term.
  DualSeries inverse() const;
  bool constant_invertible() const { return at(0, 0) != 0; }

 private:
  std::size_t len_, w_;
  std::uint32_t p_;
  std::vector<std::uint64_t> c_;
};

/// Row echelon form over GF(p), rows added one at a time.
class Echelon {
 public:
  Echelon(std::size_t width, std::uint32_t p) : w_(width), p_(p) {}

  /// False when v is already in the row space.
  bool add(std::vector<std::uint64_t> v);
  bool contains(std::vector<std::uint64_t> v) const { return !reduce(v); }
  std::size_t rank() const { return rows_.size(); }

 private:
  // true if a nonzero remainder is left
  bool reduce(std::vector<std::uint64_t>& v) const;

  std::size_t w_;
  std::uint32_t p_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::size_t> piv_;
};

std::uint64_t inv_mod(std::uint64_t a, std::uint32_t p);

/// Evaluates f at series arguments (one per ring variable; unused may be empty).
DualSeries eval_series(const algebra::ZpPoly& f, const std::vector<const DualSeries*>& args, std::size_t len,
                       std::size_t width, std::uint32_t p);

struct SeriesSolution {
  std::vector<DualSeries> states;   // per state
  std::vector<DualSeries> outputs;  // per output
  bool degenerate = false;          // a denominator vanished at t = 0
};

/// Power-series solution of x' = num_i/den_i, y_k = gnum_k/gden_k, over GF(p).
///
/// `vars` lists one series per variable of the model ring (states entries are
/// the initial values; the solver fills in higher coefficients). The caller
/// seeds derivative directions in the initial values and parameters.
SeriesSolution solve_series(const std::vector<algebra::ZpPoly>& fnum, const std::vector<algebra::ZpPoly>& fden,
                            const std::vector<algebra::ZpPoly>& gnum, const std::vector<algebra::ZpPoly>& gden,
                            std::vector<DualSeries> vars, std::size_t nstates, std::size_t len, std::size_t width,
                            std::uint32_t p);

}  // namespace sia::sian::detail
