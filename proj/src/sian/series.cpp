#include "series.hpp"

#include <algorithm>
#include <stdexcept>

namespace sia::sian::detail {

std::uint64_t inv_mod(std::uint64_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = static_cast<std::int64_t>(a % p);
  if (nr == 0) throw std::domain_error("inverse of zero");
  while (nr) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

DualSeries& DualSeries::add_scaled(const DualSeries& o, std::uint64_t s) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = (c_[i] + o.c_[i] * s) % p_;
  return *this;
}

DualSeries DualSeries::mul(const DualSeries& o) const {
  DualSeries r(len_, w_, p_);
  for (std::size_t i = 0; i < len_; ++i) {
    const std::uint64_t* a = &c_[i * w_];
    bool az = true;
    for (std::size_t d = 0; d < w_ && az; ++d) az = a[d] == 0;
    if (az) continue;
    for (std::size_t j = 0; i + j < len_; ++j) {
      const std::uint64_t* b = &o.c_[j * w_];
      std::uint64_t* out = &r.c_[(i + j) * w_];
      out[0] = (out[0] + a[0] * b[0]) % p_;
      for (std::size_t d = 1; d < w_; ++d) out[d] = (out[d] + a[0] * b[d] + (a[d] * b[0]) % p_) % p_;
    }
  }
  return r;
}

DualSeries DualSeries::inverse() const {
  DualSeries e(len_, w_, p_);
  std::uint64_t a0 = at(0, 0);
  std::uint64_t i0 = inv_mod(a0, p_);
  std::uint64_t i02 = i0 * i0 % p_;
  // e_0 = 1/a_0 as a dual number
  e.at(0, 0) = i0;
  for (std::size_t d = 1; d < w_; ++d) e.at(0, d) = (p_ - at(0, d) * i02 % p_) % p_;
  // e_k = -e_0 * sum_{j=1..k} a_j e_{k-j}
  std::vector<std::uint64_t> acc(w_);
  for (std::size_t k = 1; k < len_; ++k) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t j = 1; j <= k; ++j) {
      const std::uint64_t* a = &c_[j * w_];
      const std::uint64_t* b = &e.c_[(k - j) * w_];
      acc[0] = (acc[0] + a[0] * b[0]) % p_;
      for (std::size_t d = 1; d < w_; ++d) acc[d] = (acc[d] + a[0] * b[d] + (a[d] * b[0]) % p_) % p_;
    }
    const std::uint64_t* z = &e.c_[0];
    std::uint64_t* out = &e.c_[k * w_];
    out[0] = (p_ - acc[0] * z[0] % p_) % p_;
    for (std::size_t d = 1; d < w_; ++d) {
      std::uint64_t v = (acc[0] * z[d] + acc[d] * z[0]) % p_;
      out[d] = (p_ - v) % p_;
    }
  }
  return e;
}

DualSeries eval_series(const algebra::ZpPoly& f, const std::vector<const DualSeries*>& args, std::size_t len,
                       std::size_t width, std::uint32_t p) {
  DualSeries acc(len, width, p);
  if (f.is_zero()) return acc;
  const algebra::Ring& R = *f.ring();
  // cache of powers per variable, grown on demand
  std::vector<std::vector<DualSeries>> pw(R.nvars());
  auto power = [&](std::size_t v, unsigned e) -> const DualSeries& {
    auto& list = pw[v];
    if (list.empty()) list.push_back(*args[v]);
    while (list.size() < e) list.push_back(list.back().mul(*args[v]));
    return list[e - 1];
  };
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::uint64_t c = f.coeff(i).value();
    DualSeries term(len, width, p);
    bool first = true;
    for (std::size_t v = 0; v < R.nvars(); ++v) {
      unsigned e = f.exp(i, v);
      if (!e) continue;
      if (!args[v]) throw std::logic_error("series argument missing for a used variable");
      if (first) {
        term = power(v, e);
        first = false;
      } else {
        term = term.mul(power(v, e));
      }
    }
    if (first) {
      acc.at(0, 0) = (acc.at(0, 0) + c) % p;
    } else {
      acc.add_scaled(term, c);
    }
  }
  return acc;
}

SeriesSolution solve_series(const std::vector<algebra::ZpPoly>& fnum, const std::vector<algebra::ZpPoly>& fden,
                            const std::vector<algebra::ZpPoly>& gnum, const std::vector<algebra::ZpPoly>& gden,
                            std::vector<DualSeries> vars, std::size_t nstates, std::size_t len, std::size_t width,
                            std::uint32_t p) {
  SeriesSolution sol;
  std::vector<const DualSeries*> args(vars.size());
  for (std::size_t v = 0; v < vars.size(); ++v) args[v] = &vars[v];
  auto rhs = [&](const algebra::ZpPoly& num, const algebra::ZpPoly& den, bool& bad) {
    DualSeries n = eval_series(num, args, len, width, p);
    if (den.is_constant()) {
      std::uint64_t dv = den.is_zero() ? 0 : den.coeff(0).value();
      if (dv == 1) return n;
      DualSeries r(len, width, p);
      return r.add_scaled(n, inv_mod(dv, p));
    }
    DualSeries d = eval_series(den, args, len, width, p);
    if (!d.constant_invertible()) {
      bad = true;
      return n;
    }
    return n.mul(d.inverse());
  };
  // coefficient k+1 of x depends on coefficients 0..k only
  for (std::size_t k = 0; k + 1 < len; ++k) {
    std::vector<DualSeries> next;
    next.reserve(nstates);
    for (std::size_t i = 0; i < nstates; ++i) {
      bool bad = false;
      next.push_back(rhs(fnum[i], fden[i], bad));
      if (bad) {
        sol.degenerate = true;
        return sol;
      }
    }
    std::uint64_t inv = inv_mod(k + 1, p);
    for (std::size_t i = 0; i < nstates; ++i)
      for (std::size_t d = 0; d < width; ++d) vars[i].at(k + 1, d) = next[i].at(k, d) * inv % p;
  }
  for (std::size_t k = 0; k < gnum.size(); ++k) {
    bool bad = false;
    sol.outputs.push_back(rhs(gnum[k], gden[k], bad));
    if (bad) {
      sol.degenerate = true;
      return sol;
    }
  }
  for (std::size_t i = 0; i < nstates; ++i) sol.states.push_back(vars[i]);
  return sol;
}

bool Echelon::add(std::vector<std::uint64_t> v) {
  if (!reduce(v)) return false;
  std::size_t pc = 0;
  while (v[pc] == 0) ++pc;
  std::uint64_t inv = inv_mod(v[pc], p_);
  for (auto& x : v) x = x * inv % p_;
  rows_.push_back(std::move(v));
  piv_.push_back(pc);
  return true;
}

bool Echelon::reduce(std::vector<std::uint64_t>& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::uint64_t c = v[piv_[r]];
    if (!c) continue;
    const auto& row = rows_[r];
    for (std::size_t d = 0; d < w_; ++d)
      if (row[d]) v[d] = (v[d] + (p_ - c) * row[d]) % p_;
  }
  return std::any_of(v.begin(), v.end(), [](std::uint64_t x) { return x != 0; });
}

}  // namespace sia::sian::detail
