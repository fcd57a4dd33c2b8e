#include <algorithm>
#include <set>

#include "sia/sian/sian.hpp"

namespace sia::sian {

using algebra::Exponent;

ModelSystem replicate(const ModelSystem& m, unsigned copies) {
  if (copies == 0) throw std::invalid_argument("copies must be at least 1");
  if (copies == 1) return m;
  ModelSystem r;
  auto suffixed = [&](const std::vector<std::string>& names) {
    std::vector<std::string> out;
    for (unsigned c = 1; c <= copies; ++c)
      for (const auto& n : names) out.push_back(n + "_" + std::to_string(c));
    return out;
  };
  r.states = suffixed(m.states);
  r.outputs = suffixed(m.outputs);
  r.inputs = suffixed(m.inputs);
  r.params = m.params;
  r.ring = model::model_ring(r.states, r.outputs, r.inputs, r.params);

  const std::size_t n = m.states.size(), ny = m.outputs.size(), nu = m.inputs.size();
  for (unsigned c = 0; c < copies; ++c) {
    std::vector<std::size_t> map(m.ring->nvars());
    for (std::size_t i = 0; i < n; ++i) map[m.state_var(i)] = r.state_var(c * n + i);
    for (std::size_t k = 0; k < ny; ++k) map[m.output_var(k)] = r.output_var(c * ny + k);
    for (std::size_t l = 0; l < nu; ++l) map[m.input_var(l)] = r.input_var(c * nu + l);
    for (std::size_t q = 0; q < m.params.size(); ++q) map[m.param_var(q)] = r.param_var(q);
    for (std::size_t i = 0; i < n; ++i) {
      r.odes.push_back(m.odes[i].in_ring(r.ring, map));
      r.ode_locs.push_back(m.ode_locs.empty() ? model::SourceLoc{} : m.ode_locs[i]);
    }
    for (std::size_t k = 0; k < ny; ++k) {
      r.obs.push_back(m.obs[k].in_ring(r.ring, map));
      r.obs_locs.push_back(m.obs_locs.empty() ? model::SourceLoc{} : m.obs_locs[k]);
    }
  }
  return r;
}

std::vector<unsigned> default_orders(const ModelSystem& m) {
  return std::vector<unsigned>(m.outputs.size(), static_cast<unsigned>(m.states.size() + m.params.size()));
}

std::vector<QPoly> ProlongedSystem::all() const {
  std::vector<QPoly> out = equations;
  if (!saturation.is_zero()) out.push_back(saturation);
  return out;
}

namespace {

std::vector<std::string> jet_names(const ModelSystem& m, std::size_t horizon) {
  std::set<std::string> taken(m.params.begin(), m.params.end());
  for (const auto* list : {&m.states, &m.outputs, &m.inputs}) taken.insert(list->begin(), list->end());
  std::vector<std::string> names;
  std::string zname = "z";
  while (taken.count(zname)) zname += "_";
  names.push_back(zname);
  taken.insert(zname);
  for (const auto* list : {&m.states, &m.outputs, &m.inputs}) {
    for (const auto& n : *list) {
      // extra underscores when "<name>_<j>" would clash with a declared symbol
      std::string sep = "_";
      auto clash = [&]() {
        for (std::size_t j = 0; j <= horizon; ++j)
          if (taken.count(n + sep + std::to_string(j))) return true;
        return false;
      };
      while (clash()) sep += "_";
      for (std::size_t j = 0; j <= horizon; ++j) {
        names.push_back(n + sep + std::to_string(j));
        taken.insert(names.back());
      }
    }
  }
  names.insert(names.end(), m.params.begin(), m.params.end());
  return names;
}

}  // namespace

ProlongedSystem prolong(const ModelSystem& m, const std::vector<unsigned>& orders) {
  if (orders.size() != m.outputs.size()) throw std::invalid_argument("one order per output expected");
  ProlongedSystem s;
  s.orders = orders;
  s.nstates = m.states.size();
  s.noutputs = m.outputs.size();
  s.ninputs = m.inputs.size();
  s.nparams = m.params.size();
  unsigned top = 0;
  for (unsigned o : orders) top = std::max(top, o);
  s.horizon = top + 1;
  s.ring = algebra::make_ring(jet_names(m, s.horizon));
  const RingPtr& R = s.ring;
  const std::size_t H = s.horizon;

  std::vector<std::size_t> map(m.ring->nvars());
  for (std::size_t i = 0; i < s.nstates; ++i) map[m.state_var(i)] = s.x(i, 0);
  for (std::size_t k = 0; k < s.noutputs; ++k) map[m.output_var(k)] = s.y(k, 0);
  for (std::size_t l = 0; l < s.ninputs; ++l) map[m.input_var(l)] = s.u(l, 0);
  for (std::size_t q = 0; q < s.nparams; ++q) map[m.param_var(q)] = s.mu(q);

  // total derivative: each jet maps to its successor, parameters are constant
  std::vector<std::ptrdiff_t> next(R->nvars(), -1);
  for (std::size_t b = 0; b < s.nstates + s.noutputs + s.ninputs; ++b)
    for (std::size_t j = 0; j + 1 <= H; ++j) next[1 + b * (H + 1) + j] = static_cast<std::ptrdiff_t>(1 + b * (H + 1) + j + 1);
  auto jet_order = [&](std::size_t v) { return (v - 1) % (H + 1); };
  auto D = [&](const QPoly& p) {
    QPoly acc(R);
    auto used = p.support_vars();
    for (std::size_t v = 0; v < used.size(); ++v) {
      if (!used[v] || v == 0 || v >= s.mu(0)) continue;
      if (jet_order(v) == H) throw std::logic_error("prolongation horizon exceeded");
      acc += p.derivative(v) * algebra::q_var(R, static_cast<std::size_t>(next[v]));
    }
    return acc;
  };

  QPoly Q = algebra::q_const(R, 1);
  std::vector<QPoly> seen_dens;
  auto note_den = [&](const QPoly& d) {
    if (d.is_constant()) return;
    for (const auto& e : seen_dens)
      if (e == d) return;
    seen_dens.push_back(d);
    Q *= d;
  };

  for (std::size_t k = 0; k < s.noutputs; ++k) {
    QPoly num = m.obs[k].num().in_ring(R, map), den = m.obs[k].den().in_ring(R, map);
    note_den(den);
    QPoly e = den * algebra::q_var(R, s.y(k, 0)) - num;
    for (unsigned j = 0; j <= orders[k]; ++j) {
      if (j) e = D(e);
      s.equations.push_back(e);
      s.labels.push_back(m.outputs[k] + "^(" + std::to_string(j) + ")");
    }
  }

  std::vector<std::vector<QPoly>> xeq(s.nstates);  // xeq[i][j] = D^j(den x_i^(1) - num)
  for (std::size_t i = 0; i < s.nstates; ++i) {
    QPoly num = m.odes[i].num().in_ring(R, map), den = m.odes[i].den().in_ring(R, map);
    note_den(den);
    xeq[i].push_back(den * algebra::q_var(R, s.x(i, 1)) - num);
  }
  // closure: x_i^(j) with j >= 1 occurring needs D^(j-1) of its ODE
  std::vector<unsigned> have(s.nstates, 0);  // number of X-equations emitted per state
  std::size_t scan = 0;
  while (scan < s.equations.size()) {
    auto used = s.equations[scan++].support_vars();
    for (std::size_t i = 0; i < s.nstates; ++i) {
      for (std::size_t j = H; j >= 1; --j) {
        if (!used[s.x(i, j)]) continue;
        while (have[i] < j) {
          while (xeq[i].size() <= have[i]) xeq[i].push_back(D(xeq[i].back()));
          s.equations.push_back(xeq[i][have[i]]);
          s.labels.push_back(m.states[i] + "^(" + std::to_string(have[i] + 1) + ")");
          ++have[i];
        }
        break;
      }
    }
  }
  if (!seen_dens.empty()) s.saturation = algebra::q_var(R, s.z()) * Q - algebra::q_const(R, 1);
  else s.saturation = QPoly(R);
  return s;
}

}  // namespace sia::sian
