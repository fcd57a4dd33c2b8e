#include "sia/algebra/ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sia::algebra {

TermOrder TermOrder::degrevlex(std::size_t nvars) {
  return from_blocks({{0, nvars, OrderBlock::Kind::DegRevLex}});
}

TermOrder TermOrder::lex(std::size_t nvars) {
  return from_blocks({{0, nvars, OrderBlock::Kind::Lex}});
}

TermOrder TermOrder::blocks(const std::vector<std::size_t>& sizes, OrderBlock::Kind inner) {
  std::vector<OrderBlock> bl;
  std::size_t at = 0;
  for (auto s : sizes) {
    if (s == 0) continue;
    bl.push_back({at, at + s, inner});
    at += s;
  }
  return from_blocks(std::move(bl));
}

TermOrder TermOrder::from_blocks(std::vector<OrderBlock> blocks) {
  std::size_t at = 0;
  for (const auto& b : blocks) {
    if (b.begin != at || b.end < b.begin) throw std::invalid_argument("order blocks must tile the variables");
    at = b.end;
  }
  TermOrder t;
  t.blocks_ = std::move(blocks);
  if (t.blocks_.empty()) t.blocks_.push_back({0, 0, OrderBlock::Kind::DegRevLex});
  return t;
}

bool TermOrder::operator==(const TermOrder& o) const {
  if (blocks_.size() != o.blocks_.size()) return false;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].begin != o.blocks_[i].begin || blocks_[i].end != o.blocks_[i].end ||
        blocks_[i].kind != o.blocks_[i].kind)
      return false;
  }
  return true;
}

std::string TermOrder::describe() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) os << " > ";
    os << (blocks_[i].kind == OrderBlock::Kind::Lex ? "lex" : "degrevlex") << "[" << blocks_[i].begin
       << "," << blocks_[i].end << ")";
  }
  return os.str();
}

Ring::Ring(std::vector<std::string> names, TermOrder order) : names_(std::move(names)), order_(std::move(order)) {
  if (order_.nvars() != names_.size()) {
    if (names_.empty()) {
      order_ = TermOrder::degrevlex(0);
    } else {
      throw std::invalid_argument("term order does not match variable count");
    }
  }
  block_of_.assign(names_.size(), 0);
  const auto& bl = order_.block_list();
  for (std::size_t b = 0; b < bl.size(); ++b)
    for (std::size_t v = bl[b].begin; v < bl[b].end; ++v) block_of_[v] = b;
  single_drl_ = bl.size() == 1 && bl[0].kind == OrderBlock::Kind::DegRevLex;
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

int Ring::compare_blocks(const Exponent* a, const Exponent* b) const {
  const auto& bl = order_.block_list();
  const std::size_t nb = bl.size();
  const Exponent* ea = a + nb;
  const Exponent* eb = b + nb;
  for (std::size_t k = 0; k < nb; ++k) {
    const auto& blk = bl[k];
    if (blk.kind == OrderBlock::Kind::DegRevLex) {
      if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
      for (std::size_t v = blk.end; v-- > blk.begin;) {
        if (ea[v] != eb[v]) return ea[v] > eb[v] ? -1 : 1;
      }
    } else {
      for (std::size_t v = blk.begin; v < blk.end; ++v) {
        if (ea[v] != eb[v]) return ea[v] < eb[v] ? -1 : 1;
      }
    }
  }
  return 0;
}

void Ring::finish(Exponent* m) const {
  const auto& bl = order_.block_list();
  const std::size_t nb = bl.size();
  for (std::size_t k = 0; k < nb; ++k) {
    unsigned d = 0;
    for (std::size_t v = bl[k].begin; v < bl[k].end; ++v) d += m[nb + v];
    m[k] = static_cast<Exponent>(d);
  }
}

std::vector<Exponent> Ring::monomial(const std::vector<Exponent>& exps) const {
  if (exps.size() != nvars()) throw std::invalid_argument("exponent vector length mismatch");
  std::vector<Exponent> m(stride(), 0);
  std::copy(exps.begin(), exps.end(), m.begin() + static_cast<std::ptrdiff_t>(nblocks()));
  finish(m.data());
  return m;
}

std::vector<Exponent> Ring::variable(std::size_t i, Exponent e) const {
  std::vector<Exponent> m(stride(), 0);
  m[nblocks() + i] = e;
  finish(m.data());
  return m;
}

unsigned Ring::total_degree(const Exponent* m) const {
  unsigned d = 0;
  for (std::size_t k = 0; k < nblocks(); ++k) d += m[k];
  return d;
}

void Ring::lcm(const Exponent* a, const Exponent* b, Exponent* out) const {
  const std::size_t nb = nblocks();
  const std::size_t s = stride();
  for (std::size_t i = nb; i < s; ++i) out[i] = std::max(a[i], b[i]);
  finish(out);
}

bool Ring::coprime(const Exponent* a, const Exponent* b) const {
  const std::size_t nb = nblocks();
  const std::size_t s = stride();
  for (std::size_t i = nb; i < s; ++i)
    if (a[i] && b[i]) return false;
  return true;
}

std::uint64_t Ring::divmask(const Exponent* m) const {
  std::uint64_t mask = 0;
  const std::size_t nb = nblocks();
  for (std::size_t v = 0; v < nvars(); ++v)
    if (m[nb + v]) mask |= std::uint64_t{1} << (v % 64);
  return mask;
}

}  // namespace sia::algebra
