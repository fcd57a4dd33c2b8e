#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sia::algebra {

using Exponent = std::uint16_t;

/// A contiguous range of variables compared by one rule.
struct OrderBlock {
  enum class Kind { DegRevLex, Lex };
  std::size_t begin = 0;
  std::size_t end = 0;
  Kind kind = Kind::DegRevLex;
};

/// Monomial order built from blocks: monomials are compared block by block,
/// so every variable of an earlier block dominates all later ones.
/// A single block gives plain degrevlex or lex.
class TermOrder {
 public:
  static TermOrder degrevlex(std::size_t nvars);
  static TermOrder lex(std::size_t nvars);
  /// Block order with the given block sizes, each compared by `inner`.
  static TermOrder blocks(const std::vector<std::size_t>& sizes,
                          OrderBlock::Kind inner = OrderBlock::Kind::DegRevLex);
  static TermOrder from_blocks(std::vector<OrderBlock> blocks);

  const std::vector<OrderBlock>& block_list() const { return blocks_; }
  std::size_t nvars() const { return blocks_.empty() ? 0 : blocks_.back().end; }
  bool operator==(const TermOrder& o) const;
  std::string describe() const;

 private:
  std::vector<OrderBlock> blocks_;
};

/// Variable names plus a term order. Monomials of a ring are stored as
/// `stride()` exponents: one cached degree per order block followed by the
/// `nvars()` variable exponents.
class Ring {
 public:
  Ring(std::vector<std::string> names, TermOrder order);

  std::size_t nvars() const { return names_.size(); }
  std::size_t nblocks() const { return order_.block_list().size(); }
  std::size_t stride() const { return nblocks() + nvars(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  const TermOrder& order() const { return order_; }

  /// <0, 0, >0 as monomial a is smaller, equal, larger than b.
  int compare(const Exponent* a, const Exponent* b) const {
    if (single_drl_) {
      if (a[0] != b[0]) return a[0] < b[0] ? -1 : 1;
      for (std::size_t v = names_.size(); v > 0; --v)
        if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
      return 0;
    }
    return compare_blocks(a, b);
  }

  /// Fills the cached block degrees of a stride-layout monomial.
  void finish(Exponent* m) const;
  std::vector<Exponent> monomial(const std::vector<Exponent>& exps) const;
  std::vector<Exponent> one() const { return std::vector<Exponent>(stride(), 0); }
  std::vector<Exponent> variable(std::size_t i, Exponent e = 1) const;

  Exponent exp(const Exponent* m, std::size_t var) const { return m[nblocks() + var]; }
  unsigned total_degree(const Exponent* m) const;
  bool divides(const Exponent* a, const Exponent* b) const {  // a | b
    const std::size_t s = stride();
    for (std::size_t i = 0; i < s; ++i)
      if (a[i] > b[i]) return false;
    return true;
  }
  void mul(const Exponent* a, const Exponent* b, Exponent* out) const {
    const std::size_t s = stride();
    unsigned top = 0;
    for (std::size_t i = 0; i < s; ++i) {
      unsigned v = static_cast<unsigned>(a[i]) + b[i];
      top |= v;
      out[i] = static_cast<Exponent>(v);
    }
    if (top > 0xFFFFu) throw std::overflow_error("exponent overflow");
  }
  void div(const Exponent* a, const Exponent* b, Exponent* out) const {  // a / b, b | a
    const std::size_t s = stride();
    for (std::size_t i = 0; i < s; ++i) out[i] = static_cast<Exponent>(a[i] - b[i]);
  }
  void lcm(const Exponent* a, const Exponent* b, Exponent* out) const;
  bool coprime(const Exponent* a, const Exponent* b) const;
  std::uint64_t divmask(const Exponent* m) const;

  bool same_as(const Ring& o) const { return names_ == o.names_ && order_ == o.order_; }

 private:
  std::vector<std::string> names_;
  TermOrder order_;
  std::vector<std::size_t> block_of_;
  bool single_drl_ = false;

  int compare_blocks(const Exponent* a, const Exponent* b) const;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> names, TermOrder order) {
  return std::make_shared<const Ring>(std::move(names), std::move(order));
}
inline RingPtr make_ring(std::vector<std::string> names) {
  auto n = names.size();
  return make_ring(std::move(names), TermOrder::degrevlex(n));
}

}  // namespace sia::algebra
