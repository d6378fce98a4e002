#ifndef RINGLAB_RING_HPP
#define RINGLAB_RING_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/descriptor.hpp"
#include "ringlab/element.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/numeric.hpp"

namespace ringlab {

struct RingOrder {
  bool finite = false;
  Int value = 0;  // meaningful only when finite

  static RingOrder infinite() { return {false, 0}; }
  static RingOrder of(Int n) { return {true, std::move(n)}; }
};

inline std::string to_string(const RingOrder& o) {
  return o.finite ? o.value.str() : std::string("infinite");
}

struct DivisibilityVerdict {
  bool divides = false;
  std::optional<RingElement> witness;  // w with a*w = b
};

struct UnitVerdict {
  bool unit = false;
  std::optional<RingElement> inverse;
};

struct ZeroDivisorVerdict {
  bool zero_divisor = false;
  std::optional<RingElement> witness;  // b != 0 with a*b = 0
};

struct LocalityVerdict {
  bool local = false;
  std::optional<std::vector<RingElement>> maximal_ideal;            // element set, finite case
  std::optional<std::pair<RingElement, RingElement>> witness;       // non-units with unit sum
  std::string maximal_ideal_note;                                   // closed-form description
};

// Enumeration bounds. Elements are materialized eagerly at construction so
// rings stay immutable and freely shareable across threads.
struct Limits {
  std::int64_t element_bound = 4096;
  std::int64_t table_bound = 1024;
};

struct SampleBounds {
  std::int64_t max_abs = 100;  // |numerator| and |denominator| cap for integer fractions
  int max_degree = 6;          // degree cap for polynomial fractions
};

class Ring;
using RingHandle = std::shared_ptr<const Ring>;

class Ring : public std::enable_shared_from_this<Ring> {
 public:
  virtual ~Ring() = default;

  // Canonical image of an integer under Z -> R.
  virtual RingElement from_integer(const Int& n) const = 0;

  const std::string& name() const { return name_; }
  const std::optional<RingDescriptor>& descriptor() const { return descriptor_; }
  const RingOrder& order() const { return order_; }
  bool is_finite() const { return order_.finite; }
  const Limits& limits() const { return limits_; }

  virtual RingElement zero() const = 0;
  virtual RingElement one() const = 0;
  virtual RingElement add(const RingElement& a, const RingElement& b) const = 0;
  virtual RingElement neg(const RingElement& a) const = 0;
  virtual RingElement mul(const RingElement& a, const RingElement& b) const = 0;
  RingElement sub(const RingElement& a, const RingElement& b) const { return add(a, neg(b)); }

  // Renormalizes a payload of the right shape into canonical form; rejects
  // payloads that cannot belong to this ring.
  virtual RingElement canonicalize(const RingElement& a) const = 0;

  virtual std::string format(const RingElement& a) const = 0;

  bool is_zero(const RingElement& a) const { return a == zero(); }
  bool is_one(const RingElement& a) const { return a == one(); }

  // Validates that a is already in canonical form.
  const RingElement& checked(const RingElement& a) const {
    if (!(canonicalize(a) == a))
      throw representation_error("element is not canonical in " + name_);
    return a;
  }

  // Deterministic seeded sampling; finite rings draw uniformly.
  virtual RingElement sample(Rng& rng, const SampleBounds& bounds) const {
    (void)bounds;
    if (!has_elements())
      throw capability_error("no sampler for " + name_);
    return elem(static_cast<int>(rng.uniform(0, elem_count() - 1)));
  }

  // --- structural queries ---------------------------------------------------
  // Defaults run exhaustive scans over the materialized element list, which
  // doubles as the certificate for negative verdicts. Families with closed
  // forms override the non-materialized case.

  virtual UnitVerdict is_unit(const RingElement& a) const {
    const RingElement& ca = checked(a);
    const RingElement id = one();
    for (const RingElement& b : elements())
      if (mul(ca, b) == id) return {true, b};
    return {false, std::nullopt};
  }

  // By convention 0 is not a zero divisor.
  virtual ZeroDivisorVerdict is_zero_divisor(const RingElement& a) const {
    const RingElement& ca = checked(a);
    const RingElement z = zero();
    if (ca == z) return {false, std::nullopt};
    for (const RingElement& b : elements())
      if (b != z && mul(ca, b) == z) return {true, b};
    return {false, std::nullopt};
  }

  // Divides(w) satisfies a*w = b exactly; NotDivides on a finite ring is
  // certified by the full multiplier scan. divides(0, 0) yields Divides(0).
  virtual DivisibilityVerdict divides(const RingElement& a, const RingElement& b) const {
    const RingElement& ca = checked(a);
    const RingElement& cb = checked(b);
    for (const RingElement& w : elements())
      if (mul(ca, w) == cb) return {true, w};
    return {false, std::nullopt};
  }

  // Local iff the non-units are closed under addition.
  virtual LocalityVerdict is_local() const {
    std::vector<RingElement> non_units;
    for (const RingElement& a : elements())
      if (!is_unit(a).unit) non_units.push_back(a);
    for (const RingElement& x : non_units)
      for (const RingElement& y : non_units)
        if (is_unit(add(x, y)).unit) {
          LocalityVerdict v;
          v.local = false;
          v.witness = std::make_pair(x, y);
          return v;
        }
    LocalityVerdict v;
    v.local = true;
    v.maximal_ideal = std::move(non_units);
    return v;
  }

  // --- materialized element access -------------------------------------------

  bool has_elements() const { return table_ != nullptr; }

  const std::vector<RingElement>& elements() const {
    if (!table_)
      throw capability_error("element enumeration unavailable for " + name_ +
                             " (infinite or beyond the element bound)");
    return table_->elems;
  }

  int elem_count() const { return static_cast<int>(elements().size()); }

  const RingElement& elem(int i) const { return elements()[static_cast<size_t>(i)]; }

  int index_of(const RingElement& a) const {
    const auto& es = elements();
    auto it = std::lower_bound(es.begin(), es.end(), a, ElementLess{});
    if (it == es.end() || !(*it == a))
      throw representation_error("element " + format(a) + " is not canonical in " + name_);
    return static_cast<int>(it - es.begin());
  }

  int zero_index() const {
    elements();
    return table_->zero_index;
  }
  int one_index() const {
    elements();
    return table_->one_index;
  }

  int add_i(int i, int j) const {
    elements();
    if (!table_->add_tab.empty())
      return table_->add_tab[static_cast<size_t>(i) * table_->elems.size() + static_cast<size_t>(j)];
    return index_of(add(elem(i), elem(j)));
  }

  int mul_i(int i, int j) const {
    elements();
    if (!table_->mul_tab.empty())
      return table_->mul_tab[static_cast<size_t>(i) * table_->elems.size() + static_cast<size_t>(j)];
    return index_of(mul(elem(i), elem(j)));
  }

  int neg_i(int i) const {
    elements();
    if (!table_->neg_tab.empty()) return table_->neg_tab[static_cast<size_t>(i)];
    return index_of(neg(elem(i)));
  }

 protected:
  Ring(std::string name, std::optional<RingDescriptor> desc, RingOrder order, Limits limits)
      : name_(std::move(name)),
        descriptor_(std::move(desc)),
        order_(std::move(order)),
        limits_(limits) {}

  // Called at the end of a concrete constructor once the family can
  // enumerate its canonical elements.
  void materialize(std::vector<RingElement> elems) {
    std::sort(elems.begin(), elems.end(), ElementLess{});
    for (size_t i = 1; i < elems.size(); ++i)
      if (elems[i - 1] == elems[i]) throw internal_error("duplicate canonical element in " + name_);
    auto tab = std::make_unique<Table>();
    tab->elems = std::move(elems);
    const int n = static_cast<int>(tab->elems.size());
    auto idx = [&](const RingElement& a) -> int {
      auto it = std::lower_bound(tab->elems.begin(), tab->elems.end(), a, ElementLess{});
      if (it == tab->elems.end() || !(*it == a))
        throw internal_error("non-canonical operation result in " + name_);
      return static_cast<int>(it - tab->elems.begin());
    };
    tab->zero_index = idx(zero());
    tab->one_index = idx(one());
    if (n <= limits_.table_bound) {
      tab->add_tab.resize(static_cast<size_t>(n) * static_cast<size_t>(n));
      tab->mul_tab.resize(static_cast<size_t>(n) * static_cast<size_t>(n));
      tab->neg_tab.resize(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) {
        const RingElement& ai = tab->elems[static_cast<size_t>(i)];
        tab->neg_tab[static_cast<size_t>(i)] = idx(neg(ai));
        for (int j = 0; j < n; ++j) {
          const RingElement& aj = tab->elems[static_cast<size_t>(j)];
          tab->add_tab[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)] =
              idx(add(ai, aj));
          tab->mul_tab[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)] =
              idx(mul(ai, aj));
        }
      }
    }
    table_ = std::move(tab);
  }

  bool materializable(const Int& order_value) const {
    return order_value <= limits_.element_bound;
  }

  // For families whose order is only known mid-construction.
  void set_order(RingOrder o) { order_ = std::move(o); }

 private:
  struct Table {
    std::vector<RingElement> elems;
    std::vector<std::int32_t> add_tab, mul_tab, neg_tab;
    int zero_index = 0, one_index = 0;
  };

  std::string name_;
  std::optional<RingDescriptor> descriptor_;
  RingOrder order_;
  Limits limits_;
  std::unique_ptr<const Table> table_;
};

// Shared helpers for element printing.

inline std::string format_int_fraction(const IntFraction& f) {
  if (f.den == 1) return f.num.str();
  return f.num.str() + "/" + f.den.str();
}

}  // namespace ringlab

#endif  // RINGLAB_RING_HPP
