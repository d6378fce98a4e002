#ifndef RINGLAB_RINGS_PRODUCT_HPP
#define RINGLAB_RINGS_PRODUCT_HPP

#include <string>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

// Direct product with componentwise operations. Queries on non-materialized
// instances run componentwise, witnesses assembled per factor.
class ProductRing final : public Ring {
 public:
  ProductRing(std::vector<RingHandle> factors, Limits limits)
      : Ring(make_name(factors), make_descriptor(factors), make_order(factors), limits),
        factors_(std::move(factors)) {
    if (factors_.empty()) throw usage_error("product of no rings");
    if (is_finite() && materializable(order().value)) {
      std::vector<RingElement> es;
      std::vector<int> idx(factors_.size(), 0);
      while (true) {
        Tuple t;
        for (size_t i = 0; i < factors_.size(); ++i)
          t.items.push_back(factors_[i]->elem(idx[i]));
        es.emplace_back(RingElement::Payload{std::move(t)});
        size_t i = factors_.size();
        while (i > 0 && idx[i - 1] + 1 >= factors_[i - 1]->elem_count()) idx[--i] = 0;
        if (i == 0) break;
        ++idx[i - 1];
      }
      materialize(std::move(es));
    }
  }

  const std::vector<RingHandle>& factors() const { return factors_; }

  RingElement zero() const override {
    Tuple t;
    for (const auto& f : factors_) t.items.push_back(f->zero());
    return RingElement(RingElement::Payload{std::move(t)});
  }

  RingElement one() const override {
    Tuple t;
    for (const auto& f : factors_) t.items.push_back(f->one());
    return RingElement(RingElement::Payload{std::move(t)});
  }

  RingElement add(const RingElement& a, const RingElement& b) const override {
    return zip(a, b, [](const Ring& f, const RingElement& x, const RingElement& y) {
      return f.add(x, y);
    });
  }

  RingElement mul(const RingElement& a, const RingElement& b) const override {
    return zip(a, b, [](const Ring& f, const RingElement& x, const RingElement& y) {
      return f.mul(x, y);
    });
  }

  RingElement neg(const RingElement& a) const override {
    const auto& items = comps(a);
    Tuple t;
    for (size_t i = 0; i < factors_.size(); ++i) t.items.push_back(factors_[i]->neg(items[i]));
    return RingElement(RingElement::Payload{std::move(t)});
  }

  RingElement canonicalize(const RingElement& a) const override {
    const auto& items = comps(a);
    Tuple t;
    for (size_t i = 0; i < factors_.size(); ++i)
      t.items.push_back(factors_[i]->canonicalize(items[i]));
    return RingElement(RingElement::Payload{std::move(t)});
  }

  RingElement from_integer(const Int& n) const override {
    Tuple t;
    for (const auto& f : factors_) t.items.push_back(f->from_integer(n));
    return RingElement(RingElement::Payload{std::move(t)});
  }

  std::string format(const RingElement& a) const override {
    const auto& items = comps(a);
    std::string out = "(";
    for (size_t i = 0; i < items.size(); ++i) {
      if (i) out += ", ";
      out += factors_[i]->format(items[i]);
    }
    return out + ")";
  }

  RingElement sample(Rng& rng, const SampleBounds& bounds) const override {
    Tuple t;
    for (const auto& f : factors_) t.items.push_back(f->sample(rng, bounds));
    return RingElement(RingElement::Payload{std::move(t)});
  }

  UnitVerdict is_unit(const RingElement& a) const override {
    if (has_elements()) return Ring::is_unit(a);
    const auto& items = comps(a);
    Tuple inv;
    for (size_t i = 0; i < factors_.size(); ++i) {
      auto v = factors_[i]->is_unit(items[i]);
      if (!v.unit) return {false, std::nullopt};
      inv.items.push_back(*v.inverse);
    }
    return {true, RingElement(RingElement::Payload{std::move(inv)})};
  }

  ZeroDivisorVerdict is_zero_divisor(const RingElement& a) const override {
    if (has_elements()) return Ring::is_zero_divisor(a);
    const auto& items = comps(a);
    if (a == zero()) return {false, std::nullopt};
    for (size_t i = 0; i < factors_.size(); ++i) {
      const Ring& f = *factors_[i];
      std::optional<RingElement> killer;
      if (f.is_zero(items[i])) {
        killer = f.one();
      } else {
        auto v = f.is_zero_divisor(items[i]);
        if (v.zero_divisor) killer = *v.witness;
      }
      if (killer) {
        Tuple w;
        for (size_t j = 0; j < factors_.size(); ++j)
          w.items.push_back(j == i ? *killer : factors_[j]->zero());
        return {true, RingElement(RingElement::Payload{std::move(w)})};
      }
    }
    return {false, std::nullopt};
  }

  DivisibilityVerdict divides(const RingElement& a, const RingElement& b) const override {
    if (has_elements()) return Ring::divides(a, b);
    const auto& ia = comps(a);
    const auto& ib = comps(b);
    Tuple w;
    for (size_t i = 0; i < factors_.size(); ++i) {
      auto v = factors_[i]->divides(ia[i], ib[i]);
      if (!v.divides) return {false, std::nullopt};
      w.items.push_back(*v.witness);
    }
    return {true, RingElement(RingElement::Payload{std::move(w)})};
  }

  LocalityVerdict is_local() const override {
    if (has_elements()) return Ring::is_local();
    if (factors_.size() == 1) return factors_[0]->is_local();
    // (0,1,..,1) and (1,0,..,0) are non-units with unit sum
    Tuple x, y;
    for (size_t i = 0; i < factors_.size(); ++i) {
      x.items.push_back(i == 0 ? factors_[i]->zero() : factors_[i]->one());
      y.items.push_back(i == 0 ? factors_[i]->one() : factors_[i]->zero());
    }
    LocalityVerdict v;
    v.local = false;
    v.witness = std::make_pair(RingElement(RingElement::Payload{std::move(x)}),
                               RingElement(RingElement::Payload{std::move(y)}));
    return v;
  }

 private:
  static std::string make_name(const std::vector<RingHandle>& factors) {
    std::string out;
    for (size_t i = 0; i < factors.size(); ++i) {
      if (i) out += " x ";
      out += factors[i]->name();
    }
    return out;
  }

  static std::optional<RingDescriptor> make_descriptor(const std::vector<RingHandle>& factors) {
    ProductDesc d;
    for (const auto& f : factors) {
      if (!f->descriptor()) return std::nullopt;
      d.factors.push_back(*f->descriptor());
    }
    return RingDescriptor{std::move(d)};
  }

  static RingOrder make_order(const std::vector<RingHandle>& factors) {
    Int total = 1;
    for (const auto& f : factors) {
      if (!f->is_finite()) return RingOrder::infinite();
      total *= f->order().value;
    }
    return RingOrder::of(total);
  }

  const std::vector<RingElement>& comps(const RingElement& a) const {
    const auto& t = a.tuple();
    if (t.items.size() != factors_.size())
      throw representation_error("tuple arity mismatch in " + name());
    return t.items;
  }

  template <class Op>
  RingElement zip(const RingElement& a, const RingElement& b, Op op) const {
    const auto& ia = comps(a);
    const auto& ib = comps(b);
    Tuple t;
    for (size_t i = 0; i < factors_.size(); ++i) t.items.push_back(op(*factors_[i], ia[i], ib[i]));
    return RingElement(RingElement::Payload{std::move(t)});
  }

  std::vector<RingHandle> factors_;
};

}  // namespace ringlab

#endif  // RINGLAB_RINGS_PRODUCT_HPP
