#ifndef RINGLAB_RINGS_SUBSET_HPP
#define RINGLAB_RINGS_SUBSET_HPP

#include <string>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

// A factor e*R of a materialized commutative ring at an idempotent e, with
// inherited operations and identity e. Always materialized; carries no
// standalone descriptor.
class SubsetRing final : public Ring {
 public:
  SubsetRing(RingHandle parent, RingElement identity, std::vector<RingElement> elems)
      : Ring("factor(" + parent->name() + " @ " + parent->format(identity) + ")", std::nullopt,
             RingOrder::of(Int(elems.size())), parent->limits()),
        parent_(std::move(parent)),
        identity_(std::move(identity)) {
    if (elems.empty()) throw usage_error("empty factor ring");
    materialize(std::move(elems));
    for (const RingElement& a : elements())
      if (!(parent_->mul(identity_, a) == a))
        throw internal_error("factor elements not fixed by the idempotent");
  }

  const RingHandle& parent() const { return parent_; }

  RingElement zero() const override { return parent_->zero(); }
  RingElement one() const override { return identity_; }
  RingElement add(const RingElement& a, const RingElement& b) const override {
    return parent_->add(a, b);
  }
  RingElement neg(const RingElement& a) const override { return parent_->neg(a); }
  RingElement mul(const RingElement& a, const RingElement& b) const override {
    return parent_->mul(a, b);
  }

  RingElement canonicalize(const RingElement& a) const override {
    RingElement c = parent_->canonicalize(a);
    index_of(c);  // membership check
    return c;
  }

  RingElement from_integer(const Int& n) const override {
    return parent_->mul(parent_->from_integer(n), identity_);
  }

  std::string format(const RingElement& a) const override { return parent_->format(a); }

 private:
  RingHandle parent_;
  RingElement identity_;
};

}  // namespace ringlab

#endif  // RINGLAB_RINGS_SUBSET_HPP
