#ifndef RINGLAB_RINGS_TRIVIAL_EXTENSION_HPP
#define RINGLAB_RINGS_TRIVIAL_EXTENSION_HPP

#include <memory>
#include <string>
#include <vector>

#include "ringlab/module.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

// A x E with multiplication (a,e)(b,f) = (ab, af+be); 0 x E squares to zero.
// Finite instances are materialized; over a DVR base with a formal-sum module
// every query has a closed form built on the module solvers.
class TrivialExtensionRing final : public Ring {
 public:
  TrivialExtensionRing(RingHandle base, ModuleHandle module, Limits limits)
      : Ring("triv(" + base->name() + ", " + module->name() + ")",
             make_descriptor(*base, *module), make_order(*base, *module), limits),
        base_(std::move(base)),
        module_(std::move(module)) {
    if (module_->base()->name() != base_->name())
      throw usage_error("module base " + module_->base()->name() + " does not match " +
                        base_->name());
    if (module_->is_zero_module())
      throw usage_error("trivial extension requires a nonzero module");
    if (is_finite() && materializable(order().value)) {
      std::vector<RingElement> es;
      for (const RingElement& a : base_->elements())
        for (const ModuleElement& e : module_->elements()) es.push_back(pair(a, e));
      materialize(std::move(es));
    }
  }

  const RingHandle& base_ring() const { return base_; }
  const ModuleHandle& module() const { return module_; }

  RingElement pair(RingElement a, ModuleElement e) const {
    TrivPair p;
    p.base = Box<RingElement>(std::move(a));
    p.mod = Box<ModuleElement>(std::move(e));
    return RingElement(RingElement::Payload{std::move(p)});
  }

  const RingElement& base_part(const RingElement& r) const { return *r.triv_pair().base; }
  const ModuleElement& mod_part(const RingElement& r) const { return *r.triv_pair().mod; }

  RingElement zero() const override { return pair(base_->zero(), module_->zero()); }
  RingElement one() const override { return pair(base_->one(), module_->zero()); }

  RingElement add(const RingElement& x, const RingElement& y) const override {
    return pair(base_->add(base_part(x), base_part(y)),
                module_->add(mod_part(x), mod_part(y)));
  }

  RingElement neg(const RingElement& x) const override {
    return pair(base_->neg(base_part(x)), module_->neg(mod_part(x)));
  }

  RingElement mul(const RingElement& x, const RingElement& y) const override {
    const RingElement& a = base_part(x);
    const RingElement& b = base_part(y);
    return pair(base_->mul(a, b), module_->add(module_->scalar(a, mod_part(y)),
                                               module_->scalar(b, mod_part(x))));
  }

  RingElement canonicalize(const RingElement& x) const override {
    return pair(base_->canonicalize(base_part(x)), module_->canonicalize(mod_part(x)));
  }

  RingElement from_integer(const Int& n) const override {
    return pair(base_->from_integer(n), module_->zero());
  }

  std::string format(const RingElement& x) const override {
    return "(" + base_->format(base_part(x)) + ", " + module_->format(mod_part(x)) + ")";
  }

  RingElement sample(Rng& rng, const SampleBounds& bounds) const override {
    RingElement a = base_->sample(rng, bounds);
    ModuleElement e = module_->sample(rng, bounds);
    return pair(std::move(a), std::move(e));
  }

  // (a,e) is a unit iff a is: inverse (a^{-1}, -a^{-2} e).
  UnitVerdict is_unit(const RingElement& x) const override {
    if (has_elements()) return Ring::is_unit(x);
    const RingElement& a = base_part(checked(x));
    auto v = base_->is_unit(a);
    if (!v.unit) return {false, std::nullopt};
    const RingElement& w = *v.inverse;
    ModuleElement f = module_->neg(module_->scalar(w, module_->scalar(w, mod_part(x))));
    return {true, pair(w, std::move(f))};
  }

  ZeroDivisorVerdict is_zero_divisor(const RingElement& x) const override {
    if (has_elements()) return Ring::is_zero_divisor(x);
    const RingElement& cx = checked(x);
    if (is_zero(cx)) return {false, std::nullopt};
    const RingElement& a = base_part(cx);
    const auto* fs = dynamic_cast<const DvrFormalSumModule*>(module_.get());
    const auto* dvr = dynamic_cast<const DvrRing*>(base_.get());
    if (!fs || !dvr) throw capability_error("no zero-divisor criterion for " + name());
    if (base_->is_zero(a)) {
      // (0,e)(0,f) = (0,0) for every f
      size_t i = 0;
      return {true, pair(base_->zero(), fs->unit_vector(i))};
    }
    // a != 0 kills a torsion element iff v(a) >= 1 and torsion exists
    if (dvr->valuation(a) >= 1) {
      const auto& ss = fs->summands();
      for (size_t i = 0; i < ss.size(); ++i) {
        if (const auto* c = std::get_if<CyclicTorsionSummand>(&ss[i])) {
          ModuleElement f = fs->zero();
          f.comps[i] = dvr->torsion_pi_power(c->exponent, c->exponent - 1);
          return {true, pair(base_->zero(), std::move(f))};
        }
      }
    }
    return {false, std::nullopt};
  }

  DivisibilityVerdict divides(const RingElement& x, const RingElement& y) const override {
    if (has_elements()) return Ring::divides(x, y);
    const RingElement& cx = checked(x);
    const RingElement& cy = checked(y);
    const RingElement& a = base_part(cx);
    const RingElement& b = base_part(cy);
    if (is_zero(cx))
      return is_zero(cy) ? DivisibilityVerdict{true, zero()} : DivisibilityVerdict{false, std::nullopt};
    if (!base_->is_zero(a)) {
      // need c = b/a in A, then a z = f - c e solvable in E
      auto dv = base_->divides(a, b);
      if (!dv.divides) return {false, std::nullopt};
      const RingElement& c = *dv.witness;
      ModuleElement rhs = module_->sub(mod_part(cy), module_->scalar(c, mod_part(cx)));
      auto z = module_->solve_module(a, rhs);
      if (!z) return {false, std::nullopt};
      RingElement w = pair(c, std::move(*z));
      verify_product(cx, w, cy);
      return {true, std::move(w)};
    }
    // (0,e) divides (b,f) only when b = 0 and f = c e for some c
    if (!base_->is_zero(b)) return {false, std::nullopt};
    auto c = module_->solve_scalar(mod_part(cx), mod_part(cy));
    if (!c) return {false, std::nullopt};
    RingElement w = pair(*c, module_->zero());
    verify_product(cx, w, cy);
    return {true, std::move(w)};
  }

  LocalityVerdict is_local() const override {
    if (has_elements()) return Ring::is_local();
    LocalityVerdict bv = base_->is_local();
    LocalityVerdict v;
    v.local = bv.local;
    if (bv.local) {
      v.maximal_ideal_note = "m_A x E where m_A = " +
                             (bv.maximal_ideal_note.empty() ? std::string("(non-units of A)")
                                                            : bv.maximal_ideal_note);
    } else if (bv.witness) {
      v.witness = std::make_pair(pair(bv.witness->first, module_->zero()),
                                 pair(bv.witness->second, module_->zero()));
    }
    return v;
  }

 private:
  static std::optional<RingDescriptor> make_descriptor(const Ring& base, const Module& module) {
    if (!base.descriptor()) return std::nullopt;
    TrivialExtensionDesc d;
    d.base = Box<RingDescriptor>(*base.descriptor());
    d.module = Box<ModuleDescriptor>(module.descriptor());
    return RingDescriptor{std::move(d)};
  }

  static RingOrder make_order(const Ring& base, const Module& module) {
    if (!base.is_finite() || !module.is_finite()) return RingOrder::infinite();
    return RingOrder::of(base.order().value * module.order().value);
  }

  void verify_product(const RingElement& a, const RingElement& w, const RingElement& b) const {
    if (!(mul(a, w) == b)) throw internal_error("divisibility witness failed in " + name());
  }

  RingHandle base_;
  ModuleHandle module_;
};

}  // namespace ringlab

#endif  // RINGLAB_RINGS_TRIVIAL_EXTENSION_HPP
