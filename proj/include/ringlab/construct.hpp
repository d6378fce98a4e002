#ifndef RINGLAB_CONSTRUCT_HPP
#define RINGLAB_CONSTRUCT_HPP

#include <memory>
#include <vector>

#include "ringlab/descriptor.hpp"
#include "ringlab/module.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/rings/localized.hpp"
#include "ringlab/rings/monomial_quotient.hpp"
#include "ringlab/rings/poly_quotient.hpp"
#include "ringlab/rings/product.hpp"
#include "ringlab/rings/trivial_extension.hpp"
#include "ringlab/rings/zmod.hpp"

namespace ringlab {

inline RingHandle construct_ring(const RingDescriptor& d, Limits limits = {});

inline ModuleHandle construct_module(const RingHandle& base, const ModuleDescriptor& d) {
  if (const auto* p = d.get_if<PresentedModuleDesc>())
    return std::make_shared<const PresentedModule>(base, *p);
  const auto& fs = std::get<DvrFormalSumDesc>(d.v);
  auto dvr = std::dynamic_pointer_cast<const DvrRing>(base);
  if (!dvr) throw usage_error("formal sums need a discrete valuation base, got " + base->name());
  return std::make_shared<const DvrFormalSumModule>(std::move(dvr), fs);
}

inline RingHandle construct_ring(const RingDescriptor& d, Limits limits) {
  struct Visitor {
    Limits limits;
    RingHandle operator()(const ZModDesc& z) const {
      return std::make_shared<const ZModRing>(z.modulus, limits);
    }
    RingHandle operator()(const PolyQuotientDesc& p) const {
      return std::make_shared<const PolyQuotientRing>(p.p, p.modulus, p.var, limits);
    }
    RingHandle operator()(const MonomialQuotientDesc& m) const {
      return std::make_shared<const MonomialQuotientRing>(m.p, m.vars, m.monomials, limits);
    }
    RingHandle operator()(const ProductDesc& p) const {
      if (p.factors.empty()) throw usage_error("product of no rings");
      std::vector<RingHandle> fs;
      for (const auto& f : p.factors) fs.push_back(construct_ring(f, limits));
      return std::make_shared<const ProductRing>(std::move(fs), limits);
    }
    RingHandle operator()(const TrivialExtensionDesc& t) const {
      RingHandle base = construct_ring(*t.base, limits);
      ModuleHandle mod = construct_module(base, *t.module);
      return std::make_shared<const TrivialExtensionRing>(std::move(base), std::move(mod), limits);
    }
    RingHandle operator()(const LocalizedIntegersDesc& z) const {
      return std::make_shared<const ZLocalizedRing>(z.p, false, limits);
    }
    RingHandle operator()(const LocalizedPolynomialsDesc& f) const {
      return std::make_shared<const PolyLocalizedRing>(f.q, false, limits);
    }
    RingHandle operator()(const FractionFieldDesc& f) const {
      if (const auto* z = f.dvr->get_if<LocalizedIntegersDesc>())
        return std::make_shared<const ZLocalizedRing>(z->p, true, limits);
      if (const auto* q = f.dvr->get_if<LocalizedPolynomialsDesc>())
        return std::make_shared<const PolyLocalizedRing>(q->q, true, limits);
      throw usage_error("fraction fields are available for the localized families only");
    }
  };
  return std::visit(Visitor{limits}, d.v);
}

// --- convenience builders -----------------------------------------------------

inline RingHandle make_zmod(std::int64_t n, Limits limits = {}) {
  return construct_ring(RingDescriptor{ZModDesc{n}}, limits);
}

// GF(q) for a prime power q: Z/p when q is prime, otherwise F_p[x]/(f) with
// the canonical irreducible f.
inline RingHandle make_gf(std::int64_t q, Limits limits = {}) {
  const GaloisField& F = GaloisField::get(q);
  if (F.degree() == 1) return make_zmod(F.p(), limits);
  return construct_ring(RingDescriptor{PolyQuotientDesc{F.p(), F.modulus(), "x"}}, limits);
}

// F_p[x]/(x^k), the basic chain ring that is not reduced.
inline RingHandle make_fp_chain(std::int64_t p, int k, Limits limits = {}) {
  std::vector<std::int64_t> f(static_cast<size_t>(k) + 1, 0);
  f.back() = 1;
  return construct_ring(RingDescriptor{PolyQuotientDesc{p, std::move(f), "x"}}, limits);
}

inline RingHandle make_product(std::vector<RingHandle> factors, Limits limits = {}) {
  return std::make_shared<const ProductRing>(std::move(factors), limits);
}

inline RingHandle make_zloc(std::int64_t p, Limits limits = {}) {
  return construct_ring(RingDescriptor{LocalizedIntegersDesc{p}}, limits);
}

inline RingHandle make_floc(std::int64_t q, Limits limits = {}) {
  return construct_ring(RingDescriptor{LocalizedPolynomialsDesc{q}}, limits);
}

// A/(a1,..,ak) as a rank-1 presented module.
inline ModuleHandle make_cyclic_quotient(const RingHandle& base,
                                         const std::vector<RingElement>& gens) {
  PresentedModuleDesc d;
  d.rank = 1;
  for (const auto& g : gens) d.relations.push_back({g});
  return construct_module(base, ModuleDescriptor{std::move(d)});
}

inline ModuleHandle make_free_module(const RingHandle& base, int rank) {
  PresentedModuleDesc d;
  d.rank = rank;
  return construct_module(base, ModuleDescriptor{std::move(d)});
}

inline ModuleHandle make_presented_module(const RingHandle& base, int rank,
                                          std::vector<std::vector<RingElement>> rows) {
  PresentedModuleDesc d;
  d.rank = rank;
  d.relations = std::move(rows);
  return construct_module(base, ModuleDescriptor{std::move(d)});
}

inline ModuleHandle make_formal_sum(const RingHandle& dvr, std::vector<Summand> summands) {
  DvrFormalSumDesc d;
  d.summands = std::move(summands);
  return construct_module(dvr, ModuleDescriptor{std::move(d)});
}

inline RingHandle make_trivial_extension(const RingHandle& base, const ModuleHandle& module,
                                         Limits limits = {}) {
  return std::make_shared<const TrivialExtensionRing>(base, module, limits);
}

}  // namespace ringlab

#endif  // RINGLAB_CONSTRUCT_HPP
