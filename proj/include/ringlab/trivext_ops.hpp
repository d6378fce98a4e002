#ifndef RINGLAB_TRIVEXT_OPS_HPP
#define RINGLAB_TRIVEXT_OPS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/ideal.hpp"
#include "ringlab/module.hpp"
#include "ringlab/rings/trivial_extension.hpp"

namespace ringlab {

enum class ValuationReason {
  BaseNotField,
  ModuleNotIsoBase,
  BaseFieldModuleIsoBase,
  BaseValuationDomainModuleIsK,
  MixedModule,
  NonTorsionNotK
};

inline const char* to_string(ValuationReason r) {
  switch (r) {
    case ValuationReason::BaseNotField: return "base ring is not a field";
    case ValuationReason::ModuleNotIsoBase: return "module is not isomorphic to the base";
    case ValuationReason::BaseFieldModuleIsoBase: return "field base with module isomorphic to it";
    case ValuationReason::BaseValuationDomainModuleIsK:
      return "valuation domain base with module the fraction field";
    case ValuationReason::MixedModule: return "module mixes torsion and torsion-free parts";
    case ValuationReason::NonTorsionNotK:
      return "module is non-torsion but not the fraction field";
  }
  return "?";
}

struct ValuationPrediction {
  bool verdict = false;
  ValuationReason reason = ValuationReason::BaseNotField;
  // incomparable pair in A x E, for the false cases with a closed form
  std::optional<std::pair<RingElement, RingElement>> witness;
};

namespace trivext_detail {

inline RingElement make_pair_payload(RingElement a, ModuleElement e) {
  TrivPair p;
  p.base = Box<RingElement>(std::move(a));
  p.mod = Box<ModuleElement>(std::move(e));
  return RingElement(RingElement::Payload{std::move(p)});
}

inline bool finite_ring_is_field(const Ring& R) {
  for (const RingElement& a : R.elements()) {
    if (R.is_zero(a)) continue;
    if (!R.is_unit(a).unit) return false;
  }
  return true;
}

}  // namespace trivext_detail

// Decides whether A x E is a valuation ring from the structure of (A, E)
// alone. Finite pairs: A must be a field and E a cyclic faithful module of
// the same cardinality. Valuation-domain pairs: E must be the fraction
// field, a single summand.
inline ValuationPrediction predict_valuation(const RingHandle& base, const ModuleHandle& module) {
  using namespace trivext_detail;
  ValuationPrediction out;
  if (const auto* fs = dynamic_cast<const DvrFormalSumModule*>(module.get())) {
    const auto dvr = fs->dvr();
    const auto& ss = fs->summands();
    const bool torsion = fs->has_torsion();
    const bool nontorsion = fs->has_free() || fs->has_fraction_field();
    if (ss.size() == 1 && fs->has_fraction_field()) {
      out.verdict = true;
      out.reason = ValuationReason::BaseValuationDomainModuleIsK;
      return out;
    }
    if (torsion && nontorsion) {
      out.verdict = false;
      out.reason = ValuationReason::MixedModule;
      size_t ti = 0, fi = 0;
      for (size_t i = 0; i < ss.size(); ++i) {
        if (std::holds_alternative<CyclicTorsionSummand>(ss[i])) ti = i;
        else fi = i;
      }
      out.witness = std::make_pair(make_pair_payload(dvr->zero(), fs->unit_vector(std::min(ti, fi))),
                                   make_pair_payload(dvr->zero(), fs->unit_vector(std::max(ti, fi))));
      return out;
    }
    if (torsion) {
      // E finitely generated torsion over a non-field base
      out.verdict = false;
      out.reason = ValuationReason::BaseNotField;
      out.witness = std::make_pair(make_pair_payload(dvr->uniformizer(), fs->zero()),
                                   make_pair_payload(dvr->zero(), fs->unit_vector(0)));
      return out;
    }
    out.verdict = false;
    out.reason = ValuationReason::NonTorsionNotK;
    if (ss.size() >= 2) {
      out.witness = std::make_pair(make_pair_payload(dvr->zero(), fs->unit_vector(0)),
                                   make_pair_payload(dvr->zero(), fs->unit_vector(1)));
    } else {
      out.witness = std::make_pair(make_pair_payload(dvr->uniformizer(), fs->zero()),
                                   make_pair_payload(dvr->zero(), fs->unit_vector(0)));
    }
    return out;
  }
  // finite case
  if (!base->is_finite() || !base->has_elements())
    throw capability_error("no valuation prediction for this base/module family");
  if (!finite_ring_is_field(*base)) {
    out.verdict = false;
    out.reason = ValuationReason::BaseNotField;
    return out;
  }
  bool iso = false;
  if (module->order().finite && module->order().value == base->order().value) {
    if (auto g = module->cyclic_generator()) {
      Ideal ann = module->annihilator_of_element(*g);
      iso = ann.is_zero_ideal();
    }
  }
  out.verdict = iso;
  out.reason = iso ? ValuationReason::BaseFieldModuleIsoBase : ValuationReason::ModuleNotIsoBase;
  return out;
}

// Annihilator of an element of A x E, with the finite-generation flag. Over
// A x K the annihilator of (0, x) is 0 x K, which no finite set generates:
// finitely many x_i = a_i / d would give K = A x_1 + ... + A x_n inside
// (1/d) A.
inline Ideal annihilator_in_triv_ext(const RingHandle& ring, const RingElement& r_in) {
  const auto* T = dynamic_cast<const TrivialExtensionRing*>(ring.get());
  if (!T) throw usage_error(ring->name() + " is not a trivial extension");
  if (ring->has_elements()) return annihilator_ideal(ring, r_in);

  const RingElement r = ring->canonicalize(r_in);
  const auto* fs = dynamic_cast<const DvrFormalSumModule*>(T->module().get());
  const auto dvr = std::dynamic_pointer_cast<const DvrRing>(T->base_ring());
  if (!fs || !dvr) throw capability_error("no annihilator closed form for " + ring->name());
  const RingElement& a = T->base_part(r);
  const ModuleElement& e = T->mod_part(r);

  Ideal I;
  I.ring = ring;
  if (ring->is_zero(r)) {
    I.generators = {ring->one()};
    I.principal_generator = ring->one();
    I.note = "(1)";
    return I;
  }
  if (!dvr->is_zero(a)) {
    // (b,y)(a,e) = (ab, ay + be) = 0 forces b = 0, then a y = 0
    const int va = dvr->valuation(a);
    std::vector<RingElement> gens;
    const auto& ss = fs->summands();
    for (size_t i = 0; i < ss.size(); ++i) {
      if (const auto* c = std::get_if<CyclicTorsionSummand>(&ss[i])) {
        const int t = c->exponent - std::min(va, c->exponent);
        if (t < c->exponent) {
          ModuleElement gen = fs->zero();
          gen.comps[i] = dvr->torsion_pi_power(c->exponent, t);
          gens.push_back(T->pair(dvr->zero(), std::move(gen)));
        }
      }
    }
    if (gens.empty()) {
      I.generators = {};
      I.principal_generator = ring->zero();
      I.note = "(0)";
      return I;
    }
    I.generators = std::move(gens);
    I.note = "0 x (0 :_E " + dvr->format(a) + ")";
    return I;
  }
  // r = (0, e), e != 0: annihilator is (0 :_A e) x E
  Ideal ann_a = fs->annihilator_of_element(e);
  const bool e_fg = !fs->has_fraction_field();
  I.finitely_generated = e_fg;
  if (e_fg) {
    for (const auto& g : ann_a.generators) I.generators.push_back(T->pair(g, fs->zero()));
    for (size_t i = 0; i < fs->summands().size(); ++i)
      I.generators.push_back(T->pair(dvr->zero(), fs->unit_vector(i)));
  }
  I.note = (ann_a.is_zero_ideal() ? std::string("0") : ann_a.note) + " x E";
  if (ann_a.is_zero_ideal() && fs->summands().size() == 1 && fs->has_fraction_field())
    I.note = "0 x K";
  return I;
}

// Sampled refutations that 0 x K admits a finite generating set: any
// candidate x_1..x_n spans pi^m A with m = min v(x_i), and pi^(m-1) lies
// outside.
struct NonFgProbe {
  std::vector<RingElement> sample;  // nonzero elements of K
  int min_valuation = 0;
  RingElement outside;
  bool verified = false;
};

inline std::vector<NonFgProbe> non_fg_certificate(const RingHandle& ring, int probes,
                                                  std::uint64_t seed, SampleBounds bounds = {}) {
  const auto* T = dynamic_cast<const TrivialExtensionRing*>(ring.get());
  if (!T) throw usage_error(ring->name() + " is not a trivial extension");
  const auto* fs = dynamic_cast<const DvrFormalSumModule*>(T->module().get());
  const auto dvr = std::dynamic_pointer_cast<const DvrRing>(T->base_ring());
  if (!fs || !dvr || fs->summands().size() != 1 || !fs->has_fraction_field())
    throw usage_error("certificate applies to A x K only");
  const auto K = dvr->fraction_field_ring();
  Rng rng(Rng::derive(seed, "non-fg-certificate:" + ring->name()));
  std::vector<NonFgProbe> out;
  for (int p = 0; p < probes; ++p) {
    NonFgProbe probe;
    const int n = static_cast<int>(rng.uniform(1, 4));
    int minv = DvrRing::kInfiniteValuation;
    for (int i = 0; i < n; ++i) {
      RingElement x = K->sample(rng, bounds);
      while (K->is_zero(x)) x = K->sample(rng, bounds);
      minv = std::min(minv, K->valuation(x));
      probe.sample.push_back(std::move(x));
    }
    probe.min_valuation = minv;
    const int t = minv - 1;
    RingElement outside = t >= 0 ? dvr->pi_power(t)
                                 : K->exact_div(K->one(), dvr->pi_power(-t));
    probe.outside = K->canonicalize(outside);
    // A x_1 + ... + A x_n = pi^minv A, so membership is v(y) >= minv
    probe.verified = K->valuation(probe.outside) < minv;
    for (const auto& x : probe.sample)
      if (K->valuation(x) < minv) probe.verified = false;
    out.push_back(std::move(probe));
  }
  return out;
}

}  // namespace ringlab

#endif  // RINGLAB_TRIVEXT_OPS_HPP
