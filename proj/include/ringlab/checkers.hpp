#ifndef RINGLAB_CHECKERS_HPP
#define RINGLAB_CHECKERS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/ideal.hpp"
#include "ringlab/local_decomposition.hpp"
#include "ringlab/rings/localized.hpp"
#include "ringlab/rings/product.hpp"
#include "ringlab/trivext_ops.hpp"

namespace ringlab {

struct ValuationRingVerdict {
  bool valuation = false;
  bool methods_agree = true;
  std::optional<std::pair<Ideal, Ideal>> witness;  // incomparable ideal pair
  std::string method_note;
};

struct ArithmeticalVerdict {
  bool arithmetical = false;
  bool methods_agree = true;
  std::optional<std::array<Ideal, 3>> witness;  // (a+b) cap c != (a cap c)+(b cap c)
  std::string method_note;
};

namespace checker_detail {

// Method (i): the ideal lattice is totally ordered. A chain of principal
// ideals forces every ideal to be principal (it is the largest orbit of its
// members), so checking the deduplicated orbits decides the full lattice.
inline std::optional<std::pair<IndexSet, IndexSet>> principal_chain_failure(
    const std::vector<IndexSet>& atlas) {
  for (size_t i = 0; i + 1 < atlas.size(); ++i) {
    if (!index_subset(atlas[i], atlas[i + 1])) {
      // not necessarily adjacent in the sorted order; find a witness pair
      for (size_t a = 0; a < atlas.size(); ++a)
        for (size_t b = a + 1; b < atlas.size(); ++b)
          if (!index_subset(atlas[a], atlas[b]) && !index_subset(atlas[b], atlas[a]))
            return std::make_pair(atlas[a], atlas[b]);
      throw internal_error("chain failure without incomparable pair");
    }
  }
  // equal-size distinct sets are incomparable and sort adjacently
  for (size_t i = 0; i + 1 < atlas.size(); ++i)
    if (atlas[i].size() == atlas[i + 1].size())
      return std::make_pair(atlas[i], atlas[i + 1]);
  return std::nullopt;
}

}  // namespace checker_detail

inline ValuationRingVerdict is_valuation_ring(const RingHandle& ring,
                                              std::int64_t max_order = 4096) {
  ValuationRingVerdict out;
  if (ring->has_elements()) {
    if (ring->order().value > max_order)
      throw capability_error("valuation check bound exceeded for " + ring->name());
    const Ring& R = *ring;
    std::vector<IndexSet> atlas = principal_ideal_atlas(R);
    auto failure = checker_detail::principal_chain_failure(atlas);
    const bool method1 = !failure.has_value();
    // method (ii): local and every 2-generated ideal principal
    bool method2 = R.is_local().local;
    if (method2) {
      std::set<IndexSet> atlas_set(atlas.begin(), atlas.end());
      for (size_t i = 0; i < atlas.size() && method2; ++i)
        for (size_t j = i + 1; j < atlas.size() && method2; ++j) {
          IndexSet s = pairwise_sum(R, atlas[i], atlas[j]);
          if (!atlas_set.count(s)) method2 = false;
        }
    }
    out.valuation = method1;
    out.methods_agree = (method1 == method2);
    out.method_note = "principal-ideal chain vs local + 2-generated principal";
    if (failure)
      out.witness = std::make_pair(make_ideal_from_indices(ring, failure->first),
                                   make_ideal_from_indices(ring, failure->second));
    return out;
  }
  // closed forms
  if (dynamic_cast<const DvrRing*>(ring.get())) {
    out.valuation = true;
    out.method_note = "closed form: discrete valuation family";
    return out;
  }
  if (const auto* T = dynamic_cast<const TrivialExtensionRing*>(ring.get())) {
    ValuationPrediction p = predict_valuation(T->base_ring(), T->module());
    out.valuation = p.verdict;
    out.method_note = std::string("closed form: ") + to_string(p.reason);
    if (!p.verdict && p.witness) {
      Ideal I, J;
      I.ring = ring;
      I.generators = {p.witness->first};
      I.note = "(" + ring->format(p.witness->first) + ")";
      J.ring = ring;
      J.generators = {p.witness->second};
      J.note = "(" + ring->format(p.witness->second) + ")";
      out.witness = std::make_pair(std::move(I), std::move(J));
    }
    return out;
  }
  if (const auto* P = dynamic_cast<const ProductRing*>(ring.get())) {
    if (P->factors().size() == 1) return is_valuation_ring(P->factors()[0], max_order);
    out.valuation = false;
    out.method_note = "closed form: nontrivial product is not local";
    Ideal I, J;
    I.ring = ring;
    LocalityVerdict lv = P->is_local();
    if (lv.witness) {
      I.generators = {lv.witness->first};
      I.note = "(" + ring->format(lv.witness->first) + ")";
      J.ring = ring;
      J.generators = {lv.witness->second};
      J.note = "(" + ring->format(lv.witness->second) + ")";
      out.witness = std::make_pair(std::move(I), std::move(J));
    }
    return out;
  }
  throw capability_error("no valuation criterion for " + ring->name());
}

inline ArithmeticalVerdict is_arithmetical(const RingHandle& ring, std::int64_t max_order = 64) {
  ArithmeticalVerdict out;
  if (ring->has_elements()) {
    if (ring->order().value > max_order)
      throw capability_error("arithmetical check bound exceeded for " + ring->name());
    std::vector<Ideal> ideals = all_ideals(ring, max_order);
    // method (i): the distributive law over every ideal triple
    bool method1 = true;
    for (size_t a = 0; a < ideals.size() && method1; ++a)
      for (size_t b = 0; b < ideals.size() && method1; ++b)
        for (size_t c = 0; c < ideals.size(); ++c) {
          Ideal lhs = lattice_intersect(lattice_sum(ideals[a], ideals[b], false), ideals[c], false);
          Ideal rhs = lattice_sum(lattice_intersect(ideals[a], ideals[c], false),
                                  lattice_intersect(ideals[b], ideals[c], false), false);
          if (!lhs.same_set(rhs)) {
            method1 = false;
            out.witness = std::array<Ideal, 3>{ideals[a], ideals[b], ideals[c]};
            break;
          }
        }
    // method (ii): every local factor is a valuation ring
    bool method2 = true;
    LocalDecomposition dec = local_decomposition(ring);
    for (const auto& f : dec.factors)
      if (!is_valuation_ring(std::static_pointer_cast<const Ring>(f.factor), max_order).valuation)
        method2 = false;
    out.arithmetical = method1;
    out.methods_agree = (method1 == method2);
    out.method_note = "ideal-triple distributivity vs valuation local factors";
    return out;
  }
  if (dynamic_cast<const DvrRing*>(ring.get())) {
    out.arithmetical = true;
    out.method_note = "closed form: valuation family";
    return out;
  }
  if (const auto* T = dynamic_cast<const TrivialExtensionRing*>(ring.get())) {
    // the base is local here, so arithmetical reduces to the valuation check
    ValuationPrediction p = predict_valuation(T->base_ring(), T->module());
    out.arithmetical = p.verdict;
    out.method_note = "closed form: local ring, arithmetical iff valuation";
    return out;
  }
  if (const auto* P = dynamic_cast<const ProductRing*>(ring.get())) {
    out.arithmetical = true;
    for (const auto& f : P->factors())
      if (!is_arithmetical(f, max_order).arithmetical) out.arithmetical = false;
    out.method_note = "closed form: factorwise";
    return out;
  }
  throw capability_error("no arithmetical criterion for " + ring->name());
}

}  // namespace ringlab

#endif  // RINGLAB_CHECKERS_HPP
