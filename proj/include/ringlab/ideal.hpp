#ifndef RINGLAB_IDEAL_HPP
#define RINGLAB_IDEAL_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

// An ideal of a catalog ring. Finite materialized rings carry the full
// sorted element-index set; infinite families carry generators and a
// symbolic note instead. The element set is validated for closure on
// construction.
class Ideal {
 public:
  RingHandle ring;
  std::vector<RingElement> generators;
  std::optional<std::vector<std::int32_t>> element_indices;  // sorted
  bool finitely_generated = true;
  std::optional<RingElement> principal_generator;
  std::string note;

  bool has_elements() const { return element_indices.has_value(); }

  Int size() const {
    if (!element_indices) throw capability_error("ideal has no element set");
    return Int(element_indices->size());
  }

  bool is_zero_ideal() const {
    if (element_indices) return element_indices->size() == 1;
    return generators.empty() && note == "(0)";
  }

  std::vector<RingElement> element_list() const {
    std::vector<RingElement> out;
    for (std::int32_t i : *element_indices) out.push_back(ring->elem(i));
    return out;
  }

  bool contains_index(std::int32_t i) const {
    const auto& v = *element_indices;
    return std::binary_search(v.begin(), v.end(), i);
  }

  bool contains(const RingElement& a) const { return contains_index(ring->index_of(a)); }

  bool same_set(const Ideal& other) const {
    return *element_indices == *other.element_indices;
  }

  bool subset_of(const Ideal& other) const {
    return std::includes(other.element_indices->begin(), other.element_indices->end(),
                         element_indices->begin(), element_indices->end());
  }
};

using IndexSet = std::vector<std::int32_t>;

// g*R as a sorted index set.
inline IndexSet principal_orbit(const Ring& R, std::int32_t gi) {
  const int n = R.elem_count();
  std::vector<char> mark(static_cast<size_t>(n), 0);
  for (int j = 0; j < n; ++j) mark[static_cast<size_t>(R.mul_i(gi, j))] = 1;
  IndexSet out;
  for (int i = 0; i < n; ++i)
    if (mark[static_cast<size_t>(i)]) out.push_back(i);
  return out;
}

// {s + t : s in A, t in B}; the sum of two ideals is exactly this set.
inline IndexSet pairwise_sum(const Ring& R, const IndexSet& A, const IndexSet& B) {
  const int n = R.elem_count();
  std::vector<char> mark(static_cast<size_t>(n), 0);
  for (std::int32_t s : A)
    for (std::int32_t t : B) mark[static_cast<size_t>(R.add_i(s, t))] = 1;
  IndexSet out;
  for (int i = 0; i < n; ++i)
    if (mark[static_cast<size_t>(i)]) out.push_back(i);
  return out;
}

// Ideal generated by the given elements: sum of their orbits.
inline IndexSet ideal_closure(const Ring& R, const std::vector<std::int32_t>& gen_indices) {
  IndexSet span{static_cast<std::int32_t>(R.zero_index())};
  for (std::int32_t g : gen_indices) span = pairwise_sum(R, span, principal_orbit(R, g));
  return span;
}

inline bool index_set_contains(const IndexSet& s, std::int32_t i) {
  return std::binary_search(s.begin(), s.end(), i);
}

// Greedy minimal generating subset: add elements in canonical order when they
// enlarge the span, then drop any generator the others already produce.
inline IndexSet minimal_generator_indices(const Ring& R, const IndexSet& ideal_set) {
  IndexSet gens;
  IndexSet span{static_cast<std::int32_t>(R.zero_index())};
  for (std::int32_t g : ideal_set) {
    if (index_set_contains(span, g)) continue;
    gens.push_back(g);
    span = pairwise_sum(R, span, principal_orbit(R, g));
  }
  if (!(span == ideal_set)) throw internal_error("element set is not an ideal");
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < gens.size(); ++i) {
      IndexSet rest;
      for (size_t j = 0; j < gens.size(); ++j)
        if (j != i) rest.push_back(gens[j]);
      if (ideal_closure(R, rest) == ideal_set) {
        gens = std::move(rest);
        changed = true;
        break;
      }
    }
  }
  return gens;
}

// The spec'd member scan: first g in canonical order with (g) = I.
inline std::optional<RingElement> is_principal(const Ideal& I) {
  if (I.principal_generator) return I.principal_generator;
  const Ring& R = *I.ring;
  for (std::int32_t g : *I.element_indices) {
    if (principal_orbit(R, g) == *I.element_indices) return R.elem(g);
  }
  return std::nullopt;
}

inline Ideal make_ideal_from_indices(RingHandle ring, IndexSet set, bool find_principal = true) {
  Ideal I;
  I.ring = std::move(ring);
  const Ring& R = *I.ring;
  // closure validation
  for (std::int32_t a : set) {
    if (!index_set_contains(set, R.neg_i(a)))
      throw internal_error("ideal set not closed under negation");
  }
  IndexSet gidx = minimal_generator_indices(R, set);
  for (std::int32_t g : gidx) I.generators.push_back(R.elem(g));
  I.element_indices = std::move(set);
  if (find_principal) I.principal_generator = is_principal(I);
  return I;
}

inline Ideal ideal_from_generators(RingHandle ring, const std::vector<RingElement>& gens,
                                   bool find_principal = true) {
  std::vector<std::int32_t> gidx;
  for (const auto& g : gens) gidx.push_back(static_cast<std::int32_t>(ring->index_of(ring->checked(g))));
  IndexSet set = ideal_closure(*ring, gidx);
  Ideal I = make_ideal_from_indices(std::move(ring), std::move(set), find_principal);
  return I;
}

inline Ideal zero_ideal(RingHandle ring) {
  if (ring->has_elements())
    return make_ideal_from_indices(std::move(ring),
                                   IndexSet{static_cast<std::int32_t>(ring->zero_index())});
  Ideal I;
  I.ring = std::move(ring);
  I.principal_generator = I.ring->zero();
  I.note = "(0)";
  return I;
}

inline Ideal unit_ideal(RingHandle ring) {
  if (ring->has_elements()) {
    IndexSet all;
    for (int i = 0; i < ring->elem_count(); ++i) all.push_back(i);
    return make_ideal_from_indices(std::move(ring), std::move(all));
  }
  Ideal I;
  I.ring = std::move(ring);
  I.generators = {I.ring->one()};
  I.principal_generator = I.ring->one();
  I.note = "(1)";
  return I;
}

// (0 : a) = {b : a*b = 0}.
inline Ideal annihilator_ideal(RingHandle ring, const RingElement& a, bool find_principal = true) {
  const Ring& R = *ring;
  const std::int32_t ai = static_cast<std::int32_t>(R.index_of(R.checked(a)));
  const std::int32_t zi = static_cast<std::int32_t>(R.zero_index());
  IndexSet set;
  for (int b = 0; b < R.elem_count(); ++b)
    if (R.mul_i(ai, b) == zi) set.push_back(b);
  return make_ideal_from_indices(std::move(ring), std::move(set), find_principal);
}

// Every ideal exactly once: distinct principal orbits closed under pairwise
// sums until fixpoint.
inline std::vector<Ideal> all_ideals(RingHandle ring, std::int64_t max_order,
                                     bool find_principal = false) {
  if (!ring->is_finite() || ring->order().value > max_order)
    throw capability_error("ideal enumeration bound exceeded for " + ring->name());
  const Ring& R = *ring;
  std::vector<IndexSet> pool;
  std::set<IndexSet> seen;
  for (int g = 0; g < R.elem_count(); ++g) {
    IndexSet o = principal_orbit(R, g);
    if (seen.insert(o).second) pool.push_back(std::move(o));
  }
  for (size_t i = 0; i < pool.size(); ++i) {
    for (size_t j = 0; j <= i; ++j) {
      IndexSet s = pairwise_sum(R, pool[i], pool[j]);
      if (seen.insert(s).second) pool.push_back(std::move(s));
    }
  }
  std::sort(pool.begin(), pool.end(), [](const IndexSet& a, const IndexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<Ideal> out;
  out.reserve(pool.size());
  for (auto& s : pool) out.push_back(make_ideal_from_indices(ring, std::move(s), find_principal));
  return out;
}

inline void require_same_ring(const Ideal& I, const Ideal& J) {
  if (I.ring->name() != J.ring->name())
    throw usage_error("ideals live in different rings: " + I.ring->name() + " vs " +
                      J.ring->name());
}

inline Ideal lattice_sum(const Ideal& I, const Ideal& J, bool find_principal = true) {
  require_same_ring(I, J);
  return make_ideal_from_indices(I.ring, pairwise_sum(*I.ring, *I.element_indices, *J.element_indices),
                                 find_principal);
}

inline Ideal lattice_intersect(const Ideal& I, const Ideal& J, bool find_principal = true) {
  require_same_ring(I, J);
  IndexSet out;
  std::set_intersection(I.element_indices->begin(), I.element_indices->end(),
                        J.element_indices->begin(), J.element_indices->end(),
                        std::back_inserter(out));
  return make_ideal_from_indices(I.ring, std::move(out), find_principal);
}

// Deduplicated principal-ideal atlas, sorted by (size, lex).
inline std::vector<IndexSet> principal_ideal_atlas(const Ring& R) {
  std::set<IndexSet> seen;
  for (int g = 0; g < R.elem_count(); ++g) seen.insert(principal_orbit(R, g));
  std::vector<IndexSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

inline bool index_subset(const IndexSet& a, const IndexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace ringlab

#endif  // RINGLAB_IDEAL_HPP
