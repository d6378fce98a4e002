#ifndef RINGLAB_WARFIELD_HPP
#define RINGLAB_WARFIELD_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "ringlab/ideal.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

// Valuation structure of a finite chain ring: maximal ideal (pi), nilpotency
// length n, residue field size q, |R| = q^n.
struct ChainRingInfo {
  RingHandle ring;
  RingElement pi;
  int length = 0;          // least n with pi^n = 0; 1 exactly for fields
  Int residue_order = 0;   // |R / (pi)|
  std::vector<IndexSet> power_ideals;  // (pi^k), k = 0..length

  bool is_field() const { return length == 1; }

  // pi-adic order; length for zero
  int valuation(const RingElement& a) const {
    const std::int32_t i = static_cast<std::int32_t>(ring->index_of(a));
    int v = 0;
    while (v < length && index_set_contains(power_ideals[static_cast<size_t>(v + 1)], i)) ++v;
    return v;
  }

  RingElement pi_power(int k) const {
    RingElement r = ring->one();
    for (int i = 0; i < k; ++i) r = ring->mul(r, pi);
    return r;
  }
};

// Detects the chain property: the principal ideals must form a chain under
// inclusion, which forces every ideal to be principal and the ring local.
inline std::optional<ChainRingInfo> chain_ring_info(const RingHandle& ring) {
  const Ring& R = *ring;
  std::vector<IndexSet> atlas = principal_ideal_atlas(R);
  for (size_t i = 0; i + 1 < atlas.size(); ++i) {
    if (atlas[i].size() == atlas[i + 1].size()) return std::nullopt;  // incomparable sizes
    if (!index_subset(atlas[i], atlas[i + 1])) return std::nullopt;
  }
  ChainRingInfo info;
  info.ring = ring;
  // maximal ideal = largest proper principal ideal
  const IndexSet& m = atlas.size() >= 2 ? atlas[atlas.size() - 2] : atlas.back();
  if (atlas.size() == 1) {
    // zero ring cannot occur (order >= 2), so atlas always has (0) and R
    throw internal_error("degenerate principal ideal atlas");
  }
  std::int32_t pi_idx = -1;
  for (std::int32_t g : m)
    if (principal_orbit(R, g) == m) {
      pi_idx = g;
      break;
    }
  if (pi_idx < 0) throw internal_error("maximal ideal of a chain ring has no generator");
  info.pi = R.elem(pi_idx);
  info.power_ideals.push_back(principal_orbit(R, static_cast<std::int32_t>(R.one_index())));
  RingElement p = R.one();
  int k = 0;
  while (!R.is_zero(p)) {
    p = R.mul(p, info.pi);
    ++k;
    info.power_ideals.push_back(principal_orbit(R, static_cast<std::int32_t>(R.index_of(p))));
    if (k > R.elem_count()) throw internal_error("uniformizer is not nilpotent");
  }
  info.length = k;
  info.residue_order = R.order().value / Int(m.size());
  return info;
}

// Diagonalization of a relation matrix over a finite chain ring: pivot on a
// minimal-valuation entry (lowest row, then column, as tie break), clear its
// row and column by exact quotients, recurse on the rest. Returns the cyclic
// annihilator generators pi^k, with 0 for each free summand, sorted by
// valuation with free summands last.
inline std::vector<RingElement> warfield_decompose(const ChainRingInfo& C,
                                                   std::vector<std::vector<RingElement>> rows,
                                                   int rank) {
  const Ring& R = *C.ring;
  if (rank < 1) throw usage_error("presentation rank must be >= 1");
  for (auto& row : rows) {
    if (static_cast<int>(row.size()) != rank)
      throw usage_error("relation row arity does not match the rank");
    for (auto& e : row) e = R.canonicalize(e);
  }
  const int nrows = static_cast<int>(rows.size());
  std::vector<char> row_done(static_cast<size_t>(nrows), 0);
  std::vector<char> col_done(static_cast<size_t>(rank), 0);
  std::vector<RingElement> diag;
  std::vector<int> diag_val;

  while (true) {
    int best_r = -1, best_c = -1, best_v = C.length + 1;
    for (int r = 0; r < nrows; ++r) {
      if (row_done[static_cast<size_t>(r)]) continue;
      for (int c = 0; c < rank; ++c) {
        if (col_done[static_cast<size_t>(c)]) continue;
        const RingElement& e = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
        if (R.is_zero(e)) continue;
        const int v = C.valuation(e);
        if (v < best_v) {
          best_v = v;
          best_r = r;
          best_c = c;
        }
      }
    }
    if (best_r < 0) break;
    const RingElement piv = rows[static_cast<size_t>(best_r)][static_cast<size_t>(best_c)];
    // clear the pivot column with row operations
    for (int r = 0; r < nrows; ++r) {
      if (r == best_r || row_done[static_cast<size_t>(r)]) continue;
      const RingElement& e = rows[static_cast<size_t>(r)][static_cast<size_t>(best_c)];
      if (R.is_zero(e)) continue;
      auto dv = R.divides(piv, e);
      if (!dv.divides) throw internal_error("minimal-valuation pivot fails to divide an entry");
      const RingElement q = *dv.witness;
      for (int c = 0; c < rank; ++c)
        rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = R.sub(
            rows[static_cast<size_t>(r)][static_cast<size_t>(c)],
            R.mul(q, rows[static_cast<size_t>(best_r)][static_cast<size_t>(c)]));
    }
    // clear the pivot row with column operations; other rows hold zeros in the
    // pivot column now, so only the pivot row changes
    for (int c = 0; c < rank; ++c) {
      if (c == best_c || col_done[static_cast<size_t>(c)]) continue;
      const RingElement& e = rows[static_cast<size_t>(best_r)][static_cast<size_t>(c)];
      if (R.is_zero(e)) continue;
      auto dv = R.divides(piv, e);
      if (!dv.divides) throw internal_error("minimal-valuation pivot fails to divide an entry");
      const RingElement q = *dv.witness;
      for (int r = 0; r < nrows; ++r)
        rows[static_cast<size_t>(r)][static_cast<size_t>(c)] =
            R.sub(rows[static_cast<size_t>(r)][static_cast<size_t>(c)],
                  R.mul(q, rows[static_cast<size_t>(r)][static_cast<size_t>(best_c)]));
    }
    row_done[static_cast<size_t>(best_r)] = 1;
    col_done[static_cast<size_t>(best_c)] = 1;
    diag.push_back(piv);
    diag_val.push_back(best_v);
  }

  std::vector<RingElement> gens;
  std::vector<int> vals;
  for (size_t i = 0; i < diag.size(); ++i) {
    if (diag_val[i] == 0) continue;  // unit pivot: R/(unit) = 0
    gens.push_back(C.pi_power(diag_val[i]));
    vals.push_back(diag_val[i]);
  }
  int free_count = 0;
  for (int c = 0; c < rank; ++c)
    if (!col_done[static_cast<size_t>(c)]) ++free_count;
  std::vector<size_t> idx(gens.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return vals[a] < vals[b]; });
  std::vector<RingElement> out;
  for (size_t i : idx) out.push_back(gens[i]);
  for (int i = 0; i < free_count; ++i) out.push_back(R.zero());
  return out;
}

// |⊕ R/(g_i)| with g = 0 contributing |R|.
inline Int warfield_module_order(const ChainRingInfo& C, const std::vector<RingElement>& gens) {
  const Ring& R = *C.ring;
  Int total = 1;
  for (const auto& g : gens) {
    if (R.is_zero(g)) {
      total *= R.order().value;
    } else {
      const int v = C.valuation(g);
      total *= int_pow(C.residue_order, static_cast<unsigned>(v));
    }
  }
  return total;
}

}  // namespace ringlab

#endif  // RINGLAB_WARFIELD_HPP
