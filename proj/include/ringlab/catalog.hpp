#ifndef RINGLAB_CATALOG_HPP
#define RINGLAB_CATALOG_HPP

#include <vector>

#include "ringlab/construct.hpp"

namespace ringlab {

// F_2[x,y]/(x^2, x*y, y^2), the standard local non-arithmetical example.
inline RingHandle make_f2_square_zero_plane(Limits limits = {}) {
  return construct_ring(RingDescriptor{MonomialQuotientDesc{2, {"x", "y"}, {{2, 0}, {1, 1}, {0, 2}}}},
                        limits);
}

// Fixed instance list used by the verification sweeps: Z/n up to the bound,
// the small Galois fields, truncated polynomial chain rings, a couple of
// products, and the square-zero plane.
inline std::vector<RingHandle> desk_catalog(std::int64_t max_order, Limits limits = {}) {
  std::vector<RingHandle> out;
  for (std::int64_t n = 2; n <= std::min<std::int64_t>(max_order, 64); ++n)
    out.push_back(make_zmod(n, limits));
  for (std::int64_t q : {4, 8, 9, 16, 25, 27, 32, 49, 64})
    if (q <= max_order) out.push_back(make_gf(q, limits));
  const std::vector<std::pair<std::int64_t, int>> chains = {
      {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 2}, {3, 3}, {5, 2}, {7, 2}};
  for (auto [p, k] : chains) {
    Int order = int_pow(Int(p), static_cast<unsigned>(k));
    if (order <= max_order) out.push_back(make_fp_chain(p, k, limits));
  }
  if (12 <= max_order)
    out.push_back(make_product({make_zmod(4, limits), make_zmod(3, limits)}, limits));
  if (4 <= max_order)
    out.push_back(make_product({make_zmod(2, limits), make_zmod(2, limits)}, limits));
  if (30 <= max_order)
    out.push_back(
        make_product({make_zmod(2, limits), make_zmod(3, limits), make_zmod(5, limits)}, limits));
  if (36 <= max_order)
    out.push_back(make_product({make_zmod(9, limits), make_zmod(4, limits)}, limits));
  if (8 <= max_order) out.push_back(make_f2_square_zero_plane(limits));
  if (16 <= max_order)
    out.push_back(construct_ring(
        RingDescriptor{MonomialQuotientDesc{2, {"x", "y"}, {{2, 0}, {0, 2}}}}, limits));
  if (4 <= max_order) {
    // F2[x]/(x^2+x), a non-local univariate quotient
    out.push_back(construct_ring(RingDescriptor{PolyQuotientDesc{2, {0, 1, 1}, "x"}}, limits));
  }
  return out;
}

// Chain-ring candidates: every finite chain ring reachable by the
// constructors. Fields included; callers filter as needed.
inline std::vector<RingHandle> chain_catalog(std::int64_t max_order, Limits limits = {}) {
  std::vector<RingHandle> out;
  for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
    if (p > max_order) break;
    Int q = p;
    while (q <= max_order) {
      out.push_back(make_zmod(static_cast<std::int64_t>(q), limits));
      q *= p;
    }
  }
  for (std::int64_t q : {4, 8, 9, 16, 25, 27, 32, 49, 64})
    if (q <= max_order) out.push_back(make_gf(q, limits));
  const std::vector<std::pair<std::int64_t, int>> chains = {
      {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 2}, {3, 3}, {5, 2}, {7, 2}};
  for (auto [p, k] : chains) {
    Int order = int_pow(Int(p), static_cast<unsigned>(k));
    if (order <= max_order) out.push_back(make_fp_chain(p, k, limits));
  }
  return out;
}

// The exact valuation-domain bases for the sampled sweeps.
inline std::vector<DvrHandle> dvr_catalog(Limits limits = {}) {
  std::vector<DvrHandle> out;
  out.push_back(std::dynamic_pointer_cast<const DvrRing>(make_zloc(2, limits)));
  out.push_back(std::dynamic_pointer_cast<const DvrRing>(make_zloc(3, limits)));
  out.push_back(std::dynamic_pointer_cast<const DvrRing>(make_floc(2, limits)));
  return out;
}

}  // namespace ringlab

#endif  // RINGLAB_CATALOG_HPP
