#ifndef RINGLAB_LOCAL_DECOMPOSITION_HPP
#define RINGLAB_LOCAL_DECOMPOSITION_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/ideal.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/rings/poly_quotient.hpp"
#include "ringlab/rings/subset.hpp"
#include "ringlab/rings/zmod.hpp"

namespace ringlab {

struct LocalFactor {
  RingElement idempotent;
  std::shared_ptr<const SubsetRing> factor;
  std::optional<RingDescriptor> recognized;  // canonical form found by generator matching
  std::string display_name;
  std::vector<std::int32_t> projection;  // parent element index -> factor element index
};

struct LocalDecomposition {
  RingHandle ring;
  std::vector<LocalFactor> factors;  // ordered by idempotent canonical order
};

namespace detail {

// Additive order of a in a finite ring.
inline int additive_order(const Ring& R, std::int32_t ai) {
  const std::int32_t zi = static_cast<std::int32_t>(R.zero_index());
  std::int32_t acc = ai;
  int k = 1;
  while (acc != zi) {
    acc = static_cast<std::int32_t>(R.add_i(acc, ai));
    ++k;
    if (k > R.elem_count()) throw internal_error("additive order overflow");
  }
  return k;
}

// Try to match the factor against Z/n: the identity must additively generate.
inline std::optional<RingDescriptor> recognize_zmod(const SubsetRing& F) {
  const int n = F.elem_count();
  const std::int32_t one = static_cast<std::int32_t>(F.one_index());
  if (additive_order(F, one) != n) return std::nullopt;
  return RingDescriptor{ZModDesc{n}};
}

// Try to match against F_p[x]/(f): some g must generate the factor as an
// F_p-algebra; the monic relation of degree d is read off from g^d.
inline std::optional<RingDescriptor> recognize_poly_quotient(const SubsetRing& F) {
  const int n = F.elem_count();
  const std::int32_t one = static_cast<std::int32_t>(F.one_index());
  const std::int64_t p = additive_order(F, one);
  if (!is_prime_i64(p)) return std::nullopt;
  int d = 0;
  std::int64_t q = 1;
  while (q < n) {
    q *= p;
    ++d;
  }
  if (q != n || d < 2) return std::nullopt;
  for (int gi = 0; gi < n; ++gi) {
    // powers 1, g, ..., g^(d-1), then all F_p combinations
    std::vector<std::int32_t> pow(static_cast<size_t>(d) + 1);
    pow[0] = one;
    for (int i = 1; i <= d; ++i)
      pow[static_cast<size_t>(i)] =
          static_cast<std::int32_t>(F.mul_i(pow[static_cast<size_t>(i - 1)], gi));
    std::map<std::int32_t, std::vector<std::int64_t>> coords;
    std::vector<std::int64_t> c(static_cast<size_t>(d), 0);
    bool collision = false;
    while (true) {
      std::int32_t acc = static_cast<std::int32_t>(F.zero_index());
      for (int i = 0; i < d; ++i) {
        std::int32_t term = static_cast<std::int32_t>(F.zero_index());
        for (std::int64_t rep = 0; rep < c[static_cast<size_t>(i)]; ++rep)
          term = static_cast<std::int32_t>(F.add_i(term, pow[static_cast<size_t>(i)]));
        acc = static_cast<std::int32_t>(F.add_i(acc, term));
      }
      if (!coords.emplace(acc, c).second) {
        collision = true;
        break;
      }
      int i = d - 1;
      while (i >= 0 && c[static_cast<size_t>(i)] + 1 >= p) c[static_cast<size_t>(i--)] = 0;
      if (i < 0) break;
      ++c[static_cast<size_t>(i)];
    }
    if (collision || static_cast<int>(coords.size()) != n) continue;
    auto it = coords.find(pow[static_cast<size_t>(d)]);
    if (it == coords.end()) continue;
    // g^d = sum c_i g^i, so the monic relation is x^d - sum c_i x^i
    std::vector<std::int64_t> f(static_cast<size_t>(d) + 1, 0);
    for (int i = 0; i < d; ++i) f[static_cast<size_t>(i)] = mod_i64(-it->second[static_cast<size_t>(i)], p);
    f[static_cast<size_t>(d)] = 1;
    return RingDescriptor{PolyQuotientDesc{p, std::move(f), "x"}};
  }
  return std::nullopt;
}

}  // namespace detail

inline std::string construct_factor_name(const RingDescriptor& d) {
  if (const auto* z = d.get_if<ZModDesc>()) return "Z/" + std::to_string(z->modulus);
  if (const auto* p = d.get_if<PolyQuotientDesc>())
    return "F" + std::to_string(p->p) + "[" + p->var + "]/(" + format_poly(p->modulus, p->var) + ")";
  throw internal_error("unexpected recognized descriptor");
}

// Complete set of primitive orthogonal idempotents by element scan; each
// factor e*R is local when the input ring is a finite commutative ring.
inline LocalDecomposition local_decomposition(const RingHandle& ring) {
  const Ring& R = *ring;
  const int n = R.elem_count();
  const std::int32_t zi = static_cast<std::int32_t>(R.zero_index());
  const std::int32_t oi = static_cast<std::int32_t>(R.one_index());
  std::vector<std::int32_t> idempotents;
  for (std::int32_t e = 0; e < n; ++e)
    if (R.mul_i(e, e) == e) idempotents.push_back(e);
  // e is primitive when e*R contains no idempotent besides 0 and e
  std::vector<std::int32_t> primitive;
  for (std::int32_t e : idempotents) {
    if (e == zi) continue;
    int inside = 0;
    for (std::int32_t f : idempotents)
      if (R.mul_i(f, e) == f) ++inside;
    if (inside == 2) primitive.push_back(e);
  }
  // sanity: orthogonal and summing to 1
  std::int32_t sum = zi;
  for (size_t i = 0; i < primitive.size(); ++i) {
    sum = static_cast<std::int32_t>(R.add_i(sum, primitive[i]));
    for (size_t j = i + 1; j < primitive.size(); ++j)
      if (R.mul_i(primitive[i], primitive[j]) != zi)
        throw internal_error("primitive idempotents not orthogonal in " + R.name());
  }
  if (sum != oi) throw internal_error("primitive idempotents do not sum to 1 in " + R.name());

  LocalDecomposition out;
  out.ring = ring;
  Int order_product = 1;
  for (std::int32_t e : primitive) {
    IndexSet subset = principal_orbit(R, e);
    std::vector<RingElement> elems;
    for (std::int32_t i : subset) elems.push_back(R.elem(i));
    LocalFactor lf;
    lf.idempotent = R.elem(e);
    lf.factor = std::make_shared<const SubsetRing>(ring, lf.idempotent, std::move(elems));
    lf.recognized = detail::recognize_zmod(*lf.factor);
    if (!lf.recognized) lf.recognized = detail::recognize_poly_quotient(*lf.factor);
    lf.display_name = lf.recognized ? construct_factor_name(*lf.recognized) : lf.factor->name();
    lf.projection.resize(static_cast<size_t>(n));
    for (std::int32_t a = 0; a < n; ++a)
      lf.projection[static_cast<size_t>(a)] =
          static_cast<std::int32_t>(lf.factor->index_of(R.elem(R.mul_i(e, a))));
    order_product *= lf.factor->order().value;
    out.factors.push_back(std::move(lf));
  }
  if (order_product != R.order().value)
    throw internal_error("factor orders do not multiply to the ring order in " + R.name());
  return out;
}

}  // namespace ringlab

#endif  // RINGLAB_LOCAL_DECOMPOSITION_HPP
