#ifndef RINGLAB_RINGS_ZMOD_HPP
#define RINGLAB_RINGS_ZMOD_HPP

#include <string>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

// Z/n on residues in [0, n). Closed forms (extended gcd) answer queries past
// the enumeration bound; materialized instances use the generic scans so
// witnesses match the canonical element order.
class ZModRing final : public Ring {
 public:
  ZModRing(std::int64_t n, Limits limits)
      : Ring("Z/" + std::to_string(n), RingDescriptor{ZModDesc{n}}, RingOrder::of(Int(n)),
             limits),
        n_(n) {
    if (n < 2) throw usage_error("modulus must be >= 2");
    if (n > (std::int64_t{1} << 30)) throw usage_error("modulus bound is 2^30");
    if (materializable(Int(n))) {
      std::vector<RingElement> es;
      es.reserve(static_cast<size_t>(n));
      for (std::int64_t i = 0; i < n; ++i) es.emplace_back(RingElement::Payload{Residue{i}});
      materialize(std::move(es));
    }
  }

  std::int64_t modulus() const { return n_; }

  RingElement zero() const override { return RingElement(RingElement::Payload{Residue{0}}); }
  RingElement one() const override {
    return RingElement(RingElement::Payload{Residue{1 % n_}});
  }

  RingElement add(const RingElement& a, const RingElement& b) const override {
    return make(value(a) + value(b));
  }
  RingElement neg(const RingElement& a) const override { return make(-value(a)); }
  RingElement mul(const RingElement& a, const RingElement& b) const override {
    return make(value(a) * value(b));
  }

  RingElement canonicalize(const RingElement& a) const override {
    return make(a.residue().value);
  }

  RingElement from_integer(const Int& n) const override {
    return make(static_cast<std::int64_t>(n % n_));
  }

  std::string format(const RingElement& a) const override {
    return std::to_string(value(a));
  }

  UnitVerdict is_unit(const RingElement& a) const override {
    if (has_elements()) return Ring::is_unit(a);
    const std::int64_t v = value(a);
    auto [g, x] = gcd_bezout(v, n_);
    if (g != 1 && g != -1) return {false, std::nullopt};
    return {true, make(g < 0 ? -x : x)};
  }

  ZeroDivisorVerdict is_zero_divisor(const RingElement& a) const override {
    if (has_elements()) return Ring::is_zero_divisor(a);
    const std::int64_t v = value(a);
    if (v == 0) return {false, std::nullopt};
    std::int64_t g = std::get<0>(gcd_bezout(v, n_));
    if (g < 0) g = -g;
    if (g == 1) return {false, std::nullopt};
    return {true, make(n_ / g)};
  }

  DivisibilityVerdict divides(const RingElement& a, const RingElement& b) const override {
    if (has_elements()) return Ring::divides(a, b);
    const std::int64_t av = value(a), bv = value(b);
    auto [g0, x] = gcd_bezout(av, n_);
    const std::int64_t g = g0 < 0 ? -g0 : g0;
    if (g == 0) return bv == 0 ? DivisibilityVerdict{true, make(0)}
                               : DivisibilityVerdict{false, std::nullopt};
    if (bv % g != 0) return {false, std::nullopt};
    // least solution of a*w = b mod n; solutions are w0 + (n/g)Z
    const std::int64_t np = n_ / g;
    const std::int64_t w0 = mod_i64((bv / g) % np * mod_i64(g0 < 0 ? -x : x, np), np);
    return {true, make(w0)};
  }

  LocalityVerdict is_local() const override {
    if (has_elements()) return Ring::is_local();
    const std::int64_t p = prime_power_base(n_);
    LocalityVerdict v;
    if (p != 0 && is_prime_i64(p)) {
      v.local = true;
      v.maximal_ideal_note = "(" + std::to_string(p) + ")";
    } else {
      // split n = q1*q2 coprime; q1 + q2 is a unit
      std::int64_t d = 2;
      while (n_ % d != 0) ++d;
      std::int64_t q1 = 1;
      std::int64_t rest = n_;
      while (rest % d == 0) {
        q1 *= d;
        rest /= d;
      }
      v.local = false;
      v.witness = std::make_pair(make(q1), make(rest));
    }
    return v;
  }

 private:
  RingElement make(std::int64_t v) const {
    return RingElement(RingElement::Payload{Residue{mod_i64(v, n_)}});
  }
  std::int64_t value(const RingElement& a) const {
    const std::int64_t v = a.residue().value;
    if (v < 0 || v >= n_)
      throw representation_error("residue " + std::to_string(v) + " out of range in " + name());
    return v;
  }

  std::int64_t n_;
};

}  // namespace ringlab

#endif  // RINGLAB_RINGS_ZMOD_HPP
