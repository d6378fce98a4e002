#ifndef RINGLAB_RINGS_POLY_QUOTIENT_HPP
#define RINGLAB_RINGS_POLY_QUOTIENT_HPP

#include <string>
#include <vector>

#include "ringlab/fp_poly.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

// Prints c_0 + c_1 v + ... in descending degree with canonical spelling
// ("x^2+x+1", "2*x", "1"). Coefficients are GF codes.
inline std::string format_poly(const std::vector<std::int64_t>& coeffs, const std::string& var) {
  std::string out;
  for (size_t i = coeffs.size(); i-- > 0;) {
    const std::int64_t c = coeffs[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c) + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

// F_p[x]/(f) with f monic of degree >= 1. Elements are coefficient vectors
// of fixed length deg(f) with entries in [0, p).
class PolyQuotientRing final : public Ring {
 public:
  PolyQuotientRing(std::int64_t p, std::vector<std::int64_t> modulus, std::string var,
                   Limits limits)
      : Ring(make_name(p, modulus, var),
             RingDescriptor{PolyQuotientDesc{p, modulus, var}},
             RingOrder::of(int_pow(Int(p), modulus.empty() ? 0u : static_cast<unsigned>(modulus.size() - 1))),
             limits),
        field_(GaloisField::get(check_prime(p))),
        modulus_(std::move(modulus)),
        var_(std::move(var)) {
    if (modulus_.size() < 2) throw usage_error("quotient polynomial must have degree >= 1");
    for (std::int64_t c : modulus_)
      if (c < 0 || c >= p) throw usage_error("quotient polynomial coefficients must be in [0, p)");
    if (modulus_.back() != 1) throw usage_error("quotient polynomial must be monic");
    deg_ = static_cast<int>(modulus_.size()) - 1;
    if (materializable(order().value)) {
      std::vector<RingElement> es;
      std::vector<std::int64_t> c(static_cast<size_t>(deg_), 0);
      while (true) {
        es.emplace_back(RingElement::Payload{PolyResidue{c}});
        int i = deg_ - 1;
        while (i >= 0 && c[static_cast<size_t>(i)] == p - 1) c[static_cast<size_t>(i--)] = 0;
        if (i < 0) break;
        ++c[static_cast<size_t>(i)];
      }
      materialize(std::move(es));
    }
  }

  std::int64_t p() const { return field_.p(); }
  int degree() const { return deg_; }
  const std::string& var() const { return var_; }
  const std::vector<std::int64_t>& modulus_poly() const { return modulus_; }

  RingElement zero() const override {
    return RingElement(RingElement::Payload{PolyResidue{std::vector<std::int64_t>(
        static_cast<size_t>(deg_), 0)}});
  }
  RingElement one() const override {
    std::vector<std::int64_t> c(static_cast<size_t>(deg_), 0);
    c[0] = 1 % field_.p();
    return RingElement(RingElement::Payload{PolyResidue{c}});
  }

  RingElement add(const RingElement& a, const RingElement& b) const override {
    const auto& ca = coeffs(a);
    const auto& cb = coeffs(b);
    std::vector<std::int64_t> r(static_cast<size_t>(deg_));
    for (size_t i = 0; i < r.size(); ++i) r[i] = field_.add(ca[i], cb[i]);
    return RingElement(RingElement::Payload{PolyResidue{std::move(r)}});
  }

  RingElement neg(const RingElement& a) const override {
    const auto& ca = coeffs(a);
    std::vector<std::int64_t> r(static_cast<size_t>(deg_));
    for (size_t i = 0; i < r.size(); ++i) r[i] = field_.neg(ca[i]);
    return RingElement(RingElement::Payload{PolyResidue{std::move(r)}});
  }

  RingElement mul(const RingElement& a, const RingElement& b) const override {
    GfPoly prod = gfp_mul(field_, coeffs(a), coeffs(b));
    return from_poly(gfp_mod(field_, prod, modulus_));
  }

  RingElement canonicalize(const RingElement& a) const override {
    GfPoly c = a.poly_residue().coeffs;
    for (auto& v : c) v = mod_i64(v, field_.p());
    return from_poly(gfp_mod(field_, c, modulus_));
  }

  RingElement from_integer(const Int& n) const override {
    std::vector<std::int64_t> c(static_cast<size_t>(deg_), 0);
    c[0] = static_cast<std::int64_t>(((n % field_.p()) + field_.p()) % field_.p());
    return RingElement(RingElement::Payload{PolyResidue{std::move(c)}});
  }

  std::string format(const RingElement& a) const override {
    return format_poly(coeffs(a), var_);
  }

  // Residue class of the variable; the natural generator for cyclic scans.
  RingElement variable() const {
    std::vector<std::int64_t> c(static_cast<size_t>(deg_), 0);
    if (deg_ >= 2) {
      c[1] = 1;
    } else {
      // x reduces mod the degree-1 modulus: x = -c0
      c[0] = field_.neg(modulus_[0]);
    }
    return RingElement(RingElement::Payload{PolyResidue{c}});
  }

 private:
  static std::int64_t check_prime(std::int64_t p) {
    if (!is_prime_i64(p)) throw usage_error(std::to_string(p) + " is not prime");
    return p;
  }

  static std::string make_name(std::int64_t p, const std::vector<std::int64_t>& modulus,
                               const std::string& var) {
    return "F" + std::to_string(p) + "[" + var + "]/(" + format_poly(modulus, var) + ")";
  }

  RingElement from_poly(GfPoly f) const {
    f.resize(static_cast<size_t>(deg_), 0);
    return RingElement(RingElement::Payload{PolyResidue{std::move(f)}});
  }

  const std::vector<std::int64_t>& coeffs(const RingElement& a) const {
    const auto& pr = a.poly_residue();
    if (static_cast<int>(pr.coeffs.size()) != deg_)
      throw representation_error("coefficient vector length mismatch in " + name());
    return pr.coeffs;
  }

  const GaloisField& field_;
  std::vector<std::int64_t> modulus_;
  std::string var_;
  int deg_ = 0;
};

}  // namespace ringlab

#endif  // RINGLAB_RINGS_POLY_QUOTIENT_HPP
