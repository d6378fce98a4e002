#ifndef RINGLAB_RINGS_LOCALIZED_HPP
#define RINGLAB_RINGS_LOCALIZED_HPP

#include <climits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/fp_poly.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/rings/poly_quotient.hpp"

namespace ringlab {

// Common surface of the two exact discrete valuation families and their
// fraction fields. Divisibility is the valuation comparison; the torsion_*
// helpers implement arithmetic in the component rings A/pi^k used by formal
// sum modules.
class DvrRing : public Ring {
 public:
  static constexpr int kInfiniteValuation = INT_MAX;

  using Ring::Ring;

  bool field_mode() const { return field_mode_; }

  // Exact pi-adic order; negative values only occur in field mode.
  virtual int valuation(const RingElement& a) const = 0;
  virtual RingElement uniformizer() const = 0;
  virtual std::shared_ptr<const DvrRing> fraction_field_ring() const = 0;
  // a / b as an exact fraction, unconstrained (may land outside the DVR).
  virtual RingElement exact_div(const RingElement& a, const RingElement& b) const = 0;
  virtual RingElement pi_power(int t) const = 0;  // t >= 0

  // --- arithmetic in A/pi^k ---------------------------------------------------
  virtual RingElement torsion_zero(int k) const = 0;
  virtual RingElement torsion_one(int k) const = 0;
  virtual RingElement torsion_canonicalize(int k, const RingElement& m) const = 0;
  virtual RingElement torsion_add(int k, const RingElement& a, const RingElement& b) const = 0;
  virtual RingElement torsion_neg(int k, const RingElement& a) const = 0;
  // scalar in A (or K with nonnegative valuation) acting on A/pi^k
  virtual RingElement torsion_scalar(int k, const RingElement& scalar,
                                     const RingElement& m) const = 0;
  virtual int torsion_valuation(int k, const RingElement& m) const = 0;  // k for zero
  virtual RingElement torsion_pi_power(int k, int t) const = 0;
  virtual Int torsion_order(int k) const = 0;
  virtual RingElement torsion_lift(int k, const RingElement& m) const = 0;
  virtual RingElement torsion_sample(int k, Rng& rng) const = 0;
  // z with scalar * z = rhs in A/pi^k, or nothing
  virtual std::optional<RingElement> torsion_solve_scalar(int k, const RingElement& scalar,
                                                          const RingElement& rhs) const = 0;
  virtual std::string torsion_format(int k, const RingElement& m) const = 0;
  virtual std::string torsion_modulus_text(int k) const = 0;

  UnitVerdict is_unit(const RingElement& a) const override {
    const RingElement& ca = checked(a);
    if (is_zero(ca)) return {false, std::nullopt};
    if (!field_mode_ && valuation(ca) != 0) return {false, std::nullopt};
    return {true, exact_div(one(), ca)};
  }

  ZeroDivisorVerdict is_zero_divisor(const RingElement& a) const override {
    checked(a);
    return {false, std::nullopt};  // integral domain; 0 by convention
  }

  DivisibilityVerdict divides(const RingElement& a, const RingElement& b) const override {
    const RingElement& ca = checked(a);
    const RingElement& cb = checked(b);
    if (is_zero(cb)) return {true, zero()};
    if (is_zero(ca)) return {false, std::nullopt};
    if (!field_mode_ && valuation(ca) > valuation(cb)) return {false, std::nullopt};
    return {true, exact_div(cb, ca)};
  }

  LocalityVerdict is_local() const override {
    LocalityVerdict v;
    v.local = true;
    if (field_mode_) {
      v.maximal_ideal = std::vector<RingElement>{zero()};
      v.maximal_ideal_note = "(0)";
    } else {
      v.maximal_ideal_note = "(" + format(uniformizer()) + ")";
    }
    return v;
  }

 protected:
  bool field_mode_ = false;
};

using DvrHandle = std::shared_ptr<const DvrRing>;

// --- integers localized at p, and Q ------------------------------------------

class ZLocalizedRing final : public DvrRing {
 public:
  ZLocalizedRing(std::int64_t p, bool field_mode, Limits limits)
      : DvrRing(field_mode ? "qf(Zloc(" + std::to_string(p) + "))"
                           : "Zloc(" + std::to_string(p) + ")",
                make_descriptor(p, field_mode), RingOrder::infinite(), limits),
        p_(p) {
    if (!is_prime_i64(p)) throw usage_error(std::to_string(p) + " is not prime");
    field_mode_ = field_mode;
    if (!field_mode) fraction_field_ = std::make_shared<ZLocalizedRing>(p, true, limits);
  }

  std::int64_t p() const { return p_; }

  RingElement zero() const override { return fraction(0, 1); }
  RingElement one() const override { return fraction(1, 1); }
  RingElement from_integer(const Int& n) const override { return fraction(n, 1); }

  RingElement add(const RingElement& a, const RingElement& b) const override {
    const auto& x = frac(a);
    const auto& y = frac(b);
    return fraction(x.num * y.den + y.num * x.den, x.den * y.den);
  }
  RingElement neg(const RingElement& a) const override {
    const auto& x = frac(a);
    return fraction(-x.num, x.den);
  }
  RingElement mul(const RingElement& a, const RingElement& b) const override {
    const auto& x = frac(a);
    const auto& y = frac(b);
    return fraction(x.num * y.num, x.den * y.den);
  }

  RingElement canonicalize(const RingElement& a) const override {
    const auto& x = a.int_fraction();
    return fraction(x.num, x.den);
  }

  std::string format(const RingElement& a) const override {
    return format_int_fraction(a.int_fraction());
  }

  RingElement sample(Rng& rng, const SampleBounds& bounds) const override {
    const Int num = rng.uniform(-bounds.max_abs, bounds.max_abs);
    Int den;
    do {
      den = rng.uniform(1, bounds.max_abs);
    } while (!field_mode_ && den % p_ == 0);
    return fraction(num, den);
  }

  int valuation(const RingElement& a) const override {
    const auto& x = frac(a);
    if (x.num == 0) return kInfiniteValuation;
    int v = padic_valuation(x.num, Int(p_));
    if (field_mode_) v -= padic_valuation(x.den, Int(p_));
    return v;
  }

  RingElement uniformizer() const override { return fraction(p_, 1); }

  RingElement pi_power(int t) const override { return fraction(int_pow(Int(p_), static_cast<unsigned>(t)), 1); }

  DvrHandle fraction_field_ring() const override {
    if (field_mode_)
      return std::static_pointer_cast<const DvrRing>(shared_from_this());
    return fraction_field_;
  }

  RingElement exact_div(const RingElement& a, const RingElement& b) const override {
    const auto& x = frac(a);
    const auto& y = frac(b);
    if (y.num == 0) throw usage_error("division by zero");
    return make_fraction_unchecked(x.num * y.den, x.den * y.num);
  }

  // --- A/p^k ------------------------------------------------------------------

  RingElement torsion_zero(int k) const override {
    (void)k;
    return RingElement(RingElement::Payload{Residue{0}});
  }
  RingElement torsion_one(int k) const override {
    return RingElement(RingElement::Payload{Residue{modulus(k) == 1 ? 0 : 1}});
  }
  RingElement torsion_canonicalize(int k, const RingElement& m) const override {
    return RingElement(RingElement::Payload{Residue{mod_i64(m.residue().value, modulus(k))}});
  }
  RingElement torsion_add(int k, const RingElement& a, const RingElement& b) const override {
    return RingElement(
        RingElement::Payload{Residue{mod_i64(a.residue().value + b.residue().value, modulus(k))}});
  }
  RingElement torsion_neg(int k, const RingElement& a) const override {
    return RingElement(RingElement::Payload{Residue{mod_i64(-a.residue().value, modulus(k))}});
  }
  RingElement torsion_scalar(int k, const RingElement& scalar, const RingElement& m) const override {
    const std::int64_t M = modulus(k);
    const auto& s = frac(scalar);
    if (valuation(scalar) < 0) throw usage_error("scalar lies outside the valuation ring");
    const std::int64_t num = static_cast<std::int64_t>(((s.num % M) + M) % M);
    const std::int64_t den = static_cast<std::int64_t>(s.den % M);
    return RingElement(RingElement::Payload{
        Residue{mod_i64(mod_i64(m.residue().value * num, M) * inverse_mod(den, M), M)}});
  }
  int torsion_valuation(int k, const RingElement& m) const override {
    std::int64_t v = m.residue().value;
    if (v == 0) return k;
    int t = 0;
    while (v % p_ == 0) {
      v /= p_;
      ++t;
    }
    return t < k ? t : k;
  }
  RingElement torsion_pi_power(int k, int t) const override {
    if (t >= k) return torsion_zero(k);
    std::int64_t v = 1;
    for (int i = 0; i < t; ++i) v *= p_;
    return RingElement(RingElement::Payload{Residue{v}});
  }
  Int torsion_order(int k) const override { return int_pow(Int(p_), static_cast<unsigned>(k)); }
  RingElement torsion_lift(int k, const RingElement& m) const override {
    (void)k;
    return fraction(m.residue().value, 1);
  }
  RingElement torsion_sample(int k, Rng& rng) const override {
    return RingElement(RingElement::Payload{Residue{rng.uniform(0, modulus(k) - 1)}});
  }
  std::optional<RingElement> torsion_solve_scalar(int k, const RingElement& scalar,
                                                  const RingElement& rhs) const override {
    const std::int64_t M = modulus(k);
    const std::int64_t r = rhs.residue().value;
    const int va_raw = is_zero(scalar) ? kInfiniteValuation : valuation(scalar);
    if (va_raw >= k) return r == 0 ? std::optional<RingElement>(torsion_zero(k)) : std::nullopt;
    const int va = va_raw;
    if (torsion_valuation(k, rhs) < va) return std::nullopt;
    // scalar = u * p^va with u a unit mod p^(k-va)
    const auto& s = frac(scalar);
    std::int64_t pw = 1;
    for (int i = 0; i < va; ++i) pw *= p_;
    const std::int64_t Mq = M / pw;  // p^(k-va)
    const std::int64_t un = mod_i64(static_cast<std::int64_t>(((s.num / pw) % Mq + Mq)) , Mq);
    const std::int64_t ud = mod_i64(static_cast<std::int64_t>(s.den % Mq), Mq);
    const std::int64_t u = mod_i64(un * inverse_mod(ud, Mq), Mq);
    const std::int64_t z = mod_i64((r / pw) % Mq * inverse_mod(u, Mq), Mq);
    RingElement out(RingElement::Payload{Residue{z}});
    if (torsion_scalar(k, scalar, out) != torsion_canonicalize(k, rhs))
      throw internal_error("torsion solve verification failed");
    return out;
  }
  std::string torsion_format(int k, const RingElement& m) const override {
    (void)k;
    return std::to_string(m.residue().value);
  }
  std::string torsion_modulus_text(int k) const override {
    return Int(int_pow(Int(p_), static_cast<unsigned>(k))).str();
  }

 private:
  static std::optional<RingDescriptor> make_descriptor(std::int64_t p, bool field_mode) {
    RingDescriptor base{LocalizedIntegersDesc{p}};
    if (!field_mode) return base;
    return RingDescriptor{FractionFieldDesc{Box<RingDescriptor>(base)}};
  }

  std::int64_t modulus(int k) const {
    Int m = int_pow(Int(p_), static_cast<unsigned>(k));
    if (m > (Int(1) << 31)) throw usage_error("torsion modulus bound is 2^31");
    return static_cast<std::int64_t>(m);
  }

  static std::int64_t inverse_mod(std::int64_t a, std::int64_t M) {
    if (M == 1) return 0;
    auto [g, x] = gcd_bezout(mod_i64(a, M), M);
    if (g != 1 && g != -1) throw internal_error("non-invertible denominator in torsion arithmetic");
    return mod_i64(g < 0 ? -x : x, M);
  }

  const IntFraction& frac(const RingElement& a) const {
    const auto& f = a.int_fraction();
    if (f.den <= 0) throw representation_error("non-positive denominator in " + name());
    return f;
  }

  RingElement fraction(Int num, Int den) const {
    RingElement r = make_fraction_unchecked(std::move(num), std::move(den));
    if (!field_mode_ && r.int_fraction().den % p_ == 0)
      throw representation_error("denominator divisible by " + std::to_string(p_) + " in " +
                                 name());
    return r;
  }

  static RingElement make_fraction_unchecked(Int num, Int den) {
    if (den == 0) throw usage_error("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (num == 0) return RingElement(RingElement::Payload{IntFraction{0, 1}});
    Int g = int_gcd(num, den);
    return RingElement(RingElement::Payload{IntFraction{num / g, den / g}});
  }

  std::int64_t p_;
  std::shared_ptr<const ZLocalizedRing> fraction_field_;
};

// --- F_q[x] localized at (x), and F_q(x) --------------------------------------

class PolyLocalizedRing final : public DvrRing {
 public:
  PolyLocalizedRing(std::int64_t q, bool field_mode, Limits limits)
      : DvrRing(field_mode ? "qf(Floc(" + std::to_string(q) + "))"
                           : "Floc(" + std::to_string(q) + ")",
                make_descriptor(q, field_mode), RingOrder::infinite(), limits),
        field_(GaloisField::get(q)) {
    field_mode_ = field_mode;
    if (!field_mode) fraction_field_ = std::make_shared<PolyLocalizedRing>(q, true, limits);
  }

  std::int64_t q() const { return field_.q(); }
  const GaloisField& coefficient_field() const { return field_; }

  RingElement zero() const override { return make_unchecked({}, gfp_one()); }
  RingElement one() const override { return make_unchecked(gfp_one(), gfp_one()); }
  RingElement from_integer(const Int& n) const override {
    const std::int64_t c = static_cast<std::int64_t>(((n % field_.p()) + field_.p()) % field_.p());
    return make_unchecked(c == 0 ? GfPoly{} : GfPoly{c}, gfp_one());
  }

  RingElement add(const RingElement& a, const RingElement& b) const override {
    const auto& x = frac(a);
    const auto& y = frac(b);
    return fraction(gfp_add(field_, gfp_mul(field_, x.num, y.den), gfp_mul(field_, y.num, x.den)),
                    gfp_mul(field_, x.den, y.den));
  }
  RingElement neg(const RingElement& a) const override {
    const auto& x = frac(a);
    return make_unchecked(gfp_neg(field_, x.num), x.den);
  }
  RingElement mul(const RingElement& a, const RingElement& b) const override {
    const auto& x = frac(a);
    const auto& y = frac(b);
    return fraction(gfp_mul(field_, x.num, y.num), gfp_mul(field_, x.den, y.den));
  }

  RingElement canonicalize(const RingElement& a) const override {
    const auto& x = a.poly_fraction();
    GfPoly n = x.num, d = x.den;
    for (auto& c : n) c = mod_i64(c, field_.q());
    for (auto& c : d) c = mod_i64(c, field_.q());
    gfp_trim(n);
    gfp_trim(d);
    return fraction(std::move(n), std::move(d));
  }

  std::string format(const RingElement& a) const override {
    const auto& x = frac(a);
    const std::string num = format_poly(x.num, "x");
    if (gfp_deg(x.den) == 0 && x.den[0] == 1) return num;
    const bool simple_num = x.num.size() <= 1 || count_terms(x.num) == 1;
    const std::string lhs = simple_num ? num : "(" + num + ")";
    return lhs + "/(" + format_poly(x.den, "x") + ")";
  }

  RingElement sample(Rng& rng, const SampleBounds& bounds) const override {
    GfPoly num = random_poly(rng, bounds.max_degree);
    GfPoly den;
    do {
      den = random_poly(rng, bounds.max_degree);
    } while (gfp_is_zero(den) || (!field_mode_ && den[0] == 0));
    return fraction(std::move(num), std::move(den));
  }

  int valuation(const RingElement& a) const override {
    const auto& x = frac(a);
    if (gfp_is_zero(x.num)) return kInfiniteValuation;
    int v = gfp_low_order(x.num);
    if (field_mode_) v -= gfp_low_order(x.den);
    return v;
  }

  RingElement uniformizer() const override { return make_unchecked(GfPoly{0, 1}, gfp_one()); }

  RingElement pi_power(int t) const override {
    GfPoly n(static_cast<size_t>(t) + 1, 0);
    n.back() = 1;
    return make_unchecked(std::move(n), gfp_one());
  }

  DvrHandle fraction_field_ring() const override {
    if (field_mode_)
      return std::static_pointer_cast<const DvrRing>(shared_from_this());
    return fraction_field_;
  }

  RingElement exact_div(const RingElement& a, const RingElement& b) const override {
    const auto& x = frac(a);
    const auto& y = frac(b);
    if (gfp_is_zero(y.num)) throw usage_error("division by zero");
    return reduce_unconstrained(gfp_mul(field_, x.num, y.den), gfp_mul(field_, x.den, y.num));
  }

  // --- A/x^k ------------------------------------------------------------------

  RingElement torsion_zero(int k) const override {
    return RingElement(RingElement::Payload{PolyResidue{GfPoly(static_cast<size_t>(k), 0)}});
  }
  RingElement torsion_one(int k) const override {
    GfPoly c(static_cast<size_t>(k), 0);
    c[0] = 1;
    return RingElement(RingElement::Payload{PolyResidue{std::move(c)}});
  }
  RingElement torsion_canonicalize(int k, const RingElement& m) const override {
    GfPoly c = m.poly_residue().coeffs;
    c.resize(static_cast<size_t>(k), 0);
    for (auto& v : c) v = mod_i64(v, field_.q());
    return RingElement(RingElement::Payload{PolyResidue{std::move(c)}});
  }
  RingElement torsion_add(int k, const RingElement& a, const RingElement& b) const override {
    GfPoly r(static_cast<size_t>(k), 0);
    const auto& x = a.poly_residue().coeffs;
    const auto& y = b.poly_residue().coeffs;
    for (int i = 0; i < k; ++i) r[static_cast<size_t>(i)] = field_.add(x[static_cast<size_t>(i)], y[static_cast<size_t>(i)]);
    return RingElement(RingElement::Payload{PolyResidue{std::move(r)}});
  }
  RingElement torsion_neg(int k, const RingElement& a) const override {
    GfPoly r(static_cast<size_t>(k), 0);
    const auto& x = a.poly_residue().coeffs;
    for (int i = 0; i < k; ++i) r[static_cast<size_t>(i)] = field_.neg(x[static_cast<size_t>(i)]);
    return RingElement(RingElement::Payload{PolyResidue{std::move(r)}});
  }
  RingElement torsion_scalar(int k, const RingElement& scalar, const RingElement& m) const override {
    if (valuation(scalar) < 0) throw usage_error("scalar lies outside the valuation ring");
    const auto& s = frac(scalar);
    GfPoly mm = m.poly_residue().coeffs;
    gfp_trim(mm);
    GfPoly prod = gfp_mul(field_, mm, s.num);
    prod = gfp_mul(field_, prod, gfp_inv_mod_xk(field_, s.den, k));
    prod.resize(static_cast<size_t>(k), 0);  // reduce mod x^k
    return RingElement(RingElement::Payload{PolyResidue{std::move(prod)}});
  }
  int torsion_valuation(int k, const RingElement& m) const override {
    const auto& c = m.poly_residue().coeffs;
    for (int i = 0; i < k; ++i)
      if (c[static_cast<size_t>(i)] != 0) return i;
    return k;
  }
  RingElement torsion_pi_power(int k, int t) const override {
    GfPoly c(static_cast<size_t>(k), 0);
    if (t < k) c[static_cast<size_t>(t)] = 1;
    return RingElement(RingElement::Payload{PolyResidue{std::move(c)}});
  }
  Int torsion_order(int k) const override { return int_pow(Int(field_.q()), static_cast<unsigned>(k)); }
  RingElement torsion_lift(int k, const RingElement& m) const override {
    (void)k;
    GfPoly c = m.poly_residue().coeffs;
    gfp_trim(c);
    return make_unchecked(std::move(c), gfp_one());
  }
  RingElement torsion_sample(int k, Rng& rng) const override {
    GfPoly c(static_cast<size_t>(k), 0);
    for (auto& v : c) v = rng.uniform(0, field_.q() - 1);
    return RingElement(RingElement::Payload{PolyResidue{std::move(c)}});
  }
  std::optional<RingElement> torsion_solve_scalar(int k, const RingElement& scalar,
                                                  const RingElement& rhs) const override {
    const int va = is_zero(scalar) ? kInfiniteValuation : valuation(scalar);
    const int rv = torsion_valuation(k, rhs);
    if (va >= k) return rv == k ? std::optional<RingElement>(torsion_zero(k)) : std::nullopt;
    if (rv < va) return std::nullopt;
    // scalar = (x^va * u) / d with u, d units; x^va z = rhs d u^{-1} mod x^k
    const auto& s = frac(scalar);
    GfPoly u = s.num;
    u.erase(u.begin(), u.begin() + va);
    GfPoly t = rhs.poly_residue().coeffs;
    gfp_trim(t);
    t = gfp_mul(field_, t, s.den);
    t = gfp_mul(field_, t, gfp_inv_mod_xk(field_, u, k));
    t.resize(static_cast<size_t>(k), 0);
    t.erase(t.begin(), t.begin() + va);
    t.resize(static_cast<size_t>(k), 0);
    RingElement out(RingElement::Payload{PolyResidue{std::move(t)}});
    if (torsion_scalar(k, scalar, out) != torsion_canonicalize(k, rhs))
      throw internal_error("torsion solve verification failed");
    return out;
  }
  std::string torsion_format(int k, const RingElement& m) const override {
    (void)k;
    return format_poly(m.poly_residue().coeffs, "x");
  }
  std::string torsion_modulus_text(int k) const override {
    return k == 1 ? "x" : "x^" + std::to_string(k);
  }

 private:
  static std::optional<RingDescriptor> make_descriptor(std::int64_t q, bool field_mode) {
    RingDescriptor base{LocalizedPolynomialsDesc{q}};
    if (!field_mode) return base;
    return RingDescriptor{FractionFieldDesc{Box<RingDescriptor>(base)}};
  }

  static int count_terms(const GfPoly& f) {
    int n = 0;
    for (auto c : f)
      if (c != 0) ++n;
    return n;
  }

  GfPoly random_poly(Rng& rng, int max_degree) const {
    const int d = static_cast<int>(rng.uniform(0, max_degree));
    GfPoly f(static_cast<size_t>(d) + 1, 0);
    for (auto& c : f) c = rng.uniform(0, field_.q() - 1);
    gfp_trim(f);
    return f;
  }

  const PolyFraction& frac(const RingElement& a) const { return a.poly_fraction(); }

  RingElement fraction(GfPoly num, GfPoly den) const {
    RingElement r = reduce_unconstrained(std::move(num), std::move(den));
    const auto& f = r.poly_fraction();
    if (!field_mode_ && (!f.den.empty() && f.den[0] == 0))
      throw representation_error("denominator with zero constant term in " + name());
    return r;
  }

  RingElement reduce_unconstrained(GfPoly num, GfPoly den) const {
    if (gfp_is_zero(den)) throw usage_error("zero denominator");
    if (gfp_is_zero(num)) return make_unchecked({}, gfp_one());
    GfPoly g = gfp_gcd(field_, num, den);
    num = gfp_divmod(field_, num, g).first;
    den = gfp_divmod(field_, den, g).first;
    // normalize: monic denominator
    const std::int64_t lc = den.back();
    if (lc != 1) {
      const std::int64_t inv = field_.inv(lc);
      num = gfp_scale(field_, inv, num);
      den = gfp_scale(field_, inv, den);
    }
    return make_unchecked(std::move(num), std::move(den));
  }

  static RingElement make_unchecked(GfPoly num, GfPoly den) {
    return RingElement(RingElement::Payload{PolyFraction{std::move(num), std::move(den)}});
  }

  const GaloisField& field_;
  std::shared_ptr<const PolyLocalizedRing> fraction_field_;
};

}  // namespace ringlab

#endif  // RINGLAB_RINGS_LOCALIZED_HPP
