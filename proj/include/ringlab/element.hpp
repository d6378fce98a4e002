#ifndef RINGLAB_ELEMENT_HPP
#define RINGLAB_ELEMENT_HPP

#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

#include "ringlab/errors.hpp"
#include "ringlab/numeric.hpp"

namespace ringlab {

class RingElement;
struct ModuleElement;

// Immutable deep-shared box so payloads can recurse through incomplete types.
template <class T>
class Box {
 public:
  Box() = default;
  explicit Box(T value) : ptr_(std::make_shared<const T>(std::move(value))) {}
  const T& get() const {
    if (!ptr_) throw internal_error("empty Box dereference");
    return *ptr_;
  }
  const T& operator*() const { return get(); }
  const T* operator->() const { return &get(); }
  bool has_value() const { return ptr_ != nullptr; }

 private:
  std::shared_ptr<const T> ptr_;
};

// --- canonical payloads -----------------------------------------------------
//
// Canonical form is unique per residue class, so payload equality is ring
// equality and a single lexicographic order works for every family.

struct Residue {
  std::int64_t value = 0;  // in [0, n)
};

struct PolyResidue {
  std::vector<std::int64_t> coeffs;  // fixed length = deg(modulus), entries are GF codes
};

struct MonomialCombo {
  std::vector<std::int64_t> coords;  // over the ring's standard monomial basis, in [0, p)
};

struct Tuple {
  std::vector<RingElement> items;
};

struct TrivPair {
  Box<RingElement> base;
  Box<ModuleElement> mod;
};

struct IntFraction {
  Int num;  // reduced, gcd(num, den) = 1
  Int den;  // > 0; 0 is 0/1
};

struct PolyFraction {
  std::vector<std::int64_t> num;  // GfPoly codes, ascending degree
  std::vector<std::int64_t> den;  // monic, nonzero, gcd(num, den) = 1; zero is 0/1
};

class RingElement {
 public:
  using Payload = std::variant<Residue, PolyResidue, MonomialCombo, Tuple, TrivPair,
                               IntFraction, PolyFraction>;

  RingElement() : payload_(Residue{0}) {}
  explicit RingElement(Payload p) : payload_(std::move(p)) {}

  const Payload& payload() const { return payload_; }

  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&payload_);
  }

  template <class T>
  const T& as(const char* what) const {
    const T* p = std::get_if<T>(&payload_);
    if (!p) throw representation_error(std::string("element payload is not a ") + what);
    return *p;
  }

  const Residue& residue() const { return as<Residue>("residue"); }
  const PolyResidue& poly_residue() const { return as<PolyResidue>("polynomial residue"); }
  const MonomialCombo& monomial_combo() const { return as<MonomialCombo>("monomial combination"); }
  const Tuple& tuple() const { return as<Tuple>("tuple"); }
  const TrivPair& triv_pair() const { return as<TrivPair>("pair"); }
  const IntFraction& int_fraction() const { return as<IntFraction>("fraction"); }
  const PolyFraction& poly_fraction() const { return as<PolyFraction>("polynomial fraction"); }

 private:
  Payload payload_;
};

struct ModuleElement {
  // Interpretation is owned by the module: coset representative tuple for
  // presented modules, one entry per summand for formal sums.
  std::vector<RingElement> comps;
};

// --- total order ------------------------------------------------------------

inline int compare(const RingElement& a, const RingElement& b);

inline int compare_i64(std::int64_t a, std::int64_t b) { return a < b ? -1 : (a > b ? 1 : 0); }

inline int compare(const Int& a, const Int& b) { return a < b ? -1 : (a > b ? 1 : 0); }

inline int compare_vec_i64(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

inline int compare(const ModuleElement& a, const ModuleElement& b) {
  if (a.comps.size() != b.comps.size()) return a.comps.size() < b.comps.size() ? -1 : 1;
  for (size_t i = 0; i < a.comps.size(); ++i)
    if (int c = compare(a.comps[i], b.comps[i])) return c;
  return 0;
}

inline int compare(const RingElement& a, const RingElement& b) {
  const auto& pa = a.payload();
  const auto& pb = b.payload();
  if (pa.index() != pb.index()) return pa.index() < pb.index() ? -1 : 1;
  struct Visitor {
    const RingElement::Payload& other;
    int operator()(const Residue& x) const {
      return compare_i64(x.value, std::get<Residue>(other).value);
    }
    int operator()(const PolyResidue& x) const {
      return compare_vec_i64(x.coeffs, std::get<PolyResidue>(other).coeffs);
    }
    int operator()(const MonomialCombo& x) const {
      return compare_vec_i64(x.coords, std::get<MonomialCombo>(other).coords);
    }
    int operator()(const Tuple& x) const {
      const Tuple& y = std::get<Tuple>(other);
      if (x.items.size() != y.items.size()) return x.items.size() < y.items.size() ? -1 : 1;
      for (size_t i = 0; i < x.items.size(); ++i)
        if (int c = compare(x.items[i], y.items[i])) return c;
      return 0;
    }
    int operator()(const TrivPair& x) const {
      const TrivPair& y = std::get<TrivPair>(other);
      if (int c = compare(*x.base, *y.base)) return c;
      return compare(*x.mod, *y.mod);
    }
    int operator()(const IntFraction& x) const {
      const IntFraction& y = std::get<IntFraction>(other);
      if (int c = compare(x.num, y.num)) return c;
      return compare(x.den, y.den);
    }
    int operator()(const PolyFraction& x) const {
      const PolyFraction& y = std::get<PolyFraction>(other);
      if (int c = compare_vec_i64(x.num, y.num)) return c;
      return compare_vec_i64(x.den, y.den);
    }
  };
  return std::visit(Visitor{pb}, pa);
}

inline bool operator==(const RingElement& a, const RingElement& b) { return compare(a, b) == 0; }
inline bool operator!=(const RingElement& a, const RingElement& b) { return compare(a, b) != 0; }
inline bool operator<(const RingElement& a, const RingElement& b) { return compare(a, b) < 0; }

inline bool operator==(const ModuleElement& a, const ModuleElement& b) { return compare(a, b) == 0; }
inline bool operator!=(const ModuleElement& a, const ModuleElement& b) { return compare(a, b) != 0; }
inline bool operator<(const ModuleElement& a, const ModuleElement& b) { return compare(a, b) < 0; }

struct ElementLess {
  bool operator()(const RingElement& a, const RingElement& b) const { return compare(a, b) < 0; }
};

struct ModuleElementLess {
  bool operator()(const ModuleElement& a, const ModuleElement& b) const { return compare(a, b) < 0; }
};

}  // namespace ringlab

#endif  // RINGLAB_ELEMENT_HPP
