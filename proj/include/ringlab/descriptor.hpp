#ifndef RINGLAB_DESCRIPTOR_HPP
#define RINGLAB_DESCRIPTOR_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ringlab/element.hpp"

namespace ringlab {

struct RingDescriptor;
struct ModuleDescriptor;

// --- ring descriptors -------------------------------------------------------

struct ZModDesc {
  std::int64_t modulus = 0;  // >= 2
};

struct PolyQuotientDesc {
  std::int64_t p = 0;                     // prime coefficient field
  std::vector<std::int64_t> modulus;      // monic, ascending, degree >= 1
  std::string var = "x";
};

// F_p[vars]/(monomial ideal). Relations are exponent vectors; every variable
// must have a pure power among them so the quotient is finite. Monomial
// ideals admit exact normal forms without any basis computation.
struct MonomialQuotientDesc {
  std::int64_t p = 0;
  std::vector<std::string> vars;
  std::vector<std::vector<int>> monomials;
};

struct ProductDesc {
  std::vector<RingDescriptor> factors;  // nonempty
};

struct TrivialExtensionDesc {
  Box<RingDescriptor> base;
  Box<ModuleDescriptor> module;  // nonzero module over base
};

struct LocalizedIntegersDesc {
  std::int64_t p = 0;  // prime
};

struct LocalizedPolynomialsDesc {
  std::int64_t q = 0;  // prime power; coefficients in GF(q), localized at (x)
};

struct FractionFieldDesc {
  Box<RingDescriptor> dvr;  // LocalizedIntegers or LocalizedPolynomials
};

struct RingDescriptor {
  using V = std::variant<ZModDesc, PolyQuotientDesc, MonomialQuotientDesc, ProductDesc,
                         TrivialExtensionDesc, LocalizedIntegersDesc, LocalizedPolynomialsDesc,
                         FractionFieldDesc>;
  V v;

  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&v);
  }
};

// --- module descriptors -----------------------------------------------------

struct FreeSummand {};
struct CyclicTorsionSummand {
  int exponent = 1;  // k >= 1; the summand is A/pi^k A
};
struct FractionFieldSummand {};

using Summand = std::variant<FreeSummand, CyclicTorsionSummand, FractionFieldSummand>;

struct PresentedModuleDesc {
  int rank = 0;                                    // n >= 1
  std::vector<std::vector<RingElement>> relations; // rows of length rank over the base
};

struct DvrFormalSumDesc {
  std::vector<Summand> summands;  // nonempty
};

struct ModuleDescriptor {
  using V = std::variant<PresentedModuleDesc, DvrFormalSumDesc>;
  V v;

  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&v);
  }
};

// --- structural equality ----------------------------------------------------

inline bool operator==(const RingDescriptor& a, const RingDescriptor& b);
inline bool operator==(const ModuleDescriptor& a, const ModuleDescriptor& b);

inline bool operator==(const ZModDesc& a, const ZModDesc& b) { return a.modulus == b.modulus; }
inline bool operator==(const PolyQuotientDesc& a, const PolyQuotientDesc& b) {
  return a.p == b.p && a.modulus == b.modulus && a.var == b.var;
}
inline bool operator==(const MonomialQuotientDesc& a, const MonomialQuotientDesc& b) {
  return a.p == b.p && a.vars == b.vars && a.monomials == b.monomials;
}
inline bool operator==(const ProductDesc& a, const ProductDesc& b) {
  return a.factors == b.factors;
}
inline bool operator==(const TrivialExtensionDesc& a, const TrivialExtensionDesc& b) {
  return *a.base == *b.base && *a.module == *b.module;
}
inline bool operator==(const LocalizedIntegersDesc& a, const LocalizedIntegersDesc& b) {
  return a.p == b.p;
}
inline bool operator==(const LocalizedPolynomialsDesc& a, const LocalizedPolynomialsDesc& b) {
  return a.q == b.q;
}
inline bool operator==(const FractionFieldDesc& a, const FractionFieldDesc& b) {
  return *a.dvr == *b.dvr;
}
inline bool operator==(const RingDescriptor& a, const RingDescriptor& b) { return a.v == b.v; }

inline bool operator==(const FreeSummand&, const FreeSummand&) { return true; }
inline bool operator==(const CyclicTorsionSummand& a, const CyclicTorsionSummand& b) {
  return a.exponent == b.exponent;
}
inline bool operator==(const FractionFieldSummand&, const FractionFieldSummand&) { return true; }
inline bool operator==(const PresentedModuleDesc& a, const PresentedModuleDesc& b) {
  return a.rank == b.rank && a.relations == b.relations;
}
inline bool operator==(const DvrFormalSumDesc& a, const DvrFormalSumDesc& b) {
  return a.summands == b.summands;
}
inline bool operator==(const ModuleDescriptor& a, const ModuleDescriptor& b) { return a.v == b.v; }

}  // namespace ringlab

#endif  // RINGLAB_DESCRIPTOR_HPP
