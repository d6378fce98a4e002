#ifndef RINGLAB_FP_POLY_HPP
#define RINGLAB_FP_POLY_HPP

#include <cstdint>
#include <vector>

#include "ringlab/galois.hpp"

namespace ringlab {

// Dense univariate polynomials over GF(q), stored as GF codes in ascending
// degree with trailing zeros trimmed. The zero polynomial is the empty
// vector. All functions take the coefficient field explicitly; payloads
// stay plain data.
using GfPoly = std::vector<std::int64_t>;

inline void gfp_trim(GfPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int gfp_deg(const GfPoly& f) { return static_cast<int>(f.size()) - 1; }

inline bool gfp_is_zero(const GfPoly& f) { return f.empty(); }

inline GfPoly gfp_one() { return GfPoly{1}; }

inline GfPoly gfp_add(const GaloisField& F, const GfPoly& a, const GfPoly& b) {
  GfPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    std::int64_t x = i < a.size() ? a[i] : 0;
    std::int64_t y = i < b.size() ? b[i] : 0;
    r[i] = F.add(x, y);
  }
  gfp_trim(r);
  return r;
}

inline GfPoly gfp_neg(const GaloisField& F, const GfPoly& a) {
  GfPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = F.neg(a[i]);
  return r;
}

inline GfPoly gfp_sub(const GaloisField& F, const GfPoly& a, const GfPoly& b) {
  return gfp_add(F, a, gfp_neg(F, b));
}

inline GfPoly gfp_mul(const GaloisField& F, const GfPoly& a, const GfPoly& b) {
  if (a.empty() || b.empty()) return {};
  GfPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  gfp_trim(r);
  return r;
}

inline GfPoly gfp_scale(const GaloisField& F, std::int64_t c, const GfPoly& a) {
  if (c == 0) return {};
  GfPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = F.mul(c, a[i]);
  gfp_trim(r);
  return r;
}

// Quotient and remainder; divisor must be nonzero.
inline std::pair<GfPoly, GfPoly> gfp_divmod(const GaloisField& F, GfPoly a, const GfPoly& b) {
  if (b.empty()) throw usage_error("polynomial division by zero");
  gfp_trim(a);
  if (a.size() < b.size()) return {{}, a};
  const std::int64_t lead_inv = F.inv(b.back());
  GfPoly q(a.size() - b.size() + 1, 0);
  for (size_t i = a.size(); i-- > 0;) {
    if (i + 1 < b.size()) break;
    const std::int64_t c = a[i];
    if (c == 0) continue;
    const size_t shift = i + 1 - b.size();
    const std::int64_t coef = F.mul(c, lead_inv);
    q[shift] = coef;
    for (size_t j = 0; j < b.size(); ++j)
      a[shift + j] = F.sub(a[shift + j], F.mul(coef, b[j]));
  }
  gfp_trim(a);
  gfp_trim(q);
  return {q, a};
}

inline GfPoly gfp_mod(const GaloisField& F, const GfPoly& a, const GfPoly& b) {
  return gfp_divmod(F, a, b).second;
}

inline GfPoly gfp_make_monic(const GaloisField& F, const GfPoly& a) {
  if (a.empty() || a.back() == 1) return a;
  return gfp_scale(F, F.inv(a.back()), a);
}

inline GfPoly gfp_gcd(const GaloisField& F, GfPoly a, GfPoly b) {
  while (!b.empty()) {
    GfPoly r = gfp_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return gfp_make_monic(F, a);
}

// x-adic order: index of the lowest nonzero coefficient. Caller handles zero.
inline int gfp_low_order(const GfPoly& f) {
  for (size_t i = 0; i < f.size(); ++i)
    if (f[i] != 0) return static_cast<int>(i);
  throw internal_error("gfp_low_order of zero polynomial");
}

// Multiply by x^k.
inline GfPoly gfp_shift(const GfPoly& f, int k) {
  if (f.empty()) return {};
  GfPoly r(f.size() + static_cast<size_t>(k), 0);
  for (size_t i = 0; i < f.size(); ++i) r[i + static_cast<size_t>(k)] = f[i];
  return r;
}

// Inverse of f modulo x^k; requires f(0) != 0. Coefficients solved in order.
inline GfPoly gfp_inv_mod_xk(const GaloisField& F, const GfPoly& f, int k) {
  if (f.empty() || f[0] == 0) throw usage_error("not invertible modulo x^k");
  GfPoly g(static_cast<size_t>(k), 0);
  const std::int64_t c0 = F.inv(f[0]);
  g[0] = c0;
  for (int n = 1; n < k; ++n) {
    std::int64_t acc = 0;
    for (int i = 1; i <= n; ++i) {
      std::int64_t fi = static_cast<size_t>(i) < f.size() ? f[static_cast<size_t>(i)] : 0;
      acc = F.add(acc, F.mul(fi, g[static_cast<size_t>(n - i)]));
    }
    g[static_cast<size_t>(n)] = F.neg(F.mul(c0, acc));
  }
  gfp_trim(g);
  return g;
}

}  // namespace ringlab

#endif  // RINGLAB_FP_POLY_HPP
