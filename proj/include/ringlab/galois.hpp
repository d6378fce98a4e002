#ifndef RINGLAB_GALOIS_HPP
#define RINGLAB_GALOIS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "ringlab/errors.hpp"
#include "ringlab/numeric.hpp"

namespace ringlab {

// GF(p^k) on integer codes 0..q-1. A code is the base-p digit encoding of
// the residue polynomial, least significant digit = constant term. The
// modulus is the first monic irreducible of degree k in code order, so the
// field for a given q is canonical across runs.
class GaloisField {
 public:
  static const GaloisField& get(std::int64_t q) {
    static std::mutex mu;
    static std::map<std::int64_t, std::unique_ptr<GaloisField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it == cache.end()) {
      it = cache.emplace(q, std::unique_ptr<GaloisField>(new GaloisField(q))).first;
    }
    return *it->second;
  }

  std::int64_t p() const { return p_; }
  int degree() const { return k_; }
  std::int64_t q() const { return q_; }
  // Modulus polynomial coefficients c_0..c_k over F_p (c_k = 1); empty for k = 1.
  const std::vector<std::int64_t>& modulus() const { return modulus_; }

  std::int64_t add(std::int64_t a, std::int64_t b) const {
    if (k_ == 1) return mod_i64(a + b, p_);
    std::int64_t r = 0, place = 1;
    while (a > 0 || b > 0) {
      r += ((a % p_ + b % p_) % p_) * place;
      a /= p_;
      b /= p_;
      place *= p_;
    }
    return r;
  }

  std::int64_t neg(std::int64_t a) const {
    if (k_ == 1) return mod_i64(-a, p_);
    std::int64_t r = 0, place = 1;
    while (a > 0) {
      r += mod_i64(-(a % p_), p_) * place;
      a /= p_;
      place *= p_;
    }
    return r;
  }

  std::int64_t sub(std::int64_t a, std::int64_t b) const { return add(a, neg(b)); }

  std::int64_t mul(std::int64_t a, std::int64_t b) const {
    if (k_ == 1) return mod_i64(a * b, p_);
    std::vector<std::int64_t> da = digits(a), db = digits(b);
    std::vector<std::int64_t> prod(da.size() + db.size() - 1, 0);
    for (size_t i = 0; i < da.size(); ++i)
      for (size_t j = 0; j < db.size(); ++j)
        prod[i + j] = mod_i64(prod[i + j] + da[i] * db[j], p_);
    reduce(prod);
    return encode(prod);
  }

  std::int64_t inv(std::int64_t a) const {
    if (a == 0) throw usage_error("inverse of zero in GF(" + std::to_string(q_) + ")");
    return inv_[static_cast<size_t>(a)];
  }

  std::int64_t pow(std::int64_t a, unsigned e) const {
    std::int64_t r = 1;
    while (e > 0) {
      if (e & 1u) r = mul(r, a);
      a = mul(a, a);
      e >>= 1u;
    }
    return r;
  }

 private:
  explicit GaloisField(std::int64_t q) : q_(q) {
    p_ = prime_power_base(q);
    if (p_ == 0 || !is_prime_i64(p_))
      throw usage_error(std::to_string(q) + " is not a prime power");
    if (q > 4096) throw usage_error("field order bound is 4096");
    k_ = 0;
    for (std::int64_t t = q; t > 1; t /= p_) ++k_;
    if (k_ > 1) modulus_ = find_irreducible();
    inv_.assign(static_cast<size_t>(q_), 0);
    for (std::int64_t a = 1; a < q_; ++a) {
      if (inv_[static_cast<size_t>(a)] != 0) continue;
      for (std::int64_t b = 1; b < q_; ++b) {
        if (mul(a, b) == 1) {
          inv_[static_cast<size_t>(a)] = b;
          inv_[static_cast<size_t>(b)] = a;
          break;
        }
      }
    }
  }

  std::vector<std::int64_t> digits(std::int64_t a) const {
    std::vector<std::int64_t> d(static_cast<size_t>(k_), 0);
    for (int i = 0; i < k_ && a > 0; ++i) {
      d[static_cast<size_t>(i)] = a % p_;
      a /= p_;
    }
    return d;
  }

  std::int64_t encode(const std::vector<std::int64_t>& d) const {
    std::int64_t r = 0;
    for (size_t i = d.size(); i-- > 0;) r = r * p_ + d[i];
    return r;
  }

  // Remainder of prod modulo the (monic) modulus polynomial, in place.
  void reduce(std::vector<std::int64_t>& prod) const {
    for (size_t i = prod.size(); i-- > static_cast<size_t>(k_);) {
      std::int64_t c = prod[i];
      if (c == 0) continue;
      prod[i] = 0;
      for (int j = 0; j < k_; ++j)
        prod[i - static_cast<size_t>(k_) + static_cast<size_t>(j)] = mod_i64(
            prod[i - static_cast<size_t>(k_) + static_cast<size_t>(j)] -
                c * modulus_[static_cast<size_t>(j)],
            p_);
    }
    prod.resize(static_cast<size_t>(k_));
  }

  bool is_irreducible(const std::vector<std::int64_t>& f) const {
    // trial division by every monic polynomial of degree 1..k/2 over F_p
    const int deg = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
      std::int64_t count = 1;
      for (int i = 0; i < d; ++i) count *= p_;
      for (std::int64_t code = 0; code < count; ++code) {
        std::vector<std::int64_t> g(static_cast<size_t>(d) + 1, 0);
        std::int64_t c = code;
        for (int i = 0; i < d; ++i) {
          g[static_cast<size_t>(i)] = c % p_;
          c /= p_;
        }
        g[static_cast<size_t>(d)] = 1;
        if (poly_divides(g, f)) return false;
      }
    }
    return true;
  }

  bool poly_divides(const std::vector<std::int64_t>& g, std::vector<std::int64_t> f) const {
    const int dg = static_cast<int>(g.size()) - 1;
    for (int i = static_cast<int>(f.size()) - 1; i >= dg; --i) {
      std::int64_t c = f[static_cast<size_t>(i)];
      if (c == 0) continue;
      for (int j = 0; j <= dg; ++j)
        f[static_cast<size_t>(i - dg + j)] =
            mod_i64(f[static_cast<size_t>(i - dg + j)] - c * g[static_cast<size_t>(j)], p_);
    }
    for (std::int64_t c : f)
      if (c != 0) return false;
    return true;
  }

  std::vector<std::int64_t> find_irreducible() const {
    std::int64_t count = 1;
    for (int i = 0; i < k_; ++i) count *= p_;
    for (std::int64_t code = 0; code < count; ++code) {
      std::vector<std::int64_t> f(static_cast<size_t>(k_) + 1, 0);
      std::int64_t c = code;
      for (int i = 0; i < k_; ++i) {
        f[static_cast<size_t>(i)] = c % p_;
        c /= p_;
      }
      f[static_cast<size_t>(k_)] = 1;
      if (is_irreducible(f)) return f;
    }
    throw internal_error("no irreducible polynomial found");
  }

  std::int64_t p_ = 0;
  int k_ = 0;
  std::int64_t q_ = 0;
  std::vector<std::int64_t> modulus_;
  std::vector<std::int64_t> inv_;
};

}  // namespace ringlab

#endif  // RINGLAB_GALOIS_HPP
