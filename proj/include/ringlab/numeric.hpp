#ifndef RINGLAB_NUMERIC_HPP
#define RINGLAB_NUMERIC_HPP

#include <cstdint>
#include <random>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "ringlab/errors.hpp"

namespace ringlab {

// Exact arbitrary-precision integer used by all fraction payloads.
using Int = boost::multiprecision::cpp_int;

inline Int int_abs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int int_gcd(Int a, Int b) {
  a = int_abs(a);
  b = int_abs(b);
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

inline Int int_pow(Int base, unsigned exp) {
  Int r = 1;
  while (exp > 0) {
    if (exp & 1u) r *= base;
    base *= base;
    exp >>= 1u;
  }
  return r;
}

// p-adic order of a nonzero integer.
inline int padic_valuation(Int a, const Int& p) {
  if (a == 0) throw internal_error("padic_valuation of zero");
  a = int_abs(a);
  int v = 0;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  return v;
}

inline bool is_prime_i64(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Returns the prime p with n = p^k (k >= 1), or 0 if n is not a prime power.
inline std::int64_t prime_power_base(std::int64_t n) {
  if (n < 2) return 0;
  std::int64_t p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (p * p > n) return n;  // n itself prime
  while (n % p == 0) n /= p;
  return n == 1 ? p : 0;
}

inline std::int64_t mod_i64(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

// gcd with Bezout coefficient: g = gcd(a, n), returns (g, x) with a*x == g mod n.
inline std::pair<std::int64_t, std::int64_t> gcd_bezout(std::int64_t a, std::int64_t n) {
  std::int64_t old_r = a, r = n;
  std::int64_t old_x = 1, x = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_x - q * x;
    old_x = x;
    x = t;
  }
  return {old_r, old_x};
}

// Deterministic seeded generator. mt19937_64 has a fully pinned sequence;
// bounded draws use rejection so results do not depend on the standard
// library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [lo, hi], inclusive.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw internal_error("Rng::uniform empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1u;
    if (span == 0) return static_cast<std::int64_t>(next());  // full 64-bit range
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return lo + static_cast<std::int64_t>(v % span);
  }

  bool coin() { return (next() & 1u) != 0; }

  // Per-instance seed derivation so concurrent sweeps stay reproducible.
  static std::uint64_t derive(std::uint64_t seed, std::string_view key) {
    std::uint64_t h = 1469598103934665603ull ^ seed;
    for (unsigned char c : key) {
      h ^= c;
      h *= 1099511628211ull;
    }
    // splitmix64 finalizer
    h += 0x9e3779b97f4a7c15ull;
    h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ull;
    h = (h ^ (h >> 27)) * 0x94d049bb133111ebull;
    return h ^ (h >> 31);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace ringlab

#endif  // RINGLAB_NUMERIC_HPP
