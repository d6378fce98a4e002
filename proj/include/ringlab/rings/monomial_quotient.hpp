#ifndef RINGLAB_RINGS_MONOMIAL_QUOTIENT_HPP
#define RINGLAB_RINGS_MONOMIAL_QUOTIENT_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "ringlab/galois.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

// F_p[x_1..x_m]/(monomial ideal). Monomial relations admit exact normal
// forms: a product monomial either survives or reduces to zero, so the
// standard monomials form a basis and no basis completion is ever needed.
// Every variable must carry a pure power relation, which keeps the quotient
// finite.
class MonomialQuotientRing final : public Ring {
 public:
  MonomialQuotientRing(std::int64_t p, std::vector<std::string> vars,
                       std::vector<std::vector<int>> monomials, Limits limits)
      : Ring(make_name(p, vars, monomials),
             RingDescriptor{MonomialQuotientDesc{p, vars, monomials}}, RingOrder::of(0), limits),
        field_(GaloisField::get(check_prime(p))),
        vars_(std::move(vars)),
        gens_(std::move(monomials)) {
    if (vars_.empty()) throw usage_error("monomial quotient needs at least one variable");
    const size_t m = vars_.size();
    for (const auto& g : gens_) {
      if (g.size() != m) throw usage_error("relation exponent vector has wrong arity");
      bool all_zero = true;
      for (int e : g) {
        if (e < 0) throw usage_error("negative exponent in relation");
        if (e > 0) all_zero = false;
      }
      if (all_zero) throw usage_error("the unit monomial cannot be a relation");
    }
    // pure-power bound per variable; required for finiteness
    std::vector<int> bound(m, -1);
    for (const auto& g : gens_) {
      int nz = -1;
      bool pure = true;
      for (size_t i = 0; i < m; ++i) {
        if (g[i] > 0) {
          if (nz >= 0) pure = false;
          nz = static_cast<int>(i);
        }
      }
      if (pure && nz >= 0) {
        if (bound[static_cast<size_t>(nz)] < 0 || g[static_cast<size_t>(nz)] < bound[static_cast<size_t>(nz)])
          bound[static_cast<size_t>(nz)] = g[static_cast<size_t>(nz)];
      }
    }
    for (size_t i = 0; i < m; ++i)
      if (bound[i] < 0)
        throw usage_error("quotient is infinite: variable " + vars_[i] +
                          " has no pure power relation");
    // standard monomials: exponent vectors below the bounds and outside the ideal
    std::vector<int> e(m, 0);
    while (true) {
      if (!in_ideal(e)) std_monomials_.push_back(e);
      size_t i = m;
      while (i > 0 && e[i - 1] + 1 >= bound[i - 1]) e[--i] = 0;
      if (i == 0) break;
      ++e[i - 1];
    }
    std::sort(std_monomials_.begin(), std_monomials_.end(), [](const auto& a, const auto& b) {
      int da = 0, db = 0;
      for (int x : a) da += x;
      for (int x : b) db += x;
      if (da != db) return da < db;
      return a < b;
    });
    if (std_monomials_.size() > 64) throw usage_error("monomial quotient basis bound is 64");
    // product table over the basis; -1 means the product falls into the ideal
    const size_t s = std_monomials_.size();
    prod_tab_.assign(s * s, -1);
    for (size_t i = 0; i < s; ++i)
      for (size_t j = 0; j < s; ++j) {
        std::vector<int> sum(m);
        for (size_t k = 0; k < m; ++k) sum[k] = std_monomials_[i][k] + std_monomials_[j][k];
        if (!in_ideal(sum)) {
          auto it = std::find(std_monomials_.begin(), std_monomials_.end(), sum);
          if (it == std_monomials_.end())
            throw internal_error("product monomial missing from basis");
          prod_tab_[i * s + j] = static_cast<int>(it - std_monomials_.begin());
        }
      }
    set_order(RingOrder::of(int_pow(Int(p), static_cast<unsigned>(s))));
    if (materializable(order().value)) {
      std::vector<RingElement> es;
      std::vector<std::int64_t> c(s, 0);
      while (true) {
        es.emplace_back(RingElement::Payload{MonomialCombo{c}});
        size_t i = s;
        while (i > 0 && c[i - 1] + 1 >= p) c[--i] = 0;
        if (i == 0) break;
        ++c[i - 1];
      }
      materialize(std::move(es));
    }
  }

  std::int64_t p() const { return field_.p(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<std::vector<int>>& standard_monomials() const { return std_monomials_; }

  RingElement zero() const override { return combo(std::vector<std::int64_t>(basis_size(), 0)); }
  RingElement one() const override {
    std::vector<std::int64_t> c(basis_size(), 0);
    c[0] = 1 % field_.p();  // constant monomial sorts first
    return combo(std::move(c));
  }

  RingElement add(const RingElement& a, const RingElement& b) const override {
    const auto& ca = coords(a);
    const auto& cb = coords(b);
    std::vector<std::int64_t> r(basis_size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = field_.add(ca[i], cb[i]);
    return combo(std::move(r));
  }

  RingElement neg(const RingElement& a) const override {
    const auto& ca = coords(a);
    std::vector<std::int64_t> r(basis_size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = field_.neg(ca[i]);
    return combo(std::move(r));
  }

  RingElement mul(const RingElement& a, const RingElement& b) const override {
    const auto& ca = coords(a);
    const auto& cb = coords(b);
    const size_t s = basis_size();
    std::vector<std::int64_t> r(s, 0);
    for (size_t i = 0; i < s; ++i) {
      if (ca[i] == 0) continue;
      for (size_t j = 0; j < s; ++j) {
        if (cb[j] == 0) continue;
        const int k = prod_tab_[i * s + j];
        if (k >= 0)
          r[static_cast<size_t>(k)] =
              field_.add(r[static_cast<size_t>(k)], field_.mul(ca[i], cb[j]));
      }
    }
    return combo(std::move(r));
  }

  RingElement canonicalize(const RingElement& a) const override {
    auto c = a.monomial_combo().coords;
    if (c.size() != basis_size())
      throw representation_error("coordinate vector length mismatch in " + name());
    for (auto& v : c) v = mod_i64(v, field_.p());
    return combo(std::move(c));
  }

  RingElement from_integer(const Int& n) const override {
    std::vector<std::int64_t> c(basis_size(), 0);
    c[0] = static_cast<std::int64_t>(((n % field_.p()) + field_.p()) % field_.p());
    return combo(std::move(c));
  }

  std::string format(const RingElement& a) const override {
    const auto& c = coords(a);
    std::string out;
    for (size_t i = c.size(); i-- > 0;) {
      if (c[i] == 0) continue;
      if (!out.empty()) out += "+";
      const std::string mono = format_monomial(std_monomials_[i]);
      if (mono.empty()) {
        out += std::to_string(c[i]);
      } else {
        if (c[i] != 1) out += std::to_string(c[i]) + "*";
        out += mono;
      }
    }
    return out.empty() ? "0" : out;
  }

  // Residue class of a variable.
  RingElement variable(size_t var_index) const {
    std::vector<int> e(vars_.size(), 0);
    e[var_index] = 1;
    std::vector<std::int64_t> c(basis_size(), 0);
    auto it = std::find(std_monomials_.begin(), std_monomials_.end(), e);
    if (it == std_monomials_.end()) return zero();  // variable lies in the ideal
    c[static_cast<size_t>(it - std_monomials_.begin())] = 1;
    return combo(std::move(c));
  }

 private:
  static std::int64_t check_prime(std::int64_t p) {
    if (!is_prime_i64(p)) throw usage_error(std::to_string(p) + " is not prime");
    return p;
  }

  static std::string format_monomial_static(const std::vector<std::string>& vars,
                                            const std::vector<int>& e) {
    std::string out;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += vars[i];
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
  }

  std::string format_monomial(const std::vector<int>& e) const {
    return format_monomial_static(vars_, e);
  }

  static std::string make_name(std::int64_t p, const std::vector<std::string>& vars,
                               const std::vector<std::vector<int>>& gens) {
    std::string out = "F" + std::to_string(p) + "[";
    for (size_t i = 0; i < vars.size(); ++i) {
      if (i) out += ",";
      out += vars[i];
    }
    out += "]/(";
    for (size_t i = 0; i < gens.size(); ++i) {
      if (i) out += ",";
      out += format_monomial_static(vars, gens[i]);
    }
    out += ")";
    return out;
  }

  bool in_ideal(const std::vector<int>& e) const {
    for (const auto& g : gens_) {
      bool divisible = true;
      for (size_t i = 0; i < e.size(); ++i)
        if (e[i] < g[i]) {
          divisible = false;
          break;
        }
      if (divisible) return true;
    }
    return false;
  }

  size_t basis_size() const { return std_monomials_.size(); }

  RingElement combo(std::vector<std::int64_t> c) const {
    return RingElement(RingElement::Payload{MonomialCombo{std::move(c)}});
  }

  const std::vector<std::int64_t>& coords(const RingElement& a) const {
    const auto& mc = a.monomial_combo();
    if (mc.coords.size() != basis_size())
      throw representation_error("coordinate vector length mismatch in " + name());
    return mc.coords;
  }

  const GaloisField& field_;
  std::vector<std::string> vars_;
  std::vector<std::vector<int>> gens_;
  std::vector<std::vector<int>> std_monomials_;
  std::vector<int> prod_tab_;
};

}  // namespace ringlab

#endif  // RINGLAB_RINGS_MONOMIAL_QUOTIENT_HPP
