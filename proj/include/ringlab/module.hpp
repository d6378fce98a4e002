#ifndef RINGLAB_MODULE_HPP
#define RINGLAB_MODULE_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ringlab/ideal.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/rings/localized.hpp"

namespace ringlab {

enum class TorsionClass { Zero, Torsion, TorsionFree, Mixed };

inline const char* to_string(TorsionClass t) {
  switch (t) {
    case TorsionClass::Zero: return "zero";
    case TorsionClass::Torsion: return "torsion";
    case TorsionClass::TorsionFree: return "torsion-free";
    case TorsionClass::Mixed: return "mixed";
  }
  return "?";
}

struct UniserialVerdict {
  bool uniserial = false;
  std::optional<std::pair<ModuleElement, ModuleElement>> witness;  // x not in Ay, y not in Ax
};

class Module {
 public:
  virtual ~Module() = default;

  const RingHandle& base() const { return base_; }
  const ModuleDescriptor& descriptor() const { return descriptor_; }
  const std::string& name() const { return name_; }
  const RingOrder& order() const { return order_; }
  bool is_finite() const { return order_.finite; }
  bool is_zero_module() const { return order_.finite && order_.value == 1; }

  virtual ModuleElement zero() const = 0;
  virtual ModuleElement add(const ModuleElement&, const ModuleElement&) const = 0;
  virtual ModuleElement neg(const ModuleElement&) const = 0;
  virtual ModuleElement scalar(const RingElement&, const ModuleElement&) const = 0;
  virtual ModuleElement canonicalize(const ModuleElement&) const = 0;
  virtual std::string format(const ModuleElement&) const = 0;
  virtual ModuleElement sample(Rng&, const SampleBounds&) const = 0;
  ModuleElement sub(const ModuleElement& a, const ModuleElement& b) const {
    return add(a, neg(b));
  }

  bool is_zero(const ModuleElement& m) const { return m == zero(); }

  bool has_elements() const { return !elements_.empty(); }
  const std::vector<ModuleElement>& elements() const {
    if (elements_.empty())
      throw capability_error("module element enumeration unavailable for " + name_);
    return elements_;
  }

  virtual Ideal annihilator_of_element(const ModuleElement&) const = 0;
  virtual TorsionClass torsion_classification() const = 0;
  virtual UniserialVerdict is_uniserial() const = 0;

  // c with c*x = y, scanning in canonical order where applicable.
  virtual std::optional<RingElement> solve_scalar(const ModuleElement& x,
                                                  const ModuleElement& y) const {
    for (const RingElement& c : base_->elements())
      if (scalar(c, x) == y) return c;
    return std::nullopt;
  }

  // z with a*z = rhs.
  virtual std::optional<ModuleElement> solve_module(const RingElement& a,
                                                    const ModuleElement& rhs) const {
    for (const ModuleElement& z : elements())
      if (scalar(a, z) == rhs) return z;
    return std::nullopt;
  }

  // First generator of a cyclic module in canonical order, if any.
  std::optional<ModuleElement> cyclic_generator() const {
    for (const ModuleElement& g : elements()) {
      std::set<ModuleElement, ModuleElementLess> orbit;
      for (const RingElement& c : base_->elements()) orbit.insert(scalar(c, g));
      if (Int(orbit.size()) == order_.value) return g;
    }
    return std::nullopt;
  }

 protected:
  Module(RingHandle base, ModuleDescriptor desc, std::string name, RingOrder order)
      : base_(std::move(base)),
        descriptor_(std::move(desc)),
        name_(std::move(name)),
        order_(std::move(order)) {}

  void set_elements(std::vector<ModuleElement> es) { elements_ = std::move(es); }
  void set_order(RingOrder o) { order_ = std::move(o); }

  RingHandle base_;
  ModuleDescriptor descriptor_;
  std::string name_;
  RingOrder order_;
  std::vector<ModuleElement> elements_;
};

using ModuleHandle = std::shared_ptr<const Module>;

// Submodule generated by gens: closure under addition of scalar multiples.
inline std::vector<ModuleElement> submodule_span(const Module& M,
                                                 const std::vector<ModuleElement>& gens) {
  std::set<ModuleElement, ModuleElementLess> span;
  span.insert(M.zero());
  for (const ModuleElement& g : gens) {
    std::vector<ModuleElement> orbit;
    for (const RingElement& c : M.base()->elements()) orbit.push_back(M.scalar(c, g));
    std::set<ModuleElement, ModuleElementLess> next;
    for (const ModuleElement& s : span)
      for (const ModuleElement& t : orbit) next.insert(M.add(s, t));
    span = std::move(next);
  }
  return std::vector<ModuleElement>(span.begin(), span.end());
}

// --- finitely presented module over a materialized finite ring ---------------

class PresentedModule final : public Module {
 public:
  static constexpr std::int64_t kVectorBound = std::int64_t{1} << 20;

  PresentedModule(RingHandle base, PresentedModuleDesc desc)
      : Module(base, ModuleDescriptor{desc}, "", RingOrder::of(0)) {
    if (!base_->has_elements())
      throw capability_error("finite presentations need a materialized base ring");
    rank_ = desc.rank;
    if (rank_ < 1) throw usage_error("presentation rank must be >= 1");
    const int n = base_->elem_count();
    Int total = int_pow(Int(n), static_cast<unsigned>(rank_));
    if (total > kVectorBound)
      throw capability_error("presentation coset space exceeds the enumeration bound");
    total_vectors_ = static_cast<std::int64_t>(total);
    for (const auto& row : desc.relations) {
      if (static_cast<int>(row.size()) != rank_)
        throw usage_error("relation row arity does not match the rank");
      std::vector<std::int32_t> r;
      for (const auto& e : row)
        r.push_back(static_cast<std::int32_t>(base_->index_of(base_->canonicalize(e))));
      rows_.push_back(std::move(r));
    }
    build_span();
    build_elements();
    name_ = make_name(desc);
  }

  int rank() const { return rank_; }
  const std::vector<std::vector<std::int32_t>>& relation_rows() const { return rows_; }
  std::int64_t relation_span_size() const { return static_cast<std::int64_t>(span_.size()); }

  ModuleElement zero() const override { return from_indices(std::vector<std::int32_t>(
      static_cast<size_t>(rank_), static_cast<std::int32_t>(base_->zero_index()))); }

  ModuleElement add(const ModuleElement& a, const ModuleElement& b) const override {
    const auto ia = indices(a);
    const auto ib = indices(b);
    std::vector<std::int32_t> r(static_cast<size_t>(rank_));
    for (size_t i = 0; i < r.size(); ++i)
      r[i] = static_cast<std::int32_t>(base_->add_i(ia[i], ib[i]));
    return from_indices(reduce(r));
  }

  ModuleElement neg(const ModuleElement& a) const override {
    const auto ia = indices(a);
    std::vector<std::int32_t> r(static_cast<size_t>(rank_));
    for (size_t i = 0; i < r.size(); ++i) r[i] = static_cast<std::int32_t>(base_->neg_i(ia[i]));
    return from_indices(reduce(r));
  }

  ModuleElement scalar(const RingElement& c, const ModuleElement& a) const override {
    const int ci = base_->index_of(base_->checked(c));
    const auto ia = indices(a);
    std::vector<std::int32_t> r(static_cast<size_t>(rank_));
    for (size_t i = 0; i < r.size(); ++i) r[i] = static_cast<std::int32_t>(base_->mul_i(ci, ia[i]));
    return from_indices(reduce(r));
  }

  ModuleElement canonicalize(const ModuleElement& a) const override {
    if (a.comps.size() != static_cast<size_t>(rank_))
      throw representation_error("module element arity mismatch in " + name_);
    std::vector<std::int32_t> r;
    for (const auto& e : a.comps)
      r.push_back(static_cast<std::int32_t>(base_->index_of(base_->canonicalize(e))));
    return from_indices(reduce(r));
  }

  std::string format(const ModuleElement& a) const override {
    if (rank_ == 1) return base_->format(a.comps[0]);
    std::string out = "(";
    for (size_t i = 0; i < a.comps.size(); ++i) {
      if (i) out += ", ";
      out += base_->format(a.comps[i]);
    }
    return out + ")";
  }

  ModuleElement sample(Rng& rng, const SampleBounds&) const override {
    return elements()[static_cast<size_t>(rng.uniform(0, static_cast<std::int64_t>(elements().size()) - 1))];
  }

  Ideal annihilator_of_element(const ModuleElement& x) const override {
    const ModuleElement cx = canonicalize(x);
    const ModuleElement z = zero();
    IndexSet set;
    for (int a = 0; a < base_->elem_count(); ++a)
      if (scalar(base_->elem(a), cx) == z) set.push_back(a);
    return make_ideal_from_indices(base_, std::move(set));
  }

  TorsionClass torsion_classification() const override {
    // elementwise: m is torsion when some nonzero scalar kills it
    bool any_torsion = false, any_free = false;
    const ModuleElement z = zero();
    for (const ModuleElement& m : elements()) {
      if (m == z) continue;
      bool killed = false;
      for (int a = 0; a < base_->elem_count(); ++a) {
        if (a == base_->zero_index()) continue;
        if (scalar(base_->elem(a), m) == z) {
          killed = true;
          break;
        }
      }
      (killed ? any_torsion : any_free) = true;
    }
    if (!any_torsion && !any_free) return TorsionClass::Zero;
    if (any_torsion && any_free) return TorsionClass::Mixed;
    return any_torsion ? TorsionClass::Torsion : TorsionClass::TorsionFree;
  }

  UniserialVerdict is_uniserial() const override {
    const auto& es = elements();
    for (size_t i = 0; i < es.size(); ++i)
      for (size_t j = i + 1; j < es.size(); ++j) {
        if (solve_scalar(es[j], es[i]) || solve_scalar(es[i], es[j])) continue;
        return {false, std::make_pair(es[i], es[j])};
      }
    return {true, std::nullopt};
  }

 private:
  std::string make_name(const PresentedModuleDesc& desc) const {
    const bool cyclic_form = rank_ == 1;
    if (cyclic_form && !desc.relations.empty()) {
      std::string out = base_->name() + "/(";
      for (size_t i = 0; i < desc.relations.size(); ++i) {
        if (i) out += ",";
        out += base_->format(base_->canonicalize(desc.relations[i][0]));
      }
      return out + ")";
    }
    std::string out = "free(" + std::to_string(rank_) + ")";
    if (!desc.relations.empty()) {
      out += "/rel[";
      for (size_t i = 0; i < desc.relations.size(); ++i) {
        if (i) out += ",";
        out += "[";
        for (size_t j = 0; j < desc.relations[i].size(); ++j) {
          if (j) out += ",";
          out += base_->format(base_->canonicalize(desc.relations[i][j]));
        }
        out += "]";
      }
      out += "]";
    }
    return out;
  }

  void build_span() {
    std::set<std::vector<std::int32_t>> span;
    span.insert(std::vector<std::int32_t>(static_cast<size_t>(rank_),
                                          static_cast<std::int32_t>(base_->zero_index())));
    for (const auto& row : rows_) {
      // orbit of the row under scalars
      std::set<std::vector<std::int32_t>> orbit;
      for (int c = 0; c < base_->elem_count(); ++c) {
        std::vector<std::int32_t> v(static_cast<size_t>(rank_));
        for (size_t i = 0; i < v.size(); ++i)
          v[i] = static_cast<std::int32_t>(base_->mul_i(c, row[i]));
        orbit.insert(std::move(v));
      }
      std::set<std::vector<std::int32_t>> next;
      for (const auto& s : span)
        for (const auto& t : orbit) {
          std::vector<std::int32_t> v(static_cast<size_t>(rank_));
          for (size_t i = 0; i < v.size(); ++i)
            v[i] = static_cast<std::int32_t>(base_->add_i(s[i], t[i]));
          next.insert(std::move(v));
        }
      span = std::move(next);
    }
    span_.assign(span.begin(), span.end());
  }

  void build_elements() {
    // ascending sweep: the first unvisited vector of a coset is its lex-least
    // representative (index order equals canonical element order); the dense
    // coset map makes later reductions a single lookup
    coset_map_.assign(static_cast<size_t>(total_vectors_), -1);
    std::vector<ModuleElement> reps;
    std::vector<std::int32_t> v(static_cast<size_t>(rank_), 0);
    const int n = base_->elem_count();
    while (true) {
      if (coset_map_[encode(v)] < 0) {
        const std::int32_t rep_id = static_cast<std::int32_t>(reps.size());
        rep_indices_.push_back(v);
        reps.push_back(from_indices(v));
        for (const auto& s : span_) {
          std::vector<std::int32_t> w(static_cast<size_t>(rank_));
          for (size_t i = 0; i < w.size(); ++i)
            w[i] = static_cast<std::int32_t>(base_->add_i(v[i], s[i]));
          coset_map_[encode(w)] = rep_id;
        }
      }
      int i = rank_ - 1;
      while (i >= 0 && v[static_cast<size_t>(i)] + 1 >= n) v[static_cast<size_t>(i--)] = 0;
      if (i < 0) break;
      ++v[static_cast<size_t>(i)];
    }
    set_order(RingOrder::of(Int(reps.size())));
    set_elements(std::move(reps));
  }

  size_t encode(const std::vector<std::int32_t>& v) const {
    const size_t n = static_cast<size_t>(base_->elem_count());
    size_t code = 0;
    for (std::int32_t i : v) code = code * n + static_cast<size_t>(i);
    return code;
  }

  const std::vector<std::int32_t>& reduce(const std::vector<std::int32_t>& v) const {
    const std::int32_t rep_id = coset_map_[encode(v)];
    if (rep_id < 0) throw internal_error("coset map miss in " + name_);
    return rep_indices_[static_cast<size_t>(rep_id)];
  }

  ModuleElement from_indices(const std::vector<std::int32_t>& v) const {
    ModuleElement m;
    for (std::int32_t i : v) m.comps.push_back(base_->elem(i));
    return m;
  }

  std::vector<std::int32_t> indices(const ModuleElement& a) const {
    if (a.comps.size() != static_cast<size_t>(rank_))
      throw representation_error("module element arity mismatch in " + name_);
    std::vector<std::int32_t> r;
    for (const auto& e : a.comps) r.push_back(static_cast<std::int32_t>(base_->index_of(e)));
    return r;
  }

  int rank_ = 0;
  std::vector<std::vector<std::int32_t>> rows_;
  std::vector<std::vector<std::int32_t>> span_;
  std::vector<std::int32_t> coset_map_;  // encoded vector -> representative id
  std::vector<std::vector<std::int32_t>> rep_indices_;
  std::int64_t total_vectors_ = 0;
};

// --- formal sums over a discrete valuation ring -------------------------------
//
// Summands are Free (a copy of A), CyclicTorsion(k) (A/pi^k), or the fraction
// field K. Annihilators, torsion class and uniseriality all have closed forms.

class DvrFormalSumModule final : public Module {
 public:
  DvrFormalSumModule(DvrHandle base, DvrFormalSumDesc desc)
      : Module(std::static_pointer_cast<const Ring>(base), ModuleDescriptor{desc}, "",
               RingOrder::infinite()),
        dvr_(std::move(base)),
        summands_(desc.summands) {
    if (dvr_->field_mode())
      throw usage_error("formal sums are defined over the valuation ring, not its field");
    if (summands_.empty()) throw usage_error("formal sum needs at least one summand");
    bool all_torsion = true;
    Int finite_order = 1;
    for (const auto& s : summands_) {
      if (const auto* c = std::get_if<CyclicTorsionSummand>(&s)) {
        if (c->exponent < 1) throw usage_error("torsion exponent must be >= 1");
        finite_order *= dvr_->torsion_order(c->exponent);
      } else {
        all_torsion = false;
      }
    }
    if (all_torsion) set_order(RingOrder::of(finite_order));
    field_ = dvr_->fraction_field_ring();
    name_ = make_name();
  }

  const std::vector<Summand>& summands() const { return summands_; }
  const DvrHandle& dvr() const { return dvr_; }

  bool has_torsion() const { return any([](const Summand& s) { return std::holds_alternative<CyclicTorsionSummand>(s); }); }
  bool has_free() const { return any([](const Summand& s) { return std::holds_alternative<FreeSummand>(s); }); }
  bool has_fraction_field() const { return any([](const Summand& s) { return std::holds_alternative<FractionFieldSummand>(s); }); }

  ModuleElement zero() const override {
    ModuleElement m;
    for (const auto& s : summands_) {
      if (const auto* c = std::get_if<CyclicTorsionSummand>(&s))
        m.comps.push_back(dvr_->torsion_zero(c->exponent));
      else
        m.comps.push_back(dvr_->zero());
    }
    return m;
  }

  ModuleElement unit_vector(size_t i) const {
    ModuleElement m = zero();
    if (const auto* c = std::get_if<CyclicTorsionSummand>(&summands_[i]))
      m.comps[i] = dvr_->torsion_one(c->exponent);
    else if (std::holds_alternative<FreeSummand>(summands_[i]))
      m.comps[i] = dvr_->one();
    else
      m.comps[i] = field_->one();
    return m;
  }

  ModuleElement add(const ModuleElement& a, const ModuleElement& b) const override {
    const auto& x = comps(a);
    const auto& y = comps(b);
    ModuleElement m;
    for (size_t i = 0; i < summands_.size(); ++i) {
      if (const auto* c = std::get_if<CyclicTorsionSummand>(&summands_[i]))
        m.comps.push_back(dvr_->torsion_add(c->exponent, x[i], y[i]));
      else if (std::holds_alternative<FreeSummand>(summands_[i]))
        m.comps.push_back(dvr_->add(x[i], y[i]));
      else
        m.comps.push_back(field_->add(x[i], y[i]));
    }
    return m;
  }

  ModuleElement neg(const ModuleElement& a) const override {
    const auto& x = comps(a);
    ModuleElement m;
    for (size_t i = 0; i < summands_.size(); ++i) {
      if (const auto* c = std::get_if<CyclicTorsionSummand>(&summands_[i]))
        m.comps.push_back(dvr_->torsion_neg(c->exponent, x[i]));
      else if (std::holds_alternative<FreeSummand>(summands_[i]))
        m.comps.push_back(dvr_->neg(x[i]));
      else
        m.comps.push_back(field_->neg(x[i]));
    }
    return m;
  }

  ModuleElement scalar(const RingElement& c, const ModuleElement& a) const override {
    const RingElement cc = dvr_->canonicalize(c);
    const auto& x = comps(a);
    ModuleElement m;
    for (size_t i = 0; i < summands_.size(); ++i) {
      if (const auto* t = std::get_if<CyclicTorsionSummand>(&summands_[i]))
        m.comps.push_back(dvr_->torsion_scalar(t->exponent, cc, x[i]));
      else if (std::holds_alternative<FreeSummand>(summands_[i]))
        m.comps.push_back(dvr_->mul(cc, x[i]));
      else
        m.comps.push_back(field_->mul(cc, x[i]));
    }
    return m;
  }

  ModuleElement canonicalize(const ModuleElement& a) const override {
    const auto& x = comps(a);
    ModuleElement m;
    for (size_t i = 0; i < summands_.size(); ++i) {
      if (const auto* t = std::get_if<CyclicTorsionSummand>(&summands_[i]))
        m.comps.push_back(dvr_->torsion_canonicalize(t->exponent, x[i]));
      else if (std::holds_alternative<FreeSummand>(summands_[i]))
        m.comps.push_back(dvr_->canonicalize(x[i]));
      else
        m.comps.push_back(field_->canonicalize(x[i]));
    }
    return m;
  }

  std::string format(const ModuleElement& a) const override {
    const auto& x = comps(a);
    std::vector<std::string> parts;
    for (size_t i = 0; i < summands_.size(); ++i) {
      if (const auto* t = std::get_if<CyclicTorsionSummand>(&summands_[i]))
        parts.push_back(dvr_->torsion_format(t->exponent, x[i]));
      else if (std::holds_alternative<FreeSummand>(summands_[i]))
        parts.push_back(dvr_->format(x[i]));
      else
        parts.push_back(field_->format(x[i]));
    }
    if (parts.size() == 1) return parts[0];
    std::string out = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) out += ", ";
      out += parts[i];
    }
    return out + ")";
  }

  ModuleElement sample(Rng& rng, const SampleBounds& bounds) const override {
    ModuleElement m;
    for (const auto& s : summands_) {
      if (const auto* t = std::get_if<CyclicTorsionSummand>(&s))
        m.comps.push_back(dvr_->torsion_sample(t->exponent, rng));
      else if (std::holds_alternative<FreeSummand>(s))
        m.comps.push_back(dvr_->sample(rng, bounds));
      else
        m.comps.push_back(field_->sample(rng, bounds));
    }
    return m;
  }

  // (0 : m): zero unless every non-torsion component vanishes, in which case
  // it is generated by pi^max(k_i - v(m_i)).
  Ideal annihilator_of_element(const ModuleElement& a) const override {
    const ModuleElement m = canonicalize(a);
    int t = 0;
    for (size_t i = 0; i < summands_.size(); ++i) {
      if (const auto* c = std::get_if<CyclicTorsionSummand>(&summands_[i])) {
        const int v = dvr_->torsion_valuation(c->exponent, m.comps[i]);
        t = std::max(t, c->exponent - v);
      } else if (std::holds_alternative<FreeSummand>(summands_[i])) {
        if (!dvr_->is_zero(m.comps[i])) return zero_ideal(base_);
      } else {
        if (!field_->is_zero(m.comps[i])) return zero_ideal(base_);
      }
    }
    if (t == 0) return unit_ideal(base_);
    Ideal I;
    I.ring = base_;
    const RingElement g = dvr_->pi_power(t);
    I.generators = {g};
    I.principal_generator = g;
    I.note = "(" + dvr_->format(g) + ")";
    return I;
  }

  TorsionClass torsion_classification() const override {
    const bool tor = has_torsion();
    const bool nontor = has_free() || has_fraction_field();
    if (tor && nontor) return TorsionClass::Mixed;
    return tor ? TorsionClass::Torsion : TorsionClass::TorsionFree;
  }

  // A single summand is a chain of submodules; two or more never are, with
  // the pair of unit vectors as witness.
  UniserialVerdict is_uniserial() const override {
    if (summands_.size() == 1) return {true, std::nullopt};
    return {false, std::make_pair(unit_vector(0), unit_vector(1))};
  }

  std::optional<RingElement> solve_scalar(const ModuleElement& xe,
                                          const ModuleElement& ye) const override {
    const ModuleElement x = canonicalize(xe);
    const ModuleElement y = canonicalize(ye);
    std::optional<RingElement> fixed;
    std::vector<std::pair<int, RingElement>> congruences;  // (exponent m, residue mod pi^m)
    for (size_t i = 0; i < summands_.size(); ++i) {
      if (const auto* c = std::get_if<CyclicTorsionSummand>(&summands_[i])) {
        const int k = c->exponent;
        const int s = dvr_->torsion_valuation(k, x.comps[i]);
        if (s == k) {
          if (dvr_->torsion_valuation(k, y.comps[i]) != k) return std::nullopt;
          continue;
        }
        auto z = dvr_->torsion_solve_scalar(k, dvr_->torsion_lift(k, x.comps[i]), y.comps[i]);
        if (!z) return std::nullopt;
        const int m = k - s;
        congruences.emplace_back(m, dvr_->torsion_canonicalize(m, *z));
      } else {
        const Ring& comp =
            std::holds_alternative<FreeSummand>(summands_[i]) ? static_cast<const Ring&>(*dvr_)
                                                              : static_cast<const Ring&>(*field_);
        if (comp.is_zero(x.comps[i])) {
          if (!comp.is_zero(y.comps[i])) return std::nullopt;
          continue;
        }
        RingElement cand = field_->canonicalize(field_->exact_div(y.comps[i], x.comps[i]));
        if (!field_->is_zero(cand) && field_->valuation(cand) < 0) return std::nullopt;
        const RingElement in_base = dvr_->canonicalize(cand);
        if (fixed && !(*fixed == in_base)) return std::nullopt;
        fixed = in_base;
      }
    }
    if (fixed) {
      for (const auto& [m, r] : congruences)
        if (!(project(*fixed, m) == r)) return std::nullopt;
      return fixed;
    }
    if (congruences.empty()) return dvr_->zero();
    size_t best = 0;
    for (size_t i = 1; i < congruences.size(); ++i)
      if (congruences[i].first > congruences[best].first) best = i;
    const RingElement cand = dvr_->torsion_lift(congruences[best].first, congruences[best].second);
    for (const auto& [m, r] : congruences)
      if (!(project(cand, m) == r)) return std::nullopt;
    return dvr_->canonicalize(cand);
  }

  std::optional<ModuleElement> solve_module(const RingElement& ae,
                                            const ModuleElement& rhse) const override {
    const RingElement a = dvr_->canonicalize(ae);
    const ModuleElement rhs = canonicalize(rhse);
    ModuleElement z;
    for (size_t i = 0; i < summands_.size(); ++i) {
      if (const auto* c = std::get_if<CyclicTorsionSummand>(&summands_[i])) {
        auto zi = dvr_->torsion_solve_scalar(c->exponent, a, rhs.comps[i]);
        if (!zi) return std::nullopt;
        z.comps.push_back(*zi);
      } else if (std::holds_alternative<FreeSummand>(summands_[i])) {
        auto v = dvr_->divides(a, rhs.comps[i]);
        if (!v.divides) return std::nullopt;
        z.comps.push_back(*v.witness);
      } else {
        if (dvr_->is_zero(a)) {
          if (!field_->is_zero(rhs.comps[i])) return std::nullopt;
          z.comps.push_back(field_->zero());
        } else {
          z.comps.push_back(field_->canonicalize(field_->exact_div(rhs.comps[i], a)));
        }
      }
    }
    return z;
  }

 private:
  template <class Pred>
  bool any(Pred p) const {
    for (const auto& s : summands_)
      if (p(s)) return true;
    return false;
  }

  RingElement project(const RingElement& a, int m) const {
    return dvr_->torsion_scalar(m, a, dvr_->torsion_one(m));
  }

  std::string make_name() const {
    std::string out;
    for (size_t i = 0; i < summands_.size(); ++i) {
      if (i) out += " + ";
      if (const auto* c = std::get_if<CyclicTorsionSummand>(&summands_[i]))
        out += dvr_->name() + "/(" + dvr_->torsion_modulus_text(c->exponent) + ")";
      else if (std::holds_alternative<FreeSummand>(summands_[i]))
        out += "free(1)";
      else
        out += "Frac";
    }
    return out;
  }

  const std::vector<RingElement>& comps(const ModuleElement& a) const {
    if (a.comps.size() != summands_.size())
      throw representation_error("module element arity mismatch in " + name_);
    return a.comps;
  }

  DvrHandle dvr_;
  std::vector<Summand> summands_;
  DvrHandle field_;
};

}  // namespace ringlab

#endif  // RINGLAB_MODULE_HPP
