#ifndef RINGLAB_REPORT_HPP
#define RINGLAB_REPORT_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ringlab/catalog.hpp"
#include "ringlab/checkers.hpp"
#include "ringlab/homology.hpp"
#include "ringlab/local_decomposition.hpp"

namespace ringlab {

using Json = nlohmann::ordered_json;

enum class Flag { True, False, NotComputed };

inline const char* to_string(Flag f) {
  switch (f) {
    case Flag::True: return "yes";
    case Flag::False: return "no";
    case Flag::NotComputed: return "not computed";
  }
  return "?";
}

struct WitnessRecord {
  std::string kind;
  std::string description;
  bool reverified = false;
};

struct FactorSummary {
  std::string name;
  std::string order;
  std::string idempotent;
};

struct PropertyReport {
  std::string expression;
  std::string order;
  Flag finite = Flag::NotComputed;
  Flag local = Flag::NotComputed;
  Flag valuation = Flag::NotComputed;
  Flag arithmetical = Flag::NotComputed;
  bool valuation_methods_agree = true;
  bool arithmetical_methods_agree = true;
  std::vector<FactorSummary> factors;
  std::optional<std::int64_t> ideal_count;
  std::string zero_divisor_census = "not computed";
  std::vector<WitnessRecord> witnesses;
};

namespace report_detail {

inline std::string ideal_text(const Ideal& I) {
  const Ring& R = *I.ring;
  if (!I.note.empty() && !I.has_elements()) return I.note;
  std::string out = "(";
  for (size_t i = 0; i < I.generators.size(); ++i) {
    if (i) out += ",";
    out += R.format(I.generators[i]);
  }
  out += ")";
  if (I.generators.empty()) out = "(0)";
  return out;
}

inline bool reverify_incomparable(const Ideal& I, const Ideal& J) {
  if (I.has_elements() && J.has_elements())
    return !I.subset_of(J) && !J.subset_of(I);
  // symbolic principal witnesses: mutual non-divisibility
  if (I.generators.size() == 1 && J.generators.size() == 1) {
    const Ring& R = *I.ring;
    return !R.divides(I.generators[0], J.generators[0]).divides &&
           !R.divides(J.generators[0], I.generators[0]).divides;
  }
  return false;
}

inline bool reverify_distributivity_failure(const Ideal& A, const Ideal& B, const Ideal& C) {
  Ideal lhs = lattice_intersect(lattice_sum(A, B, false), C, false);
  Ideal rhs = lattice_sum(lattice_intersect(A, C, false), lattice_intersect(B, C, false), false);
  return !lhs.same_set(rhs);
}

}  // namespace report_detail

inline PropertyReport property_report(const RingHandle& ring, std::int64_t max_order = 64) {
  using namespace report_detail;
  PropertyReport rep;
  rep.expression = ring->name();
  rep.order = to_string(ring->order());
  rep.finite = ring->is_finite() ? Flag::True : Flag::False;

  // locality
  try {
    LocalityVerdict lv = ring->is_local();
    rep.local = lv.local ? Flag::True : Flag::False;
    if (!lv.local && lv.witness) {
      const bool ok = !ring->is_unit(lv.witness->first).unit &&
                      !ring->is_unit(lv.witness->second).unit &&
                      ring->is_unit(ring->add(lv.witness->first, lv.witness->second)).unit;
      rep.witnesses.push_back({"not-local",
                               ring->format(lv.witness->first) + " + " +
                                   ring->format(lv.witness->second) + " is a unit",
                               ok});
    }
  } catch (const capability_error&) {
  }

  // valuation
  try {
    ValuationRingVerdict vv = is_valuation_ring(ring, std::max<std::int64_t>(max_order, 4096));
    rep.valuation = vv.valuation ? Flag::True : Flag::False;
    rep.valuation_methods_agree = vv.methods_agree;
    if (!vv.valuation && vv.witness) {
      rep.witnesses.push_back({"not-valuation",
                               "incomparable ideals " + ideal_text(vv.witness->first) + " and " +
                                   ideal_text(vv.witness->second),
                               reverify_incomparable(vv.witness->first, vv.witness->second)});
    }
  } catch (const capability_error&) {
  }

  // arithmetical
  try {
    ArithmeticalVerdict av = is_arithmetical(ring, max_order);
    rep.arithmetical = av.arithmetical ? Flag::True : Flag::False;
    rep.arithmetical_methods_agree = av.methods_agree;
    if (!av.arithmetical && av.witness) {
      const auto& w = *av.witness;
      rep.witnesses.push_back(
          {"not-arithmetical",
           "(" + ideal_text(w[0]) + "+" + ideal_text(w[1]) + ") cap " + ideal_text(w[2]) +
               " != (" + ideal_text(w[0]) + " cap " + ideal_text(w[2]) + ")+(" + ideal_text(w[1]) +
               " cap " + ideal_text(w[2]) + ")",
           reverify_distributivity_failure(w[0], w[1], w[2])});
    }
  } catch (const capability_error&) {
  }

  // local factors
  if (ring->has_elements()) {
    LocalDecomposition dec = local_decomposition(ring);
    for (const auto& f : dec.factors)
      rep.factors.push_back(
          {f.display_name, to_string(f.factor->order()), ring->format(f.idempotent)});
  }

  // ideal count
  try {
    rep.ideal_count = static_cast<std::int64_t>(all_ideals(ring, max_order).size());
  } catch (const capability_error&) {
  }

  // zero-divisor census
  if (ring->has_elements()) {
    int zd = 0;
    for (const RingElement& a : ring->elements())
      if (ring->is_zero_divisor(a).zero_divisor) ++zd;
    rep.zero_divisor_census = std::to_string(zd) + " of " + to_string(ring->order());
  } else if (dynamic_cast<const DvrRing*>(ring.get())) {
    rep.zero_divisor_census = "none (integral domain)";
  } else if (const auto* T = dynamic_cast<const TrivialExtensionRing*>(ring.get())) {
    if (const auto* fs = dynamic_cast<const DvrFormalSumModule*>(T->module().get())) {
      rep.zero_divisor_census = fs->has_torsion()
                                    ? "(a,e) with v(a) >= 1 or a = 0"
                                    : "exactly the elements (0, e)";
    }
  }

  for (const auto& w : rep.witnesses)
    if (!w.reverified) throw internal_error("report witness failed re-verification");
  return rep;
}

inline Json to_json(const PropertyReport& r) {
  Json j;
  j["schema"] = "ringlab-report/1";
  j["kind"] = "properties";
  j["expression"] = r.expression;
  j["order"] = r.order;
  j["finite"] = to_string(r.finite);
  j["local"] = to_string(r.local);
  j["valuation"] = to_string(r.valuation);
  j["valuation_methods_agree"] = r.valuation_methods_agree;
  j["arithmetical"] = to_string(r.arithmetical);
  j["arithmetical_methods_agree"] = r.arithmetical_methods_agree;
  j["local_factors"] = Json::array();
  for (const auto& f : r.factors)
    j["local_factors"].push_back({{"name", f.name}, {"order", f.order}, {"idempotent", f.idempotent}});
  if (r.ideal_count)
    j["ideal_count"] = *r.ideal_count;
  else
    j["ideal_count"] = nullptr;
  j["zero_divisors"] = r.zero_divisor_census;
  j["witnesses"] = Json::array();
  for (const auto& w : r.witnesses)
    j["witnesses"].push_back(
        {{"kind", w.kind}, {"description", w.description}, {"reverified", w.reverified}});
  return j;
}

inline std::string to_table(const PropertyReport& r) {
  std::ostringstream os;
  os << "ring            " << r.expression << "\n";
  os << "order           " << r.order << "\n";
  os << "finite          " << to_string(r.finite) << "\n";
  os << "local           " << to_string(r.local) << "\n";
  os << "valuation       " << to_string(r.valuation);
  if (r.valuation != Flag::NotComputed)
    os << (r.valuation_methods_agree ? "  (methods agree)" : "  (METHODS DISAGREE)");
  os << "\n";
  os << "arithmetical    " << to_string(r.arithmetical);
  if (r.arithmetical != Flag::NotComputed)
    os << (r.arithmetical_methods_agree ? "  (methods agree)" : "  (METHODS DISAGREE)");
  os << "\n";
  if (!r.factors.empty()) {
    os << "local factors   ";
    for (size_t i = 0; i < r.factors.size(); ++i) {
      if (i) os << ", ";
      os << r.factors[i].name << " (order " << r.factors[i].order << ", e = "
         << r.factors[i].idempotent << ")";
    }
    os << "\n";
  }
  if (r.ideal_count) os << "ideal count     " << *r.ideal_count << "\n";
  os << "zero divisors   " << r.zero_divisor_census << "\n";
  for (const auto& w : r.witnesses)
    os << "witness         [" << w.kind << "] " << w.description
       << (w.reverified ? "  (re-verified)" : "  (UNVERIFIED)") << "\n";
  return os.str();
}

// --- theorem reports ---------------------------------------------------------

struct TheoremReport {
  std::string id;
  std::string title;
  std::string catalog_desc;
  std::string bounds_desc;
  long checked = 0;
  std::vector<std::string> counterexamples;
  std::uint64_t seed = 0;
  double wall_seconds = 0.0;

  bool pass() const { return checked > 0 && counterexamples.empty(); }
};

// Wall-clock excluded from the machine-readable form so identical runs stay
// byte-identical.
inline Json to_json(const TheoremReport& r) {
  Json j;
  j["schema"] = "ringlab-report/1";
  j["kind"] = "verification";
  j["id"] = r.id;
  j["title"] = r.title;
  j["catalog"] = r.catalog_desc;
  j["bounds"] = r.bounds_desc;
  j["seed"] = r.seed;
  j["checked"] = r.checked;
  j["counterexamples"] = r.counterexamples;
  j["pass"] = r.pass();
  return j;
}

inline std::string to_table(const TheoremReport& r) {
  std::ostringstream os;
  os << "verification    " << r.id << "  " << r.title << "\n";
  os << "catalog         " << r.catalog_desc << "\n";
  os << "bounds          " << r.bounds_desc << "\n";
  os << "seed            " << r.seed << "\n";
  os << "checked         " << r.checked << "\n";
  os << "counterexamples " << r.counterexamples.size() << "\n";
  for (const auto& c : r.counterexamples) os << "  ! " << c << "\n";
  os << "result          " << (r.pass() ? "PASS" : "FAIL") << "  (" << r.wall_seconds << " s)\n";
  return os.str();
}

// Resolution dump: matrices as nested arrays of canonical element strings.
inline Json to_json(const FreeResolution& res) {
  const Ring& R = *res.ring;
  Json j;
  j["schema"] = "ringlab-report/1";
  j["kind"] = "resolution";
  j["ring"] = R.name();
  j["betti"] = res.betti;
  j["status"] = res.status == ResolutionStatus::ReachedZero
                    ? "reached-zero"
                    : (res.status == ResolutionStatus::Recurred ? "recurred" : "truncated");
  if (res.status == ResolutionStatus::Recurred) {
    j["recurrence"] = {{"first", res.recur_first}, {"period", res.recur_period}};
  }
  j["minimality_guaranteed"] = res.local_base;
  j["maps"] = Json::array();
  for (const auto& D : res.maps) {
    Json m = Json::array();
    for (int r = 0; r < D.rows; ++r) {
      Json row = Json::array();
      for (int c = 0; c < D.cols; ++c)
        row.push_back(R.format(D.entries[static_cast<size_t>(r)][static_cast<size_t>(c)]));
      m.push_back(row);
    }
    j["maps"].push_back(m);
  }
  j["exactness"] = Json::array();
  for (const auto& c : res.certs)
    j["exactness"].push_back({{"composite_zero", c.composite_zero},
                              {"kernel_size", c.kernel_size.str()},
                              {"image_size", c.image_size.str()},
                              {"exact", c.exact()}});
  return j;
}

}  // namespace ringlab

#endif  // RINGLAB_REPORT_HPP
