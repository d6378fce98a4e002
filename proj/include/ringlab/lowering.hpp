#ifndef RINGLAB_LOWERING_HPP
#define RINGLAB_LOWERING_HPP

#include <map>
#include <string>
#include <vector>

#include "ringlab/parser.hpp"
#include "ringlab/rings/monomial_quotient.hpp"

namespace ringlab {

// Semantic validation and construction from the parse tree. All violations
// throw parse_error anchored at the offending node.

inline RingHandle build_ring(const AstRing& ast, Limits limits = {});

namespace lowering_detail {

inline std::int64_t to_i64(const Int& v, const SourceSpan& span, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() / 4)
    throw parse_error(std::string(what) + " is too large", span);
  return static_cast<std::int64_t>(v);
}

// Sparse multivariate polynomial over Z used to lower quotient relations.
using Monomial = std::vector<int>;
using SparsePoly = std::map<Monomial, Int>;

inline SparsePoly sp_const(size_t nvars, Int c) {
  SparsePoly p;
  if (c != 0) p[Monomial(nvars, 0)] = std::move(c);
  return p;
}

inline SparsePoly sp_add(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly r = a;
  for (const auto& [m, c] : b) {
    Int& t = r[m];
    t += c;
    if (t == 0) r.erase(m);
  }
  return r;
}

inline SparsePoly sp_neg(const SparsePoly& a) {
  SparsePoly r;
  for (const auto& [m, c] : a) r[m] = -c;
  return r;
}

inline SparsePoly sp_mul(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Monomial m(ma.size());
      for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      Int& t = r[m];
      t += ca * cb;
      if (t == 0) r.erase(m);
    }
  return r;
}

inline SparsePoly eval_sparse_poly(const AstElem& e, const std::vector<std::string>& vars) {
  const size_t n = vars.size();
  if (const auto* x = std::get_if<AstInt>(&e.v)) return sp_const(n, x->value);
  if (const auto* x = std::get_if<AstVar>(&e.v)) {
    for (size_t i = 0; i < n; ++i)
      if (vars[i] == x->name) {
        SparsePoly p;
        Monomial m(n, 0);
        m[i] = 1;
        p[m] = 1;
        return p;
      }
    throw parse_error("unknown variable '" + x->name + "'", e.span);
  }
  if (const auto* x = std::get_if<AstNeg>(&e.v)) return sp_neg(eval_sparse_poly(*x->arg, vars));
  if (const auto* x = std::get_if<AstBin>(&e.v)) {
    SparsePoly l = eval_sparse_poly(*x->lhs, vars);
    SparsePoly r = eval_sparse_poly(*x->rhs, vars);
    switch (x->op) {
      case '+': return sp_add(l, r);
      case '-': return sp_add(l, sp_neg(r));
      case '*': return sp_mul(l, r);
      default: throw parse_error("division is not allowed in quotient relations", e.span);
    }
  }
  if (const auto* x = std::get_if<AstPow>(&e.v)) {
    SparsePoly base = eval_sparse_poly(*x->base, vars);
    SparsePoly acc = sp_const(vars.size(), 1);
    for (int i = 0; i < x->exp; ++i) acc = sp_mul(acc, base);
    return acc;
  }
  throw parse_error("tuples are not polynomials", e.span);
}

}  // namespace lowering_detail

// Element literal evaluated inside a ring. Fractions use exact division in
// the localized families and inverse multiplication elsewhere.
inline RingElement eval_element(const RingHandle& ring, const AstElem& e);

// Module element literal: a tuple per component, or a bare component for
// single-component modules.
inline ModuleElement eval_module_element(const ModuleHandle& module, const AstElem& e);

namespace lowering_detail {

inline RingElement eval_var_in_ring(const RingHandle& ring, const AstVar& v,
                                    const SourceSpan& span) {
  if (const auto* pq = dynamic_cast<const PolyQuotientRing*>(ring.get())) {
    if (v.name == pq->var()) return pq->variable();
  }
  if (const auto* mq = dynamic_cast<const MonomialQuotientRing*>(ring.get())) {
    for (size_t i = 0; i < mq->vars().size(); ++i)
      if (mq->vars()[i] == v.name) return mq->variable(i);
  }
  if (const auto* pl = dynamic_cast<const PolyLocalizedRing*>(ring.get())) {
    if (v.name == "x") return pl->uniformizer();
  }
  throw parse_error("unknown symbol '" + v.name + "' in " + ring->name(), span);
}

}  // namespace lowering_detail

inline RingElement eval_element(const RingHandle& ring, const AstElem& e) {
  using namespace lowering_detail;
  if (const auto* x = std::get_if<AstInt>(&e.v)) return ring->from_integer(x->value);
  if (const auto* x = std::get_if<AstVar>(&e.v)) return eval_var_in_ring(ring, *x, e.span);
  if (const auto* x = std::get_if<AstNeg>(&e.v)) return ring->neg(eval_element(ring, *x->arg));
  if (const auto* x = std::get_if<AstBin>(&e.v)) {
    RingElement l = eval_element(ring, *x->lhs);
    RingElement r = eval_element(ring, *x->rhs);
    switch (x->op) {
      case '+': return ring->add(l, r);
      case '-': return ring->sub(l, r);
      case '*': return ring->mul(l, r);
      case '/': {
        if (const auto* dvr = dynamic_cast<const DvrRing*>(ring.get())) {
          if (ring->is_zero(r)) throw parse_error("division by zero", e.span);
          try {
            return ring->canonicalize(dvr->exact_div(l, r));
          } catch (const representation_error&) {
            throw parse_error("quotient lies outside " + ring->name(), e.span);
          }
        }
        auto u = ring->is_unit(r);
        if (!u.unit)
          throw parse_error("denominator " + ring->format(r) + " is not invertible in " +
                                ring->name(),
                            e.span);
        return ring->mul(l, *u.inverse);
      }
    }
  }
  if (const auto* x = std::get_if<AstPow>(&e.v)) {
    RingElement base = eval_element(ring, *x->base);
    RingElement acc = ring->one();
    for (int i = 0; i < x->exp; ++i) acc = ring->mul(acc, base);
    return acc;
  }
  const auto& tup = std::get<AstTuple>(e.v);
  if (const auto* pr = dynamic_cast<const ProductRing*>(ring.get())) {
    if (tup.items.size() != pr->factors().size())
      throw parse_error("tuple arity does not match the product", e.span);
    Tuple t;
    for (size_t i = 0; i < tup.items.size(); ++i)
      t.items.push_back(eval_element(pr->factors()[i], tup.items[i]));
    return RingElement(RingElement::Payload{std::move(t)});
  }
  if (const auto* te = dynamic_cast<const TrivialExtensionRing*>(ring.get())) {
    if (tup.items.size() != 2)
      throw parse_error("trivial-extension elements are pairs (a, e)", e.span);
    RingElement a = eval_element(te->base_ring(), tup.items[0]);
    ModuleElement m = eval_module_element(te->module(), tup.items[1]);
    return te->pair(std::move(a), std::move(m));
  }
  throw parse_error("tuple literal does not fit " + ring->name(), e.span);
}

inline ModuleElement eval_module_element(const ModuleHandle& module, const AstElem& e) {
  std::vector<const AstElem*> comps;
  size_t arity = 1;
  if (const auto* pm = dynamic_cast<const PresentedModule*>(module.get()))
    arity = static_cast<size_t>(pm->rank());
  else if (const auto* fs = dynamic_cast<const DvrFormalSumModule*>(module.get()))
    arity = fs->summands().size();
  if (const auto* tup = std::get_if<AstTuple>(&e.v); tup && arity > 1) {
    if (tup->items.size() != arity)
      throw parse_error("module element arity mismatch", e.span);
    for (const auto& item : tup->items) comps.push_back(&item);
  } else {
    if (arity != 1) throw parse_error("module element arity mismatch", e.span);
    comps.push_back(&e);
  }
  ModuleElement out;
  if (dynamic_cast<const PresentedModule*>(module.get())) {
    for (const auto* c : comps) out.comps.push_back(eval_element(module->base(), *c));
    return module->canonicalize(out);
  }
  const auto* fs = dynamic_cast<const DvrFormalSumModule*>(module.get());
  const auto dvr = fs->dvr();
  const auto K = dvr->fraction_field_ring();
  for (size_t i = 0; i < arity; ++i) {
    const auto& s = fs->summands()[i];
    if (const auto* c = std::get_if<CyclicTorsionSummand>(&s)) {
      RingElement lift = eval_element(std::static_pointer_cast<const Ring>(dvr), *comps[i]);
      out.comps.push_back(dvr->torsion_scalar(c->exponent, lift, dvr->torsion_one(c->exponent)));
    } else if (std::holds_alternative<FreeSummand>(s)) {
      out.comps.push_back(eval_element(std::static_pointer_cast<const Ring>(dvr), *comps[i]));
    } else {
      out.comps.push_back(eval_element(std::static_pointer_cast<const Ring>(K), *comps[i]));
    }
  }
  return module->canonicalize(out);
}

// --- module lowering ------------------------------------------------------------

inline ModuleHandle build_module(const AstModule& ast, const RingHandle& base, Limits limits);

namespace lowering_detail {

struct ModuleParts {
  // finite base: accumulated block-diagonal presentation
  int rank = 0;
  std::vector<std::vector<RingElement>> rows;
  // DVR base: accumulated summands
  std::vector<Summand> summands;
};

inline void lower_module_part(const AstModule& ast, const RingHandle& base, Limits limits,
                              ModuleParts& out, const DvrRing* dvr) {
  if (const auto* sum = std::get_if<AstSumModule>(&ast.v)) {
    for (const auto& part : sum->parts) lower_module_part(part, base, limits, out, dvr);
    return;
  }
  if (std::holds_alternative<AstFracModule>(ast.v)) {
    if (!dvr) throw parse_error("Frac needs a discrete valuation base, got " + base->name(), ast.span);
    out.summands.push_back(FractionFieldSummand{});
    return;
  }
  if (const auto* fm = std::get_if<AstFreeModule>(&ast.v)) {
    if (fm->rank < 1) throw parse_error("free rank must be >= 1", ast.span);
    if (dvr) {
      if (fm->rel)
        throw parse_error("relation matrices need a finite base ring", ast.span);
      for (int i = 0; i < fm->rank; ++i) out.summands.push_back(FreeSummand{});
      return;
    }
    const int offset = out.rank;
    out.rank += fm->rank;
    for (auto& row : out.rows) row.resize(static_cast<size_t>(out.rank), base->zero());
    if (fm->rel) {
      for (const auto& arow : *fm->rel) {
        if (static_cast<int>(arow.size()) != fm->rank)
          throw parse_error("relation row arity does not match the rank", ast.span);
        std::vector<RingElement> row(static_cast<size_t>(out.rank), base->zero());
        for (size_t j = 0; j < arow.size(); ++j)
          row[static_cast<size_t>(offset) + j] = eval_element(base, arow[j]);
        out.rows.push_back(std::move(row));
      }
    }
    return;
  }
  const auto& qm = std::get<AstQuotientModule>(ast.v);
  RingHandle qbase = build_ring(*qm.base, limits);
  if (qbase->name() != base->name())
    throw parse_error("module base " + qbase->name() + " does not match " + base->name(),
                      ast.span);
  if (dvr) {
    // A/(g_1..g_k) over a DVR collapses to A/(pi^min v)
    int minv = DvrRing::kInfiniteValuation;
    for (const auto& g : qm.gens) {
      RingElement v = eval_element(base, g);
      if (!base->is_zero(v)) minv = std::min(minv, dvr->valuation(v));
    }
    if (minv == DvrRing::kInfiniteValuation) {
      out.summands.push_back(FreeSummand{});  // A/(0) = A
    } else if (minv == 0) {
      throw parse_error("quotient by a unit is the zero module", ast.span);
    } else {
      out.summands.push_back(CyclicTorsionSummand{minv});
    }
    return;
  }
  const int offset = out.rank;
  out.rank += 1;
  for (auto& row : out.rows) row.resize(static_cast<size_t>(out.rank), base->zero());
  for (const auto& g : qm.gens) {
    std::vector<RingElement> row(static_cast<size_t>(out.rank), base->zero());
    row[static_cast<size_t>(offset)] = eval_element(base, g);
    out.rows.push_back(std::move(row));
  }
}

}  // namespace lowering_detail

inline ModuleHandle build_module(const AstModule& ast, const RingHandle& base, Limits limits) {
  using namespace lowering_detail;
  const auto* dvr = dynamic_cast<const DvrRing*>(base.get());
  if (dvr && dvr->field_mode())
    throw parse_error("modules are taken over the valuation ring, not its fraction field",
                      ast.span);
  ModuleParts parts;
  lower_module_part(ast, base, limits, parts, dvr);
  if (dvr) {
    DvrFormalSumDesc d;
    d.summands = std::move(parts.summands);
    return construct_module(base, ModuleDescriptor{std::move(d)});
  }
  PresentedModuleDesc d;
  d.rank = parts.rank;
  d.relations = std::move(parts.rows);
  // pad short rows from earlier blocks
  for (auto& row : d.relations) row.resize(static_cast<size_t>(d.rank), base->zero());
  try {
    return construct_module(base, ModuleDescriptor{std::move(d)});
  } catch (const capability_error&) {
    throw;
  } catch (const usage_error& err) {
    throw parse_error(err.what(), ast.span);
  }
}

// --- ring lowering ----------------------------------------------------------------

inline RingHandle build_ring(const AstRing& ast, Limits limits) {
  using namespace lowering_detail;
  if (const auto* z = std::get_if<AstZMod>(&ast.v)) {
    if (z->modulus < 2) throw parse_error("modulus must be >= 2", ast.span);
    return make_zmod(to_i64(z->modulus, ast.span, "modulus"), limits);
  }
  if (const auto* f = std::get_if<AstFieldLit>(&ast.v)) {
    const std::int64_t q = to_i64(f->q, ast.span, "field order");
    if (prime_power_base(q) == 0) throw parse_error("field order must be a prime power >= 2", ast.span);
    return make_gf(q, limits);
  }
  if (const auto* z = std::get_if<AstZloc>(&ast.v)) {
    const std::int64_t p = to_i64(z->p, ast.span, "prime");
    if (!is_prime_i64(p)) throw parse_error(std::to_string(p) + " is not prime", ast.span);
    return make_zloc(p, limits);
  }
  if (const auto* f = std::get_if<AstFloc>(&ast.v)) {
    const std::int64_t q = to_i64(f->q, ast.span, "field order");
    if (prime_power_base(q) == 0) throw parse_error("field order must be a prime power >= 2", ast.span);
    return make_floc(q, limits);
  }
  if (const auto* p = std::get_if<AstProduct>(&ast.v)) {
    std::vector<RingHandle> fs;
    for (const auto& f : p->factors) fs.push_back(build_ring(f, limits));
    return make_product(std::move(fs), limits);
  }
  if (const auto* t = std::get_if<AstTriv>(&ast.v)) {
    RingHandle base = build_ring(*t->base, limits);
    ModuleHandle mod = build_module(*t->module, base, limits);
    try {
      return make_trivial_extension(base, mod, limits);
    } catch (const usage_error& err) {
      throw parse_error(err.what(), ast.span);
    }
  }
  const auto& pq = std::get<AstPolyQuotient>(ast.v);
  const std::int64_t p = to_i64(pq.p, ast.span, "coefficient field order");
  if (!is_prime_i64(p))
    throw parse_error("polynomial quotients are supported over prime fields; F" +
                          std::to_string(p) + " is not prime",
                      ast.span);
  if (pq.vars.size() == 1) {
    if (pq.gens.size() != 1)
      throw parse_error("single-variable quotients take exactly one polynomial", ast.span);
    SparsePoly poly = eval_sparse_poly(pq.gens[0], pq.vars);
    std::vector<std::int64_t> coeffs;
    for (const auto& [m, c] : poly) {
      const size_t deg = static_cast<size_t>(m[0]);
      if (coeffs.size() <= deg) coeffs.resize(deg + 1, 0);
      coeffs[deg] = mod_i64(static_cast<std::int64_t>(((c % p) + p) % p), p);
    }
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.size() < 2)
      throw parse_error("quotient polynomial must have degree >= 1", pq.gens[0].span);
    if (coeffs.back() != 1)
      throw parse_error("quotient polynomial must be monic", pq.gens[0].span);
    return construct_ring(RingDescriptor{PolyQuotientDesc{p, std::move(coeffs), pq.vars[0]}},
                          limits);
  }
  // multivariate: monomial relations only
  MonomialQuotientDesc d;
  d.p = p;
  d.vars = pq.vars;
  for (const auto& g : pq.gens) {
    SparsePoly poly = eval_sparse_poly(g, pq.vars);
    SparsePoly reduced;
    for (const auto& [m, c] : poly)
      if (((c % p) + p) % p != 0) reduced[m] = ((c % p) + p) % p;
    if (reduced.size() != 1)
      throw parse_error("multivariate quotients support monomial relations only", g.span);
    d.monomials.push_back(reduced.begin()->first);
  }
  try {
    return construct_ring(RingDescriptor{std::move(d)}, limits);
  } catch (const usage_error& err) {
    throw parse_error(err.what(), ast.span);
  }
}

// Text-to-ring and text-to-element conveniences used by the CLI.

inline RingHandle ring_from_text(std::string_view text, Limits limits = {}) {
  return build_ring(parse_ring_expr(text), limits);
}

inline RingElement element_from_text(const RingHandle& ring, std::string_view text) {
  return ring->canonicalize(eval_element(ring, parse_elem_expr(text)));
}

}  // namespace ringlab

#endif  // RINGLAB_LOWERING_HPP
