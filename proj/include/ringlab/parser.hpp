#ifndef RINGLAB_PARSER_HPP
#define RINGLAB_PARSER_HPP

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ringlab/construct.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

// --- expression AST -----------------------------------------------------------
//
// Grammar (whitespace insignificant):
//   ring   := atom { "x" atom }
//   atom   := "Z" "/" int | "Zloc" "(" int ")" | "Floc" "(" int ")"
//           | "triv" "(" ring "," module ")"
//           | F<int> [ "[" var {"," var} "]" "/(" poly {"," poly} ")" ]
//   module := "free" "(" int ")" [ "/rel" matrix ] | "Frac"
//           | ring "/(" elem {"," elem} ")" | module "+" module
//   matrix := "[" "[" elems "]" {"," "[" elems "]"} "]"
//   elem   := sum of products of powers over ints, vars, fractions, tuples

struct AstRing;
struct AstModule;
struct AstElem;

struct AstInt {
  Int value;
};
struct AstVar {
  std::string name;
};
struct AstNeg {
  Box<AstElem> arg;
};
struct AstBin {
  char op = '+';  // + - * /
  Box<AstElem> lhs, rhs;
};
struct AstPow {
  Box<AstElem> base;
  int exp = 0;
};
struct AstTuple {
  std::vector<AstElem> items;
};

struct AstElem {
  std::variant<AstInt, AstVar, AstNeg, AstBin, AstPow, AstTuple> v;
  SourceSpan span;
};

struct AstZMod {
  Int modulus;
};
struct AstFieldLit {
  Int q;
};
struct AstPolyQuotient {
  Int p;
  std::vector<std::string> vars;
  std::vector<AstElem> gens;
};
struct AstZloc {
  Int p;
};
struct AstFloc {
  Int q;
};
struct AstProduct {
  std::vector<AstRing> factors;
};
struct AstTriv {
  Box<AstRing> base;
  Box<AstModule> module;
};

struct AstRing {
  std::variant<AstZMod, AstFieldLit, AstPolyQuotient, AstZloc, AstFloc, AstProduct, AstTriv> v;
  SourceSpan span;
};

struct AstQuotientModule {
  Box<AstRing> base;
  std::vector<AstElem> gens;
};
struct AstFreeModule {
  int rank = 1;
  std::optional<std::vector<std::vector<AstElem>>> rel;
};
struct AstFracModule {};
struct AstSumModule {
  std::vector<AstModule> parts;
};

struct AstModule {
  std::variant<AstQuotientModule, AstFreeModule, AstFracModule, AstSumModule> v;
  SourceSpan span;
};

// --- structural equality (spans ignored) ---------------------------------------

inline bool ast_equal(const AstElem& a, const AstElem& b);
inline bool ast_equal(const AstRing& a, const AstRing& b);
inline bool ast_equal(const AstModule& a, const AstModule& b);

inline bool ast_equal(const AstElem& a, const AstElem& b) {
  if (a.v.index() != b.v.index()) return false;
  if (const auto* x = std::get_if<AstInt>(&a.v)) return x->value == std::get<AstInt>(b.v).value;
  if (const auto* x = std::get_if<AstVar>(&a.v)) return x->name == std::get<AstVar>(b.v).name;
  if (const auto* x = std::get_if<AstNeg>(&a.v))
    return ast_equal(*x->arg, *std::get<AstNeg>(b.v).arg);
  if (const auto* x = std::get_if<AstBin>(&a.v)) {
    const auto& y = std::get<AstBin>(b.v);
    return x->op == y.op && ast_equal(*x->lhs, *y.lhs) && ast_equal(*x->rhs, *y.rhs);
  }
  if (const auto* x = std::get_if<AstPow>(&a.v)) {
    const auto& y = std::get<AstPow>(b.v);
    return x->exp == y.exp && ast_equal(*x->base, *y.base);
  }
  const auto& xt = std::get<AstTuple>(a.v);
  const auto& yt = std::get<AstTuple>(b.v);
  if (xt.items.size() != yt.items.size()) return false;
  for (size_t i = 0; i < xt.items.size(); ++i)
    if (!ast_equal(xt.items[i], yt.items[i])) return false;
  return true;
}

inline bool ast_equal(const AstRing& a, const AstRing& b) {
  if (a.v.index() != b.v.index()) return false;
  if (const auto* x = std::get_if<AstZMod>(&a.v)) return x->modulus == std::get<AstZMod>(b.v).modulus;
  if (const auto* x = std::get_if<AstFieldLit>(&a.v)) return x->q == std::get<AstFieldLit>(b.v).q;
  if (const auto* x = std::get_if<AstPolyQuotient>(&a.v)) {
    const auto& y = std::get<AstPolyQuotient>(b.v);
    if (x->p != y.p || x->vars != y.vars || x->gens.size() != y.gens.size()) return false;
    for (size_t i = 0; i < x->gens.size(); ++i)
      if (!ast_equal(x->gens[i], y.gens[i])) return false;
    return true;
  }
  if (const auto* x = std::get_if<AstZloc>(&a.v)) return x->p == std::get<AstZloc>(b.v).p;
  if (const auto* x = std::get_if<AstFloc>(&a.v)) return x->q == std::get<AstFloc>(b.v).q;
  if (const auto* x = std::get_if<AstProduct>(&a.v)) {
    const auto& y = std::get<AstProduct>(b.v);
    if (x->factors.size() != y.factors.size()) return false;
    for (size_t i = 0; i < x->factors.size(); ++i)
      if (!ast_equal(x->factors[i], y.factors[i])) return false;
    return true;
  }
  const auto& xt = std::get<AstTriv>(a.v);
  const auto& yt = std::get<AstTriv>(b.v);
  return ast_equal(*xt.base, *yt.base) && ast_equal(*xt.module, *yt.module);
}

inline bool ast_equal(const AstModule& a, const AstModule& b) {
  if (a.v.index() != b.v.index()) return false;
  if (const auto* x = std::get_if<AstQuotientModule>(&a.v)) {
    const auto& y = std::get<AstQuotientModule>(b.v);
    if (!ast_equal(*x->base, *y.base) || x->gens.size() != y.gens.size()) return false;
    for (size_t i = 0; i < x->gens.size(); ++i)
      if (!ast_equal(x->gens[i], y.gens[i])) return false;
    return true;
  }
  if (const auto* x = std::get_if<AstFreeModule>(&a.v)) {
    const auto& y = std::get<AstFreeModule>(b.v);
    if (x->rank != y.rank || x->rel.has_value() != y.rel.has_value()) return false;
    if (!x->rel) return true;
    if (x->rel->size() != y.rel->size()) return false;
    for (size_t i = 0; i < x->rel->size(); ++i) {
      if ((*x->rel)[i].size() != (*y.rel)[i].size()) return false;
      for (size_t j = 0; j < (*x->rel)[i].size(); ++j)
        if (!ast_equal((*x->rel)[i][j], (*y.rel)[i][j])) return false;
    }
    return true;
  }
  if (std::holds_alternative<AstFracModule>(a.v)) return true;
  const auto& xs = std::get<AstSumModule>(a.v);
  const auto& ys = std::get<AstSumModule>(b.v);
  if (xs.parts.size() != ys.parts.size()) return false;
  for (size_t i = 0; i < xs.parts.size(); ++i)
    if (!ast_equal(xs.parts[i], ys.parts[i])) return false;
  return true;
}

// --- lexer ---------------------------------------------------------------------

namespace parser_detail {

struct Token {
  enum Kind { Int, Ident, Punct, End } kind = End;
  std::string text;
  ringlab::Int value;  // for Int
  SourceSpan span;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error(msg, tok_.span);
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    tok_ = Token{};
    tok_.span = {static_cast<int>(pos_), static_cast<int>(pos_) + 1};
    if (pos_ >= src_.size()) {
      tok_.kind = Token::End;
      return;
    }
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      tok_.kind = Token::Int;
      tok_.text = std::string(src_.substr(start, pos_ - start));
      tok_.value = ringlab::Int(tok_.text);
      tok_.span = {static_cast<int>(start), static_cast<int>(pos_)};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      tok_.kind = Token::Ident;
      tok_.text = std::string(src_.substr(start, pos_ - start));
      tok_.span = {static_cast<int>(start), static_cast<int>(pos_)};
      return;
    }
    static const std::string punct = "/()[],+-*^";
    if (punct.find(c) != std::string::npos) {
      tok_.kind = Token::Punct;
      tok_.text = std::string(1, c);
      tok_.span = {static_cast<int>(pos_), static_cast<int>(pos_) + 1};
      ++pos_;
      return;
    }
    throw parse_error("unexpected character '" + std::string(1, c) + "'",
                      {static_cast<int>(pos_), static_cast<int>(pos_) + 1});
  }

  std::string_view src_;
  size_t pos_ = 0;
  Token tok_;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  AstRing parse_ring_full() {
    AstRing r = parse_ring();
    expect_end();
    return r;
  }

  AstModule parse_module_full(AstRing base_hint) {
    (void)base_hint;
    AstModule m = parse_module();
    expect_end();
    return m;
  }

  AstElem parse_elem_full() {
    AstElem e = parse_elem();
    expect_end();
    return e;
  }

  AstRing parse_ring() {
    AstRing first = parse_ring_atom();
    if (!(lex_.peek().kind == Token::Ident && lex_.peek().text == "x")) return first;
    AstProduct prod;
    const int begin = first.span.begin;
    prod.factors.push_back(std::move(first));
    while (lex_.peek().kind == Token::Ident && lex_.peek().text == "x") {
      lex_.take();
      prod.factors.push_back(parse_ring_atom());
    }
    const int end = prod.factors.back().span.end;
    return AstRing{std::move(prod), {begin, end}};
  }

  AstModule parse_module() {
    AstModule first = parse_module_atom();
    if (!(lex_.peek().kind == Token::Punct && lex_.peek().text == "+")) return first;
    AstSumModule sum;
    const int begin = first.span.begin;
    sum.parts.push_back(std::move(first));
    while (lex_.peek().kind == Token::Punct && lex_.peek().text == "+") {
      lex_.take();
      sum.parts.push_back(parse_module_atom());
    }
    const int end = sum.parts.back().span.end;
    return AstModule{std::move(sum), {begin, end}};
  }

  AstElem parse_elem() { return parse_sum(); }

 private:
  void expect_end() {
    if (lex_.peek().kind != Token::End) lex_.fail("unexpected trailing input");
  }

  Token expect_punct(const std::string& p) {
    if (lex_.peek().kind != Token::Punct || lex_.peek().text != p)
      lex_.fail("expected '" + p + "'");
    return lex_.take();
  }

  Token expect_int() {
    if (lex_.peek().kind != Token::Int) lex_.fail("expected an integer");
    return lex_.take();
  }

  Token expect_ident() {
    if (lex_.peek().kind != Token::Ident) lex_.fail("expected an identifier");
    return lex_.take();
  }

  bool peek_punct(const std::string& p) const {
    return lex_.peek().kind == Token::Punct && lex_.peek().text == p;
  }

  AstRing parse_ring_atom() {
    const Token& t = lex_.peek();
    if (t.kind != Token::Ident) lex_.fail("expected a ring expression");
    if (t.text == "Z") {
      Token z = lex_.take();
      expect_punct("/");
      Token n = expect_int();
      return AstRing{AstZMod{n.value}, {z.span.begin, n.span.end}};
    }
    if (t.text == "Zloc") {
      Token z = lex_.take();
      expect_punct("(");
      Token p = expect_int();
      Token close = expect_punct(")");
      return AstRing{AstZloc{p.value}, {z.span.begin, close.span.end}};
    }
    if (t.text == "Floc") {
      Token z = lex_.take();
      expect_punct("(");
      Token q = expect_int();
      Token close = expect_punct(")");
      return AstRing{AstFloc{q.value}, {z.span.begin, close.span.end}};
    }
    if (t.text == "triv") {
      Token z = lex_.take();
      expect_punct("(");
      AstRing base = parse_ring();
      expect_punct(",");
      AstModule mod = parse_module();
      Token close = expect_punct(")");
      AstTriv triv;
      triv.base = Box<AstRing>(std::move(base));
      triv.module = Box<AstModule>(std::move(mod));
      return AstRing{std::move(triv), {z.span.begin, close.span.end}};
    }
    if (t.text.size() >= 2 && t.text[0] == 'F' &&
        std::all_of(t.text.begin() + 1, t.text.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      Token f = lex_.take();
      const Int q = Int(f.text.substr(1));
      if (!peek_punct("[")) return AstRing{AstFieldLit{q}, f.span};
      expect_punct("[");
      std::vector<std::string> vars;
      vars.push_back(expect_ident().text);
      while (peek_punct(",")) {
        lex_.take();
        vars.push_back(expect_ident().text);
      }
      expect_punct("]");
      expect_punct("/");
      expect_punct("(");
      std::vector<AstElem> gens;
      gens.push_back(parse_elem());
      while (peek_punct(",")) {
        lex_.take();
        gens.push_back(parse_elem());
      }
      Token close = expect_punct(")");
      return AstRing{AstPolyQuotient{q, std::move(vars), std::move(gens)},
                     {f.span.begin, close.span.end}};
    }
    lex_.fail("unknown ring constructor '" + t.text + "'");
  }

  AstModule parse_module_atom() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Ident && t.text == "Frac") {
      Token f = lex_.take();
      return AstModule{AstFracModule{}, f.span};
    }
    if (t.kind == Token::Ident && t.text == "free") {
      Token f = lex_.take();
      expect_punct("(");
      Token n = expect_int();
      Token close = expect_punct(")");
      AstFreeModule fm;
      if (n.value > 64) throw parse_error("free rank bound is 64", n.span);
      fm.rank = static_cast<int>(n.value);
      int end = close.span.end;
      if (peek_punct("/")) {
        lex_.take();
        Token rel = expect_ident();
        if (rel.text != "rel") throw parse_error("expected 'rel'", rel.span);
        auto [rows, mend] = parse_matrix();
        fm.rel = std::move(rows);
        end = mend;
      }
      return AstModule{std::move(fm), {f.span.begin, end}};
    }
    // ring "/(" elems ")"
    AstRing base = parse_ring();
    expect_punct("/");
    expect_punct("(");
    std::vector<AstElem> gens;
    gens.push_back(parse_elem());
    while (peek_punct(",")) {
      lex_.take();
      gens.push_back(parse_elem());
    }
    Token close = expect_punct(")");
    AstQuotientModule qm;
    const int begin = base.span.begin;
    qm.base = Box<AstRing>(std::move(base));
    qm.gens = std::move(gens);
    return AstModule{std::move(qm), {begin, close.span.end}};
  }

  std::pair<std::vector<std::vector<AstElem>>, int> parse_matrix() {
    expect_punct("[");
    std::vector<std::vector<AstElem>> rows;
    while (true) {
      expect_punct("[");
      std::vector<AstElem> row;
      row.push_back(parse_elem());
      while (peek_punct(",")) {
        lex_.take();
        row.push_back(parse_elem());
      }
      expect_punct("]");
      rows.push_back(std::move(row));
      if (peek_punct(",")) {
        lex_.take();
        continue;
      }
      break;
    }
    Token close = expect_punct("]");
    return {std::move(rows), close.span.end};
  }

  AstElem parse_sum() {
    AstElem lhs = parse_product();
    while (peek_punct("+") || peek_punct("-")) {
      const char op = lex_.take().text[0];
      AstElem rhs = parse_product();
      const SourceSpan span{lhs.span.begin, rhs.span.end};
      AstBin bin;
      bin.op = op;
      bin.lhs = Box<AstElem>(std::move(lhs));
      bin.rhs = Box<AstElem>(std::move(rhs));
      lhs = AstElem{std::move(bin), span};
    }
    return lhs;
  }

  AstElem parse_product() {
    AstElem lhs = parse_unary();
    while (peek_punct("*") || peek_punct("/")) {
      const char op = lex_.take().text[0];
      AstElem rhs = parse_unary();
      const SourceSpan span{lhs.span.begin, rhs.span.end};
      AstBin bin;
      bin.op = op;
      bin.lhs = Box<AstElem>(std::move(lhs));
      bin.rhs = Box<AstElem>(std::move(rhs));
      lhs = AstElem{std::move(bin), span};
    }
    return lhs;
  }

  AstElem parse_unary() {
    if (peek_punct("-")) {
      Token m = lex_.take();
      AstElem arg = parse_unary();
      const SourceSpan span{m.span.begin, arg.span.end};
      AstNeg neg;
      neg.arg = Box<AstElem>(std::move(arg));
      return AstElem{std::move(neg), span};
    }
    return parse_postfix();
  }

  AstElem parse_postfix() {
    AstElem base = parse_atom();
    if (peek_punct("^")) {
      lex_.take();
      Token e = expect_int();
      if (e.value > 1024) throw parse_error("exponent bound is 1024", e.span);
      const SourceSpan span{base.span.begin, e.span.end};
      AstPow pw;
      pw.base = Box<AstElem>(std::move(base));
      pw.exp = static_cast<int>(e.value);
      return AstElem{std::move(pw), span};
    }
    return base;
  }

  AstElem parse_atom() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Int) {
      Token n = lex_.take();
      return AstElem{AstInt{n.value}, n.span};
    }
    if (t.kind == Token::Ident) {
      Token v = lex_.take();
      return AstElem{AstVar{v.text}, v.span};
    }
    if (peek_punct("(")) {
      Token open = lex_.take();
      AstElem first = parse_elem();
      if (peek_punct(",")) {
        AstTuple tup;
        tup.items.push_back(std::move(first));
        while (peek_punct(",")) {
          lex_.take();
          tup.items.push_back(parse_elem());
        }
        Token close = expect_punct(")");
        return AstElem{std::move(tup), {open.span.begin, close.span.end}};
      }
      expect_punct(")");
      return first;  // grouping folds away
    }
    lex_.fail("expected an element expression");
  }

  Lexer lex_;
};

}  // namespace parser_detail

// --- parse entry points ---------------------------------------------------------

inline AstRing parse_ring_expr(std::string_view text) {
  parser_detail::Parser p(text);
  return p.parse_ring_full();
}

inline AstElem parse_elem_expr(std::string_view text) {
  parser_detail::Parser p(text);
  return p.parse_elem_full();
}

// --- printer ---------------------------------------------------------------------

inline std::string print_ast(const AstElem& e, int parent_prec = 0);
inline std::string print_ast(const AstRing& r);
inline std::string print_ast(const AstModule& m);

inline std::string print_ast(const AstElem& e, int parent_prec) {
  struct V {
    int parent_prec;
    std::string operator()(const AstInt& x) const { return x.value.str(); }
    std::string operator()(const AstVar& x) const { return x.name; }
    std::string operator()(const AstNeg& x) const {
      std::string inner = "-" + print_ast(*x.arg, 2);
      return parent_prec > 1 ? "(" + inner + ")" : inner;
    }
    std::string operator()(const AstBin& x) const {
      const int prec = (x.op == '+' || x.op == '-') ? 1 : 2;
      std::string out = print_ast(*x.lhs, prec) + std::string(1, x.op) + print_ast(*x.rhs, prec + 1);
      return parent_prec > prec ? "(" + out + ")" : out;
    }
    std::string operator()(const AstPow& x) const {
      return print_ast(*x.base, 4) + "^" + std::to_string(x.exp);
    }
    std::string operator()(const AstTuple& x) const {
      std::string out = "(";
      for (size_t i = 0; i < x.items.size(); ++i) {
        if (i) out += ", ";
        out += print_ast(x.items[i], 0);
      }
      return out + ")";
    }
  };
  return std::visit(V{parent_prec}, e.v);
}

inline std::string print_ast(const AstRing& r) {
  struct V {
    std::string operator()(const AstZMod& x) const { return "Z/" + x.modulus.str(); }
    std::string operator()(const AstFieldLit& x) const { return "F" + x.q.str(); }
    std::string operator()(const AstPolyQuotient& x) const {
      std::string out = "F" + x.p.str() + "[";
      for (size_t i = 0; i < x.vars.size(); ++i) {
        if (i) out += ",";
        out += x.vars[i];
      }
      out += "]/(";
      for (size_t i = 0; i < x.gens.size(); ++i) {
        if (i) out += ",";
        out += print_ast(x.gens[i], 0);
      }
      return out + ")";
    }
    std::string operator()(const AstZloc& x) const { return "Zloc(" + x.p.str() + ")"; }
    std::string operator()(const AstFloc& x) const { return "Floc(" + x.q.str() + ")"; }
    std::string operator()(const AstProduct& x) const {
      std::string out;
      for (size_t i = 0; i < x.factors.size(); ++i) {
        if (i) out += " x ";
        out += print_ast(x.factors[i]);
      }
      return out;
    }
    std::string operator()(const AstTriv& x) const {
      return "triv(" + print_ast(*x.base) + ", " + print_ast(*x.module) + ")";
    }
  };
  return std::visit(V{}, r.v);
}

inline std::string print_ast(const AstModule& m) {
  struct V {
    std::string operator()(const AstQuotientModule& x) const {
      std::string out = print_ast(*x.base) + "/(";
      for (size_t i = 0; i < x.gens.size(); ++i) {
        if (i) out += ",";
        out += print_ast(x.gens[i], 0);
      }
      return out + ")";
    }
    std::string operator()(const AstFreeModule& x) const {
      std::string out = "free(" + std::to_string(x.rank) + ")";
      if (x.rel) {
        out += "/rel[";
        for (size_t i = 0; i < x.rel->size(); ++i) {
          if (i) out += ",";
          out += "[";
          for (size_t j = 0; j < (*x.rel)[i].size(); ++j) {
            if (j) out += ",";
            out += print_ast((*x.rel)[i][j], 0);
          }
          out += "]";
        }
        out += "]";
      }
      return out;
    }
    std::string operator()(const AstFracModule&) const { return "Frac"; }
    std::string operator()(const AstSumModule& x) const {
      std::string out;
      for (size_t i = 0; i < x.parts.size(); ++i) {
        if (i) out += " + ";
        out += print_ast(x.parts[i]);
      }
      return out;
    }
  };
  return std::visit(V{}, m.v);
}

}  // namespace ringlab

#endif  // RINGLAB_PARSER_HPP
