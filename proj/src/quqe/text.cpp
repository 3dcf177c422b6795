#include "text.hpp"

#include <cctype>
#include <vector>

#include "sugar.hpp"

namespace quqe {

namespace {

enum class Tok {
  LParen, RParen, Lambda, Dot, Colon, Hash, Less, Greater, Comma,
  Iff, Imp, Or, And, EqEq, Quasi, Not, Bang, Question, Ident, End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool ident_start(char c) { return std::isalpha((unsigned char)c) || c == '_' || c == '%'; }
bool ident_char(char c) {
  return std::isalnum((unsigned char)c) || c == '_' || c == '\'' || c == '^' || c == '-';
}

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok k, std::string t, std::size_t p) {
    out.push_back(Token{k, std::move(t), p});
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace((unsigned char)c)) { ++i; continue; }
    std::size_t p = i;
    switch (c) {
      case '(': push(Tok::LParen, "(", p); ++i; continue;
      case ')': push(Tok::RParen, ")", p); ++i; continue;
      case '\\': push(Tok::Lambda, "\\", p); ++i; continue;
      case '.': push(Tok::Dot, ".", p); ++i; continue;
      case ':': push(Tok::Colon, ":", p); ++i; continue;
      case '#': push(Tok::Hash, "#", p); ++i; continue;
      case '>': push(Tok::Greater, ">", p); ++i; continue;
      case ',': push(Tok::Comma, ",", p); ++i; continue;
      case '|': push(Tok::Or, "|", p); ++i; continue;
      case '&': push(Tok::And, "&", p); ++i; continue;
      case '!': push(Tok::Bang, "!", p); ++i; continue;
      case '?': push(Tok::Question, "?", p); ++i; continue;
      case '<':
        if (s.compare(i, 3, "<=>") == 0) { push(Tok::Iff, "<=>", p); i += 3; }
        else { push(Tok::Less, "<", p); ++i; }
        continue;
      case '=':
        if (s.compare(i, 2, "=>") == 0) { push(Tok::Imp, "=>", p); i += 2; }
        else if (s.compare(i, 2, "==") == 0) { push(Tok::EqEq, "==", p); i += 2; }
        else throw ParseError("stray '=' at offset " + std::to_string(p));
        continue;
      case '~':
        if (s.compare(i, 2, "~~") == 0) { push(Tok::Quasi, "~~", p); i += 2; }
        else { push(Tok::Not, "~", p); ++i; }
        continue;
      default: break;
    }
    if (ident_start(c)) {
      std::size_t j = i + 1;
      while (j < s.size() && ident_char(s[j])) ++j;
      push(Tok::Ident, s.substr(i, j - i), p);
      i = j;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "' at offset " +
                     std::to_string(p));
  }
  out.push_back(Token{Tok::End, "", s.size()});
  return out;
}

struct Parser {
  const std::vector<Token>& toks;
  std::size_t i = 0;
  const Signature* sig;

  const Token& peek() const { return toks[i]; }
  Token next() { return toks[i++]; }
  bool at(Tok k) const { return toks[i].kind == k; }
  Token expect(Tok k, const char* what) {
    if (!at(k))
      throw ParseError(std::string("expected ") + what + " at offset " +
                       std::to_string(toks[i].pos) + ", found '" + toks[i].text + "'");
    return next();
  }

  TypePtr type() {
    if (at(Tok::Ident)) {
      Token t = next();
      if (t.text == "i") return ty_i();
      if (t.text == "o") return ty_o();
      if (t.text == "eps") return ty_eps();
      throw ParseError("unknown base type '" + t.text + "' at offset " +
                       std::to_string(t.pos));
    }
    if (at(Tok::LParen)) {
      next();
      TypePtr r = type();
      TypePtr a = type();
      expect(Tok::RParen, "')' closing function type");
      return ty_fun(r, a);
    }
    if (at(Tok::Less)) {
      next();
      TypePtr a = type();
      expect(Tok::Comma, "',' in pair type");
      TypePtr b = type();
      expect(Tok::Greater, "'>' closing pair type");
      return ty_pair(a, b);
    }
    throw ParseError("expected a type at offset " + std::to_string(peek().pos));
  }

  TypePtr annot() {
    expect(Tok::Colon, "':' before type annotation");
    return type();
  }

  bool is_keyword(const std::string& s) const {
    return s == "if" || s == "quote" || s == "eval" || s == "forall" ||
           s == "exists" || s == "exists1" || s == "desc" || s == "bot" ||
           s == "fst" || s == "snd" || s == "T" || s == "F";
  }

  WffPtr binder_var() {
    Token t = expect(Tok::Ident, "binder variable");
    if (is_keyword(t.text))
      throw ParseError("'" + t.text + "' cannot be used as a variable name");
    TypePtr ty = annot();
    return mk_var(t.text, ty);
  }

  // group body after '(' for special forms; generic expression otherwise
  WffPtr group() {
    if (at(Tok::Lambda)) {
      next();
      WffPtr x = binder_var();
      expect(Tok::Dot, "'.' after binder");
      WffPtr body = expr();
      expect(Tok::RParen, "')' closing abstraction");
      return mk_abs(x, body);
    }
    if (at(Tok::Ident)) {
      const std::string& kw = peek().text;
      if (kw == "if") {
        next();
        WffPtr t = atom();
        WffPtr b = atom();
        WffPtr c = atom();
        expect(Tok::RParen, "')' closing conditional");
        return mk_cond(t, b, c);
      }
      if (kw == "quote") {
        next();
        WffPtr b = expr();
        expect(Tok::RParen, "')' closing quotation");
        return mk_quote(b);
      }
      if (kw == "eval") {
        next();
        WffPtr b = expr();
        TypePtr ty = annot();
        expect(Tok::RParen, "')' closing evaluation");
        return mk_eval(b, ty);
      }
      if (kw == "forall" || kw == "exists" || kw == "exists1" || kw == "desc") {
        next();
        WffPtr x = binder_var();
        expect(Tok::Dot, "'.' after binder");
        WffPtr body = expr();
        expect(Tok::RParen, "')' closing binder");
        if (kw == "forall") return mk_forall(x, body);
        if (kw == "exists") return mk_exists(x, body);
        if (kw == "exists1") return mk_exists1(x, body);
        return mk_desc(x, body);
      }
    }
    WffPtr w = expr();
    expect(Tok::RParen, "')' closing group");
    return w;
  }

  WffPtr atom() {
    if (at(Tok::LParen)) {
      next();
      return group();
    }
    if (at(Tok::Hash)) {
      next();
      Token t = expect(Tok::Ident, "constant name after '#'");
      TypePtr ty = annot();
      auto c = sig->resolve_const(t.text, ty);
      if (!c)
        throw ParseError("unknown constant '" + t.text + ":" + ty_str(ty) +
                         "' at offset " + std::to_string(t.pos));
      return *c;
    }
    if (at(Tok::Ident)) {
      Token t = next();
      if (t.text == "T") return mk_true();
      if (t.text == "F") return mk_false();
      if (t.text == "bot") return mk_bottom(annot());
      if (t.text == "fst" || t.text == "snd") {
        TypePtr ty = annot();
        if (ty->kind != TyKind::Pair)
          throw ParseError("'" + t.text + "' needs a pair-type annotation at offset " +
                           std::to_string(t.pos));
        return t.text == "fst" ? mk_fst(ty->a, ty->b) : mk_snd(ty->a, ty->b);
      }
      if (is_keyword(t.text))
        throw ParseError("keyword '" + t.text + "' cannot appear here (offset " +
                         std::to_string(t.pos) + ")");
      TypePtr ty = annot();
      return mk_var(t.text, ty);
    }
    throw ParseError("expected a wff at offset " + std::to_string(peek().pos));
  }

  WffPtr postfix() {
    WffPtr w = atom();
    while (at(Tok::Bang) || at(Tok::Question)) {
      if (next().kind == Tok::Bang) w = mk_defined(w);
      else w = mk_undefined(w);
    }
    return w;
  }

  WffPtr unary() {
    if (at(Tok::Not)) {
      next();
      return mk_not(unary());
    }
    return postfix();
  }

  bool starts_atom() const {
    return at(Tok::LParen) || at(Tok::Hash) || at(Tok::Ident) || at(Tok::Not);
  }

  WffPtr appseq() {
    WffPtr w = unary();
    while (starts_atom()) w = mk_app(w, unary());
    return w;
  }

  WffPtr cmp() {
    WffPtr l = appseq();
    if (at(Tok::EqEq)) {
      next();
      return mk_eq(l, appseq());
    }
    if (at(Tok::Quasi)) {
      next();
      return mk_quasi(l, appseq());
    }
    return l;
  }

  WffPtr conj() {
    WffPtr l = cmp();
    while (at(Tok::And)) {
      next();
      l = mk_and(l, cmp());
    }
    return l;
  }

  WffPtr disj() {
    WffPtr l = conj();
    while (at(Tok::Or)) {
      next();
      l = mk_or(l, conj());
    }
    return l;
  }

  WffPtr impl() {
    WffPtr l = disj();
    if (at(Tok::Imp)) {
      next();
      return mk_implies(l, impl());
    }
    return l;
  }

  WffPtr expr() {
    WffPtr l = impl();
    while (at(Tok::Iff)) {
      next();
      l = mk_eq(l, impl());
    }
    return l;
  }
};

}  // namespace

TypePtr parse_type(const std::string& text) {
  auto toks = lex(text);
  Parser p{toks, 0, nullptr};
  TypePtr t = p.type();
  if (!p.at(Tok::End))
    throw ParseError("trailing input after type at offset " +
                     std::to_string(p.peek().pos));
  return t;
}

WffPtr parse_wff(const std::string& text, const Signature& sig) {
  auto toks = lex(text);
  Parser p{toks, 0, &sig};
  WffPtr w = p.expr();
  if (!p.at(Tok::End))
    throw ParseError("trailing input after wff at offset " +
                     std::to_string(p.peek().pos));
  return w;
}

std::string print_type(const TypePtr& t) { return ty_str(t); }

namespace {

std::string pr(const WffPtr& w, bool sugar);

std::string pr_binder(const char* kw, const WffPtr& x, const WffPtr& body,
                      bool sugar) {
  return std::string("(") + kw + " " + x->name + ":" + ty_str(x->ty) + " . " +
         pr(body, sugar) + ")";
}

std::string pr(const WffPtr& w, bool sugar) {
  // Greedy re-sugaring, longest/most specific patterns first.
  if (sugar) {
    if (is_true(w)) return "T";
    if (is_false(w)) return "F";
    if (is_bottom(w)) {
      auto t = type_of(w);
      return "bot:" + ty_str(t ? *t : ty_o());
    }
    if (auto q = match_quasi(w))
      return "(" + pr(q->a, sugar) + " ~~ " + pr(q->b, sugar) + ")";
    if (auto u = match_undefined(w)) return "(" + pr(*u, sugar) + " ?)";
    if (auto e1 = match_exists1(w)) return pr_binder("exists1", e1->a, e1->b, sugar);
    if (auto ex = match_exists(w)) return pr_binder("exists", ex->a, ex->b, sugar);
    if (auto fa = match_forall(w)) return pr_binder("forall", fa->a, fa->b, sugar);
    if (auto d = match_defined(w)) return "(" + pr(*d, sugar) + " !)";
    if (auto f = match_fst(w)) return "fst:" + ty_str(ty_pair(f->first, f->second));
    if (auto s = match_snd(w)) return "snd:" + ty_str(ty_pair(s->first, s->second));
    if (auto o = match_or(w)) return "(" + pr(o->a, sugar) + " | " + pr(o->b, sugar) + ")";
    if (auto im = match_implies(w))
      return "(" + pr(im->a, sugar) + " => " + pr(im->b, sugar) + ")";
    if (auto a = match_and(w)) return "(" + pr(a->a, sugar) + " & " + pr(a->b, sugar) + ")";
    if (auto n = match_not(w)) return "(~ " + pr(*n, sugar) + ")";
    if (auto eq = match_eq(w))
      return "(" + pr(eq->a, sugar) + " == " + pr(eq->b, sugar) + ")";
    if (auto de = match_desc(w)) return pr_binder("desc", de->a, de->b, sugar);
  }
  switch (w->kind) {
    case WKind::Var: return w->name + ":" + ty_str(w->ty);
    case WKind::Const: return "#" + w->name + ":" + ty_str(w->ty);
    case WKind::App: {
      std::vector<WffPtr> spine;
      WffPtr h = w;
      while (h->kind == WKind::App) {
        spine.push_back(h->b);
        h = h->a;
      }
      std::string out = "(" + pr(h, sugar);
      for (auto it = spine.rbegin(); it != spine.rend(); ++it)
        out += " " + pr(*it, sugar);
      return out + ")";
    }
    case WKind::Abs: return pr_binder("\\", w->a, w->b, sugar);
    case WKind::Cond:
      return "(if " + pr(w->a, sugar) + " " + pr(w->b, sugar) + " " +
             pr(w->c, sugar) + ")";
    case WKind::Quote: return "(quote " + pr(w->a, sugar) + ")";
    case WKind::Eval:
      return "(eval " + pr(w->a, sugar) + " : " + ty_str(w->ty) + ")";
  }
  return "?";
}

}  // namespace

std::string print_wff(const WffPtr& w) { return pr(w, true); }
std::string print_wff_raw(const WffPtr& w) { return pr(w, false); }

WffPtr parse_checked(const std::string& text, const Signature& sig) {
  WffPtr w = parse_wff(text, sig);
  if (auto e = formation_error(w)) throw ParseError("ill-formed wff: " + *e);
  if (auto u = unknown_const(sig, w))
    throw ParseError("undeclared constant " + *u);
  return w;
}

}  // namespace quqe
