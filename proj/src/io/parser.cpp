#include <algorithm>
#include <cctype>
#include <optional>

#include "liaison/errors.hpp"
#include "liaison/io/document.hpp"

namespace liaison::io {

TermOrder OrderSpec::build(const std::vector<Variable>& vars) const {
  switch (kind) {
    case Kind::Lex:
      return TermOrder::lex(vars);
    case Kind::GrevLex:
      return TermOrder::grevlex(vars);
    case Kind::Product: {
      std::vector<Variable> rest;
      for (Variable v : vars)
        if (std::find(front.begin(), front.end(), v) == front.end()) rest.push_back(v);
      for (Variable v : front)
        if (std::find(vars.begin(), vars.end(), v) == vars.end())
          throw PreconditionError("product order names a variable outside the ring");
      if (rest.empty()) return TermOrder::lex(front);
      return TermOrder::product(front, tail ? tail->build(rest) : TermOrder::lex(rest));
    }
  }
  return TermOrder::lex(vars);
}

bool OrderSpec::operator==(const OrderSpec& o) const {
  if (kind != o.kind || front != o.front) return false;
  if (!tail || !o.tail) return !tail && !o.tail;
  return *tail == *o.tail;
}

const std::vector<Polynomial>& SourceDocument::ideal(const std::string& name) const {
  for (const auto& i : ideals)
    if (name.empty() || i.name == name) return i.generators;
  throw PreconditionError(name.empty() ? "document defines no ideal" : "no ideal named '" + name + "'");
}

const SimplicialComplex& SourceDocument::complex(const std::string& name) const {
  for (const auto& c : complexes)
    if (name.empty() || c.name == name) return c.complex;
  throw PreconditionError(name.empty() ? "document defines no complex" : "no complex named '" + name + "'");
}

bool SourceDocument::operator==(const SourceDocument& o) const {
  return names.entries() == o.names.entries() && variables == o.variables && order_spec == o.order_spec &&
         ideals == o.ideals && complexes == o.complexes && settings == o.settings;
}

namespace {

struct Token {
  enum class Kind { Ident, Number, Punct, End } kind = Kind::End;
  std::string text;
  int line = 1, column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  Token next() {
    skip();
    Token t;
    t.line = line_;
    t.column = col_;
    if (i_ >= s_.size()) return t;
    char c = s_[i_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      t.kind = Token::Kind::Ident;
      while (i_ < s_.size()) {
        char d = s_[i_];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_') {
          t.text += d;
          advance();
        } else if (d == '{' && !t.text.empty() && t.text.back() == '_') {
          advance();
          bool closed = false;
          while (i_ < s_.size()) {
            char e = s_[i_];
            advance();
            if (e == '}') {
              closed = true;
              break;
            }
            if (e == ',') {
              t.text += '_';
            } else if (std::isalnum(static_cast<unsigned char>(e))) {
              t.text += e;
            } else if (!std::isspace(static_cast<unsigned char>(e))) {
              throw ParseError("unexpected character in subscript", line_, col_);
            }
          }
          if (!closed) throw ParseError("unterminated subscript", t.line, t.column);
        } else {
          break;
        }
      }
      while (i_ < s_.size() && s_[i_] == '\'') {
        t.text += '\'';
        advance();
      }
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Token::Kind::Number;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
        t.text += s_[i_];
        advance();
      }
      return t;
    }
    static const std::string punct = "()[],;=+-*^/>";
    if (punct.find(c) == std::string::npos)
      throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
    t.kind = Token::Kind::Punct;
    t.text = c;
    advance();
    return t;
  }

 private:
  void advance() {
    if (s_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }
  void skip() {
    while (i_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[i_]))) {
        advance();
      } else if (s_[i_] == '#') {
        while (i_ < s_.size() && s_[i_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view s_;
  std::size_t i_ = 0;
  int line_ = 1, col_ = 1;
};

bool is_default_name(std::string_view s) {
  if (s.size() < 3 || s.substr(0, 2) != "x_") return false;
  return std::all_of(s.begin() + 2, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
         s[2] != '0';
}

struct RawComplex {
  std::string name;
  std::optional<std::vector<Variable>> on;
  bool is_void = false;
  std::vector<std::vector<Variable>> faces;
};

class Parser {
 public:
  Parser(std::string_view text, SourceDocument& doc) : lex_(text), doc_(doc) {
    declared_ = doc.variables;
    tok_ = lex_.next();
  }

  void document() {
    bool first = true;
    while (tok_.kind != Token::Kind::End) {
      if (accept(";")) continue;
      statement(first);
      first = false;
      if (tok_.kind == Token::Kind::End) break;
      expect(";");
    }
    finish();
  }

  Polynomial lone_polynomial() {
    Polynomial p = expr();
    if (tok_.kind != Token::Kind::End) error("trailing input after polynomial");
    finish();
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const { throw ParseError(msg, tok_.line, tok_.column); }
  bool is(const char* p) const { return tok_.kind == Token::Kind::Punct && tok_.text == p; }
  bool is_word(const char* w) const { return tok_.kind == Token::Kind::Ident && tok_.text == w; }
  bool accept(const char* p) {
    if (!is(p)) return false;
    tok_ = lex_.next();
    return true;
  }
  void expect(const char* p) {
    if (!accept(p)) error(std::string("expected '") + p + "'");
  }
  std::string ident() {
    if (tok_.kind != Token::Kind::Ident) error("expected an identifier");
    std::string s = tok_.text;
    tok_ = lex_.next();
    return s;
  }

  void statement(bool first) {
    if (is_word("ring")) {
      if (!first) error("the ring declaration must come first");
      tok_ = lex_.next();
      ring();
    } else if (is_word("complex")) {
      tok_ = lex_.next();
      complex_statement();
    } else if (is_word("set")) {
      tok_ = lex_.next();
      std::string key = ident();
      expect("=");
      std::string value;
      while (tok_.kind != Token::Kind::End && !is(";")) {
        value += tok_.text;
        tok_ = lex_.next();
      }
      doc_.settings[key] = value;
    } else if (tok_.kind == Token::Kind::Ident) {
      std::string name = ident();
      expect("=");
      doc_.ideals.push_back({name, ideal()});
    } else if (is("(")) {
      doc_.ideals.push_back({"", ideal()});
    } else {
      error("expected a statement");
    }
  }

  std::int32_t next_base() const {
    std::int32_t b = 0;
    for (const auto& [base, name] : doc_.names.entries()) b = std::max(b, base);
    for (Variable v : doc_.variables) b = std::max(b, v.base);
    for (Variable v : extra_) b = std::max(b, v.base);
    return b + 1;
  }

  // Exact name, or prime / _<j> layer of a named stem.
  bool names_known_stem(std::string stem) const {
    while (!stem.empty() && stem.back() == '\'') stem.pop_back();
    if (doc_.names.base_of(stem)) return true;
    auto pos = stem.rfind('_');
    return pos != std::string::npos && pos > 0 && doc_.names.base_of(stem.substr(0, pos)).has_value();
  }

  Variable declare_name(const std::string& token, bool exact = false) {
    if (!exact)
      if (auto v = doc_.names.resolve(token)) return *v;
    std::string stem = token;
    std::int32_t layer = 1;
    while (!stem.empty() && stem.back() == '\'') {
      stem.pop_back();
      ++layer;
    }
    std::int32_t b = next_base();
    doc_.names.set(b, stem);
    return Variable{b, layer};
  }

  void ring() {
    while (tok_.kind == Token::Kind::Ident && !is_word("lex") && !is_word("grevlex") && !is_word("product")) {
      std::string name = ident();
      Variable v;
      if (auto r = doc_.names.resolve(name); r && names_known_stem(name)) {
        v = *r;
      } else if (is_default_name(name)) {
        v = Variable{std::stoi(name.substr(2)), 1};
        if (doc_.names.has(v.base)) v = declare_name(name);
      } else {
        v = declare_name(name, true);
      }
      if (std::find(doc_.variables.begin(), doc_.variables.end(), v) != doc_.variables.end())
        error("variable '" + name + "' declared twice");
      doc_.variables.push_back(v);
      if (!accept(",")) accept(">");
    }
    declared_ = doc_.variables;
    if (tok_.kind == Token::Kind::Ident) doc_.order_spec = order_spec();
  }

  OrderSpec order_spec() {
    OrderSpec s;
    std::string w = ident();
    if (w == "lex") {
      s.kind = OrderSpec::Kind::Lex;
    } else if (w == "grevlex") {
      s.kind = OrderSpec::Kind::GrevLex;
    } else if (w == "product") {
      s.kind = OrderSpec::Kind::Product;
      expect("(");
      do {
        Token at = tok_;
        std::string name = ident();
        auto v = doc_.names.resolve(name);
        if (!v || std::find(doc_.variables.begin(), doc_.variables.end(), *v) == doc_.variables.end())
          throw ParseError("unknown variable '" + name + "'", at.line, at.column);
        s.front.push_back(*v);
      } while (accept(","));
      expect(";");
      s.tail = std::make_shared<OrderSpec>(order_spec());
      if (s.tail->kind == OrderSpec::Kind::Product) error("nested product orders are not supported");
      expect(")");
    } else {
      error("unknown term order '" + w + "'");
    }
    return s;
  }

  Variable variable(const std::string& token) {
    Variable v = declare_name(token);
    if (std::find(doc_.variables.begin(), doc_.variables.end(), v) == doc_.variables.end() &&
        std::find(extra_.begin(), extra_.end(), v) == extra_.end())
      extra_.push_back(v);
    return v;
  }

  std::vector<Polynomial> ideal() {
    expect("(");
    std::vector<Polynomial> gens;
    if (accept(")")) return gens;
    do {
      Polynomial f = expr();
      if (!f.is_zero()) gens.push_back(std::move(f));
    } while (accept(","));
    expect(")");
    return gens;
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      if (accept("+")) {
        acc += term();
      } else if (accept("-")) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (true) {
      if (accept("*")) {
        acc *= unary();
      } else if (is("/")) {
        Token at = tok_;
        tok_ = lex_.next();
        Polynomial d = unary();
        if (!d.is_constant()) throw ParseError("division by a non-constant", at.line, at.column);
        if (d.is_zero()) throw ParseError("zero denominator", at.line, at.column);
        Rational c = d.terms()[0].coef;
        acc = acc * Rational(1 / c);
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept("-")) return -unary();
    if (accept("+")) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept("^")) {
      if (tok_.kind != Token::Kind::Number) error("expected a non-negative integer exponent");
      if (tok_.text.size() > 6) error("exponent too large");
      unsigned e = static_cast<unsigned>(std::stoul(tok_.text));
      tok_ = lex_.next();
      return base.pow(e);
    }
    return base;
  }

  Polynomial atom() {
    if (tok_.kind == Token::Kind::Number) {
      Rational c(tok_.text);
      tok_ = lex_.next();
      return Polynomial(c);
    }
    if (tok_.kind == Token::Kind::Ident) return Polynomial::variable(variable(ident()));
    if (accept("(")) {
      Polynomial p = expr();
      expect(")");
      return p;
    }
    error("expected a number, variable or '('");
  }

  std::vector<Variable> vertex_list(const char* close) {
    std::vector<Variable> vs;
    if (is(close)) return vs;
    do vs.push_back(variable(ident()));
    while (accept(","));
    return vs;
  }

  void complex_statement() {
    RawComplex rc;
    rc.name = ident();
    if (is_word("on")) {
      tok_ = lex_.next();
      rc.on = vertex_list("=");
    }
    expect("=");
    if (is_word("void")) {
      tok_ = lex_.next();
      rc.is_void = true;
    } else {
      expect("(");
      if (!is(")")) {
        do {
          expect("[");
          rc.faces.push_back(vertex_list("]"));
          expect("]");
        } while (accept(","));
      }
      expect(")");
    }
    raw_complexes_.push_back(std::move(rc));
  }

  void finish() {
    std::sort(extra_.begin(), extra_.end());
    for (Variable v : extra_) {
      auto last = std::find_if(doc_.variables.rbegin(), doc_.variables.rend(),
                               [&](Variable u) { return u.base == v.base; });
      if (last == doc_.variables.rend())
        doc_.variables.push_back(v);
      else
        doc_.variables.insert(last.base(), v);
    }
    extra_.clear();
    auto pos = [&](Variable v) {
      return std::find(doc_.variables.begin(), doc_.variables.end(), v) - doc_.variables.begin();
    };
    for (auto& rc : raw_complexes_) {
      std::vector<Variable> universe;
      if (rc.on) {
        universe = *rc.on;
      } else {
        for (const auto& f : rc.faces) universe.insert(universe.end(), f.begin(), f.end());
        universe = sorted_unique(universe);
        std::sort(universe.begin(), universe.end(), [&](Variable a, Variable b) { return pos(a) < pos(b); });
      }
      if (universe.size() > 64) throw ParseError("complexes are limited to 64 vertices", 1, 1);
      SimplicialComplex c = rc.is_void ? SimplicialComplex::void_complex(universe)
                                       : (rc.faces.empty() ? SimplicialComplex::void_complex(universe)
                                                           : SimplicialComplex(universe, rc.faces));
      doc_.complexes.push_back({rc.name, std::move(c)});
    }
    raw_complexes_.clear();
  }

  Lexer lex_;
  SourceDocument& doc_;
  Token tok_;
  std::vector<Variable> declared_;
  std::vector<Variable> extra_;
  std::vector<RawComplex> raw_complexes_;
};

}  // namespace

SourceDocument parse(std::string_view text) {
  SourceDocument doc;
  Parser p(text, doc);
  p.document();
  return doc;
}

Polynomial parse_polynomial(std::string_view text, SourceDocument& doc) {
  Parser p(text, doc);
  return p.lone_polynomial();
}

}  // namespace liaison::io
