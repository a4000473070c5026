#include "horadam/lang.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

namespace horadam {

// ---------------------------------------------------------------------------
// Errors

std::string_view to_string(ParseError::Kind kind) {
  switch (kind) {
    case ParseError::Kind::Syntax: return "ParseError";
    case ParseError::Kind::UndeclaredIndex: return "UndeclaredIndex";
    case ParseError::Kind::NonIntegerExponent: return "NonIntegerExponent";
    case ParseError::Kind::SlopeCapExceeded: return "SlopeCapExceeded";
    case ParseError::Kind::UnknownName: return "UnknownName";
  }
  return "ParseError";
}

namespace {

std::string format_error(ParseError::Kind kind, SourceLoc loc, const std::string& message,
                         const std::string& expected) {
  std::string out = std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": " +
                    std::string(to_string(kind)) + ": " + message;
  if (!expected.empty()) out += " (expected " + expected + ")";
  return out;
}

}  // namespace

ParseError::ParseError(Kind kind, SourceLoc loc, const std::string& message, std::string expected)
    : std::runtime_error(format_error(kind, loc, message, expected)),
      kind_(kind),
      loc_(loc),
      expected_(std::move(expected)) {}

// ---------------------------------------------------------------------------
// LinForm, Atom, Expr

bool LinForm::is_constant() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](long c) { return c == 0; });
}

long LinForm::evaluate(std::span<const long> values) const {
  long v = constant;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) v += coeffs[i] * values[i];
  return v;
}

std::string LinForm::str(std::span<const std::string> vars) const {
  std::string out;
  auto append = [&out](long c, const std::string& body) {
    bool negative = c < 0;
    long magnitude = negative ? -c : c;
    std::string term = body.empty() ? std::to_string(magnitude)
                       : magnitude == 1 ? body
                                        : std::to_string(magnitude) + "*" + body;
    if (out.empty())
      out = negative ? "-" + term : term;
    else
      out += (negative ? " - " : " + ") + term;
  };
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) append(coeffs[i], i < vars.size() ? vars[i] : "?" + std::to_string(i));
  if (constant != 0 || out.empty()) {
    if (constant == 0)
      out = "0";
    else
      append(constant, "");
  }
  return out;
}

bool LinForm::operator==(const LinForm& o) const { return (*this <=> o) == 0; }

std::strong_ordering LinForm::operator<=>(const LinForm& o) const {
  const std::size_t n = std::max(coeffs.size(), o.coeffs.size());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = coefficient(i) <=> o.coefficient(i); c != 0) return c;
  return constant <=> o.constant;
}

std::string Atom::str(std::span<const std::string> vars) const {
  if (kind == SequenceKind::GeoQ) return "q^(" + index.str(vars) + ")";
  return std::string(sequence_name(kind)) + "(" + index.str(vars) + ")";
}

std::strong_ordering Atom::operator<=>(const Atom& o) const {
  if (auto c = kind <=> o.kind; c != 0) return c;
  return index <=> o.index;
}

Expr Expr::binary(Kind kind, Expr lhs, Expr rhs) {
  Expr e;
  e.kind = kind;
  e.args.push_back(std::move(lhs));
  e.args.push_back(std::move(rhs));
  return e;
}

Expr Expr::negate(Expr operand) {
  Expr e;
  e.kind = Kind::Neg;
  e.args.push_back(std::move(operand));
  return e;
}

Expr Expr::power(Expr base, unsigned exponent) {
  Expr e;
  e.kind = Kind::Pow;
  e.exponent = exponent;
  e.args.push_back(std::move(base));
  return e;
}

Expr Expr::integer(Integer v) {
  Expr e;
  e.kind = Kind::Int;
  e.value = std::move(v);
  return e;
}

Expr Expr::scalar(Symbol s) {
  Expr e;
  e.kind = Kind::Scalar;
  e.symbol = s;
  return e;
}

Expr Expr::named(std::string name) {
  Expr e;
  e.kind = Kind::Name;
  e.name = std::move(name);
  return e;
}

Expr Expr::sequence(Atom atom) {
  Expr e;
  e.kind = Kind::Seq;
  e.atom = std::move(atom);
  return e;
}

bool operator==(const Expr& x, const Expr& y) {
  if (x.kind != y.kind || x.args != y.args) return false;
  switch (x.kind) {
    case Expr::Kind::Int: return x.value == y.value;
    case Expr::Kind::Pow: return x.exponent == y.exponent;
    case Expr::Kind::Scalar: return x.symbol == y.symbol;
    case Expr::Kind::Name: return x.name == y.name;
    case Expr::Kind::Seq: return x.atom == y.atom;
    default: return true;
  }
}

bool operator==(const Identity& x, const Identity& y) {
  return x.vars == y.vars && x.lets == y.lets && x.pins == y.pins && x.lhs == y.lhs && x.rhs == y.rhs &&
         x.label == y.label;
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok { Ident, Int, Plus, Minus, Star, Caret, LParen, RParen, Comma, Colon, Assign, EqEq, Slash, Label, End };

struct Token {
  Tok kind;
  std::string text;
  SourceLoc loc;
  std::size_t begin = 0;
  std::size_t end = 0;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::Label: return "label comment";
    default: return "'" + t.text + "'";
  }
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  int line = 1, column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    Token t{Tok::End, {}, {line, column}, i, i};
    if (ch == '#') {
      std::size_t eol = text.find('\n', i);
      if (eol == std::string_view::npos) eol = text.size();
      std::string_view body = text.substr(i, eol - i);
      if (body.size() >= 2 && body[1] == ':') {
        std::string label(body.substr(2));
        label.erase(0, label.find_first_not_of(" \t"));
        label.erase(label.find_last_not_of(" \t\r") + 1);
        t.kind = Tok::Label;
        t.text = label;
        t.end = eol;
        out.push_back(t);
      }
      advance(eol - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      t.kind = Tok::Ident;
      t.text = std::string(text.substr(i, j - i));
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      t.kind = Tok::Int;
      t.text = std::string(text.substr(i, j - i));
    } else if (ch == '=' && i + 1 < text.size() && text[i + 1] == '=') {
      t.kind = Tok::EqEq;
      t.text = "==";
    } else {
      switch (ch) {
        case '+': t.kind = Tok::Plus; break;
        case '-': t.kind = Tok::Minus; break;
        case '*': t.kind = Tok::Star; break;
        case '^': t.kind = Tok::Caret; break;
        case '(': t.kind = Tok::LParen; break;
        case ')': t.kind = Tok::RParen; break;
        case ',': t.kind = Tok::Comma; break;
        case ':': t.kind = Tok::Colon; break;
        case '=': t.kind = Tok::Assign; break;
        case '/': t.kind = Tok::Slash; break;
        default:
          throw ParseError(ParseError::Kind::Syntax, t.loc, std::string("unexpected character '") + ch + "'");
      }
      t.text = std::string(1, ch);
    }
    t.end = i + t.text.size();
    advance(t.text.size());
    out.push_back(t);
  }
  out.push_back(Token{Tok::End, {}, {line, column}, text.size(), text.size()});
  return out;
}

// ---------------------------------------------------------------------------
// Parser

const std::set<std::string, std::less<>> kReserved = {"W", "V", "u", "p", "q", "a", "b", "c", "d", "let", "forall", "with"};

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options) : text_(text), tokens_(lex(text)), options_(options) {}

  Document document() {
    Document doc;
    std::string pending_label;
    while (peek().kind != Tok::End) {
      const Token& t = peek();
      if (t.kind == Tok::Label) {
        pending_label = t.text;
        ++pos_;
      } else if (t.kind == Tok::Ident && t.text == "let") {
        doc.lets.push_back(let_binding(doc.lets));
      } else if (t.kind == Tok::Ident && t.text == "forall") {
        Identity id = identity(doc.lets);
        id.label = std::move(pending_label);
        pending_label.clear();
        doc.identities.push_back(std::move(id));
      } else {
        fail(ParseError::Kind::Syntax, t, "unexpected " + describe(t), "'let' or 'forall'");
      }
    }
    return doc;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(ParseError::Kind kind, const Token& at, const std::string& message,
                         std::string expected = {}) const {
    throw ParseError(kind, at.loc, message, std::move(expected));
  }

  const Token& expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) fail(ParseError::Kind::Syntax, peek(), "unexpected " + describe(peek()), what);
    return next();
  }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  long small_int(const Token& t) const {
    long v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || v > (1L << 30)) fail(ParseError::Kind::Syntax, t, "integer " + t.text + " is too large here");
    return v;
  }

  LetBinding let_binding(const std::vector<LetBinding>& earlier) {
    next();  // let
    const Token& name = expect(Tok::Ident, "binding name");
    if (kReserved.count(name.text)) fail(ParseError::Kind::Syntax, name, "'" + name.text + "' is reserved", "binding name");
    for (const auto& l : earlier)
      if (l.name == name.text) fail(ParseError::Kind::Syntax, name, "'" + name.text + "' is already bound");
    expect(Tok::Assign, "'='");
    vars_.clear();
    lets_ = &earlier;
    in_let_ = true;
    Expr value = expr();
    in_let_ = false;
    return LetBinding{name.text, std::move(value), name.loc};
  }

  Identity identity(const std::vector<LetBinding>& lets) {
    const Token& start = next();  // forall
    Identity id;
    id.loc = start.loc;
    id.lets = lets;
    lets_ = &lets;
    vars_.clear();
    do {
      const Token& v = expect(Tok::Ident, "index variable");
      if (kReserved.count(v.text)) fail(ParseError::Kind::Syntax, v, "'" + v.text + "' is reserved", "index variable");
      if (std::find(vars_.begin(), vars_.end(), v.text) != vars_.end())
        fail(ParseError::Kind::Syntax, v, "index variable '" + v.text + "' declared twice");
      for (const auto& l : lets)
        if (l.name == v.text) fail(ParseError::Kind::Syntax, v, "'" + v.text + "' is a let-bound name");
      vars_.push_back(v.text);
    } while (accept(Tok::Comma));
    if (peek().kind == Tok::Ident && peek().text == "with") {
      next();
      do {
        const Token& s = expect(Tok::Ident, "scalar symbol");
        auto sym = symbol_from_name(s.text);
        if (!sym) fail(ParseError::Kind::UnknownName, s, "'" + s.text + "' is not a scalar symbol", "one of p q a b c d");
        if (id.pins.count(*sym)) fail(ParseError::Kind::Syntax, s, "'" + s.text + "' pinned twice");
        expect(Tok::Assign, "'='");
        bool negative = accept(Tok::Minus);
        const Token& num = expect(Tok::Int, "integer");
        Rational value{Integer(num.text)};
        if (accept(Tok::Slash)) {
          const Token& den = expect(Tok::Int, "denominator");
          Integer d(den.text);
          if (d == 0) fail(ParseError::Kind::Syntax, den, "zero denominator");
          value /= Rational(d);
        }
        if (negative) value = -value;
        if (*sym == Symbol::Q && value == 0) fail(ParseError::Kind::Syntax, num, "q must be pinned to a nonzero value");
        id.pins.emplace(*sym, value);
      } while (accept(Tok::Comma));
    }
    expect(Tok::Colon, "':'");
    id.vars = vars_;
    id.lhs = expr();
    expect(Tok::EqEq, "'=='");
    id.rhs = expr();
    id.source = std::string(text_.substr(start.begin, tokens_[pos_ - 1].end - start.begin));
    return id;
  }

  Expr expr() {
    Expr e = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      auto kind = next().kind == Tok::Plus ? Expr::Kind::Add : Expr::Kind::Sub;
      e = Expr::binary(kind, std::move(e), term());
    }
    return e;
  }

  Expr term() {
    bool negative = accept(Tok::Minus);
    Expr e = factor();
    while (accept(Tok::Star)) e = Expr::binary(Expr::Kind::Mul, std::move(e), factor());
    return negative ? Expr::negate(std::move(e)) : e;
  }

  Expr factor() {
    Expr e = base();
    if (accept(Tok::Caret)) {
      const Token& t = peek();
      if (t.kind != Tok::Int)
        fail(ParseError::Kind::NonIntegerExponent, t, "exponent must be a non-negative integer literal, got " + describe(t),
             "integer");
      next();
      e = Expr::power(std::move(e), static_cast<unsigned>(small_int(t)));
    }
    return e;
  }

  Expr base() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int:
        next();
        return Expr::integer(Integer(t.text));
      case Tok::LParen: {
        next();
        Expr e = expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Ident: break;
      default: fail(ParseError::Kind::Syntax, t, "unexpected " + describe(t), "expression");
    }
    next();
    if (auto kind = sequence_from_name(t.text)) {
      expect(Tok::LParen, "'('");
      LinForm index = linform();
      expect(Tok::RParen, "')'");
      if (in_let_) fail(ParseError::Kind::Syntax, t, "let-bindings must be scalar; sequence terms are not allowed");
      return Expr::sequence(Atom{*kind, std::move(index)});
    }
    if (t.text == "q" && peek().kind == Tok::Caret && peek(1).kind == Tok::LParen) {
      next();
      next();
      LinForm exponent = linform();
      expect(Tok::RParen, "')'");
      return Expr::sequence(Atom{SequenceKind::GeoQ, std::move(exponent)});
    }
    if (auto sym = symbol_from_name(t.text)) return Expr::scalar(*sym);
    if (lets_ != nullptr)
      for (const auto& l : *lets_)
        if (l.name == t.text) return Expr::named(t.text);
    if (std::find(vars_.begin(), vars_.end(), t.text) != vars_.end())
      fail(ParseError::Kind::UnknownName, t, "index variable '" + t.text + "' may only appear inside an index",
           "scalar, let-bound name or sequence term");
    fail(ParseError::Kind::UnknownName, t, "unknown name '" + t.text + "'", "scalar, let-bound name or sequence term");
  }

  // linform := ['+'|'-'] lterm (('+'|'-') lterm)*,  lterm := INT ['*' IVAR] | IVAR
  LinForm linform() {
    const Token& start = peek();
    LinForm f;
    f.coeffs.assign(vars_.size(), 0);
    long sign = 1;
    if (accept(Tok::Minus))
      sign = -1;
    else
      accept(Tok::Plus);
    while (true) {
      const Token& t = peek();
      long coeff = 1;
      bool has_var = true;
      if (t.kind == Tok::Int) {
        next();
        coeff = small_int(t);
        has_var = accept(Tok::Star);
      }
      if (has_var) {
        const Token& v = peek();
        if (v.kind != Tok::Ident) fail(ParseError::Kind::Syntax, v, "unexpected " + describe(v), "index variable or integer");
        next();
        auto it = std::find(vars_.begin(), vars_.end(), v.text);
        if (it == vars_.end()) fail(ParseError::Kind::UndeclaredIndex, v, "index variable '" + v.text + "' is not declared");
        f.coeffs[static_cast<std::size_t>(it - vars_.begin())] += sign * coeff;
      } else {
        f.constant += sign * coeff;
      }
      if (accept(Tok::Plus))
        sign = 1;
      else if (accept(Tok::Minus))
        sign = -1;
      else
        break;
    }
    for (std::size_t i = 0; i < f.coeffs.size(); ++i)
      if (std::labs(f.coeffs[i]) > options_.slope_cap)
        fail(ParseError::Kind::SlopeCapExceeded, start,
             "coefficient " + std::to_string(f.coeffs[i]) + " of '" + vars_[i] + "' exceeds the slope cap " +
                 std::to_string(options_.slope_cap));
    return f;
  }

  std::string_view text_;
  std::vector<Token> tokens_;
  ParseOptions options_;
  std::size_t pos_ = 0;
  std::vector<std::string> vars_;
  const std::vector<LetBinding>* lets_ = nullptr;
  bool in_let_ = false;
};

}  // namespace

Document parse(std::string_view text, const ParseOptions& options) { return Parser(text, options).document(); }

Identity parse_identity(std::string_view text, const ParseOptions& options) {
  Document doc = parse(text, options);
  if (doc.identities.size() != 1)
    throw ParseError(ParseError::Kind::Syntax, SourceLoc{},
                     "expected exactly one identity, found " + std::to_string(doc.identities.size()));
  return std::move(doc.identities.front());
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

// Binding strength of the node as written: sums < leading minus < products < powers < atoms.
int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Neg: return 2;
    case Expr::Kind::Mul: return 3;
    case Expr::Kind::Pow: return 4;
    default: return 5;
  }
}

std::string wrap(const Expr& e, bool parens, std::span<const std::string> vars) {
  std::string s = render(e, vars);
  return parens ? "(" + s + ")" : s;
}

std::string render_rational(const Rational& r) { return r.get_str(); }

}  // namespace

std::string render(const Expr& e, std::span<const std::string> vars) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return render(e.args[0], vars) + (e.kind == Expr::Kind::Add ? " + " : " - ") +
             wrap(e.args[1], precedence(e.args[1]) <= 1, vars);
    case Expr::Kind::Neg: return "-" + wrap(e.args[0], precedence(e.args[0]) < 3, vars);
    case Expr::Kind::Mul:
      return wrap(e.args[0], precedence(e.args[0]) < 3, vars) + "*" + wrap(e.args[1], precedence(e.args[1]) <= 3, vars);
    case Expr::Kind::Pow: return wrap(e.args[0], precedence(e.args[0]) < 5, vars) + "^" + std::to_string(e.exponent);
    case Expr::Kind::Int: return e.value.get_str();
    case Expr::Kind::Scalar: return std::string(symbol_name(e.symbol));
    case Expr::Kind::Name: return e.name;
    case Expr::Kind::Seq: return e.atom.str(vars);
  }
  return {};
}

std::string render(const Identity& id) {
  std::string out;
  for (const auto& l : id.lets) out += "let " + l.name + " = " + render(l.value, {}) + "\n";
  if (!id.label.empty()) out += "#: " + id.label + "\n";
  out += "forall ";
  for (std::size_t i = 0; i < id.vars.size(); ++i) out += (i ? ", " : "") + id.vars[i];
  if (!id.pins.empty()) {
    out += " with ";
    bool first = true;
    for (const auto& [s, v] : id.pins) {
      out += (first ? "" : ", ") + std::string(symbol_name(s)) + " = " + render_rational(v);
      first = false;
    }
  }
  out += ": " + render(id.lhs, id.vars) + " == " + render(id.rhs, id.vars) + "\n";
  return out;
}

std::string render(const Document& doc) {
  // Lets are emitted just before the first identity that sees them.
  std::string out;
  std::size_t emitted = 0;
  for (const auto& id : doc.identities) {
    for (; emitted < id.lets.size(); ++emitted)
      out += "let " + id.lets[emitted].name + " = " + render(id.lets[emitted].value, {}) + "\n";
    Identity bare = id;
    bare.lets.clear();
    out += render(bare);
  }
  for (; emitted < doc.lets.size(); ++emitted)
    out += "let " + doc.lets[emitted].name + " = " + render(doc.lets[emitted].value, {}) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

const LetBinding& lookup(std::span<const LetBinding> lets, const std::string& name) {
  for (const auto& l : lets)
    if (l.name == name) return l;
  throw std::invalid_argument("unbound name '" + name + "'");
}

}  // namespace

Rational evaluate(const Expr& e, std::span<const LetBinding> lets, const Assignment& at,
                  std::span<const long> index_values) {
  switch (e.kind) {
    case Expr::Kind::Add: return evaluate(e.args[0], lets, at, index_values) + evaluate(e.args[1], lets, at, index_values);
    case Expr::Kind::Sub: return evaluate(e.args[0], lets, at, index_values) - evaluate(e.args[1], lets, at, index_values);
    case Expr::Kind::Mul: return evaluate(e.args[0], lets, at, index_values) * evaluate(e.args[1], lets, at, index_values);
    case Expr::Kind::Neg: return -evaluate(e.args[0], lets, at, index_values);
    case Expr::Kind::Pow: return rational_pow(evaluate(e.args[0], lets, at, index_values), static_cast<int>(e.exponent));
    case Expr::Kind::Int: return Rational(e.value);
    case Expr::Kind::Scalar: return at[e.symbol];
    case Expr::Kind::Name: return evaluate(lookup(lets, e.name).value, lets, at, {});
    case Expr::Kind::Seq: return numeric_term(e.atom.kind, e.atom.index.evaluate(index_values), at);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Normal forms

NormalForm::NormalForm(const LaurentPoly& scalar) { add_monomial({}, scalar); }

NormalForm NormalForm::atom(const Atom& atom) {
  NormalForm nf;
  nf.add_monomial({atom}, LaurentPoly(1));
  return nf;
}

bool NormalForm::is_index_free() const {
  for (const auto& [atoms, coeff] : monomials_)
    for (const auto& a : atoms)
      if (!a.index.is_constant()) return false;
  return true;
}

void NormalForm::add_monomial(std::vector<Atom> atoms, LaurentPoly coeff) {
  // Fold every q-power into at most one atom with zero constant part.
  LinForm qexp;
  bool has_q = false;
  std::vector<Atom> kept;
  kept.reserve(atoms.size());
  for (auto& a : atoms) {
    if (a.kind != SequenceKind::GeoQ) {
      kept.push_back(std::move(a));
      continue;
    }
    has_q = true;
    if (qexp.coeffs.size() < a.index.coeffs.size()) qexp.coeffs.resize(a.index.coeffs.size(), 0);
    for (std::size_t i = 0; i < a.index.coeffs.size(); ++i) qexp.coeffs[i] += a.index.coeffs[i];
    qexp.constant += a.index.constant;
  }
  if (has_q) {
    if (qexp.constant != 0) coeff *= LaurentPoly::q_power(static_cast<int>(qexp.constant));
    qexp.constant = 0;
    if (!qexp.is_constant()) kept.push_back(Atom{SequenceKind::GeoQ, std::move(qexp)});
  }
  if (coeff.is_zero()) return;
  std::sort(kept.begin(), kept.end());
  auto [it, inserted] = monomials_.try_emplace(std::move(kept), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) monomials_.erase(it);
  }
}

NormalForm NormalForm::operator-() const {
  NormalForm r = *this;
  for (auto& [atoms, coeff] : r.monomials_) coeff = -coeff;
  return r;
}

NormalForm operator+(const NormalForm& f, const NormalForm& g) {
  NormalForm r = f;
  for (const auto& [atoms, coeff] : g.monomials_) r.add_monomial(atoms, coeff);
  return r;
}

NormalForm operator-(const NormalForm& f, const NormalForm& g) { return f + (-g); }

NormalForm operator*(const NormalForm& f, const NormalForm& g) {
  NormalForm r;
  for (const auto& [a1, c1] : f.monomials_)
    for (const auto& [a2, c2] : g.monomials_) {
      std::vector<Atom> atoms = a1;
      atoms.insert(atoms.end(), a2.begin(), a2.end());
      r.add_monomial(std::move(atoms), c1 * c2);
    }
  return r;
}

Rational NormalForm::evaluate(const Assignment& at, std::span<const long> index_values) const {
  Rational total = 0;
  for (const auto& [atoms, coeff] : monomials_) {
    Rational term = coeff.evaluate(at);
    for (const auto& a : atoms) term *= numeric_term(a.kind, a.index.evaluate(index_values), at);
    total += term;
  }
  return total;
}

std::string NormalForm::render(std::span<const std::string> vars) const {
  if (monomials_.empty()) return "0";
  std::string out;
  for (const auto& [atoms, coeff] : monomials_) {
    std::string factors;
    for (const auto& a : atoms) factors += (factors.empty() ? "" : "*") + a.str(vars);
    bool negative = coeff.terms().begin()->second < 0;
    LaurentPoly magnitude = negative ? -coeff : coeff;
    std::string scalar = magnitude.dsl();
    std::string term = magnitude.size() > 1 ? "(" + scalar + ")" : scalar;
    if (!factors.empty()) term = magnitude == LaurentPoly(1) ? factors : term + "*" + factors;
    if (out.empty())
      out = negative ? "-" + term : term;
    else
      out += (negative ? " - " : " + ") + term;
  }
  return out;
}

NormalForm normalize(const Expr& e, std::span<const LetBinding> lets) {
  switch (e.kind) {
    case Expr::Kind::Add: return normalize(e.args[0], lets) + normalize(e.args[1], lets);
    case Expr::Kind::Sub: return normalize(e.args[0], lets) - normalize(e.args[1], lets);
    case Expr::Kind::Mul: return normalize(e.args[0], lets) * normalize(e.args[1], lets);
    case Expr::Kind::Neg: return -normalize(e.args[0], lets);
    case Expr::Kind::Pow: {
      NormalForm base = normalize(e.args[0], lets);
      NormalForm r{LaurentPoly(1)};
      for (unsigned k = 0; k < e.exponent; ++k) r = r * base;
      return r;
    }
    case Expr::Kind::Int: return NormalForm(LaurentPoly(e.value));
    case Expr::Kind::Scalar: return NormalForm(LaurentPoly::symbol(e.symbol));
    case Expr::Kind::Name: return normalize(lookup(lets, e.name).value, lets);
    case Expr::Kind::Seq: return NormalForm::atom(e.atom);
  }
  return {};
}

NormalForm normalize(const Identity& id) { return normalize(id.lhs, id.lets) - normalize(id.rhs, id.lets); }

NormalForm substitute_index(const NormalForm& nf, std::size_t var, long value) {
  NormalForm r;
  for (const auto& [atoms, coeff] : nf.monomials_) {
    std::vector<Atom> shifted = atoms;
    for (auto& a : shifted) {
      long c = a.index.coefficient(var);
      if (c == 0) continue;
      a.index.constant += c * value;
      a.index.coeffs[var] = 0;
    }
    r.add_monomial(std::move(shifted), coeff);
  }
  return r;
}

}  // namespace horadam
