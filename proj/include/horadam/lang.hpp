#pragma once

// Identity files: syntax tree, parser, rendering and normal forms.
//
//   # comment            (a comment starting with "#:" labels the next identity)
//   let e = p*a*b - q*a^2 - b^2
//   forall n: W(n+2)*W(n+4) - W(n+3)^2 == e*q^(n+2)
//   forall n with p = 1, q = -1: u(n+1)*u(n+2)*u(n+6) - u(n+3)^3 == q^(n)*u(n)
//
// Index expressions are integer-linear forms in the declared index variables.
// The optional `with` clause pins scalars to rational values for one identity.

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "horadam/ring.hpp"
#include "horadam/sequences.hpp"

namespace horadam {

struct SourceLoc {
  int line = 1;
  int column = 1;
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, UndeclaredIndex, NonIntegerExponent, SlopeCapExceeded, UnknownName };

  ParseError(Kind kind, SourceLoc loc, const std::string& message, std::string expected = {});

  Kind kind() const { return kind_; }
  SourceLoc loc() const { return loc_; }
  /// Description of what the parser was looking for; may be empty.
  const std::string& expected() const { return expected_; }

 private:
  Kind kind_;
  SourceLoc loc_;
  std::string expected_;
};

std::string_view to_string(ParseError::Kind kind);

/// sum_i coeffs[i] * var_i + constant, one coefficient per declared variable.
struct LinForm {
  std::vector<long> coeffs;
  long constant = 0;

  long coefficient(std::size_t var) const { return var < coeffs.size() ? coeffs[var] : 0; }
  bool is_constant() const;
  long evaluate(std::span<const long> values) const;
  /// `2*n - j + 3`
  std::string str(std::span<const std::string> vars) const;

  bool operator==(const LinForm& o) const;
  std::strong_ordering operator<=>(const LinForm& o) const;
};

/// One sequence occurrence. SequenceKind::GeoQ stands for q^(index).
struct Atom {
  SequenceKind kind;
  LinForm index;

  std::string str(std::span<const std::string> vars) const;
  bool operator==(const Atom&) const = default;
  std::strong_ordering operator<=>(const Atom& o) const;
};

struct Expr {
  enum class Kind { Add, Sub, Mul, Neg, Pow, Int, Scalar, Name, Seq };

  Kind kind = Kind::Int;
  std::vector<Expr> args;
  Integer value;          // Int
  unsigned exponent = 0;  // Pow
  Symbol symbol{};        // Scalar
  std::string name;       // Name
  Atom atom{};            // Seq

  static Expr binary(Kind kind, Expr lhs, Expr rhs);
  static Expr negate(Expr operand);
  static Expr power(Expr base, unsigned exponent);
  static Expr integer(Integer v);
  static Expr scalar(Symbol s);
  static Expr named(std::string name);
  static Expr sequence(Atom atom);

  friend bool operator==(const Expr& x, const Expr& y);
};

struct LetBinding {
  std::string name;
  Expr value;
  SourceLoc loc;

  friend bool operator==(const LetBinding& x, const LetBinding& y) { return x.name == y.name && x.value == y.value; }
};

struct Identity {
  std::vector<std::string> vars;
  std::vector<LetBinding> lets;  // file-scoped bindings preceding the identity
  Pins pins;
  Expr lhs;
  Expr rhs;
  std::string label;
  std::string source;  // the identity's text as written
  SourceLoc loc;

  /// Structural equality: ignores source text and location.
  friend bool operator==(const Identity& x, const Identity& y);
};

struct Document {
  std::vector<LetBinding> lets;
  std::vector<Identity> identities;
};

struct ParseOptions {
  long slope_cap = 8;
};

Document parse(std::string_view text, const ParseOptions& options = {});
/// Parses text holding exactly one identity (plus any let-bindings).
Identity parse_identity(std::string_view text, const ParseOptions& options = {});

std::string render(const Expr& e, std::span<const std::string> vars);
std::string render(const Identity& id);
std::string render(const Document& doc);

/// Exact value of an expression, sequence atoms via numeric_term.
Rational evaluate(const Expr& e, std::span<const LetBinding> lets, const Assignment& at,
                  std::span<const long> index_values);

/// Sum of monomials: scalar coefficient times a sorted multiset of atoms.
/// At most one q-power atom per monomial, with zero constant part.
class NormalForm {
 public:
  using Monomials = std::map<std::vector<Atom>, LaurentPoly>;

  NormalForm() = default;
  explicit NormalForm(const LaurentPoly& scalar);
  static NormalForm atom(const Atom& atom);

  const Monomials& monomials() const { return monomials_; }
  bool is_zero() const { return monomials_.empty(); }
  /// No atom depends on any index variable.
  bool is_index_free() const;

  NormalForm operator-() const;
  friend NormalForm operator+(const NormalForm& f, const NormalForm& g);
  friend NormalForm operator-(const NormalForm& f, const NormalForm& g);
  friend NormalForm operator*(const NormalForm& f, const NormalForm& g);
  friend bool operator==(const NormalForm& f, const NormalForm& g) { return f.monomials_ == g.monomials_; }

  Rational evaluate(const Assignment& at, std::span<const long> index_values) const;

  /// Expression text that parses back to the same normal form.
  std::string render(std::span<const std::string> vars) const;

 private:
  friend NormalForm substitute_index(const NormalForm& nf, std::size_t var, long value);
  void add_monomial(std::vector<Atom> atoms, LaurentPoly coeff);

  Monomials monomials_;
};

NormalForm normalize(const Expr& e, std::span<const LetBinding> lets);
/// Normal form of lhs - rhs.
NormalForm normalize(const Identity& id);

/// Replaces index variable `var` by `value` everywhere, folding q-powers that
/// become constant into the scalar.
NormalForm substitute_index(const NormalForm& nf, std::size_t var, long value);

}  // namespace horadam
