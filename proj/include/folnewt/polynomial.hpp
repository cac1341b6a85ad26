#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "folnewt/labels.hpp"

namespace folnewt {

using Rational = mpq_class;

std::string to_string(const Rational& q);

enum class VarKind { divisor, free, exceptional };

std::string_view to_string(VarKind kind);

/// A power product of named variables. Factors are sorted by natural order
/// of the names and never carry a zero exponent.
class Monomial {
 public:
  using Factor = std::pair<std::string, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);

  static Monomial variable(std::string name, std::uint32_t exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t degree() const;
  std::uint32_t degree(std::string_view var) const;
  LabelSet variables() const;

  bool divides(const Monomial& other) const;
  /// this / divisor; requires divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  /// Componentwise minimum.
  Monomial gcd(const Monomial& other) const;

  /// Factors whose variable lies in `vars`.
  Monomial restricted_to(const LabelSet& vars) const;
  /// Factors whose variable does not lie in `vars`.
  Monomial without(const LabelSet& vars) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  /// "x1^2*x2"; "1" for the empty monomial.
  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
};

/// Graded lexicographic comparison, with variables ranked by natural order of
/// their names (x1 > x2 > ... > y).
int grlex_compare(const Monomial& a, const Monomial& b);

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) < 0; }
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are kept in increasing grlex order; zero coefficients never stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexLess>;

  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT
  Polynomial(int constant) : Polynomial(Rational(constant)) {}   // NOLINT

  static Polynomial variable(std::string name);
  static Polynomial term(const Rational& coefficient, Monomial monomial);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Monomial& m) const;
  LabelSet variables() const;
  std::uint32_t total_degree() const;
  std::uint32_t degree(std::string_view var) const;

  /// Largest term in grlex order. Requires a nonzero polynomial.
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Monomial& m);
  Polynomial operator-() const;

  Polynomial scaled(const Rational& c) const;
  Polynomial pow(unsigned exponent) const;
  /// Divides every term by `m`; throws std::domain_error when inexact.
  Polynomial divided_by(const Monomial& m) const;
  /// Scales so that the grlex-leading coefficient is one (zero stays zero).
  Polynomial monic() const;

  /// Evaluates with all variables bound; throws std::out_of_range otherwise.
  Rational evaluate(const std::map<std::string, Rational, NaturalLess>& point) const;
  /// Replaces the variables bound in `values` by constants.
  Polynomial evaluate_partial(const std::map<std::string, Rational, NaturalLess>& values) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Canonical text in the input grammar, terms in decreasing grlex order.
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  TermMap terms_;
};

using Substitution = std::map<std::string, Polynomial, NaturalLess>;

/// Ring-morphism image of `p`; variables missing from `subst` map to themselves.
Polynomial poly_substitute(const Polynomial& p, const Substitution& subst);

/// Decomposes p = sum over sigma of x^sigma * a_sigma, where sigma ranges over
/// monomials in the labels of `divisor_vars` and a_sigma is free of them.
using DivisorExpansion = std::map<Monomial, Polynomial, GrlexLess>;
DivisorExpansion divisor_expansion(const Polynomial& p, const LabelSet& divisor_vars);

Polynomial derivative(const Polynomial& p, std::string_view var);

/// Componentwise minimum of the exponents in `divisor_vars` over all terms of
/// all nonzero inputs. Throws std::invalid_argument when every input is zero.
Monomial monomial_content(std::span<const Polynomial> ps, const LabelSet& divisor_vars);

/// Exact quotient a / b; throws std::domain_error if b does not divide a.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

/// Greatest common divisor over the rationals, normalized monic in grlex
/// (gcd(0, 0) = 0).
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

struct GcdCheck {
  bool constant = true;
  Polynomial gcd;
};

/// True iff the n-ary gcd is a nonzero constant; the gcd is kept as evidence.
/// Throws std::invalid_argument when every input is zero.
GcdCheck gcd_is_constant(std::span<const Polynomial> ps);

}  // namespace folnewt
