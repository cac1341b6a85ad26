#include <random>

#include "doctest.h"
#include "folnewt/parser.hpp"
#include "folnewt/polynomial.hpp"
#include "unit/helpers.hpp"

using namespace folnewt;
using testing_helpers::P;

namespace {

VariableTable table(const std::vector<std::string>& divisor, const std::vector<std::string>& free) {
  VariableTable t;
  for (const auto& d : divisor) t.declare(d, VarKind::divisor);
  for (const auto& f : free) t.declare(f, VarKind::free);
  return t;
}

Polynomial random_poly(std::mt19937_64& rng) {
  static const std::vector<std::string> vars = {"x1", "x2", "y"};
  std::uniform_int_distribution<int> terms(0, 4), coeff(-5, 5), den(1, 3), exp(0, 3);
  Polynomial p;
  for (int t = terms(rng); t > 0; --t) {
    std::vector<Monomial::Factor> f;
    for (const auto& v : vars) {
      const int e = exp(rng);
      if (e > 0) f.emplace_back(v, e);
    }
    p += Polynomial::term(Rational(coeff(rng), den(rng)), Monomial(f));
  }
  return p;
}

}  // namespace

TEST_CASE("parse_poly reads the grammar") {
  const VariableTable t = table({"x1", "x2"}, {"y"});
  const Polynomial p = parse_poly("x1^2*x2 - 3/2*y", t);
  CHECK(p.size() == 2);
  CHECK(p.coefficient(Monomial({{"x1", 2}, {"x2", 1}})) == 1);
  CHECK(p.coefficient(Monomial::variable("y")) == Rational(-3, 2));
  CHECK(parse_poly("0", t).is_zero());
  CHECK(parse_poly("(x1 - x2)*(x1 + x2)", t) == parse_poly("x1^2 - x2^2", t));
  CHECK(parse_poly("-(x1)^0 + 2^3", t) == Polynomial(7));
}

TEST_CASE("parse_poly reports errors with kind and position") {
  const VariableTable t = table({"x1"}, {});
  auto kind_of = [&](const std::string& text) {
    try {
      parse_poly(text, t);
    } catch (const ParseError& e) {
      return e.kind();
    }
    FAIL("no error for " << text);
    return ParseError::Kind::syntax;
  };
  CHECK(kind_of("x1 +") == ParseError::Kind::syntax);
  CHECK(kind_of("2 x1") == ParseError::Kind::syntax);
  CHECK(kind_of("z") == ParseError::Kind::unknown_variable);
  CHECK(kind_of("x1^y") == ParseError::Kind::bad_exponent);
  CHECK(kind_of("x1^(1/2)") == ParseError::Kind::bad_exponent);
  try {
    parse_poly("x1 + z", t);
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("print then parse is the identity") {
  std::mt19937_64 rng(11);
  const VariableTable t = table({"x1", "x2"}, {"y"});
  for (int i = 0; i < 200; ++i) {
    const Polynomial p = random_poly(rng);
    CHECK(parse_poly(p.to_string(), t) == p);
  }
}

TEST_CASE("ring axioms on random inputs") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    const Polynomial p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK((p + q) * r == p * r + q * r);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK((p - p).is_zero());
  }
}

TEST_CASE("divisor_expansion partitions the polynomial") {
  const Polynomial p = P("3*x1^2*y + x1^2*x2 - y^2");
  const DivisorExpansion e = divisor_expansion(p, LabelSet{"x1", "x2"});
  REQUIRE(e.size() == 3);
  CHECK(e.at(Monomial::variable("x1", 2)) == P("3*y"));
  CHECK(e.at(Monomial({{"x1", 2}, {"x2", 1}})) == Polynomial(1));
  CHECK(e.at(Monomial()) == P("-y^2"));
  CHECK(divisor_expansion(Polynomial(), LabelSet{"x1"}).empty());
  const DivisorExpansion c = divisor_expansion(P("y^3"), LabelSet{"x1"});
  REQUIRE(c.size() == 1);
  CHECK(c.at(Monomial()) == P("y^3"));

  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const Polynomial q = random_poly(rng);
    Polynomial sum;
    for (const auto& [sigma, a] : divisor_expansion(q, LabelSet{"x1", "x2"})) {
      CHECK_FALSE(a.is_zero());
      CHECK_FALSE(a.variables().contains("x1"));
      sum += a * sigma;
    }
    CHECK(sum == q);
  }
}

TEST_CASE("monomial_content") {
  const std::vector<Polynomial> a = {P("x1^2*x2*y"), P("x1^3*x2^2")};
  CHECK(monomial_content(a, LabelSet{"x1", "x2"}) == Monomial({{"x1", 2}, {"x2", 1}}));
  const std::vector<Polynomial> b = {P("x1 + y"), P("x1^2")};
  CHECK(monomial_content(b, LabelSet{"x1"}).is_one());
  const std::vector<Polynomial> c = {P("x1*e^2"), P("e^3")};
  CHECK(monomial_content(c, LabelSet{"e"}) == Monomial::variable("e", 2));
  const std::vector<Polynomial> zero = {Polynomial(), Polynomial()};
  CHECK_THROWS_AS(monomial_content(zero, LabelSet{"x1"}), std::invalid_argument);
}

TEST_CASE("poly_substitute") {
  CHECK(poly_substitute(P("x2"), {{"x2", P("e*x2")}}) == P("e*x2"));
  CHECK(poly_substitute(P("x1*x2"), {{"x1", P("e")}, {"x2", P("e*x2")}}) == P("e^2*x2"));
  CHECK(poly_substitute(P("y"), {{"y", P("y")}}) == P("y"));
  CHECK(poly_substitute(P("x^2 + 1"), {{"x", P("x + 1")}}) == P("x^2 + 2*x + 2"));
}

TEST_CASE("gcd_is_constant") {
  const std::vector<Polynomial> a = {P("x1 - x2"), P("2*x1 - 2*x2")};
  const GcdCheck ga = gcd_is_constant(a);
  CHECK_FALSE(ga.constant);
  CHECK(ga.gcd == P("x1 - x2"));
  const std::vector<Polynomial> b = {P("x1"), P("x2")};
  CHECK(gcd_is_constant(b).constant);
  const std::vector<Polynomial> c = {P("-3*x^3"), P("2*y")};
  CHECK(gcd_is_constant(c).constant);
  CHECK(poly_gcd(P("(x + y)*(x - 1)"), P("(x + y)*(y + 2)")) == P("x + y"));
  const std::vector<Polynomial> zero = {Polynomial()};
  CHECK_THROWS_AS(gcd_is_constant(zero), std::invalid_argument);
}

TEST_CASE("exact_divide and derivative") {
  CHECK(exact_divide(P("x^2 - y^2"), P("x - y")) == P("x + y"));
  CHECK_THROWS_AS(exact_divide(P("x^2 + 1"), P("x - 1")), std::domain_error);
  CHECK(derivative(P("x^3*y + 2*y"), "x") == P("3*x^2*y"));
}

TEST_CASE("labels compare naturally") {
  CHECK(natural_compare("x2", "x10") < 0);
  const LabelSet s{"x10", "x2", "x1"};
  CHECK(s.items() == std::vector<std::string>{"x1", "x2", "x10"});
  CHECK(s.subsets().size() == 8);
  CHECK(s.subsets().front().empty());
  CHECK((s - LabelSet{"x2"}) == LabelSet{"x1", "x10"});
}
