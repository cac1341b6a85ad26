#include "doctest.h"
#include "folnewt/foliated.hpp"
#include "unit/helpers.hpp"

using namespace folnewt;
using testing_helpers::P;
using testing_helpers::space;

namespace {

const groebner::Fuel fuel;

Atlas worked() { return space({"x1", "x2"}, {}, {{"x1", "x2"}, {"x2", "x1"}}); }
Atlas degenerate() {
  return space({"x1", "x2"}, {}, {{"x1", "x1 - x2"}, {"x2", "2*x1 - 2*x2 + x1^2"}});
}
Atlas cusp() { return space({"x"}, {"y"}, {{"x", "-3*x^3"}, {"y", "2*y"}}); }

}  // namespace

TEST_CASE("load_space accepts and rejects documents") {
  CHECK_NOTHROW(degenerate());
  CHECK_THROWS_AS(space({"x1", "x2"}, {}, {{"x1", "x1 - x2"}, {"x2", "2*(x1 - x2)"}}), InputError);
  const Atlas unit = space({"x"}, {}, {{"x", "1"}});
  CHECK(unit.root().coefficient("x") == Polynomial(1));
  CHECK_THROWS_AS(space({"x"}, {}, {{"x", "0"}}), InputError);
  CHECK_THROWS_AS(space({"x"}, {}, {{"x", "x^2"}}), InputError);  // monomial content
  CHECK_THROWS_AS(space({"x"}, {"y"}, {{"x", "1"}}), InputError);  // missing coefficient
  CHECK_THROWS_AS(space({"x", "x"}, {}, {{"x", "1"}}), InputError);
  CHECK_THROWS_AS(space({"e1"}, {}, {{"e1", "1"}}), InputError);
  CHECK_THROWS_AS(space({"T_x"}, {}, {{"T_x", "1"}}), InputError);
  CHECK_THROWS_AS(space({"x"}, {}, {{"x", "x +"}}), InputError);
  CHECK_THROWS_AS(load_space("{\"divisor\": [\"x\"], \"form\": {\"x\": \"1\"}, \"extra\": 1}"), InputError);
  CHECK_THROWS_AS(load_space("not json"), InputError);
}

TEST_CASE("holomorphic input is converted and saturated") {
  // omega = x2 dx1 + x1 dx2 = d(x1 x2): a_j = f_j x_j gives x1 x2 twice, content x1 x2
  const Atlas a = load_space(
      R"({"divisor": ["x1", "x2"], "form": {"x1": "x2", "x2": "x1"}, "style": "holomorphic"})");
  CHECK(a.root().coefficient("x1") == Polynomial(1));
  CHECK(a.root().coefficient("x2") == Polynomial(1));
  const Atlas b = load_space(R"({"divisor": ["x"], "free": ["y"], "form": {"x": "y", "y": "x"}, "style": "holomorphic"})");
  // a_x = x*y and a_y = x share the content x
  CHECK(b.root().coefficient("x") == P("y"));
  CHECK(b.root().coefficient("y") == Polynomial(1));
}

TEST_CASE("adapted_coefficients tags unit-scaled divisor coefficients") {
  const LogFormChart c = space({"x1", "x2"}, {"y"}, {{"x1", "y"}, {"x2", "1"}, {"y", "x1"}}).root();
  const AdaptedFamily f1 = adapted_coefficients(c, LabelSet{"x1"});
  CHECK(f1.saturate_by == LabelSet{"x2"});
  for (const auto& a : f1.coefficients) CHECK(a.unit_scaled == (a.variable == "x2"));
  const AdaptedFamily f2 = adapted_coefficients(c, LabelSet{"x1", "x2"});
  CHECK(f2.saturate_by.empty());
  for (const auto& a : f2.coefficients) CHECK_FALSE(a.unit_scaled);
  const AdaptedFamily f0 = adapted_coefficients(c, LabelSet{});
  CHECK(f0.saturate_by == LabelSet{"x1", "x2"});
  CHECK_THROWS_AS(adapted_coefficients(c, LabelSet{"y"}), std::invalid_argument);
}

TEST_CASE("newton_polyhedra_system") {
  const PolyhedraSystem a = newton_polyhedra_system(space({"x1"}, {"y"}, {{"x1", "y"}, {"y", "x1"}}));
  CHECK(a.polyhedra.at(LabelSet{"x1"}).vertices == std::vector<Point>{{0}});
  const PolyhedraSystem b = newton_polyhedra_system(worked());
  CHECK(b.polyhedra.at(LabelSet{"x1", "x2"}).vertices == std::vector<Point>{{0, 1}, {1, 0}});
  const PolyhedraSystem c = newton_polyhedra_system(degenerate());
  CHECK(c.polyhedra.at(LabelSet{"x1", "x2"}).vertices == std::vector<Point>{{0, 1}, {1, 0}});
  CHECK(c.supports.at(LabelSet{"x1", "x2"}).points == std::set<Point>{{0, 1}, {1, 0}, {2, 0}});
  CHECK(c.polyhedra.at(LabelSet{"x1"}).vertices == std::vector<Point>{{0}});
  CHECK(c.polyhedra.size() == 4);
  CHECK(newton_polyhedra_system(worked(), ExecPolicy::parallel).polyhedra == b.polyhedra);
}

TEST_CASE("polyhedra do not depend on the names of free variables") {
  const Atlas a = space({"x1", "x2"}, {"y", "z"}, {{"x1", "y*x2"}, {"x2", "z*x1 + y^2"}, {"y", "x1*x2"}, {"z", "z"}});
  const Atlas b = space({"x1", "x2"}, {"z", "y"}, {{"x1", "z*x2"}, {"x2", "y*x1 + z^2"}, {"z", "x1*x2"}, {"y", "y"}});
  CHECK(newton_polyhedra_system(a).polyhedra == newton_polyhedra_system(b).polyhedra);
}

TEST_CASE("log_order") {
  CHECK(log_order(cusp().root(), {{"x", 0}, {"y", 0}}) == 1);
  CHECK(log_order(space({"x"}, {}, {{"x", "1"}}).root(), {{"x", 0}}) == 0);
  CHECK(log_order(worked().root(), {{"x1", 0}, {"x2", 0}}) == 1);
  CHECK(log_order(worked().root(), {{"x1", 0}, {"x2", 3}}) == 0);
  CHECK(log_order(cusp().root(), {{"x", 0}, {"y", 1}}) == 0);
}

TEST_CASE("logsing_empty") {
  CHECK(logsing_empty(space({"x"}, {"y"}, {{"x", "1"}, {"y", "1"}}), fuel).empty == Tri::yes);
  const LogsingResult c = logsing_empty(cusp(), fuel);
  CHECK(c.empty == Tri::no);
  REQUIRE(c.strata.size() == 1);
  CHECK(c.strata[0].stratum == LabelSet{"x"});
  CHECK(c.strata[0].locus == std::vector<Polynomial>{P("y")});
  const LogsingResult w = logsing_empty(worked(), fuel);
  CHECK(w.empty == Tri::no);
  REQUIRE(w.strata.size() == 1);
  CHECK(w.strata[0].stratum == LabelSet{"x1", "x2"});
  CHECK(logsing_empty(worked(), fuel, ExecPolicy::parallel).strata.size() == 1);
}

TEST_CASE("log_order is positive exactly on the reported locus") {
  const LogsingResult c = logsing_empty(cusp(), fuel);
  for (int yv = -2; yv <= 2; ++yv) {
    const std::map<std::string, Rational, NaturalLess> pt = {{"x", 0}, {"y", yv}};
    bool on_locus = true;
    for (const auto& g : c.strata[0].locus) on_locus = on_locus && g.evaluate(pt) == 0;
    CHECK((log_order(cusp().root(), pt) > 0) == on_locus);
  }
}

TEST_CASE("initial_form_system") {
  const LabelSet j{"x1", "x2"};
  const WeightVector rho(j, {1, 1});
  const InitialFormSystem d = initial_form_system(degenerate().root(), j, rho);
  CHECK(d.value == 1);
  CHECK(d.forms.at("x1") == P("T_x1 - T_x2"));
  CHECK(d.forms.at("x2") == P("2*T_x1 - 2*T_x2"));
  CHECK(d.torus_variables() == std::vector<std::string>{"T_x1", "T_x2"});
  const InitialFormSystem w = initial_form_system(worked().root(), j, rho);
  CHECK(w.forms.at("x1") == P("T_x2"));
  CHECK(w.forms.at("x2") == P("T_x1"));
  // two weights inside the same face class give the same system
  const InitialFormSystem v1 = initial_form_system(degenerate().root(), j, WeightVector(j, {1, 3}));
  const InitialFormSystem v2 = initial_form_system(degenerate().root(), j, WeightVector(j, {1, 7}));
  CHECK(v1.forms == v2.forms);
  CHECK(v1.face_points == v2.face_points);
}

TEST_CASE("initial forms of a monomially rescaled chart") {
  const LogFormChart base = degenerate().root();
  LogFormChart scaled = base;
  for (auto& [v, a] : scaled.coeffs) a = a * Monomial({{"x1", 1}, {"x2", 2}});
  const LabelSet j{"x1", "x2"};
  const WeightVector rho(j, {2, 3});
  const InitialFormSystem s = initial_form_system(base, j, rho);
  const InitialFormSystem t = initial_form_system(scaled, j, rho);
  CHECK(t.value == s.value + 8);
  for (const auto& [v, a] : s.forms) CHECK(t.forms.at(v) == a * P("T_x1*T_x2^2"));
}

TEST_CASE("integrability_check") {
  CHECK(integrability_check(worked().root(), fuel) == Tri::yes);
  CHECK(integrability_check(cusp().root(), fuel) == Tri::yes);
  // y dx + dz
  const Atlas nonint = load_space(
      R"({"divisor": [], "free": ["x", "y", "z"], "form": {"x": "y", "y": "0", "z": "1"}})");
  CHECK(integrability_check(nonint.root(), fuel) == Tri::no);
  // d(x y z + z^2) is exact
  const Atlas exact = load_space(
      R"({"divisor": [], "free": ["x", "y", "z"], "form": {"x": "y*z", "y": "x*z", "z": "x*y + 2*z"}})");
  CHECK(integrability_check(exact.root(), fuel) == Tri::yes);
  // the logarithmic form x2 dx1/x1 + x3 dx2/x2 + dx3/x3 is not integrable
  const Atlas logform = space({"x1", "x2", "x3"}, {}, {{"x1", "x2"}, {"x2", "x3"}, {"x3", "1"}});
  CHECK(integrability_check(logform.root(), fuel) == Tri::no);
}
