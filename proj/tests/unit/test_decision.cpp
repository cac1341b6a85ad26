#include "doctest.h"
#include "folnewt/decision.hpp"
#include "oracles/corpus.hpp"
#include "unit/helpers.hpp"

using namespace folnewt;
using testing_helpers::P;
using testing_helpers::space;

namespace {

Atlas worked() { return space({"x1", "x2"}, {}, {{"x1", "x2"}, {"x2", "x1"}}); }
Atlas degenerate() {
  return space({"x1", "x2"}, {}, {{"x1", "x1 - x2"}, {"x2", "2*x1 - 2*x2 + x1^2"}});
}
Atlas cusp() { return space({"x"}, {"y"}, {{"x", "-3*x^3"}, {"y", "2*y"}}); }

}  // namespace

TEST_CASE("admissible centers and strategies") {
  CHECK(admissible_centers(worked()) == std::vector<LabelSet>{LabelSet{"x1", "x2"}});
  CHECK(admissible_centers(cusp()).empty());
  const Atlas three = space({"x1", "x2", "x3"}, {}, {{"x1", "x2 + x3"}, {"x2", "x1"}, {"x3", "x1*x2"}});
  const PolyhedraSystem sys = newton_polyhedra_system(three);
  const auto centers = admissible_centers(sys);
  REQUIRE_FALSE(centers.empty());
  const LabelSet deep = select_center(sys, centers, Strategy::deepest_first);
  for (const auto& c : centers) CHECK(c.size() <= deep.size());
  CHECK(select_center(sys, centers, Strategy::lex_first) == *std::min_element(centers.begin(), centers.end()));
  const LabelSet wide = select_center(sys, centers, Strategy::widest_polyhedron);
  for (const auto& c : centers) CHECK(sys.polyhedra.at(c).vertices.size() <= sys.polyhedra.at(wide).vertices.size());
  for (Strategy s : all_strategies()) CHECK(parse_strategy(to_string(s)) == s);
  CHECK_FALSE(parse_strategy("random"));
}

TEST_CASE("degeneracy_locus") {
  const LogFormChart c = degenerate().root();
  const LabelSet j{"x1", "x2"};
  const PolyhedraSystem sys = chart_polyhedra(c);
  const Face edge = minimal_face(sys.polyhedra.at(j), WeightVector(j, {1, 1}), sys.supports.at(j));
  const DegeneracyLocus d = degeneracy_locus(c, j, edge, groebner::Fuel{});
  CHECK(d.empty == Tri::no);
  CHECK(d.nonzero == LabelSet{"T_x1", "T_x2"});
  const Face vertex = minimal_face(sys.polyhedra.at(j), WeightVector(j, {1, 5}), sys.supports.at(j));
  CHECK(degeneracy_locus(c, j, vertex, groebner::Fuel{}).empty == Tri::yes);
}

TEST_CASE("check_nnd_direct on the hand examples") {
  CHECK(check_nnd_direct(worked()).outcome == Outcome::non_degenerate);
  CHECK(check_nnd_direct(space({"x"}, {}, {{"x", "1"}})).outcome == Outcome::non_degenerate);

  const Verdict d = check_nnd_direct(degenerate());
  REQUIRE(d.outcome == Outcome::degenerate);
  REQUIRE(d.evidence);
  CHECK(d.evidence->stratum == LabelSet{"x1", "x2"});
  REQUIRE(d.evidence->face);
  CHECK(d.evidence->face->vertices == std::vector<Point>{{0, 1}, {1, 0}});
  REQUIRE(d.evidence->witness);
  REQUIRE(d.evidence->witness->exact);
  CHECK(d.evidence->witness->values.at("T_x1") == 1);
  CHECK(d.evidence->witness->values.at("T_x2") == 1);

  const Verdict c = check_nnd_direct(cusp());
  REQUIRE(c.outcome == Outcome::degenerate);
  CHECK(c.evidence->stratum == LabelSet{"x"});
  REQUIRE(c.evidence->locus);
  CHECK(*c.evidence->locus == std::vector<Polynomial>{P("y")});
}

TEST_CASE("a form singular off the divisor is degenerate on the empty stratum") {
  const Atlas a = space({"x"}, {"y"}, {{"x", "y"}, {"y", "x - 1"}});
  const Verdict v = check_nnd_direct(a);
  REQUIRE(v.outcome == Outcome::degenerate);
  CHECK(v.evidence->stratum.empty());
  CHECK(check_nnd_via_theorem(a).outcome == Outcome::degenerate);
}

TEST_CASE("fuel exhaustion gives undetermined") {
  DecisionOptions o;
  o.fuel.max_spair_reductions = 1;
  const Atlas a = space({"x1", "x2"}, {"y"}, {{"x1", "x2*y + y^3 - 1"}, {"x2", "x1*y^2 + x2 - y"}, {"y", "x1*x2 + y^2 + 2"}});
  const Verdict v = check_nnd_direct(a, o);
  CHECK(v.outcome != Outcome::non_degenerate);
  DecisionOptions none;
  none.max_blowups = 0;
  CHECK(check_nnd_via_theorem(worked(), none).outcome == Outcome::undetermined);
}

TEST_CASE("desingularize and the theorem route") {
  const DesingResult w = desingularize(worked(), Strategy::deepest_first, 64);
  CHECK(w.complete);
  CHECK(w.centers == std::vector<LabelSet>{LabelSet{"x1", "x2"}});
  CHECK(is_desingularized(newton_polyhedra_system(w.atlas)));
  CHECK(check_nnd_via_theorem(worked()).outcome == Outcome::non_degenerate);
  const Verdict d = check_nnd_via_theorem(degenerate());
  CHECK(d.outcome == Outcome::degenerate);
  REQUIRE(d.evidence);
  CHECK(d.evidence->centers.size() == 1);
  CHECK(check_nnd_via_theorem(cusp()).outcome == Outcome::degenerate);
  const DesingResult r = desingularize(cusp(), Strategy::deepest_first, 64);
  CHECK(r.complete);
  CHECK(r.centers.empty());
}

TEST_CASE("verify_equivalence") {
  CHECK(verify_equivalence(worked()).agreement == Agreement::agree);
  CHECK(verify_equivalence(space({"x"}, {}, {{"x", "1"}})).agreement == Agreement::agree);
  const EquivalenceReport d = verify_equivalence(degenerate());
  CHECK(d.agreement == Agreement::agree);
  CHECK(d.direct.outcome == Outcome::degenerate);
}

TEST_CASE("serial and parallel deciders give identical verdicts") {
  DecisionOptions serial, parallel;
  parallel.policy = ExecPolicy::parallel;
  for (const auto& inst : corpus::generate(15, 99)) {
    const Atlas a = load_space(inst.doc);
    const Verdict s = check_nnd_direct(a, serial);
    const Verdict p = check_nnd_direct(a, parallel);
    CHECK(s.outcome == p.outcome);
    if (s.evidence && p.evidence) {
      CHECK(s.evidence->chart == p.evidence->chart);
      CHECK(s.evidence->stratum == p.evidence->stratum);
    }
    CHECK(check_nnd_via_theorem(a, serial).outcome == check_nnd_via_theorem(a, parallel).outcome);
  }
}

TEST_CASE("direct check is invariant under permuting free variables") {
  const Atlas a = space({"x"}, {"y", "z"}, {{"x", "y - z"}, {"y", "x*z"}, {"z", "x + y^2"}});
  const Atlas b = space({"x"}, {"z", "y"}, {{"x", "z - y"}, {"z", "x*y"}, {"y", "x + z^2"}});
  CHECK(check_nnd_direct(a).outcome == check_nnd_direct(b).outcome);
}

TEST_CASE("property_s_suite on the hand examples") {
  const LabelSet j{"x1", "x2"};
  const PropertySReport w = property_s_suite(worked().root(), j, WeightVector(j, {1, 1}));
  CHECK(w.source == Tri::yes);
  CHECK(w.consistent);
  CHECK(w.laws_hold);
  for (const auto& t : w.targets) CHECK(t.empty == Tri::yes);

  const PropertySReport d = property_s_suite(degenerate().root(), j, WeightVector(j, {1, 1}));
  CHECK(d.source == Tri::no);
  CHECK(d.consistent);
  CHECK(d.laws_hold);
  REQUIRE(d.source_witness);
  REQUIRE(d.source_witness->exact);
  // mu = (1, 1): the exceptional coordinate receives mu of the selector
  const RationalPoint mu = d.source_witness->values;
  for (const auto& t : d.targets) {
    const RationalPoint m2 = transport_witness(mu, j, d.cell, t.selector, d.exceptional);
    CHECK(m2.at("T_" + d.exceptional) == mu.at("T_" + t.selector));
    CHECK(transport_witness_back(m2, j, d.cell, t.selector, d.exceptional) == mu);
    REQUIRE(t.witness_transported);
    CHECK(*t.witness_transported);
  }
}

TEST_CASE("fresh_exceptional") {
  CHECK(fresh_exceptional(worked().root()) == "e1");
  const Atlas a = blowup_atlas(worked(), LabelSet{"x1", "x2"});
  CHECK(fresh_exceptional(*a.leaves().front()) == "e2");
}
