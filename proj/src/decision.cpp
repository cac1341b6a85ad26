#include "folnewt/decision.hpp"

#include <algorithm>
#include <stdexcept>

namespace folnewt {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::non_degenerate: return "non-degenerate";
    case Outcome::degenerate: return "degenerate";
    case Outcome::undetermined: return "undetermined";
  }
  return "?";
}

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::deepest_first: return "deepest-first";
    case Strategy::lex_first: return "lex-first";
    case Strategy::widest_polyhedron: return "widest-polyhedron";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  for (Strategy s : all_strategies()) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

const std::vector<Strategy>& all_strategies() {
  static const std::vector<Strategy> all = {Strategy::deepest_first, Strategy::lex_first,
                                            Strategy::widest_polyhedron};
  return all;
}

std::string_view to_string(Agreement a) {
  switch (a) {
    case Agreement::agree: return "agree";
    case Agreement::disagree: return "disagree";
    case Agreement::undetermined: return "undetermined";
  }
  return "?";
}

std::vector<LabelSet> admissible_centers(const PolyhedraSystem& system) {
  std::vector<LabelSet> out;
  for (const auto& [j, n] : system.polyhedra) {
    if (!j.empty() && n.vertices.size() >= 2) out.push_back(j);
  }
  std::sort(out.begin(), out.end(), [](const LabelSet& a, const LabelSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<LabelSet> admissible_centers(const Atlas& atlas, ExecPolicy policy) {
  return admissible_centers(newton_polyhedra_system(atlas, policy));
}

LabelSet select_center(const PolyhedraSystem& system, const std::vector<LabelSet>& centers, Strategy strategy) {
  if (centers.empty()) throw std::invalid_argument("no center to select");
  auto better = [&](const LabelSet& a, const LabelSet& b) {
    switch (strategy) {
      case Strategy::deepest_first:
        if (a.size() != b.size()) return a.size() > b.size();
        break;
      case Strategy::lex_first:
        break;
      case Strategy::widest_polyhedron: {
        const std::size_t va = system.polyhedra.at(a).vertices.size();
        const std::size_t vb = system.polyhedra.at(b).vertices.size();
        if (va != vb) return va > vb;
        break;
      }
    }
    return a < b;
  };
  return *std::min_element(centers.begin(), centers.end(), better);
}

namespace {

Polynomial product_of(const LabelSet& vars) {
  Polynomial f(1);
  for (const auto& v : vars) f *= Polynomial::variable(v);
  return f;
}

LabelSet torus_labels(const LabelSet& stratum) {
  std::vector<std::string> out;
  for (const auto& j : stratum) out.push_back(torus_variable(j));
  return LabelSet(std::move(out));
}

}  // namespace

DegeneracyLocus degeneracy_locus(const LogFormChart& chart, const LabelSet& stratum, const Face& face,
                                 const groebner::Fuel& fuel, groebner::FuelUsage* usage, bool compute_locus) {
  DegeneracyLocus out;
  out.system = initial_form_system(chart, stratum, face);
  for (const auto& [v, a] : out.system.forms) {
    if (!a.is_zero()) out.equations.push_back(a);
  }
  const LabelSet torus = torus_labels(stratum);
  out.nonzero = torus | (chart.divisor - stratum);
  out.others = chart.free;
  const LabelSet ambient = out.nonzero | out.others;
  const Polynomial f = product_of(out.nonzero);

  groebner::Ideal ideal{out.equations, ambient.items()};
  std::string u;
  if (!f.is_constant()) {
    u = groebner::fresh_variable(ideal, f);
    ideal.generators.push_back(Polynomial::variable(u) * f - Polynomial(1));
  }
  out.empty = groebner::contains_one(ideal, fuel, usage);
  if (out.empty != Tri::no || !compute_locus) return out;

  std::vector<std::string> front;
  if (!u.empty()) front.push_back(u);
  for (const auto& t : torus) front.push_back(t);
  if (front.empty()) {
    if (auto b = groebner::buchberger(ideal, groebner::TermOrder::graded_reverse_lex(), fuel, usage)) out.locus = *b;
  } else if (auto elim = groebner::eliminate(ideal, front, fuel, usage)) {
    out.locus = elim->generators;
  }
  return out;
}

namespace {

struct FaceJob {
  const LogFormChart* chart;
  LabelSet stratum;
  Face face;
};

std::vector<FaceJob> face_jobs(const Atlas& atlas, ExecPolicy policy) {
  struct StratumJob {
    const LogFormChart* chart;
    LabelSet stratum;
  };
  std::vector<StratumJob> strata;
  for (const auto* c : atlas.leaves()) {
    for (auto& j : c->divisor.subsets()) strata.push_back({c, std::move(j)});
  }
  std::vector<std::vector<Face>> faces(strata.size());
  parallel_for(strata.size(), policy, [&](std::size_t i) {
    const SupportSet s = chart_support(*strata[i].chart, strata[i].stratum);
    faces[i] = compact_faces(newton_vertices(s), s);
  });
  std::vector<FaceJob> jobs;
  for (std::size_t i = 0; i < strata.size(); ++i) {
    for (auto& f : faces[i]) jobs.push_back({strata[i].chart, strata[i].stratum, std::move(f)});
  }
  return jobs;
}

}  // namespace

Verdict check_nnd_direct(const Atlas& atlas, const DecisionOptions& options) {
  Verdict v;
  const std::vector<FaceJob> jobs = face_jobs(atlas, options.policy);
  std::vector<Tri> answers(jobs.size(), Tri::undetermined);
  std::vector<groebner::FuelUsage> usages(jobs.size());
  if (options.policy == ExecPolicy::serial) {
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      answers[i] = degeneracy_locus(*jobs[i].chart, jobs[i].stratum, jobs[i].face, options.fuel, &usages[i], false)
                       .empty;
      ++v.checks;
      if (answers[i] == Tri::no) break;
    }
  } else {
    parallel_for(jobs.size(), options.policy, [&](std::size_t i) {
      answers[i] =
          degeneracy_locus(*jobs[i].chart, jobs[i].stratum, jobs[i].face, options.fuel, &usages[i], false).empty;
    });
    v.checks = jobs.size();
  }
  for (const auto& u : usages) v.usage += u;

  const auto first_no = std::find(answers.begin(), answers.end(), Tri::no);
  if (first_no != answers.end()) {
    const FaceJob& job = jobs[static_cast<std::size_t>(first_no - answers.begin())];
    DegeneracyLocus d = degeneracy_locus(*job.chart, job.stratum, job.face, options.fuel, &v.usage, true);
    Evidence ev;
    ev.chart = job.chart->id;
    ev.stratum = job.stratum;
    ev.face = job.face;
    ev.locus = d.locus;
    if (options.search_witness) ev.witness = find_witness(d.equations, d.nonzero, d.others, options.witness);
    v.outcome = Outcome::degenerate;
    v.reason = "initial forms have a common zero on the torus over stratum " + job.stratum.to_string() +
               " of chart " + job.chart->id;
    v.evidence = std::move(ev);
    return v;
  }
  if (std::find(answers.begin(), answers.end(), Tri::undetermined) != answers.end()) {
    v.outcome = Outcome::undetermined;
    v.reason = "S-pair fuel exhausted on some face";
    return v;
  }
  v.outcome = Outcome::non_degenerate;
  v.reason = "every compact face passes";
  return v;
}

DesingResult desingularize(const Atlas& atlas, Strategy strategy, std::size_t max_blowups, ExecPolicy policy) {
  DesingResult out{atlas, false, {}};
  while (true) {
    const PolyhedraSystem sys = newton_polyhedra_system(out.atlas, policy);
    const std::vector<LabelSet> centers = admissible_centers(sys);
    if (centers.empty()) {
      out.complete = true;
      return out;
    }
    if (out.centers.size() >= max_blowups) return out;
    const LabelSet center = select_center(sys, centers, strategy);
    out.atlas = blowup_atlas(out.atlas, center, policy);
    out.centers.push_back(center);
  }
}

Verdict check_nnd_via_theorem(const Atlas& atlas, const DecisionOptions& options, DesingResult* desing_out) {
  Verdict v;
  DesingResult d = desingularize(atlas, options.strategy, options.max_blowups, options.policy);
  if (!d.complete) {
    v.outcome = Outcome::undetermined;
    v.reason = "blow-up fuel exhausted after " + std::to_string(d.centers.size()) + " blow-ups";
    if (desing_out) *desing_out = std::move(d);
    return v;
  }
  const LogsingResult ls = logsing_empty(d.atlas, options.fuel, options.policy);
  v.usage = ls.usage;
  for (const auto* c : d.atlas.leaves()) v.checks += std::size_t{1} << c->divisor.size();
  if (ls.empty == Tri::yes) {
    v.outcome = Outcome::non_degenerate;
    v.reason = "singular locus empty after " + std::to_string(d.centers.size()) + " blow-ups";
  } else if (ls.empty == Tri::no) {
    const auto it = std::find_if(ls.strata.begin(), ls.strata.end(),
                                 [](const LogsingStratum& s) { return s.empty == Tri::no; });
    Evidence ev;
    ev.chart = it->chart;
    ev.stratum = it->stratum;
    if (!it->locus.empty()) ev.locus = it->locus;
    ev.centers = d.centers;
    v.outcome = Outcome::degenerate;
    v.reason = "singular points remain on stratum " + it->stratum.to_string() + " of chart " + it->chart;
    v.evidence = std::move(ev);
  } else {
    v.outcome = Outcome::undetermined;
    v.reason = "S-pair fuel exhausted in the singular-locus check";
  }
  if (desing_out) *desing_out = std::move(d);
  return v;
}

EquivalenceReport verify_equivalence(const Atlas& atlas, const DecisionOptions& options) {
  EquivalenceReport r;
  r.direct = check_nnd_direct(atlas, options);
  r.theorem = check_nnd_via_theorem(atlas, options);
  if (r.direct.outcome == Outcome::undetermined || r.theorem.outcome == Outcome::undetermined) {
    r.agreement = Agreement::undetermined;
  } else {
    r.agreement = r.direct.outcome == r.theorem.outcome ? Agreement::agree : Agreement::disagree;
  }
  return r;
}

std::string fresh_exceptional(const LogFormChart& chart) {
  unsigned long best = 0;
  for (const auto& v : chart.variables()) {
    if (is_exceptional_label(v)) best = std::max(best, std::stoul(v.substr(1)));
  }
  return "e" + std::to_string(best + 1);
}

RationalPoint transport_witness(const RationalPoint& source, const LabelSet& center,
                                const LabelSet& cell, const std::string& selector, const std::string& exceptional) {
  const Rational mu0 = source.at(torus_variable(selector));
  RationalPoint out;
  for (const auto& [name, value] : source) {
    bool center_torus = false;
    for (const auto& j : center) center_torus = center_torus || name == torus_variable(j);
    if (!center_torus) out[name] = value;
  }
  for (const auto& j : center) {
    if (j == selector) continue;
    const Rational ratio = source.at(torus_variable(j)) / mu0;
    if (cell.contains(j)) {
      out[torus_variable(j)] = ratio;
    } else {
      out[j] = ratio;
    }
  }
  out[torus_variable(exceptional)] = mu0;
  return out;
}

RationalPoint transport_witness_back(const RationalPoint& target, const LabelSet& center,
                                     const LabelSet& cell, const std::string& selector,
                                     const std::string& exceptional) {
  const Rational mu0 = target.at(torus_variable(exceptional));
  RationalPoint out;
  for (const auto& [name, value] : target) {
    if (name == torus_variable(exceptional) || center.contains(name)) continue;
    bool cell_torus = false;
    for (const auto& j : cell) cell_torus = cell_torus || name == torus_variable(j);
    if (!cell_torus) out[name] = value;
  }
  for (const auto& j : center) {
    if (j == selector) {
      out[torus_variable(j)] = mu0;
    } else if (cell.contains(j)) {
      out[torus_variable(j)] = target.at(torus_variable(j)) * mu0;
    } else {
      out[torus_variable(j)] = target.at(j) * mu0;
    }
  }
  return out;
}

PropertySReport property_s_suite(const LogFormChart& chart, const LabelSet& center, const WeightVector& rho,
                                 const DecisionOptions& options) {
  const LabelSet& k = rho.axes();
  if (center.empty() || !center.is_subset_of(k) || !k.is_subset_of(chart.divisor)) {
    throw std::invalid_argument("need a nonempty center J ⊆ K ⊆ D");
  }
  PropertySReport rep;
  rep.stratum = k;
  rep.center = center;
  rep.exceptional = fresh_exceptional(chart);
  rep.rho = rho;
  const WeightClass wc = weight_class(rho, center);
  rep.cell = wc.a;
  rep.rho_prime = weight_transport(rho, center, wc.a, rep.exceptional);
  const LabelSet& k_prime = rep.rho_prime.axes();

  const SupportSet source_support = chart_support(chart, k);
  const Face source_face = minimal_face(newton_vertices(source_support), rho, source_support);
  groebner::FuelUsage usage;
  const DegeneracyLocus source = degeneracy_locus(chart, k, source_face, options.fuel, &usage, false);
  rep.source = source.empty;
  if (rep.source == Tri::no && options.search_witness) {
    WitnessOptions wopt = options.witness;
    wopt.numeric_fallback = false;
    rep.source_witness = find_witness(source.equations, source.nonzero, source.others, wopt);
  }
  rep.determined = rep.source != Tri::undetermined;

  for (const auto& j0 : center - wc.a) {
    PropertySTarget t;
    t.selector = j0;
    const Pullback pb = pullback(chart, center, j0, rep.exceptional);

    Polynomial sum;
    for (const auto& j : center) sum += poly_substitute(chart.coefficient(j), pb.map.substitution);
    t.exceptional_sum = pb.unsaturated.coefficient(rep.exceptional) == sum;

    t.exponent_law = true;
    for (const auto& sigma : source_support.points) {
      const auto [axes, lam] = exponent_transport(sigma, k, center, j0, rep.exceptional);
      Rational value = 0;
      for (std::size_t i = 0; i < axes.size(); ++i) {
        if (k_prime.contains(axes[i])) value += rep.rho_prime.at(axes[i]) * lam[i];
      }
      if (value != rho(sigma)) t.exponent_law = false;
    }

    const SupportSet target_support = chart_support(pb.chart, k_prime);
    const Face target_face = minimal_face(newton_vertices(target_support), rep.rho_prime, target_support);
    const DegeneracyLocus target = degeneracy_locus(pb.chart, k_prime, target_face, options.fuel, &usage, false);
    t.empty = target.empty;

    if (rep.source_witness && rep.source_witness->exact) {
      const RationalPoint moved =
          transport_witness(rep.source_witness->values, center, wc.a, j0, rep.exceptional);
      const RationalPoint back = transport_witness_back(moved, center, wc.a, j0, rep.exceptional);
      t.witness_transported =
          verify_witness(target.equations, target.nonzero, moved) && back == rep.source_witness->values;
    }

    if (t.empty == Tri::undetermined) rep.determined = false;
    if (rep.source != Tri::undetermined && t.empty != Tri::undetermined && t.empty != rep.source) {
      rep.consistent = false;
    }
    if (!t.exceptional_sum || !t.exponent_law || t.witness_transported == false) rep.laws_hold = false;
    rep.targets.push_back(std::move(t));
  }
  return rep;
}

}  // namespace folnewt
