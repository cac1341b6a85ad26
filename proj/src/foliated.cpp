#include "folnewt/foliated.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>

#include "folnewt/parser.hpp"
#include "json.hpp"

namespace folnewt {

namespace {

Polynomial product_of(const LabelSet& vars) {
  Polynomial f(1);
  for (const auto& v : vars) f *= Polynomial::variable(v);
  return f;
}

std::vector<std::string> names_of(const LabelSet& s) { return s.items(); }

// 1 lies in <gens> + <u*f - 1>; the ideal of the gens restricted to f != 0 is empty.
Tri saturated_contains_one(const std::vector<Polynomial>& gens, const Polynomial& f, const LabelSet& ambient,
                           const groebner::Fuel& fuel, groebner::FuelUsage* usage) {
  groebner::Ideal ideal{gens, names_of(ambient)};
  if (!f.is_constant()) {
    const std::string u = groebner::fresh_variable(ideal, f);
    ideal.generators.push_back(Polynomial::variable(u) * f - Polynomial(1));
  }
  return groebner::contains_one(ideal, fuel, usage);
}

}  // namespace

const Polynomial& LogFormChart::coefficient(std::string_view var) const {
  auto it = coeffs.find(var);
  if (it == coeffs.end()) throw std::out_of_range("chart " + id + " has no variable " + std::string(var));
  return it->second;
}

std::vector<Polynomial> LogFormChart::coefficient_list() const {
  std::vector<Polynomial> out;
  out.reserve(coeffs.size());
  for (const auto& [v, a] : coeffs) out.push_back(a);
  return out;
}

std::string torus_variable(std::string_view label) { return "T_" + std::string(label); }

bool is_exceptional_label(std::string_view name) {
  if (name.size() < 2 || name[0] != 'e') return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

void validate_chart(const LogFormChart& chart, bool require_coprime) {
  if (!(chart.divisor & chart.free).empty()) {
    throw InputError("variables declared both divisor and free: " + (chart.divisor & chart.free).to_string());
  }
  const LabelSet vars = chart.variables();
  for (const auto& v : vars) {
    if (!chart.coeffs.contains(v)) throw InputError("missing coefficient for variable " + v);
  }
  for (const auto& [v, a] : chart.coeffs) {
    if (!vars.contains(v)) throw InputError("coefficient given for undeclared variable " + v);
    for (const auto& w : a.variables()) {
      if (!vars.contains(w)) throw InputError("coefficient of " + v + " uses undeclared variable " + w);
    }
  }
  const std::vector<Polynomial> list = chart.coefficient_list();
  if (std::all_of(list.begin(), list.end(), [](const Polynomial& p) { return p.is_zero(); })) {
    throw InputError("the form is identically zero");
  }
  const Monomial content = monomial_content(list, chart.divisor);
  if (!content.is_one()) {
    throw InputError("coefficients share the divisor monomial factor " + content.to_string());
  }
  if (require_coprime) {
    const GcdCheck g = gcd_is_constant(list);
    if (!g.constant) throw InputError("coefficients share the common factor " + g.gcd.to_string());
  }
}

SpaceDocument parse_space_document(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("input must be a JSON object");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::string& k = it.key();
    if (k != "divisor" && k != "free" && k != "form" && k != "style") throw InputError("unknown key \"" + k + "\"");
  }
  SpaceDocument out;
  auto read_names = [&](const char* key, std::vector<std::string>& into) {
    if (!doc.contains(key)) return;
    const auto& arr = doc.at(key);
    if (!arr.is_array()) throw InputError(std::string("\"") + key + "\" must be an array of names");
    for (const auto& n : arr) {
      if (!n.is_string()) throw InputError(std::string("\"") + key + "\" must be an array of names");
      into.push_back(n.get<std::string>());
    }
  };
  if (!doc.contains("divisor")) throw InputError("missing key \"divisor\"");
  if (!doc.contains("form")) throw InputError("missing key \"form\"");
  read_names("divisor", out.divisor);
  read_names("free", out.free);
  const auto& form = doc.at("form");
  if (!form.is_object()) throw InputError("\"form\" must map variable names to polynomial strings");
  for (auto it = form.begin(); it != form.end(); ++it) {
    if (!it.value().is_string()) throw InputError("coefficient of " + it.key() + " must be a string");
    out.form[it.key()] = it.value().get<std::string>();
  }
  if (doc.contains("style")) {
    const auto& style = doc.at("style");
    if (style == "logarithmic") {
      out.style = InputStyle::logarithmic;
    } else if (style == "holomorphic") {
      out.style = InputStyle::holomorphic;
    } else {
      throw InputError("\"style\" must be \"logarithmic\" or \"holomorphic\"");
    }
  }
  return out;
}

LogFormChart make_root_chart(const SpaceDocument& doc) {
  VariableTable table;
  auto declare = [&](const std::string& name, VarKind kind) {
    if (name.starts_with("T_")) throw InputError("identifier prefix T_ is reserved: " + name);
    if (is_exceptional_label(name)) throw InputError("identifiers e<N> are reserved for exceptional divisors: " + name);
    try {
      table.declare(name, kind);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  };
  for (const auto& n : doc.divisor) declare(n, VarKind::divisor);
  for (const auto& n : doc.free) declare(n, VarKind::free);

  LogFormChart chart;
  chart.id = "root";
  chart.divisor = LabelSet(doc.divisor);
  chart.free = LabelSet(doc.free);
  for (const auto& [var, text] : doc.form) {
    if (!table.contains(var)) throw InputError("form key " + var + " is not a declared variable");
    try {
      chart.coeffs[var] = parse_poly(text, table);
    } catch (const ParseError& e) {
      throw InputError("coefficient of " + var + ": " + e.what());
    }
  }
  for (const auto& v : chart.variables()) {
    if (!chart.coeffs.contains(v)) throw InputError("form has no coefficient for " + v);
  }
  if (doc.style == InputStyle::holomorphic) {
    for (const auto& j : chart.divisor) chart.coeffs[j] *= Polynomial::variable(j);
    const std::vector<Polynomial> list = chart.coefficient_list();
    if (std::all_of(list.begin(), list.end(), [](const Polynomial& p) { return p.is_zero(); })) {
      throw InputError("the form is identically zero");
    }
    const Monomial content = monomial_content(list, chart.divisor);
    for (auto& [v, a] : chart.coeffs) a = a.divided_by(content);
  }
  validate_chart(chart, true);
  return chart;
}

Atlas::Atlas(LogFormChart root) : fabric_(SupportFabric::powerset(root.divisor)) {
  index_[root.id] = 0;
  charts_.push_back(std::move(root));
  leaf_.push_back(true);
}

const LogFormChart& Atlas::chart(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) throw std::out_of_range("no chart " + std::string(id));
  return charts_[it->second];
}

std::vector<const LogFormChart*> Atlas::leaves() const {
  std::vector<const LogFormChart*> out;
  for (std::size_t i = 0; i < charts_.size(); ++i) {
    if (leaf_[i]) out.push_back(&charts_[i]);
  }
  return out;
}

std::vector<std::string> Atlas::children(std::string_view id) const {
  std::vector<std::string> out;
  for (const auto& c : charts_) {
    if (c.provenance && c.provenance->parent == id) out.push_back(c.id);
  }
  return out;
}

std::string Atlas::next_exceptional() const { return "e" + std::to_string(log_.size() + 1); }

void Atlas::apply_blowup(const LabelSet& center, const std::string& exceptional,
                         const std::vector<std::pair<std::string, std::vector<LogFormChart>>>& replacements,
                         const SupportFabric& new_fabric) {
  BlowupRecord rec{center, exceptional, {}};
  for (const auto& [leaf_id, new_charts] : replacements) {
    auto it = index_.find(leaf_id);
    if (it == index_.end() || !leaf_[it->second]) throw std::invalid_argument("not a leaf: " + leaf_id);
    leaf_[it->second] = false;
    rec.replaced.push_back(leaf_id);
    for (const auto& c : new_charts) {
      if (index_.contains(c.id)) throw std::logic_error("duplicate chart id " + c.id);
      index_[c.id] = charts_.size();
      charts_.push_back(c);
      leaf_.push_back(true);
    }
  }
  log_.push_back(std::move(rec));
  fabric_ = new_fabric;
}

Atlas load_space(const SpaceDocument& doc) { return Atlas(make_root_chart(doc)); }

Atlas load_space(std::string_view json_text) { return load_space(parse_space_document(json_text)); }

SupportFabric leaf_fabric(const Atlas& atlas) {
  std::vector<LabelSet> sets;
  for (const auto* c : atlas.leaves()) sets.push_back(c->divisor);
  return SupportFabric(sets);
}

AdaptedFamily adapted_coefficients(const LogFormChart& chart, const LabelSet& stratum) {
  if (!stratum.is_subset_of(chart.divisor)) {
    throw std::invalid_argument("stratum " + stratum.to_string() + " is not inside the divisor of " + chart.id);
  }
  AdaptedFamily out;
  out.stratum = stratum;
  out.saturate_by = chart.divisor - stratum;
  for (const auto& [v, a] : chart.coeffs) out.coefficients.push_back({v, a, out.saturate_by.contains(v)});
  return out;
}

SupportSet chart_support(const LogFormChart& chart, const LabelSet& stratum) {
  SupportSet s{stratum, {}};
  for (const auto& [v, a] : chart.coeffs) {
    for (const auto& [sigma, rest] : divisor_expansion(a, stratum)) s.points.insert(to_point(sigma, stratum));
  }
  return s;
}

namespace {

void check_projection_compatibility(const PolyhedraSystem& sys) {
  for (const auto& [big, n] : sys.polyhedra) {
    for (const auto& label : big) {
      const LabelSet small = big.without(label);
      auto it = sys.polyhedra.find(small);
      if (it == sys.polyhedra.end()) continue;
      const NewtonPolyhedron projected = project_polyhedron(n, sys.supports.at(big), small);
      if (!(projected == it->second)) {
        throw std::logic_error("projection of N" + big.to_string() + " differs from N" + small.to_string());
      }
    }
  }
}

PolyhedraSystem build_system(const std::vector<LabelSet>& strata, const std::vector<SupportSet>& supports,
                             ExecPolicy policy) {
  std::vector<NewtonPolyhedron> polys(strata.size());
  parallel_for(strata.size(), policy, [&](std::size_t i) { polys[i] = newton_vertices(supports[i]); });
  PolyhedraSystem sys;
  for (std::size_t i = 0; i < strata.size(); ++i) {
    sys.polyhedra[strata[i]] = std::move(polys[i]);
    sys.supports[strata[i]] = supports[i];
  }
  check_projection_compatibility(sys);
  return sys;
}

}  // namespace

PolyhedraSystem newton_polyhedra_system(const Atlas& atlas, ExecPolicy policy) {
  const SupportFabric closure = leaf_fabric(atlas);
  if (!(closure == atlas.fabric())) throw std::logic_error("atlas fabric differs from the closure of its leaves");
  const std::vector<LabelSet> strata = atlas.fabric().strata();
  const auto leaves = atlas.leaves();
  std::vector<SupportSet> supports(strata.size());
  parallel_for(strata.size(), policy, [&](std::size_t i) {
    supports[i].axes = strata[i];
    for (const auto* c : leaves) {
      if (!strata[i].is_subset_of(c->divisor)) continue;
      SupportSet s = chart_support(*c, strata[i]);
      supports[i].points.insert(s.points.begin(), s.points.end());
    }
  });
  return build_system(strata, supports, policy);
}

PolyhedraSystem chart_polyhedra(const LogFormChart& chart, ExecPolicy policy) {
  const std::vector<LabelSet> strata = chart.divisor.subsets();
  std::vector<SupportSet> supports(strata.size());
  parallel_for(strata.size(), policy, [&](std::size_t i) { supports[i] = chart_support(chart, strata[i]); });
  return build_system(strata, supports, policy);
}

std::uint32_t log_order(const LogFormChart& chart, const std::map<std::string, Rational, NaturalLess>& point) {
  Substitution shift;
  for (const auto& v : chart.variables()) {
    auto it = point.find(v);
    Polynomial image = Polynomial::variable(v);
    if (it != point.end()) image += Polynomial(it->second);
    shift[v] = image;
  }
  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  for (const auto& [v, a] : chart.coeffs) {
    const Polynomial local = poly_substitute(a, shift);
    for (const auto& [m, c] : local.terms()) best = std::min(best, m.degree());
  }
  return best;
}

LogsingResult logsing_empty(const LogFormChart& chart, const groebner::Fuel& fuel, ExecPolicy policy) {
  LogsingResult out;
  const std::vector<Polynomial> all = chart.coefficient_list();
  const LabelSet vars = chart.variables();
  const Tri whole = groebner::contains_one({all, names_of(vars)}, fuel, &out.usage);
  if (whole == Tri::yes) {
    out.empty = Tri::yes;
    return out;
  }
  const std::vector<LabelSet> strata = chart.divisor.subsets();
  std::vector<LogsingStratum> results(strata.size());
  std::vector<groebner::FuelUsage> usages(strata.size());
  parallel_for(strata.size(), policy, [&](std::size_t i) {
    const LabelSet& j = strata[i];
    std::map<std::string, Rational, NaturalLess> zero;
    for (const auto& x : j) zero[x] = 0;
    std::vector<Polynomial> gens;
    for (const auto& a : all) {
      Polynomial r = a.evaluate_partial(zero);
      if (!r.is_zero()) gens.push_back(std::move(r));
    }
    const LabelSet ambient = vars - j;
    const Polynomial f = product_of(chart.divisor - j);
    LogsingStratum& res = results[i];
    res.chart = chart.id;
    res.stratum = j;
    res.empty = saturated_contains_one(gens, f, ambient, fuel, &usages[i]);
    if (res.empty == Tri::no) {
      // evidence only; the verdict above stands even if this runs dry
      if (f.is_constant()) {
        if (auto b = groebner::buchberger({gens, names_of(ambient)}, groebner::TermOrder::graded_reverse_lex(), fuel,
                                          &usages[i])) {
          res.locus = *b;
        }
      } else if (auto sat = groebner::saturate({gens, names_of(ambient)}, f, fuel, &usages[i])) {
        res.locus = sat->generators;
      }
    }
  });
  out.empty = Tri::yes;
  for (std::size_t i = 0; i < strata.size(); ++i) {
    out.usage += usages[i];
    if (results[i].empty == Tri::yes) continue;
    if (results[i].empty == Tri::no) {
      out.empty = Tri::no;
    } else if (out.empty == Tri::yes) {
      out.empty = Tri::undetermined;
    }
    out.strata.push_back(std::move(results[i]));
  }
  return out;
}

LogsingResult logsing_empty(const Atlas& atlas, const groebner::Fuel& fuel, ExecPolicy policy) {
  LogsingResult out;
  out.empty = Tri::yes;
  for (const auto* c : atlas.leaves()) {
    LogsingResult r = logsing_empty(*c, fuel, policy);
    out.usage += r.usage;
    if (r.empty == Tri::no) {
      out.empty = Tri::no;
    } else if (r.empty == Tri::undetermined && out.empty == Tri::yes) {
      out.empty = Tri::undetermined;
    }
    for (auto& s : r.strata) out.strata.push_back(std::move(s));
  }
  return out;
}

std::vector<std::string> InitialFormSystem::torus_variables() const {
  std::vector<std::string> out;
  for (const auto& j : stratum) out.push_back(torus_variable(j));
  return out;
}

InitialFormSystem initial_form_system(const LogFormChart& chart, const LabelSet& stratum, const WeightVector& rho) {
  if (!stratum.is_subset_of(chart.divisor)) {
    throw std::invalid_argument("stratum " + stratum.to_string() + " is not inside the divisor of " + chart.id);
  }
  if (!(rho.axes() == stratum)) throw std::invalid_argument("weight axes differ from the stratum");
  InitialFormSystem out;
  out.chart = chart.id;
  out.stratum = stratum;
  out.weight = rho;

  std::map<std::string, DivisorExpansion, NaturalLess> expansions;
  bool first = true;
  for (const auto& [v, a] : chart.coeffs) {
    expansions[v] = divisor_expansion(a, stratum);
    for (const auto& [sigma, rest] : expansions[v]) {
      const Rational val = rho(to_point(sigma, stratum));
      if (first || val < out.value) out.value = val;
      first = false;
    }
  }
  std::set<Point> face;
  for (const auto& [v, expansion] : expansions) {
    Polynomial form;
    for (const auto& [sigma, rest] : expansion) {
      const Point p = to_point(sigma, stratum);
      if (rho(p) != out.value) continue;
      face.insert(p);
      Monomial t;
      for (const auto& [x, e] : sigma.factors()) t = t * Monomial::variable(torus_variable(x), e);
      form += rest * t;
    }
    out.forms[v] = std::move(form);
  }
  out.face_points.assign(face.begin(), face.end());
  return out;
}

InitialFormSystem initial_form_system(const LogFormChart& chart, const LabelSet& stratum, const Face& face) {
  return initial_form_system(chart, stratum, face.weight);
}

Tri integrability_check(const LogFormChart& chart, const groebner::Fuel& /*fuel*/) {
  // omega = prod_{D} x * eta as a holomorphic form
  const Polynomial all_x = product_of(chart.divisor);
  std::vector<std::string> vars = chart.variables().items();
  std::vector<Polynomial> w;
  for (const auto& v : vars) {
    const Polynomial& a = chart.coefficient(v);
    w.push_back(chart.divisor.contains(v) ? exact_divide(a * all_x, Polynomial::variable(v)) : a * all_x);
  }
  const std::size_t n = vars.size();
  auto curl = [&](std::size_t i, std::size_t j) { return derivative(w[j], vars[i]) - derivative(w[i], vars[j]); };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const Polynomial c = w[i] * curl(j, k) - w[j] * curl(i, k) + w[k] * curl(i, j);
        if (!c.is_zero()) return Tri::no;
      }
    }
  }
  return Tri::yes;
}

}  // namespace folnewt
