#include "folnewt/blowup.hpp"

#include <stdexcept>

namespace folnewt {

namespace {

void check_center(const LogFormChart& chart, const LabelSet& center, const std::string& exceptional) {
  if (center.empty()) throw std::invalid_argument("blow-up center must be nonempty");
  if (!center.is_subset_of(chart.divisor)) {
    throw std::invalid_argument("center " + center.to_string() + " is not inside the divisor of " + chart.id);
  }
  if (chart.variables().contains(exceptional)) {
    throw std::invalid_argument("exceptional label " + exceptional + " already used in " + chart.id);
  }
}

}  // namespace

BlowupChartMap blowup_chart_map(const LogFormChart& chart, const LabelSet& center, const std::string& selector,
                                const std::string& exceptional) {
  check_center(chart, center, exceptional);
  if (!center.contains(selector)) throw std::invalid_argument("selector " + selector + " is not in the center");
  BlowupChartMap m{center, selector, exceptional, {}, {}};
  const Polynomial e = Polynomial::variable(exceptional);
  for (const auto& j : center) {
    m.substitution[j] = j == selector ? e : e * Polynomial::variable(j);
  }
  m.new_divisor = ((chart.divisor - center) | center.without(selector)).with(exceptional);
  return m;
}

Monomial exponent_transport(const Monomial& sigma, const LabelSet& center, const std::string& selector,
                            const std::string& exceptional) {
  std::vector<Monomial::Factor> factors;
  std::uint32_t sum = 0;
  for (const auto& [x, k] : sigma.factors()) {
    if (center.contains(x)) sum += k;
    if (x != selector) factors.emplace_back(x, k);
  }
  Monomial out(std::move(factors));
  return sum == 0 ? out : out * Monomial::variable(exceptional, sum);
}

std::pair<LabelSet, Point> exponent_transport(const Point& sigma, const LabelSet& axes, const LabelSet& center,
                                              const std::string& selector, const std::string& exceptional) {
  if (!center.is_subset_of(axes)) throw std::invalid_argument("center is not inside the axes");
  if (!center.contains(selector)) throw std::invalid_argument("selector " + selector + " is not in the center");
  const LabelSet target = axes.without(selector).with(exceptional);
  const Monomial moved = exponent_transport(to_monomial(sigma, axes), center, selector, exceptional);
  return {target, to_point(moved, target)};
}

Pullback pullback(const LogFormChart& chart, const LabelSet& center, const std::string& selector,
                  const std::string& exceptional) {
  Pullback out;
  out.map = blowup_chart_map(chart, center, selector, exceptional);

  LogFormChart& raw = out.unsaturated;
  raw.id = chart.id + "/" + selector;
  raw.divisor = out.map.new_divisor;
  raw.free = chart.free;
  raw.provenance = ChartProvenance{chart.id, center, selector, exceptional, out.map.substitution};
  Polynomial exceptional_coeff;
  for (const auto& [v, a] : chart.coeffs) {
    Polynomial image = poly_substitute(a, out.map.substitution);
    if (center.contains(v)) exceptional_coeff += image;
    if (v != selector) raw.coeffs[v] = std::move(image);
  }
  raw.coeffs[exceptional] = std::move(exceptional_coeff);

  const std::vector<Polynomial> list = raw.coefficient_list();
  const Monomial content = monomial_content(list, LabelSet{exceptional});
  out.exceptional_content = content.degree(exceptional);
  out.chart = raw;
  for (auto& [v, a] : out.chart.coeffs) a = a.divided_by(content);
  return out;
}

std::vector<LogFormChart> blowup_chart(const LogFormChart& chart, const LabelSet& center,
                                       const std::string& exceptional) {
  check_center(chart, center, exceptional);
  std::vector<LogFormChart> out;
  for (const auto& j0 : center) out.push_back(pullback(chart, center, j0, exceptional).chart);
  return out;
}

Atlas blowup_atlas(const Atlas& atlas, const LabelSet& center, ExecPolicy policy) {
  const std::string e = atlas.next_exceptional();
  std::vector<const LogFormChart*> affected;
  for (const auto* c : atlas.leaves()) {
    if (center.is_subset_of(c->divisor)) affected.push_back(c);
  }
  if (center.empty() || affected.empty()) {
    throw std::invalid_argument("center " + center.to_string() + " is not realized by any leaf chart");
  }
  std::vector<std::pair<std::string, std::vector<LogFormChart>>> replacements(affected.size());
  parallel_for(affected.size(), policy, [&](std::size_t i) {
    replacements[i] = {affected[i]->id, blowup_chart(*affected[i], center, e)};
    for (const auto& c : replacements[i].second) validate_chart(c, false);
  });
  const FabricBlowupReport rep = blowup_fabric(atlas.fabric(), center, e);
  Atlas next = atlas;
  next.apply_blowup(center, e, replacements, rep.result);
  if (!(leaf_fabric(next) == next.fabric())) {
    throw std::logic_error("blown-up charts do not realize the transformed fabric");
  }
  return next;
}

Rational rho_value(const LogFormChart& chart, const WeightVector& rho) {
  const SupportSet s = chart_support(chart, rho.axes());
  if (s.points.empty()) throw std::invalid_argument("zero form has no rho-value");
  Rational best = rho(*s.points.begin());
  for (const auto& p : s.points) best = std::min(best, rho(p));
  return best;
}

ValueInvariance pullback_value_invariance(const LogFormChart& chart, const LabelSet& center, const WeightVector& rho,
                                          const std::string& exceptional) {
  if (!center.is_subset_of(rho.axes()) || !rho.axes().is_subset_of(chart.divisor)) {
    throw std::invalid_argument("need center ⊆ axes of rho ⊆ divisor");
  }
  ValueInvariance out;
  out.stratum = rho.axes();
  const WeightClass wc = weight_class(rho, center);
  out.cell = wc.a;
  out.source_value = rho_value(chart, rho);
  const WeightVector rho_prime = weight_transport(rho, center, wc.a, exceptional);
  for (const auto& j0 : center - wc.a) {
    const Pullback pb = pullback(chart, center, j0, exceptional);
    const Rational v = rho_value(pb.unsaturated, rho_prime);
    out.target_values.emplace_back(j0, v);
    if (v != out.source_value) out.equal = false;
  }
  return out;
}

}  // namespace folnewt
