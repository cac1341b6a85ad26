#pragma once

#include <string>
#include <utility>
#include <vector>

#include "folnewt/foliated.hpp"

namespace folnewt {

/// Standard chart j0 of the blow-up along x_J = 0:
/// x_{j0} -> e, x_j -> e * x_j (j in J - {j0}), every other variable fixed.
struct BlowupChartMap {
  LabelSet center;
  std::string selector;
  std::string exceptional;
  Substitution substitution;
  LabelSet new_divisor;  ///< (D - J) | (J - {j0}) | {e}
};

BlowupChartMap blowup_chart_map(const LogFormChart& chart, const LabelSet& center, const std::string& selector,
                                const std::string& exceptional);

/// lambda(sigma): the selector entry is dropped, e receives the sum of the
/// center entries, every other entry is kept. Equals the exponent of the
/// pulled-back monomial x^sigma in chart `selector`.
Monomial exponent_transport(const Monomial& sigma, const LabelSet& center, const std::string& selector,
                            const std::string& exceptional);
/// Point form on axes K; the result lives on (K - {j0}) | {e}.
std::pair<LabelSet, Point> exponent_transport(const Point& sigma, const LabelSet& axes, const LabelSet& center,
                                              const std::string& selector, const std::string& exceptional);

struct Pullback {
  BlowupChartMap map;
  /// Coefficients before division by the exceptional content; a'_e = sum of pulled-back a_j.
  LogFormChart unsaturated;
  std::uint32_t exceptional_content = 0;
  LogFormChart chart;
};

/// Pull-back of the form to chart `selector` followed by division by the
/// exceptional monomial content.
Pullback pullback(const LogFormChart& chart, const LabelSet& center, const std::string& selector,
                  const std::string& exceptional);

/// The |J| standard charts, in natural order of the selectors. Throws
/// std::invalid_argument when the center is empty, not in the divisor, or the
/// exceptional label is already a chart variable.
std::vector<LogFormChart> blowup_chart(const LogFormChart& chart, const LabelSet& center,
                                       const std::string& exceptional);

/// Replaces every leaf whose divisor contains `center` by its blow-up charts,
/// labels the exceptional divisor with the atlas's next label and updates the
/// fabric. Throws std::invalid_argument if no leaf realizes the center.
Atlas blowup_atlas(const Atlas& atlas, const LabelSet& center, ExecPolicy policy = ExecPolicy::serial);

struct ValueInvariance {
  LabelSet stratum;      ///< K, the axes of rho
  LabelSet cell;         ///< A
  Rational source_value;
  std::vector<std::pair<std::string, Rational>> target_values;  ///< per selector in J - A
  bool equal = true;
};

/// Compares nu_rho on the chart with nu_rho' of the unsaturated pull-back on
/// the charts that cover the cell of rho (selectors in J - A).
ValueInvariance pullback_value_invariance(const LogFormChart& chart, const LabelSet& center, const WeightVector& rho,
                                          const std::string& exceptional = "e1");

/// nu_rho of a family: minimum of rho over its support on the axes of rho.
Rational rho_value(const LogFormChart& chart, const WeightVector& rho);

}  // namespace folnewt
