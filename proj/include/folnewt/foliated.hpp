#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "folnewt/fabric.hpp"
#include "folnewt/groebner.hpp"
#include "folnewt/labels.hpp"
#include "folnewt/parallel.hpp"
#include "folnewt/polyhedra.hpp"
#include "folnewt/polynomial.hpp"

namespace folnewt {

/// Rejected input document or chart (bad syntax, unsaturated form, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using CoefficientMap = std::map<std::string, Polynomial, NaturalLess>;

/// How a chart arose from its parent by a blow-up.
struct ChartProvenance {
  std::string parent;
  LabelSet center;
  std::string selector;
  std::string exceptional;
  Substitution substitution;
};

/// One polynomial chart carrying eta = sum_{j in D} a_j dx_j/x_j + sum_l a_l dy_l.
struct LogFormChart {
  std::string id;
  LabelSet divisor;
  LabelSet free;
  CoefficientMap coeffs;  ///< one entry per variable of divisor | free
  std::optional<ChartProvenance> provenance;

  LabelSet variables() const { return divisor | free; }
  const Polynomial& coefficient(std::string_view var) const;
  std::vector<Polynomial> coefficient_list() const;
};

/// Torus variable attached to a divisor label in initial forms: "T_<label>".
std::string torus_variable(std::string_view label);
/// True for names of the form e<digits>, reserved for exceptional divisors.
bool is_exceptional_label(std::string_view name);

/// Checks the structural chart invariants: coefficients exactly for the
/// declared variables, not all zero, no monomial content along the divisor.
/// With `require_coprime`, also rejects a nonconstant gcd. Throws InputError.
void validate_chart(const LogFormChart& chart, bool require_coprime);

enum class InputStyle { logarithmic, holomorphic };

struct SpaceDocument {
  std::vector<std::string> divisor;
  std::vector<std::string> free;
  std::map<std::string, std::string> form;
  InputStyle style = InputStyle::logarithmic;
};

/// Reads the JSON input format; throws InputError on malformed documents.
SpaceDocument parse_space_document(std::string_view json_text);

/// Builds and validates the root chart. Holomorphic input (coefficients of dz)
/// is converted with a_j = f_j * x_j on divisor variables and then divided by
/// its divisor monomial content.
LogFormChart make_root_chart(const SpaceDocument& doc);

struct BlowupRecord {
  LabelSet center;
  std::string exceptional;
  std::vector<std::string> replaced;  ///< ids of the leaves that were blown up
};

/// A tree of charts modeling (M, E; F); the leaves are the current model.
class Atlas {
 public:
  explicit Atlas(LogFormChart root);

  const std::vector<LogFormChart>& charts() const { return charts_; }
  const LogFormChart& chart(std::string_view id) const;
  const LogFormChart& root() const { return charts_.front(); }
  /// Leaf charts in creation order.
  std::vector<const LogFormChart*> leaves() const;
  std::vector<std::string> children(std::string_view id) const;
  const SupportFabric& fabric() const { return fabric_; }
  const std::vector<BlowupRecord>& log() const { return log_; }

  /// e<N> with N one past the number of blow-ups so far.
  std::string next_exceptional() const;

  /// Replaces each listed leaf by its charts and appends one log entry.
  /// Used by blowup_atlas.
  void apply_blowup(const LabelSet& center, const std::string& exceptional,
                    const std::vector<std::pair<std::string, std::vector<LogFormChart>>>& replacements,
                    const SupportFabric& new_fabric);

 private:
  std::vector<LogFormChart> charts_;
  std::vector<bool> leaf_;
  std::map<std::string, std::size_t> index_;
  SupportFabric fabric_;
  std::vector<BlowupRecord> log_;
};

Atlas load_space(std::string_view json_text);
Atlas load_space(const SpaceDocument& doc);

/// Downward closure of the leaves' divisor sets.
SupportFabric leaf_fabric(const Atlas& atlas);

struct AdaptedCoefficient {
  std::string variable;
  Polynomial coefficient;
  /// True for divisor variables outside the stratum: their logarithmic
  /// coefficient differs from the holomorphic one by the unit 1/x_i there.
  bool unit_scaled = false;
};

struct AdaptedFamily {
  LabelSet stratum;
  std::vector<AdaptedCoefficient> coefficients;
  /// Divisor variables that are units on the stratum; zero-set checks
  /// saturate by their product.
  LabelSet saturate_by;
};

AdaptedFamily adapted_coefficients(const LogFormChart& chart, const LabelSet& stratum);

/// Union of the divisor supports over `stratum` of every coefficient of the chart.
SupportSet chart_support(const LogFormChart& chart, const LabelSet& stratum);

/// Per-stratum polyhedra over the fabric; supports are unions over the leaf
/// charts whose divisor set contains the stratum. Throws std::logic_error if
/// projection compatibility fails.
PolyhedraSystem newton_polyhedra_system(const Atlas& atlas, ExecPolicy policy = ExecPolicy::serial);

/// Polyhedra of the strata of one chart, from that chart's coefficients alone.
PolyhedraSystem chart_polyhedra(const LogFormChart& chart, ExecPolicy policy = ExecPolicy::serial);

/// Minimum vanishing order of the coefficients at a rational point.
std::uint32_t log_order(const LogFormChart& chart, const std::map<std::string, Rational, NaturalLess>& point);

struct LogsingStratum {
  std::string chart;
  LabelSet stratum;
  Tri empty = Tri::undetermined;
  /// Saturated ideal of the coefficients on the stratum (only when nonempty).
  std::vector<Polynomial> locus;
};

struct LogsingResult {
  Tri empty = Tri::undetermined;
  std::vector<LogsingStratum> strata;  ///< every nonempty or undetermined stratum
  groebner::FuelUsage usage;
};

/// Decides whether the logarithmic singular locus of the leaves is empty.
LogsingResult logsing_empty(const Atlas& atlas, const groebner::Fuel& fuel, ExecPolicy policy = ExecPolicy::serial);
LogsingResult logsing_empty(const LogFormChart& chart, const groebner::Fuel& fuel,
                            ExecPolicy policy = ExecPolicy::serial);

/// Weighted initial forms A_v = sum over face points sigma of a_{v,sigma} T^sigma.
struct InitialFormSystem {
  std::string chart;
  LabelSet stratum;
  WeightVector weight;
  Rational value;
  std::vector<Point> face_points;
  CoefficientMap forms;  ///< keyed by chart variable

  /// Torus variables T_j, j in the stratum.
  std::vector<std::string> torus_variables() const;
};

InitialFormSystem initial_form_system(const LogFormChart& chart, const LabelSet& stratum, const WeightVector& rho);
InitialFormSystem initial_form_system(const LogFormChart& chart, const LabelSet& stratum, const Face& face);

/// Frobenius condition omega ^ d omega = 0 for the form with denominators
/// cleared. Purely a validator; no verdict depends on it.
Tri integrability_check(const LogFormChart& chart, const groebner::Fuel& fuel);

}  // namespace folnewt
