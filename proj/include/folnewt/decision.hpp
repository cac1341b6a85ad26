#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "folnewt/blowup.hpp"
#include "folnewt/foliated.hpp"
#include "folnewt/witness.hpp"

namespace folnewt {

enum class Outcome { non_degenerate, degenerate, undetermined };

std::string_view to_string(Outcome o);

struct Evidence {
  std::string chart;
  LabelSet stratum;
  std::optional<Face> face;  ///< absent for singular-locus evidence
  /// Generators of the degenerate (or singular) locus in the stratum
  /// variables; nullopt when the fuel ran out while computing it.
  std::optional<std::vector<Polynomial>> locus;
  std::optional<Witness> witness;
  std::vector<LabelSet> centers;  ///< blow-ups performed before the check
};

struct Verdict {
  Outcome outcome = Outcome::undetermined;
  std::optional<Evidence> evidence;
  std::string reason;
  groebner::FuelUsage usage;
  std::size_t checks = 0;  ///< faces (direct) or strata (theorem route) examined
};

enum class Strategy { deepest_first, lex_first, widest_polyhedron };

std::string_view to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view name);
const std::vector<Strategy>& all_strategies();

struct DecisionOptions {
  groebner::Fuel fuel;
  std::size_t max_blowups = 64;
  Strategy strategy = Strategy::deepest_first;
  ExecPolicy policy = ExecPolicy::serial;
  bool search_witness = true;
  WitnessOptions witness;
};

/// Strata of the system whose polyhedron has at least two vertices, in
/// (size, lexicographic) order.
std::vector<LabelSet> admissible_centers(const PolyhedraSystem& system);
std::vector<LabelSet> admissible_centers(const Atlas& atlas, ExecPolicy policy = ExecPolicy::serial);

/// The center the strategy picks; requires a nonempty candidate list.
LabelSet select_center(const PolyhedraSystem& system, const std::vector<LabelSet>& centers, Strategy strategy);

struct DegeneracyLocus {
  Tri empty = Tri::undetermined;
  InitialFormSystem system;
  std::vector<Polynomial> equations;  ///< nonzero initial forms
  LabelSet nonzero;                   ///< T_J and the divisor variables off J
  LabelSet others;                    ///< free variables
  std::optional<std::vector<Polynomial>> locus;
};

/// Torus-saturated initial-form ideal of (J, face) in the chart. With
/// `compute_locus`, a nonempty answer also eliminates the torus variables.
DegeneracyLocus degeneracy_locus(const LogFormChart& chart, const LabelSet& stratum, const Face& face,
                                 const groebner::Fuel& fuel, groebner::FuelUsage* usage = nullptr,
                                 bool compute_locus = true);

/// Face-by-face test over every leaf chart, stratum (including the empty one)
/// and compact face.
Verdict check_nnd_direct(const Atlas& atlas, const DecisionOptions& options = {});

struct DesingResult {
  Atlas atlas;
  bool complete = false;
  std::vector<LabelSet> centers;
};

/// Blows up admissible centers chosen by the strategy until none remains or
/// `max_blowups` is reached.
DesingResult desingularize(const Atlas& atlas, Strategy strategy, std::size_t max_blowups,
                           ExecPolicy policy = ExecPolicy::serial);

/// Desingularizes, then decides emptiness of the singular locus.
Verdict check_nnd_via_theorem(const Atlas& atlas, const DecisionOptions& options = {},
                              DesingResult* desing_out = nullptr);

enum class Agreement { agree, disagree, undetermined };

std::string_view to_string(Agreement a);

struct EquivalenceReport {
  Verdict direct;
  Verdict theorem;
  Agreement agreement = Agreement::undetermined;
};

EquivalenceReport verify_equivalence(const Atlas& atlas, const DecisionOptions& options = {});

struct PropertySTarget {
  std::string selector;
  Tri empty = Tri::undetermined;
  bool exceptional_sum = false;  ///< a'_e = sum of the pulled-back a_j before saturation
  bool exponent_law = false;     ///< rho'(lambda(sigma)) = rho(sigma) on the support
  std::optional<bool> witness_transported;  ///< the transported witness solves the target system
};

struct PropertySReport {
  LabelSet stratum;  ///< K, the axes of rho
  LabelSet center;   ///< J
  LabelSet cell;     ///< A
  std::string exceptional;
  WeightVector rho;
  WeightVector rho_prime;
  Tri source = Tri::undetermined;
  std::optional<Witness> source_witness;
  std::vector<PropertySTarget> targets;
  /// Emptiness agrees on every determined source/target pair.
  bool consistent = true;
  bool determined = true;
  /// All exact laws hold (exceptional sum, exponent law, witness replay).
  bool laws_hold = true;
};

/// Checks that the degeneracy locus of the face of rho on K is empty exactly
/// when those of the transported face on K'(A) are, chart by chart.
PropertySReport property_s_suite(const LogFormChart& chart, const LabelSet& center, const WeightVector& rho,
                                 const DecisionOptions& options = {});

/// The torus/stratum point in chart `selector` built from a source witness:
/// T'_k = mu_k off J, T'_j = mu_j / mu_{j0} on A, T'_e = mu_{j0}, and
/// x'_j = mu_j / mu_{j0} for the remaining center labels.
RationalPoint transport_witness(const RationalPoint& source, const LabelSet& center,
                                const LabelSet& cell, const std::string& selector, const std::string& exceptional);
/// Inverse of transport_witness.
RationalPoint transport_witness_back(const RationalPoint& target, const LabelSet& center,
                                     const LabelSet& cell, const std::string& selector,
                                     const std::string& exceptional);

/// Returns e<N> with N one past the largest exceptional index used in the chart.
std::string fresh_exceptional(const LogFormChart& chart);

}  // namespace folnewt
