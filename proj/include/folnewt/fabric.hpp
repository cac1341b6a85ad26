#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "folnewt/labels.hpp"
#include "folnewt/polyhedra.hpp"

namespace folnewt {

/// The combinatorics of divisor strata: a downward closed family of label
/// sets, stored by its maximal members. The empty set is always a stratum.
class SupportFabric {
 public:
  SupportFabric() = default;
  explicit SupportFabric(const std::vector<LabelSet>& strata);

  static SupportFabric powerset(const LabelSet& labels);

  bool contains(const LabelSet& stratum) const;
  const std::set<LabelSet>& maximal_strata() const { return maximal_; }
  /// Every stratum, ordered by size then lexicographically.
  std::vector<LabelSet> strata() const;
  LabelSet labels() const;

  friend bool operator==(const SupportFabric&, const SupportFabric&) = default;

 private:
  std::set<LabelSet> maximal_;
};

struct FabricBlowupReport {
  LabelSet center;
  std::string exceptional;
  /// Strata containing the center; they disappear.
  std::vector<LabelSet> removed;
  /// Strata not containing the center; untouched.
  std::vector<LabelSet> kept;
  /// For each removed K, the strata K'(A) = (K - J) | A | {e} for A ⊊ J, ordered by A.
  std::map<LabelSet, std::vector<LabelSet>> replacements;
  SupportFabric result;
};

/// Combinatorial blow-up of `fabric` along the stratum `center`, with
/// `exceptional` the fresh label. Throws std::invalid_argument when the
/// center is empty, not a stratum, or the label is already in use.
FabricBlowupReport blowup_fabric(const SupportFabric& fabric, const LabelSet& center, const std::string& exceptional);

/// K'(A) = (K - J) | A | {e}.
LabelSet transformed_stratum(const LabelSet& k, const LabelSet& center, const LabelSet& a, const std::string& exceptional);

struct WeightClass {
  LabelSet a;  ///< labels of the center where rho exceeds its minimum
  Rational r;  ///< minimum of rho over the center
};

/// Which cell W_K^A of the partition contains rho: r = min over J of rho,
/// A = {j in J : rho_j > r}. Always a proper subset of J.
WeightClass weight_class(const WeightVector& rho, const LabelSet& center);

/// rho' on K'(A): rho on K - J, rho - r on A, r on the exceptional label.
WeightVector weight_transport(const WeightVector& rho, const LabelSet& center, const std::string& exceptional);
/// Same, but checks that rho lies in the cell of `a`; throws std::invalid_argument otherwise.
WeightVector weight_transport(const WeightVector& rho, const LabelSet& center, const LabelSet& a,
                              const std::string& exceptional);
/// Inverse of weight_transport for the cell `a`.
WeightVector weight_transport_inverse(const WeightVector& rho_prime, const LabelSet& center, const LabelSet& a,
                                      const std::string& exceptional);

}  // namespace folnewt
