#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "folnewt/labels.hpp"
#include "folnewt/polynomial.hpp"

namespace folnewt {

using RationalPoint = std::map<std::string, Rational, NaturalLess>;

/// A common zero of an equation system, advisory only. Exact witnesses are
/// rational and verified; numeric ones come with their residual.
struct Witness {
  bool exact = false;
  RationalPoint values;
  std::map<std::string, std::complex<double>, NaturalLess> numeric;
  double residual = 0.0;
};

struct WitnessOptions {
  std::size_t max_rational_candidates = 20000;
  bool numeric_fallback = true;
  std::size_t numeric_restarts = 24;
  std::size_t numeric_iterations = 80;
  std::uint64_t seed = 0x5eedULL;
};

/// True iff every equation vanishes at `point` and every variable of
/// `nonzero` is nonzero there.
bool verify_witness(const std::vector<Polynomial>& equations, const LabelSet& nonzero, const RationalPoint& point);

/// Searches small rationals first (variables in `nonzero` avoid 0), then a
/// complex Gauss-Newton iteration from seeded random starts.
std::optional<Witness> find_witness(const std::vector<Polynomial>& equations, const LabelSet& nonzero,
                                    const LabelSet& others, const WitnessOptions& options = {});

}  // namespace folnewt
