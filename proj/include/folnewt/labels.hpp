#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace folnewt {

/// Compares identifiers so that digit runs compare numerically: x2 < x10.
int natural_compare(std::string_view a, std::string_view b);

struct NaturalLess {
  using is_transparent = void;
  bool operator()(std::string_view a, std::string_view b) const {
    return natural_compare(a, b) < 0;
  }
};

/// A finite set of variable/divisor labels, kept sorted in natural order.
/// Used both for divisor strata (index sets J) and for variable sets.
class LabelSet {
 public:
  using const_iterator = std::vector<std::string>::const_iterator;

  LabelSet() = default;
  LabelSet(std::initializer_list<std::string> labels);
  explicit LabelSet(std::vector<std::string> labels);

  bool contains(std::string_view label) const;
  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }
  const_iterator begin() const { return items_.begin(); }
  const_iterator end() const { return items_.end(); }
  const std::string& operator[](std::size_t i) const { return items_[i]; }
  const std::vector<std::string>& items() const { return items_; }

  /// Position of `label` in natural order, or size() when absent.
  std::size_t index_of(std::string_view label) const;

  bool is_subset_of(const LabelSet& other) const;
  LabelSet with(std::string label) const;
  LabelSet without(std::string_view label) const;

  friend LabelSet operator|(const LabelSet& a, const LabelSet& b);
  friend LabelSet operator&(const LabelSet& a, const LabelSet& b);
  friend LabelSet operator-(const LabelSet& a, const LabelSet& b);

  friend bool operator==(const LabelSet& a, const LabelSet& b) = default;
  /// Lexicographic on the sorted label lists (natural order per label).
  friend std::strong_ordering operator<=>(const LabelSet& a, const LabelSet& b);

  /// "{x1,x2}"
  std::string to_string() const;

  /// All subsets, ordered by size then lexicographically.
  std::vector<LabelSet> subsets() const;

 private:
  std::vector<std::string> items_;
};

}  // namespace folnewt
