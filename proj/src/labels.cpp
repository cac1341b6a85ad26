#include "folnewt/labels.hpp"

#include <algorithm>
#include <cctype>

namespace folnewt {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

int natural_compare(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t i0 = i, j0 = j;
      while (i0 < a.size() && a[i0] == '0') ++i0;
      while (j0 < b.size() && b[j0] == '0') ++j0;
      std::size_t i1 = i0, j1 = j0;
      while (i1 < a.size() && is_digit(a[i1])) ++i1;
      while (j1 < b.size() && is_digit(b[j1])) ++j1;
      if (i1 - i0 != j1 - j0) return (i1 - i0) < (j1 - j0) ? -1 : 1;
      for (std::size_t k = 0; k < i1 - i0; ++k) {
        if (a[i0 + k] != b[j0 + k]) return a[i0 + k] < b[j0 + k] ? -1 : 1;
      }
      // equal values; more leading zeros sorts later so the order stays total
      if (i1 - i != j1 - j) return (i1 - i) < (j1 - j) ? -1 : 1;
      i = i1;
      j = j1;
      continue;
    }
    if (a[i] != b[j]) return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]) ? -1 : 1;
    ++i;
    ++j;
  }
  if (i < a.size()) return 1;
  if (j < b.size()) return -1;
  return 0;
}

LabelSet::LabelSet(std::initializer_list<std::string> labels)
    : LabelSet(std::vector<std::string>(labels)) {}

LabelSet::LabelSet(std::vector<std::string> labels) : items_(std::move(labels)) {
  std::sort(items_.begin(), items_.end(), NaturalLess{});
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool LabelSet::contains(std::string_view label) const {
  return std::binary_search(items_.begin(), items_.end(), label, NaturalLess{});
}

std::size_t LabelSet::index_of(std::string_view label) const {
  auto it = std::lower_bound(items_.begin(), items_.end(), label, NaturalLess{});
  if (it == items_.end() || *it != label) return items_.size();
  return static_cast<std::size_t>(it - items_.begin());
}

bool LabelSet::is_subset_of(const LabelSet& other) const {
  return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end(),
                       NaturalLess{});
}

LabelSet LabelSet::with(std::string label) const {
  auto copy = items_;
  copy.push_back(std::move(label));
  return LabelSet(std::move(copy));
}

LabelSet LabelSet::without(std::string_view label) const {
  LabelSet out;
  for (const auto& l : items_) {
    if (l != label) out.items_.push_back(l);
  }
  return out;
}

LabelSet operator|(const LabelSet& a, const LabelSet& b) {
  LabelSet out;
  std::set_union(a.items_.begin(), a.items_.end(), b.items_.begin(), b.items_.end(),
                 std::back_inserter(out.items_), NaturalLess{});
  return out;
}

LabelSet operator&(const LabelSet& a, const LabelSet& b) {
  LabelSet out;
  std::set_intersection(a.items_.begin(), a.items_.end(), b.items_.begin(), b.items_.end(),
                        std::back_inserter(out.items_), NaturalLess{});
  return out;
}

LabelSet operator-(const LabelSet& a, const LabelSet& b) {
  LabelSet out;
  std::set_difference(a.items_.begin(), a.items_.end(), b.items_.begin(), b.items_.end(),
                      std::back_inserter(out.items_), NaturalLess{});
  return out;
}

std::strong_ordering operator<=>(const LabelSet& a, const LabelSet& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = natural_compare(a.items_[i], b.items_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

std::string LabelSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i) out += ',';
    out += items_[i];
  }
  out += '}';
  return out;
}

std::vector<LabelSet> LabelSet::subsets() const {
  std::vector<LabelSet> out;
  const std::size_t n = items_.size();
  out.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    LabelSet s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) s.items_.push_back(items_[i]);
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const LabelSet& a, const LabelSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace folnewt
