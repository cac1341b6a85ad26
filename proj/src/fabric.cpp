#include "folnewt/fabric.hpp"

#include <algorithm>
#include <stdexcept>

namespace folnewt {

SupportFabric::SupportFabric(const std::vector<LabelSet>& strata) {
  for (const auto& s : strata) {
    bool covered = false;
    for (const auto& t : strata) {
      if (s.size() < t.size() && s.is_subset_of(t)) {
        covered = true;
        break;
      }
    }
    if (!covered) maximal_.insert(s);
  }
  if (maximal_.empty()) maximal_.insert(LabelSet{});
}

SupportFabric SupportFabric::powerset(const LabelSet& labels) { return SupportFabric({labels}); }

bool SupportFabric::contains(const LabelSet& stratum) const {
  return std::any_of(maximal_.begin(), maximal_.end(), [&](const LabelSet& m) { return stratum.is_subset_of(m); });
}

std::vector<LabelSet> SupportFabric::strata() const {
  std::set<LabelSet> all;
  for (const auto& m : maximal_) {
    for (auto& s : m.subsets()) all.insert(std::move(s));
  }
  std::vector<LabelSet> out(all.begin(), all.end());
  std::sort(out.begin(), out.end(), [](const LabelSet& a, const LabelSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

LabelSet SupportFabric::labels() const {
  LabelSet out;
  for (const auto& m : maximal_) out = out | m;
  return out;
}

LabelSet transformed_stratum(const LabelSet& k, const LabelSet& center, const LabelSet& a,
                             const std::string& exceptional) {
  return ((k - center) | a).with(exceptional);
}

FabricBlowupReport blowup_fabric(const SupportFabric& fabric, const LabelSet& center, const std::string& exceptional) {
  if (center.empty()) throw std::invalid_argument("blow-up center must be nonempty");
  if (!fabric.contains(center)) throw std::invalid_argument("center " + center.to_string() + " is not a stratum");
  if (fabric.labels().contains(exceptional)) throw std::invalid_argument("label already in use: " + exceptional);

  FabricBlowupReport rep;
  rep.center = center;
  rep.exceptional = exceptional;
  std::vector<LabelSet> next;
  // proper subsets of the center
  std::vector<LabelSet> proper = center.subsets();
  proper.pop_back();  // the last one (largest) is the center itself
  for (const auto& k : fabric.strata()) {
    if (center.is_subset_of(k)) {
      rep.removed.push_back(k);
      auto& repl = rep.replacements[k];
      for (const auto& a : proper) {
        repl.push_back(transformed_stratum(k, center, a, exceptional));
        next.push_back(repl.back());
      }
    } else {
      rep.kept.push_back(k);
      next.push_back(k);
    }
  }
  rep.result = SupportFabric(next);
  return rep;
}

WeightClass weight_class(const WeightVector& rho, const LabelSet& center) {
  if (center.empty()) throw std::invalid_argument("weight class needs a nonempty center");
  if (!center.is_subset_of(rho.axes())) throw std::invalid_argument("center is not contained in the weight axes");
  WeightClass wc;
  wc.r = rho.at(center[0]);
  for (const auto& j : center) wc.r = std::min(wc.r, rho.at(j));
  std::vector<std::string> a;
  for (const auto& j : center) {
    if (rho.at(j) > wc.r) a.push_back(j);
  }
  wc.a = LabelSet(std::move(a));
  return wc;
}

WeightVector weight_transport(const WeightVector& rho, const LabelSet& center, const std::string& exceptional) {
  return weight_transport(rho, center, weight_class(rho, center).a, exceptional);
}

WeightVector weight_transport(const WeightVector& rho, const LabelSet& center, const LabelSet& a,
                              const std::string& exceptional) {
  const WeightClass wc = weight_class(rho, center);
  if (!(wc.a == a)) {
    throw std::invalid_argument("weight " + rho.to_string() + " is not in the cell A=" + a.to_string());
  }
  if (rho.axes().contains(exceptional)) throw std::invalid_argument("exceptional label clashes with an axis");
  const LabelSet target = transformed_stratum(rho.axes(), center, a, exceptional);
  std::vector<Rational> entries;
  for (const auto& label : target) {
    if (label == exceptional) {
      entries.push_back(wc.r);
    } else if (a.contains(label)) {
      entries.push_back(rho.at(label) - wc.r);
    } else {
      entries.push_back(rho.at(label));
    }
  }
  return WeightVector(target, std::move(entries));
}

WeightVector weight_transport_inverse(const WeightVector& rho_prime, const LabelSet& center, const LabelSet& a,
                                      const std::string& exceptional) {
  const LabelSet& kp = rho_prime.axes();
  if (!kp.contains(exceptional) || !a.is_subset_of(kp) || !a.is_subset_of(center) || a == center) {
    throw std::invalid_argument("weight is not on a transformed stratum K'(A)");
  }
  const LabelSet outside = kp.without(exceptional) - a;
  if (!(outside & center).empty()) throw std::invalid_argument("weight axes overlap the center");
  const Rational& r = rho_prime.at(exceptional);
  const LabelSet source = outside | center;
  std::vector<Rational> entries;
  for (const auto& label : source) {
    if (a.contains(label)) {
      entries.push_back(rho_prime.at(label) + r);
    } else if (center.contains(label)) {
      entries.push_back(r);
    } else {
      entries.push_back(rho_prime.at(label));
    }
  }
  return WeightVector(source, std::move(entries));
}

}  // namespace folnewt
