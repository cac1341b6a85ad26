#pragma once

// Degree-bounded Macaulay-matrix oracle for ideal membership. A certificate
// 1 = sum c_i * g_i with deg(c_i * g_i) <= bound is searched by linear
// algebra over the rationals; no Gröbner code is involved.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "folnewt/polynomial.hpp"
#include "oracles/linalg.hpp"

namespace oracle {

/// Every monomial in `vars` of total degree <= degree.
inline std::vector<folnewt::Monomial> monomials_up_to(const std::vector<std::string>& vars, unsigned degree) {
  std::vector<folnewt::Monomial> out{folnewt::Monomial()};
  for (const auto& v : vars) {
    std::vector<folnewt::Monomial> next;
    for (const auto& m : out) {
      for (unsigned e = 0; m.degree() + e <= degree; ++e) {
        next.push_back(e == 0 ? m : m * folnewt::Monomial::variable(v, e));
      }
    }
    out = std::move(next);
  }
  return out;
}

/// True iff `target` is a combination of the generators with multipliers of
/// degree at most bound - deg(g_i).
inline bool in_ideal_bounded(const folnewt::Polynomial& target, const std::vector<folnewt::Polynomial>& gens,
                             unsigned bound) {
  folnewt::LabelSet all = target.variables();
  for (const auto& g : gens) all = all | g.variables();
  const std::vector<std::string> vars = all.items();
  const auto columns = monomials_up_to(vars, bound);
  std::map<std::string, std::size_t> column_of;
  for (std::size_t i = 0; i < columns.size(); ++i) column_of[columns[i].to_string()] = i;

  // Columns of the system are the products m * g_i; rows are monomials.
  std::vector<folnewt::Polynomial> products;
  for (const auto& g : gens) {
    if (g.is_zero() || g.total_degree() > bound) continue;
    for (const auto& m : monomials_up_to(vars, bound - g.total_degree())) products.push_back(g * m);
  }
  if (target.total_degree() > bound) return false;
  Matrix a(columns.size(), std::vector<Q>(products.size() + 1));
  for (std::size_t c = 0; c < products.size(); ++c) {
    for (const auto& [m, q] : products[c].terms()) a[column_of.at(m.to_string())][c] = q;
  }
  for (const auto& [m, q] : target.terms()) a[column_of.at(m.to_string())][products.size()] = q;
  const auto pivots = row_reduce(a, products.size() + 1);
  return pivots.empty() || pivots.back() != products.size();
}

inline bool contains_one_bounded(const std::vector<folnewt::Polynomial>& gens, unsigned bound) {
  return in_ideal_bounded(folnewt::Polynomial(1), gens, bound);
}

}  // namespace oracle
