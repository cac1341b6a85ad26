#pragma once

// Brute-force polyhedra oracle. Feasibility of each small LP is decided by
// enumerating basic solutions (square subsystems of tight constraints) with
// exact Gaussian elimination; no simplex code is shared with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "oracles/linalg.hpp"

namespace oracle {

using IPoint = std::vector<std::int64_t>;

/// Calls f on every k-subset of {0..n-1}; stops early when f returns true.
inline bool for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) -> bool {
    if (pos == k) return f(idx);
    for (std::size_t i = start; i + (k - pos) <= n; ++i) {
      idx[pos] = i;
      if (rec(pos + 1, i + 1)) return true;
    }
    return false;
  };
  return rec(0, 0);
}

/// v in conv(others) + orthant? Standard form: sum l_w w + s = v, sum l_w = 1,
/// l, s >= 0. Feasible iff some basis of d+1 columns gives a nonnegative solution.
inline bool dominated(const IPoint& v, const std::vector<IPoint>& others) {
  if (others.empty()) return false;
  const std::size_t d = v.size();
  const std::size_t n = others.size() + d;  // columns: lambdas then slacks
  auto column = [&](std::size_t c, std::size_t row) -> Q {
    if (c < others.size()) return row < d ? Q(others[c][row]) : Q(1);
    return row == c - others.size() ? Q(1) : Q(0);
  };
  const std::size_t m = d + 1;
  for (std::size_t k = 1; k <= std::min(m, n); ++k) {
    const bool found = for_each_subset(n, k, [&](const std::vector<std::size_t>& cols) {
      Matrix a(m, std::vector<Q>(k + 1));
      for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t j = 0; j < k; ++j) a[r][j] = column(cols[j], r);
        a[r][k] = r < d ? Q(v[r]) : Q(1);
      }
      auto x = solve_unique(a, k);
      if (!x) return false;
      return std::all_of(x->begin(), x->end(), [](const Q& q) { return q >= 0; });
    });
    if (found) return true;
  }
  return false;
}

/// Vertices of conv(S) + orthant: the points not dominated by the rest.
inline std::vector<IPoint> vertices(const std::set<IPoint>& support) {
  std::vector<IPoint> out;
  for (const auto& v : support) {
    std::vector<IPoint> rest;
    for (const auto& w : support) {
      if (w != v) rest.push_back(w);
    }
    if (!dominated(v, rest)) out.push_back(v);
  }
  return out;
}

/// Is there rho >= 1 (componentwise) constant on `face` and at least one
/// larger on every other point of `others`? Any feasible pointed system has a
/// vertex where d independent constraints are tight, so it suffices to try
/// the equality rows plus every small subset of inequality rows as equalities.
inline bool is_compact_face(const std::vector<IPoint>& face, const std::set<IPoint>& others) {
  const std::size_t d = face.front().size();
  std::vector<std::vector<Q>> eq;  // rows: coeffs then rhs
  for (std::size_t i = 1; i < face.size(); ++i) {
    std::vector<Q> row(d + 1);
    for (std::size_t k = 0; k < d; ++k) row[k] = Q(face[i][k] - face[0][k]);
    eq.push_back(row);
  }
  std::vector<std::vector<Q>> ineq;  // row . rho >= rhs
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<Q> row(d + 1);
    row[k] = 1;
    row[d] = 1;
    ineq.push_back(row);
  }
  for (const auto& w : others) {
    if (std::find(face.begin(), face.end(), w) != face.end()) continue;
    std::vector<Q> row(d + 1);
    for (std::size_t k = 0; k < d; ++k) row[k] = Q(w[k] - face[0][k]);
    row[d] = 1;
    ineq.push_back(row);
  }
  auto satisfies = [&](const std::vector<Q>& rho) {
    for (const auto& row : eq) {
      Q s = 0;
      for (std::size_t k = 0; k < d; ++k) s += row[k] * rho[k];
      if (s != 0) return false;
    }
    for (const auto& row : ineq) {
      Q s = 0;
      for (std::size_t k = 0; k < d; ++k) s += row[k] * rho[k];
      if (s < row[d]) return false;
    }
    return true;
  };
  for (std::size_t k = 0; k <= d; ++k) {
    const bool found = for_each_subset(ineq.size(), k, [&](const std::vector<std::size_t>& pick) {
      Matrix a = eq;
      for (std::size_t i : pick) a.push_back(ineq[i]);
      auto rho = solve_unique(a, d);
      return rho && satisfies(*rho);
    });
    if (found) return true;
  }
  return false;
}

/// Number of compact faces, by testing every nonempty subset of vertices.
inline std::size_t compact_face_count(const std::set<IPoint>& support) {
  const std::vector<IPoint> verts = vertices(support);
  // other vertices must lie strictly above the face; non-vertex support
  // points may touch it, so only vertices enter the constraints
  const std::set<IPoint> vertex_set(verts.begin(), verts.end());
  std::size_t count = 0;
  const std::size_t n = verts.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<IPoint> face;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) face.push_back(verts[i]);
    }
    if (is_compact_face(face, vertex_set)) ++count;
  }
  return count;
}

}  // namespace oracle
