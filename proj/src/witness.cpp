#include "folnewt/witness.hpp"

#include <cmath>
#include <functional>
#include <random>

#include <Eigen/Dense>

namespace folnewt {

namespace {

using Complex = std::complex<double>;

const std::vector<Rational>& nonzero_candidates() {
  static const std::vector<Rational> values = {1, -1, 2, -2, Rational(1, 2), Rational(-1, 2), 3, -3};
  return values;
}

const std::vector<Rational>& any_candidates() {
  static const std::vector<Rational> values = {0, 1, -1, 2, -2, Rational(1, 2), Rational(-1, 2), 3};
  return values;
}

// Calls visit(indices) for every index tuple with entries < base, in order of
// increasing index sum, until visit returns true or the budget runs out.
template <class Visit>
bool enumerate_by_rank(std::size_t n, std::size_t base, std::size_t budget, Visit&& visit) {
  std::vector<std::size_t> idx(n, 0);
  std::size_t spent = 0;
  for (std::size_t rank = 0; rank <= n * (base - 1); ++rank) {
    // distribute `rank` over n slots, each below base
    std::function<bool(std::size_t, std::size_t)> place = [&](std::size_t slot, std::size_t left) -> bool {
      if (slot + 1 == n) {
        if (left >= base) return false;
        idx[slot] = left;
        if (++spent > budget) return true;
        return visit(idx);
      }
      for (std::size_t k = 0; k < base && k <= left; ++k) {
        idx[slot] = k;
        if (place(slot + 1, left - k)) return true;
        if (spent > budget) return true;
      }
      return false;
    };
    if (n == 0) return visit(idx);
    if (place(0, rank)) return spent <= budget;
    if (spent > budget) return false;
  }
  return false;
}

struct ComplexTerm {
  Complex coefficient;
  std::vector<std::pair<std::size_t, unsigned>> powers;
};

using ComplexPoly = std::vector<ComplexTerm>;

ComplexPoly to_complex(const Polynomial& p, const std::vector<std::string>& vars) {
  ComplexPoly out;
  for (const auto& [m, c] : p.terms()) {
    ComplexTerm t{Complex(c.get_d(), 0.0), {}};
    for (const auto& [x, k] : m.factors()) {
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i] == x) t.powers.emplace_back(i, k);
      }
    }
    out.push_back(std::move(t));
  }
  return out;
}

Complex eval(const ComplexPoly& p, const Eigen::VectorXcd& z) {
  Complex sum = 0.0;
  for (const auto& t : p) {
    Complex v = t.coefficient;
    for (const auto& [i, k] : t.powers) v *= std::pow(z[static_cast<Eigen::Index>(i)], static_cast<int>(k));
    sum += v;
  }
  return sum;
}

std::optional<Witness> numeric_search(const std::vector<Polynomial>& equations, const LabelSet& nonzero,
                                      const LabelSet& others, const WitnessOptions& options) {
  std::vector<std::string> vars = (nonzero | others).items();
  const std::string u = "_w";
  vars.push_back(u);
  Polynomial guard = Polynomial::variable(u);
  for (const auto& x : nonzero) guard *= Polynomial::variable(x);
  guard -= Polynomial(1);

  std::vector<Polynomial> system = equations;
  system.push_back(guard);
  std::vector<ComplexPoly> f;
  std::vector<std::vector<ComplexPoly>> jac;
  for (const auto& p : system) {
    f.push_back(to_complex(p, vars));
    std::vector<ComplexPoly> row;
    for (const auto& v : vars) row.push_back(to_complex(derivative(p, v), vars));
    jac.push_back(std::move(row));
  }
  const auto rows = static_cast<Eigen::Index>(system.size());
  const auto cols = static_cast<Eigen::Index>(vars.size());

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> dist(-1.5, 1.5);
  for (std::size_t start = 0; start < options.numeric_restarts; ++start) {
    Eigen::VectorXcd z(cols);
    for (Eigen::Index i = 0; i < cols; ++i) z[i] = Complex(dist(rng), dist(rng));
    for (std::size_t it = 0; it < options.numeric_iterations; ++it) {
      Eigen::VectorXcd fz(rows);
      Eigen::MatrixXcd jz(rows, cols);
      for (Eigen::Index r = 0; r < rows; ++r) {
        fz[r] = eval(f[static_cast<std::size_t>(r)], z);
        for (Eigen::Index c = 0; c < cols; ++c) {
          jz(r, c) = eval(jac[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], z);
        }
      }
      if (!fz.allFinite() || fz.norm() > 1e12) break;
      if (fz.norm() < 1e-12) break;
      const Eigen::VectorXcd step = jz.completeOrthogonalDecomposition().solve(-fz);
      if (!step.allFinite()) break;
      z += step;
    }
    double residual = 0.0;
    for (std::size_t r = 0; r + 1 < system.size(); ++r) residual = std::max(residual, std::abs(eval(f[r], z)));
    if (!(residual < 1e-9)) continue;
    bool ok = true;
    Witness w;
    for (std::size_t i = 0; i + 1 < vars.size(); ++i) {
      const Complex zi = z[static_cast<Eigen::Index>(i)];
      if (nonzero.contains(vars[i]) && std::abs(zi) < 1e-6) ok = false;
      w.numeric[vars[i]] = zi;
    }
    if (!ok) continue;
    w.exact = false;
    w.residual = residual;
    return w;
  }
  return std::nullopt;
}

}  // namespace

bool verify_witness(const std::vector<Polynomial>& equations, const LabelSet& nonzero, const RationalPoint& point) {
  for (const auto& x : nonzero) {
    auto it = point.find(x);
    if (it == point.end() || it->second == 0) return false;
  }
  try {
    for (const auto& p : equations) {
      if (p.evaluate(point) != 0) return false;
    }
  } catch (const std::out_of_range&) {
    return false;
  }
  return true;
}

std::optional<Witness> find_witness(const std::vector<Polynomial>& equations, const LabelSet& nonzero,
                                    const LabelSet& others, const WitnessOptions& options) {
  const std::vector<std::string> vars = (nonzero | others).items();
  const std::size_t base = nonzero_candidates().size();
  RationalPoint point;
  std::optional<Witness> found;
  enumerate_by_rank(vars.size(), base, options.max_rational_candidates, [&](const std::vector<std::size_t>& idx) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
      point[vars[i]] = nonzero.contains(vars[i]) ? nonzero_candidates()[idx[i]] : any_candidates()[idx[i]];
    }
    if (!verify_witness(equations, nonzero, point)) return false;
    found = Witness{true, point, {}, 0.0};
    return true;
  });
  if (found || !options.numeric_fallback) return found;
  return numeric_search(equations, nonzero, others, options);
}

}  // namespace folnewt
