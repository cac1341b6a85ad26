#include "folnewt/polyhedra.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "folnewt/lp.hpp"

namespace folnewt {

Point to_point(const Monomial& m, const LabelSet& axes) {
  Point p(axes.size(), 0);
  for (const auto& [v, e] : m.factors()) {
    std::size_t k = axes.index_of(v);
    if (k == axes.size()) throw std::invalid_argument("monomial variable " + v + " is not an axis");
    p[k] = e;
  }
  return p;
}

Monomial to_monomial(const Point& p, const LabelSet& axes) {
  std::vector<Monomial::Factor> f;
  for (std::size_t k = 0; k < axes.size(); ++k) {
    if (p[k] < 0) throw std::invalid_argument("negative exponent");
    f.emplace_back(axes[k], static_cast<std::uint32_t>(p[k]));
  }
  return Monomial(std::move(f));
}

std::string to_string(const Point& p) {
  std::string out = "(";
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(p[k]);
  }
  return out + ")";
}

WeightVector::WeightVector(LabelSet axes, std::vector<Rational> entries)
    : axes_(std::move(axes)), entries_(std::move(entries)) {
  if (entries_.size() != axes_.size()) throw std::invalid_argument("weight vector length mismatch");
  for (const auto& e : entries_) {
    if (e <= 0) throw std::invalid_argument("weight vector entries must be strictly positive");
  }
}

const Rational& WeightVector::at(std::string_view label) const {
  std::size_t k = axes_.index_of(label);
  if (k == axes_.size()) throw std::out_of_range("weight vector has no axis " + std::string(label));
  return entries_[k];
}

Rational WeightVector::operator()(const Point& p) const {
  Rational v = 0;
  for (std::size_t k = 0; k < entries_.size(); ++k) v += entries_[k] * p[k];
  return v;
}

std::string WeightVector::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (k) out += ',';
    out += entries_[k].get_str();
  }
  return out + ")";
}

std::size_t Face::dimension() const {
  if (vertices.size() <= 1) return 0;
  // rank of the differences to the first vertex
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    std::vector<Rational> r(vertices[0].size());
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = vertices[i][k] - vertices[0][k];
    rows.push_back(std::move(r));
  }
  std::size_t rank = 0;
  const std::size_t cols = vertices[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

namespace {

/// Scales a positive rational vector to a primitive integer vector.
std::vector<Rational> primitive_integer(std::vector<Rational> v) {
  mpz_class l = 1;
  for (const auto& x : v) l = lcm(l, mpz_class(x.get_den()));
  mpz_class g = 0;
  for (auto& x : v) {
    x *= l;
    g = gcd(g, mpz_class(x.get_num()));
  }
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
  return v;
}

}  // namespace

std::optional<WeightVector> separating_weight(const LabelSet& axes, const std::vector<Point>& on_face,
                                              const std::vector<Point>& off_face) {
  const std::size_t d = axes.size();
  if (d == 0) return off_face.empty() ? std::optional<WeightVector>(WeightVector()) : std::nullopt;
  // variables: rho_0..rho_{d-1}, nu, margin
  const std::size_t nu = d, margin = d + 1;
  lp::Problem prob;
  prob.num_vars = d + 2;
  prob.objective.assign(d + 2, 0);
  prob.objective[margin] = 1;
  auto row = [&]() { return std::vector<Rational>(d + 2, 0); };
  for (std::size_t k = 0; k < d; ++k) {
    auto r = row();
    r[k] = 1;
    r[margin] = -1;
    prob.constraints.push_back({std::move(r), lp::Sense::greater_equal, 0});
  }
  for (const auto& v : on_face) {
    auto r = row();
    for (std::size_t k = 0; k < d; ++k) r[k] = v[k];
    r[nu] = -1;
    prob.constraints.push_back({std::move(r), lp::Sense::equal, 0});
  }
  for (const auto& w : off_face) {
    auto r = row();
    for (std::size_t k = 0; k < d; ++k) r[k] = w[k];
    r[nu] = -1;
    r[margin] = -1;
    prob.constraints.push_back({std::move(r), lp::Sense::greater_equal, 0});
  }
  {
    auto r = row();
    r[margin] = 1;
    prob.constraints.push_back({std::move(r), lp::Sense::less_equal, 1});
  }
  lp::Solution sol = lp::maximize(prob);
  if (sol.status != lp::Status::optimal || sol.value <= 0) return std::nullopt;
  std::vector<Rational> rho(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(d));
  return WeightVector(axes, primitive_integer(std::move(rho)));
}

NewtonPolyhedron newton_vertices(const SupportSet& support, ExecPolicy policy) {
  if (support.points.empty()) throw std::invalid_argument("Newton polyhedron of an empty support");
  const std::size_t d = support.axes.size();
  for (const auto& p : support.points) {
    if (p.size() != d) throw std::invalid_argument("support point dimension mismatch");
    for (auto x : p) {
      if (x < 0) throw std::invalid_argument("support points must be nonnegative");
    }
  }
  // a point dominating another one lies in that point's orthant translate
  std::vector<Point> candidates;
  for (const auto& p : support.points) {
    bool dominated = false;
    for (const auto& q : support.points) {
      if (q == p) continue;
      bool le = true;
      for (std::size_t k = 0; k < d && le; ++k) le = q[k] <= p[k];
      if (le) {
        dominated = true;
        break;
      }
    }
    if (!dominated) candidates.push_back(p);
  }
  std::vector<char> is_vertex(candidates.size(), 0);
  parallel_for(candidates.size(), policy, [&](std::size_t i) {
    std::vector<Point> others;
    for (std::size_t j = 0; j < candidates.size(); ++j) {
      if (j != i) others.push_back(candidates[j]);
    }
    is_vertex[i] = separating_weight(support.axes, {candidates[i]}, others).has_value();
  });
  NewtonPolyhedron out{support.axes, {}};
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (is_vertex[i]) out.vertices.push_back(candidates[i]);
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

Face minimal_face(const NewtonPolyhedron& n, const WeightVector& rho, const SupportSet& support) {
  if (!(n.axes == rho.axes()) || !(n.axes == support.axes)) {
    throw std::invalid_argument("axes of polyhedron, weight and support disagree");
  }
  if (n.vertices.empty()) throw std::invalid_argument("polyhedron without vertices");
  Face f;
  f.weight = rho;
  f.value = rho(n.vertices.front());
  for (const auto& v : n.vertices) f.value = std::min(f.value, rho(v));
  for (const auto& v : n.vertices) {
    if (rho(v) == f.value) f.vertices.push_back(v);
  }
  for (const auto& p : support.points) {
    if (rho(p) == f.value) f.points.push_back(p);
  }
  return f;
}

std::vector<Face> compact_faces(const NewtonPolyhedron& n, const SupportSet& support, ExecPolicy policy) {
  const std::size_t nv = n.vertices.size();
  if (nv == 0) throw std::invalid_argument("polyhedron without vertices");
  if (nv > 24) throw std::length_error("too many vertices for face enumeration");
  if (n.axes.empty()) {
    Face f;
    f.value = 0;
    f.vertices = n.vertices;
    f.points.assign(support.points.begin(), support.points.end());
    return {f};
  }
  const std::size_t masks = (std::size_t{1} << nv) - 1;
  std::vector<std::optional<WeightVector>> found(masks);
  parallel_for(masks, policy, [&](std::size_t i) {
    const std::size_t mask = i + 1;
    std::vector<Point> on, off;
    for (std::size_t k = 0; k < nv; ++k) ((mask >> k) & 1U ? on : off).push_back(n.vertices[k]);
    found[i] = separating_weight(n.axes, on, off);
  });
  std::vector<Face> faces;
  for (std::size_t i = 0; i < masks; ++i) {
    if (!found[i]) continue;
    faces.push_back(minimal_face(n, *found[i], support));
  }
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
  });
  return faces;
}

NewtonPolyhedron project_polyhedron(const NewtonPolyhedron& n, const SupportSet& support, const LabelSet& target) {
  if (!target.is_subset_of(n.axes) || !(support.axes == n.axes)) {
    throw std::invalid_argument("projection target must be a subset of the polyhedron axes");
  }
  SupportSet projected{target, {}};
  for (const auto& p : support.points) {
    Point q(target.size());
    for (std::size_t k = 0; k < target.size(); ++k) q[k] = p[n.axes.index_of(target[k])];
    projected.points.insert(std::move(q));
  }
  return newton_vertices(projected);
}

bool is_desingularized(const PolyhedraSystem& system) {
  return std::all_of(system.polyhedra.begin(), system.polyhedra.end(),
                     [](const auto& kv) { return kv.second.single_vertex(); });
}

}  // namespace folnewt
