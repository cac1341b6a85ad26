#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "folnewt/labels.hpp"
#include "folnewt/parallel.hpp"
#include "folnewt/polynomial.hpp"

namespace folnewt {

/// Integer point of Z^J, coordinates ordered like the axes LabelSet.
using Point = std::vector<std::int64_t>;

Point to_point(const Monomial& m, const LabelSet& axes);
Monomial to_monomial(const Point& p, const LabelSet& axes);
std::string to_string(const Point& p);

struct SupportSet {
  LabelSet axes;
  std::set<Point> points;
};

/// conv(vertices) + R^J_{>=0}, stored by its vertices (sorted).
struct NewtonPolyhedron {
  LabelSet axes;
  std::vector<Point> vertices;

  bool single_vertex() const { return vertices.size() == 1; }
  friend bool operator==(const NewtonPolyhedron&, const NewtonPolyhedron&) = default;
};

/// Strictly positive linear functional on R^J.
class WeightVector {
 public:
  WeightVector() = default;
  WeightVector(LabelSet axes, std::vector<Rational> entries);

  const LabelSet& axes() const { return axes_; }
  const std::vector<Rational>& entries() const { return entries_; }
  const Rational& at(std::string_view label) const;
  Rational operator()(const Point& p) const;
  std::string to_string() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  LabelSet axes_;
  std::vector<Rational> entries_;
};

struct Face {
  Rational value;
  WeightVector weight;
  /// Support points on the face (vertices plus any support point lying on it).
  std::vector<Point> points;
  std::vector<Point> vertices;

  std::size_t dimension() const;
};

struct PolyhedraSystem {
  std::map<LabelSet, NewtonPolyhedron> polyhedra;
  std::map<LabelSet, SupportSet> supports;
};

/// Vertices of conv(S) + orthant; every vertex is a point of S.
/// Throws std::invalid_argument on an empty support.
NewtonPolyhedron newton_vertices(const SupportSet& support, ExecPolicy policy = ExecPolicy::serial);

/// Strictly positive functional that is constant on `on_face` and strictly
/// larger on `off_face`, found by an exact LP that maximizes a margin.
std::optional<WeightVector> separating_weight(const LabelSet& axes, const std::vector<Point>& on_face,
                                              const std::vector<Point>& off_face);

Face minimal_face(const NewtonPolyhedron& n, const WeightVector& rho, const SupportSet& support);

/// Every compact face once, each with a representative weight, ordered by
/// vertex count then vertex lists.
std::vector<Face> compact_faces(const NewtonPolyhedron& n, const SupportSet& support,
                                ExecPolicy policy = ExecPolicy::serial);

/// Newton polyhedron of the coordinate projection of `support` onto `target`.
NewtonPolyhedron project_polyhedron(const NewtonPolyhedron& n, const SupportSet& support, const LabelSet& target);

bool is_desingularized(const PolyhedraSystem& system);

}  // namespace folnewt
