#pragma once

#include "covercalc/bigint.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace covercalc::geometry {

/// Primitive integer triple with first nonzero entry positive. Both lines and
/// points of P^2 use this normal form, so equality of the objects is equality
/// of the triples.
using Triple = std::array<BigInt, 3>;

Triple canonical_triple(Triple t);
bool triple_less(const Triple& a, const Triple& b);
std::string format_triple(const Triple& t);

/// Line a0*z0 + a1*z1 + a2*z2 = 0.
class ProjLine {
 public:
  ProjLine(BigInt a0, BigInt a1, BigInt a2);
  explicit ProjLine(const Triple& coeffs);

  const Triple& coeffs() const { return coeffs_; }
  bool operator==(const ProjLine& other) const { return coeffs_ == other.coeffs_; }

 private:
  Triple coeffs_;
};

class ProjPoint {
 public:
  ProjPoint(BigInt z0, BigInt z1, BigInt z2);
  explicit ProjPoint(const Triple& coords);

  const Triple& coords() const { return coords_; }
  bool operator==(const ProjPoint& other) const { return coords_ == other.coords_; }
  bool operator<(const ProjPoint& other) const { return triple_less(coords_, other.coords_); }

 private:
  Triple coords_;
};

BigInt evaluate(const ProjLine& line, const ProjPoint& point);
bool lies_on(const ProjPoint& point, const ProjLine& line);

/// Throws ErrorKind::IdenticalLines when the two lines coincide.
ProjPoint intersect(const ProjLine& l1, const ProjLine& l2);

/// Ordered list of distinct lines, n >= 2. Line indices are 0-based in the
/// API and rendered 1-based in reports.
class Arrangement {
 public:
  explicit Arrangement(std::vector<ProjLine> lines);

  std::size_t size() const { return lines_.size(); }
  const ProjLine& line(std::size_t i) const { return lines_.at(i); }
  const std::vector<ProjLine>& lines() const { return lines_; }

 private:
  std::vector<ProjLine> lines_;
};

/// A point of the arrangement lying on at least two lines.
struct MultiplePoint {
  ProjPoint point;
  std::vector<std::size_t> lines;  // sorted, 0-based

  std::size_t multiplicity() const { return lines.size(); }
  bool contains(std::size_t line) const;
};

struct IncidenceData {
  std::vector<MultiplePoint> points;

  /// Number of points of multiplicity exactly r.
  std::size_t count(std::size_t r) const;
  /// Points on the given line, as indices into `points`.
  std::vector<std::size_t> points_on(std::size_t line) const;
};

/// Groups the C(n,2) pairwise intersections into multiple points. Points are
/// ordered by decreasing multiplicity, then lexicographically by line list.
IncidenceData compute_incidence(const Arrangement& arrangement);

}  // namespace covercalc::geometry
