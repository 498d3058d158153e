#include "covercalc/geometry.hpp"

#include "covercalc/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace covercalc::geometry {

Triple canonical_triple(Triple t) {
  BigInt g = gcd_big(gcd_big(t[0], t[1]), t[2]);
  if (g == 0) throw Error(ErrorKind::ValidationError, "zero coordinate triple");
  for (auto& v : t) v /= g;
  for (const auto& v : t) {
    if (v == 0) continue;
    if (v < 0) {
      for (auto& w : t) w = -w;
    }
    break;
  }
  return t;
}

bool triple_less(const Triple& a, const Triple& b) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

std::string format_triple(const Triple& t) {
  std::ostringstream out;
  out << '(' << t[0] << ':' << t[1] << ':' << t[2] << ')';
  return out.str();
}

ProjLine::ProjLine(BigInt a0, BigInt a1, BigInt a2)
    : coeffs_(canonical_triple({std::move(a0), std::move(a1), std::move(a2)})) {}

ProjLine::ProjLine(const Triple& coeffs) : coeffs_(canonical_triple(coeffs)) {}

ProjPoint::ProjPoint(BigInt z0, BigInt z1, BigInt z2)
    : coords_(canonical_triple({std::move(z0), std::move(z1), std::move(z2)})) {}

ProjPoint::ProjPoint(const Triple& coords) : coords_(canonical_triple(coords)) {}

BigInt evaluate(const ProjLine& line, const ProjPoint& point) {
  const auto& a = line.coeffs();
  const auto& z = point.coords();
  return a[0] * z[0] + a[1] * z[1] + a[2] * z[2];
}

bool lies_on(const ProjPoint& point, const ProjLine& line) { return evaluate(line, point) == 0; }

ProjPoint intersect(const ProjLine& l1, const ProjLine& l2) {
  if (l1 == l2) {
    throw Error(ErrorKind::IdenticalLines, "lines " + format_triple(l1.coeffs()) + " coincide");
  }
  const auto& a = l1.coeffs();
  const auto& b = l2.coeffs();
  return ProjPoint(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]);
}

Arrangement::Arrangement(std::vector<ProjLine> lines) : lines_(std::move(lines)) {
  if (lines_.size() < 2) {
    throw Error(ErrorKind::ValidationError, "an arrangement needs at least two lines");
  }
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    for (std::size_t j = i + 1; j < lines_.size(); ++j) {
      if (lines_[i] == lines_[j]) {
        throw Error(ErrorKind::ValidationError, "lines " + std::to_string(i + 1) + " and " +
                                                    std::to_string(j + 1) + " coincide");
      }
    }
  }
}

bool MultiplePoint::contains(std::size_t line) const {
  return std::binary_search(lines.begin(), lines.end(), line);
}

std::size_t IncidenceData::count(std::size_t r) const {
  return static_cast<std::size_t>(
      std::count_if(points.begin(), points.end(), [r](const MultiplePoint& p) { return p.multiplicity() == r; }));
}

std::vector<std::size_t> IncidenceData::points_on(std::size_t line) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].contains(line)) out.push_back(i);
  }
  return out;
}

IncidenceData compute_incidence(const Arrangement& arrangement) {
  std::map<ProjPoint, std::set<std::size_t>> grouped;
  const std::size_t n = arrangement.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto& incident = grouped[intersect(arrangement.line(i), arrangement.line(j))];
      incident.insert(i);
      incident.insert(j);
    }
  }
  IncidenceData data;
  data.points.reserve(grouped.size());
  for (auto& [point, lines] : grouped) {
    data.points.push_back(MultiplePoint{point, std::vector<std::size_t>(lines.begin(), lines.end())});
  }
  std::sort(data.points.begin(), data.points.end(), [](const MultiplePoint& a, const MultiplePoint& b) {
    if (a.multiplicity() != b.multiplicity()) return a.multiplicity() > b.multiplicity();
    return a.lines < b.lines;
  });
  return data;
}

}  // namespace covercalc::geometry
