#pragma once

#include "covercalc/geometry.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace covercalc::cover {

/// Element of (Z/qZ)^k with entries kept in [0, q).
class GroupElement {
 public:
  GroupElement(std::int64_t q, std::vector<std::int64_t> entries);
  static GroupElement zero(std::int64_t q, std::size_t k);

  std::int64_t modulus() const { return q_; }
  std::size_t rank() const { return entries_.size(); }
  const std::vector<std::int64_t>& entries() const { return entries_; }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }

  bool is_zero() const;
  GroupElement operator+(const GroupElement& other) const;
  GroupElement scaled(std::int64_t c) const;
  bool operator==(const GroupElement& other) const = default;

  std::string to_string() const;

 private:
  std::int64_t q_;
  std::vector<std::int64_t> entries_;
};

/// <a, b> = sum a_j b_j mod q.
std::int64_t pairing(const GroupElement& a, const GroupElement& b);

/// Rank of the span of the given elements over GF(q).
std::size_t span_rank(const std::vector<GroupElement>& elements);

/// True iff a and b generate a subgroup isomorphic to (Z/qZ)^2.
bool pair_independent(const GroupElement& a, const GroupElement& b);

/// Abelian (Z/qZ)^k cover of P^2 branched over an arrangement: phi[i] is the
/// image of the meridian of line i.
struct CoverSpec {
  geometry::Arrangement arrangement;
  std::int64_t q;
  std::size_t k;
  std::vector<GroupElement> phi;

  std::size_t n() const { return arrangement.size(); }
};

/// Throws ErrorKind::ValidationError unless: q prime, k >= 2, one value per
/// line, entries reduced, every value nonzero, values sum to zero and span
/// (Z/qZ)^k.
void validate_cover_spec(const CoverSpec& spec);

CoverSpec make_cover_spec(geometry::Arrangement arrangement, std::int64_t q,
                          std::vector<GroupElement> phi);

/// Character of the exceptional curve over a point: sum of the incident
/// line characters.
GroupElement epsilon(const std::vector<std::size_t>& incident_lines, const CoverSpec& spec);

enum class PointStatus { NonBranch, BranchGood, Bad };

std::string to_string(PointStatus status);

struct ClassifiedPoint {
  geometry::MultiplePoint point;
  GroupElement epsilon;
  PointStatus status;
  bool blown_up;  // r >= 3, or a 2-fold non-branch point

  std::size_t multiplicity() const { return point.multiplicity(); }
};

struct PointClassification {
  std::vector<ClassifiedPoint> points;   // same order as the incidence data
  std::map<std::size_t, std::size_t> t_nonbranch;  // r -> t'_r
  std::map<std::size_t, std::size_t> t_branch;     // r -> t''_r
  std::vector<std::size_t> blowup_set;   // indices into points

  bool is_good() const;
  /// Throws ErrorKind::BadPoint naming the first bad point and its characters.
  void require_good(const CoverSpec& spec) const;
  std::size_t t_nonbranch_of(std::size_t r) const;
  std::size_t t_branch_of(std::size_t r) const;
};

PointClassification classify_points(const CoverSpec& spec, const geometry::IncidenceData& inc);

}  // namespace covercalc::cover
