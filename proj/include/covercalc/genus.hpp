#pragma once

#include "covercalc/bigint.hpp"
#include "covercalc/cover.hpp"
#include "covercalc/linalg.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace covercalc::genus {

/// z^q = prod l_i^{m_i} over the lines with nonzero multiplicity.
struct CyclicCoverSpec {
  std::int64_t q;
  std::vector<std::size_t> lines;          // indices into the arrangement
  std::vector<std::int64_t> multiplicities;  // 1 <= m_i <= q-1, parallel to lines
  std::int64_t m;                          // sum m_i / q

  std::int64_t multiplicity_of(std::size_t line) const;  // 0 when absent
};

struct ForcedLine {
  geometry::ProjLine line;
  std::int64_t power;
};

struct PointCondition {
  geometry::ProjPoint point;
  std::int64_t order;
};

/// Space of plane forms of degree <= degree divisible by the forced line
/// powers and vanishing to the given orders at the points.
struct VanishingSpec {
  std::int64_t degree;
  std::vector<ForcedLine> forced;
  std::vector<PointCondition> points;
  /// Lines the chart's line at infinity must avoid (the branch lines).
  std::vector<geometry::ProjLine> avoid;
};

/// Affine chart {ell != 0} with ell avoiding every condition point and every
/// line to avoid. Tries the coordinate hyperplanes first, then small integer
/// forms in a fixed order. Throws ErrorKind::ChartFailure.
geometry::Triple choose_chart(const VanishingSpec& vs);

/// Degree left after dividing out the forced lines, and the residual point
/// orders (forced powers of incident lines subtracted, clamped at 0).
struct ResidualProblem {
  std::int64_t degree;
  std::vector<PointCondition> points;
};

ResidualProblem residual_problem(const VanishingSpec& vs);

/// Integer matrix of the residual conditions: one column per monomial
/// x^i y^j (i + j <= degree) in the chosen chart, one row per mixed partial
/// of order < v at each point. Rows are scaled to clear denominators.
linalg::IntMatrix condition_matrix(const VanishingSpec& vs);

std::int64_t poly_space_dim(const VanishingSpec& vs);

/// m_i = <chi, phi(lambda_i)>; lines with m_i = 0 are dropped.
CyclicCoverSpec quotient_multiplicities(const cover::CoverSpec& spec, const cover::GroupElement& chi);

/// Multiplicity sum_{i through p} m_i of the branch divisor at every point
/// where at least two branch lines meet.
struct BranchPoint {
  geometry::ProjPoint point;
  std::vector<std::size_t> lines;  // branch lines through the point
  std::int64_t r;
};

std::vector<BranchPoint> branch_singular_points(const CyclicCoverSpec& c,
                                                const geometry::IncidenceData& inc);

/// Double covers: forms of degree m-3 vanishing to order ceil((r+1)/2)-2.
std::vector<VanishingSpec> double_cover_conditions(const CyclicCoverSpec& c,
                                                   const cover::CoverSpec& spec,
                                                   const geometry::IncidenceData& inc);

/// Triple covers, literal form: P_0 (forms s with s * prod l_i^{m_i-1}
/// vanishing to order 2 ceil((r+1)/3) - 2) and P_1 (forms of degree m-3
/// vanishing to order ceil((r+1)/3) - 2). At triple points and at points with
/// lines of both multiplicities these orders are too high: the result changes
/// under chi -> 2 chi. cyclic_pg does not use it.
std::vector<VanishingSpec> triple_cover_conditions(const CyclicCoverSpec& c,
                                                   const cover::CoverSpec& spec,
                                                   const geometry::IncidenceData& inc);

/// One space per eigenform index j = 0..q-1 from the degree bound, the line
/// divisibility and the first-blowup point conditions. For arrangements with
/// ordinary multiple points one blowup already gives normal crossings, and the
/// residual problem is h^0(K + L^(j)) on the blown-up plane.
std::vector<VanishingSpec> general_conditions(const CyclicCoverSpec& c,
                                              const cover::CoverSpec& spec,
                                              const geometry::IncidenceData& inc);

/// The condition spaces cyclic_pg sums over: the double cover form for q = 2,
/// general_conditions otherwise.
std::vector<VanishingSpec> regularity_conditions(const CyclicCoverSpec& c,
                                                 const cover::CoverSpec& spec,
                                                 const geometry::IncidenceData& inc);

struct CyclicGenus {
  std::int64_t value;
  bool exact;
};

CyclicGenus cyclic_pg(const CyclicCoverSpec& c, const cover::CoverSpec& spec,
                      const geometry::IncidenceData& inc);

struct QuotientEntry {
  cover::GroupElement character;
  CyclicCoverSpec cover;
  std::int64_t pg;
  bool exact;
};

struct GenusReport {
  std::vector<QuotientEntry> quotients;
  std::int64_t pg;
  bool exact;
};

/// Nonzero characters of (Z/qZ)^k whose first nonzero entry is 1, in
/// lexicographic order; one per index-q subgroup.
std::vector<cover::GroupElement> characters_up_to_scalar(std::int64_t q, std::size_t k);

/// p_g as the sum of the cyclic quotient genera. `threads` > 1 evaluates the
/// quotients concurrently; the result does not depend on it.
GenusReport abelian_pg(const cover::CoverSpec& spec, const geometry::IncidenceData& inc,
                       const cover::PointClassification& cls, unsigned threads = 1);

struct Irregularity {
  BigInt value;
  /// False when p_g was only an upper bound; the value is then an upper bound too.
  bool exact;
};

/// q = p_g + 1 - chi. Throws ErrorKind::NegativeIrregularity if negative.
Irregularity irregularity(const GenusReport& report, const BigInt& chi);

}  // namespace covercalc::genus
