#pragma once

#include "covercalc/bigint.hpp"
#include "covercalc/cover.hpp"
#include "covercalc/invariants.hpp"
#include "covercalc/linalg.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace covercalc::torsion {

/// Linear conditions over GF(q) on per-line values x_1..x_n: the all-ones row
/// and one incidence row per non-branch point.
struct EquiSystem {
  linalg::ModMatrix rows;
  std::size_t rank;
  std::size_t k_phi;  // n - rank
};

EquiSystem equi_system(const cover::CoverSpec& spec, const cover::PointClassification& cls);

std::size_t k_phi(const cover::CoverSpec& spec, const cover::PointClassification& cls);

/// Cover with group (Z/qZ)^{k_phi} whose first k coordinates reproduce phi and
/// whose columns span the solution space of the equi system. The added
/// columns are taken greedily from the lexicographically sorted null-space
/// basis.
cover::CoverSpec universal_cover_spec(const cover::CoverSpec& spec,
                                      const cover::PointClassification& cls);

struct TorsionBound {
  std::int64_t q;
  std::size_t exponent;  // (Z/qZ)^exponent embeds in Tors(X)
  bool valid;            // the embedding needs irregularity 0
};

TorsionBound torsion_lower_bound(const cover::CoverSpec& spec,
                                 const cover::PointClassification& cls,
                                 const BigInt& irregularity, bool irregularity_exact = true);

/// sum a_j L~_j + sum b_i E_i + sum c_i 2*Lambda_i, Lambda_i = L - E_i the
/// pencil of lines through the i-th blown-up point.
struct DivisorCandidate {
  std::vector<std::int64_t> a;  // per line
  std::vector<std::int64_t> b;  // per exceptional curve
  std::vector<std::int64_t> c;  // per exceptional curve
  invariants::LatticeClass cls;

  bool has_pencil() const;
  bool operator==(const DivisorCandidate& other) const {
    return a == other.a && b == other.b && c == other.c;
  }
};

/// One complete system of divisors sharing a torsion class.
struct DivisorSystem {
  DivisorCandidate representative;
  std::size_t members;       // enumerated candidates in the system
  bool positive_dimensional;  // contains a pencil component
};

std::string format_candidate(const DivisorCandidate& d);

/// Multiplicities of f^* of the candidate along C_j, D_i and f^*(Lambda_i).
std::vector<std::int64_t> pullback_coefficients(const DivisorCandidate& d,
                                                const cover::PointClassification& cls,
                                                const invariants::BlowupLattice& lattice);

/// Effective divisors in the class of D_K (3L - sum E_i for the Burniat
/// arrangements) built from the arrangement curves and doubled pencils whose
/// pullback is divisible by two. Candidates are grouped by torsion class:
/// their coefficient parities on branch curves, modulo the character rows.
/// A group with several members is a positive-dimensional system and is
/// represented by its member with the most pencil components.
/// Throws ErrorKind::UnsupportedGroup if q != 2.
std::vector<DivisorSystem> enumerate_even_pullback_divisors(const cover::CoverSpec& spec,
                                                            const cover::PointClassification& cls,
                                                            const invariants::BlowupLattice& lattice);

}  // namespace covercalc::torsion
