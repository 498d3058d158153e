#pragma once

#include "covercalc/bigint.hpp"
#include "covercalc/cover.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace covercalc::invariants {

/// Divisor class l*L + sum e_p E_p on the blown-up plane (E_p in blow-up
/// order). Strict transforms have negative E coefficients.
struct LatticeClass {
  BigInt l;
  std::vector<BigInt> e;

  bool operator==(const LatticeClass&) const = default;
  LatticeClass operator+(const LatticeClass& other) const;
  LatticeClass operator*(const BigInt& c) const;
};

/// Picard lattice of P^2 blown up at the blow-up set of a classification:
/// basis L, E_1..E_m with form diag(1, -1, ..., -1).
class BlowupLattice {
 public:
  BlowupLattice(const cover::CoverSpec& spec, const cover::PointClassification& cls);

  std::size_t rank() const { return 1 + blown_.size(); }
  std::size_t exceptional_count() const { return blown_.size(); }
  /// Index into the classification's point list for exceptional curve i.
  std::size_t blown_point(std::size_t i) const { return blown_.at(i); }
  /// Position of a classified point among the exceptional curves, or npos.
  std::size_t exceptional_index(std::size_t point_index) const;

  LatticeClass zero() const;
  LatticeClass hyperplane() const;                // L
  LatticeClass exceptional(std::size_t i) const;  // E_i
  LatticeClass strict_transform(std::size_t line) const;
  /// Number of blown-up points on the line.
  std::size_t blown_points_on(std::size_t line) const;

  BigInt dot(const LatticeClass& a, const LatticeClass& b) const;
  BigInt square(const LatticeClass& a) const { return dot(a, a); }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t n_;
  std::vector<std::size_t> blown_;
  std::vector<std::vector<std::size_t>> line_exceptionals_;
};

BigInt k_squared(const cover::CoverSpec& spec, const cover::PointClassification& cls);
BigInt euler_characteristic(const cover::CoverSpec& spec, const cover::PointClassification& cls);
/// (k2 + e) / 12; throws ErrorKind::NoetherViolation when not divisible.
BigInt chi_holomorphic(const BigInt& k2, const BigInt& euler);

struct NumericalInvariants {
  BigInt k2;
  BigInt euler;
  BigInt chi;
};

NumericalInvariants numerical_invariants(const cover::CoverSpec& spec,
                                         const cover::PointClassification& cls);

/// Class D_K on the blown-up plane with f^* D_K = q K_X.
struct CanonicalData {
  LatticeClass d_k;
};

CanonicalData canonical_divisor_class(const cover::CoverSpec& spec,
                                      const cover::PointClassification& cls,
                                      const BlowupLattice& lattice);

enum class CurveKind { StrictTransform, Exceptional };

enum class Verdict { Ok, NonAmpleWitness, NonMinimalWitness };

std::string to_string(Verdict v);

struct MinimalityEntry {
  CurveKind kind;
  std::size_t index;  // line index, or exceptional index in the lattice
  LatticeClass curve;
  BigInt product;     // D_K . C
  Verdict verdict;
};

/// Evaluates D_K on every strict transform and exceptional curve. Only these
/// visible curves are checked, so Ok everywhere does not certify ampleness.
/// Throws ErrorKind::NotBig when D_K^2 <= 0.
std::vector<MinimalityEntry> minimality_report(const cover::CoverSpec& spec,
                                               const cover::PointClassification& cls,
                                               const BlowupLattice& lattice);

/// Preimage of one arrangement curve in the smooth model.
struct CurveRecord {
  CurveKind kind;
  std::size_t index;               // line index or exceptional index
  bool branch;
  BigInt components;
  BigInt genus;                    // per component
  BigInt self_intersection;        // per component, via pullback of the lattice class
  BigInt self_intersection_adjunction;  // per component, 2g - 2 - K.C
  std::size_t branch_points;       // branch points of one component over P^1
  BigInt stabilizer_order;         // |H|
};

std::vector<CurveRecord> branch_curve_report(const cover::CoverSpec& spec,
                                             const cover::PointClassification& cls,
                                             const BlowupLattice& lattice);

}  // namespace covercalc::invariants
