#include "covercalc/invariants.hpp"

#include "covercalc/errors.hpp"

#include <algorithm>

namespace covercalc::invariants {

using cover::ClassifiedPoint;
using cover::CoverSpec;
using cover::GroupElement;
using cover::PointClassification;
using cover::PointStatus;

LatticeClass LatticeClass::operator+(const LatticeClass& other) const {
  LatticeClass out{l + other.l, e};
  if (out.e.size() < other.e.size()) out.e.resize(other.e.size(), 0);
  for (std::size_t i = 0; i < other.e.size(); ++i) out.e[i] += other.e[i];
  return out;
}

LatticeClass LatticeClass::operator*(const BigInt& c) const {
  LatticeClass out{l * c, e};
  for (auto& v : out.e) v *= c;
  return out;
}

BlowupLattice::BlowupLattice(const CoverSpec& spec, const PointClassification& cls)
    : n_(spec.n()), blown_(cls.blowup_set), line_exceptionals_(spec.n()) {
  for (std::size_t i = 0; i < blown_.size(); ++i) {
    for (auto line : cls.points.at(blown_[i]).point.lines) line_exceptionals_.at(line).push_back(i);
  }
}

std::size_t BlowupLattice::exceptional_index(std::size_t point_index) const {
  auto it = std::find(blown_.begin(), blown_.end(), point_index);
  return it == blown_.end() ? npos : static_cast<std::size_t>(it - blown_.begin());
}

LatticeClass BlowupLattice::zero() const { return LatticeClass{0, std::vector<BigInt>(blown_.size(), 0)}; }

LatticeClass BlowupLattice::hyperplane() const {
  LatticeClass c = zero();
  c.l = 1;
  return c;
}

LatticeClass BlowupLattice::exceptional(std::size_t i) const {
  LatticeClass c = zero();
  c.e.at(i) = 1;
  return c;
}

LatticeClass BlowupLattice::strict_transform(std::size_t line) const {
  LatticeClass c = hyperplane();
  for (auto i : line_exceptionals_.at(line)) c.e[i] = -1;
  return c;
}

std::size_t BlowupLattice::blown_points_on(std::size_t line) const { return line_exceptionals_.at(line).size(); }

BigInt BlowupLattice::dot(const LatticeClass& a, const LatticeClass& b) const {
  BigInt s = a.l * b.l;
  const std::size_t m = std::min(a.e.size(), b.e.size());
  for (std::size_t i = 0; i < m; ++i) s -= a.e[i] * b.e[i];
  return s;
}

namespace {

BigInt scale(const CoverSpec& spec) { return pow_big(spec.q, static_cast<std::int64_t>(spec.k) - 2); }

BigInt big(std::size_t v) { return BigInt(static_cast<std::uint64_t>(v)); }

// Coefficient of E_p in D_K.
BigInt canonical_coefficient(const ClassifiedPoint& p, std::int64_t q) {
  const auto r = static_cast<std::int64_t>(p.multiplicity());
  if (p.status == PointStatus::NonBranch) return -(r * q - q - r);
  return -(r * q - 2 * q - r + 1);
}

}  // namespace

BigInt k_squared(const CoverSpec& spec, const PointClassification& cls) {
  cls.require_good(spec);
  const BigInt q = spec.q;
  const BigInt n = big(spec.n());
  BigInt base = q * n - n - 3 * q;
  BigInt total = base * base;
  for (const auto& [r, t] : cls.t_nonbranch) {
    const BigInt c = big(r) * q - q - big(r);
    total -= c * c * big(t);
  }
  for (const auto& [r, t] : cls.t_branch) {
    if (r < 3) continue;
    const BigInt c = big(r) * q - 2 * q - big(r) + 1;
    total -= c * c * big(t);
  }
  return scale(spec) * total;
}

BigInt euler_characteristic(const CoverSpec& spec, const PointClassification& cls) {
  cls.require_good(spec);
  const BigInt q = spec.q;
  const BigInt n = big(spec.n());
  BigInt total = 3 * q * q - 2 * n * (q * q - q);
  for (const auto& [r, t] : cls.t_nonbranch) total += q * q * big(t);
  for (const auto& [r, t] : cls.t_branch) {
    if (r == 2) {
      total += (q - 1) * (q - 1) * big(t);
    } else {
      total += ((big(r) - 1) * (q - 1) * (q - 1) + 1) * big(t);
    }
  }
  return scale(spec) * total;
}

BigInt chi_holomorphic(const BigInt& k2, const BigInt& euler) {
  const BigInt s = k2 + euler;
  if (s % 12 != 0) {
    throw Error(ErrorKind::NoetherViolation, "K^2 + e = " + s.str() + " is not divisible by 12");
  }
  return s / 12;
}

NumericalInvariants numerical_invariants(const CoverSpec& spec, const PointClassification& cls) {
  NumericalInvariants out;
  out.k2 = k_squared(spec, cls);
  out.euler = euler_characteristic(spec, cls);
  out.chi = chi_holomorphic(out.k2, out.euler);
  return out;
}

CanonicalData canonical_divisor_class(const CoverSpec& spec, const PointClassification& cls,
                                      const BlowupLattice& lattice) {
  cls.require_good(spec);
  const auto q = spec.q;
  const auto n = static_cast<std::int64_t>(spec.n());
  LatticeClass d = lattice.zero();
  d.l = q * n - n - 3 * q;
  for (std::size_t i = 0; i < lattice.exceptional_count(); ++i) {
    d.e[i] = canonical_coefficient(cls.points.at(lattice.blown_point(i)), q);
  }
  return CanonicalData{d};
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Ok: return "ok";
    case Verdict::NonAmpleWitness: return "non-ample witness";
    case Verdict::NonMinimalWitness: return "non-minimal witness";
  }
  return "?";
}

std::vector<MinimalityEntry> minimality_report(const CoverSpec& spec, const PointClassification& cls,
                                               const BlowupLattice& lattice) {
  const LatticeClass d = canonical_divisor_class(spec, cls, lattice).d_k;
  const BigInt d2 = lattice.square(d);
  if (d2 <= 0) throw Error(ErrorKind::NotBig, "D_K^2 = " + d2.str() + " is not positive");
  std::vector<MinimalityEntry> out;
  auto add = [&](CurveKind kind, std::size_t index, LatticeClass curve) {
    BigInt product = lattice.dot(d, curve);
    Verdict v = product < 0 ? Verdict::NonMinimalWitness : product == 0 ? Verdict::NonAmpleWitness : Verdict::Ok;
    out.push_back(MinimalityEntry{kind, index, std::move(curve), std::move(product), v});
  };
  for (std::size_t j = 0; j < spec.n(); ++j) add(CurveKind::StrictTransform, j, lattice.strict_transform(j));
  for (std::size_t i = 0; i < lattice.exceptional_count(); ++i) add(CurveKind::Exceptional, i, lattice.exceptional(i));
  return out;
}

namespace {

// Riemann-Hurwitz data for one curve B of the blown-up plane: its inertia
// character (zero if B is not a branch curve) and the characters of the
// branch curves it meets.
CurveRecord hurwitz(const CoverSpec& spec, const GroupElement& own, const std::vector<GroupElement>& meets,
                    const BigInt& lattice_square, const BigInt& canonical_product) {
  const bool branch = !own.is_zero();
  std::vector<GroupElement> gens;
  if (branch) gens.push_back(own);
  const std::size_t base_rank = gens.size();
  std::size_t b = 0;
  for (const auto& m : meets) {
    const std::vector<GroupElement> probe = branch ? std::vector<GroupElement>{own, m} : std::vector<GroupElement>{m};
    if (cover::span_rank(probe) > base_rank) ++b;
    gens.push_back(m);
  }
  const auto h_rank = static_cast<std::int64_t>(cover::span_rank(gens) - base_rank);
  const auto quotient_rank = static_cast<std::int64_t>(spec.k - base_rank);
  const BigInt q = spec.q;
  const BigInt h = pow_big(spec.q, h_rank);
  const BigInt components = pow_big(spec.q, quotient_rank - h_rank);

  // 2g - 2 = -2|H| + b |H| (q-1)/q
  const BigInt twice = -2 * h + BigInt(static_cast<std::uint64_t>(b)) * h * (q - 1) / q;
  const BigInt genus = (twice + 2) / 2;

  const BigInt pull = branch ? pow_big(spec.q, static_cast<std::int64_t>(spec.k) - 2)
                             : pow_big(spec.q, static_cast<std::int64_t>(spec.k));
  const BigInt kpull = branch ? pow_big(spec.q, static_cast<std::int64_t>(spec.k) - 2)
                              : pow_big(spec.q, static_cast<std::int64_t>(spec.k) - 1);
  CurveRecord rec;
  rec.branch = branch;
  rec.components = components;
  rec.genus = genus;
  rec.self_intersection = pull * lattice_square / components;
  const BigInt kc = kpull * canonical_product / components;
  rec.self_intersection_adjunction = 2 * genus - 2 - kc;
  rec.branch_points = b;
  rec.stabilizer_order = h;
  return rec;
}

}  // namespace

std::vector<CurveRecord> branch_curve_report(const CoverSpec& spec, const PointClassification& cls,
                                             const BlowupLattice& lattice) {
  const LatticeClass d = canonical_divisor_class(spec, cls, lattice).d_k;
  std::vector<CurveRecord> out;
  for (std::size_t j = 0; j < spec.n(); ++j) {
    std::vector<GroupElement> meets;
    for (const auto& p : cls.points) {
      if (!p.point.contains(j)) continue;
      if (p.blown_up) {
        meets.push_back(p.epsilon);
      } else {
        for (auto i : p.point.lines) {
          if (i != j) meets.push_back(spec.phi[i]);
        }
      }
    }
    const LatticeClass c = lattice.strict_transform(j);
    CurveRecord rec = hurwitz(spec, spec.phi[j], meets, lattice.square(c), lattice.dot(d, c));
    rec.kind = CurveKind::StrictTransform;
    rec.index = j;
    out.push_back(std::move(rec));
  }
  for (std::size_t i = 0; i < lattice.exceptional_count(); ++i) {
    const auto& p = cls.points.at(lattice.blown_point(i));
    std::vector<GroupElement> meets;
    for (auto line : p.point.lines) meets.push_back(spec.phi[line]);
    const LatticeClass c = lattice.exceptional(i);
    CurveRecord rec = hurwitz(spec, p.epsilon, meets, lattice.square(c), lattice.dot(d, c));
    rec.kind = CurveKind::Exceptional;
    rec.index = i;
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace covercalc::invariants
