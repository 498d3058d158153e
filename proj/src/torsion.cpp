#include "covercalc/torsion.hpp"

#include "covercalc/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace covercalc::torsion {

using cover::CoverSpec;
using cover::GroupElement;
using cover::PointClassification;
using cover::PointStatus;
using invariants::BlowupLattice;
using invariants::LatticeClass;

EquiSystem equi_system(const CoverSpec& spec, const PointClassification& cls) {
  cls.require_good(spec);
  const std::size_t n = spec.n();
  EquiSystem sys;
  sys.rows.push_back(linalg::ModRow(n, 1));
  for (const auto& p : cls.points) {
    if (p.status != PointStatus::NonBranch) continue;
    linalg::ModRow row(n, 0);
    for (auto i : p.point.lines) row[i] = 1;
    sys.rows.push_back(std::move(row));
  }
  sys.rank = linalg::rank_mod(sys.rows, spec.q);
  sys.k_phi = n - sys.rank;
  return sys;
}

std::size_t k_phi(const CoverSpec& spec, const PointClassification& cls) { return equi_system(spec, cls).k_phi; }

CoverSpec universal_cover_spec(const CoverSpec& spec, const PointClassification& cls) {
  const EquiSystem sys = equi_system(spec, cls);
  const std::size_t n = spec.n();
  linalg::ModMatrix columns;
  for (std::size_t c = 0; c < spec.k; ++c) {
    linalg::ModRow col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = spec.phi[i][c];
    columns.push_back(std::move(col));
  }
  linalg::ModMatrix basis = linalg::null_space_mod(sys.rows, n, spec.q);
  std::sort(basis.begin(), basis.end());
  std::size_t rank = linalg::rank_mod(columns, spec.q);
  for (const auto& v : basis) {
    if (columns.size() == sys.k_phi) break;
    columns.push_back(v);
    const std::size_t r = linalg::rank_mod(columns, spec.q);
    if (r > rank) {
      rank = r;
    } else {
      columns.pop_back();
    }
  }
  std::vector<GroupElement> phi;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> entries;
    for (const auto& col : columns) entries.push_back(col[i]);
    phi.emplace_back(spec.q, std::move(entries));
  }
  return cover::make_cover_spec(spec.arrangement, spec.q, std::move(phi));
}

TorsionBound torsion_lower_bound(const CoverSpec& spec, const PointClassification& cls, const BigInt& irregularity,
                                 bool irregularity_exact) {
  return TorsionBound{spec.q, k_phi(spec, cls) - spec.k, irregularity_exact && irregularity == 0};
}

bool DivisorCandidate::has_pencil() const {
  return std::any_of(c.begin(), c.end(), [](std::int64_t v) { return v > 0; });
}

std::string format_candidate(const DivisorCandidate& d) {
  std::ostringstream out;
  bool first = true;
  auto term = [&](std::int64_t coeff, const std::string& name, std::size_t index) {
    if (coeff == 0) return;
    if (!first) out << " + ";
    first = false;
    if (coeff != 1) out << coeff;
    out << name << index + 1;
  };
  for (std::size_t j = 0; j < d.a.size(); ++j) term(d.a[j], "L", j);
  for (std::size_t i = 0; i < d.b.size(); ++i) term(d.b[i], "E", i);
  for (std::size_t i = 0; i < d.c.size(); ++i) term(2 * d.c[i], "P", i);
  if (first) out << '0';
  return out.str();
}

std::vector<std::int64_t> pullback_coefficients(const DivisorCandidate& d, const PointClassification& cls,
                                                const BlowupLattice& lattice) {
  std::vector<std::int64_t> out;
  for (auto a : d.a) out.push_back(2 * a);
  for (std::size_t i = 0; i < d.b.size(); ++i) {
    const bool branch = cls.points.at(lattice.blown_point(i)).status != PointStatus::NonBranch;
    out.push_back(branch ? 2 * d.b[i] : d.b[i]);
  }
  for (auto c : d.c) out.push_back(2 * c);
  return out;
}

namespace {

// Canonical representative of a parity vector modulo the row space of a
// GF(2) matrix in reduced row echelon form.
std::vector<std::int64_t> reduce_parity(std::vector<std::int64_t> v, const linalg::ModMatrix& rref) {
  for (const auto& row : rref) {
    std::size_t pivot = 0;
    while (pivot < row.size() && row[pivot] == 0) ++pivot;
    if (pivot == row.size() || v[pivot] == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = (v[j] + row[j]) % 2;
  }
  return v;
}

std::int64_t pencil_weight(const DivisorCandidate& d) {
  std::int64_t w = 0;
  for (auto c : d.c) w += c;
  return w;
}

void compositions(std::size_t slots, std::int64_t total, std::vector<std::int64_t>& cur,
                  std::vector<std::vector<std::int64_t>>& out) {
  if (cur.size() == slots) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (std::int64_t v = 0; v <= total; ++v) {
    cur.push_back(v);
    compositions(slots, total - v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<DivisorSystem> enumerate_even_pullback_divisors(const CoverSpec& spec, const PointClassification& cls,
                                                            const BlowupLattice& lattice) {
  if (spec.q != 2) {
    throw Error(ErrorKind::UnsupportedGroup, "divisor enumeration needs q = 2, got q = " + std::to_string(spec.q));
  }
  const LatticeClass target = invariants::canonical_divisor_class(spec, cls, lattice).d_k;
  const std::int64_t degree = to_int64(target.l);
  const std::size_t n = spec.n();
  const std::size_t m = lattice.exceptional_count();

  std::vector<LatticeClass> strict;
  for (std::size_t j = 0; j < n; ++j) strict.push_back(lattice.strict_transform(j));

  // Parity columns: lines, then branch exceptional curves. Each character
  // row is the parity of the sum of the ramification curves it sees, which is
  // a pullback, so it relates parities of the same torsion class.
  std::vector<std::size_t> branch_column(m, BlowupLattice::npos);
  std::size_t columns = n;
  for (std::size_t i = 0; i < m; ++i) {
    if (cls.points.at(lattice.blown_point(i)).status != PointStatus::NonBranch) branch_column[i] = columns++;
  }
  linalg::ModMatrix relations(spec.k, std::vector<std::int64_t>(columns, 0));
  for (std::size_t c = 0; c < spec.k; ++c) {
    for (std::size_t j = 0; j < n; ++j) relations[c][j] = spec.phi[j][c];
    for (std::size_t i = 0; i < m; ++i) {
      if (branch_column[i] != BlowupLattice::npos) {
        relations[c][branch_column[i]] = cls.points.at(lattice.blown_point(i)).epsilon[c];
      }
    }
  }
  linalg::rref_mod(relations, 2);

  std::vector<DivisorSystem> systems;
  std::map<std::vector<std::int64_t>, std::size_t> index;

  for (std::int64_t pencil_degree = 0; 2 * pencil_degree <= degree; ++pencil_degree) {
    std::vector<std::vector<std::int64_t>> a_choices, c_choices;
    std::vector<std::int64_t> cur;
    compositions(n, degree - 2 * pencil_degree, cur, a_choices);
    compositions(m, pencil_degree, cur, c_choices);
    for (const auto& a : a_choices) {
      for (const auto& c : c_choices) {
        DivisorCandidate d{a, std::vector<std::int64_t>(m, 0), c, lattice.zero()};
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i) {
          BigInt b = target.e[i] + 2 * c[i];
          for (std::size_t j = 0; j < n; ++j) b -= a[j] * strict[j].e[i];
          if (b < 0) {
            ok = false;
            break;
          }
          d.b[i] = to_int64(b);
          const bool branch = cls.points.at(lattice.blown_point(i)).status != PointStatus::NonBranch;
          if (!branch && d.b[i] % 2 != 0) ok = false;
        }
        if (!ok) continue;
        LatticeClass total = lattice.zero();
        for (std::size_t j = 0; j < n; ++j) total = total + strict[j] * BigInt(a[j]);
        for (std::size_t i = 0; i < m; ++i) {
          total = total + lattice.exceptional(i) * BigInt(d.b[i]);
          total = total + (lattice.hyperplane() + lattice.exceptional(i) * BigInt(-1)) * BigInt(2 * c[i]);
        }
        if (!(total == target)) continue;
        d.cls = total;

        // Same torsion character iff the parities on branch curves agree
        // modulo the span of the character rows.
        std::vector<std::int64_t> parity(columns, 0);
        for (std::size_t j = 0; j < n; ++j) parity[j] = a[j] % 2;
        for (std::size_t i = 0; i < m; ++i) {
          if (branch_column[i] != BlowupLattice::npos) parity[branch_column[i]] = d.b[i] % 2;
        }
        const auto key = reduce_parity(parity, relations);
        auto [it, inserted] = index.try_emplace(key, systems.size());
        if (inserted) {
          systems.push_back(DivisorSystem{d, 1, d.has_pencil()});
          continue;
        }
        DivisorSystem& sys = systems[it->second];
        ++sys.members;
        sys.positive_dimensional = true;
        if (pencil_weight(d) > pencil_weight(sys.representative)) sys.representative = d;
      }
    }
  }
  return systems;
}

}  // namespace covercalc::torsion
