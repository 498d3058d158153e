#include "covercalc/genus.hpp"

#include "covercalc/errors.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

namespace covercalc::genus {

using cover::CoverSpec;
using cover::GroupElement;
using geometry::IncidenceData;
using geometry::ProjLine;
using geometry::ProjPoint;
using geometry::Triple;

std::int64_t CyclicCoverSpec::multiplicity_of(std::size_t line) const {
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i] == line) return multiplicities[i];
  }
  return 0;
}

namespace {

// Smallest integer x with den * x >= num (den > 0).
std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  std::int64_t x = num / den;
  if (x * den < num) ++x;
  return x;
}

std::vector<Triple> chart_candidates() {
  std::vector<Triple> out{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (std::int64_t bound = 1; bound <= 6; ++bound) {
    for (std::int64_t a = -bound; a <= bound; ++a) {
      for (std::int64_t b = -bound; b <= bound; ++b) {
        for (std::int64_t c = -bound; c <= bound; ++c) {
          if (std::max({std::abs(a), std::abs(b), std::abs(c)}) != bound) continue;
          Triple t{a, b, c};
          if (geometry::canonical_triple(t) != t) continue;
          out.push_back(t);
        }
      }
    }
  }
  return out;
}

BigInt falling(std::int64_t n, std::int64_t k) {
  BigInt r = 1;
  for (std::int64_t i = 0; i < k; ++i) r *= (n - i);
  return r;
}

}  // namespace

Triple choose_chart(const VanishingSpec& vs) {
  static const std::vector<Triple> candidates = chart_candidates();
  for (const auto& t : candidates) {
    const ProjLine ell(t);
    bool ok = true;
    for (const auto& pc : vs.points) {
      if (geometry::lies_on(pc.point, ell)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    for (const auto& l : vs.avoid) {
      if (l == ell) {
        ok = false;
        break;
      }
    }
    if (ok) return ell.coeffs();
  }
  throw Error(ErrorKind::ChartFailure, "no affine chart contains all " + std::to_string(vs.points.size()) +
                                           " condition points");
}

ResidualProblem residual_problem(const VanishingSpec& vs) {
  ResidualProblem out{vs.degree, {}};
  for (const auto& f : vs.forced) out.degree -= f.power;
  for (const auto& pc : vs.points) {
    std::int64_t order = pc.order;
    for (const auto& f : vs.forced) {
      if (geometry::lies_on(pc.point, f.line)) order -= f.power;
    }
    out.points.push_back(PointCondition{pc.point, std::max<std::int64_t>(order, 0)});
  }
  return out;
}

linalg::IntMatrix condition_matrix(const VanishingSpec& vs) {
  const ResidualProblem res = residual_problem(vs);
  linalg::IntMatrix m;
  if (res.degree < 0) return m;
  const std::int64_t d = res.degree;

  // New coordinates w = M z with w0 the chart form.
  const Triple ell = choose_chart(vs);
  std::array<Triple, 3> rows{ell, Triple{1, 0, 0}, Triple{0, 1, 0}};
  const std::array<Triple, 3> units{Triple{1, 0, 0}, Triple{0, 1, 0}, Triple{0, 0, 1}};
  bool found = false;
  for (std::size_t a = 0; a < 3 && !found; ++a) {
    for (std::size_t b = a + 1; b < 3 && !found; ++b) {
      const Triple& u = units[a];
      const Triple& v = units[b];
      const BigInt det = ell[0] * (u[1] * v[2] - u[2] * v[1]) - ell[1] * (u[0] * v[2] - u[2] * v[0]) +
                         ell[2] * (u[0] * v[1] - u[1] * v[0]);
      if (det != 0) {
        rows = {ell, u, v};
        found = true;
      }
    }
  }

  std::vector<std::pair<std::int64_t, std::int64_t>> monomials;
  for (std::int64_t i = 0; i <= d; ++i) {
    for (std::int64_t j = 0; i + j <= d; ++j) monomials.emplace_back(i, j);
  }

  for (const auto& pc : res.points) {
    if (pc.order <= 0) continue;
    const auto& z = pc.point.coords();
    std::array<BigInt, 3> w;
    for (std::size_t r = 0; r < 3; ++r) w[r] = rows[r][0] * z[0] + rows[r][1] * z[1] + rows[r][2] * z[2];
    for (std::int64_t a = 0; a < pc.order; ++a) {
      for (std::int64_t b = 0; a + b < pc.order; ++b) {
        std::vector<BigInt> row;
        row.reserve(monomials.size());
        for (const auto& [i, j] : monomials) {
          if (i < a || j < b) {
            row.emplace_back(0);
            continue;
          }
          BigInt entry = falling(i, a) * falling(j, b);
          entry *= boost::multiprecision::pow(w[1], static_cast<unsigned>(i - a));
          entry *= boost::multiprecision::pow(w[2], static_cast<unsigned>(j - b));
          entry *= boost::multiprecision::pow(w[0], static_cast<unsigned>(d - (i - a) - (j - b)));
          row.push_back(std::move(entry));
        }
        m.push_back(std::move(row));
      }
    }
  }
  return m;
}

std::int64_t poly_space_dim(const VanishingSpec& vs) {
  const ResidualProblem res = residual_problem(vs);
  if (res.degree < 0) return 0;
  const std::int64_t monomials = (res.degree + 1) * (res.degree + 2) / 2;
  const auto rank = static_cast<std::int64_t>(linalg::rank_exact(condition_matrix(vs)));
  return std::max<std::int64_t>(0, monomials - rank);
}

CyclicCoverSpec quotient_multiplicities(const CoverSpec& spec, const GroupElement& chi) {
  CyclicCoverSpec c{spec.q, {}, {}, 0};
  std::int64_t total = 0;
  for (std::size_t i = 0; i < spec.n(); ++i) {
    const std::int64_t mi = cover::pairing(chi, spec.phi[i]);
    if (mi == 0) continue;
    c.lines.push_back(i);
    c.multiplicities.push_back(mi);
    total += mi;
  }
  c.m = total / spec.q;
  return c;
}

std::vector<BranchPoint> branch_singular_points(const CyclicCoverSpec& c, const IncidenceData& inc) {
  std::vector<BranchPoint> out;
  for (const auto& mp : inc.points) {
    BranchPoint bp{mp.point, {}, 0};
    for (auto line : mp.lines) {
      const std::int64_t mi = c.multiplicity_of(line);
      if (mi == 0) continue;
      bp.lines.push_back(line);
      bp.r += mi;
    }
    if (bp.lines.size() >= 2) out.push_back(std::move(bp));
  }
  return out;
}

namespace {

std::vector<ProjLine> branch_lines(const CyclicCoverSpec& c, const CoverSpec& spec) {
  std::vector<ProjLine> out;
  for (auto i : c.lines) out.push_back(spec.arrangement.line(i));
  return out;
}

}  // namespace

std::vector<VanishingSpec> double_cover_conditions(const CyclicCoverSpec& c, const CoverSpec& spec,
                                                   const IncidenceData& inc) {
  VanishingSpec vs{c.m - 3, {}, {}, branch_lines(c, spec)};
  for (const auto& bp : branch_singular_points(c, inc)) {
    const std::int64_t order = ceil_div(bp.r + 1, 2) - 2;
    if (order > 0) vs.points.push_back(PointCondition{bp.point, order});
  }
  return {vs};
}

std::vector<VanishingSpec> triple_cover_conditions(const CyclicCoverSpec& c, const CoverSpec& spec,
                                                   const IncidenceData& inc) {
  const auto points = branch_singular_points(c, inc);
  VanishingSpec p0{2 * c.m - 3, {}, {}, branch_lines(c, spec)};
  for (std::size_t i = 0; i < c.lines.size(); ++i) {
    if (c.multiplicities[i] > 1) {
      p0.forced.push_back(ForcedLine{spec.arrangement.line(c.lines[i]), c.multiplicities[i] - 1});
    }
  }
  VanishingSpec p1{c.m - 3, {}, {}, branch_lines(c, spec)};
  for (const auto& bp : points) {
    const std::int64_t v = ceil_div(bp.r + 1, 3);
    if (2 * v - 2 > 0) p0.points.push_back(PointCondition{bp.point, 2 * v - 2});
    if (v - 2 > 0) p1.points.push_back(PointCondition{bp.point, v - 2});
  }
  return {p0, p1};
}

std::vector<VanishingSpec> general_conditions(const CyclicCoverSpec& c, const CoverSpec& spec,
                                              const IncidenceData& inc) {
  const auto points = branch_singular_points(c, inc);
  const std::int64_t q = c.q;
  std::vector<VanishingSpec> out;
  for (std::int64_t j = 0; j < q; ++j) {
    const std::int64_t e = q - j - 1;
    VanishingSpec vs{e * c.m - 3, {}, {}, branch_lines(c, spec)};
    for (std::size_t i = 0; i < c.lines.size(); ++i) {
      const std::int64_t rj = std::max<std::int64_t>(0, ceil_div(e * c.multiplicities[i] - q + 1, q));
      if (rj > 0) vs.forced.push_back(ForcedLine{spec.arrangement.line(c.lines[i]), rj});
    }
    for (const auto& bp : points) {
      const std::int64_t sj = std::max<std::int64_t>(0, ceil_div(e * bp.r - 2 * q + 1, q));
      if (sj > 0) vs.points.push_back(PointCondition{bp.point, sj});
    }
    out.push_back(std::move(vs));
  }
  return out;
}

std::vector<VanishingSpec> regularity_conditions(const CyclicCoverSpec& c, const CoverSpec& spec,
                                                 const IncidenceData& inc) {
  if (c.q == 2) return double_cover_conditions(c, spec, inc);
  return general_conditions(c, spec, inc);
}

CyclicGenus cyclic_pg(const CyclicCoverSpec& c, const CoverSpec& spec, const IncidenceData& inc) {
  std::int64_t total = 0;
  for (const auto& vs : regularity_conditions(c, spec, inc)) total += poly_space_dim(vs);
  return CyclicGenus{total, c.q <= 3 || total == 0};
}

std::vector<GroupElement> characters_up_to_scalar(std::int64_t q, std::size_t k) {
  std::vector<GroupElement> out;
  std::vector<std::int64_t> v(k, 0);
  while (true) {
    std::size_t lead = 0;
    while (lead < k && v[lead] == 0) ++lead;
    if (lead < k && v[lead] == 1) out.emplace_back(q, v);
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++v[pos] < q) break;
      v[pos] = 0;
      if (pos == 0) return out;
    }
    if (k == 0) return out;
  }
}

GenusReport abelian_pg(const CoverSpec& spec, const IncidenceData& inc, const cover::PointClassification& cls,
                       unsigned threads) {
  cls.require_good(spec);
  const auto chars = characters_up_to_scalar(spec.q, spec.k);
  std::vector<QuotientEntry> entries;
  entries.reserve(chars.size());
  for (const auto& chi : chars) entries.push_back(QuotientEntry{chi, quotient_multiplicities(spec, chi), 0, true});

  std::vector<std::exception_ptr> errors(entries.size());
  auto work = [&](std::size_t i) {
    try {
      const CyclicGenus g = cyclic_pg(entries[i].cover, spec, inc);
      entries[i].pg = g.value;
      entries[i].exact = g.exact;
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(entries.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < entries.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < entries.size(); i = next++) work(i);
      });
    }
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  GenusReport report{std::move(entries), 0, true};
  for (const auto& e : report.quotients) {
    report.pg += e.pg;
    report.exact = report.exact && e.exact;
  }
  return report;
}

Irregularity irregularity(const GenusReport& report, const BigInt& chi) {
  const BigInt value = BigInt(report.pg) + 1 - chi;
  if (value < 0) {
    throw Error(ErrorKind::NegativeIrregularity,
                "p_g + 1 - chi = " + value.str() + " with p_g = " + std::to_string(report.pg));
  }
  return Irregularity{value, report.exact};
}

}  // namespace covercalc::genus
