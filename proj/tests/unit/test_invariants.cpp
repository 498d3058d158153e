#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "covercalc/errors.hpp"
#include "covercalc/invariants.hpp"
#include "covercalc/presets.hpp"
#include "../support/oracles.hpp"

using namespace covercalc;
using namespace covercalc::invariants;

namespace {

struct Setup {
  cover::CoverSpec spec;
  geometry::IncidenceData inc;
  cover::PointClassification cls;
  BlowupLattice lattice;

  explicit Setup(cover::CoverSpec s)
      : spec(std::move(s)),
        inc(geometry::compute_incidence(spec.arrangement)),
        cls(cover::classify_points(spec, inc)),
        lattice(spec, cls) {}
};

std::size_t exceptional_at(const Setup& s, std::vector<std::size_t> lines) {
  for (std::size_t i = 0; i < s.lattice.exceptional_count(); ++i) {
    if (s.cls.points[s.lattice.blown_point(i)].point.lines == lines) return i;
  }
  throw std::runtime_error("not blown up");
}

}  // namespace

TEST_CASE("lattice basics") {
  const Setup s(geometry::preset("burniat-3"));
  const auto& lat = s.lattice;
  CHECK(lat.rank() == 7);
  CHECK(lat.square(lat.hyperplane()) == 1);
  CHECK(lat.dot(lat.hyperplane(), lat.exceptional(0)) == 0);
  CHECK(lat.square(lat.exceptional(2)) == -1);
  for (std::size_t j = 0; j < s.spec.n(); ++j) {
    CHECK(lat.square(lat.strict_transform(j)) == 1 - static_cast<long>(lat.blown_points_on(j)));
  }
  CHECK(lat.exceptional_index(s.lattice.blown_point(3)) == 3);
}

TEST_CASE("numerical invariants of the catalog") {
  struct Row {
    const char* name;
    int k2, e;
  };
  const Row rows[] = {{"godeaux", 1, 11},           {"campedelli-generic", 2, 10}, {"campedelli-fig1", 2, 10},
                      {"campedelli-fig6", 2, 10},   {"burniat-0", 6, 6},           {"burniat-1", 5, 7},
                      {"burniat-2a", 4, 8},         {"burniat-2b", 4, 8},          {"burniat-3", 3, 9},
                      {"burniat-4", 2, 10},         {"hexagonal-3", 6, 6}};
  for (const auto& r : rows) {
    CAPTURE(r.name);
    const Setup s(geometry::preset(r.name));
    const auto inv = numerical_invariants(s.spec, s.cls);
    CHECK(inv.k2 == r.k2);
    CHECK(inv.euler == r.e);
    CHECK(inv.chi == 1);
  }
}

TEST_CASE("closed forms agree with the lattice and strata routes") {
  for (const auto& name : geometry::preset_names()) {
    CAPTURE(name);
    const Setup s(geometry::preset(name));
    CHECK(k_squared(s.spec, s.cls) == oracle::k2_lattice(s.spec));
    CHECK(euler_characteristic(s.spec, s.cls) == oracle::euler_strata(s.spec));
    const auto dk = canonical_divisor_class(s.spec, s.cls, s.lattice).d_k;
    BigInt scale = 1;
    for (std::size_t i = 2; i < s.spec.k; ++i) scale *= s.spec.q;
    CHECK(k_squared(s.spec, s.cls) == scale * s.lattice.square(dk));
  }
}

TEST_CASE("Noether integrality on random good covers") {
  oracle::RandomSpecSource src(2024);
  int good = 0, attempts = 0;
  while (good < 200) {
    REQUIRE(++attempts < 200000);
    cover::CoverSpec spec = [&]() -> cover::CoverSpec {
      while (true) {
        try {
          return src.draw();
        } catch (const Error&) {
        }
      }
    }();
    const Setup s(std::move(spec));
    if (!s.cls.is_good()) continue;
    ++good;
    const BigInt k2 = k_squared(s.spec, s.cls);
    const BigInt e = euler_characteristic(s.spec, s.cls);
    CHECK(k2 == oracle::k2_lattice(s.spec));
    CHECK(e == oracle::euler_strata(s.spec));
    CHECK((k2 + e) % 12 == 0);
    CHECK_NOTHROW(chi_holomorphic(k2, e));
  }
}

TEST_CASE("chi and Noether trap") {
  CHECK(chi_holomorphic(2, 10) == 1);
  for (int s = 0; s <= 4; ++s) CHECK(chi_holomorphic(6 - s, 6 + s) == 1);
  try {
    chi_holomorphic(5, 6);
    FAIL("expected NoetherViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoetherViolation);
  }
}

TEST_CASE("bad points are rejected") {
  const geometry::Arrangement arr(
      {geometry::ProjLine(1, 0, 0), geometry::ProjLine(0, 1, 0), geometry::ProjLine(0, 0, 1), geometry::ProjLine(1, 1, 1)});
  const auto spec = cover::make_cover_spec(
      arr, 3, {cover::GroupElement(3, {1, 0}), cover::GroupElement(3, {1, 0}), cover::GroupElement(3, {0, 1}),
               cover::GroupElement(3, {1, 2})});
  const auto cls = cover::classify_points(spec, geometry::compute_incidence(arr));
  CHECK_THROWS_AS(k_squared(spec, cls), Error);
  CHECK_THROWS_AS(euler_characteristic(spec, cls), Error);
}

TEST_CASE("canonical class") {
  for (const char* name : {"burniat-0", "burniat-1", "burniat-2a", "burniat-2b", "burniat-3", "burniat-4"}) {
    CAPTURE(name);
    const Setup s(geometry::preset(name));
    const auto d = canonical_divisor_class(s.spec, s.cls, s.lattice).d_k;
    CHECK(d.l == 3);
    for (const auto& c : d.e) CHECK(c == -1);
  }
  for (const char* name : {"campedelli-fig1", "campedelli-fig6", "campedelli-generic"}) {
    const Setup s(geometry::preset(name));
    const auto d = canonical_divisor_class(s.spec, s.cls, s.lattice).d_k;
    CHECK(d.l == 1);
    for (const auto& c : d.e) CHECK(c == 0);
  }
  const Setup g(geometry::preset("godeaux"));
  const auto d = canonical_divisor_class(g.spec, g.cls, g.lattice).d_k;
  CHECK(d.l == 1);
  CHECK(d.e.empty());
}

TEST_CASE("minimality witnesses") {
  auto zeros = [](const char* name) {
    const Setup s(geometry::preset(name));
    std::vector<std::string> out;
    for (const auto& m : minimality_report(s.spec, s.cls, s.lattice)) {
      // Products computed by hand: D_K.E_p is minus the E_p coefficient,
      // D_K.L~_j = a - (number of blown-up points on L_j) for Burniat.
      CHECK(m.product == s.lattice.dot(canonical_divisor_class(s.spec, s.cls, s.lattice).d_k, m.curve));
      CHECK(m.verdict != Verdict::NonMinimalWitness);
      if (m.verdict == Verdict::NonAmpleWitness) {
        out.push_back((m.kind == CurveKind::StrictTransform ? "L" : "E") + std::to_string(m.index + 1));
      }
    }
    return out;
  };
  CHECK(zeros("burniat-2b") == std::vector<std::string>{"L9"});
  CHECK(zeros("burniat-2a").empty());
  CHECK(zeros("burniat-1").empty());
  CHECK(zeros("burniat-0").empty());
  CHECK(zeros("burniat-3") == std::vector<std::string>{"L2", "L6", "L9"});
  CHECK(zeros("burniat-4") == std::vector<std::string>{"L2", "L3", "L5", "L6", "L8", "L9"});
  CHECK(zeros("campedelli-generic").empty());
  CHECK(zeros("campedelli-fig1").size() == 3);
  CHECK(zeros("godeaux").empty());
  CHECK(zeros("hexagonal-3").empty());
}

TEST_CASE("minimality needs a big class") {
  // Six lines, q = 2: D_K = 0 L plus exceptional curves with coefficient 0.
  const geometry::Arrangement arr({geometry::ProjLine(1, 0, 0), geometry::ProjLine(0, 1, 0), geometry::ProjLine(0, 0, 1),
                                   geometry::ProjLine(1, 1, 1), geometry::ProjLine(1, 2, 4), geometry::ProjLine(1, 3, 9)});
  const auto spec = cover::make_cover_spec(
      arr, 2, {cover::GroupElement(2, {1, 0}), cover::GroupElement(2, {0, 1}), cover::GroupElement(2, {1, 1}),
               cover::GroupElement(2, {1, 0}), cover::GroupElement(2, {0, 1}), cover::GroupElement(2, {1, 1})});
  const auto cls = cover::classify_points(spec, geometry::compute_incidence(arr));
  const BlowupLattice lat(spec, cls);
  try {
    minimality_report(spec, cls, lat);
    FAIL("expected NotBig");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotBig);
  }
}

TEST_CASE("curve table of the Burniat presets") {
  for (const char* name : {"burniat-0", "burniat-1", "burniat-2a", "burniat-2b", "burniat-3", "burniat-4"}) {
    CAPTURE(name);
    const Setup s(geometry::preset(name));
    for (const auto& c : branch_curve_report(s.spec, s.cls, s.lattice)) {
      CAPTURE(c.index);
      CHECK(c.components == 1);
      CHECK(c.self_intersection == c.self_intersection_adjunction);
      if (c.kind == CurveKind::StrictTransform) {
        const long t = static_cast<long>(s.lattice.blown_points_on(c.index));
        CHECK(c.genus == 3 - t);
        CHECK(c.self_intersection == 1 - t);
      } else if (c.branch) {
        CHECK(c.genus == 1);
        CHECK(c.self_intersection == -1);
      } else {
        CHECK(c.genus == 0);
        CHECK(c.self_intersection == -4);
      }
    }
  }
}

TEST_CASE("curve table consistency on every preset") {
  for (const auto& name : geometry::preset_names()) {
    CAPTURE(name);
    const Setup s(geometry::preset(name));
    BigInt order = 1;
    for (std::size_t i = 0; i < s.spec.k; ++i) order *= s.spec.q;
    for (const auto& c : branch_curve_report(s.spec, s.cls, s.lattice)) {
      CHECK(c.genus >= 0);
      CHECK(c.self_intersection == c.self_intersection_adjunction);
      // Preimage degree: components * |H| sheets over the curve, q-fold ramified if branch.
      CHECK(c.components * c.stabilizer_order * (c.branch ? s.spec.q : 1) == order);
      // Hurwitz parity: b |H| (q-1) / q is even.
      CHECK((BigInt(static_cast<std::uint64_t>(c.branch_points)) * c.stabilizer_order * (s.spec.q - 1) / s.spec.q) % 2 == 0);
    }
  }
}

TEST_CASE("generic Campedelli line") {
  const Setup s(geometry::preset("campedelli-generic"));
  for (const auto& c : branch_curve_report(s.spec, s.cls, s.lattice)) {
    CHECK(c.genus == 3);
    CHECK(c.self_intersection == 2);
    CHECK(c.components == 1);
  }
}

TEST_CASE("exceptional curve lookup") {
  const Setup s(geometry::preset("burniat-4"));
  const std::size_t e = exceptional_at(s, {2, 5, 8});
  const auto cls = s.lattice.strict_transform(2);
  CHECK(cls.e[e] == -1);
  CHECK(s.lattice.dot(cls, s.lattice.exceptional(e)) == 1);
}
