#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "covercalc/errors.hpp"
#include "covercalc/presets.hpp"
#include "../support/oracles.hpp"

#include <functional>
#include <map>

using namespace covercalc;
using namespace covercalc::cover;
using geometry::ProjLine;

namespace {

GroupElement g(std::int64_t q, std::vector<std::int64_t> v) { return GroupElement(q, std::move(v)); }

const ClassifiedPoint& point_on(const PointClassification& cls, std::vector<std::size_t> lines) {
  for (const auto& p : cls.points) {
    if (p.point.lines == lines) return p;
  }
  throw std::runtime_error("no such point");
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::UnsupportedGroup;
}

}  // namespace

TEST_CASE("group elements") {
  CHECK(g(5, {7, -1}).entries() == std::vector<std::int64_t>{2, 4});
  CHECK((g(3, {1, 2}) + g(3, {2, 2})) == g(3, {0, 1}));
  CHECK(g(5, {1, 3}).scaled(2) == g(5, {2, 1}));
  CHECK(pairing(g(3, {1, 2}), g(3, {2, 2})) == 0);
  CHECK(g(2, {1, 0, 1}).to_string() == "(1,0,1)");
}

TEST_CASE("pair independence") {
  CHECK(pair_independent(g(2, {1, 0}), g(2, {0, 1})));
  CHECK_FALSE(pair_independent(g(3, {1, 1}), g(3, {2, 2})));
  CHECK_FALSE(pair_independent(g(2, {1, 1, 0}), g(2, {1, 1, 0})));
  CHECK(pair_independent(g(5, {1, 2, 0}), g(5, {2, 4, 1})));
}

TEST_CASE("cover validation") {
  auto arr = [] {
    return geometry::Arrangement({ProjLine(1, 0, 0), ProjLine(0, 1, 0), ProjLine(0, 0, 1), ProjLine(1, 1, 1)});
  };
  CHECK_NOTHROW(make_cover_spec(arr(), 2, {g(2, {1, 0}), g(2, {0, 1}), g(2, {1, 0}), g(2, {0, 1})}));
  CHECK(kind_of([&] { make_cover_spec(arr(), 2, {g(2, {1, 0}), g(2, {0, 1}), g(2, {1, 0}), g(2, {1, 1})}); }) ==
        ErrorKind::ValidationError);  // sum (1,0)
  CHECK(kind_of([&] { make_cover_spec(arr(), 2, {g(2, {1, 0}), g(2, {1, 0}), g(2, {1, 0}), g(2, {1, 0})}); }) ==
        ErrorKind::ValidationError);  // not surjective
  CHECK(kind_of([&] { make_cover_spec(arr(), 2, {g(2, {0, 0}), g(2, {1, 0}), g(2, {0, 1}), g(2, {1, 1})}); }) ==
        ErrorKind::ValidationError);  // zero value
  CHECK(kind_of([&] { make_cover_spec(arr(), 4, {g(4, {1, 0}), g(4, {0, 1}), g(4, {3, 0}), g(4, {0, 3})}); }) ==
        ErrorKind::ValidationError);  // q not prime
  CHECK(kind_of([&] { make_cover_spec(arr(), 2, {g(2, {1}), g(2, {1}), g(2, {1}), g(2, {1})}); }) ==
        ErrorKind::ValidationError);  // k = 1
}

TEST_CASE("epsilon values from the catalog") {
  const auto b4 = geometry::preset("burniat-4");
  CHECK(epsilon({2, 5, 8}, b4) == g(2, {0, 0}));
  CHECK(epsilon({0, 1, 2, 3}, b4) == g(2, {1, 1}));
  const auto fig1 = geometry::preset("campedelli-fig1");
  const auto cls = classify_points(fig1, geometry::compute_incidence(fig1.arrangement));
  for (const auto& p : cls.points) {
    if (p.multiplicity() == 3) CHECK(p.epsilon == g(2, {0, 0, 1}));
  }
}

TEST_CASE("burniat-4 classification") {
  const auto spec = geometry::preset("burniat-4");
  const auto cls = classify_points(spec, geometry::compute_incidence(spec.arrangement));
  CHECK(point_on(cls, {0, 1, 2, 3}).status == PointStatus::BranchGood);
  CHECK(point_on(cls, {3, 4, 5, 6}).status == PointStatus::BranchGood);
  CHECK(point_on(cls, {0, 6, 7, 8}).status == PointStatus::BranchGood);
  // The third 4-fold point's epsilon is (0,1).
  CHECK(point_on(cls, {0, 6, 7, 8}).epsilon == g(2, {0, 1}));
  for (std::vector<std::size_t> t : {std::vector<std::size_t>{2, 5, 8}, {1, 4, 8}, {1, 5, 7}, {2, 4, 7}}) {
    CHECK(point_on(cls, t).status == PointStatus::NonBranch);
    CHECK(point_on(cls, t).blown_up);
  }
  CHECK(cls.t_branch_of(4) == 3);
  CHECK(cls.t_nonbranch_of(3) == 4);
  CHECK(cls.t_branch_of(2) == 6);
  CHECK(cls.blowup_set.size() == 7);
}

TEST_CASE("classification invariants on every preset") {
  for (const auto& name : geometry::preset_names()) {
    CAPTURE(name);
    const auto spec = geometry::preset(name);
    const auto inc = geometry::compute_incidence(spec.arrangement);
    const auto cls = classify_points(spec, inc);
    CHECK(cls.is_good());
    std::map<std::size_t, std::size_t> total;
    for (const auto& p : cls.points) {
      CHECK((p.status == PointStatus::NonBranch) == p.epsilon.is_zero());
      CHECK(p.blown_up == (p.multiplicity() >= 3 || p.status == PointStatus::NonBranch));
      ++total[p.multiplicity()];
    }
    for (auto [r, t] : total) CHECK(cls.t_branch_of(r) + cls.t_nonbranch_of(r) == t);
  }
}

TEST_CASE("bad point detection") {
  // q = 3: two lines with the same character meet in a point with epsilon 2x.
  const geometry::Arrangement arr({ProjLine(1, 0, 0), ProjLine(0, 1, 0), ProjLine(0, 0, 1), ProjLine(1, 1, 1)});
  const auto spec = make_cover_spec(arr, 3, {g(3, {1, 0}), g(3, {1, 0}), g(3, {0, 1}), g(3, {1, 2})});
  const auto cls = classify_points(spec, geometry::compute_incidence(arr));
  CHECK(point_on(cls, {0, 1}).status == PointStatus::Bad);
  CHECK_FALSE(cls.is_good());
  try {
    cls.require_good(spec);
    FAIL("expected BadPoint");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadPoint);
    CHECK(std::string(e.what()).find("(0:0:1)") != std::string::npos);
  }
}

TEST_CASE("double points of q = 2 covers are never bad") {
  oracle::RandomSpecSource src(11);
  int checked = 0;
  while (checked < 200) {
    CoverSpec spec = [&] {
      while (true) {
        try {
          auto s = src.draw();
          if (s.q == 2) return s;
        } catch (const Error&) {
        }
      }
    }();
    const auto cls = classify_points(spec, geometry::compute_incidence(spec.arrangement));
    for (const auto& p : cls.points) {
      if (p.multiplicity() == 2) CHECK(p.status != PointStatus::Bad);
    }
    ++checked;
  }
}
