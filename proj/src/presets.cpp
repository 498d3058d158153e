#include "covercalc/presets.hpp"

#include "covercalc/errors.hpp"

#include <cstdint>
#include <initializer_list>

namespace covercalc::geometry {

namespace {

using cover::CoverSpec;
using cover::GroupElement;

struct Row {
  std::int64_t a0, a1, a2;
  std::vector<std::int64_t> phi;
};

CoverSpec build(std::int64_t q, std::initializer_list<Row> rows) {
  std::vector<ProjLine> lines;
  std::vector<GroupElement> phi;
  for (const auto& r : rows) {
    lines.emplace_back(r.a0, r.a1, r.a2);
    phi.emplace_back(q, r.phi);
  }
  return cover::make_cover_spec(Arrangement(std::move(lines)), q, std::move(phi));
}

// Nine lines through the three vertices of the coordinate triangle:
// z0, z1 - a1 z0, z1 - z0 | z1, z1 - c1 z2, z1 - c2 z2 | z2, z2 - b1 z0, z2 - z0.
CoverSpec burniat(std::int64_t a1, std::int64_t b1, std::int64_t c1, std::int64_t c2) {
  return build(2, {
                      {1, 0, 0, {1, 0}},
                      {-a1, 1, 0, {1, 0}},
                      {-1, 1, 0, {1, 0}},
                      {0, 1, 0, {0, 1}},
                      {0, 1, -c1, {0, 1}},
                      {0, 1, -c2, {0, 1}},
                      {0, 0, 1, {1, 1}},
                      {-b1, 0, 1, {1, 1}},
                      {-1, 0, 1, {1, 1}},
                  });
}

// Campedelli covers: one line per nonzero vector of (Z/2Z)^3.
const std::vector<std::int64_t> a100{1, 0, 0}, a010{0, 1, 0}, a110{1, 1, 0}, a001{0, 0, 1},
    a101{1, 0, 1}, a011{0, 1, 1}, a111{1, 1, 1};

CoverSpec campedelli_generic() {
  return build(2, {
                      {1, 0, 0, a100},
                      {0, 1, 0, a010},
                      {0, 0, 1, a110},
                      {1, 1, 1, a001},
                      {1, 2, 4, a101},
                      {1, 3, 9, a011},
                      {1, 4, 16, a111},
                  });
}

// Triple points at the coordinate vertices, each with epsilon (0,0,1).
CoverSpec campedelli_fig1() {
  return build(2, {
                      {0, 0, 1, a100},
                      {1, 0, 0, a010},
                      {0, 1, 0, a110},
                      {1, 5, 7, a001},
                      {1, -3, 0, a101},
                      {0, 1, -1, a011},
                      {1, 0, -2, a111},
                  });
}

// Six triple points, three double points.
CoverSpec campedelli_fig6() {
  return build(2, {
                      {1, 0, 0, a100},
                      {0, 1, 1, a010},
                      {0, 1, 0, a110},
                      {1, 1, 0, a001},
                      {0, 0, 1, a101},
                      {1, 0, 1, a011},
                      {1, 1, 1, a111},
                  });
}

CoverSpec godeaux() {
  return build(5, {
                      {1, 0, 0, {1, 0}},
                      {0, 1, 0, {0, 1}},
                      {0, 0, 1, {1, 2}},
                      {1, 1, 1, {3, 2}},
                  });
}

// Triple points L2L3L4 = (1:0:0), L1L3L5 = (0:1:0), L1L2L6 = (0:0:1).
CoverSpec hexagonal() {
  return build(3, {
                      {1, 0, 0, {1, 0}},
                      {0, 1, 0, {1, 0}},
                      {0, 0, 1, {1, 0}},
                      {0, 1, -1, {2, 1}},
                      {1, 0, -2, {1, 1}},
                      {1, -3, 0, {0, 1}},
                  });
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{
      "godeaux",   "campedelli-generic", "campedelli-fig1", "campedelli-fig6",
      "burniat-0", "burniat-1",          "burniat-2a",      "burniat-2b",
      "burniat-3", "burniat-4",          "hexagonal-3",
  };
  return names;
}

cover::CoverSpec preset(std::string_view name) {
  if (name == "godeaux") return godeaux();
  if (name == "campedelli-generic") return campedelli_generic();
  if (name == "campedelli-fig1") return campedelli_fig1();
  if (name == "campedelli-fig6") return campedelli_fig6();
  if (name == "burniat-0") return burniat(2, 3, 5, 7);
  if (name == "burniat-1") return burniat(2, 3, 5, 1);
  if (name == "burniat-2a") return burniat(6, 2, 3, 1);
  if (name == "burniat-2b") return burniat(2, 3, 2, 1);
  if (name == "burniat-3") return burniat(2, 2, 2, 1);
  if (name == "burniat-4") return burniat(-1, -1, -1, 1);
  if (name == "hexagonal-3") return hexagonal();
  throw Error(ErrorKind::UnknownPreset, "no preset named '" + std::string(name) + "'");
}

}  // namespace covercalc::geometry
