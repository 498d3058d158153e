#include "covercalc/report.hpp"

#include "covercalc/genus.hpp"
#include "covercalc/invariants.hpp"
#include "covercalc/torsion.hpp"

#include <json.hpp>

#include <sstream>

namespace covercalc::cli {

namespace {

using json = nlohmann::ordered_json;

std::string curve_name(invariants::CurveKind kind, std::size_t index) {
  return (kind == invariants::CurveKind::StrictTransform ? "L" : "E") + std::to_string(index + 1);
}

std::string format_class(const BigInt& l, const std::vector<BigInt>& e) {
  std::ostringstream out;
  out << l << "L";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    const BigInt mag = abs_big(e[i]);
    out << (e[i] < 0 ? " - " : " + ");
    if (mag != 1) out << mag;
    out << "E" << i + 1;
  }
  return out.str();
}

std::string format_linear_form(const std::vector<BigInt>& coeffs) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    const BigInt mag = abs_big(coeffs[i]);
    if (first) {
      out << (coeffs[i] < 0 ? "-" : "");
    } else {
      out << (coeffs[i] < 0 ? " - " : " + ");
    }
    if (mag != 1) out << mag;
    out << "z" << i;
    first = false;
  }
  return out.str();
}

std::string format_vector(const std::vector<std::int64_t>& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ')';
  return out.str();
}

struct Core {
  BigInt k2, euler, chi;
  genus::GenusReport genus;
  genus::Irregularity irr;
};

Core core_invariants(const cover::CoverSpec& spec, const geometry::IncidenceData& inc,
                     const cover::PointClassification& cls, unsigned threads) {
  const auto num = invariants::numerical_invariants(spec, cls);
  auto g = genus::abelian_pg(spec, inc, cls, threads);
  auto irr = genus::irregularity(g, num.chi);
  return Core{num.k2, num.euler, num.chi, std::move(g), std::move(irr)};
}

}  // namespace

Report analyze(const CoverConfig& config, unsigned threads) {
  const cover::CoverSpec spec = config.cover_spec();
  const auto inc = geometry::compute_incidence(spec.arrangement);
  const auto cls = cover::classify_points(spec, inc);
  cls.require_good(spec);
  const invariants::BlowupLattice lattice(spec, cls);

  Report r;
  r.source = config.preset ? *config.preset : "config";
  r.q = spec.q;
  r.k = spec.k;
  for (std::size_t i = 0; i < spec.n(); ++i) {
    const auto& c = spec.arrangement.line(i).coeffs();
    r.lines.push_back(LineRow{{c.begin(), c.end()}, spec.phi[i].entries()});
  }
  for (const auto& p : cls.points) {
    PointRow row;
    const auto& z = p.point.point.coords();
    row.coords.assign(z.begin(), z.end());
    for (auto i : p.point.lines) row.lines.push_back(i + 1);
    row.epsilon = p.epsilon.entries();
    row.status = cover::to_string(p.status);
    row.blown_up = p.blown_up;
    r.points.push_back(std::move(row));
  }

  const Core core = core_invariants(spec, inc, cls, threads);
  r.k2 = core.k2;
  r.euler = core.euler;
  r.chi = core.chi;
  r.pg = core.genus.pg;
  r.pg_exact = core.genus.exact;
  r.irregularity = core.irr.value;
  r.irregularity_exact = core.irr.exact;
  if (!r.pg_exact) r.warnings.push_back("p_g = " + std::to_string(r.pg) + " is an upper bound");
  if (!r.irregularity_exact) {
    r.warnings.push_back("irregularity " + r.irregularity.str() + " is an upper bound");
  }

  r.k_phi = torsion::k_phi(spec, cls);
  const auto bound = torsion::torsion_lower_bound(spec, cls, r.irregularity, r.irregularity_exact);
  r.torsion = TorsionRow{bound.q, bound.exponent, bound.valid};

  const auto canonical = invariants::canonical_divisor_class(spec, cls, lattice);
  r.canonical_l = canonical.d_k.l;
  r.canonical_e = canonical.d_k.e;

  for (const auto& e : core.genus.quotients) {
    QuotientRow row;
    row.character = e.character.entries();
    row.multiplicities.assign(spec.n(), 0);
    for (std::size_t i = 0; i < e.cover.lines.size(); ++i) row.multiplicities[e.cover.lines[i]] = e.cover.multiplicities[i];
    row.pg = e.pg;
    row.exact = e.exact;
    r.quotients.push_back(std::move(row));
  }

  try {
    for (const auto& m : invariants::minimality_report(spec, cls, lattice)) {
      const std::string name = curve_name(m.kind, m.index);
      r.minimality.push_back(MinimalityRow{name, m.product, invariants::to_string(m.verdict)});
      if (m.verdict != invariants::Verdict::Ok) {
        r.warnings.push_back(invariants::to_string(m.verdict) + ": D_K." + name + " = " + m.product.str());
      }
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotBig) throw;
    r.warnings.push_back("minimality check skipped: D_K^2 is not positive");
  }

  if (config.universal) {
    const cover::CoverSpec uspec = torsion::universal_cover_spec(spec, cls);
    const auto ucls = cover::classify_points(uspec, inc);
    const Core u = core_invariants(uspec, inc, ucls, threads);
    UniversalReport ur;
    ur.k = uspec.k;
    for (const auto& v : uspec.phi) ur.phi.push_back(v.entries());
    ur.k2 = u.k2;
    ur.euler = u.euler;
    ur.chi = u.chi;
    ur.pg = u.genus.pg;
    ur.pg_exact = u.genus.exact;
    ur.irregularity = u.irr.value;
    ur.irregularity_exact = u.irr.exact;
    if (!ur.pg_exact) r.warnings.push_back("universal cover p_g = " + std::to_string(ur.pg) + " is an upper bound");
    r.universal = std::move(ur);
  }

  if (config.torsion_divisors) {
    std::vector<DivisorRow> rows;
    for (const auto& s : torsion::enumerate_even_pullback_divisors(spec, cls, lattice)) {
      rows.push_back(DivisorRow{torsion::format_candidate(s.representative), s.positive_dimensional, s.members});
    }
    r.torsion_divisors = std::move(rows);
  }

  if (config.curves) {
    std::vector<CurveRow> rows;
    for (const auto& c : invariants::branch_curve_report(spec, cls, lattice)) {
      rows.push_back(CurveRow{curve_name(c.kind, c.index), c.branch, c.components, c.genus, c.self_intersection});
    }
    r.curves = std::move(rows);
  }
  return r;
}

namespace {

json big_json(const BigInt& v) {
  if (v >= BigInt(INT64_MIN) && v <= BigInt(INT64_MAX)) return static_cast<std::int64_t>(v);
  return v.str();
}

json big_list(const std::vector<BigInt>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(big_json(x));
  return out;
}

BigInt big_from(const json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>().c_str());
  return BigInt(j.get<std::int64_t>());
}

std::vector<BigInt> big_list_from(const json& j) {
  std::vector<BigInt> out;
  for (const auto& x : j) out.push_back(big_from(x));
  return out;
}

json to_json(const Report& r) {
  json j;
  j["source"] = r.source;
  j["q"] = r.q;
  j["k"] = r.k;
  j["lines"] = json::array();
  for (const auto& l : r.lines) j["lines"].push_back({{"coeffs", big_list(l.coeffs)}, {"phi", l.phi}});
  j["points"] = json::array();
  for (const auto& p : r.points) {
    j["points"].push_back({{"coords", big_list(p.coords)},
                           {"lines", p.lines},
                           {"epsilon", p.epsilon},
                           {"status", p.status},
                           {"blown_up", p.blown_up}});
  }
  j["k2"] = big_json(r.k2);
  j["euler"] = big_json(r.euler);
  j["chi"] = big_json(r.chi);
  j["pg"] = r.pg;
  j["pg_exact"] = r.pg_exact;
  j["irregularity"] = big_json(r.irregularity);
  j["irregularity_exact"] = r.irregularity_exact;
  j["k_phi"] = r.k_phi;
  j["torsion"] = {{"q", r.torsion.q}, {"exponent", r.torsion.exponent}, {"valid", r.torsion.valid}};
  j["canonical_l"] = big_json(r.canonical_l);
  j["canonical_e"] = big_list(r.canonical_e);
  j["quotients"] = json::array();
  for (const auto& qr : r.quotients) {
    j["quotients"].push_back(
        {{"character", qr.character}, {"multiplicities", qr.multiplicities}, {"pg", qr.pg}, {"exact", qr.exact}});
  }
  j["minimality"] = json::array();
  for (const auto& m : r.minimality) {
    j["minimality"].push_back({{"curve", m.curve}, {"product", big_json(m.product)}, {"verdict", m.verdict}});
  }
  if (r.universal) {
    const auto& u = *r.universal;
    j["universal"] = {{"k", u.k},
                      {"phi", u.phi},
                      {"k2", big_json(u.k2)},
                      {"euler", big_json(u.euler)},
                      {"chi", big_json(u.chi)},
                      {"pg", u.pg},
                      {"pg_exact", u.pg_exact},
                      {"irregularity", big_json(u.irregularity)},
                      {"irregularity_exact", u.irregularity_exact}};
  }
  if (r.torsion_divisors) {
    j["torsion_divisors"] = json::array();
    for (const auto& d : *r.torsion_divisors) {
      j["torsion_divisors"].push_back({{"divisor", d.divisor}, {"pencil", d.pencil}, {"members", d.members}});
    }
  }
  if (r.curves) {
    j["curves"] = json::array();
    for (const auto& c : *r.curves) {
      j["curves"].push_back({{"curve", c.curve},
                             {"branch", c.branch},
                             {"components", big_json(c.components)},
                             {"genus", big_json(c.genus)},
                             {"self_intersection", big_json(c.self_intersection)}});
    }
  }
  j["warnings"] = r.warnings;
  return j;
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  out << "source: " << r.source << "\n";
  out << "group: (Z/" << r.q << "Z)^" << r.k << ", " << r.lines.size() << " lines\n\n";
  out << "lines:\n";
  for (std::size_t i = 0; i < r.lines.size(); ++i) {
    const auto& l = r.lines[i];
    out << "  L" << i + 1 << "  " << format_linear_form(l.coeffs) << " = 0  phi = " << format_vector(l.phi) << "\n";
  }
  out << "\nmultiple points:\n";
  std::size_t e_index = 0;
  for (const auto& p : r.points) {
    out << "  (" << p.coords[0] << ":" << p.coords[1] << ":" << p.coords[2] << ")  r = " << p.lines.size()
        << "  lines";
    for (auto i : p.lines) out << " " << i;
    out << "  eps = " << format_vector(p.epsilon) << "  " << p.status;
    if (p.blown_up) out << "  E" << ++e_index;
    out << "\n";
  }
  out << "\ninvariants:\n";
  out << "  K^2 = " << r.k2 << "\n";
  out << "  e = " << r.euler << "\n";
  out << "  chi = " << r.chi << "\n";
  out << "  p_g = " << r.pg << (r.pg_exact ? "" : " (upper bound)") << "\n";
  out << "  irregularity = " << r.irregularity << (r.irregularity_exact ? "" : " (upper bound)") << "\n";
  out << "  k_phi = " << r.k_phi << "\n";
  out << "  torsion: (Z/" << r.torsion.q << "Z)^" << r.torsion.exponent << " embeds in Tors(X)"
      << (r.torsion.valid ? "" : " [not established: irregularity may be positive]") << "\n";
  out << "  D_K = " << format_class(r.canonical_l, r.canonical_e) << "\n";

  out << "\ncyclic quotients (" << r.quotients.size() << "):\n";
  for (const auto& qr : r.quotients) {
    out << "  chi = " << format_vector(qr.character) << "  m = " << format_vector(qr.multiplicities)
        << "  p_g = " << qr.pg << (qr.exact ? "" : " (upper bound)") << "\n";
  }

  out << "\nminimality (visible curves only):\n";
  for (const auto& m : r.minimality) out << "  D_K." << m.curve << " = " << m.product << "  " << m.verdict << "\n";

  if (r.universal) {
    const auto& u = *r.universal;
    out << "\nuniversal cover (Z/" << r.q << "Z)^" << u.k << ":\n";
    out << "  K^2 = " << u.k2 << "\n  e = " << u.euler << "\n  chi = " << u.chi << "\n";
    out << "  p_g = " << u.pg << (u.pg_exact ? "" : " (upper bound)") << "\n";
    out << "  irregularity = " << u.irregularity << (u.irregularity_exact ? "" : " (upper bound)") << "\n";
  }
  if (r.torsion_divisors) {
    out << "\neven-pullback divisors in |D_K| (" << r.torsion_divisors->size() << " systems):\n";
    for (const auto& d : *r.torsion_divisors) {
      out << "  " << d.divisor << (d.pencil ? "  (pencil family)" : "") << "\n";
    }
  }
  if (r.curves) {
    out << "\ncurves over the arrangement:\n";
    for (const auto& c : *r.curves) {
      out << "  " << c.curve << (c.branch ? "  branch" : "  non-branch") << "  components = " << c.components
          << "  genus = " << c.genus << "  self-intersection = " << c.self_intersection << "\n";
    }
  }
  if (!r.warnings.empty()) {
    out << "\nwarnings:\n";
    for (const auto& w : r.warnings) out << "  " << w << "\n";
  }
  return out.str();
}

}  // namespace

std::string emit_report(const Report& report, Format format) {
  if (format == Format::Json) return to_json(report).dump(2) + "\n";
  return to_text(report);
}

Report report_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  try {
    Report r;
    r.source = j.at("source").get<std::string>();
    r.q = j.at("q").get<std::int64_t>();
    r.k = j.at("k").get<std::size_t>();
    for (const auto& l : j.at("lines")) {
      r.lines.push_back(LineRow{big_list_from(l.at("coeffs")), l.at("phi").get<std::vector<std::int64_t>>()});
    }
    for (const auto& p : j.at("points")) {
      r.points.push_back(PointRow{big_list_from(p.at("coords")), p.at("lines").get<std::vector<std::size_t>>(),
                                  p.at("epsilon").get<std::vector<std::int64_t>>(), p.at("status").get<std::string>(),
                                  p.at("blown_up").get<bool>()});
    }
    r.k2 = big_from(j.at("k2"));
    r.euler = big_from(j.at("euler"));
    r.chi = big_from(j.at("chi"));
    r.pg = j.at("pg").get<std::int64_t>();
    r.pg_exact = j.at("pg_exact").get<bool>();
    r.irregularity = big_from(j.at("irregularity"));
    r.irregularity_exact = j.at("irregularity_exact").get<bool>();
    r.k_phi = j.at("k_phi").get<std::size_t>();
    const auto& t = j.at("torsion");
    r.torsion = TorsionRow{t.at("q").get<std::int64_t>(), t.at("exponent").get<std::size_t>(), t.at("valid").get<bool>()};
    r.canonical_l = big_from(j.at("canonical_l"));
    r.canonical_e = big_list_from(j.at("canonical_e"));
    for (const auto& qr : j.at("quotients")) {
      r.quotients.push_back(QuotientRow{qr.at("character").get<std::vector<std::int64_t>>(),
                                        qr.at("multiplicities").get<std::vector<std::int64_t>>(),
                                        qr.at("pg").get<std::int64_t>(), qr.at("exact").get<bool>()});
    }
    for (const auto& m : j.at("minimality")) {
      r.minimality.push_back(
          MinimalityRow{m.at("curve").get<std::string>(), big_from(m.at("product")), m.at("verdict").get<std::string>()});
    }
    if (j.contains("universal")) {
      const auto& u = j.at("universal");
      UniversalReport ur;
      ur.k = u.at("k").get<std::size_t>();
      ur.phi = u.at("phi").get<std::vector<std::vector<std::int64_t>>>();
      ur.k2 = big_from(u.at("k2"));
      ur.euler = big_from(u.at("euler"));
      ur.chi = big_from(u.at("chi"));
      ur.pg = u.at("pg").get<std::int64_t>();
      ur.pg_exact = u.at("pg_exact").get<bool>();
      ur.irregularity = big_from(u.at("irregularity"));
      ur.irregularity_exact = u.at("irregularity_exact").get<bool>();
      r.universal = std::move(ur);
    }
    if (j.contains("torsion_divisors")) {
      std::vector<DivisorRow> rows;
      for (const auto& d : j.at("torsion_divisors")) {
        rows.push_back(DivisorRow{d.at("divisor").get<std::string>(), d.at("pencil").get<bool>(),
                                  d.at("members").get<std::size_t>()});
      }
      r.torsion_divisors = std::move(rows);
    }
    if (j.contains("curves")) {
      std::vector<CurveRow> rows;
      for (const auto& c : j.at("curves")) {
        rows.push_back(CurveRow{c.at("curve").get<std::string>(), c.at("branch").get<bool>(),
                                big_from(c.at("components")), big_from(c.at("genus")),
                                big_from(c.at("self_intersection"))});
      }
      r.curves = std::move(rows);
    }
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("report json: ") + e.what());
  }
}

}  // namespace covercalc::cli
