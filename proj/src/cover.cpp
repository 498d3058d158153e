#include "covercalc/cover.hpp"

#include "covercalc/errors.hpp"
#include "covercalc/linalg.hpp"

#include <sstream>

namespace covercalc::cover {

GroupElement::GroupElement(std::int64_t q, std::vector<std::int64_t> entries)
    : q_(q), entries_(std::move(entries)) {
  if (q_ < 2) throw Error(ErrorKind::ValidationError, "modulus must be at least 2");
  for (auto& e : entries_) e = linalg::reduce_mod(e, q_);
}

GroupElement GroupElement::zero(std::int64_t q, std::size_t k) {
  return GroupElement(q, std::vector<std::int64_t>(k, 0));
}

bool GroupElement::is_zero() const {
  for (auto e : entries_) {
    if (e != 0) return false;
  }
  return true;
}

GroupElement GroupElement::operator+(const GroupElement& other) const {
  if (q_ != other.q_ || entries_.size() != other.entries_.size()) {
    throw Error(ErrorKind::ValidationError, "group elements of different groups");
  }
  std::vector<std::int64_t> sum(entries_.size());
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = entries_[i] + other.entries_[i];
  return GroupElement(q_, std::move(sum));
}

GroupElement GroupElement::scaled(std::int64_t c) const {
  std::vector<std::int64_t> out(entries_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = linalg::mul_mod(entries_[i], c, q_);
  return GroupElement(q_, std::move(out));
}

std::string GroupElement::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out << ',';
    out << entries_[i];
  }
  out << ')';
  return out.str();
}

std::int64_t pairing(const GroupElement& a, const GroupElement& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    s = linalg::reduce_mod(s + linalg::mul_mod(a[i], b[i], a.modulus()), a.modulus());
  }
  return s;
}

std::size_t span_rank(const std::vector<GroupElement>& elements) {
  if (elements.empty()) return 0;
  linalg::ModMatrix m;
  for (const auto& e : elements) m.push_back(e.entries());
  return linalg::rank_mod(std::move(m), elements.front().modulus());
}

bool pair_independent(const GroupElement& a, const GroupElement& b) {
  return span_rank({a, b}) == 2;
}

void validate_cover_spec(const CoverSpec& spec) {
  if (spec.q < 2 || !linalg::is_prime(static_cast<std::uint64_t>(spec.q))) {
    throw Error(ErrorKind::ValidationError, "q = " + std::to_string(spec.q) + " is not prime");
  }
  if (spec.k < 2) throw Error(ErrorKind::ValidationError, "k must be at least 2");
  if (spec.phi.size() != spec.n()) {
    throw Error(ErrorKind::ValidationError, "expected " + std::to_string(spec.n()) +
                                                " character values, got " + std::to_string(spec.phi.size()));
  }
  GroupElement sum = GroupElement::zero(spec.q, spec.k);
  for (std::size_t i = 0; i < spec.phi.size(); ++i) {
    const auto& v = spec.phi[i];
    if (v.modulus() != spec.q || v.rank() != spec.k) {
      throw Error(ErrorKind::ValidationError, "line " + std::to_string(i + 1) + ": value not in (Z/" +
                                                  std::to_string(spec.q) + ")^" + std::to_string(spec.k));
    }
    if (v.is_zero()) {
      throw Error(ErrorKind::ValidationError, "line " + std::to_string(i + 1) + " has zero character");
    }
    sum = sum + v;
  }
  if (!sum.is_zero()) {
    throw Error(ErrorKind::ValidationError, "character values sum to " + sum.to_string() + ", not zero");
  }
  if (span_rank(spec.phi) != spec.k) {
    throw Error(ErrorKind::ValidationError, "character values do not generate the group");
  }
}

CoverSpec make_cover_spec(geometry::Arrangement arrangement, std::int64_t q, std::vector<GroupElement> phi) {
  const std::size_t k = phi.empty() ? 0 : phi.front().rank();
  CoverSpec spec{std::move(arrangement), q, k, std::move(phi)};
  validate_cover_spec(spec);
  return spec;
}

GroupElement epsilon(const std::vector<std::size_t>& incident_lines, const CoverSpec& spec) {
  GroupElement sum = GroupElement::zero(spec.q, spec.k);
  for (auto i : incident_lines) sum = sum + spec.phi.at(i);
  return sum;
}

std::string to_string(PointStatus status) {
  switch (status) {
    case PointStatus::NonBranch: return "non-branch";
    case PointStatus::BranchGood: return "branch";
    case PointStatus::Bad: return "bad";
  }
  return "?";
}

bool PointClassification::is_good() const {
  for (const auto& p : points) {
    if (p.status == PointStatus::Bad) return false;
  }
  return true;
}

void PointClassification::require_good(const CoverSpec& spec) const {
  for (const auto& p : points) {
    if (p.status != PointStatus::Bad) continue;
    std::ostringstream msg;
    msg << "point " << geometry::format_triple(p.point.point.coords()) << " on lines";
    for (auto i : p.point.lines) msg << ' ' << i + 1 << '=' << spec.phi[i].to_string();
    msg << " has epsilon " << p.epsilon.to_string() << " dependent on an incident character";
    throw Error(ErrorKind::BadPoint, msg.str());
  }
}

std::size_t PointClassification::t_nonbranch_of(std::size_t r) const {
  auto it = t_nonbranch.find(r);
  return it == t_nonbranch.end() ? 0 : it->second;
}

std::size_t PointClassification::t_branch_of(std::size_t r) const {
  auto it = t_branch.find(r);
  return it == t_branch.end() ? 0 : it->second;
}

PointClassification classify_points(const CoverSpec& spec, const geometry::IncidenceData& inc) {
  PointClassification cls;
  for (const auto& mp : inc.points) {
    GroupElement eps = epsilon(mp.lines, spec);
    PointStatus status = PointStatus::BranchGood;
    if (eps.is_zero()) {
      status = PointStatus::NonBranch;
    } else {
      for (auto i : mp.lines) {
        if (!pair_independent(eps, spec.phi[i])) {
          status = PointStatus::Bad;
          break;
        }
      }
    }
    const std::size_t r = mp.multiplicity();
    const bool blown = r >= 3 || status == PointStatus::NonBranch;
    if (status == PointStatus::NonBranch) {
      ++cls.t_nonbranch[r];
    } else if (status == PointStatus::BranchGood) {
      ++cls.t_branch[r];
    }
    if (blown) cls.blowup_set.push_back(cls.points.size());
    cls.points.push_back(ClassifiedPoint{mp, std::move(eps), status, blown});
  }
  return cls;
}

}  // namespace covercalc::cover
