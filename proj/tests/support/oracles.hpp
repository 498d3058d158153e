#pragma once

// Independent recomputations used as test oracles. Nothing here calls the
// closed-form routines it is meant to check.

#include "covercalc/cover.hpp"
#include "covercalc/geometry.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using covercalc::BigInt;
using covercalc::cover::CoverSpec;
using covercalc::cover::GroupElement;

inline BigInt det3(const covercalc::geometry::Triple& a, const covercalc::geometry::Triple& b,
                   const covercalc::geometry::Triple& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

// r -> number of r-fold points, from 3x3 determinants only.
inline std::map<std::size_t, std::size_t> census(const covercalc::geometry::Arrangement& arr) {
  const std::size_t n = arr.size();
  std::map<std::size_t, std::size_t> pairs_at;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::size_t r = 2;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (det3(arr.line(i).coeffs(), arr.line(j).coeffs(), arr.line(k).coeffs()) == 0) ++r;
      }
      ++pairs_at[r];
    }
  }
  std::map<std::size_t, std::size_t> out;
  for (auto [r, pairs] : pairs_at) out[r] = pairs / (r * (r - 1) / 2);
  return out;
}

struct Stratum {
  std::vector<std::size_t> lines;
  bool branch;
};

// Multiple points rebuilt from scratch: lines i < j with no earlier line
// through their meet, plus every other line through it.
inline std::vector<Stratum> strata(const CoverSpec& spec) {
  const auto& arr = spec.arrangement;
  const std::size_t n = arr.size();
  std::vector<Stratum> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<std::size_t> through{i, j};
      bool first = true;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (det3(arr.line(i).coeffs(), arr.line(j).coeffs(), arr.line(k).coeffs()) != 0) continue;
        if (k < j) {
          first = false;
          break;
        }
        through.push_back(k);
      }
      if (!first) continue;
      std::vector<std::int64_t> sum(spec.k, 0);
      for (auto l : through) {
        for (std::size_t c = 0; c < spec.k; ++c) sum[c] = (sum[c] + spec.phi[l][c]) % spec.q;
      }
      bool zero = true;
      for (auto v : sum) zero = zero && v == 0;
      out.push_back(Stratum{through, !zero});
    }
  }
  return out;
}

// K^2 as q^{k-2} D_K^2, D_K written down directly on the blown-up plane.
inline BigInt k2_lattice(const CoverSpec& spec) {
  const BigInt q = spec.q;
  const BigInt n = static_cast<std::uint64_t>(spec.n());
  BigInt square = (q * n - n - 3 * q) * (q * n - n - 3 * q);
  for (const auto& s : strata(spec)) {
    const BigInt r = static_cast<std::uint64_t>(s.lines.size());
    if (!s.branch) {
      square -= (r * q - q - r) * (r * q - q - r);
    } else if (s.lines.size() >= 3) {
      square -= (r * q - 2 * q - r + 1) * (r * q - 2 * q - r + 1);
    }
  }
  BigInt scale = 1;
  for (std::size_t i = 2; i < spec.k; ++i) scale *= q;
  return scale * square;
}

// e(X) by additivity over the strata of the branch locus on the blown-up
// plane: e(X) = |G| e(Y) - (|G| - |G|/q) e(B) - (|G|/q - |G|/q^2) e(Sing B).
inline BigInt euler_strata(const CoverSpec& spec) {
  const BigInt q = spec.q;
  std::size_t blown = 0, sing = 0, extra_components = 0;
  for (const auto& s : strata(spec)) {
    const bool is_blown = s.lines.size() >= 3 || !s.branch;
    if (is_blown) ++blown;
    if (s.branch) {
      if (is_blown) {
        ++extra_components;
        sing += s.lines.size();
      } else {
        sing += 1;
      }
    }
  }
  const BigInt e_plane = 3 + static_cast<std::uint64_t>(blown);
  const BigInt components = static_cast<std::uint64_t>(spec.n() + extra_components);
  const BigInt e_branch = 2 * components - static_cast<std::uint64_t>(sing);
  BigInt scale = 1;
  for (std::size_t i = 2; i < spec.k; ++i) scale *= q;
  return scale * (q * q * e_plane - (q * q - q) * e_branch - (q - 1) * static_cast<std::uint64_t>(sing));
}

// Random arrangement with small coefficients and random character values
// summing to zero; the caller filters for validity and goodness.
struct RandomSpecSource {
  std::mt19937_64 rng;
  explicit RandomSpecSource(std::uint64_t seed) : rng(seed) {}

  std::int64_t pick(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  }

  // Throws covercalc::Error when the draw is not a valid cover.
  CoverSpec draw() {
    static const std::int64_t primes[] = {2, 3, 5, 7};
    const std::int64_t q = primes[pick(0, 3)];
    const std::size_t k = static_cast<std::size_t>(pick(2, 3));
    const std::size_t n = static_cast<std::size_t>(pick(static_cast<std::int64_t>(k) + 1, 9));
    std::vector<covercalc::geometry::ProjLine> lines;
    // Concurrent lines are more likely with a few coordinate lines mixed in.
    while (lines.size() < n) {
      const covercalc::geometry::ProjLine l(pick(-3, 3), pick(-3, 3), pick(-3, 3));
      bool fresh = true;
      for (const auto& m : lines) fresh = fresh && !(m == l);
      if (fresh) lines.push_back(l);
    }
    std::vector<GroupElement> phi;
    std::vector<std::int64_t> sum(k, 0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      std::vector<std::int64_t> v(k);
      for (auto& x : v) x = pick(0, q - 1);
      for (std::size_t c = 0; c < k; ++c) sum[c] += v[c];
      phi.emplace_back(q, v);
    }
    std::vector<std::int64_t> last(k);
    for (std::size_t c = 0; c < k; ++c) last[c] = ((-sum[c]) % q + q) % q;
    phi.emplace_back(q, last);
    return covercalc::cover::make_cover_spec(covercalc::geometry::Arrangement(std::move(lines)), q, std::move(phi));
  }
};

}  // namespace oracle
