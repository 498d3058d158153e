#pragma once

#include "covercalc/bigint.hpp"
#include "covercalc/config.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace covercalc::cli {

struct LineRow {
  std::vector<BigInt> coeffs;
  std::vector<std::int64_t> phi;
  bool operator==(const LineRow&) const = default;
};

struct PointRow {
  std::vector<BigInt> coords;
  std::vector<std::size_t> lines;  // 1-based
  std::vector<std::int64_t> epsilon;
  std::string status;
  bool blown_up = false;
  bool operator==(const PointRow&) const = default;
};

struct QuotientRow {
  std::vector<std::int64_t> character;
  std::vector<std::int64_t> multiplicities;  // per line, 0 where dropped
  std::int64_t pg = 0;
  bool exact = true;
  bool operator==(const QuotientRow&) const = default;
};

struct MinimalityRow {
  std::string curve;
  BigInt product;
  std::string verdict;
  bool operator==(const MinimalityRow&) const = default;
};

struct CurveRow {
  std::string curve;
  bool branch = false;
  BigInt components;
  BigInt genus;
  BigInt self_intersection;
  bool operator==(const CurveRow&) const = default;
};

struct TorsionRow {
  std::int64_t q = 0;
  std::size_t exponent = 0;
  bool valid = false;
  bool operator==(const TorsionRow&) const = default;
};

struct DivisorRow {
  std::string divisor;
  bool pencil = false;
  std::size_t members = 1;
  bool operator==(const DivisorRow&) const = default;
};

struct UniversalReport {
  std::size_t k = 0;
  std::vector<std::vector<std::int64_t>> phi;
  BigInt k2;
  BigInt euler;
  BigInt chi;
  std::int64_t pg = 0;
  bool pg_exact = true;
  BigInt irregularity;
  bool irregularity_exact = true;
  bool operator==(const UniversalReport&) const = default;
};

struct Report {
  std::string source;  // preset name, or "config"
  std::int64_t q = 0;
  std::size_t k = 0;
  std::vector<LineRow> lines;
  std::vector<PointRow> points;
  BigInt k2;
  BigInt euler;
  BigInt chi;
  std::int64_t pg = 0;
  bool pg_exact = true;
  BigInt irregularity;
  bool irregularity_exact = true;
  std::size_t k_phi = 0;
  TorsionRow torsion;
  BigInt canonical_l;
  std::vector<BigInt> canonical_e;  // per blown-up point, in point order
  std::vector<QuotientRow> quotients;
  std::vector<MinimalityRow> minimality;
  std::optional<UniversalReport> universal;
  std::optional<std::vector<DivisorRow>> torsion_divisors;
  std::optional<std::vector<CurveRow>> curves;
  std::vector<std::string> warnings;

  bool operator==(const Report&) const = default;
};

/// Runs the whole pipeline. Bad points abort with ErrorKind::BadPoint.
Report analyze(const CoverConfig& config, unsigned threads = 1);

enum class Format { Text, Json };

std::string emit_report(const Report& report, Format format);

/// Inverse of emit_report(..., Format::Json).
Report report_from_json(std::string_view text);

}  // namespace covercalc::cli
