#pragma once

#include "covercalc/cover.hpp"
#include "covercalc/errors.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace covercalc::cli {

struct LineEntry {
  geometry::Triple coeffs;
  std::vector<std::int64_t> phi;
};

/// Parsed analysis request: a catalog preset or an explicit cover, plus the
/// optional passes to run.
struct CoverConfig {
  std::optional<std::string> preset;
  std::int64_t q = 0;
  std::size_t k = 0;
  std::vector<LineEntry> lines;
  bool universal = false;
  bool torsion_divisors = false;
  bool curves = false;

  /// Builds and validates the cover. Presets resolve through the catalog.
  cover::CoverSpec cover_spec() const;
};

/// Grammar (a TOML subset):
///   top level   key = value       keys: preset, q, k, universal,
///                                 torsion_divisors, curves
///   [[line]]    coeffs = [a0, a1, a2]
///               phi = [x1, ..., xk]
///   # starts a comment; strings are double quoted; booleans true/false.
/// Syntax problems raise ErrorKind::ParseError with a line number; semantic
/// ones (unknown key, bad cover) raise ErrorKind::ValidationError.
CoverConfig parse_config(std::string_view text);

/// Config text that parses back to the given cover.
std::string emit_config(const cover::CoverSpec& spec, std::string_view comment = {});

/// CLI exit status for a library error.
int exit_code(ErrorKind kind);

}  // namespace covercalc::cli
