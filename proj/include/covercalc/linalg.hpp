#pragma once

#include "covercalc/bigint.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

// Exact linear algebra: dense matrices over GF(p) and over the integers.
namespace covercalc::linalg {

using ModRow = std::vector<std::int64_t>;
using ModMatrix = std::vector<ModRow>;
using IntMatrix = std::vector<std::vector<BigInt>>;

bool is_prime(std::uint64_t n);

std::int64_t reduce_mod(std::int64_t a, std::int64_t p);
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p);
std::int64_t inverse_mod(std::int64_t a, std::int64_t p);

/// Reduced row echelon form over GF(p), in place. Returns the pivot columns.
/// Entries may be arbitrary integers on input; they are reduced first.
std::vector<std::size_t> rref_mod(ModMatrix& m, std::int64_t p);

std::size_t rank_mod(ModMatrix m, std::int64_t p);

/// Basis (as rows) of {x in GF(p)^cols : m x = 0}. One vector per free column,
/// with a 1 in that column; the list is ordered by free column.
ModMatrix null_space_mod(ModMatrix m, std::size_t cols, std::int64_t p);

/// Rank over Q by fraction-free elimination; each updated row is divided by
/// its content so entries stay small.
std::size_t rank_exact(IntMatrix m);

/// Rank of the reduction of an integer matrix modulo a prime p < 2^63.
std::size_t rank_mod_prime(const IntMatrix& m, std::uint64_t p);

}  // namespace covercalc::linalg
