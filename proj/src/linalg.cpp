#include "covercalc/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace covercalc {

std::int64_t to_int64(const BigInt& v) {
  if (v > BigInt(INT64_MAX) || v < BigInt(INT64_MIN)) {
    throw std::overflow_error("integer " + v.str() + " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace covercalc

namespace covercalc::linalg {

namespace {

std::uint64_t mul_mod_u(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod_u(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod_u(result, base, m);
    base = mul_mod_u(base, base, m);
    exp >>= 1U;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // Deterministic witness set for all 64-bit inputs.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod_u(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod_u(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::int64_t reduce_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(mul_mod_u(static_cast<std::uint64_t>(reduce_mod(a, p)),
                                             static_cast<std::uint64_t>(reduce_mod(b, p)),
                                             static_cast<std::uint64_t>(p)));
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  a = reduce_mod(a, p);
  if (a == 0) throw std::domain_error("inverse of zero");
  // p is prime: Fermat.
  return static_cast<std::int64_t>(pow_mod_u(static_cast<std::uint64_t>(a),
                                             static_cast<std::uint64_t>(p - 2),
                                             static_cast<std::uint64_t>(p)));
}

std::vector<std::size_t> rref_mod(ModMatrix& m, std::int64_t p) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  for (auto& row : m) {
    for (auto& v : row) v = reduce_mod(v, p);
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    const std::int64_t inv = inverse_mod(m[r][c], p);
    for (auto& v : m[r]) v = mul_mod(v, inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const std::int64_t f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        m[i][j] = reduce_mod(m[i][j] - mul_mod(f, m[r][j], p), p);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank_mod(ModMatrix m, std::int64_t p) { return rref_mod(m, p).size(); }

ModMatrix null_space_mod(ModMatrix m, std::size_t cols, std::int64_t p) {
  std::vector<std::size_t> pivots = rref_mod(m, p);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  ModMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    ModRow v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = reduce_mod(-m[i][free], p);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank_exact(IntMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    const BigInt a = m[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const BigInt b = m[i][c];
      BigInt content = 0;
      for (std::size_t j = c; j < cols; ++j) {
        m[i][j] = a * m[i][j] - b * m[r][j];
        if (m[i][j] != 0) content = gcd_big(content, m[i][j]);
      }
      if (content > 1) {
        for (std::size_t j = c; j < cols; ++j) m[i][j] /= content;
      }
    }
    ++r;
  }
  return r;
}

std::size_t rank_mod_prime(const IntMatrix& m, std::uint64_t p) {
  if (p >= (1ULL << 63)) throw std::invalid_argument("modulus too large");
  const auto pp = static_cast<std::int64_t>(p);
  ModMatrix reduced;
  reduced.reserve(m.size());
  const BigInt big_p = BigInt(p);
  for (const auto& row : m) {
    ModRow out;
    out.reserve(row.size());
    for (const auto& v : row) {
      BigInt r = v % big_p;
      if (r < 0) r += big_p;
      out.push_back(static_cast<std::int64_t>(r));
    }
    reduced.push_back(std::move(out));
  }
  return rank_mod(std::move(reduced), pp);
}

}  // namespace covercalc::linalg
