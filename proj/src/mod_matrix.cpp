#include "zh/mod_matrix.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

namespace zh {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  a %= n;
  return a < 0 ? a + n : a;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t n) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % n);
}

// Inverse of a unit mod n.
std::int64_t inverse(std::int64_t a, std::int64_t n) {
  std::int64_t t = 0, new_t = 1, r = n, new_r = mod(a, n);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::invalid_argument("not a unit");
  return mod(t, n);
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b)
    throw std::overflow_error("solution count exceeds 64 bits");
  return a * b;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r = checked_mul(r, b);
  return r;
}

// p-adic valuation of a nonzero residue mod p^k (k when a == 0).
int valuation(std::int64_t a, std::int64_t p, int k) {
  if (a == 0) return k;
  int v = 0;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  return v;
}

// Solutions of M x = 0 over Z/p^k by diagonalising with minimal-valuation
// pivots; every pivot is p^v times a unit.
std::uint64_t count_prime_power(ModMatrix m, std::int64_t p, int k) {
  const std::int64_t q = m.modulus();
  const int rows = m.rows(), cols = m.cols();
  std::uint64_t count = 1;
  int r = 0;
  std::vector<int> col_perm(cols);
  std::iota(col_perm.begin(), col_perm.end(), 0);
  auto at = [&](int i, int j) { return m.at(i, j); };
  for (; r < std::min(rows, cols); ++r) {
    int best_i = -1, best_j = -1, best_v = k;
    for (int i = r; i < rows && best_v > 0; ++i)
      for (int j = r; j < cols; ++j) {
        int v = valuation(at(i, j), p, k);
        if (v < best_v) {
          best_v = v;
          best_i = i;
          best_j = j;
          if (v == 0) break;
        }
      }
    if (best_i < 0) break;
    if (best_i != r)
      for (int j = 0; j < cols; ++j) {
        std::int64_t t = at(r, j);
        m.set(r, j, at(best_i, j));
        m.set(best_i, j, t);
      }
    if (best_j != r)
      for (int i = 0; i < rows; ++i) {
        std::int64_t t = at(i, r);
        m.set(i, r, at(i, best_j));
        m.set(i, best_j, t);
      }
    std::int64_t pivot = at(r, r);
    std::int64_t pv = 1;
    for (int t = 0; t < best_v; ++t) pv *= p;
    std::int64_t unit_inv = inverse(pivot / pv, q);
    for (int i = 0; i < rows; ++i) {
      if (i == r || at(i, r) == 0) continue;
      std::int64_t f = mulmod(at(i, r) / pv, unit_inv, q);
      for (int j = r; j < cols; ++j) m.set(i, j, mod(at(i, j) - mulmod(f, at(r, j), q), q));
    }
    for (int j = r + 1; j < cols; ++j) {
      if (at(r, j) == 0) continue;
      std::int64_t f = mulmod(at(r, j) / pv, unit_inv, q);
      for (int i = r; i < rows; ++i) m.set(i, j, mod(at(i, j) - mulmod(f, at(i, r), q), q));
    }
    count = checked_mul(count, ipow(static_cast<std::uint64_t>(p), best_v));
  }
  return checked_mul(count, ipow(static_cast<std::uint64_t>(q), cols - r));
}

}  // namespace

ModMatrix::ModMatrix(int rows, int cols, std::int64_t modulus)
    : rows_(rows), cols_(cols), n_(modulus), data_(static_cast<std::size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
}

ModMatrix::ModMatrix(std::vector<std::vector<std::int64_t>> entries, int cols, std::int64_t modulus)
    : ModMatrix(static_cast<int>(entries.size()), cols, modulus) {
  for (int r = 0; r < rows_; ++r) {
    if (static_cast<int>(entries[r].size()) != cols) throw std::invalid_argument("ragged matrix rows");
    for (int c = 0; c < cols; ++c) set(r, c, entries[r][c]);
  }
}

void ModMatrix::set(int r, int c, std::int64_t v) { data_.at(static_cast<std::size_t>(r) * cols_ + c) = mod(v, n_); }

void ModMatrix::add(int r, int c, std::int64_t v) { set(r, c, at(r, c) + mod(v, n_)); }

std::vector<std::int64_t> ModMatrix::row(int r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r) * cols_, data_.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols_};
}

ModMatrix ModMatrix::with_modulus(std::int64_t m) const {
  ModMatrix out(rows_, cols_, m);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.set(r, c, at(r, c));
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int nullity_mod_prime(const ModMatrix& m, std::int64_t p) {
  if (!is_prime(p)) throw NonPrimeModulus("modulus " + std::to_string(p) + " is not prime");
  ModMatrix a = m.with_modulus(p);
  int rank = 0;
  for (int c = 0; c < a.cols() && rank < a.rows(); ++c) {
    int pivot = -1;
    for (int r = rank; r < a.rows(); ++r)
      if (a.at(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (int j = 0; j < a.cols(); ++j) {
      std::int64_t t = a.at(rank, j);
      a.set(rank, j, a.at(pivot, j));
      a.set(pivot, j, t);
    }
    std::int64_t inv = inverse(a.at(rank, c), p);
    for (int r = 0; r < a.rows(); ++r) {
      if (r == rank || a.at(r, c) == 0) continue;
      std::int64_t f = mulmod(a.at(r, c), inv, p);
      for (int j = c; j < a.cols(); ++j) a.set(r, j, a.at(r, j) - mulmod(f, a.at(rank, j), p));
    }
    ++rank;
  }
  return a.cols() - rank;
}

std::uint64_t solution_count_mod_n(const ModMatrix& m, std::int64_t n) {
  if (n < 2) throw std::invalid_argument("modulus must be at least 2");
  std::uint64_t total = 1;
  std::int64_t rest = n;
  for (std::int64_t p = 2; p * p <= rest || rest > 1; ++p) {
    if (p * p > rest) p = rest;
    if (rest % p != 0) continue;
    int k = 0;
    std::int64_t q = 1;
    while (rest % p == 0) {
      rest /= p;
      q *= p;
      ++k;
    }
    total = checked_mul(total, count_prime_power(m.with_modulus(q), p, k));
  }
  return total;
}

}  // namespace zh
