#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace zh {

class NonPrimeModulus : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense rows x cols matrix of residues mod n.
class ModMatrix {
 public:
  ModMatrix(int rows, int cols, std::int64_t modulus);
  ModMatrix(std::vector<std::vector<std::int64_t>> entries, int cols, std::int64_t modulus);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  std::int64_t modulus() const noexcept { return n_; }

  std::int64_t at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  void set(int r, int c, std::int64_t v);
  /// Adds v (reduced) to entry (r, c).
  void add(int r, int c, std::int64_t v);

  std::vector<std::int64_t> row(int r) const;
  /// Same entries, reduced modulo a different modulus.
  ModMatrix with_modulus(std::int64_t m) const;

 private:
  int rows_, cols_;
  std::int64_t n_;
  std::vector<std::int64_t> data_;
};

bool is_prime(std::int64_t n);

/// Dimension of the right kernel over the field Z/p.
int nullity_mod_prime(const ModMatrix& m, std::int64_t p);

/// Number of x in (Z/n)^cols with M x = 0 (mod n).
std::uint64_t solution_count_mod_n(const ModMatrix& m, std::int64_t n);

}  // namespace zh
