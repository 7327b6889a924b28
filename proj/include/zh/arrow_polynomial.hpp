#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace zh {

/// A monomial A^a * K_{i1}^{e1} * K_{i2}^{e2} ... with indices >= 1,
/// sorted, exponents > 0. K_0 = 1 is never stored.
struct Monomial {
  int a = 0;
  std::vector<std::pair<int, int>> k;

  /// Weighted K-degree: sum of index * exponent.
  int k_degree() const noexcept;
  bool k_free() const noexcept { return k.empty(); }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Printing order: descending A-degree, then lexicographic K part.
struct MonomialOrder {
  bool operator()(const Monomial& x, const Monomial& y) const noexcept {
    if (x.a != y.a) return x.a > y.a;
    return x.k < y.k;
  }
};

/// Element of Z[A^{+-1}, K1, K2, ...]. Exact integer coefficients; zero
/// terms are never stored.
class ArrowPolynomial {
 public:
  using Terms = std::map<Monomial, std::int64_t, MonomialOrder>;

  ArrowPolynomial() = default;
  static ArrowPolynomial constant(std::int64_t c);
  /// c * A^a
  static ArrowPolynomial a_power(int a, std::int64_t c = 1);
  /// K_index (K_0 is the constant 1).
  static ArrowPolynomial k_var(int index);
  /// -A^2 - A^-2, the value of a free loop.
  static ArrowPolynomial loop_value();

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool k_free() const noexcept;

  void add_term(const Monomial& m, std::int64_t c);

  ArrowPolynomial& operator+=(const ArrowPolynomial& o);
  ArrowPolynomial& operator-=(const ArrowPolynomial& o);
  ArrowPolynomial& operator*=(const ArrowPolynomial& o) { return *this = *this * o; }
  friend ArrowPolynomial operator+(ArrowPolynomial p, const ArrowPolynomial& q) { return p += q; }
  friend ArrowPolynomial operator-(ArrowPolynomial p, const ArrowPolynomial& q) { return p -= q; }
  friend ArrowPolynomial operator*(const ArrowPolynomial& p, const ArrowPolynomial& q);
  friend bool operator==(const ArrowPolynomial& p, const ArrowPolynomial& q) { return p.terms_ == q.terms_; }

  ArrowPolynomial scaled(std::int64_t c) const;
  /// Multiply by A^shift.
  ArrowPolynomial shifted(int shift) const;
  /// Substitute A -> A^-1.
  ArrowPolynomial inverted_a() const;

  /// e.g. "A^2 + K1 - A^-4*K1"; `letter` names the K/Z variables.
  std::string to_string(char letter = 'K') const;
  nlohmann::json to_json() const;

 private:
  Terms terms_;
};

ArrowPolynomial poly_add(const ArrowPolynomial& p, const ArrowPolynomial& q);
ArrowPolynomial poly_mul(const ArrowPolynomial& p, const ArrowPolynomial& q);
ArrowPolynomial poly_scale(const ArrowPolynomial& p, std::int64_t c);

/// (-A)^(-3w) * p
ArrowPolynomial normalize(const ArrowPolynomial& p, int w);

/// Inverse of to_string. Accepts K or Z variables, '*' optional between
/// factors, and whitespace.
ArrowPolynomial parse_arrow_polynomial(std::string_view text);

}  // namespace zh
