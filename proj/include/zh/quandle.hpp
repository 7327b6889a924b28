#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "zh/group_ring.hpp"

namespace zh {

class AxiomViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// x * y = a*x + b*y (mod n), for quandles given by an affine formula.
struct LinearForm {
  std::int64_t a = 1;
  std::int64_t b = 0;
};

/// A finite quandle on {0, ..., n-1}; the constructor validates all three
/// axioms: x*x = x, each right translation is a bijection, and
/// (x*y)*z = (x*z)*(y*z).
class FiniteQuandle {
 public:
  FiniteQuandle(int n, std::vector<int> table, std::string name = "custom",
                std::optional<LinearForm> linear = std::nullopt);

  int size() const noexcept { return n_; }
  const std::string& name() const noexcept { return name_; }
  int op(int x, int y) const { return table_[static_cast<std::size_t>(x) * n_ + y]; }
  /// The unique z with z * y = x.
  int right_div(int x, int y) const { return div_[static_cast<std::size_t>(x) * n_ + y]; }
  const std::vector<int>& table() const noexcept { return table_; }
  const std::optional<LinearForm>& linear() const noexcept { return linear_; }

  nlohmann::json to_json() const;
  std::string to_csv() const;

 private:
  int n_;
  std::vector<int> table_, div_;
  std::string name_;
  std::optional<LinearForm> linear_;
};

/// First violated axiom, described with its witness; empty when the table is
/// a quandle.
std::optional<std::string> quandle_axiom_violation(int n, const std::vector<int>& table);

FiniteQuandle make_dihedral(int n);
FiniteQuandle make_alexander(int n, int t);
FiniteQuandle make_trivial(int n);

/// X plus one element v with x*v = x, v*x = v and v*v = v.
FiniteQuandle adjoin_v(const FiniteQuandle& x);

/// "trivial:3", "dihedral:4", "alexander:7:3".
FiniteQuandle quandle_from_spec(const std::string& spec);

/// Every built-in quandle with at most max_size elements.
std::vector<FiniteQuandle> builtin_quandles(int max_size);

class CocycleViolation : public std::invalid_argument {
 public:
  CocycleViolation(const std::string& what, std::array<int, 3> witness)
      : std::invalid_argument(what), witness_(witness) {}
  const std::array<int, 3>& witness() const noexcept { return witness_; }

 private:
  std::array<int, 3> witness_;
};

using InvalidCocycle = CocycleViolation;

/// A map X x X -> <u>, stored as exponents of u.
struct TwoCocycle {
  CyclicGroup group;
  int n = 0;
  std::vector<int> exponent;  // n * n

  int at(int x, int y) const { return exponent[static_cast<std::size_t>(x) * n + y]; }
  static TwoCocycle trivial(int n, CyclicGroup g = CyclicGroup::infinite());
};

struct CocycleCheck {
  bool ok = true;
  std::string reason;
  std::array<int, 3> witness{};  // (x, y, z); z unused for phi(x,x) failures

  explicit operator bool() const noexcept { return ok; }
};

CocycleCheck check_cocycle(const FiniteQuandle& x, const TwoCocycle& phi);
/// Throws CocycleViolation when check_cocycle fails.
void require_cocycle(const FiniteQuandle& x, const TwoCocycle& phi);

/// phi(x,y) = u for (x,y) in {(0,1), (0,3)} and 1 otherwise, on dihedral(4).
TwoCocycle cjkls_cocycle();

}  // namespace zh
