#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

namespace zh {

/// A cyclic group generated by u: infinite when order == 0, otherwise Z/order.
/// Elements are exponents of u.
struct CyclicGroup {
  int order = 0;

  static CyclicGroup infinite() { return {0}; }
  static CyclicGroup finite(int m);

  int reduce(long e) const;
  int mul(int x, int y) const { return reduce(static_cast<long>(x) + y); }
  int inv(int x) const { return reduce(-static_cast<long>(x)); }

  friend bool operator==(const CyclicGroup&, const CyclicGroup&) = default;
};

/// Element of the integer group ring Z[<u>].
class GroupRingElement {
 public:
  explicit GroupRingElement(CyclicGroup g = CyclicGroup::infinite()) : group_(g) {}

  const CyclicGroup& group() const noexcept { return group_; }
  const std::map<int, std::int64_t>& terms() const noexcept { return terms_; }
  std::int64_t coefficient(int e) const;
  /// Sum of coefficients (the augmentation).
  std::int64_t augmentation() const;

  void add(int exponent, std::int64_t c);
  GroupRingElement& operator+=(const GroupRingElement& o);
  friend GroupRingElement operator*(const GroupRingElement& x, const GroupRingElement& y);
  friend bool operator==(const GroupRingElement& x, const GroupRingElement& y) {
    return x.group_ == y.group_ && x.terms_ == y.terms_;
  }

  /// "14 + 2u", "3 + u^-1 - 2u^2", "0".
  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  CyclicGroup group_;
  std::map<int, std::int64_t> terms_;
};

}  // namespace zh
