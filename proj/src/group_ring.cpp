#include "zh/group_ring.hpp"

#include <cstdlib>
#include <stdexcept>

namespace zh {

CyclicGroup CyclicGroup::finite(int m) {
  if (m < 1) throw std::invalid_argument("cyclic group order must be positive");
  return {m};
}

int CyclicGroup::reduce(long e) const {
  if (order == 0) return static_cast<int>(e);
  long r = e % order;
  return static_cast<int>(r < 0 ? r + order : r);
}

std::int64_t GroupRingElement::coefficient(int e) const {
  auto it = terms_.find(group_.reduce(e));
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t GroupRingElement::augmentation() const {
  std::int64_t s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

void GroupRingElement::add(int exponent, std::int64_t c) {
  if (c == 0) return;
  int e = group_.reduce(exponent);
  auto& slot = terms_[e];
  slot += c;
  if (slot == 0) terms_.erase(e);
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  if (!(o.group_ == group_)) throw std::invalid_argument("group ring elements over different groups");
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

GroupRingElement operator*(const GroupRingElement& x, const GroupRingElement& y) {
  if (!(x.group_ == y.group_)) throw std::invalid_argument("group ring elements over different groups");
  GroupRingElement r(x.group_);
  for (const auto& [e1, c1] : x.terms_)
    for (const auto& [e2, c2] : y.terms_) r.add(x.group_.mul(e1, e2), c1 * c2);
  return r;
}

std::string GroupRingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::int64_t mag = std::llabs(c);
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += 'u';
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

nlohmann::json GroupRingElement::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : terms_) terms.push_back({{"exponent", e}, {"coeff", c}});
  return {{"group_order", group_.order}, {"terms", terms}, {"text", to_string()}};
}

}  // namespace zh
