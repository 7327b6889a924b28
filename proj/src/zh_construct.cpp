#include "zh/zh_construct.hpp"

#include <algorithm>
#include <set>

namespace zh {

namespace {

struct Insert {
  int id;
  int sign;
};

}  // namespace

ZhDiagram zh_construct(const GaussCode& d, Orientation orientation, const std::vector<Side>& sides_in) {
  const int xc = d.crossing_count();
  std::vector<Side> sides = sides_in.empty() ? std::vector<Side>(xc, Side::Right) : sides_in;
  if (static_cast<int>(sides.size()) != xc) throw std::invalid_argument("one side per crossing is required");

  const int n = d.component_count();
  // before[c][p] / after[c][p]: omega passage flanking passage p of component c.
  std::vector<std::vector<std::vector<Insert>>> before(n), after(n);
  for (int c = 0; c < n; ++c) {
    before[c].resize(d.component(c).size());
    after[c].resize(d.component(c).size());
  }

  ZhDiagram z;
  z.base = d;
  z.orientation = orientation;
  z.sides = sides;
  const int flip = orientation == Orientation::Op ? -1 : 1;
  GaussCode::Component omega;
  int next_id = d.max_id() + 1;
  for (int xid : d.traversal_order()) {
    const CrossingInfo& x = d.crossing(xid);
    const bool right = sides[d.index_of(xid)] == Side::Right;
    // The in-end passage sits before one strand of the crossing, the out-end
    // passage after the other. Which strands depends on sign and side.
    const bool in_before_under = right == (x.sign > 0);
    const Slot in_slot = in_before_under ? x.under : x.over;
    const Slot out_slot = in_before_under ? x.over : x.under;
    const int in_sign = (right ? 1 : -1) * flip;
    const int out_sign = -in_sign;

    const int in_id = next_id++, out_id = next_id++;
    before[in_slot.comp][in_slot.pos].push_back({in_id, in_sign});
    after[out_slot.comp][out_slot.pos].push_back({out_id, out_sign});
    z.attachment[in_id] = {xid, in_before_under ? Role::Under : Role::Over, true};
    z.attachment[out_id] = {xid, in_before_under ? Role::Over : Role::Under, false};
    omega.push_back({in_id, Role::Over, in_sign});
    omega.push_back({out_id, Role::Over, out_sign});
  }
  if (orientation == Orientation::Op) std::reverse(omega.begin(), omega.end());

  std::vector<GaussCode::Component> comps;
  for (int c = 0; c < n; ++c) {
    const auto& src = d.component(c);
    const int k = static_cast<int>(src.size());
    GaussCode::Component out;
    for (int p = 0; p < k; ++p) {
      out.push_back(src[p]);
      for (const Insert& w : after[c][p]) out.push_back({w.id, Role::Under, w.sign});
      for (const Insert& w : before[c][(p + 1) % k]) out.push_back({w.id, Role::Under, w.sign});
    }
    comps.push_back(std::move(out));
  }
  z.omega = n;
  comps.push_back(std::move(omega));
  z.code = GaussCode(std::move(comps));
  return z;
}

GaussCode remove_component(const GaussCode& code, int comp) {
  if (comp < 0 || comp >= code.component_count()) throw std::out_of_range("no such component");
  std::set<int> doomed;
  for (const Passage& p : code.component(comp)) doomed.insert(p.crossing);
  std::vector<GaussCode::Component> comps;
  for (int c = 0; c < code.component_count(); ++c) {
    if (c == comp) continue;
    GaussCode::Component out;
    for (const Passage& p : code.component(c))
      if (!doomed.count(p.crossing)) out.push_back(p);
    comps.push_back(std::move(out));
  }
  return GaussCode(std::move(comps));
}

int vlk(const GaussCode& code, int i, int j) {
  if (i == j) throw SameComponent("vlk needs two distinct components");
  if (i < 0 || j < 0 || i >= code.component_count() || j >= code.component_count())
    throw std::out_of_range("no such component");
  int total = 0;
  for (const auto& x : code.crossings())
    if (x.over.comp == i && x.under.comp == j) total += x.sign;
  return total;
}

std::vector<std::vector<int>> zh_op_labels(const ZhDiagram& z) {
  if (z.orientation != Orientation::Op)
    throw std::invalid_argument("canonical sub-numbering exists for the Op orientation only");
  const GaussCode& code = z.code;
  std::vector<std::vector<int>> labels(code.component_count());
  for (int c = 0; c < code.component_count(); ++c) {
    if (c == z.omega) continue;
    const auto& comp = code.component(c);
    const int k = static_cast<int>(comp.size());
    labels[c].assign(std::max(k, 1), 1);
    for (int g = 0; g < k; ++g) {
      const Passage& a = comp[g];
      const Passage& b = comp[(g + 1) % k];
      // The gap is inner when it joins a base passage to the omega passage
      // attached to it on that side.
      auto attached = [&](const Passage& w, const Passage& base, bool before) {
        auto it = z.attachment.find(w.crossing);
        return it != z.attachment.end() && it->second.base_crossing == base.crossing &&
               it->second.role == base.role && it->second.before == before;
      };
      const Passage* base = nullptr;
      if (attached(b, a, false)) base = &a;
      if (attached(a, b, true)) base = &b;
      if (!base) continue;
      const int xi = z.base.index_of(base->crossing);
      labels[c][g] = z.sides[xi] == Side::Right ? 0 : 2;
    }
  }
  return labels;
}

nlohmann::json to_json(const ZhDiagram& z) {
  nlohmann::json sides = nlohmann::json::array();
  for (Side s : z.sides) sides.push_back(s == Side::Right ? "right" : "left");
  return {{"code", to_json(z.code)},
          {"omega", z.omega},
          {"orientation", z.orientation == Orientation::Op ? "op" : "standard"},
          {"sides", sides}};
}

}  // namespace zh
