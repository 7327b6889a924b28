#include "zh/alexander.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "zh/moves.hpp"

namespace zh {

namespace {

int wrap(int i, int k) { return ((i % k) + k) % k; }

// Flat numbering of the short arcs of every component.
struct GapIndex {
  std::vector<int> offset;
  int total = 0;

  explicit GapIndex(const GaussCode& d) {
    for (const auto& comp : d.components()) {
      offset.push_back(total);
      total += std::max<int>(1, static_cast<int>(comp.size()));
    }
  }
  int id(const GaussCode& d, int c, int g) const {
    int k = std::max<int>(1, static_cast<int>(d.component(c).size()));
    return offset[c] + wrap(g, k);
  }
};

// Union-find over integer potentials: pot[v] = L(v) - L(find(v)).
class PotentialForest {
 public:
  explicit PotentialForest(int n) : parent_(n), pot_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int v) {
    if (parent_[v] == v) return v;
    int root = find(parent_[v]);
    pot_[v] += pot_[parent_[v]];
    parent_[v] = root;
    return root;
  }
  long potential(int v) {
    find(v);
    return pot_[v];
  }
  // Requires L(b) - L(a) = delta. Returns false on a contradiction.
  bool relate(int a, int b, long delta) {
    int ra = find(a), rb = find(b);
    long pa = pot_[a], pb = pot_[b];
    if (ra == rb) return pb - pa == delta;
    // L(rb) - L(ra) = pa + delta - pb
    parent_[rb] = ra;
    pot_[rb] = pa + delta - pb;
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<long> pot_;
};

struct CrossingArcs {
  int over_in, over_out, under_in, under_out;
};

CrossingArcs arcs_at(const GaussCode& d, const GapIndex& gi, const CrossingInfo& x) {
  return {gi.id(d, x.over.comp, x.over.pos - 1), gi.id(d, x.over.comp, x.over.pos),
          gi.id(d, x.under.comp, x.under.pos - 1), gi.id(d, x.under.comp, x.under.pos)};
}

int label_at(const Labels& labels, int c, int g) {
  int k = static_cast<int>(labels[c].size());
  return labels[c][wrap(g, k)];
}

std::string xname(int id) { return "crossing " + std::to_string(id); }

}  // namespace

std::optional<AlexanderNumbering> solve_alexander_numbering(const GaussCode& d) {
  GapIndex gi(d);
  PotentialForest f(gi.total);
  for (const auto& x : d.crossings()) {
    CrossingArcs a = arcs_at(d, gi, x);
    if (!f.relate(a.over_in, a.over_out, -x.sign)) return std::nullopt;
    if (!f.relate(a.under_in, a.under_out, x.sign)) return std::nullopt;
    if (!f.relate(a.under_in, a.over_out, 0)) return std::nullopt;
  }
  std::map<int, long> lowest;
  for (int v = 0; v < gi.total; ++v) {
    int r = f.find(v);
    long p = f.potential(v);
    auto [it, inserted] = lowest.try_emplace(r, p);
    if (!inserted) it->second = std::min(it->second, p);
  }
  std::map<int, int> class_id;
  for (const auto& [r, _] : lowest) class_id.emplace(r, static_cast<int>(class_id.size()));
  AlexanderNumbering out;
  out.labels.resize(d.component_count());
  out.cls.resize(d.component_count());
  for (int c = 0; c < d.component_count(); ++c) {
    int k = std::max<int>(1, static_cast<int>(d.component(c).size()));
    for (int g = 0; g < k; ++g) {
      int v = gi.id(d, c, g);
      int r = f.find(v);
      out.labels[c].push_back(static_cast<int>(f.potential(v) - lowest[r]));
      out.cls[c].push_back(class_id[r]);
    }
  }
  return out;
}

bool is_alexander_numerable(const GaussCode& d) { return solve_alexander_numbering(d).has_value(); }

bool is_alexander_numbering(const GaussCode& d, const Labels& labels) {
  if (static_cast<int>(labels.size()) != d.component_count()) return false;
  for (int c = 0; c < d.component_count(); ++c)
    if (static_cast<int>(labels[c].size()) != std::max<int>(1, static_cast<int>(d.component(c).size()))) return false;
  for (const auto& x : d.crossings()) {
    int oi = label_at(labels, x.over.comp, x.over.pos - 1), oo = label_at(labels, x.over.comp, x.over.pos);
    int ui = label_at(labels, x.under.comp, x.under.pos - 1), uo = label_at(labels, x.under.comp, x.under.pos);
    if (uo != oi || oo != oi - x.sign || ui != oo) return false;
  }
  return true;
}

SystemCheck verify_alexander_system(const AlexanderSystem& s) {
  SystemCheck r;
  auto fail = [&](const std::string& why) {
    r.ok = false;
    r.violations.push_back(why);
  };
  const GaussCode& d = s.code;
  if (s.gamma < 0 || s.gamma >= d.component_count()) {
    fail("gamma is not a component");
    return r;
  }
  if (static_cast<int>(s.labels.size()) != d.component_count()) {
    fail("label table has the wrong number of components");
    return r;
  }
  for (int c = 0; c < d.component_count(); ++c) {
    std::size_t want = c == s.gamma ? 0 : std::max<std::size_t>(1, d.component(c).size());
    if (s.labels[c].size() != want) {
      fail("component " + std::to_string(c) + " has the wrong number of labels");
      return r;
    }
  }
  for (const auto& x : d.crossings()) {
    bool over_gamma = x.over.comp == s.gamma, under_gamma = x.under.comp == s.gamma;
    if (over_gamma && under_gamma) {
      fail(xname(x.id) + ": gamma crosses itself");
    } else if (under_gamma) {
      fail(xname(x.id) + ": gamma passes under the base");
    } else if (over_gamma) {
      int before = label_at(s.labels, x.under.comp, x.under.pos - 1);
      int after = label_at(s.labels, x.under.comp, x.under.pos);
      if (after - before != x.sign)
        fail(xname(x.id) + ": label changes by " + std::to_string(after - before) + " under a gamma crossing of sign " +
             std::to_string(x.sign));
    } else {
      int oi = label_at(s.labels, x.over.comp, x.over.pos - 1), oo = label_at(s.labels, x.over.comp, x.over.pos);
      int ui = label_at(s.labels, x.under.comp, x.under.pos - 1), uo = label_at(s.labels, x.under.comp, x.under.pos);
      if (uo != oi || oo != oi - x.sign || ui != oo)
        fail(xname(x.id) + ": labels (over in/out " + std::to_string(oi) + "/" + std::to_string(oo) +
             ", under in/out " + std::to_string(ui) + "/" + std::to_string(uo) + ") break the crossing rule");
    }
  }
  return r;
}

AlexanderSystem zh_op_system(const GaussCode& d, const std::vector<Side>& sides) {
  ZhDiagram z = zh_construct(d, Orientation::Op, sides);
  return {z.code, z.omega, zh_op_labels(z)};
}

AlexanderSystem split_system(const GaussCode& d, const Labels& numbering) {
  auto comps = d.components();
  comps.emplace_back();
  AlexanderSystem s{GaussCode(std::move(comps)), d.component_count(), numbering};
  s.labels.emplace_back();
  return s;
}

GaussCode system_base(const AlexanderSystem& s) { return remove_component(s.code, s.gamma); }

namespace {

// Highest label at a base crossing (its incoming over arc for a positive
// crossing, its outgoing over arc for a negative one).
int higher_label(const AlexanderSystem& s, int crossing_id) {
  const CrossingInfo& x = s.code.crossing(crossing_id);
  int oi = label_at(s.labels, x.over.comp, x.over.pos - 1);
  int oo = label_at(s.labels, x.over.comp, x.over.pos);
  return std::max(oi, oo);
}

// Rotates each base component to start at its smallest base passage, sorts
// gamma by first appearance along the base and renumbers gamma's crossings.
AlexanderSystem normal_layout(const AlexanderSystem& s) {
  const GaussCode& code = s.code;
  std::set<int> gamma_ids;
  for (const Passage& p : code.component(s.gamma)) gamma_ids.insert(p.crossing);
  int base_max = 0;
  for (const auto& x : code.crossings())
    if (!gamma_ids.count(x.id)) base_max = std::max(base_max, x.id);

  std::vector<GaussCode::Component> comps(code.component_count());
  Labels labels(code.component_count());
  for (int c = 0; c < code.component_count(); ++c) {
    if (c == s.gamma) continue;
    const auto& comp = code.component(c);
    const int k = static_cast<int>(comp.size());
    int start = 0;
    bool found = false;
    for (int p = 0; p < k; ++p) {
      if (gamma_ids.count(comp[p].crossing)) continue;
      auto key = std::pair(comp[p].crossing, comp[p].role == Role::Over ? 0 : 1);
      auto best = std::pair(comp[start].crossing, comp[start].role == Role::Over ? 0 : 1);
      if (!found || key < best) start = p;
      found = true;
    }
    for (int i = 0; i < k; ++i) {
      comps[c].push_back(comp[(start + i) % k]);
      labels[c].push_back(s.labels[c][(start + i) % k]);
    }
    if (k == 0) labels[c] = s.labels[c];
  }
  std::map<int, int> fresh;
  int next = base_max + 1;
  for (int c = 0; c < code.component_count(); ++c)
    for (Passage& p : comps[c])
      if (gamma_ids.count(p.crossing)) {
        int id = next++;
        fresh[p.crossing] = id;
        p.crossing = id;
      }
  for (int c = 0; c < code.component_count(); ++c)
    for (const Passage& p : comps[c])
      if (fresh.count(p.crossing) == 0 && gamma_ids.count(p.crossing)) throw std::logic_error("lost gamma passage");
  // gamma lists its passages in the order they were met along the base.
  std::vector<std::pair<int, Passage>> ordered;
  for (const Passage& p : code.component(s.gamma)) ordered.emplace_back(fresh.at(p.crossing), Passage{fresh.at(p.crossing), p.role, p.sign});
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [_, p] : ordered) comps[s.gamma].push_back(p);
  return {GaussCode(std::move(comps)), s.gamma, std::move(labels)};
}

}  // namespace

AlexanderSystem canonicalize_alexander_system(const AlexanderSystem& input) {
  if (auto check = verify_alexander_system(input); !check)
    throw InvalidSystem("not an Alexander system: " + check.violations.front());
  AlexanderSystem s = input;

  // Shift every base crossing to the base value 1 with AS3 moves.
  std::vector<int> base_ids;
  for (const auto& x : s.code.crossings())
    if (x.over.comp != s.gamma && x.under.comp != s.gamma) base_ids.push_back(x.id);
  for (int id : base_ids) {
    for (int h = higher_label(s, id); h != 1; h = higher_label(s, id)) {
      MoveSite site;
      site.kind = h > 1 ? MoveKind::AS3B : MoveKind::AS3A;
      site.crossing = id;
      s = as_move(s, site);
    }
  }

  // Cancel opposite gamma pairs along each short arc of the base (AS2B).
  for (bool changed = true; changed;) {
    changed = false;
    auto sites = enumerate_as_sites(s, MoveKind::AS2B);
    if (!sites.empty()) {
      s = as_move(s, sites.front());
      changed = true;
    }
  }

  // A crossing-free base component is a free circle: any constant label is
  // a valid sub-numbering there, so use the base value.
  for (int c = 0; c < s.code.component_count(); ++c)
    if (c != s.gamma && s.code.component(c).empty()) s.labels[c] = {1};

  AlexanderSystem out = normal_layout(s);
  if (auto check = verify_alexander_system(out); !check)
    throw std::logic_error("canonicalization broke the system: " + check.violations.front());
  return out;
}

nlohmann::json to_json(const AlexanderSystem& s) {
  nlohmann::json labels = nlohmann::json::object();
  for (int c = 0; c < static_cast<int>(s.labels.size()); ++c)
    for (int g = 0; g < static_cast<int>(s.labels[c].size()); ++g)
      labels[std::to_string(c) + ":" + std::to_string(g)] = s.labels[c][g];
  return {{"code", to_json(s.code)}, {"gamma", s.gamma}, {"labels", labels}};
}

}  // namespace zh
