#include "zh/moves.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>

namespace zh {

namespace {

using Comps = std::vector<GaussCode::Component>;

constexpr std::array<std::pair<MoveKind, const char*>, 13> kKindNames{{
    {MoveKind::R1Insert, "r1-insert"},
    {MoveKind::R1Delete, "r1-delete"},
    {MoveKind::R2Insert, "r2-insert"},
    {MoveKind::R2Delete, "r2-delete"},
    {MoveKind::R3, "r3"},
    {MoveKind::OmegaOCC, "omega-occ"},
    {MoveKind::OmegaReconnect, "omega-reconnect"},
    {MoveKind::AS1, "as1"},
    {MoveKind::AS2A, "as2a"},
    {MoveKind::AS2B, "as2b"},
    {MoveKind::AS3A, "as3a"},
    {MoveKind::AS3B, "as3b"},
    {MoveKind::BrokenR2, "broken-r2"},
}};

int wrap(int i, int k) { return ((i % k) + k) % k; }

int gap_count(const GaussCode& d, int c) { return std::max<int>(1, static_cast<int>(d.component(c).size())); }

bool touches(const GaussCode& d, int crossing_id, int omega) {
  if (omega < 0) return false;
  const CrossingInfo& x = d.crossing(crossing_id);
  return x.over.comp == omega || x.under.comp == omega;
}

Slot find_passage(const Comps& comps, int id, Role role) {
  for (int c = 0; c < static_cast<int>(comps.size()); ++c)
    for (int p = 0; p < static_cast<int>(comps[c].size()); ++p)
      if (comps[c][p].crossing == id && comps[c][p].role == role) return {c, p};
  throw IllegalSite("no passage for crossing " + std::to_string(id));
}

// True when passage b directly follows passage a on the same component.
bool follows(const GaussCode& d, Slot a, Slot b) {
  if (a.comp != b.comp) return false;
  int k = static_cast<int>(d.component(a.comp).size());
  return wrap(a.pos + 1, k) == b.pos && a.pos != b.pos;
}

Slot slot_of(const GaussCode& d, int id, Role role) {
  const CrossingInfo& x = d.crossing(id);
  return role == Role::Over ? x.over : x.under;
}

void erase_ids(Comps& comps, const std::set<int>& ids) {
  for (auto& comp : comps)
    comp.erase(std::remove_if(comp.begin(), comp.end(), [&](const Passage& p) { return ids.count(p.crossing) > 0; }),
               comp.end());
}

void swap_adjacent(Comps& comps, Slot a, Slot b) { std::swap(comps[a.comp][a.pos], comps[b.comp][b.pos]); }

// --- Reidemeister sites -------------------------------------------------------

void r1_insert_sites(const GaussCode& d, int omega, std::vector<MoveSite>& out) {
  for (int c = 0; c < d.component_count(); ++c) {
    if (c == omega) continue;
    for (int g = 0; g < gap_count(d, c); ++g)
      for (int sign : {1, -1})
        for (bool over_first : {true, false}) {
          MoveSite s;
          s.kind = MoveKind::R1Insert;
          s.comp = c;
          s.pos = g;
          s.sign = sign;
          s.over_first = over_first;
          out.push_back(s);
        }
  }
}

void r1_delete_sites(const GaussCode& d, int omega, std::vector<MoveSite>& out) {
  for (const auto& x : d.crossings()) {
    if (touches(d, x.id, omega)) continue;
    if (follows(d, x.over, x.under) || follows(d, x.under, x.over)) {
      MoveSite s;
      s.kind = MoveKind::R1Delete;
      s.crossing = x.id;
      out.push_back(s);
    }
  }
}

void r2_insert_sites(const GaussCode& d, int omega, MoveKind kind, std::vector<MoveSite>& out) {
  for (int c1 = 0; c1 < d.component_count(); ++c1) {
    if (c1 == omega) continue;
    for (int g1 = 0; g1 < gap_count(d, c1); ++g1)
      for (int c2 = 0; c2 < d.component_count(); ++c2) {
        if (c2 == omega) continue;
        for (int g2 = 0; g2 < gap_count(d, c2); ++g2)
          for (int sign : {1, -1})
            for (bool coherent : {true, false})
              for (bool over_first : {true, false}) {
                bool same = c1 == c2 && g1 == g2;
                if (!same && !over_first) continue;
                MoveSite s;
                s.kind = kind;
                s.comp = c1;
                s.pos = g1;
                s.comp2 = c2;
                s.pos2 = g2;
                s.sign = sign;
                s.coherent = coherent;
                s.over_first = over_first;
                out.push_back(s);
              }
      }
  }
}

void r2_delete_sites(const GaussCode& d, int omega, std::vector<MoveSite>& out) {
  for (int c = 0; c < d.component_count(); ++c) {
    const auto& comp = d.component(c);
    int k = static_cast<int>(comp.size());
    for (int p = 0; p < k; ++p) {
      const Passage& a = comp[p];
      const Passage& b = comp[wrap(p + 1, k)];
      if (a.crossing == b.crossing || a.role != Role::Over || b.role != Role::Over || a.sign != -b.sign) continue;
      if (touches(d, a.crossing, omega) || touches(d, b.crossing, omega)) continue;
      Slot ua = slot_of(d, a.crossing, Role::Under), ub = slot_of(d, b.crossing, Role::Under);
      if (!follows(d, ua, ub) && !follows(d, ub, ua)) continue;
      MoveSite s;
      s.kind = MoveKind::R2Delete;
      s.crossing = a.crossing;
      s.crossing2 = b.crossing;
      out.push_back(s);
    }
  }
}

// Braid-like third move with every crossing of sign `sign`. Top strand
// passes over x then y; the middle strand under x then over z; the bottom
// strand under y then under z. The move swaps each of the three pairs, so the
// same triple is found from either side.
void r3_sites_in(const GaussCode& d, int omega, bool mirrored, std::vector<MoveSite>& out) {
  std::set<std::array<int, 3>> seen;
  for (int c = 0; c < d.component_count(); ++c) {
    const auto& comp = d.component(c);
    int k = static_cast<int>(comp.size());
    for (int p = 0; p < k; ++p) {
      const Passage& a = comp[p];
      const Passage& b = comp[wrap(p + 1, k)];
      if (a.crossing == b.crossing || a.role != Role::Over || b.role != Role::Over) continue;
      // Forward reading: (x, y) = (a, b); backward reading: (x, y) = (b, a).
      for (bool forward : {true, false}) {
        int x = forward ? a.crossing : b.crossing;
        int y = forward ? b.crossing : a.crossing;
        Slot ux = slot_of(d, x, Role::Under), uy = slot_of(d, y, Role::Under);
        int kx = static_cast<int>(d.component(ux.comp).size());
        int ky = static_cast<int>(d.component(uy.comp).size());
        // Middle strand: U_x then O_z (forward) or O_z then U_x (backward).
        Slot oz_slot{ux.comp, wrap(ux.pos + (forward ? 1 : -1), kx)};
        const Passage& oz = d.at(oz_slot);
        if (oz.role != Role::Over) continue;
        int z = oz.crossing;
        if (z == x || z == y) continue;
        Slot uz_slot{uy.comp, wrap(uy.pos + (forward ? 1 : -1), ky)};
        const Passage& uz = d.at(uz_slot);
        if (uz.crossing != z || uz.role != Role::Under) continue;
        if (d.crossing(x).sign != 1 || d.crossing(y).sign != 1 || d.crossing(z).sign != 1) continue;
        if (touches(d, x, omega) || touches(d, y, omega) || touches(d, z, omega)) continue;
        if (!seen.insert({x, y, z}).second) continue;
        MoveSite s;
        s.kind = MoveKind::R3;
        s.crossing = x;
        s.crossing2 = y;
        s.crossing3 = z;
        s.mirrored = mirrored;
        out.push_back(s);
      }
    }
  }
}

void omega_sites(const GaussCode& d, MoveKind kind, int omega, std::vector<MoveSite>& out) {
  if (omega < 0 || omega >= d.component_count()) return;
  int m = static_cast<int>(d.component(omega).size());
  if (m < 2) return;
  if (kind == MoveKind::OmegaOCC) {
    for (int p = 0; p < m; ++p) {
      MoveSite s;
      s.kind = kind;
      s.pos = p;
      out.push_back(s);
    }
    return;
  }
  for (int from = 0; from < m; ++from)
    for (int to = 0; to < m; ++to) {
      if (from == to) continue;
      MoveSite s;
      s.kind = kind;
      s.pos = from;
      s.pos2 = to;
      out.push_back(s);
    }
}

// --- Reidemeister application ------------------------------------------------

GaussCode apply_r1_insert(const GaussCode& d, const MoveSite& s) {
  Comps comps = d.components();
  auto& comp = comps.at(s.comp);
  int k = static_cast<int>(comp.size());
  if (s.pos < 0 || s.pos >= std::max(k, 1)) throw IllegalSite("R1 gap out of range");
  int id = d.max_id() + 1;
  Role first = s.over_first ? Role::Over : Role::Under;
  int at = k == 0 ? 0 : s.pos + 1;
  comp.insert(comp.begin() + at, {Passage{id, first, s.sign}, Passage{id, other(first), s.sign}});
  return GaussCode(std::move(comps));
}

GaussCode apply_r2_insert(const GaussCode& d, const MoveSite& s, bool broken) {
  Comps comps = d.components();
  auto check_gap = [&](int c, int g) {
    if (c < 0 || c >= d.component_count() || g < 0 || g >= gap_count(d, c)) throw IllegalSite("R2 gap out of range");
  };
  check_gap(s.comp, s.pos);
  check_gap(s.comp2, s.pos2);
  int a = d.max_id() + 1, b = d.max_id() + 2;
  int sa = s.sign, sb = broken ? s.sign : -s.sign;
  std::vector<Passage> over_block{{a, Role::Over, sa}, {b, Role::Over, sb}};
  std::vector<Passage> under_block = s.coherent ? std::vector<Passage>{{a, Role::Under, sa}, {b, Role::Under, sb}}
                                                : std::vector<Passage>{{b, Role::Under, sb}, {a, Role::Under, sa}};
  auto insert_at = [&](int c, int g, const std::vector<Passage>& block) {
    auto& comp = comps[c];
    int at = comp.empty() ? 0 : g + 1;
    comp.insert(comp.begin() + at, block.begin(), block.end());
  };
  if (s.comp == s.comp2 && s.pos == s.pos2) {
    std::vector<Passage> block = s.over_first ? over_block : under_block;
    const auto& tail = s.over_first ? under_block : over_block;
    block.insert(block.end(), tail.begin(), tail.end());
    insert_at(s.comp, s.pos, block);
  } else if (s.comp == s.comp2 && s.pos2 > s.pos) {
    insert_at(s.comp2, s.pos2, under_block);
    insert_at(s.comp, s.pos, over_block);
  } else {
    insert_at(s.comp, s.pos, over_block);
    insert_at(s.comp2, s.pos2, under_block);
  }
  return GaussCode(std::move(comps));
}

GaussCode apply_r3(const GaussCode& d, const MoveSite& s) {
  if (s.mirrored) {
    MoveSite plain = s;
    plain.mirrored = false;
    return mirror(apply_r3(mirror(d), plain));
  }
  std::vector<MoveSite> sites;
  r3_sites_in(d, -1, false, sites);
  bool ok = std::any_of(sites.begin(), sites.end(), [&](const MoveSite& t) {
    return t.crossing == s.crossing && t.crossing2 == s.crossing2 && t.crossing3 == s.crossing3;
  });
  if (!ok) throw IllegalSite("no third-move pattern at the given crossings");
  Comps comps = d.components();
  swap_adjacent(comps, slot_of(d, s.crossing, Role::Over), slot_of(d, s.crossing2, Role::Over));
  swap_adjacent(comps, slot_of(d, s.crossing, Role::Under), slot_of(d, s.crossing3, Role::Over));
  swap_adjacent(comps, slot_of(d, s.crossing2, Role::Under), slot_of(d, s.crossing3, Role::Under));
  return GaussCode(std::move(comps));
}

bool contains_site(const std::vector<MoveSite>& sites, const MoveSite& s) {
  return std::find(sites.begin(), sites.end(), s) != sites.end();
}

// --- Alexander-system editing ----------------------------------------------

// Mutable view of a system used by the AS moves. Labels follow the passages:
// labels[c][i] is the short arc leaving passage i.
struct Editor {
  Comps comps;
  Labels labels;
  int gamma;
  int next_id;

  explicit Editor(const AlexanderSystem& s)
      : comps(s.code.components()), labels(s.labels), gamma(s.gamma), next_id(s.code.max_id() + 1) {}

  int size(int c) const { return static_cast<int>(comps[c].size()); }

  // Inserts gamma passage (sign) at index i of base component c, keeping the
  // label of the arc on the `keep_before` side of the new passage.
  int insert(int c, int i, int sign, bool keep_before) {
    int k = size(c);
    if (k == 0) throw IllegalSite("single gamma passages cannot enter an empty component");
    int id = next_id++;
    int before = labels[c][wrap(i - 1, k)];
    comps[c].insert(comps[c].begin() + i, Passage{id, Role::Under, sign});
    if (keep_before) {
      labels[c].insert(labels[c].begin() + i, before + sign);
    } else {
      // The arc after the new passage keeps the old label; the one before it
      // shifts.
      labels[c].insert(labels[c].begin() + i, before);
      labels[c][wrap(i - 1, k + 1)] = before - sign;
    }
    comps[gamma].push_back(Passage{id, Role::Over, sign});
    return id;
  }

  void insert_pair(int c, int g, int sign) {
    int a = next_id++, b = next_id++;
    if (size(c) == 0) {
      int l = labels[c][0];
      comps[c] = {Passage{a, Role::Under, sign}, Passage{b, Role::Under, -sign}};
      labels[c] = {l + sign, l};
    } else {
      int l = labels[c][g];
      comps[c].insert(comps[c].begin() + g + 1, {Passage{a, Role::Under, sign}, Passage{b, Role::Under, -sign}});
      labels[c].insert(labels[c].begin() + g + 1, {l + sign, l});
    }
    comps[gamma].push_back(Passage{a, Role::Over, sign});
    comps[gamma].push_back(Passage{b, Role::Over, -sign});
  }

  // Removes the gamma passage at index i of component c; the merged arc keeps
  // the label from the `keep_before` side.
  void remove(int c, int i, bool keep_before) {
    int id = comps[c][i].crossing;
    int k = size(c);
    int after = labels[c][i];
    comps[c].erase(comps[c].begin() + i);
    labels[c].erase(labels[c].begin() + i);
    if (k == 1) {
      labels[c] = {after};
    } else if (!keep_before) {
      labels[c][wrap(i - 1, k - 1)] = after;
    }
    auto& g = comps[gamma];
    g.erase(std::remove_if(g.begin(), g.end(), [&](const Passage& p) { return p.crossing == id; }), g.end());
  }

  AlexanderSystem finish() const { return {GaussCode(comps), gamma, labels}; }
};

bool is_gamma(const AlexanderSystem& s, int crossing_id) { return s.code.crossing(crossing_id).over.comp == s.gamma; }

// Around a base crossing: the four gamma passages flanking its over and under
// passages (before O, after O, before U, after U) if they carry the signs
// `pattern`; empty otherwise.
std::optional<std::array<int, 4>> flanking_loop(const AlexanderSystem& s, int id, std::array<int, 4> pattern) {
  const CrossingInfo& x = s.code.crossing(id);
  std::array<Slot, 4> slots;
  int ko = static_cast<int>(s.code.component(x.over.comp).size());
  int ku = static_cast<int>(s.code.component(x.under.comp).size());
  slots[0] = {x.over.comp, wrap(x.over.pos - 1, ko)};
  slots[1] = {x.over.comp, wrap(x.over.pos + 1, ko)};
  slots[2] = {x.under.comp, wrap(x.under.pos - 1, ku)};
  slots[3] = {x.under.comp, wrap(x.under.pos + 1, ku)};
  std::array<int, 4> ids;
  std::set<std::pair<int, int>> distinct;
  for (int i = 0; i < 4; ++i) {
    const Passage& p = s.code.at(slots[i]);
    if (!is_gamma(s, p.crossing) || p.sign != pattern[i]) return std::nullopt;
    ids[i] = p.crossing;
    distinct.insert({slots[i].comp, slots[i].pos});
  }
  if (distinct.size() != 4) return std::nullopt;
  return ids;
}

// Shifts every label at base crossing `id` by `delta` (+1 or -1), cancelling
// an opposite loop of flanking gamma passages when one is present.
AlexanderSystem shift_crossing(const AlexanderSystem& s, int id, int delta) {
  if (is_gamma(s, id)) throw IllegalSite("AS3 needs a crossing of the base");
  const std::array<int, 4> opposite{-delta, delta, -delta, delta};
  Editor e(s);
  if (auto loop = flanking_loop(s, id, opposite)) {
    // Before-passages keep the outer (earlier) arc, after-passages keep the
    // outer (later) arc.
    for (int i = 0; i < 4; ++i) {
      Slot at = find_passage(e.comps, (*loop)[i], Role::Under);
      e.remove(at.comp, at.pos, i % 2 == 0);
    }
    return e.finish();
  }
  Slot o = find_passage(e.comps, id, Role::Over);
  e.insert(o.comp, o.pos, delta, true);
  o = find_passage(e.comps, id, Role::Over);
  e.insert(o.comp, o.pos + 1, -delta, false);
  Slot u = find_passage(e.comps, id, Role::Under);
  e.insert(u.comp, u.pos, delta, true);
  u = find_passage(e.comps, id, Role::Under);
  e.insert(u.comp, u.pos + 1, -delta, false);
  return e.finish();
}

}  // namespace

std::string to_string(MoveKind k) {
  for (const auto& [kind, name] : kKindNames)
    if (kind == k) return name;
  return "unknown";
}

std::optional<MoveKind> move_kind_from_string(const std::string& s) {
  for (const auto& [kind, name] : kKindNames)
    if (s == name) return kind;
  return std::nullopt;
}

std::string describe(const MoveSite& s) {
  std::string out = to_string(s.kind);
  switch (s.kind) {
    case MoveKind::R1Insert:
      out += " comp=" + std::to_string(s.comp) + " gap=" + std::to_string(s.pos) + " sign=" + std::to_string(s.sign) +
             (s.over_first ? " over-first" : " under-first");
      break;
    case MoveKind::R2Insert:
    case MoveKind::BrokenR2:
      out += " over=" + std::to_string(s.comp) + ":" + std::to_string(s.pos) + " under=" + std::to_string(s.comp2) +
             ":" + std::to_string(s.pos2) + " sign=" + std::to_string(s.sign) +
             (s.coherent ? " coherent" : " incoherent") + (s.over_first ? "" : " under-first");
      break;
    case MoveKind::R1Delete:
    case MoveKind::AS3A:
    case MoveKind::AS3B:
      out += " crossing=" + std::to_string(s.crossing);
      break;
    case MoveKind::R2Delete:
      out += " crossings=" + std::to_string(s.crossing) + "," + std::to_string(s.crossing2);
      break;
    case MoveKind::R3:
      out += " crossings=" + std::to_string(s.crossing) + "," + std::to_string(s.crossing2) + "," +
             std::to_string(s.crossing3) + (s.mirrored ? " mirrored" : "");
      break;
    case MoveKind::OmegaOCC:
      out += " pos=" + std::to_string(s.pos);
      break;
    case MoveKind::OmegaReconnect:
      out += " from=" + std::to_string(s.pos) + " to=" + std::to_string(s.pos2);
      break;
    case MoveKind::AS2A:
      out += " comp=" + std::to_string(s.comp) + " gap=" + std::to_string(s.pos) + " sign=" + std::to_string(s.sign);
      break;
    case MoveKind::AS2B:
      out += " comp=" + std::to_string(s.comp) + " pos=" + std::to_string(s.pos);
      break;
    case MoveKind::AS1:
      break;
  }
  return out;
}

std::vector<MoveSite> enumerate_sites(const GaussCode& d, MoveKind kind, int omega) {
  std::vector<MoveSite> out;
  switch (kind) {
    case MoveKind::R1Insert:
      r1_insert_sites(d, omega, out);
      break;
    case MoveKind::R1Delete:
      r1_delete_sites(d, omega, out);
      break;
    case MoveKind::R2Insert:
    case MoveKind::BrokenR2:
      r2_insert_sites(d, omega, kind, out);
      break;
    case MoveKind::R2Delete:
      r2_delete_sites(d, omega, out);
      break;
    case MoveKind::R3:
      r3_sites_in(d, omega, false, out);
      r3_sites_in(mirror(d), omega, true, out);
      break;
    case MoveKind::OmegaOCC:
    case MoveKind::OmegaReconnect:
      omega_sites(d, kind, omega, out);
      break;
    default:
      throw std::invalid_argument("Alexander-system moves act on systems, not plain codes");
  }
  return out;
}

GaussCode apply(const GaussCode& d, const MoveSite& s, int omega) {
  switch (s.kind) {
    case MoveKind::R1Insert:
      if (s.comp == omega) throw IllegalSite("Reidemeister moves do not touch omega");
      return apply_r1_insert(d, s);
    case MoveKind::R1Delete: {
      std::vector<MoveSite> sites;
      r1_delete_sites(d, omega, sites);
      if (!contains_site(sites, s)) throw IllegalSite("crossing " + std::to_string(s.crossing) + " is not a curl");
      Comps comps = d.components();
      erase_ids(comps, {s.crossing});
      return GaussCode(std::move(comps));
    }
    case MoveKind::R2Insert:
    case MoveKind::BrokenR2:
      if (s.comp == omega || s.comp2 == omega) throw IllegalSite("Reidemeister moves do not touch omega");
      return apply_r2_insert(d, s, s.kind == MoveKind::BrokenR2);
    case MoveKind::R2Delete: {
      std::vector<MoveSite> sites;
      r2_delete_sites(d, omega, sites);
      if (!contains_site(sites, s)) throw IllegalSite("no cancelling chord pair at the given crossings");
      Comps comps = d.components();
      erase_ids(comps, {s.crossing, s.crossing2});
      return GaussCode(std::move(comps));
    }
    case MoveKind::R3:
      if (touches(d, s.crossing, omega) || touches(d, s.crossing2, omega) || touches(d, s.crossing3, omega))
        throw IllegalSite("Reidemeister moves do not touch omega");
      return apply_r3(d, s);
    case MoveKind::OmegaOCC:
    case MoveKind::OmegaReconnect: {
      if (omega < 0 || omega >= d.component_count()) throw IllegalSite("no omega component");
      Comps comps = d.components();
      auto& w = comps[omega];
      int m = static_cast<int>(w.size());
      if (m < 2 || s.pos < 0 || s.pos >= m) throw IllegalSite("omega position out of range");
      if (s.kind == MoveKind::OmegaOCC) {
        std::swap(w[s.pos], w[wrap(s.pos + 1, m)]);
      } else {
        if (s.pos2 < 0 || s.pos2 >= m || s.pos2 == s.pos) throw IllegalSite("omega target out of range");
        Passage p = w[s.pos];
        w.erase(w.begin() + s.pos);
        w.insert(w.begin() + s.pos2, p);
      }
      return GaussCode(std::move(comps));
    }
    default:
      throw IllegalSite("Alexander-system moves act on systems, not plain codes");
  }
}

std::vector<MoveSite> enumerate_as_sites(const AlexanderSystem& s, MoveKind kind) {
  std::vector<MoveSite> out;
  const GaussCode& d = s.code;
  switch (kind) {
    case MoveKind::AS1:
      out.push_back(MoveSite{});
      break;
    case MoveKind::AS2A:
      for (int c = 0; c < d.component_count(); ++c) {
        if (c == s.gamma) continue;
        for (int g = 0; g < gap_count(d, c); ++g)
          for (int sign : {1, -1}) {
            MoveSite m;
            m.kind = kind;
            m.comp = c;
            m.pos = g;
            m.sign = sign;
            out.push_back(m);
          }
      }
      break;
    case MoveKind::AS2B:
      for (int c = 0; c < d.component_count(); ++c) {
        if (c == s.gamma) continue;
        const auto& comp = d.component(c);
        int k = static_cast<int>(comp.size());
        if (k < 2) continue;
        for (int p = 0; p < k; ++p) {
          const Passage& a = comp[p];
          const Passage& b = comp[wrap(p + 1, k)];
          if (k == 2 && p == 1) continue;  // same pair as p == 0
          if (is_gamma(s, a.crossing) && is_gamma(s, b.crossing) && a.sign == -b.sign) {
            MoveSite m;
            m.kind = kind;
            m.comp = c;
            m.pos = p;
            out.push_back(m);
          }
        }
      }
      break;
    case MoveKind::AS3A:
    case MoveKind::AS3B:
      for (const auto& x : d.crossings()) {
        if (x.over.comp == s.gamma || x.under.comp == s.gamma) continue;
        MoveSite m;
        m.kind = kind;
        m.crossing = x.id;
        out.push_back(m);
      }
      break;
    case MoveKind::OmegaOCC:
    case MoveKind::OmegaReconnect:
      omega_sites(d, kind, s.gamma, out);
      break;
    default:
      throw std::invalid_argument("not an Alexander-system move");
  }
  return out;
}

AlexanderSystem as_move(const AlexanderSystem& s, const MoveSite& site) {
  switch (site.kind) {
    case MoveKind::AS1:
      return s;
    case MoveKind::AS2A: {
      if (site.comp < 0 || site.comp >= s.code.component_count() || site.comp == s.gamma ||
          site.pos < 0 || site.pos >= gap_count(s.code, site.comp) || (site.sign != 1 && site.sign != -1))
        throw IllegalSite("AS2A site out of range");
      Editor e(s);
      e.insert_pair(site.comp, site.pos, site.sign);
      return e.finish();
    }
    case MoveKind::AS2B: {
      if (!contains_site(enumerate_as_sites(s, MoveKind::AS2B), site))
        throw IllegalSite("no opposite gamma pair at the given position");
      Editor e(s);
      int k = e.size(site.comp);
      int first = site.pos, second = wrap(site.pos + 1, k);
      // Remove the later index first so the earlier one stays valid; the arc
      // before the pair keeps its label.
      if (second > first) {
        e.remove(site.comp, second, true);
        e.remove(site.comp, first, true);
      } else {
        // The pair wraps around the end of the word.
        e.remove(site.comp, first, true);
        e.remove(site.comp, second, false);
      }
      return e.finish();
    }
    case MoveKind::AS3A:
      return shift_crossing(s, site.crossing, +1);
    case MoveKind::AS3B:
      return shift_crossing(s, site.crossing, -1);
    case MoveKind::OmegaOCC:
    case MoveKind::OmegaReconnect:
      return {apply(s.code, site, s.gamma), s.gamma, s.labels};
    default:
      throw IllegalSite("not an Alexander-system move");
  }
}

namespace {

bool inserts(MoveKind k) { return k == MoveKind::R1Insert || k == MoveKind::R2Insert || k == MoveKind::BrokenR2; }

int added_crossings(MoveKind k) { return k == MoveKind::R1Insert ? 1 : 2; }

// An R2 insertion between two short arcs of a numerable diagram stays on the
// same surface exactly when the labels at the two arcs fit the new crossings.
bool surface_compatible(const AlexanderNumbering& n, const MoveSite& s) {
  if (n.cls[s.comp][s.pos] != n.cls[s.comp2][s.pos2]) return true;
  int lo = n.labels[s.comp][s.pos], lu = n.labels[s.comp2][s.pos2];
  return s.coherent ? lu == lo - s.sign : lu == lo;
}

}  // namespace

WalkResult random_walk(const GaussCode& d, int n_steps, std::uint64_t seed, const WalkOptions& options) {
  std::mt19937_64 rng(seed);
  WalkResult result{d, {}};
  GaussCode cur = d;
  for (int step = 0; step < n_steps; ++step) {
    std::vector<MoveKind> kinds = options.kinds;
    std::shuffle(kinds.begin(), kinds.end(), rng);
    std::optional<AlexanderNumbering> numbering;
    bool numbering_known = false;
    for (MoveKind kind : kinds) {
      if (inserts(kind) && cur.crossing_count() + added_crossings(kind) > options.max_crossings) continue;
      std::vector<MoveSite> sites = enumerate_sites(cur, kind, options.omega);
      if (kind == MoveKind::R2Insert && options.keep_surface) {
        if (!numbering_known) {
          numbering = solve_alexander_numbering(cur);
          numbering_known = true;
        }
        if (numbering)
          std::erase_if(sites, [&](const MoveSite& s) { return !surface_compatible(*numbering, s); });
      }
      if (sites.empty()) continue;
      std::uniform_int_distribution<std::size_t> pick(0, sites.size() - 1);
      const MoveSite& site = sites[pick(rng)];
      cur = apply(cur, site, options.omega);
      result.steps.push_back({site, cur});
      break;
    }
  }
  result.final_code = cur;
  return result;
}

}  // namespace zh
