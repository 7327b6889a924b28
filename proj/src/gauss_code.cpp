#include "zh/gauss_code.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <sstream>

namespace zh {

GaussCode::GaussCode(std::vector<Component> components) : components_(std::move(components)) {
  if (components_.empty()) components_.emplace_back();

  struct Seen {
    int over = 0, under = 0, sign = 0;
    Slot over_slot, under_slot;
  };
  std::map<int, Seen> seen;
  for (int c = 0; c < component_count(); ++c) {
    const auto& comp = components_[c];
    for (int p = 0; p < static_cast<int>(comp.size()); ++p) {
      const Passage& q = comp[p];
      if (q.sign != 1 && q.sign != -1)
        throw ParseError(ParseError::Kind::MalformedToken, 0,
                         "crossing " + std::to_string(q.crossing) + " has sign other than +/-1");
      if (q.crossing <= 0)
        throw ParseError(ParseError::Kind::MalformedToken, 0, "crossing ids must be positive");
      Seen& s = seen[q.crossing];
      if (s.sign != 0 && s.sign != q.sign)
        throw ParseError(ParseError::Kind::SignMismatch, 0,
                         "crossing " + std::to_string(q.crossing) + " has passages of different sign");
      s.sign = q.sign;
      if (q.role == Role::Over) {
        ++s.over;
        s.over_slot = {c, p};
      } else {
        ++s.under;
        s.under_slot = {c, p};
      }
    }
  }
  crossings_.reserve(seen.size());
  for (const auto& [id, s] : seen) {
    if (s.over != 1 || s.under != 1)
      throw ParseError(ParseError::Kind::UnmatchedCrossing, 0,
                       "crossing " + std::to_string(id) + " must appear exactly once as O and once as U");
    index_[id] = static_cast<int>(crossings_.size());
    crossings_.push_back({id, s.sign, s.over_slot, s.under_slot});
  }
}

int GaussCode::index_of(int crossing_id) const {
  auto it = index_.find(crossing_id);
  if (it == index_.end()) throw std::out_of_range("no crossing with id " + std::to_string(crossing_id));
  return it->second;
}

std::vector<int> GaussCode::traversal_order() const {
  std::vector<int> order;
  std::vector<char> done(crossings_.size(), 0);
  for (const auto& comp : components_)
    for (const Passage& p : comp) {
      int i = index_of(p.crossing);
      if (!done[i]) {
        done[i] = 1;
        order.push_back(p.crossing);
      }
    }
  return order;
}

GaussCode parse_gauss_code(std::string_view text) {
  std::vector<GaussCode::Component> comps(1);
  struct Token {
    std::size_t at = 0;
    int sign = 0, over = 0, under = 0;
  };
  std::map<int, Token> tokens;  // checked here so errors carry a text position
  std::size_t i = 0;
  auto malformed = [&](std::size_t at, const std::string& why) {
    return ParseError(ParseError::Kind::MalformedToken, at,
                      "malformed token at position " + std::to_string(at) + ": " + why);
  };
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch == ',') {
      comps.emplace_back();
      ++i;
      continue;
    }
    std::size_t start = i;
    Passage p;
    if (ch == 'O' || ch == 'o')
      p.role = Role::Over;
    else if (ch == 'U' || ch == 'u')
      p.role = Role::Under;
    else
      throw malformed(i, std::string("expected 'O' or 'U', got '") + ch + "'");
    ++i;
    std::size_t digits = i;
    long id = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      id = id * 10 + (text[i] - '0');
      if (id > 1'000'000'000) throw malformed(start, "crossing id too large");
      ++i;
    }
    if (i == digits) throw malformed(i, "expected crossing id");
    if (id == 0) throw malformed(digits, "crossing id must be positive");
    if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
      throw malformed(i, "expected sign '+' or '-'");
    p.sign = text[i] == '+' ? 1 : -1;
    ++i;
    p.crossing = static_cast<int>(id);
    auto [it, fresh] = tokens.try_emplace(p.crossing, Token{start, p.sign});
    Token& t = it->second;
    if (!fresh && t.sign != p.sign)
      throw ParseError(ParseError::Kind::SignMismatch, start,
                       "crossing " + std::to_string(id) + " at position " + std::to_string(start) +
                           " has a different sign from its first passage at position " + std::to_string(t.at));
    if (++(p.role == Role::Over ? t.over : t.under) > 1)
      throw ParseError(ParseError::Kind::UnmatchedCrossing, start,
                       "crossing " + std::to_string(id) + " appears twice as " +
                           (p.role == Role::Over ? "O" : "U") + " (position " + std::to_string(start) + ")");
    comps.back().push_back(p);
  }
  for (const auto& [id, t] : tokens)
    if (t.over != 1 || t.under != 1)
      throw ParseError(ParseError::Kind::UnmatchedCrossing, t.at,
                       "crossing " + std::to_string(id) + " at position " + std::to_string(t.at) + " has no " +
                           (t.over ? "U" : "O") + " passage");
  return GaussCode(std::move(comps));
}

namespace {

void append_token(std::string& out, const Passage& p) {
  out += p.role == Role::Over ? 'O' : 'U';
  out += std::to_string(p.crossing);
  out += p.sign > 0 ? '+' : '-';
}

std::vector<GaussCode::Component> renumber(const std::vector<GaussCode::Component>& comps) {
  std::map<int, int> fresh;
  std::vector<GaussCode::Component> out = comps;
  for (auto& comp : out)
    for (Passage& p : comp) {
      auto [it, inserted] = fresh.try_emplace(p.crossing, static_cast<int>(fresh.size()) + 1);
      p.crossing = it->second;
    }
  return out;
}

}  // namespace

std::string format_gauss_code(const GaussCode& code) {
  std::string out;
  bool first = true;
  for (const auto& comp : code.components()) {
    if (!first) out += ',';
    first = false;
    for (const Passage& p : comp) append_token(out, p);
  }
  return out;
}

namespace {

// Encodes one rotation of a component under the current renumbering; crossings
// not yet seen get the next free numbers in order of appearance.
std::vector<int> encode(const GaussCode::Component& comp, int start, std::map<int, int>& ids) {
  std::vector<int> out;
  for (std::size_t k = 0; k < comp.size(); ++k) {
    const Passage& p = comp[(start + k) % comp.size()];
    auto [it, inserted] = ids.try_emplace(p.crossing, static_cast<int>(ids.size()) + 1);
    out.push_back(it->second * 4 + (p.role == Role::Over ? 0 : 2) + (p.sign > 0 ? 0 : 1));
  }
  return out;
}

struct CanonicalSearch {
  const std::vector<GaussCode::Component>& comps;
  std::vector<std::vector<int>> best;
  std::vector<std::pair<int, int>> best_choice, choice;
  std::vector<char> used;

  // Depth-first over the lexicographically smallest next component, branching
  // only on ties; empty components go last.
  void run(std::map<int, int> ids, std::vector<std::vector<int>>& prefix) {
    if (prefix.size() == comps.size()) {
      if (best.empty() || prefix < best) {
        best = prefix;
        best_choice = choice;
      }
      return;
    }
    std::vector<int> least;
    std::vector<std::pair<int, int>> ties;
    bool have = false;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (used[c]) continue;
      const int rotations = std::max<int>(1, static_cast<int>(comps[c].size()));
      for (int r = 0; r < rotations; ++r) {
        auto local = ids;
        std::vector<int> e = encode(comps[c], r, local);
        if (e.empty()) e.push_back(std::numeric_limits<int>::max());
        if (!have || e < least) {
          least = e;
          ties.clear();
          have = true;
        }
        if (e == least) ties.emplace_back(static_cast<int>(c), r);
      }
    }
    for (auto [c, r] : ties) {
      auto local = ids;
      encode(comps[c], r, local);
      used[c] = 1;
      prefix.push_back(least);
      choice.emplace_back(c, r);
      run(local, prefix);
      choice.pop_back();
      prefix.pop_back();
      used[c] = 0;
    }
  }
};

}  // namespace

GaussCode canonical_form(const GaussCode& code) {
  const auto& comps = code.components();
  CanonicalSearch search{comps, {}, {}, {}, std::vector<char>(comps.size(), 0)};
  std::vector<std::vector<int>> prefix;
  search.run({}, prefix);
  std::vector<GaussCode::Component> ordered;
  for (auto [c, r] : search.best_choice) {
    const auto& comp = comps[c];
    GaussCode::Component rotated;
    for (std::size_t k = 0; k < comp.size(); ++k) rotated.push_back(comp[(r + k) % comp.size()]);
    ordered.push_back(std::move(rotated));
  }
  return GaussCode(renumber(ordered));
}

int writhe(const GaussCode& code) {
  int w = 0;
  for (const auto& x : code.crossings()) w += x.sign;
  return w;
}

GaussCode mirror(const GaussCode& code) {
  auto comps = code.components();
  for (auto& comp : comps)
    for (Passage& p : comp) {
      p.role = other(p.role);
      p.sign = -p.sign;
    }
  return GaussCode(std::move(comps));
}

std::vector<ShortArc> short_arcs(const GaussCode& code) {
  std::vector<ShortArc> out;
  for (int c = 0; c < code.component_count(); ++c) {
    int k = std::max<int>(1, static_cast<int>(code.component(c).size()));
    for (int p = 0; p < k; ++p) out.push_back({c, p});
  }
  return out;
}

std::vector<std::vector<int>> arc_index_of_short_arcs(const GaussCode& code) {
  std::vector<std::vector<int>> index(code.component_count());
  int next = 0;
  for (int c = 0; c < code.component_count(); ++c) {
    const auto& comp = code.component(c);
    int k = static_cast<int>(comp.size());
    int unders = 0;
    for (const Passage& p : comp) unders += p.role == Role::Under;
    if (unders == 0) {
      index[c].assign(std::max(k, 1), next++);
      continue;
    }
    // Arc j starts right after the j-th under passage; short arcs before the
    // first under passage wrap into the last arc.
    index[c].resize(k);
    int seen = 0;
    for (int p = 0; p < k; ++p) {
      if (comp[p].role == Role::Under) ++seen;
      index[c][p] = next + (seen == 0 ? unders - 1 : seen - 1);
    }
    next += unders;
  }
  return index;
}

std::vector<Arc> arcs(const GaussCode& code) {
  auto index = arc_index_of_short_arcs(code);
  int count = 0;
  for (const auto& v : index)
    for (int a : v) count = std::max(count, a + 1);
  std::vector<Arc> out(count);
  for (int c = 0; c < code.component_count(); ++c) {
    const auto& comp = code.component(c);
    int k = static_cast<int>(index[c].size());
    // Start each arc's listing right after its under passage.
    int start = 0;
    for (int p = 0; p < static_cast<int>(comp.size()); ++p)
      if (comp[p].role == Role::Under) {
        start = p;
        break;
      }
    for (int step = 0; step < k; ++step) {
      int p = (start + step) % k;
      Arc& a = out[index[c][p]];
      a.comp = c;
      a.short_arcs.push_back(p);
    }
  }
  return out;
}

nlohmann::json to_json(const GaussCode& code) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& comp : code.components()) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Passage& p : comp)
      arr.push_back({{"id", p.crossing}, {"role", p.role == Role::Over ? "O" : "U"}, {"sign", p.sign}});
    comps.push_back(std::move(arr));
  }
  return {{"components", comps}, {"text", format_gauss_code(code)}};
}

GaussCode gauss_code_from_json(const nlohmann::json& j) {
  std::vector<GaussCode::Component> comps;
  for (const auto& arr : j.at("components")) {
    GaussCode::Component comp;
    for (const auto& t : arr) {
      Passage p;
      p.crossing = t.at("id").get<int>();
      std::string role = t.at("role").get<std::string>();
      if (role != "O" && role != "U") throw ParseError(ParseError::Kind::MalformedToken, 0, "bad role '" + role + "'");
      p.role = role == "O" ? Role::Over : Role::Under;
      p.sign = t.at("sign").get<int>();
      comp.push_back(p);
    }
    comps.push_back(std::move(comp));
  }
  return GaussCode(std::move(comps));
}

}  // namespace zh
