#include "zh/coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace zh {

namespace {

std::string generator_name(int g) {
  if (g < 26) return std::string(1, static_cast<char>('a' + g));
  return "x" + std::to_string(g);
}

// Backtracking search over colourings with forced-value propagation: once two
// of a relation's three generators are known, the third is determined (the
// right factor only through the result and left when X is a quandle, so that
// case is checked rather than propagated).
class ColoringSearch {
 public:
  ColoringSearch(const QuandlePresentation& p, const FiniteQuandle& x, std::vector<Coloring>* out)
      : p_(p), x_(x), out_(out), color_(p.generators, -1), uses_(p.generators) {
    for (int r = 0; r < static_cast<int>(p.relations.size()); ++r) {
      const Relation& rel = p.relations[r];
      for (int g : {rel.result, rel.left, rel.right}) {
        if (g < 0 || g >= p.generators) throw std::invalid_argument("relation names an unknown generator");
        uses_[g].push_back(r);
      }
    }
  }

  std::uint64_t run() {
    count_ = 0;
    order_ = decision_order();
    search(0);
    return count_;
  }

 private:
  bool assign(int g, int value) {
    color_[g] = value;
    trail_.push_back(g);
    pending_.push_back(g);
    while (!pending_.empty()) {
      int h = pending_.back();
      pending_.pop_back();
      for (int r : uses_[h])
        if (!settle(p_.relations[r])) {
          pending_.clear();
          return false;
        }
    }
    return true;
  }

  bool force(int g, int value) {
    if (color_[g] >= 0) return color_[g] == value;
    color_[g] = value;
    trail_.push_back(g);
    pending_.push_back(g);
    return true;
  }

  bool settle(const Relation& r) {
    int res = color_[r.result], l = color_[r.left], rt = color_[r.right];
    if (l >= 0 && rt >= 0) return force(r.result, x_.op(l, rt));
    if (res >= 0 && rt >= 0) return force(r.left, x_.right_div(res, rt));
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      color_[trail_.back()] = -1;
      trail_.pop_back();
    }
  }

  // Generators forced once `known` is fixed, under the same two propagation
  // rules that settle() applies.
  std::vector<char> closure(std::vector<char> known) const {
    for (bool changed = true; changed;) {
      changed = false;
      for (const Relation& r : p_.relations) {
        if (known[r.right] && known[r.left] && !known[r.result]) known[r.result] = changed = true;
        if (known[r.right] && known[r.result] && !known[r.left]) known[r.left] = changed = true;
      }
    }
    return known;
  }

  // Greedy branching order: each decision is the generator whose value forces
  // the most others, ties going to the one used most often as an over arc.
  // Branching then only happens on a small basis of the presentation.
  std::vector<int> decision_order() const {
    std::vector<int> as_right(p_.generators, 0);
    for (const Relation& r : p_.relations) ++as_right[r.right];
    std::vector<char> known(p_.generators, 0);
    std::vector<int> order;
    for (;;) {
      int best = -1, best_gain = -1;
      for (int g = 0; g < p_.generators; ++g) {
        if (known[g]) continue;
        std::vector<char> k = known;
        k[g] = 1;
        k = closure(std::move(k));
        int gain = static_cast<int>(std::count(k.begin(), k.end(), 1));
        if (gain > best_gain || (gain == best_gain && as_right[g] > as_right[best])) best = g, best_gain = gain;
      }
      if (best < 0) break;
      order.push_back(best);
      known[best] = 1;
      known = closure(std::move(known));
    }
    return order;
  }

  void search(std::size_t step) {
    while (step < order_.size() && color_[order_[step]] >= 0) ++step;
    if (step == order_.size()) {
      ++count_;
      if (out_) out_->push_back(color_);
      return;
    }
    const int g = order_[step];
    for (int v = 0; v < x_.size(); ++v) {
      std::size_t mark = trail_.size();
      if (assign(g, v)) search(step + 1);
      undo(mark);
    }
  }

  const QuandlePresentation& p_;
  const FiniteQuandle& x_;
  std::vector<Coloring>* out_;
  Coloring color_;
  std::vector<std::vector<int>> uses_;
  std::vector<int> trail_, pending_, order_;
  std::uint64_t count_ = 0;
};

}  // namespace

std::vector<std::string> QuandlePresentation::relation_strings() const {
  std::vector<std::string> out;
  for (const Relation& r : relations)
    out.push_back(generator_name(r.left) + "*" + generator_name(r.right) + "=" + generator_name(r.result));
  return out;
}

nlohmann::json QuandlePresentation::to_json() const {
  nlohmann::json rels = nlohmann::json::array();
  for (const Relation& r : relations)
    rels.push_back({{"result", r.result}, {"left", r.left}, {"right", r.right}, {"crossing", r.crossing}, {"sign", r.sign}});
  return {{"generators", generators}, {"relations", rels}, {"text", relation_strings()}};
}

QuandlePresentation presentation(const GaussCode& d) {
  QuandlePresentation p;
  auto arc_of = arc_index_of_short_arcs(d);
  for (const auto& v : arc_of)
    for (int a : v) p.generators = std::max(p.generators, a + 1);
  auto arc_at = [&](int c, int g) {
    int k = static_cast<int>(arc_of[c].size());
    return arc_of[c][((g % k) + k) % k];
  };
  for (const auto& x : d.crossings()) {
    int in = arc_at(x.under.comp, x.under.pos - 1);
    int out = arc_at(x.under.comp, x.under.pos);
    int over = arc_at(x.over.comp, x.over.pos);
    if (x.sign > 0)
      p.relations.push_back({out, in, over, x.id, 1});
    else
      p.relations.push_back({in, out, over, x.id, -1});
  }
  return p;
}

QuandlePresentation extended_presentation(const GaussCode& d, const std::vector<Side>& sides) {
  return presentation(zh_construct(d, Orientation::Standard, sides).code);
}

std::uint64_t count_colorings(const QuandlePresentation& p, const FiniteQuandle& x, std::vector<Coloring>* out) {
  return ColoringSearch(p, x, out).run();
}

std::uint64_t count_colorings(const GaussCode& d, const FiniteQuandle& x, std::vector<Coloring>* out) {
  return count_colorings(presentation(d), x, out);
}

ModMatrix relation_matrix(const QuandlePresentation& p, const FiniteQuandle& x) {
  if (!x.linear()) throw std::invalid_argument(x.name() + " has no linear form");
  const int n = std::max(2, x.size());
  ModMatrix m(static_cast<int>(p.relations.size()), p.generators, n);
  for (int r = 0; r < static_cast<int>(p.relations.size()); ++r) {
    const Relation& rel = p.relations[r];
    m.add(r, rel.left, x.linear()->a);
    m.add(r, rel.right, x.linear()->b);
    m.add(r, rel.result, -1);
  }
  return m;
}

std::uint64_t count_colorings_linear(const QuandlePresentation& p, const FiniteQuandle& x) {
  if (x.size() == 1) return 1;
  return solution_count_mod_n(relation_matrix(p, x), x.size());
}

std::uint64_t extended_colorings(const GaussCode& d, const FiniteQuandle& x, const std::vector<Side>& sides) {
  return count_colorings(extended_presentation(d, sides), x);
}

int boltzmann_exponent(const Relation& r, const Coloring& c, const TwoCocycle& phi) {
  return r.sign * phi.at(c[r.left], c[r.right]);
}

GroupRingElement cocycle_invariant(const QuandlePresentation& p, const FiniteQuandle& x, const TwoCocycle& phi) {
  require_cocycle(x, phi);
  std::vector<Coloring> colorings;
  count_colorings(p, x, &colorings);
  GroupRingElement total(phi.group);
  for (const Coloring& c : colorings) {
    long e = 0;
    for (const Relation& r : p.relations) e += boltzmann_exponent(r, c, phi);
    total.add(phi.group.reduce(e), 1);
  }
  return total;
}

GroupRingElement cocycle_invariant(const GaussCode& d, const FiniteQuandle& x, const TwoCocycle& phi) {
  return cocycle_invariant(presentation(d), x, phi);
}

GroupRingElement extended_cocycle_invariant(const GaussCode& d, const FiniteQuandle& x, const TwoCocycle& phi,
                                            const std::vector<Side>& sides) {
  return cocycle_invariant(extended_presentation(d, sides), x, phi);
}

}  // namespace zh
