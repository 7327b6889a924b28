#include "zh/smoothing.hpp"

#include <stdexcept>

namespace zh {

SmoothingEngine::SmoothingEngine(const GaussCode& code) : crossings_(code.crossing_count()) {
  int total = 0;
  for (const auto& comp : code.components()) {
    offset_.push_back(total);
    if (comp.empty()) ++free_loops_;
    total += static_cast<int>(comp.size());
  }
  comp_of_.resize(total);
  pos_of_.resize(total);
  next_.resize(total);
  prev_.resize(total);
  partner_.resize(total);
  crossing_.resize(total);
  role_.resize(total);
  for (int c = 0; c < code.component_count(); ++c) {
    const auto& comp = code.component(c);
    int k = static_cast<int>(comp.size());
    for (int p = 0; p < k; ++p) {
      int f = offset_[c] + p;
      comp_of_[f] = c;
      pos_of_[f] = p;
      next_[f] = offset_[c] + (p + 1) % k;
      prev_[f] = offset_[c] + (p + k - 1) % k;
      crossing_[f] = code.index_of(comp[p].crossing);
      role_[f] = comp[p].role;
    }
  }
  for (const auto& x : code.crossings()) {
    int o = flat(x.over.comp, x.over.pos);
    int u = flat(x.under.comp, x.under.pos);
    partner_[o] = u;
    partner_[u] = o;
  }
}

std::vector<Loop> trace_loops(const GaussCode& code, std::span<const Smoothing> state) {
  if (static_cast<int>(state.size()) != code.crossing_count())
    throw std::invalid_argument("smoothing must assign every crossing");
  SmoothingEngine engine(code);
  struct Collector {
    const SmoothingEngine& e;
    std::vector<Loop> loops;
    void begin_loop() { loops.emplace_back(); }
    void gap(int g, bool forward) { loops.back().gaps.push_back({e.comp_of()[g], e.pos_of()[g], forward}); }
    void visit(const LoopVisit& v) { loops.back().visits.push_back(v); }
    void end_loop() {}
  } collector{engine, {}};
  std::vector<char> seen;
  engine.trace(state, collector, seen);
  for (int c = 0; c < code.component_count(); ++c)
    if (code.component(c).empty()) collector.loops.push_back(Loop{{GapTraversal{c, 0, true}}, {}});
  return std::move(collector.loops);
}

}  // namespace zh
