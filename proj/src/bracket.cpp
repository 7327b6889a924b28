#include "zh/bracket.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <exception>
#include <map>
#include <thread>
#include <tuple>

namespace zh {

int reduce_poles(std::span<const PoleToken> tokens) {
  std::vector<int> stack;
  for (const PoleToken& t : tokens) {
    if (!stack.empty() && stack.back() == -t.sigma)
      stack.pop_back();
    else
      stack.push_back(t.sigma);
  }
  // No two neighbours on the stack are opposite, so the survivors agree and
  // nothing cancels across the wrap-around either.
  if (stack.size() % 2 != 0) throw std::invalid_argument("a loop must carry an even number of poles");
  return static_cast<int>(stack.size() / 2);
}

namespace {

int pole_sigma(const GaussCode& d, const LoopVisit& v) {
  int sign = d.crossings()[v.crossing].sign;
  return sign * (v.end == End::In ? 1 : -1) * (v.entry_role == Role::Over ? 1 : -1);
}

// Everything a state sum needs besides the code: per flat gap, the signed
// omega count on it; whether poles count.
struct LoopRule {
  std::vector<int> gap_weight;
  bool poles = false;
};

using TermKey = std::tuple<int, int, std::vector<int>>;  // (alpha-beta, loops, sorted K indices)
using TermCounts = std::map<TermKey, std::int64_t>;

struct LoopCounter {
  const GaussCode& d;
  const LoopRule& rule;
  int acc = 0;
  int loops = 0;
  std::vector<int> k;

  void begin_loop() { acc = 0; }
  void gap(int flat, bool forward) {
    if (!rule.gap_weight.empty()) acc += forward ? rule.gap_weight[flat] : -rule.gap_weight[flat];
  }
  void visit(const LoopVisit& v) {
    if (rule.poles && v.kind == Smoothing::Disoriented) acc += pole_sigma(d, v);
  }
  void end_loop() {
    if (acc % 2 != 0) throw std::logic_error("odd signed count on a state loop");
    ++loops;
    if (acc != 0) k.push_back(std::abs(acc) / 2);
  }
};

ArrowPolynomial state_sum(const GaussCode& d, const LoopRule& rule, const BracketOptions& opt) {
  const int c = d.crossing_count();
  if (c > opt.max_log2_states && !opt.force)
    throw StateLimitExceeded(std::to_string(c) + " crossings exceed the state limit of 2^" +
                             std::to_string(opt.max_log2_states) + "; pass --force to run anyway");
  if (c > 62) throw StateLimitExceeded("too many crossings for a state sum");
  const SmoothingEngine engine(d);
  const std::uint64_t total = std::uint64_t{1} << c;
  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  if (total < 4096) threads = 1;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));

  std::vector<TermCounts> partial(threads);
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](unsigned t) noexcept {
    try {
      std::vector<Smoothing> state(c);
      std::vector<char> seen;
      TermCounts& out = partial[t];
      for (std::uint64_t s = t; s < total; s += threads) {
        for (int i = 0; i < c; ++i) {
          bool b = (s >> i) & 1;
          Smoothing a = a_smoothing(d.crossings()[i].sign);
          state[i] = b ? (a == Smoothing::Oriented ? Smoothing::Disoriented : Smoothing::Oriented) : a;
        }
        LoopCounter counter{d, rule, 0, engine.free_loops(), {}};
        engine.trace(state, counter, seen);
        std::sort(counter.k.begin(), counter.k.end());
        int alpha_minus_beta = c - 2 * std::popcount(s);
        ++out[TermKey{alpha_minus_beta, counter.loops, std::move(counter.k)}];
      }
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  TermCounts merged;
  for (const auto& part : partial)
    for (const auto& [key, n] : part) merged[key] += n;

  ArrowPolynomial result;
  std::map<int, ArrowPolynomial> loop_powers;
  for (const auto& [key, n] : merged) {
    const auto& [a, loops, k] = key;
    auto it = loop_powers.find(loops);
    if (it == loop_powers.end()) {
      ArrowPolynomial p = ArrowPolynomial::constant(1);
      for (int i = 1; i < loops; ++i) p *= ArrowPolynomial::loop_value();
      it = loop_powers.emplace(loops, std::move(p)).first;
    }
    ArrowPolynomial term = it->second.shifted(a).scaled(n);
    for (int idx : k) term *= ArrowPolynomial::k_var(idx);
    result += term;
  }
  return result;
}

}  // namespace

std::vector<std::vector<PoleToken>> state_poles(const GaussCode& d, std::span<const Smoothing> state) {
  std::vector<std::vector<PoleToken>> out;
  for (const Loop& loop : trace_loops(d, state)) {
    std::vector<PoleToken> tokens;
    for (const LoopVisit& v : loop.visits)
      if (v.kind == Smoothing::Disoriented)
        tokens.push_back({d.crossings()[v.crossing].id, v.end == End::In ? ArcType::InIn : ArcType::OutOut,
                          pole_sigma(d, v)});
    out.push_back(std::move(tokens));
  }
  return out;
}

ArrowPolynomial kauffman_bracket(const GaussCode& d, const BracketOptions& opt) { return state_sum(d, {}, opt); }

ArrowPolynomial dkm_bracket(const GaussCode& d, const BracketOptions& opt) {
  LoopRule rule;
  rule.poles = true;
  return state_sum(d, rule, opt);
}

ArrowPolynomial zh_bracket(const ZhDiagram& z, const BracketOptions& opt) {
  const GaussCode& base = z.base;
  const SmoothingEngine engine(base);
  LoopRule rule;
  rule.gap_weight.assign(engine.passage_count(), 0);
  // Walk each base component inside the Zh code; omega passages met after
  // base passage g lie on base gap g (before the first base passage: the
  // last gap).
  int bc = 0;
  for (int c = 0; c < z.code.component_count(); ++c) {
    if (c == z.omega) continue;
    const auto& comp = z.code.component(c);
    const int k = static_cast<int>(base.component(bc).size());
    int g = k - 1;
    for (const Passage& p : comp) {
      const CrossingInfo& x = z.code.crossing(p.crossing);
      if (x.over.comp == z.omega) {
        if (k > 0) rule.gap_weight[engine.flat(bc, g)] += x.sign;
      } else {
        g = (g + 1) % k;
      }
    }
    ++bc;
  }
  return state_sum(base, rule, opt);
}

ArrowPolynomial zh_bracket(const GaussCode& d, const BracketOptions& opt) {
  return zh_bracket(zh_construct(d, Orientation::Op), opt);
}

ArrowPolynomial dkm_polynomial(const GaussCode& d, const BracketOptions& opt) {
  return normalize(dkm_bracket(d, opt), writhe(d));
}

ArrowPolynomial zh_polynomial(const GaussCode& d, const BracketOptions& opt) {
  return normalize(zh_bracket(d, opt), writhe(d));
}

ArrowPolynomial jones_style_polynomial(const GaussCode& d, const BracketOptions& opt) {
  return normalize(kauffman_bracket(d, opt), writhe(d));
}

std::set<int> as_set(const ArrowPolynomial& dkm) {
  std::set<int> out;
  for (const auto& [m, c] : dkm.terms()) out.insert(m.k_degree());
  return out;
}

std::set<int> as_set(const GaussCode& d, const BracketOptions& opt) { return as_set(dkm_bracket(d, opt)); }

}  // namespace zh
