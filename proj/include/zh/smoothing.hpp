#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "zh/gauss_code.hpp"

namespace zh {

// Oriented joins OverIn-UnderOut and UnderIn-OverOut; Disoriented joins
// OverIn-UnderIn and OverOut-UnderOut.
enum class Smoothing : std::uint8_t { Oriented, Disoriented };

enum class End : std::uint8_t { In, Out };

struct GapTraversal {
  int comp = 0;
  int gap = 0;  // short arc leaving passage `gap`
  bool forward = true;
};

/// A loop passing through a crossing. `end` is the end the loop arrives at:
/// arriving at an In end means the loop was moving with the strand
/// orientation. For a disoriented smoothing the loop leaves by the same end
/// type of the other strand, so `end` also names the arc (InIn / OutOut).
struct LoopVisit {
  int crossing = 0;  // dense index into GaussCode::crossings()
  Role entry_role = Role::Over;
  End end = End::In;
  Smoothing kind = Smoothing::Oriented;

  bool entry_compliant() const noexcept { return end == End::In; }
  bool exit_compliant() const noexcept { return kind == Smoothing::Oriented ? end == End::In : end == End::Out; }
};

// gaps[i] is traversed, then visits[i] happens at its far end. Loops made of
// a crossing-free component have one gap and no visits.
struct Loop {
  std::vector<GapTraversal> gaps;
  std::vector<LoopVisit> visits;
};

/// Precomputed connectivity of a code for repeated state tracing.
class SmoothingEngine {
 public:
  explicit SmoothingEngine(const GaussCode& code);

  int passage_count() const noexcept { return static_cast<int>(comp_of_.size()); }
  int crossing_count() const noexcept { return crossings_; }
  int free_loops() const noexcept { return free_loops_; }
  int flat(int comp, int pos) const noexcept { return offset_[comp] + pos; }

  /// Walks every loop of the given state. The visitor receives
  ///   begin_loop(), gap(flat_gap, forward), visit(LoopVisit), end_loop().
  /// Crossing-free components are not reported; count them via free_loops().
  template <class Visitor>
  void trace(std::span<const Smoothing> state, Visitor&& v, std::vector<char>& seen) const;

  const std::vector<int>& comp_of() const noexcept { return comp_of_; }
  const std::vector<int>& pos_of() const noexcept { return pos_of_; }

 private:
  int crossings_ = 0;
  int free_loops_ = 0;
  std::vector<int> offset_;
  std::vector<int> comp_of_, pos_of_;
  std::vector<int> next_, prev_;     // cyclic neighbours within a component
  std::vector<int> partner_;         // the other passage of the same crossing
  std::vector<int> crossing_;        // dense crossing index
  std::vector<Role> role_;
};

std::vector<Loop> trace_loops(const GaussCode& code, std::span<const Smoothing> state);

template <class Visitor>
void SmoothingEngine::trace(std::span<const Smoothing> state, Visitor&& v, std::vector<char>& seen) const {
  const int n = passage_count();
  seen.assign(n, 0);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    v.begin_loop();
    int gap = start;
    bool forward = true;
    while (!seen[gap]) {
      seen[gap] = 1;
      v.gap(gap, forward);
      int q = forward ? next_[gap] : gap;
      End end = forward ? End::In : End::Out;
      int x = crossing_[q];
      Smoothing kind = state[x];
      v.visit(LoopVisit{x, role_[q], end, kind});
      int q2 = partner_[q];
      bool leave_out = (kind == Smoothing::Oriented) ? end == End::In : end == End::Out;
      if (leave_out) {
        gap = q2;
        forward = true;
      } else {
        gap = prev_[q2];
        forward = false;
      }
    }
    v.end_loop();
  }
}

}  // namespace zh
