#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zh/alexander.hpp"
#include "zh/gauss_code.hpp"

namespace zh {

enum class MoveKind {
  R1Insert,
  R1Delete,
  R2Insert,
  R2Delete,
  R3,
  OmegaOCC,
  OmegaReconnect,
  AS1,
  AS2A,
  AS2B,
  AS3A,
  AS3B,
  // Inserts a same-sign chord pair. Not a Reidemeister move; used only as a
  // negative control for the invariance fuzzer.
  BrokenR2,
};

std::string to_string(MoveKind k);
std::optional<MoveKind> move_kind_from_string(const std::string& s);

class IllegalSite : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Where a move applies. Fields not used by a kind stay at their defaults.
///  R1Insert:  comp, pos (gap), sign, over_first
///  R1Delete:  crossing
///  R2Insert:  comp/pos (over gap), comp2/pos2 (under gap), sign of the first
///             crossing, coherent, over_first (order when both gaps coincide)
///  R2Delete:  crossing, crossing2
///  R3:        crossing, crossing2, crossing3, mirrored
///  OmegaOCC:  pos (swap omega passages pos and pos+1)
///  OmegaReconnect: pos (from), pos2 (to)
///  AS2A:      comp, pos (gap), sign
///  AS2B:      comp, pos (first of two adjacent gamma passages)
///  AS3A/AS3B: crossing
struct MoveSite {
  MoveKind kind = MoveKind::AS1;
  int comp = 0, pos = 0, comp2 = 0, pos2 = 0;
  int sign = 1;
  int crossing = 0, crossing2 = 0, crossing3 = 0;
  bool over_first = true;
  bool coherent = true;
  bool mirrored = false;

  friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

std::string describe(const MoveSite& site);

/// All sites of one kind. `omega` names the distinguished component for the
/// omega moves (ignored otherwise). Reidemeister moves never touch omega.
std::vector<MoveSite> enumerate_sites(const GaussCode& d, MoveKind kind, int omega = -1);

GaussCode apply(const GaussCode& d, const MoveSite& site, int omega = -1);

/// Alexander-system moves; also accepts OmegaOCC / OmegaReconnect on gamma.
std::vector<MoveSite> enumerate_as_sites(const AlexanderSystem& s, MoveKind kind);
AlexanderSystem as_move(const AlexanderSystem& s, const MoveSite& site);

struct WalkOptions {
  std::vector<MoveKind> kinds;
  int omega = -1;
  int max_crossings = 10;
  // When the current diagram is Alexander numerable, only R2 insertions
  // realizable on the same surface (labels compatible) are taken.
  bool keep_surface = true;
};

struct WalkStep {
  MoveSite site;
  GaussCode code;  // diagram after the move
};

struct WalkResult {
  GaussCode final_code;
  std::vector<WalkStep> steps;
};

/// Deterministic for a given seed (std::mt19937_64). Steps with no legal
/// site for any allowed kind leave the code unchanged and are not logged.
WalkResult random_walk(const GaussCode& d, int n_steps, std::uint64_t seed, const WalkOptions& options);

}  // namespace zh
