#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "zh/gauss_code.hpp"
#include "zh/zh_construct.hpp"

namespace zh {

/// labels[c][g] is the integer on the short arc leaving passage g of
/// component c (a crossing-free component has the single entry labels[c][0]).
using Labels = std::vector<std::vector<int>>;

/// At a crossing of sign s whose incoming over arc carries m, the outgoing
/// under arc also carries m, and the outgoing over arc and incoming under arc
/// both carry m - s.
struct AlexanderNumbering {
  Labels labels;
  // Short arcs tied together by the crossing rule share a class id; labels in
  // different classes can be shifted independently.
  Labels cls;
};

/// Difference-constraint solve (weighted union-find). Each class is shifted
/// so that its smallest label is 0. Empty when no numbering exists.
std::optional<AlexanderNumbering> solve_alexander_numbering(const GaussCode& d);

bool is_alexander_numerable(const GaussCode& d);

/// Checks the crossing rule for a full labelling of d.
bool is_alexander_numbering(const GaussCode& d, const Labels& labels);

class InvalidSystem : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A diagram D u gamma (gamma = component `gamma` of `code`) with labels on
/// the short arcs of every other component. labels[gamma] is empty.
struct AlexanderSystem {
  GaussCode code;
  int gamma = 0;
  Labels labels;

  friend bool operator==(const AlexanderSystem&, const AlexanderSystem&) = default;
};

struct SystemCheck {
  bool ok = true;
  std::vector<std::string> violations;  // first entry names the first failing crossing

  explicit operator bool() const noexcept { return ok; }
};

/// gamma only over-crosses and never crosses itself; passing under a gamma
/// crossing of sign s raises the label by s; the full crossing rule holds at
/// every crossing among the other components.
SystemCheck verify_alexander_system(const AlexanderSystem& s);

/// Zh^op(D) with its canonical 0/1 (or 1/2) sub-numbering.
AlexanderSystem zh_op_system(const GaussCode& d, const std::vector<Side>& sides = {});

/// D with a crossing-free gamma appended and `numbering` as the labels.
AlexanderSystem split_system(const GaussCode& d, const Labels& numbering);

/// The base diagram of a system (gamma and its crossings removed).
GaussCode system_base(const AlexanderSystem& s);

/// Normal form reached by Alexander-system moves: each base crossing shifted
/// so its higher label is 1, opposite gamma pairs cancelled along every short
/// arc of the base, gamma passages listed in base traversal order and
/// renumbered after the largest base id.
AlexanderSystem canonicalize_alexander_system(const AlexanderSystem& s);

nlohmann::json to_json(const AlexanderSystem& s);

}  // namespace zh
