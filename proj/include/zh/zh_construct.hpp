#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "zh/gauss_code.hpp"

namespace zh {

enum class Orientation { Standard, Op };

// Which side of a base crossing the two flanking omega arcs are drawn on,
// looking along the over strand.
enum class Side { Right, Left };

class SameComponent : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Where an omega passage sits: on the short arc just before or just after
// the `role` passage of base crossing `base_crossing`.
struct OmegaAttachment {
  int base_crossing = 0;
  Role role = Role::Over;
  bool before = false;
};

/// A base diagram D plus the distinguished component omega, which only
/// over-crosses D and never crosses itself.
struct ZhDiagram {
  GaussCode base;
  GaussCode code;
  int omega = 0;  // component index of omega inside `code`
  Orientation orientation = Orientation::Standard;
  std::vector<Side> sides;     // per dense crossing index of the base
  std::map<int, OmegaAttachment> attachment;  // keyed by omega crossing id
};

/// Builds Zh(D) (Standard) or Zh^op(D) (Op). Each base crossing gets two
/// omega over-passages on the short arcs flanking it on the chosen side; by
/// default every crossing uses Side::Right.
ZhDiagram zh_construct(const GaussCode& d, Orientation orientation,
                       const std::vector<Side>& sides = {});

/// Removes a component together with every crossing it takes part in.
GaussCode remove_component(const GaussCode& code, int comp);

/// Signed count of crossings where component i is Over and j is Under.
int vlk(const GaussCode& code, int i, int j);

/// The 0/1 (Right) or 1/2 (Left) sub-numbering of the base short arcs of a
/// Zh^op diagram. labels[c][g] labels the short arc leaving passage g of
/// component c; omega's own entry is empty. Throws for Standard orientation,
/// which admits no such labelling in general.
std::vector<std::vector<int>> zh_op_labels(const ZhDiagram& z);

nlohmann::json to_json(const ZhDiagram& z);

}  // namespace zh
