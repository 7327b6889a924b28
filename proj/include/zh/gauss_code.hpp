#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace zh {

enum class Role : std::uint8_t { Over, Under };

constexpr Role other(Role r) noexcept { return r == Role::Over ? Role::Under : Role::Over; }

struct Passage {
  int crossing = 0;
  Role role = Role::Over;
  int sign = 1;

  friend bool operator==(const Passage&, const Passage&) = default;
};

// Position of a passage (or of the short arc leaving it) inside a code.
struct Slot {
  int comp = 0;
  int pos = 0;

  friend bool operator==(const Slot&, const Slot&) = default;
  friend auto operator<=>(const Slot&, const Slot&) = default;
};

struct CrossingInfo {
  int id = 0;
  int sign = 1;
  Slot over;
  Slot under;
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind { MalformedToken, UnmatchedCrossing, SignMismatch };

  ParseError(Kind kind, std::size_t position, const std::string& what)
      : std::runtime_error(what), kind_(kind), position_(position) {}

  Kind kind() const noexcept { return kind_; }
  // Character offset into the parsed text (0 when the error is structural).
  std::size_t position() const noexcept { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

/// A virtual link as per-component cyclic words of signed over/under
/// passages. Virtual crossings are not recorded. Crossing ids are global
/// across components; every id occurs once as Over and once as Under with a
/// common sign. The 0-crossing unknot is one empty component.
class GaussCode {
 public:
  using Component = std::vector<Passage>;

  GaussCode() : GaussCode(std::vector<Component>{Component{}}) {}
  explicit GaussCode(std::vector<Component> components);

  const std::vector<Component>& components() const noexcept { return components_; }
  int component_count() const noexcept { return static_cast<int>(components_.size()); }
  const Component& component(int c) const { return components_.at(c); }
  const Passage& at(Slot s) const { return components_.at(s.comp).at(s.pos); }

  /// Crossings sorted by id. Indices into this vector are the "dense"
  /// crossing indices used by smoothings and state sums.
  const std::vector<CrossingInfo>& crossings() const noexcept { return crossings_; }
  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  int index_of(int crossing_id) const;
  const CrossingInfo& crossing(int crossing_id) const { return crossings_[index_of(crossing_id)]; }
  int max_id() const noexcept { return crossings_.empty() ? 0 : crossings_.back().id; }

  /// Crossing ids in order of first appearance along the components.
  std::vector<int> traversal_order() const;

  friend bool operator==(const GaussCode& a, const GaussCode& b) { return a.components_ == b.components_; }

 private:
  std::vector<Component> components_;
  std::vector<CrossingInfo> crossings_;
  std::map<int, int> index_;
};

GaussCode parse_gauss_code(std::string_view text);
std::string format_gauss_code(const GaussCode& code);

/// Components sorted by their first token, ids renumbered by first
/// appearance. Cyclic rotation is preserved as written.
GaussCode canonical_form(const GaussCode& code);

int writhe(const GaussCode& code);

/// Flip every sign and swap Over/Under.
GaussCode mirror(const GaussCode& code);

// Short arc: the stretch leaving passage `pos` of component `comp` and ending
// at the next passage. A component with no passages has one short arc.
struct ShortArc {
  int comp = 0;
  int pos = 0;
};

// Arc: maximal run of short arcs between consecutive under passages.
struct Arc {
  int comp = 0;
  std::vector<int> short_arcs;  // positions, in traversal order
};

std::vector<ShortArc> short_arcs(const GaussCode& code);
std::vector<Arc> arcs(const GaussCode& code);

/// For each component and short-arc position, the index into arcs(code).
std::vector<std::vector<int>> arc_index_of_short_arcs(const GaussCode& code);

nlohmann::json to_json(const GaussCode& code);
GaussCode gauss_code_from_json(const nlohmann::json& j);

/// Canned diagrams used throughout tests and the CLI.
namespace diagrams {
inline constexpr const char* kUnknot = "";
inline constexpr const char* kVirtualTrefoil = "O1+O2+U1+U2+";
inline constexpr const char* kTrefoil = "O1+U2+O3+U1+O2+U3+";
inline constexpr const char* kHopf = "O1+U2+,U1+O2+";
}  // namespace diagrams

}  // namespace zh
