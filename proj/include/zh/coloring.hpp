#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "zh/gauss_code.hpp"
#include "zh/group_ring.hpp"
#include "zh/mod_matrix.hpp"
#include "zh/quandle.hpp"
#include "zh/zh_construct.hpp"

namespace zh {

/// result = left * right. A positive crossing gives
/// under_out = under_in * over; a negative one under_in = under_out * over.
struct Relation {
  int result = 0;
  int left = 0;
  int right = 0;
  int crossing = 0;  // crossing id it comes from
  int sign = 1;

  friend bool operator==(const Relation&, const Relation&) = default;
};

/// Fundamental quandle presentation: one generator per arc (indices into
/// arcs(code)), one relation per crossing in crossing-id order.
struct QuandlePresentation {
  int generators = 0;
  std::vector<Relation> relations;

  /// Relations as text with generators named a, b, c, ... e.g. "c*e=d".
  std::vector<std::string> relation_strings() const;
  nlohmann::json to_json() const;
};

QuandlePresentation presentation(const GaussCode& d);
QuandlePresentation extended_presentation(const GaussCode& d, const std::vector<Side>& sides = {});

using Coloring = std::vector<int>;  // colour per generator

/// Number of homomorphisms from the presented quandle to X, by backtracking
/// with propagation. Fills `out` with every colouring when non-null.
std::uint64_t count_colorings(const QuandlePresentation& p, const FiniteQuandle& x,
                              std::vector<Coloring>* out = nullptr);
std::uint64_t count_colorings(const GaussCode& d, const FiniteQuandle& x, std::vector<Coloring>* out = nullptr);

/// Relation matrix of a linear quandle (row: a*left + b*right - result).
ModMatrix relation_matrix(const QuandlePresentation& p, const FiniteQuandle& x);
/// Same count as count_colorings, through modular linear algebra. Throws if
/// X has no linear form.
std::uint64_t count_colorings_linear(const QuandlePresentation& p, const FiniteQuandle& x);

std::uint64_t extended_colorings(const GaussCode& d, const FiniteQuandle& x, const std::vector<Side>& sides = {});

/// Boltzmann weight of one crossing: positive phi(under_in, over), negative
/// phi(under_out, over)^-1; returned as an exponent of u.
int boltzmann_exponent(const Relation& r, const Coloring& c, const TwoCocycle& phi);

GroupRingElement cocycle_invariant(const QuandlePresentation& p, const FiniteQuandle& x, const TwoCocycle& phi);
GroupRingElement cocycle_invariant(const GaussCode& d, const FiniteQuandle& x, const TwoCocycle& phi);
GroupRingElement extended_cocycle_invariant(const GaussCode& d, const FiniteQuandle& x, const TwoCocycle& phi,
                                            const std::vector<Side>& sides = {});

}  // namespace zh
