#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "zh/arrow_polynomial.hpp"
#include "zh/bracket.hpp"
#include "zh/coloring.hpp"
#include "zh/gauss_code.hpp"
#include "zh/quandle.hpp"

namespace zh {

struct QuandleResult {
  std::string quandle;
  int size = 0;
  std::uint64_t colorings = 0;
  std::uint64_t extended_colorings = 0;
  std::optional<std::string> cocycle;  // cocycle name when one was evaluated
  std::optional<GroupRingElement> cocycle_value;
  std::optional<GroupRingElement> extended_cocycle_value;
};

struct InvariantReport {
  std::string code;
  int components = 0;
  int crossings = 0;
  int writhe = 0;
  bool numerable = false;
  ArrowPolynomial dkm_bracket, zh_bracket;
  ArrowPolynomial dkm, zh, jones;
  std::set<int> as_set;
  std::vector<QuandleResult> quandles;
  // Relations between fields that the theory guarantees; empty when all hold.
  std::vector<std::string> inconsistencies;

  std::string to_text() const;
  nlohmann::json to_json() const;
};

struct NamedCocycle {
  std::string name;
  TwoCocycle phi;
};

struct ReportOptions {
  std::vector<FiniteQuandle> quandles;
  std::optional<NamedCocycle> cocycle;  // evaluated on every quandle it fits
  BracketOptions bracket;
};

/// "cjkls" is the only named cocycle; it lives on dihedral:4.
std::optional<NamedCocycle> cocycle_from_name(const std::string& name);

InvariantReport compute_report(const GaussCode& d, const ReportOptions& options = {});

/// The invariant registry: every value that must survive Reidemeister moves,
/// keyed by a stable name. Writhe and the raw brackets are left out.
std::map<std::string, std::string> invariant_registry(const InvariantReport& r);

/// Values of a Zh diagram that must survive omega moves as well as
/// Reidemeister moves away from omega: coloring and cocycle values of the
/// whole code plus vlk between omega and each other component.
std::map<std::string, std::string> extended_registry(const GaussCode& zh_code, int omega, const ReportOptions& options);

std::string set_to_string(const std::set<int>& s);

}  // namespace zh
