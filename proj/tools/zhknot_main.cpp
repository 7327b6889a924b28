#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "zh/alexander.hpp"
#include "zh/moves.hpp"
#include "zh/report.hpp"

namespace {

constexpr int kExitFuzzViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconsistent = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A code comes from the positional argument, or from stdin when it is absent
// or "-". The empty string is the unknot.
std::string read_code(const std::optional<std::string>& arg) {
  if (arg && *arg != "-") return *arg;
  std::string line;
  std::getline(std::cin, line);
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
  return line;
}

zh::GaussCode parse_or_throw(const std::string& text) { return zh::parse_gauss_code(text); }

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

std::vector<zh::MoveKind> parse_kinds(const std::string& list) {
  std::vector<zh::MoveKind> out;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) continue;
    auto k = zh::move_kind_from_string(item);
    if (!k) throw UsageError("unknown move kind '" + item + "'");
    out.push_back(*k);
  }
  if (out.empty()) throw UsageError("no move kinds given");
  return out;
}

bool is_omega_kind(zh::MoveKind k) { return k == zh::MoveKind::OmegaOCC || k == zh::MoveKind::OmegaReconnect; }

zh::ReportOptions report_options(const std::vector<std::string>& quandles, const std::string& cocycle, bool force,
                                 unsigned threads) {
  zh::ReportOptions opt;
  for (const std::string& q : quandles) opt.quandles.push_back(zh::quandle_from_spec(q));
  if (!cocycle.empty()) {
    opt.cocycle = zh::cocycle_from_name(cocycle);
    if (!opt.cocycle) throw UsageError("unknown cocycle '" + cocycle + "' (available: cjkls)");
    bool fits = false;
    for (const auto& x : opt.quandles) fits = fits || (x.size() == opt.cocycle->phi.n && zh::check_cocycle(x, opt.cocycle->phi));
    if (!fits) throw UsageError("cocycle '" + cocycle + "' is not a 2-cocycle of any requested quandle");
  }
  opt.bracket.force = force;
  opt.bracket.threads = threads;
  return opt;
}

void print_diff(const std::map<std::string, std::string>& before, const std::map<std::string, std::string>& after) {
  for (const auto& [key, v] : before) {
    auto it = after.find(key);
    if (it == after.end() || it->second != v)
      std::cout << "  " << key << ": " << v << " -> " << (it == after.end() ? "(missing)" : it->second) << '\n';
  }
}

int run_fuzz(const std::string& text, int steps, std::uint64_t seed, const std::string& kinds_text,
             const zh::ReportOptions& opt, int max_crossings) {
  const zh::GaussCode d = parse_or_throw(text);
  zh::WalkOptions walk;
  walk.kinds = parse_kinds(kinds_text);
  walk.max_crossings = max_crossings;
  bool extended = false;
  for (zh::MoveKind k : walk.kinds) extended = extended || is_omega_kind(k);

  zh::GaussCode start = d;
  std::function<std::map<std::string, std::string>(const zh::GaussCode&)> registry;
  if (extended) {
    zh::ZhDiagram z = zh::zh_construct(d, zh::Orientation::Standard);
    start = z.code;
    walk.omega = z.omega;
    walk.max_crossings += start.crossing_count();
    registry = [&opt, omega = z.omega](const zh::GaussCode& c) { return zh::extended_registry(c, omega, opt); };
  } else {
    registry = [&opt](const zh::GaussCode& c) { return zh::invariant_registry(zh::compute_report(c, opt)); };
  }

  const zh::WalkResult result = zh::random_walk(start, steps, seed, walk);
  const auto reference = registry(start);
  for (std::size_t i = 0; i < result.steps.size(); ++i) {
    const auto now = registry(result.steps[i].code);
    if (now == reference) continue;
    std::cout << "FAIL: invariant changed at step " << i + 1 << " (seed " << seed << ")\n";
    std::cout << "start: " << zh::format_gauss_code(start) << '\n';
    for (std::size_t j = 0; j <= i; ++j)
      std::cout << "  step " << j + 1 << ": " << zh::describe(result.steps[j].site) << " -> "
                << zh::format_gauss_code(result.steps[j].code) << '\n';
    std::cout << "changed values:\n";
    print_diff(reference, now);
    return kExitFuzzViolation;
  }
  std::cout << "PASS: " << result.steps.size() << " steps, " << reference.size()
            << " invariants constant (seed " << seed << ", final " << zh::format_gauss_code(result.final_code)
            << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Virtual link invariants through the Zh-construction"};
  app.require_subcommand(1);

  std::optional<std::string> code;
  bool json = false;

  auto* parse_cmd = app.add_subcommand("parse", "Validate a Gauss code and print its normal form");
  parse_cmd->add_option("code", code, "Gauss code such as O1+O2+U1+U2+ (stdin when omitted or -)");
  parse_cmd->add_flag("--json", json, "Machine-readable output");

  std::vector<std::string> quandles;
  std::string cocycle;
  bool force = false;
  unsigned threads = 0;
  auto* inv_cmd = app.add_subcommand("invariants", "Compute every invariant of a diagram");
  inv_cmd->add_option("code", code, "Gauss code (stdin when omitted or -)");
  inv_cmd->add_option("--quandle,-q", quandles, "Quandle spec: trivial:N, dihedral:N or alexander:N:T (repeatable)");
  inv_cmd->add_option("--cocycle", cocycle, "Named 2-cocycle evaluated on every quandle it fits (cjkls)");
  inv_cmd->add_flag("--json", json, "Machine-readable output");
  inv_cmd->add_flag("--force", force, "Run state sums beyond 2^20 states");
  inv_cmd->add_option("--threads", threads, "State-sum worker threads (0 = hardware concurrency)");

  std::string orientation = "standard";
  std::string sides_text;
  auto* zh_cmd = app.add_subcommand("zh", "Build Zh or Zh^op of a diagram");
  zh_cmd->add_option("code", code, "Gauss code (stdin when omitted or -)");
  zh_cmd->add_option("--orientation", orientation, "standard or op")->check(CLI::IsMember({"standard", "op"}));
  zh_cmd->add_option("--sides", sides_text, "Omega placement per crossing in id order, R or L (default all R)");
  zh_cmd->add_flag("--json", json, "Machine-readable output");

  auto* canon_cmd = app.add_subcommand("canonicalize", "Canonical Alexander system of Zh^op of a diagram");
  canon_cmd->add_option("code", code, "Gauss code (stdin when omitted or -)");
  canon_cmd->add_flag("--json", json, "Machine-readable output");

  int steps = 200;
  std::uint64_t seed = 1;
  std::string kinds = "r1-insert,r1-delete,r2-insert,r2-delete,r3";
  int max_crossings = 10;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Random move walk checking that every invariant stays constant");
  fuzz_cmd->add_option("code", code, "Gauss code (stdin when omitted or -)");
  fuzz_cmd->add_option("--steps", steps, "Number of moves")->capture_default_str()->check(CLI::NonNegativeNumber);
  fuzz_cmd->add_option("--seed", seed, "Seed of the 64-bit Mersenne Twister")->capture_default_str();
  fuzz_cmd->add_option("--kinds", kinds,
                       "Comma-separated move kinds: r1-insert, r1-delete, r2-insert, r2-delete, r3, omega-occ, "
                       "omega-reconnect, broken-r2 (a deliberately unsound move for negative controls)")
      ->capture_default_str();
  fuzz_cmd->add_option("--max-crossings", max_crossings, "Insertions stop above this size")->capture_default_str();
  fuzz_cmd->add_option("--quandle,-q", quandles, "Quandles in the registry (default trivial:2, dihedral:3, dihedral:4)");
  fuzz_cmd->add_option("--cocycle", cocycle, "Named 2-cocycle added to the registry");

  auto* q_cmd = app.add_subcommand("quandles", "Built-in quandles");
  int max_size = 8;
  auto* q_list = q_cmd->add_subcommand("list", "List built-in quandles");
  q_cmd->require_subcommand(1);
  q_list->add_option("--max-size", max_size, "Largest size listed")->capture_default_str();
  q_list->add_flag("--json", json, "Include full operation tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*parse_cmd) {
      const zh::GaussCode d = parse_or_throw(read_code(code));
      if (json) {
        print_json({{"code", zh::format_gauss_code(d)}, {"diagram", zh::to_json(d)}, {"writhe", zh::writhe(d)}});
      } else {
        std::cout << "code: " << zh::format_gauss_code(d) << '\n'
                  << "components: " << d.component_count() << '\n'
                  << "crossings: " << d.crossing_count() << '\n'
                  << "writhe: " << zh::writhe(d) << '\n';
      }
      return 0;
    }
    if (*inv_cmd) {
      const zh::GaussCode d = parse_or_throw(read_code(code));
      const zh::InvariantReport r = zh::compute_report(d, report_options(quandles, cocycle, force, threads));
      if (json)
        print_json(r.to_json());
      else
        std::cout << r.to_text();
      if (!r.inconsistencies.empty()) {
        for (const auto& s : r.inconsistencies) std::cerr << "inconsistency: " << s << '\n';
        return kExitInconsistent;
      }
      return 0;
    }
    if (*zh_cmd) {
      const zh::GaussCode d = parse_or_throw(read_code(code));
      std::vector<zh::Side> sides;
      for (char c : sides_text) {
        if (c == 'R' || c == 'r')
          sides.push_back(zh::Side::Right);
        else if (c == 'L' || c == 'l')
          sides.push_back(zh::Side::Left);
        else
          throw UsageError("--sides takes only R and L");
      }
      if (!sides.empty() && static_cast<int>(sides.size()) != d.crossing_count())
        throw UsageError("--sides needs one letter per crossing");
      const auto o = orientation == "op" ? zh::Orientation::Op : zh::Orientation::Standard;
      const zh::ZhDiagram z = zh::zh_construct(d, o, sides);
      const zh::AlexanderSystem canon = zh::canonicalize_alexander_system(zh::zh_op_system(d, sides));
      if (json) {
        nlohmann::json j = zh::to_json(z);
        if (o == zh::Orientation::Op) j["labels"] = zh::zh_op_labels(z);
        j["canonical_system"] = zh::to_json(canon);
        print_json(j);
      } else {
        std::cout << "zh code: " << zh::format_gauss_code(z.code) << '\n'
                  << "omega component: " << z.omega << " (" << z.code.component(z.omega).size() << " passages)\n";
        if (o == zh::Orientation::Op) std::cout << "labels: " << nlohmann::json(zh::zh_op_labels(z)).dump() << '\n';
        std::cout << "canonical system: " << zh::format_gauss_code(canon.code)
                  << " labels " << nlohmann::json(canon.labels).dump() << '\n';
      }
      return 0;
    }
    if (*canon_cmd) {
      const zh::GaussCode d = parse_or_throw(read_code(code));
      const zh::AlexanderSystem canon = zh::canonicalize_alexander_system(zh::zh_op_system(d));
      if (json) {
        print_json(zh::to_json(canon));
      } else {
        std::cout << "system: " << zh::format_gauss_code(canon.code) << '\n'
                  << "gamma component: " << canon.gamma << '\n'
                  << "labels: " << nlohmann::json(canon.labels).dump() << '\n'
                  << "split: " << (canon.code.component(canon.gamma).empty() ? "yes" : "no") << '\n';
      }
      return 0;
    }
    if (*fuzz_cmd) {
      if (quandles.empty()) quandles = {"trivial:2", "dihedral:3", "dihedral:4"};
      return run_fuzz(read_code(code), steps, seed, kinds, report_options(quandles, cocycle, false, 1),
                      max_crossings);
    }
    if (*q_list) {
      const auto all = zh::builtin_quandles(max_size);
      if (json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& x : all) j.push_back(x.to_json());
        print_json(j);
      } else {
        for (const auto& x : all) std::cout << x.name() << " (size " << x.size() << ")\n";
      }
      return 0;
    }
  } catch (const zh::ParseError& e) {
    std::cerr << "parse error at position " << e.position() << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const zh::StateLimitExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInconsistent;
  }
  return 0;
}
