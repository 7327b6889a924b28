#include "zh/report.hpp"

#include <sstream>

#include "zh/alexander.hpp"

namespace zh {

std::string set_to_string(const std::set<int>& s) {
  std::string out = "{";
  for (int v : s) out += (out.size() > 1 ? ", " : "") + std::to_string(v);
  return out + "}";
}

std::optional<NamedCocycle> cocycle_from_name(const std::string& name) {
  if (name == "cjkls") return NamedCocycle{"cjkls", cjkls_cocycle()};
  return std::nullopt;
}

InvariantReport compute_report(const GaussCode& d, const ReportOptions& options) {
  InvariantReport r;
  r.code = format_gauss_code(d);
  r.components = d.component_count();
  r.crossings = d.crossing_count();
  r.writhe = writhe(d);
  r.numerable = is_alexander_numerable(d);
  r.dkm_bracket = dkm_bracket(d, options.bracket);
  r.zh_bracket = zh_bracket(d, options.bracket);
  r.dkm = normalize(r.dkm_bracket, r.writhe);
  r.zh = normalize(r.zh_bracket, r.writhe);
  r.jones = jones_style_polynomial(d, options.bracket);
  r.as_set = as_set(r.dkm_bracket);

  const QuandlePresentation plain = presentation(d);
  const QuandlePresentation extended = extended_presentation(d);
  for (const FiniteQuandle& x : options.quandles) {
    QuandleResult q;
    q.quandle = x.name();
    q.size = x.size();
    q.colorings = count_colorings(plain, x);
    q.extended_colorings = count_colorings(extended, x);
    if (options.cocycle && options.cocycle->phi.n == x.size() && check_cocycle(x, options.cocycle->phi)) {
      q.cocycle = options.cocycle->name;
      q.cocycle_value = cocycle_invariant(plain, x, options.cocycle->phi);
      q.extended_cocycle_value = cocycle_invariant(extended, x, options.cocycle->phi);
    }
    r.quandles.push_back(std::move(q));
  }

  if (r.dkm_bracket != r.zh_bracket)
    r.inconsistencies.push_back("dkm bracket " + r.dkm_bracket.to_string() + " differs from zh bracket " +
                                r.zh_bracket.to_string('Z'));
  if (r.numerable && r.as_set != std::set<int>{0})
    r.inconsistencies.push_back("numerable diagram with as set " + set_to_string(r.as_set));
  if (r.numerable)
    for (const QuandleResult& q : r.quandles)
      if (q.extended_colorings != q.colorings * static_cast<std::uint64_t>(q.size))
        r.inconsistencies.push_back("numerable diagram whose extended colorings by " + q.quandle +
                                    " are not |X| times its colorings");
  return r;
}

std::string InvariantReport::to_text() const {
  std::ostringstream out;
  out << "code: " << (code.empty() ? "(unknot)" : code) << '\n'
      << "components: " << components << '\n'
      << "crossings: " << crossings << '\n'
      << "writhe: " << writhe << '\n'
      << "alexander numerable: " << (numerable ? "yes" : "no") << '\n'
      << "dkm bracket: " << dkm_bracket.to_string('K') << '\n'
      << "zh bracket: " << zh_bracket.to_string('Z') << '\n'
      << "dkm polynomial: " << dkm.to_string('K') << '\n'
      << "zh polynomial: " << zh.to_string('Z') << '\n'
      << "jones-style polynomial: " << jones.to_string('K') << '\n'
      << "as set: " << set_to_string(as_set) << '\n';
  for (const QuandleResult& q : quandles) {
    out << "quandle " << q.quandle << ": colorings " << q.colorings << ", extended colorings "
        << q.extended_colorings << '\n';
    if (q.cocycle)
      out << "  cocycle " << *q.cocycle << ": " << q.cocycle_value->to_string() << ", extended "
          << q.extended_cocycle_value->to_string() << '\n';
  }
  for (const std::string& s : inconsistencies) out << "INCONSISTENT: " << s << '\n';
  return out.str();
}

nlohmann::json InvariantReport::to_json() const {
  nlohmann::json qs = nlohmann::json::array();
  for (const QuandleResult& q : quandles) {
    nlohmann::json j = {{"quandle", q.quandle},
                        {"size", q.size},
                        {"colorings", q.colorings},
                        {"extended_colorings", q.extended_colorings}};
    if (q.cocycle) {
      j["cocycle"] = *q.cocycle;
      j["cocycle_value"] = q.cocycle_value->to_string();
      j["extended_cocycle_value"] = q.extended_cocycle_value->to_string();
    }
    qs.push_back(std::move(j));
  }
  return {{"code", code},
          {"components", components},
          {"crossings", crossings},
          {"writhe", writhe},
          {"numerable", numerable},
          {"dkm_bracket", dkm_bracket.to_string('K')},
          {"zh_bracket", zh_bracket.to_string('Z')},
          {"dkm_polynomial", dkm.to_string('K')},
          {"zh_polynomial", zh.to_string('Z')},
          {"jones_polynomial", jones.to_string('K')},
          {"as_set", std::vector<int>(as_set.begin(), as_set.end())},
          {"quandles", qs},
          {"inconsistencies", inconsistencies}};
}

std::map<std::string, std::string> invariant_registry(const InvariantReport& r) {
  std::map<std::string, std::string> out{
      {"dkm polynomial", r.dkm.to_string('K')},
      {"zh polynomial", r.zh.to_string('Z')},
      {"jones-style polynomial", r.jones.to_string('K')},
      {"as set", set_to_string(r.as_set)},
      {"numerable", r.numerable ? "yes" : "no"},
  };
  for (const QuandleResult& q : r.quandles) {
    out["colorings " + q.quandle] = std::to_string(q.colorings);
    out["extended colorings " + q.quandle] = std::to_string(q.extended_colorings);
    if (q.cocycle) {
      out["cocycle " + *q.cocycle + " " + q.quandle] = q.cocycle_value->to_string();
      out["extended cocycle " + *q.cocycle + " " + q.quandle] = q.extended_cocycle_value->to_string();
    }
  }
  return out;
}

std::map<std::string, std::string> extended_registry(const GaussCode& zh_code, int omega, const ReportOptions& options) {
  std::map<std::string, std::string> out;
  const QuandlePresentation p = presentation(zh_code);
  for (const FiniteQuandle& x : options.quandles) {
    out["extended colorings " + x.name()] = std::to_string(count_colorings(p, x));
    if (options.cocycle && options.cocycle->phi.n == x.size() && check_cocycle(x, options.cocycle->phi))
      out["extended cocycle " + options.cocycle->name + " " + x.name()] =
          cocycle_invariant(p, x, options.cocycle->phi).to_string();
  }
  int k = 0;
  for (int c = 0; c < zh_code.component_count(); ++c)
    if (c != omega) out["vlk omega " + std::to_string(k++)] = std::to_string(vlk(zh_code, omega, c));
  return out;
}

}  // namespace zh
