// Acceptance suite: one PASS/FAIL line per criterion; exits non-zero when
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "zh/alexander.hpp"
#include "zh/bracket.hpp"
#include "zh/coloring.hpp"
#include "zh/moves.hpp"
#include "zh/report.hpp"

using namespace zh;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "failed: " << what << "; ";
    pass = pass && ok;
  }
};

int failures = 0;

void criterion(int n, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  char time[32];
  std::snprintf(time, sizeof time, "%.2fs", secs);
  std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << n << ": " << title << " [" << time << "] "
            << o.detail.str() << std::endl;
}

const std::vector<MoveKind> kReidemeister{MoveKind::R1Insert, MoveKind::R1Delete, MoveKind::R2Insert,
                                          MoveKind::R2Delete, MoveKind::R3};

std::vector<GaussCode> fuzz_bases() {
  return {parse_gauss_code(diagrams::kVirtualTrefoil), parse_gauss_code(diagrams::kTrefoil),
          parse_gauss_code(diagrams::kHopf), parse_gauss_code("O1-U2+O3-U1-O2+U3-"),
          parse_gauss_code("O1+U2-O3+,U1+O2-U3+")};
}

}  // namespace

int main() {
  const GaussCode vtref = parse_gauss_code(diagrams::kVirtualTrefoil);
  const GaussCode unknot;

  criterion(1, "DKM bracket of the virtual trefoil", [&](Outcome& o) {
    auto t0 = std::chrono::steady_clock::now();
    ArrowPolynomial b = dkm_bracket(vtref);
    ArrowPolynomial expected = parse_arrow_polynomial("A^2 + K1 - A^-4*K1");
    o.require(b == expected, "bracket " + b.to_string());
    o.require(dkm_polynomial(vtref) == expected.shifted(-6), "normalized " + dkm_polynomial(vtref).to_string());
    o.require(std::chrono::steady_clock::now() - t0 < std::chrono::seconds(1), "under one second");
    o.detail << "<<D>> = " << b.to_string() << ", normalized " << dkm_polynomial(vtref).to_string();
  });

  criterion(2, "Zh bracket of the virtual trefoil equals the DKM bracket", [&](Outcome& o) {
    ArrowPolynomial z = zh_bracket(vtref);
    o.require(z.to_string('Z') == "A^2 + Z1 - A^-4*Z1", "zh bracket " + z.to_string('Z'));
    o.require(z == dkm_bracket(vtref), "Z -> K substitution");
    o.detail << "<<D>>_zh = " << z.to_string('Z');
  });

  criterion(3, "DKM bracket = Zh bracket, exhaustive to 4 crossings and 200 random codes to 8", [&](Outcome& o) {
    std::size_t exhaustive = 0;
    for (int c = 0; c <= 4; ++c)
      for (const GaussCode& d : oracle::all_knot_codes(c)) {
        ++exhaustive;
        if (dkm_bracket(d) != zh_bracket(d)) o.require(false, format_gauss_code(d));
      }
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 200; ++i) {
      GaussCode d = oracle::random_code(rng, 1 + static_cast<int>(rng() % 8), 1 + static_cast<int>(rng() % 3));
      if (dkm_bracket(d) != zh_bracket(d)) o.require(false, format_gauss_code(d));
    }
    o.detail << exhaustive << " exhaustive codes, 200 random codes";
  });

  criterion(4, "AS sets", [&](Outcome& o) {
    o.require(as_set(vtref) == std::set<int>{0, 1}, "virtual trefoil");
    o.require(as_set(unknot) == std::set<int>{0}, "unknot");
    o.require(as_set(parse_gauss_code(diagrams::kTrefoil)) == std::set<int>{0}, "trefoil");
    std::mt19937_64 rng(77);
    int numerable = 0;
    for (int i = 0; i < 3000 && numerable < 100; ++i) {
      GaussCode d = oracle::random_code(rng, 1 + static_cast<int>(rng() % 6), 1 + static_cast<int>(rng() % 2));
      if (!is_alexander_numerable(d)) continue;
      ++numerable;
      if (as_set(d) != std::set<int>{0}) o.require(false, "numerable " + format_gauss_code(d));
    }
    o.require(numerable >= 50, "enough numerable samples");
    // The standard virtual trefoil diagram has one virtual crossing.
    o.require(*as_set(vtref).rbegin() <= 1, "max AS <= v(D) = 1");
    o.detail << "AS(vtref) = " << set_to_string(as_set(vtref)) << ", " << numerable << " numerable diagrams with {0}";
  });

  criterion(5, "extended colorings of the virtual trefoil by alexander:7:3", [&](Outcome& o) {
    FiniteQuandle x = make_alexander(7, 3);
    const std::uint64_t n = extended_colorings(vtref, x);
    o.require(n == 7, "backtracking count " + std::to_string(n));
    ModMatrix published({{0, 0, 3, 6, 5, 0, 0},
                     {3, 5, 6, 0, 0, 0, 0},
                     {6, 0, 0, 0, 3, 0, 5},
                     {0, 6, 0, 0, 0, 3, 5},
                     {0, 6, 0, 3, 0, 0, 5},
                     {0, 0, 0, 0, 3, 6, 5}},
                    7, 7);
    o.require(nullity_mod_prime(published, 7) == 1, "nullity of the 6x7 matrix");
    QuandlePresentation p = extended_presentation(vtref, {Side::Right, Side::Left});
    o.require(nullity_mod_prime(relation_matrix(p, x), 7) == 1, "nullity of the computed matrix");
    o.require(extended_colorings(unknot, x) == 49, "unknot gives 49");
    o.detail << "count " << n << ", nullity 1, unknot 49";
  });

  criterion(6, "extended colorings by dihedral:4 match the 16-column table", [&](Outcome& o) {
    FiniteQuandle x = make_dihedral(4);
    std::vector<Coloring> cs;
    QuandlePresentation p = extended_presentation(vtref, {Side::Right, Side::Left});
    const std::uint64_t n = count_colorings(p, x, &cs);
    o.require(n == 16, "count " + std::to_string(n));
    const int rows[7][16] = {{0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3},   // a
                             {0, 0, 2, 2, 1, 1, 3, 3, 0, 0, 2, 2, 1, 1, 3, 3},   // b
                             {0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3},   // c
                             {0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3},   // d
                             {0, 0, 2, 2, 1, 1, 3, 3, 0, 0, 2, 2, 1, 1, 3, 3},   // e
                             {0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3},   // f
                             {0, 2, 1, 3, 1, 3, 0, 2, 1, 3, 0, 2, 0, 2, 1, 3}};  // v
    const int generator_of[7] = {2, 5, 3, 4, 1, 0, 6};  // a..f, v
    std::set<Coloring> table, ours(cs.begin(), cs.end());
    for (int col = 0; col < 16; ++col) {
      Coloring c(7);
      for (int r = 0; r < 7; ++r) c[generator_of[r]] = rows[r][col];
      table.insert(c);
    }
    o.require(table == ours, "coloring set");
    o.detail << n << " colorings, set equal to the table";
  });

  criterion(7, "cocycle invariants with the CJKLS cocycle", [&](Outcome& o) {
    FiniteQuandle x = make_dihedral(4);
    GroupRingElement ext = extended_cocycle_invariant(vtref, x, cjkls_cocycle(), {Side::Right, Side::Left});
    GroupRingElement plain = cocycle_invariant(vtref, x, cjkls_cocycle());
    o.require(plain.to_string() == "4", "plain value " + plain.to_string());
    o.require(ext.to_string() == "14 + 2u", "extended value " + ext.to_string() + ", expected 14 + 2u");
    o.detail << "extended " << ext.to_string() << ", plain " << plain.to_string();
  });

  criterion(8, "unknot: extended colorings |X|^2 and cocycle value |X|^2", [&](Outcome& o) {
    std::vector<FiniteQuandle> xs{make_trivial(1), make_trivial(2), make_trivial(3), make_dihedral(3),
                                  make_dihedral(4), make_dihedral(5), make_alexander(5, 2), make_alexander(7, 3)};
    for (const FiniteQuandle& x : xs) {
      const std::uint64_t sq = static_cast<std::uint64_t>(x.size()) * x.size();
      o.require(extended_colorings(unknot, x) == sq, x.name() + " colorings");
      GroupRingElement expected;
      expected.add(0, static_cast<std::int64_t>(sq));
      o.require(extended_cocycle_invariant(unknot, x, TwoCocycle::trivial(x.size())) == expected, x.name() + " cocycle");
    }
    o.require(extended_cocycle_invariant(unknot, make_dihedral(4), cjkls_cocycle()).to_string() == "16", "cjkls");
    o.detail << xs.size() << " quandles";
  });

  criterion(9, "invariance fuzz along R-move and omega-move walks", [&](Outcome& o) {
    ReportOptions opt;
    opt.quandles = {make_trivial(2), make_dihedral(3), make_dihedral(4), make_alexander(5, 2)};
    opt.cocycle = cocycle_from_name("cjkls");
    opt.bracket.threads = 1;
    int steps = 0, seed = 0;
    for (const GaussCode& d : fuzz_bases()) {
      ++seed;
      const auto reference = invariant_registry(compute_report(d, opt));
      for (const WalkStep& s : random_walk(d, 200, static_cast<std::uint64_t>(seed), WalkOptions{kReidemeister}).steps) {
        ++steps;
        if (invariant_registry(compute_report(s.code, opt)) != reference)
          o.require(false, "R-walk from " + format_gauss_code(d) + " at " + describe(s.site));
      }
      ZhDiagram z = zh_construct(d, Orientation::Standard);
      WalkOptions omega{{MoveKind::OmegaOCC, MoveKind::OmegaReconnect}};
      omega.omega = z.omega;
      const auto ext_reference = extended_registry(z.code, z.omega, opt);
      for (const WalkStep& s : random_walk(z.code, 200, 100 + static_cast<std::uint64_t>(seed), omega).steps) {
        ++steps;
        if (extended_registry(s.code, z.omega, opt) != ext_reference)
          o.require(false, "omega walk from " + format_gauss_code(d) + " at " + describe(s.site));
      }
    }
    o.detail << steps << " steps checked";
  });

  criterion(10, "AS-move perturbations canonicalize to one system", [&](Outcome& o) {
    std::mt19937_64 rng(10);
    int perturbations = 0;
    const std::vector<MoveKind> kinds{MoveKind::AS1,  MoveKind::AS2A, MoveKind::AS2B,     MoveKind::AS3A,
                                      MoveKind::AS3B, MoveKind::OmegaOCC, MoveKind::OmegaReconnect};
    for (const GaussCode& d : fuzz_bases()) {
      const AlexanderSystem canon = canonicalize_alexander_system(zh_op_system(d));
      for (int p = 0; p < 100; ++p) {
        ++perturbations;
        AlexanderSystem s = canon;
        const int length = 1 + static_cast<int>(rng() % 8);
        for (int k = 0; k < length; ++k) {
          std::vector<MoveSite> sites;
          for (MoveKind kind : kinds)
            for (const MoveSite& m : enumerate_as_sites(s, kind)) sites.push_back(m);
          s = as_move(s, sites[rng() % sites.size()]);
          if (!verify_alexander_system(s).ok) o.require(false, "move broke the system");
        }
        if (!(canonicalize_alexander_system(s) == canon)) o.require(false, "orbit of " + format_gauss_code(d));
      }
    }
    o.detail << perturbations << " perturbations over 5 bases";
  });

  criterion(11, "pole reduction is confluent", [&](Outcome& o) {
    std::mt19937_64 rng(11);
    int exhaustive = 0, sampled = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      const int len = 2 * static_cast<int>(rng() % 7);
      std::vector<int> sigma;
      std::vector<PoleToken> tokens;
      int sum = 0;
      for (int i = 0; i < len; ++i) {
        int s = rng() % 2 ? 1 : -1;
        sigma.push_back(s);
        tokens.push_back({i, ArcType::InIn, s});
        sum += s;
      }
      const int expected = std::abs(sum) / 2;
      if (reduce_poles(tokens) != expected) o.require(false, "stack reduction");
      if (len <= 8) {
        ++exhaustive;
        if (oracle::all_reduction_results(sigma) != std::set<int>{expected}) o.require(false, "some order differs");
        continue;
      }
      ++sampled;
      for (int order = 0; order < 50; ++order) {
        std::vector<int> s = sigma;
        for (;;) {
          std::vector<int> pairs;
          for (int i = 0; i < static_cast<int>(s.size()) && s.size() >= 2; ++i)
            if (s[i] == -s[(i + 1) % s.size()]) pairs.push_back(i);
          if (pairs.empty()) break;
          int i = pairs[rng() % pairs.size()];
          int j = (i + 1) % static_cast<int>(s.size());
          s.erase(s.begin() + std::max(i, j));
          s.erase(s.begin() + std::min(i, j));
        }
        if (static_cast<int>(s.size()) / 2 != expected) o.require(false, "sampled order differs");
      }
    }
    o.detail << exhaustive << " sequences exhaustively, " << sampled << " sampled";
  });

  criterion(12, "adjoining v preserves the quandle axioms", [&](Outcome& o) {
    int count = 0;
    for (const FiniteQuandle& x : builtin_quandles(12)) {
      ++count;
      FiniteQuandle xv = adjoin_v(x);
      if (auto why = quandle_axiom_violation(xv.size(), xv.table())) o.require(false, x.name() + ": " + *why);
    }
    o.detail << count << " built-in quandles";
  });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
