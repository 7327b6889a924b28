#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "zh/bracket.hpp"
#include "zh/smoothing.hpp"

using namespace zh;

namespace {

oracle::Laurent laurent_of(const ArrowPolynomial& p) {
  REQUIRE(p.k_free());
  return oracle::forget_k(p);
}

}  // namespace

TEST_CASE("bracket values of the example diagrams") {
  GaussCode v = parse_gauss_code(diagrams::kVirtualTrefoil);
  CHECK(dkm_bracket(v).to_string('K') == "A^2 + K1 - A^-4*K1");
  CHECK(zh_bracket(v).to_string('Z') == "A^2 + Z1 - A^-4*Z1");
  CHECK(kauffman_bracket(v).to_string() == "A^2 + 1 - A^-4");
  GaussCode t = parse_gauss_code(diagrams::kTrefoil);
  for (const auto& p : {kauffman_bracket(t), dkm_bracket(t), zh_bracket(t)})
    CHECK(p.to_string() == "-A^5 - A^-3 + A^-7");
  CHECK(dkm_bracket(parse_gauss_code(diagrams::kHopf)).to_string() == "-A^4 - A^-4");
  CHECK(dkm_bracket(GaussCode()).to_string() == "1");
  // Two disjoint circles.
  CHECK(kauffman_bracket(parse_gauss_code(",")).to_string() == "-A^2 - A^-2");
}

TEST_CASE("Kauffman bracket agrees with the endpoint-graph oracle") {
  for (int c = 0; c <= 3; ++c)
    for (const GaussCode& d : oracle::all_knot_codes(c)) {
      CAPTURE(format_gauss_code(d));
      CHECK(laurent_of(kauffman_bracket(d)) == oracle::kauffman_bracket(d));
    }
  std::mt19937_64 rng(8);
  for (int i = 0; i < 60; ++i) {
    GaussCode d = oracle::random_code(rng, static_cast<int>(rng() % 8), 1 + static_cast<int>(rng() % 3));
    CAPTURE(format_gauss_code(d));
    CHECK(laurent_of(kauffman_bracket(d)) == oracle::kauffman_bracket(d));
  }
}

TEST_CASE("setting every K to 1 recovers the Kauffman bracket") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 80; ++i) {
    GaussCode d = oracle::random_code(rng, static_cast<int>(rng() % 8), 1 + static_cast<int>(rng() % 2));
    CAPTURE(format_gauss_code(d));
    CHECK(oracle::forget_k(dkm_bracket(d)) == oracle::kauffman_bracket(d));
  }
}

TEST_CASE("mirror image inverts A") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 40; ++i) {
    GaussCode d = oracle::random_code(rng, static_cast<int>(rng() % 7), 1 + static_cast<int>(rng() % 2));
    CHECK(dkm_bracket(mirror(d)) == dkm_bracket(d).inverted_a());
  }
}

TEST_CASE("dkm and zh brackets agree on every code with up to three crossings") {
  for (int c = 0; c <= 3; ++c)
    for (const GaussCode& d : oracle::all_knot_codes(c)) {
      CAPTURE(format_gauss_code(d));
      CHECK(dkm_bracket(d) == zh_bracket(d));
    }
}

TEST_CASE("zh bracket does not depend on where omega is placed") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 40; ++i) {
    GaussCode d = oracle::random_code(rng, 1 + static_cast<int>(rng() % 6), 1 + static_cast<int>(rng() % 2));
    std::vector<Side> sides;
    for (int k = 0; k < d.crossing_count(); ++k) sides.push_back(rng() % 2 ? Side::Left : Side::Right);
    CHECK(zh_bracket(zh_construct(d, Orientation::Op, sides)) == zh_bracket(d));
  }
}

TEST_CASE("pole reduction is confluent and equals half the signed sum") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 300; ++trial) {
    int len = 2 * static_cast<int>(rng() % 5);
    std::vector<PoleToken> tokens;
    std::vector<int> sigma;
    for (int i = 0; i < len; ++i) {
      int s = rng() % 2 ? 1 : -1;
      tokens.push_back({i, ArcType::InIn, s});
      sigma.push_back(s);
    }
    int sum = 0;
    for (int s : sigma) sum += s;
    int a = reduce_poles(tokens);
    CHECK(a == std::abs(sum) / 2);
    CHECK(oracle::all_reduction_results(sigma) == std::set<int>{a});
  }
  std::vector<PoleToken> odd{{1, ArcType::InIn, 1}};
  CHECK_THROWS(reduce_poles(odd));
}

TEST_CASE("state loops carry an even number of poles") {
  std::mt19937_64 rng(16);
  for (int i = 0; i < 40; ++i) {
    GaussCode d = oracle::random_code(rng, 1 + static_cast<int>(rng() % 5), 1);
    std::vector<Smoothing> state;
    for (int k = 0; k < d.crossing_count(); ++k) state.push_back(rng() % 2 ? Smoothing::Oriented : Smoothing::Disoriented);
    for (const auto& loop : state_poles(d, state)) CHECK(loop.size() % 2 == 0);
  }
}

TEST_CASE("as set") {
  CHECK(as_set(parse_gauss_code(diagrams::kVirtualTrefoil)) == std::set<int>{0, 1});
  CHECK(as_set(parse_gauss_code(diagrams::kTrefoil)) == std::set<int>{0});
  CHECK(as_set(GaussCode()) == std::set<int>{0});
}

TEST_CASE("state limit guard") {
  std::mt19937_64 rng(17);
  GaussCode big = oracle::random_code(rng, 21);
  CHECK_THROWS_AS(dkm_bracket(big), StateLimitExceeded);
  BracketOptions small;
  small.max_log2_states = 3;
  GaussCode four = oracle::random_code(rng, 4);
  CHECK_THROWS_AS(kauffman_bracket(four, small), StateLimitExceeded);
  small.force = true;
  CHECK_NOTHROW(kauffman_bracket(four, small));
}

TEST_CASE("thread count does not change the result") {
  std::mt19937_64 rng(18);
  GaussCode d = oracle::random_code(rng, 13, 2);
  BracketOptions one, many;
  one.threads = 1;
  many.threads = 4;
  CHECK(dkm_bracket(d, one) == dkm_bracket(d, many));
  CHECK(zh_bracket(d, one) == zh_bracket(d, many));
}
