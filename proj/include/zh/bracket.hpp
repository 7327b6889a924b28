#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "zh/arrow_polynomial.hpp"
#include "zh/gauss_code.hpp"
#include "zh/smoothing.hpp"
#include "zh/zh_construct.hpp"

namespace zh {

enum class ArcType { InIn, OutOut };

/// A pole left on a state loop where it runs through a disoriented
/// smoothing. sigma = crossing sign * (+1 for InIn, -1 for OutOut) *
/// (+1 when the loop enters along the over strand, -1 along the under strand).
struct PoleToken {
  int crossing = 0;
  ArcType arc = ArcType::InIn;
  int sigma = 1;
};

/// Cancels cyclically adjacent poles of opposite sigma until all survivors
/// agree; returns half the number of survivors.
int reduce_poles(std::span<const PoleToken> tokens);

/// Pole tokens of every loop of a state, in traversal order. Loops of
/// crossing-free components come last with no tokens.
std::vector<std::vector<PoleToken>> state_poles(const GaussCode& d, std::span<const Smoothing> state);

/// The smoothing that carries coefficient A at a crossing of this sign.
inline Smoothing a_smoothing(int sign) { return sign > 0 ? Smoothing::Oriented : Smoothing::Disoriented; }

class StateLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BracketOptions {
  // Refuse state sums over more than 2^max_log2_states states unless forced.
  int max_log2_states = 20;
  bool force = false;
  // 0 picks the hardware concurrency.
  unsigned threads = 0;
};

ArrowPolynomial kauffman_bracket(const GaussCode& d, const BracketOptions& opt = {});
ArrowPolynomial dkm_bracket(const GaussCode& d, const BracketOptions& opt = {});

/// Expands only the base crossings of Zh^op(D); each loop gets Z_{|vlk|/2}
/// where vlk counts omega's signed passages over the loop.
ArrowPolynomial zh_bracket(const GaussCode& d, const BracketOptions& opt = {});
/// Same, for an explicit Zh diagram (any omega placement or orientation).
ArrowPolynomial zh_bracket(const ZhDiagram& z, const BracketOptions& opt = {});

ArrowPolynomial dkm_polynomial(const GaussCode& d, const BracketOptions& opt = {});
ArrowPolynomial zh_polynomial(const GaussCode& d, const BracketOptions& opt = {});
/// Writhe-normalized Kauffman bracket (the Jones polynomial in A).
ArrowPolynomial jones_style_polynomial(const GaussCode& d, const BracketOptions& opt = {});

/// k-degrees of the monomials of the DKM bracket.
std::set<int> as_set(const GaussCode& d, const BracketOptions& opt = {});
std::set<int> as_set(const ArrowPolynomial& dkm);

}  // namespace zh
