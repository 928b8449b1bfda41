#pragma once

#include <unordered_map>

#include "qgw/qfun.hpp"

namespace qgw {

/// Degreewise automorphism of the free matrix-generator algebra induced by the
/// generator-representation cocycle, built by the block recursion
/// Omega_n = (Omega_m x Omega_k) . F_(m,k). `transport` is the direction that
/// carries FRT-presentation relation spans onto RE-presentation spans; the
/// central letter f passes through untouched.
class GeneratorCocycle {
 public:
  explicit GeneratorCocycle(const RMatrixData& rd);

  int N() const { return n_; }

  NCPoly transport(const NCPoly& p, const Alphabet& a) const;
  NCPoly transport_inv(const NCPoly& p, const Alphabet& a) const;

  /// Recursion step with an explicit leading-block size, for partition
  /// independence tests; w must be a pure matrix-letter word.
  NCPoly transport_word_split(const Word& w, const Alphabet& a, int m) const;

  /// Dense action on the two-letter word space (rows/cols index letter pairs
  /// t1 * N^2 + t2 over the f-free alphabet).
  QMatrix f2_matrix() const;

 private:
  int n_ = 0;
  QMatrix R_;
  QMatrix Rinv_;

  // Spread orders for the two elementary ops, fixed so that the degree-3
  // cocycle is independent of the chosen factorization.  Bit 0 reverses the
  // ordering of the first leg block, bit 1 the second (see src notes).
  static constexpr int kUpStyle = 1;
  static constexpr int kFlowStyle = 3;

  QMatrix spread_upper(int m, int k) const;
  QMatrix spread_flow(int m, int k) const;
  NCPoly apply_F(const NCPoly& p, const Alphabet& a, int m, int k, bool inverse) const;
  NCPoly transport_word(const Word& w, const Alphabet& a, bool inverse) const;

  mutable std::map<std::pair<int, int>, QMatrix> spread_memo_;
  mutable std::map<std::pair<int, int>, QMatrix> spread_inv_memo_;
  mutable std::unordered_map<Word, NCPoly, WordHash> fwd_memo_;
  mutable std::unordered_map<Word, NCPoly, WordHash> inv_memo_;
};

GeneratorCocycle generator_cocycle(const RMatrixData& rd);

/// Image of every relation under the forward (FRT -> RE) transport.
RelationSet transport_ideal(const RelationSet& w, const GeneratorCocycle& gc);

struct TwistReport {
  bool quadratic_match = false;  // transported FRT span == RE span at degree 2
  bool sharp_match = true;       // transported group relations == direct RE-side ones
  bool partition_independent = false;
  bool pass = false;
};
TwistReport verify_twist_correspondence(const RMatrixData& rd);

}  // namespace qgw
