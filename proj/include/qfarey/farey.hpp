#pragma once

// Farey neighbours and mediants, the (beta, gamma) parent decomposition of
// a negative continued fraction, the two q-deformed Farey sums, and the
// weighted tessellation / triangulation built from them.

#include <cstdint>
#include <vector>

#include "qfarey/contfrac.hpp"
#include "qfarey/laurent.hpp"
#include "qfarey/qcore.hpp"

namespace qfarey {

bool farey_neighbors(const Rational& x, const Rational& y);

/// (r + r') / (s + s'). Throws NotNeighbors unless |s r' - r s'| = 1.
Rational mediant(const Rational& x, const Rational& y);

/// alpha = beta # gamma with the data the q-deformed sums need.
///
/// Let l be the last position with c_l != 2. When c_l > 2, beta is
/// [[c1, ..., c_l - 1]]. When c_l = 1 (so l = 1 and alpha < 1) beta is 0,
/// stored as [[1, 1]]. When every entry is 2, beta is [[1]]. In all cases
/// run_exponent = k - l + 1 (k when there is no such l) and gamma is
/// [[c1, ..., c_{k-1}]], empty for k = 1.
struct FareyDecomposition {
  NegativeCF beta;
  NegativeCF gamma;
  std::int64_t run_exponent;
  std::int64_t last_entry;
};

/// Throws NoParents for [[]] and [[1]], DomainError for [[1, 1]].
FareyDecomposition parents(const NegativeCF& alpha);

/// (R_b + q^(c_k - 1) R_g) / (S_b + q^(c_k - 1) S_g).
QRatFunc qfarey_sum_sharp(const QRatFunc& beta, const QRatFunc& gamma, std::int64_t last_entry);

/// (q^e R_b + R_g) / (q^e S_b + S_g) with e the run exponent.
QRatFunc qfarey_sum_flat(const QRatFunc& beta, const QRatFunc& gamma, std::int64_t run_exponent);

/// Farey triangle with q-exponents on its three edges. For the flat flavor
/// the gamma-alpha edge carries q^0 and the beta-alpha edge carries one more
/// than the beta-gamma edge. The sharp flavor mirrors this: the gamma-alpha
/// edge carries q^(c_k - 1), the beta-alpha edge q^0.
struct WeightedTriangle {
  Rational beta;
  Rational gamma;
  Rational alpha;
  std::int64_t w_beta_alpha = 0;
  std::int64_t w_gamma_alpha = 0;
  std::int64_t w_beta_gamma = 0;
  int level = 0;
};

/// The initial triangle (0, inf, 1) followed by 2^d triangles per level d,
/// each level ordered left to right by alpha.
std::vector<WeightedTriangle> tessellation(int depth, Flavor flavor);

/// The initial triangle and one triangle per vertex on the Stern-Brocot
/// path from 1 down to alpha. Requires 0 < alpha < inf.
std::vector<WeightedTriangle> triangulation(const Rational& alpha, Flavor flavor);

}  // namespace qfarey
