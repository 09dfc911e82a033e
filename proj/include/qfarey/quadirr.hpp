#pragma once

// q-deformed real quadratic irrationals with a purely periodic negative
// continued fraction: surd forms (R + sqrt(P)) / S built three ways, their
// power series, and the convergent-stabilization definition of the series.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qfarey/laurent.hpp"

namespace qfarey {

/// Period c1..ck of [[c1, ..., ck, c1, ..., ck, ...]]. All entries >= 2 and at
/// least one >= 3; an all-2 period converges to the rational 1.
class PeriodicNegCF {
 public:
  explicit PeriodicNegCF(std::vector<std::int64_t> period);

  std::span<const std::int64_t> period() const noexcept { return period_; }
  std::size_t size() const noexcept { return period_.size(); }

  /// The period repeated n times.
  std::vector<std::int64_t> unrolled(std::size_t n) const;

 private:
  std::vector<std::int64_t> period_;
};

/// (R + sqrt(P)) / S with the branch of sqrt(P) whose lowest term is positive.
struct Surd {
  LaurentPoly r;
  LaurentPoly p;
  LaurentPoly s;

  friend bool operator==(const Surd&, const Surd&) = default;
};

/// R = E_k + q^(c_k-1) E'_{k-2},  P = (E_k - q^(c_k-1) E'_{k-2})^2 - 4 q^(sum(c_i - 1)),
/// S = 2 E_{k-1}(c2..ck), where E'_{k-2} = E#_{k-2}(c2..c_{k-1}).
Surd quad_surd(const PeriodicNegCF& p);

/// The same surd assembled from occ_q of X_alpha and X_gamma,
/// alpha = [[c1..ck]], gamma = [[c1..c_{k-1}]].
Surd quad_occ_form(const PeriodicNegCF& p);

/// The surd assembled from hom_q(P_i, X), where hom is obtained from occ
/// through occ_to_hom, with constant term c(q) under the square root.
Surd quad_hom_form(const PeriodicNegCF& p);

/// c(q) = q^(sum(c) - 3k) (q^4 - 2q^3 + 3q^2 - 2q + 1).
LaurentPoly hom_constant(const PeriodicNegCF& p);

/// lambda with b = (lambda R_a, lambda^2 P_a, lambda S_a) and lambda having a
/// positive lowest coefficient, so both surds have the same value. nullopt
/// when no such Laurent polynomial exists.
std::optional<LaurentPoly> surd_scale(const Surd& a, const Surd& b);

/// (R + sqrt_series(P)) / S through q^order.
PowerSeries quad_series(const PeriodicNegCF& p, int order);

/// Expands the sharp q-rational of n concatenated periods for n = 1, 2, ...
/// and returns once two consecutive n agree through q^order. Throws
/// NoStabilization if that does not happen by max_periods.
PowerSeries convergent_series(const PeriodicNegCF& p, int order, int max_periods);

/// The surd at q = 1: (r + sqrt(p)) / s with integers.
struct ClassicalSurd {
  BigInt r;
  BigInt p;
  BigInt s;

  double value() const;
};

ClassicalSurd at_one(const Surd& s);

}  // namespace qfarey
