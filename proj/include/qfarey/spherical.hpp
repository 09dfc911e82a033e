#pragma once

// Closed-form realizations of the functionals occ_q and hom_q on the
// spherical objects X_alpha, the twist words defining X_alpha, the linear
// change of basis between the two functionals, and the Farey-sum identities
// they satisfy.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qfarey/contfrac.hpp"
#include "qfarey/laurent.hpp"

namespace qfarey {

enum class Twist { Sigma1, Sigma2 };

/// Product of spherical twists, leftmost letter outermost.
struct TwistWord {
  std::vector<std::pair<Twist, std::int64_t>> letters;

  std::string to_string() const;
  friend bool operator==(const TwistWord&, const TwistWord&) = default;
};

/// Drops zero exponents and merges adjacent letters with the same twist.
TwistWord normalize(TwistWord w);

/// sigma1^-a1 sigma2^a2 ... sigma1^-a(2m-1) sigma2^a2m, normalized.
TwistWord twist_word_regular(const RegularCF& a);

/// sigma1^(-c1+1) sigma2 sigma1^(-c2+2) sigma2 ... sigma1^(-ck+2) sigma2,
/// normalized.
TwistWord twist_word_negative(const NegativeCF& c);

/// Values of a functional at P1 and P2.
struct FunctionalPair {
  LaurentPoly at_p1;
  LaurentPoly at_p2;

  friend bool operator==(const FunctionalPair&, const FunctionalPair&) = default;
};

/// occ_q(P_i, X_alpha): q^(1-k) (S#, R#) at (P1, P2).
FunctionalPair occ(const NegativeCF& alpha);

/// hom_q(X_alpha, P_i): (q^-(D+2) S_flat, q^-(D+1) R_flat) at (P1, P2),
/// with D = sum(c_j - 2).
FunctionalPair hom(const NegativeCF& alpha);

/// The same formulas for an arbitrary term list, k being its length. The
/// empty list is X for infinity; [0] (rather than [[1, 1]]) is the length-one
/// form for zero that the Farey identities need.
FunctionalPair occ_closed_form(std::span<const std::int64_t> c);
FunctionalPair hom_closed_form(std::span<const std::int64_t> c);

/// hom_q(P1, X) = q^-1 occ_q(P1, X) + (1 - q^-1) occ_q(P2, X)
/// hom_q(P2, X) = (q^-2 - q^-1) occ_q(P1, X) + q^-1 occ_q(P2, X)
FunctionalPair occ_to_hom(const FunctionalPair& o);

/// Inverse of occ_to_hom. The inverse has determinant 1 / (q^2 - q + 1)
/// times a unit, so it throws NotDivisible outside the image.
FunctionalPair hom_to_occ(const FunctionalPair& h);

/// Result of checking the Farey-sum identities for occ and hom on alpha:
///   occ(X_a) = q^(l-k) occ(X_b) + q^(c_k-2) occ(X_g)
///   hom(X_a) = q^(3(k-l) - sum_{j>l} c_j) hom(X_b) + q^g hom(X_g)
/// The hom identity is checked with g = c_k + 2 and with g = 2 - c_k; only
/// the second holds in general (see the README).
struct FareyIdentityReport {
  bool occ_ok = false;
  bool hom_ck_plus_2_ok = false;
  bool hom_2_minus_ck_ok = false;

  bool ok() const { return occ_ok && hom_2_minus_ck_ok; }
};

/// Propagates NoParents from parents().
FareyIdentityReport farey_identity_check(const NegativeCF& alpha);

}  // namespace qfarey
