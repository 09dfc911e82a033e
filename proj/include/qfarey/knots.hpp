#pragma once

// Normalized Jones polynomials of rational knots from left q-rationals:
// closed form q^m R_flat(q^-1), the Farey recursion, and |V|.

#include <cstdint>

#include "qfarey/contfrac.hpp"
#include "qfarey/laurent.hpp"

namespace qfarey {

struct JonesPoly {
  LaurentPoly poly;
  std::int64_t degree = 0;  // sum(c) - k + 1

  friend bool operator==(const JonesPoly&, const JonesPoly&) = default;
};

/// q^m R_flat(q^-1) with m = sum(c) - k + 1. DomainError unless alpha > 1.
JonesPoly jones_closed(const NegativeCF& alpha);

/// J_alpha = J_beta + q^(c_k - 1) J_gamma over the Farey parents, with
/// J_[[1]] = 1 and J_[[]] = q. DomainError unless alpha > 1.
JonesPoly jones_recursive(const NegativeCF& alpha);

/// R_flat(q): the Jones polynomial with all coefficients made positive,
/// whose coefficients are those of J_alpha read backwards.
LaurentPoly jones_abs(const NegativeCF& alpha);

}  // namespace qfarey
