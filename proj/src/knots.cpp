#include "qfarey/knots.hpp"

#include "qfarey/error.hpp"
#include "qfarey/farey.hpp"
#include "qfarey/qcore.hpp"

namespace qfarey {

namespace {

void require_above_one(const NegativeCF& alpha) {
  // For a valid expansion, alpha > 1 exactly when c1 >= 2.
  if (alpha.empty() || alpha.terms()[0] < 2) {
    throw Error(ErrorKind::DomainError, alpha.to_string() + " does not parametrize a rational knot (needs alpha > 1)");
  }
}

std::int64_t jones_degree(const NegativeCF& alpha) {
  return alpha.weight() - static_cast<std::int64_t>(alpha.size()) + 1;
}

LaurentPoly recurse(const NegativeCF& alpha) {
  if (alpha.empty()) return LaurentPoly::q_power(1);
  if (alpha.size() == 1 && alpha.last() == 1) return LaurentPoly(1L);
  const FareyDecomposition d = parents(alpha);
  return recurse(d.beta) + shift(recurse(d.gamma), d.last_entry - 1);
}

}  // namespace

JonesPoly jones_closed(const NegativeCF& alpha) {
  require_above_one(alpha);
  const std::int64_t m = jones_degree(alpha);
  return {shift(invert_variable(continuant_flat(alpha.terms())), m), m};
}

JonesPoly jones_recursive(const NegativeCF& alpha) {
  require_above_one(alpha);
  return {recurse(alpha), jones_degree(alpha)};
}

LaurentPoly jones_abs(const NegativeCF& alpha) {
  require_above_one(alpha);
  return continuant_flat(alpha.terms());
}

}  // namespace qfarey
