#pragma once

// Exact arithmetic in Z[q, q^-1]: Laurent polynomials with GMP integer
// coefficients, projective numerator/denominator pairs, and truncated
// power series (including square roots) used for q-deformed irrationals.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qfarey {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// A finitely supported map from integer exponents to big-integer
/// coefficients. Stored densely from the lowest to the highest nonzero
/// exponent; both ends are always nonzero and the zero polynomial is empty.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const BigInt& constant);
  explicit LaurentPoly(long constant) : LaurentPoly(BigInt(constant)) {}

  /// Dense coefficients starting at q^low. Zeros at either end are trimmed.
  LaurentPoly(std::int64_t low, std::vector<BigInt> coeffs);

  static LaurentPoly monomial(const BigInt& coeff, std::int64_t exponent);
  static LaurentPoly q_power(std::int64_t exponent) { return monomial(BigInt(1), exponent); }
  static LaurentPoly from_terms(std::span<const std::pair<std::int64_t, BigInt>> terms);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monomial() const noexcept { return coeffs_.size() == 1; }

  // Both require a nonzero polynomial.
  std::int64_t min_degree() const;
  std::int64_t max_degree() const;

  BigInt coeff(std::int64_t exponent) const;

  /// Nonzero terms as (exponent, coefficient), exponent ascending.
  std::vector<std::pair<std::int64_t, BigInt>> terms() const;

  /// Coefficients from min_degree to max_degree, interior zeros included.
  const std::vector<BigInt>& dense() const noexcept { return coeffs_; }

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend LaurentPoly operator*(const BigInt& scalar, const LaurentPoly& p);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string to_string() const;

 private:
  void trim();

  std::int64_t low_ = 0;
  std::vector<BigInt> coeffs_;
};

/// Multiplication by q^n.
LaurentPoly shift(const LaurentPoly& p, std::int64_t n);

/// The substitution q -> q^-1.
LaurentPoly invert_variable(const LaurentPoly& p);

/// Exact rational value at q = x. Throws EvalAtZero when x = 0 and p has a
/// negative exponent.
BigRational evaluate(const LaurentPoly& p, const BigRational& x);

/// a / b when b divides a in Z[q, q^-1]; nullopt otherwise. b must be nonzero.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// True when the coefficient list reads the same in both directions.
bool is_palindromic(const LaurentPoly& p);

/// Numerator/denominator pair of Laurent polynomials, rescaled by +-q^n so
/// that the denominator has min_degree 0 and a positive constant term.
/// No gcd is taken; a zero denominator represents the point at infinity and
/// then the numerator is normalized the same way instead.
class QRatFunc {
 public:
  QRatFunc(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const noexcept { return num_; }
  const LaurentPoly& den() const noexcept { return den_; }
  bool is_infinite() const noexcept { return den_.is_zero(); }

  /// Componentwise equality of the canonical pairs.
  friend bool operator==(const QRatFunc&, const QRatFunc&) = default;

  std::string to_string() const;

 private:
  LaurentPoly num_;
  LaurentPoly den_;
};

/// Equality as rational functions: a.num * b.den == b.num * a.den.
bool equivalent(const QRatFunc& a, const QRatFunc& b);

/// Coefficients of q^0 .. q^order.
struct PowerSeries {
  std::vector<BigInt> coeffs;

  int order() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  PowerSeries truncated(int order) const;
  std::string to_string() const;

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;
};

/// Truncation of a polynomial with no negative exponents.
PowerSeries to_series(const LaurentPoly& p, int order);

/// num / den through q^order by exact long division. den must have a nonzero
/// constant term and min_degree 0; a non-integral coefficient throws NonIntegral.
PowerSeries series_quotient(const PowerSeries& num, const LaurentPoly& den);

/// Expansion of a q-rational at q = 0. Throws NotExpandable for numerators
/// with negative exponents or an infinite value.
PowerSeries series_expand(const QRatFunc& f, int order);

/// The unique u with u^2 = p mod q^(order+1) and u(0) > 0. Requires p(0) to
/// be a positive perfect square (BadConstantTerm); coefficients are computed
/// over Q and must come out integral (NonIntegral).
PowerSeries sqrt_series(const LaurentPoly& p, int order);

}  // namespace qfarey
