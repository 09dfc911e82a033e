#pragma once

// Regular and negative continued fractions of nonnegative rationals and of
// infinity, with the even-length convention for regular expansions.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qfarey/laurent.hpp"

namespace qfarey {

/// Irreducible r/s with r, s >= 0, not both zero. Infinity is 1/0.
class Rational {
 public:
  Rational(BigInt num, BigInt den);
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  static Rational infinity() { return Rational(1, 0); }

  /// Parses "<r>/<s>" (or a bare integer) with nonnegative decimal parts.
  static Rational parse(std::string_view text);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_infinity() const { return den_ == 0; }

  std::string to_string() const { return num_.get_str() + "/" + den_.get_str(); }

  friend bool operator==(const Rational&, const Rational&) = default;

  /// Total order on [0, inf].
  friend bool operator<(const Rational& a, const Rational& b) { return a.num_ * b.den_ < b.num_ * a.den_; }

 private:
  BigInt num_;
  BigInt den_;
};

/// [a1, ..., a2m]: even length, a1 >= 0, ai >= 1 afterwards. The empty
/// expansion is infinity and [-1, 1] is the dedicated expansion of zero.
class RegularCF {
 public:
  explicit RegularCF(std::vector<std::int64_t> terms);

  std::span<const std::int64_t> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  bool is_zero_expansion() const noexcept { return terms_ == std::vector<std::int64_t>{-1, 1}; }

  friend bool operator==(const RegularCF&, const RegularCF&) = default;

 private:
  std::vector<std::int64_t> terms_;
};

/// [[c1, ..., ck]]: c1 >= 1 and cj >= 2 afterwards. The empty expansion is
/// infinity and [[1, 1]] is the dedicated expansion of zero.
class NegativeCF {
 public:
  explicit NegativeCF(std::vector<std::int64_t> terms);

  std::span<const std::int64_t> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  bool is_zero_expansion() const noexcept { return terms_ == std::vector<std::int64_t>{1, 1}; }
  std::int64_t last() const { return terms_.back(); }

  /// Sum of the entries.
  std::int64_t weight() const;

  std::string to_string() const;

  friend bool operator==(const NegativeCF&, const NegativeCF&) = default;

 private:
  std::vector<std::int64_t> terms_;
};

RegularCF to_regular_even(const Rational& x);
NegativeCF to_negative(const Rational& x);

/// [a1, a2, a3, a4, ...] -> [[a1 + 1, 2^(a2 - 1), a3 + 2, 2^(a4 - 1), ...]].
/// DomainError for the expansion of zero.
NegativeCF regular_to_negative(const RegularCF& a);

Rational evaluate(const RegularCF& a);
Rational evaluate(const NegativeCF& c);

/// Parses "c1,c2,..." into integers (used for periods and CLI input).
std::vector<std::int64_t> parse_int_list(std::string_view text);

}  // namespace qfarey
