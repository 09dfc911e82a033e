#pragma once

// q-integers, q-deformed Euler continuants and q-rationals. The right
// (sharp) and left (flat) deformations are computed three ways: from the
// negative continued fraction via continuants, from the regular continued
// fraction by bottom-up projective evaluation, and from the action of
// words in the PSL(2, Z[q, q^-1]) generators on a projective point.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qfarey/contfrac.hpp"
#include "qfarey/laurent.hpp"

namespace qfarey {

enum class Flavor { Sharp, Flat };

/// (1 - q^n) / (1 - q), exact for every integer n.
LaurentPoly q_int_sharp(std::int64_t n);

/// (1 - q^(n-1) + q^n - q^(n+1)) / (1 - q) = [n]# - q^(n-1) + q^n.
LaurentPoly q_int_flat(std::int64_t n);

/// E#_k(c1..ck) by the three-term recurrence
///   E_i = [c_i]# E_{i-1} - q^(c_{i-1} - 1) E_{i-2},  E_0 = 1, E_{-1} = 0.
LaurentPoly continuant_sharp(std::span<const std::int64_t> c);

/// E_k with the last diagonal entry [c_k] replaced by [c_k]_flat; equal to
/// E#_k(c) - q^(c_k - 1) (1 - q) E#_{k-1}(c1..c_{k-1}). E_0 = 1.
LaurentPoly continuant_flat(std::span<const std::int64_t> c);

/// Raw continuant pair (E_k(c1..ck), E_{k-1}(c2..ck)) without rescaling.
/// The empty list gives (1, 0) for sharp and (1, 1 - q) for flat.
std::pair<LaurentPoly, LaurentPoly> continuant_pair(std::span<const std::int64_t> c, Flavor flavor);

QRatFunc qrat_sharp(const NegativeCF& c);
QRatFunc qrat_flat(const NegativeCF& c);
QRatFunc qrat(const NegativeCF& c, Flavor flavor);
QRatFunc qrat(const Rational& x, Flavor flavor);

/// Bottom-up evaluation of
///   [a1]# + q^a1 / ([a2]#_{q^-1} + q^-a2 / ([a3]# + ... ))
/// ending in [a2m]#_{q^-1} (sharp) or [a2m]_flat at q^-1 (flat).
QRatFunc qrat_sharp_regular(const RegularCF& a);
QRatFunc qrat_flat_regular(const RegularCF& a);

// ---------------------------------------------------------------------------
// Matrix realization

enum class Generator { Sigma1, Sigma2, S };

struct QMatrix {
  LaurentPoly a, b, c, d;

  static QMatrix identity();
  LaurentPoly det() const { return a * d - b * c; }

  friend QMatrix operator*(const QMatrix& x, const QMatrix& y);
  friend bool operator==(const QMatrix&, const QMatrix&) = default;
};

/// Projective point (u : v); (1 : 0) is infinity.
struct ProjPoint {
  LaurentPoly u, v;

  QRatFunc value() const { return QRatFunc(u, v); }
};

using GeneratorWord = std::vector<std::pair<Generator, std::int64_t>>;

/// sigma_{1,q} = [[q^-1, -q^-1], [0, 1]], sigma_{2,q} = [[1, 0], [1, q^-1]],
/// S_q = [[0, -q^-1], [1, 0]], raised to any integer power.
QMatrix gen_matrix(Generator g, std::int64_t power);

/// Product of the word's letters, left to right.
QMatrix word_matrix(const GeneratorWord& word);

/// The word acting on a point; the rightmost letter acts first.
ProjPoint word_apply(const GeneratorWord& word, const ProjPoint& p);

/// sigma1^-c1 S sigma1^-c2 S ... sigma1^-ck S.
GeneratorWord negative_word(const NegativeCF& c);

/// sigma1^-a1 sigma2^a2 ... sigma1^-a(2m-1) sigma2^a2m.
GeneratorWord regular_word(const RegularCF& a);

// ---------------------------------------------------------------------------
// Incremental convergents

/// Numerators and denominators of the convergents [[c1..ci]] for i = 0..k,
/// advanced with
///   R#_{i+1} = [c_{i+1}]# R#_i - q^(c_i - 1) R#_{i-1}
///   Rb_{i+1} = [c_{i+1}]_flat R#_i - q^(c_i - 1) R#_{i-1}
/// and the same for the denominators.
struct Convergent {
  LaurentPoly sharp_num, sharp_den;
  LaurentPoly flat_num, flat_den;
};

std::vector<Convergent> convergents(std::span<const std::int64_t> c);

}  // namespace qfarey
