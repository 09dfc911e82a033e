#pragma once

// Shared helpers for the unit tests: compact polynomial literals, seeded
// random generators, and oracles that share no code with the library.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "qfarey/laurent.hpp"

namespace qt {

using qfarey::BigInt;
using qfarey::BigRational;
using qfarey::LaurentPoly;

/// Dense literal: P({1, 2, 1}) = 1 + 2q + q^2, P({-1, 1}, -1) = -q^-1 + 1.
inline LaurentPoly P(std::initializer_list<long> coeffs, std::int64_t low = 0) {
  std::vector<BigInt> big(coeffs.begin(), coeffs.end());
  return LaurentPoly(low, std::move(big));
}

inline LaurentPoly Q(std::int64_t e) { return LaurentPoly::q_power(e); }

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// Up to max_terms terms with exponents in [lo, hi] and coefficients whose
/// magnitude can exceed 64 bits.
inline LaurentPoly random_poly(Rng& rng, int max_terms = 6, long lo = -5, long hi = 8) {
  std::vector<std::pair<std::int64_t, BigInt>> terms;
  const long n = uniform(rng, 0, max_terms);
  for (long i = 0; i < n; ++i) {
    BigInt c = uniform(rng, -9, 9);
    if (uniform(rng, 0, 3) == 0) c *= BigInt("123456789012345678901234567890");
    terms.emplace_back(uniform(rng, lo, hi), c);
  }
  return LaurentPoly::from_terms(terms);
}

inline LaurentPoly random_nonzero_poly(Rng& rng, int max_terms = 4, long lo = -3, long hi = 4) {
  for (;;) {
    LaurentPoly p = random_poly(rng, max_terms, lo, hi);
    if (!p.is_zero()) return p;
  }
}

// ---------------------------------------------------------------------------
// Map-backed polynomial oracle: schoolbook arithmetic on exponent -> coefficient.

using MapPoly = std::map<std::int64_t, BigInt>;

inline MapPoly to_map(const LaurentPoly& p) {
  MapPoly m;
  for (const auto& [e, c] : p.terms()) m[e] = c;
  return m;
}

inline void prune(MapPoly& m) {
  std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
}

inline MapPoly map_add(MapPoly a, const MapPoly& b) {
  for (const auto& [e, c] : b) a[e] += c;
  prune(a);
  return a;
}

inline MapPoly map_mul(const MapPoly& a, const MapPoly& b) {
  MapPoly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
  }
  prune(out);
  return out;
}

/// sum c x^e with explicit powers.
inline BigRational map_eval(const MapPoly& m, const BigRational& x) {
  BigRational acc = 0;
  for (const auto& [e, c] : m) {
    BigRational term = c;
    for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) term = e < 0 ? BigRational(term / x) : BigRational(term * x);
    acc += term;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Series oracle: coefficients of num/den at q = 0 by solving
// den * u = num order by order over Q.

inline std::vector<BigRational> series_oracle(const LaurentPoly& num, const LaurentPoly& den, int order) {
  std::vector<BigRational> u(static_cast<std::size_t>(order) + 1);
  const BigRational d0 = den.coeff(0);
  for (int n = 0; n <= order; ++n) {
    BigRational acc = num.coeff(n);
    for (int j = 1; j <= n; ++j) acc -= BigRational(den.coeff(j)) * u[static_cast<std::size_t>(n - j)];
    u[static_cast<std::size_t>(n)] = acc / d0;
  }
  return u;
}

// ---------------------------------------------------------------------------
// Leibniz determinant over Z[q, q^-1], for small matrices only.

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

inline LaurentPoly leibniz_det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPoly det;
  do {
    LaurentPoly term(1L);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= m[i][perm[i]];
    if (term.is_zero()) continue;
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    det += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// 1 + q + ... + q^(n-1) written out term by term, n >= 0.
inline LaurentPoly geometric(long n) {
  LaurentPoly out;
  for (long i = 0; i < n; ++i) out += Q(i);
  return out;
}

}  // namespace qt
