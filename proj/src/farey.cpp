#include "qfarey/farey.hpp"

#include <utility>

#include "qfarey/error.hpp"

namespace qfarey {

bool farey_neighbors(const Rational& x, const Rational& y) {
  const BigInt d = x.den() * y.num() - x.num() * y.den();
  return abs(d) == 1;
}

Rational mediant(const Rational& x, const Rational& y) {
  if (!farey_neighbors(x, y)) {
    throw Error(ErrorKind::NotNeighbors, x.to_string() + " and " + y.to_string() + " are not Farey neighbors");
  }
  return Rational(x.num() + y.num(), x.den() + y.den());
}

FareyDecomposition parents(const NegativeCF& alpha) {
  if (alpha.empty()) throw Error(ErrorKind::NoParents, "infinity is a vertex of the initial triangle");
  if (alpha.is_zero_expansion()) throw Error(ErrorKind::DomainError, "0 is a vertex of the initial triangle");
  const auto c = alpha.terms();
  const std::size_t k = c.size();
  if (k == 1 && c[0] == 1) throw Error(ErrorKind::NoParents, "1 is the apex of the initial triangle");

  NegativeCF gamma(std::vector<std::int64_t>(c.begin(), c.end() - 1));

  std::size_t l = k;  // 1-based position of the last entry != 2; 0 if none
  while (l > 0 && c[l - 1] == 2) --l;

  if (l == 0) return {NegativeCF({1}), std::move(gamma), static_cast<std::int64_t>(k), c.back()};

  const auto run = static_cast<std::int64_t>(k - l + 1);
  if (c[l - 1] == 1) return {NegativeCF({1, 1}), std::move(gamma), run, c.back()};

  std::vector<std::int64_t> b(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(l));
  b.back() -= 1;
  return {NegativeCF(std::move(b)), std::move(gamma), run, c.back()};
}

QRatFunc qfarey_sum_sharp(const QRatFunc& beta, const QRatFunc& gamma, std::int64_t last_entry) {
  const LaurentPoly w = LaurentPoly::q_power(last_entry - 1);
  return QRatFunc(beta.num() + w * gamma.num(), beta.den() + w * gamma.den());
}

QRatFunc qfarey_sum_flat(const QRatFunc& beta, const QRatFunc& gamma, std::int64_t run_exponent) {
  const LaurentPoly w = LaurentPoly::q_power(run_exponent);
  return QRatFunc(w * beta.num() + gamma.num(), w * beta.den() + gamma.den());
}

namespace {

WeightedTriangle initial_triangle(Flavor flavor) {
  WeightedTriangle t{Rational(0, 1), Rational::infinity(), Rational(1, 1)};
  // 0--1 carries q, 1--inf and the base 0--inf carry 1.
  if (flavor == Flavor::Flat) t.w_beta_alpha = 1;
  return t;
}

WeightedTriangle make_triangle(const Rational& alpha, Flavor flavor, int level) {
  const FareyDecomposition d = parents(to_negative(alpha));
  WeightedTriangle t{evaluate(d.beta), evaluate(d.gamma), alpha};
  t.level = level;
  if (flavor == Flavor::Flat) {
    t.w_beta_alpha = d.run_exponent;
    t.w_gamma_alpha = 0;
    t.w_beta_gamma = d.run_exponent - 1;
  } else {
    t.w_beta_alpha = 0;
    t.w_gamma_alpha = d.last_entry - 1;
    t.w_beta_gamma = d.last_entry - 2;
  }
  return t;
}

}  // namespace

std::vector<WeightedTriangle> tessellation(int depth, Flavor flavor) {
  if (depth < 0) throw Error(ErrorKind::DomainError, "depth must be nonnegative");
  std::vector<WeightedTriangle> out{initial_triangle(flavor)};
  // Open edges of the current frontier, left to right.
  std::vector<std::pair<Rational, Rational>> edges{{Rational(0, 1), Rational(1, 1)},
                                                   {Rational(1, 1), Rational::infinity()}};
  for (int level = 1; level <= depth; ++level) {
    std::vector<std::pair<Rational, Rational>> next;
    next.reserve(edges.size() * 2);
    for (const auto& [lo, hi] : edges) {
      const Rational m = mediant(lo, hi);
      out.push_back(make_triangle(m, flavor, level));
      next.emplace_back(lo, m);
      next.emplace_back(m, hi);
    }
    edges = std::move(next);
  }
  return out;
}

std::vector<WeightedTriangle> triangulation(const Rational& alpha, Flavor flavor) {
  if (alpha.is_zero() || alpha.is_infinity()) {
    throw Error(ErrorKind::DomainError, "triangulation needs 0 < alpha < inf");
  }
  std::vector<WeightedTriangle> out{initial_triangle(flavor)};
  Rational lo(0, 1);
  Rational hi = Rational::infinity();
  Rational cur(1, 1);
  int level = 0;
  while (!(cur == alpha)) {
    if (alpha < cur) {
      hi = cur;
    } else {
      lo = cur;
    }
    cur = mediant(lo, hi);
    out.push_back(make_triangle(cur, flavor, ++level));
  }
  return out;
}

}  // namespace qfarey
