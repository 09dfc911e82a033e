#include "qfarey/spherical.hpp"

#include <numeric>
#include <sstream>

#include "qfarey/error.hpp"
#include "qfarey/farey.hpp"
#include "qfarey/qcore.hpp"

namespace qfarey {

namespace {

LaurentPoly q_pow(std::int64_t e) { return LaurentPoly::q_power(e); }

// 1 - q^-1, q^-2 - q^-1 and friends, written densely from the low end.
LaurentPoly poly(std::int64_t low, std::vector<long> coeffs) {
  std::vector<BigInt> big(coeffs.begin(), coeffs.end());
  return LaurentPoly(low, std::move(big));
}

std::span<const std::int64_t> functional_terms(const NegativeCF& alpha, std::vector<std::int64_t>& storage) {
  if (!alpha.is_zero_expansion()) return alpha.terms();
  storage = {0};
  return storage;
}

std::int64_t sum(std::span<const std::int64_t> c) { return std::accumulate(c.begin(), c.end(), std::int64_t{0}); }

bool pair_eq(const FunctionalPair& lhs, const LaurentPoly& wb, const FunctionalPair& b, const LaurentPoly& wg,
             const FunctionalPair& g) {
  return lhs.at_p1 == wb * b.at_p1 + wg * g.at_p1 && lhs.at_p2 == wb * b.at_p2 + wg * g.at_p2;
}

}  // namespace

std::string TwistWord::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    os << (i ? " " : "") << (letters[i].first == Twist::Sigma1 ? "sigma1" : "sigma2") << "^" << letters[i].second;
  }
  return os.str();
}

TwistWord normalize(TwistWord w) {
  TwistWord out;
  for (const auto& [t, e] : w.letters) {
    if (e == 0) continue;
    if (!out.letters.empty() && out.letters.back().first == t) {
      out.letters.back().second += e;
      if (out.letters.back().second == 0) out.letters.pop_back();
    } else {
      out.letters.emplace_back(t, e);
    }
  }
  return out;
}

TwistWord twist_word_regular(const RegularCF& a) {
  TwistWord w;
  const auto t = a.terms();
  for (std::size_t i = 0; i < t.size(); ++i) {
    w.letters.emplace_back(i % 2 == 0 ? Twist::Sigma1 : Twist::Sigma2, i % 2 == 0 ? -t[i] : t[i]);
  }
  return normalize(std::move(w));
}

TwistWord twist_word_negative(const NegativeCF& c) {
  if (c.empty() || c.is_zero_expansion()) {
    throw Error(ErrorKind::DomainError, "twist words are defined for positive rationals");
  }
  TwistWord w;
  const auto t = c.terms();
  for (std::size_t i = 0; i < t.size(); ++i) {
    w.letters.emplace_back(Twist::Sigma1, -t[i] + (i == 0 ? 1 : 2));
    w.letters.emplace_back(Twist::Sigma2, 1);
  }
  return normalize(std::move(w));
}

FunctionalPair occ_closed_form(std::span<const std::int64_t> c) {
  const auto k = static_cast<std::int64_t>(c.size());
  auto [r, s] = continuant_pair(c, Flavor::Sharp);
  return {shift(s, 1 - k), shift(r, 1 - k)};
}

FunctionalPair hom_closed_form(std::span<const std::int64_t> c) {
  const std::int64_t d = sum(c) - 2 * static_cast<std::int64_t>(c.size());
  auto [r, s] = continuant_pair(c, Flavor::Flat);
  return {shift(s, -(d + 2)), shift(r, -(d + 1))};
}

FunctionalPair occ(const NegativeCF& alpha) {
  std::vector<std::int64_t> storage;
  return occ_closed_form(functional_terms(alpha, storage));
}

FunctionalPair hom(const NegativeCF& alpha) {
  std::vector<std::int64_t> storage;
  return hom_closed_form(functional_terms(alpha, storage));
}

FunctionalPair occ_to_hom(const FunctionalPair& o) {
  const LaurentPoly qinv = q_pow(-1);
  return {qinv * o.at_p1 + poly(-1, {-1, 1}) * o.at_p2, poly(-2, {1, -1}) * o.at_p1 + qinv * o.at_p2};
}

FunctionalPair hom_to_occ(const FunctionalPair& h) {
  // Multiply the inverse through by q so its common denominator is q^2 - q + 1.
  const LaurentPoly den = poly(0, {1, -1, 1});
  const LaurentPoly q2 = q_pow(2);
  const LaurentPoly n1 = q2 * h.at_p1 + poly(2, {1, -1}) * h.at_p2;
  const LaurentPoly n2 = poly(1, {-1, 1}) * h.at_p1 + q2 * h.at_p2;
  auto o1 = divide_exact(n1, den);
  auto o2 = divide_exact(n2, den);
  if (!o1 || !o2) throw Error(ErrorKind::NotDivisible, "pair is not in the image of occ_to_hom");
  return {std::move(*o1), std::move(*o2)};
}

FareyIdentityReport farey_identity_check(const NegativeCF& alpha) {
  const FareyDecomposition d = parents(alpha);
  const auto c = alpha.terms();
  const auto k = static_cast<std::int64_t>(c.size());
  const std::int64_t l = k - d.run_exponent + 1;
  const std::int64_t ck = d.last_entry;

  std::vector<std::int64_t> storage;
  const auto beta = functional_terms(d.beta, storage);
  const auto gamma = d.gamma.terms();

  FareyIdentityReport report;
  report.occ_ok = pair_eq(occ(alpha), q_pow(l - k), occ_closed_form(beta), q_pow(ck - 2), occ_closed_form(gamma));

  const std::int64_t tail = sum(c.subspan(static_cast<std::size_t>(l)));
  const LaurentPoly wb = q_pow(3 * (k - l) - tail);
  const FunctionalPair ha = hom(alpha);
  const FunctionalPair hb = hom_closed_form(beta);
  const FunctionalPair hg = hom_closed_form(gamma);
  report.hom_ck_plus_2_ok = pair_eq(ha, wb, hb, q_pow(ck + 2), hg);
  report.hom_2_minus_ck_ok = pair_eq(ha, wb, hb, q_pow(2 - ck), hg);
  return report;
}

}  // namespace qfarey
