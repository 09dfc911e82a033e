#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qfarey/error.hpp"
#include "qfarey/farey.hpp"
#include "qfarey/qcore.hpp"
#include "qfarey/spherical.hpp"
#include "support.hpp"

using namespace qfarey;
using qt::P;
using qt::Q;

namespace {

using Terms = std::vector<std::int64_t>;

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::DomainError;
}

TwistWord word(std::initializer_list<std::pair<Twist, std::int64_t>> letters) { return TwistWord{letters}; }

FunctionalPair scaled(const LaurentPoly& f, const FunctionalPair& x) { return {f * x.at_p1, f * x.at_p2}; }

FunctionalPair plus(const FunctionalPair& a, const FunctionalPair& b) { return {a.at_p1 + b.at_p1, a.at_p2 + b.at_p2}; }

// Functionals of a parent; 0 is taken as the one-entry list [0] and
// infinity as the empty list.
FunctionalPair occ_of(const NegativeCF& c) {
  if (c.is_zero_expansion()) return occ_closed_form(Terms{0});
  if (c.empty()) return occ_closed_form(Terms{});
  return occ(c);
}

FunctionalPair hom_of(const NegativeCF& c) {
  if (c.is_zero_expansion()) return hom_closed_form(Terms{0});
  if (c.empty()) return hom_closed_form(Terms{});
  return hom(c);
}

struct Sides {
  bool occ = false;
  bool hom = false;
};

// Both Farey identities with l taken as the last position whose entry is not 2
// (1 when there is none), and gamma weight q^g in the hom identity.
Sides identities_hold(const NegativeCF& alpha, std::int64_t g_offset_sign) {
  const auto c = alpha.terms();
  const auto k = static_cast<std::int64_t>(c.size());
  std::int64_t l = 1;
  for (std::int64_t j = k; j >= 1; --j) {
    if (c[static_cast<std::size_t>(j - 1)] != 2) {
      l = j;
      break;
    }
  }
  std::int64_t tail = 0;
  for (std::int64_t j = l + 1; j <= k; ++j) tail += c[static_cast<std::size_t>(j - 1)];

  const NegativeCF beta = parents(alpha).beta;
  const NegativeCF gamma(Terms(c.begin(), c.end() - 1));
  const std::int64_t ck = c.back();

  Sides out;
  out.occ = occ(alpha) == plus(scaled(Q(l - k), occ_of(beta)), scaled(Q(ck - 2), occ_of(gamma)));
  const std::int64_t g = g_offset_sign > 0 ? ck + 2 : 2 - ck;
  out.hom = hom(alpha) == plus(scaled(Q(3 * (k - l) - tail), hom_of(beta)), scaled(Q(g), hom_of(gamma)));
  return out;
}

}  // namespace

TEST_CASE("twist words") {
  CHECK(twist_word_negative(NegativeCF({2})) == word({{Twist::Sigma1, -1}, {Twist::Sigma2, 1}}));
  CHECK(twist_word_negative(NegativeCF({3, 2})) == word({{Twist::Sigma1, -2}, {Twist::Sigma2, 2}}));
  CHECK(twist_word_regular(RegularCF({2, 1})) == word({{Twist::Sigma1, -2}, {Twist::Sigma2, 1}}));
  CHECK(twist_word_negative(NegativeCF({3, 2})).to_string() == "sigma1^-2 sigma2^2");
  CHECK(twist_word_negative(NegativeCF({1, 3})) == word({{Twist::Sigma2, 1}, {Twist::Sigma1, -1}, {Twist::Sigma2, 1}}));
  CHECK(normalize(word({{Twist::Sigma1, 2}, {Twist::Sigma1, -2}, {Twist::Sigma2, 1}})) == word({{Twist::Sigma2, 1}}));
  CHECK(normalize(word({{Twist::Sigma2, 1}, {Twist::Sigma1, 0}, {Twist::Sigma2, 3}})) == word({{Twist::Sigma2, 4}}));
  CHECK(kind_of([] { (void)twist_word_negative(NegativeCF({1, 1})); }) == ErrorKind::DomainError);
  CHECK(kind_of([] { (void)twist_word_negative(NegativeCF({})); }) == ErrorKind::DomainError);

  // The two word forms coincide letter for letter after normalization.
  for (long s = 1; s <= 40; ++s) {
    for (long r = 1; r <= 40; ++r) {
      if (std::gcd(r, s) != 1) continue;
      const Rational x(r, s);
      CAPTURE(x.to_string());
      const TwistWord w = twist_word_negative(to_negative(x));
      CHECK(w == twist_word_regular(to_regular_even(x)));
      for (std::size_t i = 0; i < w.letters.size(); ++i) {
        CHECK(w.letters[i].second != 0);
        if (i > 0) CHECK(w.letters[i].first != w.letters[i - 1].first);
      }
    }
  }
}

TEST_CASE("occ and hom examples") {
  CHECK(occ(NegativeCF({2})) == FunctionalPair{LaurentPoly(1L), P({1, 1})});
  CHECK(occ(NegativeCF({3, 2})).at_p2 == P({1, 2, 1, 1}, -1));
  CHECK(hom(NegativeCF({2})) == FunctionalPair{Q(-2), P({1, 0, 1}, -1)});
  CHECK(hom(NegativeCF({3})).at_p2 == P({1, 1, 0, 1}, -2));
  CHECK(occ_closed_form(Terms{}) == FunctionalPair{LaurentPoly(), Q(1)});
  CHECK(hom_closed_form(Terms{}) == FunctionalPair{P({1, -1}, -2), Q(-1)});
}

TEST_CASE("ratios recover the q-rationals") {
  for (long s = 1; s <= 40; ++s) {
    for (long r = 1; r <= 40; ++r) {
      if (std::gcd(r, s) != 1) continue;
      const NegativeCF alpha = to_negative(Rational(r, s));
      CAPTURE(alpha.to_string());
      const FunctionalPair o = occ(alpha);
      const FunctionalPair h = hom(alpha);
      CHECK(!o.at_p1.is_zero());
      CHECK(!o.at_p2.is_zero());
      CHECK(!h.at_p1.is_zero());
      CHECK(!h.at_p2.is_zero());
      CHECK(equivalent(QRatFunc(o.at_p2, o.at_p1), qrat_sharp(alpha)));
      CHECK(equivalent(QRatFunc(h.at_p2, Q(1) * h.at_p1), qrat_flat(alpha)));
      // At q = 1 both functionals count (s, r).
      CHECK(evaluate(o.at_p1, BigRational(1)) == s);
      CHECK(evaluate(o.at_p2, BigRational(1)) == r);
      CHECK(evaluate(h.at_p1, BigRational(1)) == s);
      CHECK(evaluate(h.at_p2, BigRational(1)) == r);
    }
  }
}

TEST_CASE("Farey identities") {
  long plus_two = 0;
  long total = 0;
  std::string first_failure;
  for (long s = 1; s <= 50; ++s) {
    for (long r = 1; r <= 50; ++r) {
      if (std::gcd(r, s) != 1 || r == s) continue;
      const NegativeCF alpha = to_negative(Rational(r, s));
      CAPTURE(alpha.to_string());
      ++total;
      const Sides corrected = identities_hold(alpha, -1);
      CHECK(corrected.occ);
      CHECK(corrected.hom);
      const Sides printed = identities_hold(alpha, +1);
      if (printed.hom) {
        ++plus_two;
      } else if (first_failure.empty()) {
        first_failure = alpha.to_string();
      }
      const FareyIdentityReport rep = farey_identity_check(alpha);
      CHECK(rep.occ_ok == corrected.occ);
      CHECK(rep.hom_2_minus_ck_ok == corrected.hom);
      CHECK(rep.hom_ck_plus_2_ok == printed.hom);
      CHECK(rep.ok());
    }
  }
  // The gamma weight q^(c_k + 2) never works; [[2]] is the smallest witness.
  CHECK(plus_two == 0);
  CHECK(first_failure == "[[2]]");
  CHECK(total > 1500);
  CHECK(!farey_identity_check(NegativeCF({2})).hom_ck_plus_2_ok);
  CHECK(farey_identity_check(NegativeCF({3, 2, 3})).ok());
  CHECK(farey_identity_check(NegativeCF({3, 2, 2, 2})).ok());
  CHECK(farey_identity_check(NegativeCF({2})).ok());
  CHECK(kind_of([] { (void)farey_identity_check(NegativeCF({1})); }) == ErrorKind::NoParents);
}

TEST_CASE("change of basis between occ and hom") {
  const FunctionalPair h = occ_to_hom({LaurentPoly(1L), P({1, 1})});
  CHECK(h.at_p1 == Q(1));

  // At q = 1 the map is the identity.
  qt::Rng rng(1313);
  for (int trial = 0; trial < 1000; ++trial) {
    const FunctionalPair o{qt::random_poly(rng), qt::random_poly(rng)};
    const FunctionalPair x = occ_to_hom(o);
    CHECK(hom_to_occ(x) == o);
    CHECK(evaluate(x.at_p1, BigRational(1)) == evaluate(o.at_p1, BigRational(1)));
    CHECK(evaluate(x.at_p2, BigRational(1)) == evaluate(o.at_p2, BigRational(1)));
    // Direct substitution into the defining relations.
    CHECK(x.at_p1 == Q(-1) * o.at_p1 + (LaurentPoly(1L) - Q(-1)) * o.at_p2);
    CHECK(x.at_p2 == (Q(-2) - Q(-1)) * o.at_p1 + Q(-1) * o.at_p2);
  }
  // The image has index q^2 - q + 1.
  CHECK(kind_of([] { (void)hom_to_occ({LaurentPoly(1L), LaurentPoly()}); }) == ErrorKind::NotDivisible);
}
