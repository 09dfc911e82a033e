#include "qfarey/verify.hpp"

#include <functional>

#include "qfarey/error.hpp"
#include "qfarey/knots.hpp"
#include "qfarey/qcore.hpp"

namespace qfarey {

namespace {

// Calls f on every irreducible r/s with 0 <= r, s <= bound, (r, s) != (0, 0).
void for_each_rational(int bound, const std::function<void(const Rational&)>& f) {
  for (long s = 0; s <= bound; ++s) {
    for (long r = 0; r <= bound; ++r) {
      if ((r == 0 && s == 0) || gcd(BigInt(r), BigInt(s)) != 1) continue;
      f(Rational(r, s));
    }
  }
}

bool has_parents(const Rational& x) { return !x.is_zero() && !x.is_infinity() && !(x == Rational(1, 1)); }

std::string describe(const Rational& x) { return x.to_string() + " = " + to_negative(x).to_string(); }

std::string describe(std::span<const std::int64_t> c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
  return out + ")";
}

// Product of [[c, -1], [1, 0]] over one period, in plain integers.
struct IntMatrix {
  BigInt a = 1, b = 0, c = 0, d = 1;
};

IntMatrix period_matrix(std::span<const std::int64_t> period) {
  IntMatrix m;
  for (std::int64_t ci : period) {
    const BigInt x(static_cast<long>(ci));
    m = {m.a * x + m.b, -m.a, m.c * x + m.d, -m.c};
  }
  return m;
}

// (r + sqrt(p)) / s is the larger root of C x^2 + (D - A) x - B = 0.
bool is_fixed_point(const ClassicalSurd& v, const IntMatrix& m) {
  if (v.s <= 0 || v.p <= 0 || mpz_perfect_square_p(v.p.get_mpz_t())) return false;
  const BigInt dm = m.d - m.a;
  const bool irrational_part = 2 * m.c * v.r + dm * v.s == 0;
  const bool rational_part = m.c * (v.r * v.r + v.p) + dm * v.r * v.s - m.b * v.s * v.s == 0;
  return irrational_part && rational_part && m.c > 0;
}

}  // namespace

void SuiteReport::fail(std::string witness) {
  passed = false;
  if (!counterexample) counterexample = std::move(witness);
}

Json SuiteReport::to_json() const {
  Json j{{"suite", name}, {"passed", passed}, {"cases", cases}};
  j["counterexample"] = counterexample ? Json(*counterexample) : Json(nullptr);
  j["notes"] = notes;
  return j;
}

SuiteReport verify_thm2_5(int bound) {
  SuiteReport rep{"thm2_5"};
  for_each_rational(bound, [&](const Rational& x) {
    ++rep.cases;
    const RegularCF a = to_regular_even(x);
    const NegativeCF c = to_negative(x);
    if (!(qrat_flat_regular(a) == qrat_flat(c))) rep.fail("flat " + describe(x));
    if (!(qrat_sharp_regular(a) == qrat_sharp(c))) rep.fail("sharp " + describe(x));
  });
  rep.notes.push_back("all r/s with 0 <= r, s <= " + std::to_string(bound) + ", both flavors");
  return rep;
}

SuiteReport verify_farey_sums(int bound) {
  SuiteReport rep{"farey_sums"};
  auto check = [&](const NegativeCF& alpha, const std::string& label) {
    ++rep.cases;
    const FareyDecomposition d = parents(alpha);
    const Rational b = evaluate(d.beta);
    const Rational g = evaluate(d.gamma);
    if (!farey_neighbors(b, g) || !(mediant(b, g) == evaluate(alpha))) rep.fail("mediant " + label);
    if (!(qfarey_sum_sharp(qrat_sharp(d.beta), qrat_sharp(d.gamma), d.last_entry) == qrat_sharp(alpha))) {
      rep.fail("sharp " + label);
    }
    if (!(qfarey_sum_flat(qrat_flat(d.beta), qrat_flat(d.gamma), d.run_exponent) == qrat_flat(alpha))) {
      rep.fail("flat " + label);
    }
  };
  for_each_rational(bound, [&](const Rational& x) {
    if (has_parents(x)) check(to_negative(x), describe(x));
  });
  for (std::size_t k = 1; k <= 8; ++k) {
    const std::vector<std::int64_t> twos(k, 2);
    const NegativeCF alpha(twos);
    ++rep.cases;
    // Against the continuants directly rather than through qrat.
    const QRatFunc direct(continuant_flat(twos), continuant_flat(std::span(twos).subspan(1)));
    const FareyDecomposition d = parents(alpha);
    if (!(qfarey_sum_flat(qrat_flat(d.beta), qrat_flat(d.gamma), d.run_exponent) == direct)) {
      rep.fail("all-2 " + alpha.to_string());
    }
    check(alpha, alpha.to_string());
  }
  rep.notes.push_back("all r/s with 0 <= r, s <= " + std::to_string(bound) + " except 0, 1, 1/0; plus [[2^k]], k <= 8");
  return rep;
}

SuiteReport verify_jones(int max_weight) {
  SuiteReport rep{"jones"};
  for (const auto& terms : enumerate_knot_expansions(max_weight)) {
    ++rep.cases;
    const NegativeCF alpha(terms);
    const JonesPoly closed = jones_closed(alpha);
    const std::string label = alpha.to_string();
    if (!(jones_recursive(alpha) == closed)) rep.fail("recursion " + label);
    if (evaluate(closed.poly, BigRational(1)) != BigRational(evaluate(alpha).num())) rep.fail("J(1) " + label);
    if (closed.poly.min_degree() != 0 || closed.poly.coeff(0) != 1 || closed.poly.max_degree() != closed.degree) {
      rep.fail("degree " + label);
    }
    const LaurentPoly v = jones_abs(alpha);
    std::vector<BigInt> reversed(closed.poly.dense().rbegin(), closed.poly.dense().rend());
    if (v.min_degree() != 0 || v.dense() != reversed) rep.fail("reversal " + label);
  }
  rep.notes.push_back("every [[c1..ck]] > 1 with sum(c) <= " + std::to_string(max_weight));
  return rep;
}

SuiteReport verify_corollary5_4(int bound) {
  SuiteReport rep{"corollary5_4"};
  long plus_two_holds = 0;
  long identity_cases = 0;
  std::optional<std::string> plus_two_witness;
  const LaurentPoly q = LaurentPoly::q_power(1);
  for_each_rational(bound, [&](const Rational& x) {
    if (x.is_zero() || x.is_infinity()) return;
    ++rep.cases;
    const NegativeCF alpha = to_negative(x);
    const FunctionalPair o = occ(alpha);
    const FunctionalPair h = hom(alpha);
    if (!equivalent(QRatFunc(o.at_p2, o.at_p1), qrat_sharp(alpha))) rep.fail("occ ratio " + describe(x));
    if (!equivalent(QRatFunc(h.at_p2, q * h.at_p1), qrat_flat(alpha))) rep.fail("hom ratio " + describe(x));
    if (!has_parents(x)) return;
    ++identity_cases;
    const FareyIdentityReport r = farey_identity_check(alpha);
    if (!r.occ_ok) rep.fail("occ identity " + describe(x));
    if (!r.hom_2_minus_ck_ok) rep.fail("hom identity " + describe(x));
    if (r.hom_ck_plus_2_ok) {
      ++plus_two_holds;
    } else if (!plus_two_witness) {
      plus_two_witness = describe(x);
    }
  });
  rep.notes.push_back("ratio identities on all 0 < r/s < inf with r, s <= " + std::to_string(bound));
  rep.notes.push_back("Farey identities checked on " + std::to_string(identity_cases) +
                      " expansions with gamma weight q^(2-c_k)");
  std::string note = "hom identity with gamma weight q^(c_k+2) holds for " + std::to_string(plus_two_holds) + " of " +
                     std::to_string(identity_cases);
  if (plus_two_witness) note += "; first failure " + *plus_two_witness;
  rep.notes.push_back(note);
  return rep;
}

SuiteReport verify_quad(int max_entry, int max_length, int order) {
  SuiteReport rep{"quad"};
  long occ_monomial = 0;
  long hom_expected = 0;
  long palindromic = 0;
  for (const auto& period : enumerate_periods(max_entry, max_length)) {
    ++rep.cases;
    const PeriodicNegCF p(period);
    const std::string label = describe(period);
    const auto k = static_cast<std::int64_t>(period.size());

    if (!(quad_series(p, order) == convergent_series(p, order, 256))) rep.fail("series " + label);

    const Surd base = quad_surd(p);
    const Surd via_occ = quad_occ_form(p);
    const Surd via_hom = quad_hom_form(p);
    const auto l_occ = surd_scale(base, via_occ);
    const auto l_hom = surd_scale(base, via_hom);
    const auto l_mixed = surd_scale(via_occ, via_hom);
    if (!l_occ || !l_hom || !l_mixed) {
      rep.fail("surd equivalence " + label);
    } else {
      if (*l_occ == LaurentPoly::q_power(1 - k)) ++occ_monomial;
      if (*l_hom == LaurentPoly(-k, {BigInt(1), BigInt(-1), BigInt(1)})) ++hom_expected;
    }

    const IntMatrix m = period_matrix(period);
    for (const Surd* s : {&base, &via_occ, &via_hom}) {
      if (!is_fixed_point(at_one(*s), m)) rep.fail("q=1 fixed point " + label);
    }
    if (base.p.coeff(0) != 1 || base.p.min_degree() != 0) rep.fail("P constant term " + label);
    if (is_palindromic(base.p)) ++palindromic;
  }
  const std::string n = std::to_string(rep.cases);
  rep.notes.push_back("series agree with convergents through q^" + std::to_string(order));
  rep.notes.push_back("occ-form scale is q^(1-k) for " + std::to_string(occ_monomial) + " of " + n + " periods");
  rep.notes.push_back("hom-form scale is q^(-k)(1 - q + q^2), not a power of q, for " + std::to_string(hom_expected) +
                      " of " + n + " periods");
  rep.notes.push_back("P palindromic for " + std::to_string(palindromic) + " of " + n + " periods (observation)");
  return rep;
}

std::vector<SuiteReport> run_suite(std::string_view name) {
  if (name == "thm2_5") return {verify_thm2_5()};
  if (name == "farey_sums") return {verify_farey_sums()};
  if (name == "jones") return {verify_jones()};
  if (name == "corollary5_4") return {verify_corollary5_4()};
  if (name == "quad") return {verify_quad()};
  if (name == "all") {
    return {verify_thm2_5(), verify_farey_sums(), verify_jones(), verify_corollary5_4(), verify_quad()};
  }
  throw Error(ErrorKind::ParseError, "unknown suite '" + std::string(name) + "'");
}

std::vector<std::vector<std::int64_t>> enumerate_periods(int max_entry, int max_length) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  std::function<void()> rec = [&]() {
    if (!cur.empty()) {
      for (std::int64_t c : cur) {
        if (c >= 3) {
          out.push_back(cur);
          break;
        }
      }
    }
    if (static_cast<int>(cur.size()) == max_length) return;
    for (std::int64_t c = 2; c <= max_entry; ++c) {
      cur.push_back(c);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

std::vector<std::vector<std::int64_t>> enumerate_knot_expansions(int max_weight) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  std::function<void(std::int64_t)> rec = [&](std::int64_t budget) {
    if (!cur.empty()) out.push_back(cur);
    for (std::int64_t c = 2; c <= budget; ++c) {
      cur.push_back(c);
      rec(budget - c);
      cur.pop_back();
    }
  };
  rec(max_weight);
  return out;
}

}  // namespace qfarey
