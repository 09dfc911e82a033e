// Acceptance gate: one line per criterion. A criterion is PASS when every
// check holds, DEVIATION when the computed content holds but a literal claim
// in the criterion is false (the line says which and why), FAIL otherwise.
// Only FAIL makes the exit status nonzero.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qfarey/cli.hpp"
#include "qfarey/contfrac.hpp"
#include "qfarey/farey.hpp"
#include "qfarey/io.hpp"
#include "qfarey/knots.hpp"
#include "qfarey/qcore.hpp"
#include "qfarey/quadirr.hpp"
#include "qfarey/spherical.hpp"
#include "qfarey/verify.hpp"

using namespace qfarey;

namespace {

// Time limits in seconds, one per timed criterion.
constexpr double kLimitExamples = 1.0;
constexpr double kLimitThm = 30.0;
constexpr double kLimitFarey = 10.0;
constexpr double kLimitJones = 10.0;
constexpr double kLimitHom = 10.0;
constexpr double kLimitQuad = 60.0;
constexpr double kLimitGolden = 10.0;

// Bounds of the exhaustive sets.
constexpr int kThmBound = 200;
constexpr int kFareyBound = 50;
constexpr int kJonesWeight = 14;
constexpr int kHomBound = 50;
constexpr int kRoundTrips = 1000;
constexpr int kQuadEntry = 5;
constexpr int kQuadLength = 3;
constexpr int kQuadOrder = 24;

enum class Status { Pass, Deviation, Fail, Info };

const char* label(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Deviation: return "DEVIATION";
    case Status::Fail: return "FAIL";
    case Status::Info: return "INFO";
  }
  return "?";
}

struct Outcome {
  Status status = Status::Pass;
  std::string detail;
};

bool any_fail = false;

void report(int id, const std::string& title, double limit, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {Status::Fail, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit > 0 && secs >= limit && o.status != Status::Fail) {
    o.status = Status::Fail;
    o.detail += "; over the time limit";
  }
  if (o.status == Status::Fail) any_fail = true;
  char timing[64];
  if (limit > 0) {
    std::snprintf(timing, sizeof timing, "%.3f s, limit %.0f s", secs, limit);
  } else {
    std::snprintf(timing, sizeof timing, "untimed");
  }
  std::cout << "criterion " << id << " [" << label(o.status) << "] " << title << " (" << timing << "): " << o.detail
            << "\n";
}

LaurentPoly poly(std::initializer_list<long> coeffs, std::int64_t low = 0) {
  return LaurentPoly(low, std::vector<BigInt>(coeffs.begin(), coeffs.end()));
}

template <class F>
void for_each_rational(int bound, F&& f) {
  for (long s = 0; s <= bound; ++s) {
    for (long r = 0; r <= bound; ++r) {
      if ((r == 0 && s == 0) || std::gcd(r, s) != 1) continue;
      f(Rational(r, s));
    }
  }
}

std::string suite_detail(const SuiteReport& rep) {
  std::string out = std::to_string(rep.cases) + " cases";
  if (rep.counterexample) out += "; first failure " + *rep.counterexample;
  return out;
}

// ---------------------------------------------------------------------------

Outcome worked_examples() {
  struct Case {
    std::string name;
    Rational x;
    Flavor flavor;
    LaurentPoly num, den;
  };
  const Rational inf = Rational::infinity();
  const std::vector<Case> cases = {
      {"[12/5]#", {12, 5}, Flavor::Sharp, poly({1, 2, 3, 3, 2, 1}), poly({1, 1, 2, 1})},
      {"[7/3]#", {7, 3}, Flavor::Sharp, poly({1, 2, 2, 1, 1}), poly({1, 1, 1})},
      {"[5/2]#", {5, 2}, Flavor::Sharp, poly({1, 2, 1, 1}), poly({1, 1})},
      {"[12/5]b", {12, 5}, Flavor::Flat, poly({1, 2, 2, 2, 3, 1, 1}), poly({1, 1, 1, 1, 1})},
      {"[7/3]b", {7, 3}, Flavor::Flat, poly({1, 1, 1, 2, 1, 1}), poly({1, 0, 1, 1})},
      {"[5/2]b", {5, 2}, Flavor::Flat, poly({1, 1, 1, 1, 1}), poly({1, 0, 1})},
      {"[7/2]b", {7, 2}, Flavor::Flat, poly({1, 1, 2, 1, 1, 1}), poly({1, 0, 1})},
      {"[3]b", {3, 1}, Flavor::Flat, poly({1, 1, 0, 1}), poly({1})},
      {"[4]b", {4, 1}, Flavor::Flat, poly({1, 1, 1, 0, 1}), poly({1})},
      {"[9/4]b", {9, 4}, Flavor::Flat, poly({1, 1, 1, 2, 2, 1, 1}), poly({1, 0, 1, 1, 1})},
      {"[2]b", {2, 1}, Flavor::Flat, poly({1, 0, 1}), poly({1})},
      {"[0]#", {0, 1}, Flavor::Sharp, LaurentPoly(), poly({1})},
      {"[0]b", {0, 1}, Flavor::Flat, poly({-1, 1}, -1), poly({1})},
      {"[inf]#", inf, Flavor::Sharp, poly({1}), LaurentPoly()},
      {"[inf]b", inf, Flavor::Flat, poly({1}), poly({1, -1})},
  };
  int ok = 0;
  int total = 0;
  std::string failures;
  auto check = [&](bool cond, const std::string& name) {
    ++total;
    if (cond) {
      ++ok;
    } else {
      failures += " " + name;
    }
  };
  for (const Case& c : cases) {
    const QRatFunc v = qrat(c.x, c.flavor);
    check(v.num() == c.num && v.den() == c.den, c.name);
  }
  check(to_regular_even(Rational(8, 11)) == RegularCF({0, 1, 2, 1, 1, 1}), "8/11 regular");
  check(to_negative(Rational(8, 11)) == NegativeCF({1, 4, 3}), "8/11 negative");
  check(regular_to_negative(RegularCF({0, 1, 2, 1, 1, 1})) == NegativeCF({1, 4, 3}), "8/11 pair");
  check(jones_closed(NegativeCF({3, 2, 2, 2})).poly == poly({1, 1, 2, 2, 1, 1, 1}), "J_9/4");

  // The printed expansions of 11/8 are consistent with each other but
  // evaluate to 10/7; 11/8 itself is [1,2,1,2] = [[2,2,3,2]].
  const bool printed_pair_consistent = regular_to_negative(RegularCF({1, 2, 2, 1})) == NegativeCF({2, 2, 4});
  const bool printed_value = evaluate(RegularCF({1, 2, 2, 1})) == Rational(10, 7) &&
                             evaluate(NegativeCF({2, 2, 4})) == Rational(10, 7);
  const bool true_pair = to_regular_even(Rational(11, 8)) == RegularCF({1, 2, 1, 2}) &&
                         to_negative(Rational(11, 8)) == NegativeCF({2, 2, 3, 2});
  check(printed_pair_consistent, "[1,2,2,1] -> [[2,2,4]]");
  check(true_pair, "11/8 expansions");
  check(qrat_flat_regular(RegularCF({1, 2, 1, 2})) == qrat_flat(NegativeCF({2, 2, 3, 2})), "[11/8]b both routes");

  Outcome o;
  o.detail = std::to_string(ok) + "/" + std::to_string(total) + " exact";
  if (ok != total) {
    o.status = Status::Fail;
    o.detail += "; mismatched:" + failures;
    return o;
  }
  if (printed_value) {
    o.status = Status::Deviation;
    o.detail +=
        "; the stated 11/8 = [1,2,2,1] = [[2,2,4]] is false: both expansions evaluate to 10/7 (they do match each "
        "other); 11/8 is [1,2,1,2] = [[2,2,3,2]] and both routes agree on it";
  }
  return o;
}

Outcome suite_outcome(const SuiteReport& rep) {
  return {rep.passed ? Status::Pass : Status::Fail, suite_detail(rep)};
}

Outcome homological() {
  const SuiteReport rep = verify_corollary5_4(kHomBound);
  long identity_cases = 0;
  long verbatim_holds = 0;
  std::string witness;
  for_each_rational(kHomBound, [&](const Rational& x) {
    if (x.is_zero() || x.is_infinity() || x == Rational(1, 1)) return;
    ++identity_cases;
    const FareyIdentityReport r = farey_identity_check(to_negative(x));
    if (r.hom_ck_plus_2_ok) {
      ++verbatim_holds;
    } else if (witness.empty()) {
      witness = x.to_string() + " = " + to_negative(x).to_string();
    }
  });

  std::mt19937_64 rng(0xacce97);
  std::uniform_int_distribution<long> coeff(-50, 50), expo(-6, 6), len(0, 6);
  auto random_poly = [&] {
    std::vector<std::pair<std::int64_t, BigInt>> terms;
    for (long i = len(rng); i > 0; --i) terms.emplace_back(expo(rng), BigInt(coeff(rng)));
    return LaurentPoly::from_terms(terms);
  };
  int round_trips = 0;
  for (int i = 0; i < kRoundTrips; ++i) {
    const FunctionalPair o{random_poly(), random_poly()};
    if (hom_to_occ(occ_to_hom(o)) == o) ++round_trips;
  }

  Outcome out;
  out.detail = "ratio identities on " + std::to_string(rep.cases) + " rationals; occ identity and hom identity (gamma " +
               "weight q^(2-c_k)) on " + std::to_string(identity_cases) + "; occ<->hom round trip " +
               std::to_string(round_trips) + "/" + std::to_string(kRoundTrips);
  if (!rep.passed || round_trips != kRoundTrips) {
    out.status = Status::Fail;
    if (rep.counterexample) out.detail += "; first failure " + *rep.counterexample;
    return out;
  }
  if (verbatim_holds != identity_cases) {
    out.status = Status::Deviation;
    out.detail += "; the hom identity as stated (gamma weight q^(c_k+2)) holds for " + std::to_string(verbatim_holds) +
                  " of " + std::to_string(identity_cases) + ", first failure " + witness;
  }
  return out;
}

Outcome quadratic() {
  const SuiteReport rep = verify_quad(kQuadEntry, kQuadLength, kQuadOrder);
  if (!rep.passed) return {Status::Fail, suite_detail(rep)};
  long occ_power = 0;
  long hom_power = 0;
  long periods = 0;
  std::string example;
  for (const auto& period : enumerate_periods(kQuadEntry, kQuadLength)) {
    ++periods;
    const PeriodicNegCF p(period);
    const Surd base = quad_surd(p);
    const auto l_occ = surd_scale(base, quad_occ_form(p));
    const auto l_hom = surd_scale(base, quad_hom_form(p));
    if (!l_occ || !l_hom) return {Status::Fail, "no scale for a period"};
    if (l_occ->terms().size() == 1) ++occ_power;
    if (l_hom->terms().size() == 1) ++hom_power;
    if (period.size() == 2 && example.empty()) {
      example = "period (" + std::to_string(period[0]) + "," + std::to_string(period[1]) + "): occ scale " +
                l_occ->to_string() + ", hom scale " + l_hom->to_string();
    }
  }
  Outcome out;
  out.detail = std::to_string(periods) + " periods; series = convergents through q^" + std::to_string(kQuadOrder) +
               "; q=1 values are the classical fixed points; all three surds have the same value; " + example;
  if (occ_power != periods || hom_power != periods) {
    out.status = Status::Deviation;
    out.detail += "; occ-form scale is a power of q for " + std::to_string(occ_power) +
                  ", hom-form scale for " + std::to_string(hom_power) +
                  " (it is q^(-k)(1 - q + q^2), which the stated hom formula carries)";
  }
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

Outcome goldens() {
  const std::filesystem::path dir = QFAREY_GOLDEN_DIR;
  bool same = true;
  std::string json_text;
  for (const char* format : {"svg", "json"}) {
    std::ostringstream out, err;
    const int status = run({"tess", "--depth", "3", "--flavor", "flat", "--format", format}, out, err);
    const std::string golden = slurp(dir / (std::string("tess_depth3_flat.") + format));
    same = same && status == 0 && !golden.empty() && out.str() == golden;
    if (std::string(format) == "json") json_text = out.str();
  }
  bool third = false;
  bool half = false;
  const Json j = Json::parse(json_text);
  for (const auto& t : j["triangles"]) {
    if (t["alpha"] == "1/3" && t["beta"] == "0/1" && t["weights"]["beta_alpha"] == 3) third = true;
    if (t["alpha"] == "1/2" && t["beta"] == "0/1" && t["weights"]["beta_alpha"] == 2) half = true;
  }
  Outcome o;
  o.status = same && third && half ? Status::Pass : Status::Fail;
  o.detail = std::string("svg and json ") + (same ? "byte-identical" : "DIFFER") + "; q^3 on 0--1/3 " +
             (third ? "present" : "missing") + ", q^2 on 0--1/2 " + (half ? "present" : "missing");
  return o;
}

}  // namespace

int main() {
  report(1, "worked examples", kLimitExamples, worked_examples);
  report(2, "regular vs negative q-rationals, r, s <= 200, both flavors", kLimitThm,
         [] { return suite_outcome(verify_thm2_5(kThmBound)); });
  report(3, "q-deformed Farey sums, r, s <= 50, plus [[2^k]], k <= 8", kLimitFarey,
         [] { return suite_outcome(verify_farey_sums(kFareyBound)); });
  report(4, "Jones recursion, closed form, J(1) and reversal, sum(c) <= 14", kLimitJones,
         [] { return suite_outcome(verify_jones(kJonesWeight)); });
  report(5, "occ/hom ratio and Farey identities, r, s <= 50, round trip", kLimitHom, homological);
  report(6, "quadratic irrationals, entries in [2,5], length <= 3", kLimitQuad, quadratic);
  report(7, "categorical statements", 0, [] {
    return Outcome{Status::Info,
                   "not reproducible here by construction; their polynomial content is checked by criterion 5"};
  });
  report(8, "tessellation golden files", kLimitGolden, goldens);
  return any_fail ? 1 : 0;
}
