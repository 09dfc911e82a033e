#include "qfarey/quadirr.hpp"

#include <numeric>

#include "qfarey/contfrac.hpp"
#include "qfarey/error.hpp"
#include "qfarey/qcore.hpp"
#include "qfarey/spherical.hpp"

namespace qfarey {

namespace {

LaurentPoly q_pow(std::int64_t e) { return LaurentPoly::q_power(e); }

const BigInt kTwo(2);
const BigInt kFour(4);

std::int64_t sum(std::span<const std::int64_t> c) { return std::accumulate(c.begin(), c.end(), std::int64_t{0}); }

Surd assemble(const LaurentPoly& a1, const LaurentPoly& a2, const LaurentPoly& konst, const LaurentPoly& b) {
  const LaurentPoly diff = a1 - a2;
  return {a1 + a2, diff * diff - kFour * konst, b};
}

}  // namespace

PeriodicNegCF::PeriodicNegCF(std::vector<std::int64_t> period) : period_(std::move(period)) {
  if (period_.empty()) throw Error(ErrorKind::DomainError, "period must be nonempty");
  bool above_two = false;
  for (std::int64_t c : period_) {
    if (c < 2) throw Error(ErrorKind::DomainError, "period entries must be at least 2");
    above_two = above_two || c > 2;
  }
  if (!above_two) throw Error(ErrorKind::DomainError, "an all-2 period has a rational limit");
}

std::vector<std::int64_t> PeriodicNegCF::unrolled(std::size_t n) const {
  std::vector<std::int64_t> out;
  out.reserve(n * period_.size());
  for (std::size_t i = 0; i < n; ++i) out.insert(out.end(), period_.begin(), period_.end());
  return out;
}

Surd quad_surd(const PeriodicNegCF& p) {
  const auto c = p.period();
  const std::size_t k = c.size();
  const LaurentPoly ek = continuant_sharp(c);
  // E_{k-2}(c2..c_{k-1}); for k = 1 this is E_{-1} = 0.
  const LaurentPoly inner = k >= 2 ? shift(continuant_sharp(c.subspan(1, k - 2)), c.back() - 1) : LaurentPoly();
  const LaurentPoly diff = ek - inner;
  return {ek + inner, diff * diff - kFour * q_pow(sum(c) - static_cast<std::int64_t>(k)),
          kTwo * continuant_sharp(c.subspan(1))};
}

Surd quad_occ_form(const PeriodicNegCF& p) {
  const auto c = p.period();
  const auto k = static_cast<std::int64_t>(c.size());
  const FunctionalPair oa = occ_closed_form(c);
  const FunctionalPair og = occ_closed_form(c.first(c.size() - 1));
  return assemble(oa.at_p2, shift(og.at_p1, c.back() - 2), q_pow(sum(c) - 3 * k + 2), kTwo * oa.at_p1);
}

LaurentPoly hom_constant(const PeriodicNegCF& p) {
  const auto k = static_cast<std::int64_t>(p.size());
  const std::vector<BigInt> t{1, -2, 3, -2, 1};
  return LaurentPoly(sum(p.period()) - 3 * k, t);
}

Surd quad_hom_form(const PeriodicNegCF& p) {
  const auto c = p.period();
  const FunctionalPair ha = occ_to_hom(occ_closed_form(c));
  const FunctionalPair hg = occ_to_hom(occ_closed_form(c.first(c.size() - 1)));
  const LaurentPoly q = q_pow(1);
  const LaurentPoly q_minus_1 = q - LaurentPoly(1L);
  const LaurentPoly one_minus_q = LaurentPoly(1L) - q;
  const LaurentPoly a1 = q_minus_1 * ha.at_p1 + q * ha.at_p2;
  const LaurentPoly a2 = shift(hg.at_p1 + one_minus_q * hg.at_p2, c.back() - 1);
  const LaurentPoly b = kTwo * q * (ha.at_p1 + one_minus_q * ha.at_p2);
  return assemble(a1, a2, hom_constant(p), b);
}

std::optional<LaurentPoly> surd_scale(const Surd& a, const Surd& b) {
  if (a.s.is_zero() || b.s.is_zero()) return std::nullopt;
  auto lambda = divide_exact(b.s, a.s);
  if (!lambda || lambda->dense().front() <= 0) return std::nullopt;
  if (!(b.r == *lambda * a.r) || !(b.p == *lambda * *lambda * a.p)) return std::nullopt;
  return lambda;
}

PowerSeries quad_series(const PeriodicNegCF& p, int order) {
  const Surd s = quad_surd(p);
  PowerSeries num = sqrt_series(s.p, order);
  const PowerSeries r = to_series(s.r, order);
  for (std::size_t i = 0; i < num.coeffs.size(); ++i) num.coeffs[i] += r.coeffs[i];
  return series_quotient(num, s.s);
}

PowerSeries convergent_series(const PeriodicNegCF& p, int order, int max_periods) {
  if (max_periods < 2) throw Error(ErrorKind::DomainError, "max_periods must be at least 2");
  PowerSeries prev = series_expand(qrat_sharp(NegativeCF(p.unrolled(1))), order);
  for (int n = 2; n <= max_periods; ++n) {
    PowerSeries cur = series_expand(qrat_sharp(NegativeCF(p.unrolled(static_cast<std::size_t>(n)))), order);
    if (cur == prev) return cur;
    prev = std::move(cur);
  }
  throw Error(ErrorKind::NoStabilization,
              "convergents did not stabilize through order " + std::to_string(order) + " within " +
                  std::to_string(max_periods) + " periods");
}

ClassicalSurd at_one(const Surd& s) {
  const BigRational one(1);
  auto integral = [&](const LaurentPoly& x) { return BigInt(evaluate(x, one).get_num()); };
  return {integral(s.r), integral(s.p), integral(s.s)};
}

double ClassicalSurd::value() const {
  mpf_class root(0, 256);
  mpf_class pf(p, 256);
  mpf_sqrt(root.get_mpf_t(), pf.get_mpf_t());
  mpf_class v = (mpf_class(r, 256) + root) / mpf_class(s, 256);
  return v.get_d();
}

}  // namespace qfarey
