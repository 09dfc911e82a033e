#include "qfarey/qcore.hpp"

#include "qfarey/error.hpp"

namespace qfarey {

namespace {

const LaurentPoly kOne(1L);

LaurentPoly one_minus_q() { return LaurentPoly(0, {BigInt(1), BigInt(-1)}); }

LaurentPoly q_pow(std::int64_t e) { return LaurentPoly::q_power(e); }

QMatrix base_matrix(Generator g, bool inverse) {
  const LaurentPoly zero;
  const LaurentPoly q = q_pow(1);
  const LaurentPoly qinv = q_pow(-1);
  switch (g) {
    case Generator::Sigma1:
      if (inverse) return {q, kOne, zero, kOne};
      return {qinv, -qinv, zero, kOne};
    case Generator::Sigma2:
      if (inverse) return {kOne, zero, -q, q};
      return {kOne, zero, kOne, qinv};
    case Generator::S:
      if (inverse) return {zero, kOne, -q, zero};
      return {zero, -qinv, kOne, zero};
  }
  throw Error(ErrorKind::DomainError, "unknown generator");
}

}  // namespace

LaurentPoly q_int_sharp(std::int64_t n) {
  if (n == 0) return {};
  if (n > 0) return LaurentPoly(0, std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(1)));
  return LaurentPoly(n, std::vector<BigInt>(static_cast<std::size_t>(-n), BigInt(-1)));
}

LaurentPoly q_int_flat(std::int64_t n) { return q_int_sharp(n) - q_pow(n - 1) + q_pow(n); }

LaurentPoly continuant_sharp(std::span<const std::int64_t> c) {
  LaurentPoly prev;  // E_{i-2}
  LaurentPoly cur = kOne;
  for (std::size_t i = 0; i < c.size(); ++i) {
    LaurentPoly next = q_int_sharp(c[i]) * cur;
    if (i > 0) next -= shift(prev, c[i - 1] - 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

LaurentPoly continuant_flat(std::span<const std::int64_t> c) {
  if (c.empty()) return kOne;
  return continuant_sharp(c) - shift(one_minus_q() * continuant_sharp(c.first(c.size() - 1)), c.back() - 1);
}

std::pair<LaurentPoly, LaurentPoly> continuant_pair(std::span<const std::int64_t> c, Flavor flavor) {
  if (c.empty()) return {kOne, flavor == Flavor::Sharp ? LaurentPoly() : one_minus_q()};
  if (flavor == Flavor::Sharp) return {continuant_sharp(c), continuant_sharp(c.subspan(1))};
  return {continuant_flat(c), continuant_flat(c.subspan(1))};
}

QRatFunc qrat(const NegativeCF& c, Flavor flavor) {
  auto [num, den] = continuant_pair(c.terms(), flavor);
  return QRatFunc(std::move(num), std::move(den));
}

QRatFunc qrat_sharp(const NegativeCF& c) { return qrat(c, Flavor::Sharp); }
QRatFunc qrat_flat(const NegativeCF& c) { return qrat(c, Flavor::Flat); }
QRatFunc qrat(const Rational& x, Flavor flavor) { return qrat(to_negative(x), flavor); }

namespace {

QRatFunc regular_eval(const RegularCF& a, Flavor flavor) {
  const auto t = a.terms();
  if (t.empty()) return QRatFunc(kOne, flavor == Flavor::Sharp ? LaurentPoly() : one_minus_q());
  LaurentPoly last = flavor == Flavor::Sharp ? q_int_sharp(t.back()) : q_int_flat(t.back());
  LaurentPoly num = invert_variable(last);
  LaurentPoly den = kOne;
  // Index i is 0-based here, so even i carries the unmirrored q-integer.
  for (std::size_t i = t.size() - 1; i-- > 0;) {
    const bool odd_position = i % 2 == 0;
    const LaurentPoly head = odd_position ? q_int_sharp(t[i]) : invert_variable(q_int_sharp(t[i]));
    const LaurentPoly w = q_pow(odd_position ? t[i] : -t[i]);
    LaurentPoly next = head * num + w * den;
    den = std::move(num);
    num = std::move(next);
  }
  return QRatFunc(std::move(num), std::move(den));
}

}  // namespace

QRatFunc qrat_sharp_regular(const RegularCF& a) { return regular_eval(a, Flavor::Sharp); }
QRatFunc qrat_flat_regular(const RegularCF& a) { return regular_eval(a, Flavor::Flat); }

QMatrix QMatrix::identity() { return {kOne, LaurentPoly(), LaurentPoly(), kOne}; }

QMatrix operator*(const QMatrix& x, const QMatrix& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

QMatrix gen_matrix(Generator g, std::int64_t power) {
  const QMatrix base = base_matrix(g, power < 0);
  QMatrix out = QMatrix::identity();
  for (std::int64_t i = 0; i < (power < 0 ? -power : power); ++i) out = out * base;
  return out;
}

QMatrix word_matrix(const GeneratorWord& word) {
  QMatrix out = QMatrix::identity();
  for (const auto& [g, e] : word) out = out * gen_matrix(g, e);
  return out;
}

ProjPoint word_apply(const GeneratorWord& word, const ProjPoint& p) {
  const QMatrix m = word_matrix(word);
  return {m.a * p.u + m.b * p.v, m.c * p.u + m.d * p.v};
}

GeneratorWord negative_word(const NegativeCF& c) {
  GeneratorWord w;
  for (std::int64_t ci : c.terms()) {
    w.emplace_back(Generator::Sigma1, -ci);
    w.emplace_back(Generator::S, 1);
  }
  return w;
}

GeneratorWord regular_word(const RegularCF& a) {
  GeneratorWord w;
  const auto t = a.terms();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i % 2 == 0) {
      w.emplace_back(Generator::Sigma1, -t[i]);
    } else {
      w.emplace_back(Generator::Sigma2, t[i]);
    }
  }
  return w;
}

std::vector<Convergent> convergents(std::span<const std::int64_t> c) {
  std::vector<Convergent> out;
  out.push_back({kOne, LaurentPoly(), kOne, one_minus_q()});
  if (c.empty()) return out;

  // Sharp numerators and denominators at i-1 and i.
  LaurentPoly r_prev = kOne;
  LaurentPoly r_cur = q_int_sharp(c[0]);
  LaurentPoly s_prev;
  LaurentPoly s_cur = kOne;
  out.push_back({r_cur, s_cur, q_int_flat(c[0]), kOne});

  for (std::size_t i = 1; i < c.size(); ++i) {
    const LaurentPoly tail_r = shift(r_prev, c[i - 1] - 1);
    const LaurentPoly tail_s = shift(s_prev, c[i - 1] - 1);
    Convergent next{q_int_sharp(c[i]) * r_cur - tail_r, q_int_sharp(c[i]) * s_cur - tail_s,
                    q_int_flat(c[i]) * r_cur - tail_r, q_int_flat(c[i]) * s_cur - tail_s};
    r_prev = std::move(r_cur);
    s_prev = std::move(s_cur);
    r_cur = next.sharp_num;
    s_cur = next.sharp_den;
    out.push_back(std::move(next));
  }
  return out;
}

}  // namespace qfarey
