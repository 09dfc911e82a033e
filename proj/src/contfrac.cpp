#include "qfarey/contfrac.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

#include "qfarey/error.hpp"

namespace qfarey {

namespace {

std::int64_t to_term(const BigInt& v) {
  if (!v.fits_slong_p()) throw Error(ErrorKind::DomainError, "continued-fraction entry " + v.get_str() + " overflows");
  return v.get_si();
}

BigInt parse_natural(std::string_view digits, std::string_view whole) {
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) {
    throw Error(ErrorKind::ParseError, "expected <r>/<s> with nonnegative integers, got '" + std::string(whole) + "'");
  }
  return BigInt(std::string(digits));
}

// Projective reduction of (p : q) to a Rational, rejecting negative values.
Rational to_rational(BigInt p, BigInt q) {
  if (q < 0) {
    p = -p;
    q = -q;
  }
  if (p < 0) throw Error(ErrorKind::DomainError, "expansion evaluates to a negative number");
  return Rational(std::move(p), std::move(q));
}

}  // namespace

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_ < 0 || den_ < 0) throw Error(ErrorKind::DomainError, "negative rationals are not supported");
  if (num_ == 0 && den_ == 0) throw Error(ErrorKind::DomainError, "0/0 is not a rational");
  BigInt g = gcd(num_, den_);
  num_ /= g;
  den_ /= g;
}

Rational Rational::parse(std::string_view text) {
  if (!text.empty() && text.front() == '-') throw Error(ErrorKind::DomainError, "negative rationals are not supported");
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_natural(text, text), BigInt(1));
  return Rational(parse_natural(text.substr(0, slash), text), parse_natural(text.substr(slash + 1), text));
}

RegularCF::RegularCF(std::vector<std::int64_t> terms) : terms_(std::move(terms)) {
  if (terms_.empty() || is_zero_expansion()) return;
  if (terms_.size() % 2 != 0) throw Error(ErrorKind::DomainError, "regular expansion must have even length");
  if (terms_[0] < 0) throw Error(ErrorKind::DomainError, "first regular entry must be nonnegative");
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    if (terms_[i] < 1) throw Error(ErrorKind::DomainError, "regular entries after the first must be positive");
  }
}

NegativeCF::NegativeCF(std::vector<std::int64_t> terms) : terms_(std::move(terms)) {
  if (terms_.empty() || is_zero_expansion()) return;
  if (terms_[0] < 1) throw Error(ErrorKind::DomainError, "first negative entry must be at least 1");
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    if (terms_[i] < 2) throw Error(ErrorKind::DomainError, "negative entries after the first must be at least 2");
  }
}

std::int64_t NegativeCF::weight() const { return std::accumulate(terms_.begin(), terms_.end(), std::int64_t{0}); }

std::string NegativeCF::to_string() const {
  std::ostringstream os;
  os << "[[";
  for (std::size_t i = 0; i < terms_.size(); ++i) os << (i ? "," : "") << terms_[i];
  os << "]]";
  return os.str();
}

RegularCF to_regular_even(const Rational& x) {
  if (x.is_infinity()) return RegularCF({});
  if (x.is_zero()) return RegularCF({-1, 1});
  std::vector<std::int64_t> a;
  BigInt r = x.num();
  BigInt s = x.den();
  while (s != 0) {
    BigInt quot;
    BigInt rem;
    mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t());
    a.push_back(to_term(quot));
    r = s;
    s = rem;
  }
  // Canonical expansions end in a term >= 2 unless they are a single [n].
  if (a.size() % 2 == 1) {
    a.back() -= 1;
    a.push_back(1);
  }
  return RegularCF(std::move(a));
}

NegativeCF to_negative(const Rational& x) {
  if (x.is_infinity()) return NegativeCF({});
  if (x.is_zero()) return NegativeCF({1, 1});
  std::vector<std::int64_t> c;
  BigInt r = x.num();
  BigInt s = x.den();
  while (s != 0) {
    BigInt ceil_q;
    mpz_cdiv_q(ceil_q.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t());
    c.push_back(to_term(ceil_q));
    // ceil - r/s = (ceil * s - r) / s; continue with its reciprocal.
    BigInt rem = ceil_q * s - r;
    r = s;
    s = rem;
  }
  return NegativeCF(std::move(c));
}

NegativeCF regular_to_negative(const RegularCF& a) {
  if (a.is_zero_expansion()) throw Error(ErrorKind::DomainError, "no negative conversion for the expansion of zero");
  std::vector<std::int64_t> c;
  const auto t = a.terms();
  for (std::size_t i = 0; i < t.size(); i += 2) {
    c.push_back(t[i] + (i == 0 ? 1 : 2));
    c.insert(c.end(), static_cast<std::size_t>(t[i + 1] - 1), 2);
  }
  return NegativeCF(std::move(c));
}

Rational evaluate(const RegularCF& a) {
  // Right fold starting from infinity = (1 : 0).
  BigInt p = 1;
  BigInt q = 0;
  const auto t = a.terms();
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    BigInt next = BigInt(static_cast<long>(*it)) * p + q;
    q = p;
    p = next;
  }
  return to_rational(std::move(p), std::move(q));
}

Rational evaluate(const NegativeCF& c) {
  BigInt p = 1;
  BigInt q = 0;
  const auto t = c.terms();
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    BigInt next = BigInt(static_cast<long>(*it)) * p - q;
    q = p;
    p = next;
  }
  return to_rational(std::move(p), std::move(q));
}

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    const auto item = text.substr(pos, comma - pos);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw Error(ErrorKind::ParseError, "expected a comma-separated integer list, got '" + std::string(text) + "'");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

}  // namespace qfarey
