#include "qfarey/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "qfarey/error.hpp"

namespace qfarey {

LaurentPoly::LaurentPoly(const BigInt& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

LaurentPoly::LaurentPoly(std::int64_t low, std::vector<BigInt> coeffs)
    : low_(low), coeffs_(std::move(coeffs)) {
  trim();
}

LaurentPoly LaurentPoly::monomial(const BigInt& coeff, std::int64_t exponent) {
  return LaurentPoly(exponent, std::vector<BigInt>{coeff});
}

LaurentPoly LaurentPoly::from_terms(std::span<const std::pair<std::int64_t, BigInt>> terms) {
  LaurentPoly result;
  for (const auto& [e, c] : terms) result += monomial(c, e);
  return result;
}

void LaurentPoly::trim() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](const BigInt& c) { return c != 0; });
  coeffs_.erase(last.base(), coeffs_.end());
  low_ += first - coeffs_.begin();
  coeffs_.erase(coeffs_.begin(), first);
}

std::int64_t LaurentPoly::min_degree() const {
  if (is_zero()) throw Error(ErrorKind::DomainError, "min_degree of the zero polynomial");
  return low_;
}

std::int64_t LaurentPoly::max_degree() const {
  if (is_zero()) throw Error(ErrorKind::DomainError, "max_degree of the zero polynomial");
  return low_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
}

BigInt LaurentPoly::coeff(std::int64_t exponent) const {
  if (is_zero() || exponent < low_ || exponent > max_degree()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::vector<std::pair<std::int64_t, BigInt>> LaurentPoly::terms() const {
  std::vector<std::pair<std::int64_t, BigInt>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<std::int64_t>(i), coeffs_[i]);
  }
  return out;
}

namespace {

// Accumulates sign * rhs into lhs.
void accumulate(std::int64_t& low, std::vector<BigInt>& coeffs, const LaurentPoly& rhs, int sign) {
  if (rhs.is_zero()) return;
  const std::int64_t r_low = rhs.min_degree();
  const std::int64_t r_high = rhs.max_degree();
  if (coeffs.empty()) {
    low = r_low;
    coeffs.assign(rhs.dense().begin(), rhs.dense().end());
    if (sign < 0) {
      for (auto& c : coeffs) c = -c;
    }
    return;
  }
  const std::int64_t high = low + static_cast<std::int64_t>(coeffs.size()) - 1;
  const std::int64_t new_low = std::min(low, r_low);
  const std::int64_t new_high = std::max(high, r_high);
  if (new_low < low) coeffs.insert(coeffs.begin(), static_cast<std::size_t>(low - new_low), BigInt(0));
  coeffs.resize(static_cast<std::size_t>(new_high - new_low + 1));
  low = new_low;
  const auto& src = rhs.dense();
  const auto offset = static_cast<std::size_t>(r_low - new_low);
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (sign > 0) {
      coeffs[offset + i] += src[i];
    } else {
      coeffs[offset + i] -= src[i];
    }
  }
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  accumulate(low_, coeffs_, rhs, +1);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  accumulate(low_, coeffs_, rhs, -1);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  const auto& a = lhs.coeffs_;
  const auto& b = rhs.coeffs_;
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return LaurentPoly(lhs.low_ + rhs.low_, std::move(out));
}

LaurentPoly operator*(const BigInt& scalar, const LaurentPoly& p) {
  if (scalar == 0) return {};
  LaurentPoly out = p;
  for (auto& c : out.coeffs_) c *= scalar;
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms()) {
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "q";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

LaurentPoly shift(const LaurentPoly& p, std::int64_t n) {
  if (p.is_zero()) return p;
  return LaurentPoly(p.min_degree() + n, p.dense());
}

LaurentPoly invert_variable(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  std::vector<BigInt> reversed(p.dense().rbegin(), p.dense().rend());
  return LaurentPoly(-p.max_degree(), std::move(reversed));
}

BigRational evaluate(const LaurentPoly& p, const BigRational& x) {
  if (p.is_zero()) return 0;
  if (x == 0) {
    if (p.min_degree() < 0) throw Error(ErrorKind::EvalAtZero, "pole at q = 0 in " + p.to_string());
    return BigRational(p.coeff(0));
  }
  // Horner over the dense block, then scale by x^min_degree.
  BigRational acc = 0;
  const auto& c = p.dense();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * x + BigRational(*it);
  }
  const std::int64_t low = p.min_degree();
  BigRational scale = 1;
  const BigRational base = low >= 0 ? x : BigRational(1) / x;
  for (std::int64_t i = 0; i < (low >= 0 ? low : -low); ++i) scale *= base;
  acc *= scale;
  acc.canonicalize();
  return acc;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DomainError, "division by the zero polynomial");
  if (a.is_zero()) return LaurentPoly{};
  const auto& num = a.dense();
  const auto& den = b.dense();
  if (num.size() < den.size()) return std::nullopt;
  const std::size_t n = num.size() - den.size() + 1;
  std::vector<BigInt> quot(n);
  BigInt acc;
  for (std::size_t i = 0; i < n; ++i) {
    acc = num[i];
    for (std::size_t j = 1; j < den.size() && j <= i; ++j) {
      mpz_submul(acc.get_mpz_t(), den[j].get_mpz_t(), quot[i - j].get_mpz_t());
    }
    if (!mpz_divisible_p(acc.get_mpz_t(), den[0].get_mpz_t())) return std::nullopt;
    mpz_divexact(quot[i].get_mpz_t(), acc.get_mpz_t(), den[0].get_mpz_t());
  }
  LaurentPoly q(a.min_degree() - b.min_degree(), std::move(quot));
  if (q * b != a) return std::nullopt;
  return q;
}

bool is_palindromic(const LaurentPoly& p) {
  const auto& c = p.dense();
  return std::equal(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(c.size() / 2), c.rbegin());
}

namespace {

// Rescale by +-q^n so that `lead` has min_degree 0 and a positive lowest coefficient.
void normalize_pair(LaurentPoly& lead, LaurentPoly& other) {
  const std::int64_t n = -lead.min_degree();
  const bool negate = lead.dense().front() < 0;
  lead = shift(lead, n);
  other = shift(other, n);
  if (negate) {
    lead = -lead;
    other = -other;
  }
}

}  // namespace

QRatFunc::QRatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) {
    if (num_.is_zero()) throw Error(ErrorKind::DomainError, "0/0 is not a q-rational");
    normalize_pair(num_, den_);
  } else {
    normalize_pair(den_, num_);
  }
}

std::string QRatFunc::to_string() const { return "(" + num_.to_string() + ")/(" + den_.to_string() + ")"; }

bool equivalent(const QRatFunc& a, const QRatFunc& b) { return a.num() * b.den() == b.num() * a.den(); }

PowerSeries PowerSeries::truncated(int order) const {
  if (order < 0 || order > this->order()) throw Error(ErrorKind::DomainError, "truncation order out of range");
  return PowerSeries{std::vector<BigInt>(coeffs.begin(), coeffs.begin() + order + 1)};
}

std::string PowerSeries::to_string() const {
  std::vector<BigInt> c = coeffs;
  return LaurentPoly(0, std::move(c)).to_string() + " + O(q^" + std::to_string(order() + 1) + ")";
}

PowerSeries to_series(const LaurentPoly& p, int order) {
  if (order < 0) throw Error(ErrorKind::DomainError, "negative series order");
  if (!p.is_zero() && p.min_degree() < 0) throw Error(ErrorKind::NotExpandable, "negative exponent in " + p.to_string());
  PowerSeries s{std::vector<BigInt>(static_cast<std::size_t>(order) + 1)};
  for (int e = 0; e <= order; ++e) s.coeffs[static_cast<std::size_t>(e)] = p.coeff(e);
  return s;
}

PowerSeries series_quotient(const PowerSeries& num, const LaurentPoly& den) {
  if (den.is_zero() || den.min_degree() != 0) {
    throw Error(ErrorKind::NotExpandable, "denominator must have a nonzero constant term");
  }
  const int order = num.order();
  const BigInt d0 = den.coeff(0);
  PowerSeries out{std::vector<BigInt>(num.coeffs.size())};
  BigInt acc;
  for (int n = 0; n <= order; ++n) {
    acc = num.coeffs[static_cast<std::size_t>(n)];
    const std::int64_t top = std::min<std::int64_t>(n, den.max_degree());
    for (std::int64_t i = 1; i <= top; ++i) {
      const BigInt di = den.coeff(i);
      if (di == 0) continue;
      mpz_submul(acc.get_mpz_t(), di.get_mpz_t(), out.coeffs[static_cast<std::size_t>(n - i)].get_mpz_t());
    }
    if (!mpz_divisible_p(acc.get_mpz_t(), d0.get_mpz_t())) {
      throw Error(ErrorKind::NonIntegral, "series coefficient of q^" + std::to_string(n) + " is not an integer");
    }
    mpz_divexact(out.coeffs[static_cast<std::size_t>(n)].get_mpz_t(), acc.get_mpz_t(), d0.get_mpz_t());
  }
  return out;
}

PowerSeries series_expand(const QRatFunc& f, int order) {
  if (f.is_infinite()) throw Error(ErrorKind::NotExpandable, "the value is infinite");
  if (!f.num().is_zero() && f.num().min_degree() < 0) {
    throw Error(ErrorKind::NotExpandable, "numerator has negative exponents: " + f.num().to_string());
  }
  return series_quotient(to_series(f.num(), order), f.den());
}

PowerSeries sqrt_series(const LaurentPoly& p, int order) {
  if (order < 0) throw Error(ErrorKind::DomainError, "negative series order");
  if (p.is_zero() || p.min_degree() != 0 || p.coeff(0) <= 0 || !mpz_perfect_square_p(p.coeff(0).get_mpz_t())) {
    throw Error(ErrorKind::BadConstantTerm, "constant term of " + p.to_string() + " is not a positive square");
  }
  std::vector<BigRational> u(static_cast<std::size_t>(order) + 1);
  const BigInt root = sqrt(p.coeff(0));
  u[0] = BigRational(root);
  const BigRational twice_root(2 * root);
  for (int n = 1; n <= order; ++n) {
    BigRational acc(p.coeff(n));
    for (int i = 1; i < n; ++i) acc -= u[static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(n - i)];
    u[static_cast<std::size_t>(n)] = acc / twice_root;
    u[static_cast<std::size_t>(n)].canonicalize();
  }
  PowerSeries out{std::vector<BigInt>(u.size())};
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].get_den() != 1) {
      throw Error(ErrorKind::NonIntegral, "square-root coefficient of q^" + std::to_string(i) + " is " + u[i].get_str());
    }
    out.coeffs[i] = u[i].get_num();
  }
  return out;
}

}  // namespace qfarey
