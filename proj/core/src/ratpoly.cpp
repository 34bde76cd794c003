#include "hfejer/ratpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "hfejer/errors.hpp"

namespace hfejer {

ExactRational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

mpz_class parse_integer(std::string_view s) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) body.remove_prefix(1);
  if (!all_digits(body)) throw std::invalid_argument("malformed number '" + std::string(s) + "'");
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

ExactRational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    exponent = parse_integer(s.substr(e + 1)).get_si();
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(s)) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    digits = std::string(s);
  }
  mpz_class mant(digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  ExactRational q = exponent < 0 ? ExactRational(mant, scale) : ExactRational(mant * scale);
  q.canonicalize();
  return negative ? ExactRational(-q) : q;
}

}  // namespace

ExactRational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash));
    mpz_class den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    ExactRational q(num, den);
    q.canonicalize();
    return q;
  }
  return parse_decimal(text);
}

std::string to_string(const ExactRational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

RatPoly::RatPoly(std::vector<ExactRational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

RatPoly::RatPoly(std::initializer_list<ExactRational> coeffs) : RatPoly(std::vector<ExactRational>(coeffs)) {}

RatPoly RatPoly::constant(const ExactRational& c) { return RatPoly(std::vector<ExactRational>{c}); }

RatPoly RatPoly::monomial(const ExactRational& c, std::size_t k) {
  std::vector<ExactRational> v(k + 1);
  v[k] = c;
  return RatPoly(std::move(v));
}

ExactRational RatPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : ExactRational(0); }

void RatPoly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  normalize();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  normalize();
  return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& rhs) { return *this = *this * rhs; }

RatPoly& RatPoly::operator*=(const ExactRational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<ExactRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  ExactRational t;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      t = a.coeffs_[i] * b.coeffs_[j];
      out[i + j] += t;
    }
  }
  // Leading term is a product of nonzero rationals, so no renormalization.
  RatPoly r;
  r.coeffs_ = std::move(out);
  return r;
}

RatPoly operator-(RatPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::string to_string(const RatPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long k = p.degree(); k >= 0; --k) {
    const ExactRational& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    ExactRational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (!unit || k == 0) os << mag.get_str();
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

RatPoly poly_arith(const RatPoly& a, const RatPoly& b, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
  }
  throw std::invalid_argument("unknown arithmetic op");
}

RatPoly derivative(const RatPoly& a, unsigned p) {
  if (p == 0) return a;
  if (a.degree() < static_cast<long>(p)) return {};
  std::vector<ExactRational> out(a.size() - p);
  mpz_class falling;
  for (std::size_t k = 0; k < out.size(); ++k) {
    // (k+p)!/k! = (k+1)(k+2)...(k+p)
    falling = 1;
    for (unsigned j = 1; j <= p; ++j) falling *= static_cast<unsigned long>(k + j);
    out[k] = a.coeffs()[k + p] * ExactRational(falling);
  }
  return RatPoly(std::move(out));
}

ExactRational evaluate(const RatPoly& a, const ExactRational& x) {
  ExactRational acc = 0;
  for (auto it = a.coeffs().rbegin(); it != a.coeffs().rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& num, const RatPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
  if (num.degree() < den.degree()) return {RatPoly{}, num};
  std::vector<ExactRational> rem = num.coeffs();
  const std::size_t dd = den.size() - 1;
  std::vector<ExactRational> quot(num.size() - dd);
  const ExactRational& lead = den.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    ExactRational q = rem[k + dd] / lead;
    quot[k] = q;
    if (sgn(q) == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * den.coeffs()[j];
  }
  rem.resize(dd);
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly divide_exact(const RatPoly& num, const RatPoly& den) {
  auto [q, r] = divmod(num, den);
  if (!r.is_zero()) throw NotDivisible();
  return q;
}

RatPoly chebyshev_t(unsigned n) {
  RatPoly prev = RatPoly::constant(1);
  if (n == 0) return prev;
  RatPoly cur = RatPoly::x();
  const RatPoly two_x = RatPoly::monomial(2, 1);
  for (unsigned k = 1; k < n; ++k) {
    RatPoly next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RatPoly odd_part(const RatPoly& a) {
  std::vector<ExactRational> w;
  w.reserve(a.size() / 2);
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k % 2 == 0) {
      if (sgn(a.coeffs()[k]) != 0)
        throw NotOdd("polynomial has a nonzero coefficient at even degree " + std::to_string(k));
    } else {
      w.push_back(a.coeffs()[k]);
    }
  }
  return RatPoly(std::move(w));
}

RatPoly reverse(const RatPoly& a) {
  if (a.is_zero() || sgn(a.coeffs().front()) == 0) throw ZeroConstantTerm();
  std::vector<ExactRational> r(a.coeffs().rbegin(), a.coeffs().rend());
  return RatPoly(std::move(r));
}

std::vector<ExactRational> newton_power_sums(const RatPoly& a, unsigned m_max) {
  if (a.degree() < 1) throw std::invalid_argument("power sums need a polynomial of degree >= 1");
  const std::size_t d = static_cast<std::size_t>(a.degree());
  const ExactRational& lead = a.leading();
  // c(k) is the coefficient k places below the leading one, zero past a_0.
  auto c = [&](std::size_t k) -> ExactRational { return k <= d ? a.coeffs()[d - k] : ExactRational(0); };

  std::vector<ExactRational> p(m_max + 1);
  for (std::size_t m = 1; m <= m_max; ++m) {
    // a_d p_m + sum_{k=1}^{m-1} a_{d-k} p_{m-k} + m a_{d-m} = 0
    ExactRational acc = ExactRational(static_cast<unsigned long>(m)) * c(m);
    for (std::size_t k = 1; k < m && k <= d; ++k) acc += c(k) * p[m - k];
    p[m] = -acc / lead;
  }
  p.erase(p.begin());
  return p;
}

RatPoly interpolate(std::span<const InterpolationPoint> points) {
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (points[i].first == points[j].first) throw DuplicateAbscissa();

  // Newton divided differences, then expand the Newton form by Horner.
  std::vector<ExactRational> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);

  RatPoly result;
  for (std::size_t i = n; i-- > 0;) {
    result *= RatPoly{-points[i].first, ExactRational(1)};
    result += RatPoly::constant(dd[i]);
  }
  return result;
}

}  // namespace hfejer
