#include "zeta3/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "zeta3/error.hpp"

namespace zeta3 {

IntegerPolynomial::IntegerPolynomial(std::vector<Integer> coefficients)
    : coeffs_(std::move(coefficients)) {
  normalize();
}

IntegerPolynomial::IntegerPolynomial(std::initializer_list<long long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long long c : coefficients) coeffs_.emplace_back(c);
  normalize();
}

IntegerPolynomial IntegerPolynomial::constant(const Integer& c) {
  return IntegerPolynomial(std::vector<Integer>{c});
}

IntegerPolynomial IntegerPolynomial::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return IntegerPolynomial(std::move(v));
}

void IntegerPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntegerPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

const Integer& IntegerPolynomial::leading_coefficient() const {
  if (coeffs_.empty()) throw Error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

IntegerPolynomial& IntegerPolynomial::operator+=(const IntegerPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntegerPolynomial& IntegerPolynomial::operator-=(const IntegerPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntegerPolynomial(std::move(out));
}

IntegerPolynomial& IntegerPolynomial::operator*=(const IntegerPolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

IntegerPolynomial& IntegerPolynomial::operator*=(const Integer& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

IntegerPolynomial IntegerPolynomial::operator-() const {
  IntegerPolynomial r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

IntegerPolynomial IntegerPolynomial::pow(unsigned exponent) const {
  IntegerPolynomial result{1};
  IntegerPolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

IntegerPolynomial IntegerPolynomial::substitute_power(unsigned k) const {
  if (k == 0) return constant(evaluate(Integer(1)));
  if (is_zero()) return {};
  std::vector<Integer> out((coeffs_.size() - 1) * k + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * k] = coeffs_[i];
  return IntegerPolynomial(std::move(out));
}

IntegerPolynomial IntegerPolynomial::scale_variable(const Integer& c) const {
  std::vector<Integer> out = coeffs_;
  Integer power = 1;
  for (auto& x : out) {
    x *= power;
    power *= c;
  }
  return IntegerPolynomial(std::move(out));
}

IntegerPolynomial IntegerPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntegerPolynomial(std::move(out));
}

Integer IntegerPolynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntegerPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

Integer IntegerPolynomial::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

IntegerPolynomial IntegerPolynomial::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (coeffs_.back() < 0) g = -g;
  std::vector<Integer> out = coeffs_;
  for (auto& c : out) c /= g;
  return IntegerPolynomial(std::move(out));
}

std::string IntegerPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "u";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

namespace {

// Long division over Z; nullopt when some step needs a non-integral
// quotient coefficient or the remainder is nonzero.
std::optional<IntegerPolynomial> divide_over_integers(const IntegerPolynomial& a,
                                                      const IntegerPolynomial& b) {
  if (b.is_zero()) throw Error("division by the zero polynomial");
  if (a.is_zero()) return IntegerPolynomial{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Integer> rem(a.coefficients().begin(), a.coefficients().end());
  const auto bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  const Integer& lead = bc.back();
  std::vector<Integer> quot(rem.size() - db);
  Integer q, r;
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Integer& top = rem[k + db];
    if (top == 0) continue;
    boost::multiprecision::divide_qr(top, lead, q, r);
    if (r != 0) return std::nullopt;
    quot[k] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * bc[j];
  }
  for (const auto& c : rem) {
    if (c != 0) return std::nullopt;
  }
  return IntegerPolynomial(std::move(quot));
}

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) a mod b.
IntegerPolynomial pseudo_remainder(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  std::vector<Integer> rem(a.coefficients().begin(), a.coefficients().end());
  const auto bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  const Integer& lead = bc.back();
  while (rem.size() > db && !rem.empty()) {
    const std::size_t shift = rem.size() - 1 - db;
    const Integer top = rem.back();
    for (auto& c : rem) c *= lead;
    for (std::size_t j = 0; j <= db; ++j) rem[shift + j] -= top * bc[j];
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
  }
  return IntegerPolynomial(std::move(rem));
}

}  // namespace

std::optional<IntegerPolynomial> try_exact_divide(const IntegerPolynomial& a,
                                                  const IntegerPolynomial& b) {
  return divide_over_integers(a, b);
}

IntegerPolynomial exact_divide(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  auto q = divide_over_integers(a, b);
  if (!q) {
    throw InexactDivision("(" + b.to_string() + ") does not divide a polynomial of degree " +
                          std::to_string(a.degree()) + " exactly over Z");
  }
  return std::move(*q);
}

unsigned divisibility_order(IntegerPolynomial a, const IntegerPolynomial& b) {
  if (b.degree() < 1) throw Error("divisibility_order needs a divisor of positive degree");
  unsigned k = 0;
  while (!a.is_zero()) {
    auto q = divide_over_integers(a, b);
    if (!q) break;
    a = std::move(*q);
    ++k;
  }
  return k;
}

std::vector<Integer> series_inverse(const IntegerPolynomial& p, std::size_t order) {
  const Integer c0 = p.coefficient(0);
  if (c0 != 1 && c0 != -1) throw Error("series_inverse needs P(0) = +-1");
  std::vector<Integer> inv(order + 1);
  inv[0] = c0;  // 1/c0 == c0 for c0 = +-1
  for (std::size_t k = 1; k <= order; ++k) {
    Integer acc = 0;
    const std::size_t top = std::min<std::size_t>(k, p.is_zero() ? 0 : p.degree());
    for (std::size_t i = 1; i <= top; ++i) acc += p.coefficients()[i] * inv[k - i];
    inv[k] = -acc * c0;
  }
  return inv;
}

std::vector<Integer> log_derivative_series(const IntegerPolynomial& p, std::size_t order) {
  const auto inv = series_inverse(p, order);
  // u P'(u) has coefficients i * p_i at u^i.
  std::vector<Integer> out(order);
  for (std::size_t k = 1; k <= order; ++k) {
    Integer acc = 0;
    const std::size_t top = std::min<std::size_t>(k, p.is_zero() ? 0 : p.degree());
    for (std::size_t i = 1; i <= top; ++i) {
      acc += p.coefficients()[i] * static_cast<unsigned long>(i) * inv[k - i];
    }
    out[k - 1] = acc;
  }
  return out;
}

IntegerPolynomial gcd(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  IntegerPolynomial x = a.primitive_part();
  IntegerPolynomial y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntegerPolynomial r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.primitive_part();
}

std::vector<SquarefreeFactor> squarefree_decomposition(const IntegerPolynomial& p) {
  std::vector<SquarefreeFactor> out;
  if (p.degree() < 1) return out;
  const IntegerPolynomial f = p.primitive_part();
  const IntegerPolynomial df = f.derivative();
  const IntegerPolynomial a0 = gcd(f, df);
  IntegerPolynomial b = exact_divide(f, a0);
  IntegerPolynomial c = exact_divide(df, a0);
  IntegerPolynomial d = c - b.derivative();
  for (unsigned i = 1; b.degree() >= 1; ++i) {
    IntegerPolynomial a = gcd(b, d);
    if (a.degree() >= 1) out.push_back({a, i});
    IntegerPolynomial next_b = exact_divide(b, a);
    c = exact_divide(d, a);
    b = std::move(next_b);
    d = c - b.derivative();
  }
  return out;
}

}  // namespace zeta3
