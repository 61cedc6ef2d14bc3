#include "zeta3/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/multiprecision/mpfr.hpp>

#include "zeta3/error.hpp"

namespace zeta3 {

namespace {

using Real = boost::multiprecision::mpfr_float;
using LComplex = std::complex<long double>;

// Restores the thread's default MPFR precision on scope exit.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits10) : saved_(Real::default_precision()) {
    Real::default_precision(digits10);
  }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

struct MpComplex {
  Real re;
  Real im;
};

MpComplex operator+(const MpComplex& a, const MpComplex& b) { return {a.re + b.re, a.im + b.im}; }
MpComplex operator-(const MpComplex& a, const MpComplex& b) { return {a.re - b.re, a.im - b.im}; }
MpComplex operator*(const MpComplex& a, const MpComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
MpComplex operator/(const MpComplex& a, const MpComplex& b) {
  Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Real abs(const MpComplex& a) { return boost::multiprecision::hypot(a.re, a.im); }

std::size_t max_coefficient_bits(const IntegerPolynomial& p) {
  std::size_t bits = 1;
  for (const auto& c : p.coefficients()) {
    if (c != 0) bits = std::max<std::size_t>(bits, boost::multiprecision::msb(abs(c)) + 1);
  }
  return bits;
}

// p(z) and p'(z) by Horner.
template <typename C, typename Coeffs>
void horner(const Coeffs& a, const C& z, C& value, C& slope) {
  value = a.back();
  slope = C{};
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    slope = slope * z + value;
    value = value * z + a[i];
  }
}

void horner_mp(const std::vector<MpComplex>& a, const MpComplex& z, MpComplex& value,
               MpComplex& slope) {
  value = a.back();
  slope = {Real(0), Real(0)};
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    slope = slope * z + value;
    value = value * z + a[i];
  }
}

std::vector<LComplex> initial_guesses(const IntegerPolynomial& p) {
  const std::size_t d = static_cast<std::size_t>(p.degree());
  const long double a0 = std::fabs(p.coefficient(0).convert_to<long double>());
  const long double ad = std::fabs(p.leading_coefficient().convert_to<long double>());
  long double radius = std::pow(a0 / ad, 1.0L / static_cast<long double>(d));
  if (!std::isfinite(radius) || radius == 0) radius = 1;
  std::vector<LComplex> z(d);
  for (std::size_t k = 0; k < d; ++k) {
    const long double angle = 2 * std::numbers::pi_v<long double> * static_cast<long double>(k) /
                                  static_cast<long double>(d) +
                              0.7L;
    z[k] = std::polar(radius, angle);
  }
  return z;
}

void aberth_long_double(const IntegerPolynomial& p, std::vector<LComplex>& z,
                        unsigned max_iterations) {
  std::vector<LComplex> a;
  a.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) a.emplace_back(c.convert_to<long double>(), 0.0L);
  const std::size_t d = z.size();
  std::vector<bool> done(d, false);
  const long double tol = 64 * std::numeric_limits<long double>::epsilon();
  for (unsigned it = 0; it < max_iterations; ++it) {
    bool all_done = true;
    for (std::size_t i = 0; i < d; ++i) {
      if (done[i]) continue;
      LComplex value, slope;
      horner(a, z[i], value, slope);
      if (value == LComplex{}) {
        done[i] = true;
        continue;
      }
      const LComplex ratio = value / slope;
      LComplex sum{};
      for (std::size_t j = 0; j < d; ++j) {
        if (j != i) sum += 1.0L / (z[i] - z[j]);
      }
      const LComplex w = ratio / (1.0L - ratio * sum);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
      z[i] -= w;
      if (std::abs(w) <= tol * std::abs(z[i])) {
        done[i] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) break;
  }
}

void aberth_mp(const std::vector<MpComplex>& a, std::vector<MpComplex>& z, const Real& tol,
               unsigned max_iterations) {
  const std::size_t d = z.size();
  std::vector<bool> done(d, false);
  const MpComplex one{Real(1), Real(0)};
  for (unsigned it = 0; it < max_iterations; ++it) {
    bool all_done = true;
    for (std::size_t i = 0; i < d; ++i) {
      if (done[i]) continue;
      MpComplex value, slope;
      horner_mp(a, z[i], value, slope);
      const MpComplex ratio = value / slope;
      MpComplex sum{Real(0), Real(0)};
      for (std::size_t j = 0; j < d; ++j) {
        if (j != i) sum = sum + one / (z[i] - z[j]);
      }
      const MpComplex w = ratio / (one - ratio * sum);
      z[i] = z[i] - w;
      if (abs(w) <= tol * abs(z[i])) {
        done[i] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) break;
  }
}

// Polishes every root by Newton steps and reports whether the resulting set
// is a certified-looking set of distinct simple roots.
bool polish_and_check(const std::vector<MpComplex>& a, std::vector<MpComplex>& z,
                      const Real& step_tol, double accuracy) {
  const std::size_t d = z.size();
  std::vector<Real> last_step(d);
  for (std::size_t i = 0; i < d; ++i) {
    Real step = 1;
    for (int it = 0; it < 100; ++it) {
      MpComplex value, slope;
      horner_mp(a, z[i], value, slope);
      if (slope.re == 0 && slope.im == 0) return false;
      const MpComplex delta = value / slope;
      z[i] = z[i] - delta;
      const Real mag = abs(z[i]);
      step = mag == 0 ? abs(delta) : abs(delta) / mag;
      if (step <= step_tol) break;
    }
    last_step[i] = step;
  }
  Real worst = 0;
  for (const auto& s : last_step) worst = std::max(worst, s);
  if (worst > Real(accuracy) * Real(1e-6)) return false;

  // Distinctness: d distinct genuine roots of a degree-d polynomial are all of them.
  for (std::size_t i = 0; i < d; ++i) {
    const Real scale = std::max(abs(z[i]), Real(1e-30));
    for (std::size_t j = i + 1; j < d; ++j) {
      const Real sep = abs(z[i] - z[j]) / scale;
      if (sep <= worst * 1e6 || sep < Real(1e-40)) return false;
    }
  }
  return true;
}

std::vector<std::complex<double>> solve_squarefree(const IntegerPolynomial& p,
                                                   const RootOptions& options) {
  const std::size_t d = static_cast<std::size_t>(p.degree());
  if (d == 1) {
    Rational r(Integer(-p.coefficient(0)), p.coefficient(1));
    return {std::complex<double>(r.convert_to<double>(), 0.0)};
  }

  const std::size_t bits = 256 + 2 * max_coefficient_bits(p) + 4 * d;
  PrecisionScope scope(static_cast<unsigned>(bits * 0.30103) + 10);

  std::vector<MpComplex> a;
  a.reserve(d + 1);
  for (const auto& c : p.coefficients()) a.push_back({Real(c), Real(0)});
  const Real step_tol = boost::multiprecision::ldexp(Real(1), -static_cast<int>(bits / 2));

  std::vector<LComplex> guess = initial_guesses(p);
  aberth_long_double(p, guess, options.max_iterations);
  std::vector<MpComplex> z;
  z.reserve(d);
  for (const auto& g : guess) z.push_back({Real(g.real()), Real(g.imag())});

  if (!polish_and_check(a, z, step_tol, options.relative_accuracy)) {
    z.clear();
    for (const auto& g : initial_guesses(p)) z.push_back({Real(g.real()), Real(g.imag())});
    aberth_mp(a, z, step_tol, options.max_iterations * 4);
    if (!polish_and_check(a, z, step_tol, options.relative_accuracy)) {
      throw RootFindingError("root finder did not converge for squarefree factor of degree " +
                             std::to_string(d) + ": " + p.to_string());
    }
  }

  std::vector<std::complex<double>> out;
  out.reserve(d);
  for (const auto& r : z) out.emplace_back(r.re.convert_to<double>(), r.im.convert_to<double>());
  return out;
}

}  // namespace

std::vector<PolynomialZero> polynomial_zeros(const IntegerPolynomial& p,
                                             const RootOptions& options) {
  if (p.is_zero()) throw RootFindingError("zeros of the zero polynomial are undefined");
  std::vector<PolynomialZero> out;

  // Zeros at the origin.
  std::size_t low = 0;
  while (p.coefficient(low) == 0) ++low;
  IntegerPolynomial q = p;
  if (low > 0) {
    std::vector<Integer> shifted(p.coefficients().begin() + static_cast<std::ptrdiff_t>(low),
                                 p.coefficients().end());
    q = IntegerPolynomial(std::move(shifted));
    out.push_back({{0.0, 0.0}, static_cast<unsigned>(low)});
  }

  for (const auto& [factor, multiplicity] : squarefree_decomposition(q)) {
    for (const auto& z : solve_squarefree(factor, options)) out.push_back({z, multiplicity});
  }
  std::sort(out.begin(), out.end(), [](const PolynomialZero& x, const PolynomialZero& y) {
    const double ax = std::abs(x.value), ay = std::abs(y.value);
    if (ax != ay) return ax < ay;
    if (x.value.real() != y.value.real()) return x.value.real() < y.value.real();
    return x.value.imag() < y.value.imag();
  });
  return out;
}

std::vector<double> zero_moduli(const IntegerPolynomial& p, const RootOptions& options) {
  std::vector<double> out;
  for (const auto& z : polynomial_zeros(p, options)) {
    out.insert(out.end(), z.multiplicity, std::abs(z.value));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace zeta3
