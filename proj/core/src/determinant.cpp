#include "zeta3/determinant.hpp"

#include <atomic>
#include <cstdlib>
#include <random>
#include <string>
#include <utility>

#include "zeta3/error.hpp"

namespace zeta3 {

namespace {

bool env_self_check() {
  const char* v = std::getenv("ZETA3_SELF_CHECK");
  return v != nullptr && std::string(v) == "1";
}

std::atomic<bool> g_self_check{env_self_check()};
std::atomic<std::uint64_t> g_self_check_count{0};

Integer nth_evaluation_point(std::size_t i) {
  // 0, 1, -1, 2, -2, ...
  if (i == 0) return 0;
  const long long k = static_cast<long long>((i + 1) / 2);
  return (i % 2 == 1) ? Integer(k) : Integer(-k);
}

}  // namespace

bool self_check_default() { return g_self_check.load(); }
void set_self_check_default(bool enabled) { g_self_check.store(enabled); }
std::uint64_t self_check_count() { return g_self_check_count.load(); }

Integer det_integer(IntegerMatrix m) {
  if (!m.is_square()) throw Error("det_integer needs a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(pivot, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntegerMatrix evaluate_at(const PolynomialMatrix& m, const Integer& x) {
  IntegerMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).evaluate(x);
  }
  return out;
}

IntegerPolynomial det_poly_matrix(const PolynomialMatrix& m, std::size_t degree_bound) {
  DetPolyOptions options;
  options.self_check = self_check_default();
  return det_poly_matrix(m, degree_bound, options);
}

IntegerPolynomial det_poly_matrix(const PolynomialMatrix& m, std::size_t degree_bound,
                                  const DetPolyOptions& options) {
  if (!m.is_square()) throw Error("det_poly_matrix needs a square matrix");
  const std::size_t points = degree_bound + 1;

  std::vector<Integer> xs(points);
  for (std::size_t i = 0; i < points; ++i) xs[i] = nth_evaluation_point(i);

  std::vector<Integer> ys;
  ys.reserve(points);
  for (const auto& x : xs) ys.push_back(det_integer(evaluate_at(m, x)));

  // Newton divided differences, then expansion into the monomial basis.
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < points; ++level) {
    for (std::size_t i = points - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - level]);
    }
  }
  std::vector<Rational> coeffs(points);
  for (std::size_t i = points; i-- > 0;) {
    // coeffs <- coeffs * (u - xs[i]) + dd[i]
    for (std::size_t j = points - 1; j > 0; --j) coeffs[j] = coeffs[j - 1] - coeffs[j] * Rational(xs[i]);
    coeffs[0] = -coeffs[0] * Rational(xs[i]) + dd[i];
  }

  std::vector<Integer> ints(points);
  for (std::size_t i = 0; i < points; ++i) {
    if (denominator(coeffs[i]) != 1) {
      throw InternalError("det_poly_matrix: interpolated coefficient of u^" + std::to_string(i) +
                          " is not an integer; degree bound too small or arithmetic bug");
    }
    ints[i] = numerator(coeffs[i]);
  }
  IntegerPolynomial result(std::move(ints));

  if (options.self_check) {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<long long> dist(-1000, 1000);
    for (int k = 0; k < options.self_check_points; ++k) {
      const Integer x = dist(rng);
      if (result.evaluate(x) != det_integer(evaluate_at(m, x))) {
        throw InternalError("det_poly_matrix self-check failed at u = " + x.str());
      }
      ++g_self_check_count;
    }
  }
  return result;
}

}  // namespace zeta3
