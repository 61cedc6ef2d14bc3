#include "zeta3/charpoly.hpp"

#include <string>

#include "zeta3/error.hpp"

namespace zeta3 {

std::vector<Integer> trace_powers(const SparseIntegerMatrix& m, std::size_t max_power) {
  const std::size_t n = m.dimension();
  std::vector<Integer> traces;
  traces.reserve(max_power);
  if (max_power == 0) return traces;

  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> rows(n);
  for (std::size_t r = 0; r < n; ++r) rows[r] = m.row(r);

  // power holds M^k row-major; start from M^1.
  std::vector<Integer> power(n * n);
  for (const auto& e : m.entries()) power[e.row * n + e.col] = e.value;
  std::vector<Integer> next(n * n);

  for (std::size_t k = 1;; ++k) {
    Integer t = 0;
    for (std::size_t i = 0; i < n; ++i) t += power[i * n + i];
    traces.push_back(t);
    if (k == max_power) break;

    for (auto& x : next) x = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Integer* src = &power[i * n];
      Integer* dst = &next[i * n];
      for (std::size_t l = 0; l < n; ++l) {
        if (src[l] == 0) continue;
        for (const auto& [j, w] : rows[l]) {
          if (w == 1) {
            dst[j] += src[l];
          } else {
            dst[j] += src[l] * w;
          }
        }
      }
    }
    std::swap(power, next);
  }
  return traces;
}

IntegerPolynomial char_rev(const SparseIntegerMatrix& m) {
  const std::size_t n = m.dimension();
  const auto p = trace_powers(m, n);
  std::vector<Integer> c(n + 1);
  c[0] = 1;
  Integer q, r;
  for (std::size_t k = 1; k <= n; ++k) {
    Integer acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += p[i - 1] * c[k - i];
    boost::multiprecision::divide_qr(Integer(-acc), Integer(static_cast<unsigned long>(k)), q, r);
    if (r != 0) {
      throw InternalError("char_rev: Newton identity division by " + std::to_string(k) +
                          " is not exact");
    }
    c[k] = q;
  }
  return IntegerPolynomial(std::move(c));
}

}  // namespace zeta3
