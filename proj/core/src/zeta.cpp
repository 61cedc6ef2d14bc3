#include "zeta3/zeta.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

#include "zeta3/charpoly.hpp"
#include "zeta3/determinant.hpp"
#include "zeta3/error.hpp"

namespace zeta3 {

OperatorSet build_operators(const ComplexDescription& cx, OperatorRule rule) {
  OperatorSet ops;
  ops.a1 = build_A1(cx);
  ops.a2 = ops.a1.transpose();
  ops.le = build_LE(cx, rule);
  ops.lb = build_LB(cx, rule);
  return ops;
}

PolynomialMatrix hecke_matrix(int q, const SparseIntegerMatrix& a1, const SparseIntegerMatrix& a2) {
  const std::size_t n = a1.dimension();
  if (a2.dimension() != n) throw Error("A1 and A2 differ in size");
  PolynomialMatrix m(n, n);
  const Integer qq(q);
  const Integer q3 = qq * qq * qq;
  for (std::size_t i = 0; i < n; ++i) m(i, i) = IntegerPolynomial::constant(1) - IntegerPolynomial::monomial(q3, 3);
  for (const auto& e : a1.entries()) m(e.row, e.col) -= IntegerPolynomial::monomial(Integer(e.value), 1);
  for (const auto& e : a2.entries()) m(e.row, e.col) += IntegerPolynomial::monomial(qq * e.value, 2);
  return m;
}

ZetaParts assemble_parts(int q, const ComplexCounts& counts, const OperatorSet& ops) {
  ZetaParts parts;
  parts.q = q;
  parts.counts = counts;
  parts.pa = det_poly_matrix(hecke_matrix(q, ops.a1, ops.a2), 3 * ops.a1.dimension());
  parts.pe = char_rev(ops.le);
  parts.pb = char_rev(-ops.lb);
  return parts;
}

ZetaParts zeta_parts(const ComplexDescription& cx, OperatorRule rule) {
  return assemble_parts(cx.q, counts(cx), build_operators(cx, rule));
}

IdentityVerdict verify_identity(const ZetaParts& parts) {
  IdentityVerdict v;
  const IntegerPolynomial cube{1, 0, 0, -1};
  const std::int64_t chi = parts.chi();
  const IntegerPolynomial power = cube.pow(static_cast<unsigned>(chi < 0 ? -chi : chi));
  v.lhs = parts.pe * parts.pe.substitute_power(2);
  v.rhs = parts.pa * parts.pb;
  if (chi >= 0) {
    v.lhs *= power;
  } else {
    v.rhs *= power;
  }
  v.holds = v.lhs == v.rhs;
  if (!v.holds) {
    const std::size_t top = static_cast<std::size_t>(std::max(v.lhs.degree(), v.rhs.degree()));
    for (std::size_t i = 0; i <= top; ++i) {
      if (v.lhs.coefficient(i) != v.rhs.coefficient(i)) {
        v.witness = IdentityWitness{i, v.lhs.coefficient(i), v.rhs.coefficient(i)};
        break;
      }
    }
  }
  return v;
}

std::vector<Integer> geodesic_counts(const ZetaParts& parts, std::size_t max_length) {
  if (max_length == 0) return {};
  auto series = log_derivative_series(parts.pe * parts.pe.substitute_power(2), max_length);
  for (auto& c : series) c = -c;
  return series;
}

std::vector<Integer> geodesic_counts_from_traces(const SparseIntegerMatrix& le, std::size_t max_length) {
  if (max_length == 0) return {};
  const auto traces = trace_powers(le, max_length);
  std::vector<Integer> out(max_length);
  for (std::size_t m = 1; m <= max_length; ++m) {
    out[m - 1] = traces[m - 1];
    if (m % 2 == 0) out[m - 1] += 2 * traces[m / 2 - 1];
  }
  return out;
}

Integer walk_count_oracle(const ComplexDescription& cx, std::size_t m) {
  if (m > kMaxOracleLength) {
    throw Error("walk_count_oracle: length " + std::to_string(m) + " exceeds the limit " +
                std::to_string(kMaxOracleLength));
  }
  require_valid(cx);
  if (m == 0) return Integer(static_cast<long long>(cx.edges.size()));

  const std::size_t n1 = cx.edges.size();
  std::unordered_map<Id, std::size_t> edge_pos;
  for (std::size_t i = 0; i < n1; ++i) edge_pos.emplace(cx.edges[i].id, i);

  // Continuation weights, one pass over the records.
  std::vector<std::map<std::size_t, std::int64_t>> next(n1);
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n1; ++j) {
      if (cx.edges[j].tail == cx.edges[i].head) ++next[i][j];
    }
  }
  for (const auto& ch : cx.chambers) {
    for (std::size_t r = 0; r < 3; ++r) {
      const std::size_t a = edge_pos.at(ch.edges[r]);
      const std::size_t b = edge_pos.at(ch.edges[(r + 1) % 3]);
      if (--next[a][b] == 0) next[a].erase(b);
    }
  }

  Integer total = 0;
  std::function<void(std::size_t, std::size_t, std::size_t, const Integer&)> walk =
      [&](std::size_t start, std::size_t at, std::size_t steps, const Integer& weight) {
        if (steps + 1 == m) {
          auto it = next[at].find(start);
          if (it != next[at].end()) total += weight * it->second;
          return;
        }
        for (const auto& [to, w] : next[at]) walk(start, to, steps + 1, weight * w);
      };
  for (std::size_t e = 0; e < n1; ++e) walk(e, e, 0, Integer(1));
  return total;
}

}  // namespace zeta3
