#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "zeta3/error.hpp"
#include "zeta3/numeric.hpp"
#include "zeta3/presentation.hpp"

namespace zeta3 {

namespace {

using Matrix = std::vector<std::vector<Integer>>;

constexpr std::size_t kMaxSolutions = std::size_t{1} << 20;

int mod(long long a, int m) {
  long long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

// Diagonalizes a in place by unimodular row and column operations, applying
// the column operations to v as well. Returns the diagonal (length = rank).
std::vector<Integer> diagonalize(Matrix& a, Matrix& v) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<Integer> diag;
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : v) std::swap(row[i], row[j]);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const Integer& f) {
    for (auto& row : a) row[dst] += f * row[src];
    for (auto& row : v) row[dst] += f * row[src];
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block as pivot.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
          pr = i;
          pc = j;
        }
      }
    }
    if (pr == rows) break;
    std::swap(a[t], a[pr]);
    swap_cols(t, pc);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const Integer f = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= f * a[t][j];
        if (a[i][t] != 0) {
          clean = false;
          std::swap(a[t], a[i]);
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        add_col(j, t, Integer(-(a[t][j] / a[t][t])));
        if (a[t][j] != 0) {
          clean = false;
          swap_cols(t, j);
        }
      }
      if (clean) break;
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

}  // namespace

VoltageAssignment zero_voltage(const TrianglePresentation& t, int modulus) {
  if (modulus < 1) throw ConstructionError("voltage modulus must be positive");
  return {modulus, std::vector<int>(t.generator_count(), 0)};
}

std::vector<std::string> voltage_violations(const TrianglePresentation& t, const VoltageAssignment& v) {
  std::vector<std::string> out;
  if (v.modulus < 1) {
    out.push_back("modulus " + std::to_string(v.modulus) + " is not positive");
    return out;
  }
  if (v.labels.size() != t.generator_count()) {
    out.push_back("voltage has " + std::to_string(v.labels.size()) + " labels, expected " +
                  std::to_string(t.generator_count()));
    return out;
  }
  for (std::size_t x = 0; x < v.labels.size(); ++x) {
    if (v.labels[x] < 0 || v.labels[x] >= v.modulus) {
      out.push_back("label of generator " + std::to_string(x) + " is outside 0.." +
                    std::to_string(v.modulus - 1));
    }
  }
  if (!out.empty()) return out;
  for (const auto& tr : t.triples) {
    const long long s = static_cast<long long>(v.labels[static_cast<std::size_t>(tr[0])]) +
                        v.labels[static_cast<std::size_t>(tr[1])] + v.labels[static_cast<std::size_t>(tr[2])];
    if (s % v.modulus != 0) {
      out.push_back("labels on (" + std::to_string(tr[0]) + "," + std::to_string(tr[1]) + "," +
                    std::to_string(tr[2]) + ") sum to " + std::to_string(s) + ", not 0 mod " +
                    std::to_string(v.modulus));
    }
  }
  return out;
}

std::size_t generated_subgroup_order(const VoltageAssignment& v) {
  const int m = v.modulus;
  std::vector<bool> in(static_cast<std::size_t>(3 * m), false);
  std::vector<std::pair<int, int>> frontier{{0, 0}};
  in[0] = true;
  while (!frontier.empty()) {
    auto [g, s] = frontier.back();
    frontier.pop_back();
    for (int c : v.labels) {
      const int g2 = (g + 1) % 3;
      const int s2 = mod(static_cast<long long>(s) + c, m);
      const auto id = static_cast<std::size_t>(g2 * m + s2);
      if (!in[id]) {
        in[id] = true;
        frontier.emplace_back(g2, s2);
      }
    }
  }
  return static_cast<std::size_t>(std::count(in.begin(), in.end(), true));
}

bool generates_cover_group(const VoltageAssignment& v) {
  return generated_subgroup_order(v) == static_cast<std::size_t>(3 * v.modulus);
}

std::vector<VoltageAssignment> solve_voltages(const TrianglePresentation& t, int modulus) {
  if (modulus < 1) throw ConstructionError("voltage modulus must be positive");
  const std::size_t n = t.generator_count();

  // One relation row per rotation class.
  Matrix a;
  for (const auto& tr : t.triples) {
    if (tr[0] > tr[1] || tr[0] > tr[2]) continue;
    std::vector<Integer> row(n);
    for (int x : tr) row[static_cast<std::size_t>(x)] += 1;
    a.push_back(std::move(row));
  }
  Matrix v(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1;
  const std::vector<Integer> diag = diagonalize(a, v);

  // In the new coordinates y = V^{-1} c the system reads d_i y_i = 0 mod m.
  std::vector<std::vector<int>> choices(n);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const int g = i < diag.size() ? static_cast<int>(boost::multiprecision::gcd(diag[i], Integer(modulus)))
                                  : modulus;
    for (int k = 0; k < g; ++k) choices[i].push_back(k * (modulus / g));
    total *= static_cast<std::size_t>(g);
    if (total > kMaxSolutions) {
      throw ConstructionError("voltage solution space mod " + std::to_string(modulus) + " is too large");
    }
  }

  std::vector<std::vector<int>> vmod(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) vmod[i][j] = static_cast<int>(mod(static_cast<long long>(v[i][j] % modulus), modulus));
  }

  std::set<std::vector<int>> found;
  std::vector<std::size_t> pick(n, 0);
  for (std::size_t count = 0; count < total; ++count) {
    std::vector<int> c(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      long long s = 0;
      for (std::size_t j = 0; j < n; ++j) s += static_cast<long long>(vmod[i][j]) * choices[j][pick[j]];
      c[i] = mod(s, modulus);
    }
    found.insert(std::move(c));
    for (std::size_t j = 0; j < n; ++j) {
      if (++pick[j] < choices[j].size()) break;
      pick[j] = 0;
    }
  }

  std::vector<VoltageAssignment> out;
  out.reserve(found.size());
  for (const auto& c : found) {
    VoltageAssignment va{modulus, c};
    if (!voltage_violations(t, va).empty()) {
      throw InternalError("voltage solver produced an invalid assignment");
    }
    out.push_back(std::move(va));
  }
  return out;
}

std::vector<VoltageAssignment> connected_voltages(const TrianglePresentation& t, int modulus) {
  std::vector<VoltageAssignment> out;
  for (auto& v : solve_voltages(t, modulus)) {
    if (generates_cover_group(v)) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace zeta3
