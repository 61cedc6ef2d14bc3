#include "support.hpp"

#include <random>

#include "zeta3/construct.hpp"
#include "zeta3/plane.hpp"

namespace zeta3::testing {

const TrianglePresentation& q2_presentation() {
  static const TrianglePresentation t = [] {
    PresentationSearchOptions o;
    o.cover_requirement = CoverRequirement{2, 4};
    return find_triangle_presentation(projective_plane(2), o);
  }();
  return t;
}

const TrianglePresentation& q2_lex_first() {
  static const TrianglePresentation t = find_triangle_presentation(projective_plane(2));
  return t;
}

const TrianglePresentation& q3_presentation() {
  static const TrianglePresentation t = [] {
    PresentationSearchOptions o;
    o.allow_torsion = true;
    return find_triangle_presentation(projective_plane(3), o);
  }();
  return t;
}

const ComplexDescription& q2_base() {
  static const ComplexDescription cx = base_quotient(q2_presentation());
  return cx;
}

std::vector<ComplexDescription> q2_covers(int m) {
  std::vector<ComplexDescription> out;
  for (const auto& v : connected_voltages(q2_presentation(), m)) out.push_back(abelian_cover(q2_presentation(), v));
  return out;
}

namespace {

template <class T>
T laplace(const std::vector<std::vector<T>>& m, std::vector<bool>& used, std::size_t row, const T& one) {
  const std::size_t n = m.size();
  if (row == n) return one;
  T sum{};
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    if (used[c]) continue;
    if (!(m[row][c] == T{})) {
      used[c] = true;
      T term = laplace(m, used, row + 1, one);
      used[c] = false;
      term = term * m[row][c];
      if (sign > 0) {
        sum = sum + term;
      } else {
        sum = sum - term;
      }
    }
    sign = -sign;
  }
  return sum;
}

}  // namespace

Integer cofactor_det(const std::vector<std::vector<Integer>>& m) {
  std::vector<bool> used(m.size(), false);
  return laplace(m, used, 0, Integer(1));
}

IntegerPolynomial cofactor_det(const std::vector<std::vector<IntegerPolynomial>>& m) {
  std::vector<bool> used(m.size(), false);
  return laplace(m, used, 0, IntegerPolynomial{1});
}

IntegerPolynomial cofactor_char(const SparseIntegerMatrix& m, int s) {
  const std::size_t n = m.dimension();
  std::vector<std::vector<IntegerPolynomial>> p(n, std::vector<IntegerPolynomial>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      p[i][j] = IntegerPolynomial::monomial(Integer(s * m.at(i, j)), 1);
      if (i == j) p[i][j] += IntegerPolynomial{1};
    }
  }
  return cofactor_det(p);
}

SparseIntegerMatrix random_matrix(std::size_t n, int lo, int hi, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(lo, hi);
  SparseIntegerMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.add(i, j, d(rng));
  }
  return m;
}

std::filesystem::path fixture(const std::string& name) { return std::filesystem::path(ZETA3_FIXTURE_DIR) / name; }

}  // namespace zeta3::testing
