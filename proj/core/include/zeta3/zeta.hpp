#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "zeta3/complex.hpp"
#include "zeta3/numeric.hpp"
#include "zeta3/operators.hpp"
#include "zeta3/polynomial.hpp"
#include "zeta3/sparse_matrix.hpp"

namespace zeta3 {

/// The three determinants of a complex:
///   P_A = det(I - A1 u + q A2 u^2 - q^3 u^3 I),
///   P_E = det(I - L_E u),
///   P_B = det(I + L_B u).
struct ZetaParts {
  int q = 0;
  ComplexCounts counts;
  IntegerPolynomial pa;
  IntegerPolynomial pe;
  IntegerPolynomial pb;

  std::int64_t chi() const noexcept { return counts.chi; }
};

/// The operator matrices that determine a ZetaParts.
struct OperatorSet {
  SparseIntegerMatrix a1;
  SparseIntegerMatrix a2;
  SparseIntegerMatrix le;
  SparseIntegerMatrix lb;
};

OperatorSet build_operators(const ComplexDescription& cx, OperatorRule rule = OperatorRule::Automatic);

/// I - A1 u + q A2 u^2 - q^3 u^3 I as a polynomial matrix.
PolynomialMatrix hecke_matrix(int q, const SparseIntegerMatrix& a1, const SparseIntegerMatrix& a2);

ZetaParts assemble_parts(int q, const ComplexCounts& counts, const OperatorSet& ops);
ZetaParts zeta_parts(const ComplexDescription& cx, OperatorRule rule = OperatorRule::Automatic);

/// First coefficient where the two sides differ.
struct IdentityWitness {
  std::size_t index = 0;
  Integer lhs;
  Integer rhs;
};

struct IdentityVerdict {
  bool holds = false;
  /// (1 - u^3)^chi P_E(u) P_E(u^2) and P_A P_B, with the (1 - u^3) power
  /// moved to the right when chi < 0.
  IntegerPolynomial lhs;
  IntegerPolynomial rhs;
  std::optional<IdentityWitness> witness;
};

IdentityVerdict verify_identity(const ZetaParts& parts);

/// N_1..N_L from u d/du log 1/(P_E(u) P_E(u^2)).
std::vector<Integer> geodesic_counts(const ZetaParts& parts, std::size_t max_length);

/// N_m = tr(L_E^m) + 2 tr(L_E^(m/2)) for even m, tr(L_E^m) for odd m.
std::vector<Integer> geodesic_counts_from_traces(const SparseIntegerMatrix& le, std::size_t max_length);

inline constexpr std::size_t kMaxOracleLength = 8;

/// Number of closed sequences of m type-one edges in which each edge may
/// follow the previous one, counted with multiplicity. Continuations come
/// straight from the edge and chamber records: e' may follow e when it leaves
/// head(e), once per copy, less once per chamber in which e' follows e.
/// Refuses m > kMaxOracleLength.
Integer walk_count_oracle(const ComplexDescription& cx, std::size_t m);

}  // namespace zeta3
