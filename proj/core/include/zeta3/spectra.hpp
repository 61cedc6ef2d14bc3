#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "zeta3/polynomial.hpp"
#include "zeta3/roots.hpp"
#include "zeta3/zeta.hpp"

namespace zeta3 {

enum class SpectralOperator { A, E, B };

std::string to_string(SpectralOperator op);

inline constexpr double kClassificationTolerance = 1e-6;
inline constexpr double kRootAccuracy = 1e-9;

/// An admissible zero modulus q^exponent for one determinant.
struct ModulusClass {
  std::string label;  // e.g. "q^-1/2"
  double exponent = 0;
  bool trivial = false;
  /// Allowed for a Ramanujan complex.
  bool ramanujan = true;
};

/// Modulus classes of the zeros of P_A, P_E or P_B. A modulus may appear
/// once as trivial and once as nontrivial (P_A at q^-1).
std::vector<ModulusClass> modulus_classes(SpectralOperator op);

/// The product of the trivial factors: (1 - u^3)(1 - q^3 u^3)(1 - q^6 u^3)
/// for A, 1 - q^6 u^3 for E, 1 + q^3 u^3 for B.
IntegerPolynomial trivial_factor(SpectralOperator op, int q);

struct ZeroBucket {
  ModulusClass modulus_class;
  double modulus = 0;
  std::size_t count = 0;
};

struct Classification {
  SpectralOperator op = SpectralOperator::A;
  int q = 0;
  std::size_t degree = 0;
  /// Whether the trivial factor divided the polynomial exactly. When it did,
  /// its zeros are counted in trivial buckets without root finding and
  /// trivial classes are not offered to the remaining zeros.
  bool trivial_removed_exactly = false;
  std::vector<ZeroBucket> buckets;
  /// Zeros (with multiplicity) matching no class within the tolerance.
  std::vector<std::complex<double>> unclassified;
  double tolerance = kClassificationTolerance;

  std::size_t count(const std::string& label, bool trivial = false) const;
  std::size_t nontrivial_count() const;
  /// Every nontrivial zero sits in a Ramanujan class.
  bool ramanujan() const;
};

Classification classify(const IntegerPolynomial& p, int q, SpectralOperator op,
                        const RootOptions& options = {kRootAccuracy, 800});

struct RamanujanVerdicts {
  bool hecke = false;  // nontrivial zeros of P_A at q^-1
  bool edge = false;   // nontrivial zeros of P_E at q^-1, q^-1/2
  bool chamber = false;  // nontrivial zeros of P_B at 1, q^-1/2, q^-1/4
  bool agree() const noexcept { return hecke == edge && edge == chamber; }
  bool ramanujan() const noexcept { return agree() && hecke; }
};

RamanujanVerdicts ramanujan_verdicts(const Classification& a, const Classification& e, const Classification& b);

struct SteinbergCheck {
  std::int64_t chi = 0;
  /// (1 - u^3)^(chi - 1) divides P_B.
  bool divides = false;
  /// Largest k with (1 - u^3)^k | P_B.
  unsigned order = 0;
};

/// Requires chi >= 1.
SteinbergCheck steinberg_divisibility(const IntegerPolynomial& pb, std::int64_t chi);

/// Representation-type counts inferred from the zeros of P_B and the complex
/// counts: b = 3, c = #(modulus 1), d = #(q^-3/4) / 2, e = #(q^-1/4) / 2 and
/// a = N0 - 3 - d.
struct RepCensus {
  std::int64_t a = 0;
  std::int64_t b = 3;
  std::int64_t c = 0;
  std::int64_t d = 0;
  std::int64_t e = 0;
  bool consistent = false;
  std::vector<std::string> diagnostics;
};

RepCensus rep_census(const Classification& b, const ComplexCounts& counts);

struct RankCheck {
  bool pe_full_rank = false;  // deg P_E = N1, i.e. det L_E != 0
  bool pb_full_rank = false;  // deg P_B = 3 N2
  bool constants_one = false;
};

RankCheck rank_check(const ZetaParts& parts);

struct SpectralReport {
  Classification a;
  Classification e;
  Classification b;
  RamanujanVerdicts verdicts;
  SteinbergCheck steinberg;
  RepCensus census;
  RankCheck rank;
  /// Zeros of P_B with modulus q^3/4. Type (d) eigenvalues of L_B give
  /// modulus q^-3/4; a zero at q^3/4 means the opposite sign convention.
  std::size_t q34_zeros = 0;
  std::vector<std::string> notes;
};

SpectralReport spectral_report(const ZetaParts& parts);

}  // namespace zeta3
