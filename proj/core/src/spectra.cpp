#include "zeta3/spectra.hpp"

#include <cmath>
#include <limits>

#include "zeta3/error.hpp"

namespace zeta3 {

std::string to_string(SpectralOperator op) {
  switch (op) {
    case SpectralOperator::A: return "A";
    case SpectralOperator::E: return "E";
    case SpectralOperator::B: return "B";
  }
  return "?";
}

std::vector<ModulusClass> modulus_classes(SpectralOperator op) {
  switch (op) {
    case SpectralOperator::A:
      return {{"q^0", 0, true, true},         {"q^-1", -1, true, true},      {"q^-2", -2, true, true},
              {"q^-1", -1, false, true},      {"q^-1/2", -0.5, false, false}, {"q^-3/2", -1.5, false, false}};
    case SpectralOperator::E:
      return {{"q^-2", -2, true, true},
              {"q^-1", -1, false, true},
              {"q^-1/2", -0.5, false, true},
              {"q^-3/2", -1.5, false, false}};
    case SpectralOperator::B:
      return {{"q^-1", -1, true, true},          {"q^0", 0, false, true},         {"q^-1/2", -0.5, false, true},
              {"q^-1/4", -0.25, false, true},    {"q^-3/4", -0.75, false, false}, {"q^3/4", 0.75, false, false}};
  }
  return {};
}

IntegerPolynomial trivial_factor(SpectralOperator op, int q) {
  const Integer q3 = Integer(q) * q * q;
  auto cube = [](const Integer& c) { return IntegerPolynomial::constant(1) - IntegerPolynomial::monomial(c, 3); };
  switch (op) {
    case SpectralOperator::A: return cube(1) * cube(q3) * cube(q3 * q3);
    case SpectralOperator::E: return cube(q3 * q3);
    case SpectralOperator::B: return IntegerPolynomial::constant(1) + IntegerPolynomial::monomial(q3, 3);
  }
  return IntegerPolynomial{1};
}

std::size_t Classification::count(const std::string& label, bool trivial) const {
  std::size_t n = 0;
  for (const auto& b : buckets) {
    if (b.modulus_class.label == label && b.modulus_class.trivial == trivial) n += b.count;
  }
  return n;
}

std::size_t Classification::nontrivial_count() const {
  std::size_t n = unclassified.size();
  for (const auto& b : buckets) {
    if (!b.modulus_class.trivial) n += b.count;
  }
  return n;
}

bool Classification::ramanujan() const {
  if (!unclassified.empty()) return false;
  for (const auto& b : buckets) {
    if (!b.modulus_class.trivial && !b.modulus_class.ramanujan && b.count > 0) return false;
  }
  return true;
}

Classification classify(const IntegerPolynomial& p, int q, SpectralOperator op, const RootOptions& options) {
  if (p.is_zero()) throw Error("classify: zero polynomial");
  Classification out;
  out.op = op;
  out.q = q;
  out.degree = static_cast<std::size_t>(p.degree());
  const auto classes = modulus_classes(op);
  for (const auto& c : classes) out.buckets.push_back({c, std::pow(static_cast<double>(q), c.exponent), 0});

  IntegerPolynomial rest = p;
  if (auto quotient = try_exact_divide(p, trivial_factor(op, q))) {
    out.trivial_removed_exactly = true;
    rest = std::move(*quotient);
    // Each cubic factor 1 -+ q^(3k) u^3 contributes three zeros of modulus q^-k.
    for (auto& b : out.buckets) {
      if (!b.modulus_class.trivial) continue;
      b.count = 3;
    }
  }

  if (rest.degree() > 0) {
    for (const auto& z : polynomial_zeros(rest, options)) {
      const double r = std::abs(z.value);
      ZeroBucket* best = nullptr;
      double best_err = std::numeric_limits<double>::infinity();
      for (auto& b : out.buckets) {
        if (out.trivial_removed_exactly && b.modulus_class.trivial) continue;
        const double err = std::abs(r / b.modulus - 1.0);
        if (err <= out.tolerance && err < best_err) {
          best = &b;
          best_err = err;
        }
      }
      // A zero matching both a trivial and a nontrivial class of the same
      // modulus counts as nontrivial: only the exact factor is trivial.
      if (best != nullptr && best->modulus_class.trivial) {
        for (auto& b : out.buckets) {
          if (!b.modulus_class.trivial && b.modulus_class.label == best->modulus_class.label) best = &b;
        }
      }
      if (best != nullptr) {
        best->count += z.multiplicity;
      } else {
        out.unclassified.insert(out.unclassified.end(), z.multiplicity, z.value);
      }
    }
  }
  return out;
}

RamanujanVerdicts ramanujan_verdicts(const Classification& a, const Classification& e, const Classification& b) {
  RamanujanVerdicts v;
  v.hecke = a.ramanujan();
  v.edge = e.ramanujan();
  v.chamber = b.ramanujan();
  return v;
}

SteinbergCheck steinberg_divisibility(const IntegerPolynomial& pb, std::int64_t chi) {
  if (chi < 1) throw Error("steinberg_divisibility: needs chi >= 1, got " + std::to_string(chi));
  SteinbergCheck s;
  s.chi = chi;
  const IntegerPolynomial cube{1, 0, 0, -1};
  s.divides = try_exact_divide(pb, cube.pow(static_cast<unsigned>(chi - 1))).has_value();
  s.order = divisibility_order(pb, cube);
  return s;
}

RepCensus rep_census(const Classification& b, const ComplexCounts& counts) {
  RepCensus r;
  auto note = [&](std::string s) { r.diagnostics.push_back(std::move(s)); };
  if (b.op != SpectralOperator::B) throw Error("rep_census needs the classification of P_B");
  if (!b.unclassified.empty()) {
    note(std::to_string(b.unclassified.size()) + " zeros of P_B are unclassified");
  }
  const auto c = static_cast<std::int64_t>(b.count("q^0"));
  const auto twice_d = static_cast<std::int64_t>(b.count("q^-3/4"));
  const auto twice_e = static_cast<std::int64_t>(b.count("q^-1/4"));
  if (twice_d % 2 != 0) note("odd number of zeros at modulus q^-3/4");
  if (twice_e % 2 != 0) note("odd number of zeros at modulus q^-1/4");
  r.c = c;
  r.d = twice_d / 2;
  r.e = twice_e / 2;
  r.a = counts.n0 - r.b - r.d;

  const auto n0 = counts.n0, n1 = counts.n1, n2 = counts.n2;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) note("identity fails: " + what);
  };
  check(r.a >= 0, "a >= 0");
  check(6 * r.a + r.b + r.c + 3 * r.d + 3 * r.e == 3 * n2, "6a+b+c+3d+3e = 3N2");
  check(3 * r.a + r.b + 2 * r.d + r.e == n1, "3a+b+2d+e = N1");
  check(r.a + r.b + r.d == n0, "a+b+d = N0");
  check(r.e - r.d == n1 - 3 * n0 + 6, "e-d = N1-3N0+6");
  check(r.c == 3 * n0 - 3 * n1 + 3 * n2 - 3, "c = 3N0-3N1+3N2-3");
  r.consistent = r.diagnostics.empty();
  return r;
}

RankCheck rank_check(const ZetaParts& parts) {
  RankCheck r;
  r.pe_full_rank = parts.pe.degree() == parts.counts.n1;
  r.pb_full_rank = parts.pb.degree() == 3 * parts.counts.n2;
  r.constants_one = parts.pe.coefficient(0) == 1 && parts.pb.coefficient(0) == 1 && parts.pa.coefficient(0) == 1;
  return r;
}

SpectralReport spectral_report(const ZetaParts& parts) {
  SpectralReport r;
  r.a = classify(parts.pa, parts.q, SpectralOperator::A);
  r.e = classify(parts.pe, parts.q, SpectralOperator::E);
  r.b = classify(parts.pb, parts.q, SpectralOperator::B);
  r.verdicts = ramanujan_verdicts(r.a, r.e, r.b);
  if (parts.chi() >= 1) {
    r.steinberg = steinberg_divisibility(parts.pb, parts.chi());
  } else {
    r.steinberg.chi = parts.chi();
    r.notes.push_back("chi < 1: Steinberg divisibility not applicable");
  }
  r.census = rep_census(r.b, parts.counts);
  r.rank = rank_check(parts);
  r.q34_zeros = r.b.count("q^3/4");
  if (r.q34_zeros > 0) {
    r.notes.push_back("P_B has " + std::to_string(r.q34_zeros) +
                      " zeros of modulus q^3/4; type (d) eigenvalues +-q^3/4 of L_B give zeros of modulus q^-3/4, "
                      "so these point to a sign-convention conflict");
  }
  r.notes.push_back(
      "census uses the collision-free moduli 1, q^-1/4, q^-3/4 of P_B; modulus q^-1/2 is shared by types (a), (d), (e)");
  if (!r.verdicts.agree()) r.notes.push_back("the three Ramanujan criteria disagree");
  return r;
}

}  // namespace zeta3
