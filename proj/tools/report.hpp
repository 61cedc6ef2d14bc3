#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "zeta3/complex.hpp"
#include "zeta3/spectra.hpp"
#include "zeta3/zeta.hpp"

namespace zeta3::cli {

using Json = nlohmann::json;

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view bytes);

/// Rounds to 12 decimals so that JSON output is stable across platforms.
double fixed(double x);

/// Big integers are written as decimal strings.
Json to_json(const Integer& x);
Json to_json(const IntegerPolynomial& p);
Json to_json(const std::vector<Integer>& xs);
Json to_json(const ComplexCounts& c);
Json to_json(const Classification& c);
Json to_json(const SpectralReport& r);
Json to_json(const ValidationReport& r);

/// Accepts both strings and JSON integers.
Integer integer_from_json(const Json& j);
IntegerPolynomial polynomial_from_json(const Json& j);

/// {"q", "counts", "pa", "pe", "pb"}; the inverse of parts_from_json.
Json parts_to_json(const ZetaParts& p);
ZetaParts parts_from_json(const Json& j);

/// Common envelope: tool name and version, plus the digest of the input.
Json envelope(const std::string& command, const std::string& input_digest);

/// Pretty-printed, keys sorted, trailing newline.
std::string dump(const Json& j);

/// Plain-text rendering of a spectral report.
std::string spectrum_text(const SpectralReport& r);

}  // namespace zeta3::cli
