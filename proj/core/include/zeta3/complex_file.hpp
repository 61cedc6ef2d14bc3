#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "zeta3/complex.hpp"

namespace zeta3 {

/// Line-oriented text format, header `zeta3-complex v1`.
///
///   q <int>
///   mode presented|geometric
///   presented:  lambda i:j, triple x y z, voltage m c0 ... c{n-1}
///   geometric:  vertex id type, edge id tail head, chamber e01 e12 e20
///
/// Blank lines and lines starting with `#` are ignored. A presented file is
/// expanded with abelian_cover; a geometric one is canonicalized.
enum class FileMode { Automatic, Presented, Geometric };

std::string serialize_complex(const ComplexDescription& cx, FileMode mode = FileMode::Automatic);

/// Throws ParseError (with a line number where one applies) for malformed or
/// truncated input and ConstructionError when presented data is inconsistent.
ComplexDescription parse_complex(std::string_view text);

/// Throws IoError when the file cannot be read.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

ComplexDescription read_complex_file(const std::filesystem::path& path);

}  // namespace zeta3
