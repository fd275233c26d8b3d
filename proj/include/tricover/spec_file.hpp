#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "tricover/cover.hpp"

namespace tricover {

/// Line-oriented cover description:
///
///   # comment
///   field = Fp:7
///   vars = s, t
///   a = s
///   b = 1
///   c = t
///   d = 0
///
/// `vars` may be empty for a cover over a point. Malformed lines raise
/// ParseError whose position() is the 1-based line number.
CoverData parse_cover_spec(std::string_view text);
CoverData load_cover(const std::filesystem::path& path);

/// Canonical text; parse_cover_spec(print_cover_spec(c)) == c.
std::string print_cover_spec(const CoverData& cover);

}  // namespace tricover
