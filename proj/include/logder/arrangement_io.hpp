#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "logder/arrangement.hpp"

namespace logder {

struct ArrangementFile {
  Arrangement arrangement{0};
  std::optional<std::size_t> distinguished;
};

/// Strict reader for the arrangement text format:
///
///   # comment
///   dimension = 4
///   hyperplanes = [[1, 0, 0, 0], [1/2, -1, 0, 0]]
///   distinguished = 1        # optional, 0-based
///
/// Each field appears at most once, in any order; unknown fields, missing
/// required fields and malformed numbers throw ParseError with the position
/// of the offending token.
ArrangementFile parse_arrangement(std::string_view text);
ArrangementFile read_arrangement_file(const std::string& path);

std::string format_arrangement(const Arrangement& a, std::optional<std::size_t> distinguished = std::nullopt);

}  // namespace logder
