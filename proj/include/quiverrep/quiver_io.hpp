#pragma once

#include <string>

#include "quiverrep/quiver.hpp"

namespace qrep {

/// Section-based quiver text format:
///
///   # comment (anywhere, to end of line)
///   [vertices]
///   a0
///   [arrows]
///   al: a -> b
///
/// Whitespace-insensitive within lines; ids are tokens without whitespace,
/// ':' or '-'/'=' arrows.
FiniteQuiver parse_quiver(const std::string& text);

std::string write_quiver(const FiniteQuiver& q);

// Shared low-level helpers for the other section-based formats.
namespace ioutil {
std::string strip_comment(const std::string& line);
std::string trim(const std::string& s);
bool is_section(const std::string& line, std::string* name);
}  // namespace ioutil

}  // namespace qrep
