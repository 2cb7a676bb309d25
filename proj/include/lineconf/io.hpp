#pragma once

// Arrangement text files: one line per row as three integers separated by
// spaces or tabs, '#' to end of row is a comment, blank rows ignored.

#include <string>
#include <string_view>

#include "lineconf/arrangement.hpp"

namespace lineconf {

/// Throws InvalidInput naming the offending row on malformed text, a zero
/// triple, or a repeated line.
Arrangement parseArrangement(std::string_view text);

/// Throws UsageError if the file cannot be read.
Arrangement readArrangementFile(const std::string& path);

std::string formatArrangement(const Arrangement& a);

}  // namespace lineconf
