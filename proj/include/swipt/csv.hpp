#pragma once

#include <string>

#include "swipt/experiments.hpp"

namespace swipt {

// Shortest decimal representation that parses back to the same double.
std::string format_double(double v);

// Header line plus one line per row, LF endings.
std::string to_csv(const ResultTable& table);

// Writes the table to `path` (UTF-8, LF) and the resolved spec echo to
// `path`.spec. Throws std::runtime_error naming the path on I/O failure.
void emit_csv(const ResultTable& table, const std::string& path);

}  // namespace swipt
