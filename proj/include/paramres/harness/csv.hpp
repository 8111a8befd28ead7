#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace paramres::harness {

/// Shortest decimal string that round-trips the double exactly.
std::string format_double(double v);

/// Write text to path atomically (temp file in the same directory + rename).
/// Throws IoError on failure.
void write_text_atomic(const std::filesystem::path &path,
                       const std::string &content);

/// Comma-separated table: header row, then one row per sample across the
/// given columns (all columns must share a length).
void write_csv(const std::filesystem::path &path,
               const std::vector<std::string> &header,
               const std::vector<const std::vector<double> *> &columns);

} // namespace paramres::harness
