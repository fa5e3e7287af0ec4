#pragma once

// Sequence files: {"dims": [...], "offsets": [...], "values": [[re, im], ...]}
// with values in row-major order. One-dimensional sequences use dims of length 1.

#include <filesystem>
#include <string>

#include "reexp/seqcore.hpp"

namespace reexp {

std::string to_sequence_json(const CoeffND& a);
CoeffND from_sequence_json(const std::string& text);

CoeffND read_sequence_file(const std::filesystem::path& path);

/// Writes to a sibling temporary file and renames it into place, so an
/// interrupted write never leaves a partial file at `path`.
void write_sequence_file(const std::filesystem::path& path, const CoeffND& a);

/// Same write-then-rename discipline for arbitrary text artifacts.
void write_text_atomically(const std::filesystem::path& path, const std::string& contents);

}  // namespace reexp
