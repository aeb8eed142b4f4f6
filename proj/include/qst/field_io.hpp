#pragma once

#include <filesystem>
#include <iosfwd>

#include "qst/field.hpp"

namespace qst {

enum class FieldFormat { Pgm, Csv };

/// `.pgm` / `.pnm` pick the PGM codec, everything else CSV.
FieldFormat format_from_path(const std::filesystem::path& path);

/// PGM accepts P2 (ASCII) and P5 (binary) with maxval <= 255.
/// CSV is comma-separated, no header: one value per line for a 1D signal,
/// one image row per line for 2D. A single-column CSV loads as a 1D signal.
Field load_field(const std::filesystem::path& path, FieldFormat format);
Field load_field(const std::filesystem::path& path);  // format from extension

/// PGM output clamps to [0, 255] and rounds; CSV output round-trips exactly.
void save_field(const Field& field, const std::filesystem::path& path, FieldFormat format);
void save_field(const Field& field, const std::filesystem::path& path);

Field parse_csv(std::istream& in, const std::string& name);
Field parse_pgm(std::istream& in, const std::string& name);
void write_csv(const Field& field, std::ostream& out);
void write_pgm(const Field& field, std::ostream& out);

/// Locale-independent shortest representation that parses back to the same
/// double. All CSV emitted by this project goes through here.
std::string format_double(double v);

}  // namespace qst
