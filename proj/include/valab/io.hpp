#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "valab/algebroid.hpp"
#include "valab/commalg.hpp"
#include "valab/lone.hpp"
#include "valab/report.hpp"

namespace valab {

inline constexpr std::string_view kFormatVersion = "1";
inline constexpr std::string_view kToolVersion = "0.1.0";

/// Parsed input file. Files without an algebroid block carry B = 0.
struct AlgebroidFile {
  std::string id;
  VertexAlgebroid algebroid;
  bool has_algebroid = false;
  std::optional<Grading> grading;
  std::optional<Vector> t;
  std::optional<Matrix> form;
  std::optional<LOneMap> l1;
  std::optional<Sl2Data> semisimple;

  const CommAlgebra& algebra() const { return algebroid.algebra(); }
};

/// Throws Error{ParseError} for malformed JSON or values and
/// Error{DimensionMismatch} for arrays of the wrong shape.
AlgebroidFile parse_file(std::string_view text);
AlgebroidFile load_file(const std::filesystem::path& path);

/// Canonical JSON text: fixed key order, rationals as "p/q" strings, two-space indent.
std::string serialize(const AlgebroidFile& file);
void save_file(const AlgebroidFile& file, const std::filesystem::path& path);

std::string report_json(const std::string& command, const std::string& fixture_id, const CheckReport& report);
std::string report_text(const std::string& command, const std::string& fixture_id, const CheckReport& report);

}  // namespace valab
