#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "valab/error.hpp"
#include "valab/io.hpp"
#include "valab/report.hpp"

namespace valab {

namespace exit_code {
inline constexpr int kPass = 0;
inline constexpr int kCheckFailure = 1;
inline constexpr int kInputError = 2;
inline constexpr int kPrecondition = 3;
}  // namespace exit_code

/// 2 for ParseError and DimensionMismatch, 3 otherwise.
int exit_code_for(ErrorKind kind);

struct CommandResult {
  std::string command;
  std::string fixture_id;
  CheckReport report;
  /// Hypothesis errors hit while building the report, in order.
  std::vector<std::string> errors;
  int exit_code = exit_code::kPass;
};

/// Algebra, Leibniz, truncated conformal, algebroid and compatibility axioms,
/// plus the sl2 structure check when the file names a triple.
CommandResult cmd_check(const AlgebroidFile& file);
/// Ring, Leibniz and bilinear-form invariants. Entries that need a missing
/// Gorenstein block are skipped with the reason.
CommandResult cmd_invariants(const AlgebroidFile& file);
/// L(1) family, pinned map and Heisenberg witness.
CommandResult cmd_semiconformal(const AlgebroidFile& file);
/// Seeded single-coefficient mutations; a mutation is caught when some check
/// id fails that passes on the original.
CommandResult cmd_mutate(const AlgebroidFile& file, std::uint64_t seed, std::size_t count);

}  // namespace valab
