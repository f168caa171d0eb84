#pragma once

#include <optional>
#include <string>
#include <vector>

namespace monobrick::oracle {

enum class ClosureFailure {
  None,
  NotSummandClosed,  // (*) in the a3_source table
  NotKernelClosed,   // (**) in the a3_source table
};

/// One row of a reference monobrick table. Modules are named by preset
/// labels; an absent optional means "itself".
struct TableRow {
  std::vector<std::string> monobrick;
  /// Indecomposables drawn white in the Filt picture; absent when the table
  /// has no picture column.
  std::optional<std::vector<std::string>> white;
  std::optional<std::vector<std::string>> mmax;
  std::optional<std::vector<std::string>> closure;
  /// Explicit verdict columns; when absent, wide iff mmax is itself and
  /// torsion-free iff the closure is itself.
  std::optional<bool> wide;
  std::optional<bool> torsion_free;
  ClosureFailure failure = ClosureFailure::None;
};

struct TableFixture {
  std::string name;
  std::string preset;
  std::vector<TableRow> rows;
};

/// Monobricks with at least two elements over 1 <- 2 <- 3.
[[nodiscard]] const TableFixture& linear_a3_table();
/// Monobricks with at least two elements over 1 -> 2 <- 3.
[[nodiscard]] const TableFixture& source_a3_table();
/// All monobricks over the cyclic Nakayama algebras with two simples.
[[nodiscard]] const TableFixture& nakayama2_table();

/// Fixture for a preset, or nullptr when none is published.
[[nodiscard]] const TableFixture* fixture_for(const std::string& preset);

}  // namespace monobrick::oracle
