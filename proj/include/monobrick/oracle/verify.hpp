#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "monobrick/oracle/fixtures.hpp"
#include "monobrick/oracle/subcategory.hpp"

namespace monobrick::oracle {

struct CheckResult {
  std::string name;
  bool passed = true;
  /// Summary on success, first counterexample on failure.
  std::string detail;
};

struct VerifyReport {
  std::string preset;
  int dim_bound = 0;
  int characteristic = 0;
  std::size_t monobricks = 0;
  std::vector<CheckResult> checks;

  [[nodiscard]] bool all_passed() const;
};

/// Expected #monobricks for a preset (22 for a3_linear, 26 for a3_source, ...).
[[nodiscard]] std::size_t expected_monobrick_count(const std::string& preset);

/// Labels -> sorted brick indices; throws std::out_of_range on unknown labels.
[[nodiscard]] BrickSet brick_set(const QuiverPreset& p, const std::vector<std::string>& labels);
[[nodiscard]] std::string brick_set_string(const QuiverPreset& p, const BrickSet& s);

/// Per-row comparison of a published table against recomputation.
[[nodiscard]] std::vector<CheckResult> check_table(const Universe& u, const BrickRelations& rel,
                                                   const TableFixture& table);

/// Arc model vs matrices: hom kinds, crossing kinds, monobrick sets and the
/// arc-level mmax / cofinal closure. Empty for presets without an arc model.
[[nodiscard]] std::vector<CheckResult> check_arc_agreement(const Universe& u, const BrickRelations& rel);

/// Subcategories Filt(C) for every set C of bricks, classified by whether
/// left Schur agrees with closure under extensions, kernels and images.
struct SchurCensus {
  std::size_t generated = 0;
  std::size_t agreements = 0;
  /// Left Schur but not closed under kernels or images.
  std::vector<BrickSet> violations;
  /// Closed under extensions, kernels and images but not left Schur.
  std::vector<BrickSet> converse_failures;
};
[[nodiscard]] SchurCensus schur_census(const Universe& u, const BrickRelations& rel);

/// Census size, simp/Filt bijection, closure and mmax identities, the
/// wide/torsion-free bijection and the finite count relations.
[[nodiscard]] std::vector<CheckResult> check_identities(const Universe& u, const BrickRelations& rel);

/// Left Schur vs closure under extensions, kernels and images: equivalence on
/// presets with an arc model, at least four counterexamples otherwise.
[[nodiscard]] std::vector<CheckResult> check_schur(const Universe& u, const BrickRelations& rel);

/// Every structural identity on the brute-forced monobricks of the universe,
/// plus the table fixture and arc agreement when they apply.
[[nodiscard]] VerifyReport verify_preset(const Universe& u);

}  // namespace monobrick::oracle
