#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monobrick/diagram.hpp"

namespace monobrick {

/// A set of blocks over [n], canonicalized as sorted blocks in sorted order.
class NclPartition {
 public:
  NclPartition(int n, std::vector<std::vector<int>> blocks);

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const NclPartition&, const NclPartition&) = default;

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
};

enum class NclCondition { Range, NCL1, NCL2, NCL3 };

struct NclViolation {
  NclCondition condition;
  std::string detail;
  [[nodiscard]] std::string describe() const;
};

/// First violated condition, or nullopt for a non-crossing linked partition.
/// `Range` covers empty blocks, duplicate blocks and entries outside [n].
[[nodiscard]] std::optional<NclViolation> find_ncl_violation(const NclPartition& p);

[[nodiscard]] inline bool validate(const NclPartition& p) {
  return !find_ncl_violation(p).has_value();
}

/// Arcs (min E, j) for every block E and every non-minimal j in E. The
/// diagram lives on LinearA(n-1). Throws InvalidInput on invalid partitions.
[[nodiscard]] ArcDiagram to_diagram(const NclPartition& p);

/// Inverse of to_diagram. Throws InvalidInput if `d` is not a mono-crossing
/// admissible diagram.
[[nodiscard]] NclPartition from_diagram(const ArcDiagram& d);

/// Every non-crossing linked partition of [n], via a generate-and-validate
/// search independent of the arc side.
[[nodiscard]] std::vector<NclPartition> enumerate_ncl_partitions(int n);

}  // namespace monobrick
