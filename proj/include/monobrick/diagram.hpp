#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "monobrick/arc.hpp"

namespace monobrick {

/// A set of legal arcs for one algebra, kept sorted by (start, length).
class ArcDiagram {
 public:
  /// Throws InvalidInput on illegal or duplicate arcs.
  ArcDiagram(AlgebraSpec spec, std::vector<Arc> arcs);
  ArcDiagram(AlgebraSpec spec, std::initializer_list<Arc> arcs)
      : ArcDiagram(spec, std::vector<Arc>(arcs)) {}
  explicit ArcDiagram(AlgebraSpec spec) : spec_(spec) {}

  [[nodiscard]] const AlgebraSpec& spec() const noexcept { return spec_; }
  [[nodiscard]] const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  [[nodiscard]] std::size_t size() const noexcept { return arcs_.size(); }
  [[nodiscard]] bool empty() const noexcept { return arcs_.empty(); }
  [[nodiscard]] bool contains(const Arc& a) const noexcept;
  /// Set inclusion; both diagrams must share the algebra.
  [[nodiscard]] bool is_subset_of(const ArcDiagram& other) const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const ArcDiagram&, const ArcDiagram&) = default;

 private:
  AlgebraSpec spec_;
  std::vector<Arc> arcs_;
};

/// A pair of arcs that stops a diagram from being mono-crossing.
struct CrossingViolation {
  Arc first;
  Arc second;
  CrossKind kind;
  [[nodiscard]] std::string describe(int marks) const;
};

/// First pair (in diagram order) whose crossing kind is neither mono-crossing
/// nor non-crossing.
[[nodiscard]] std::optional<CrossingViolation> find_monobrick_violation(
    const ArcDiagram& d);

[[nodiscard]] bool is_monobrick_diagram(const ArcDiagram& d);
[[nodiscard]] bool is_semibrick_diagram(const ArcDiagram& d);

}  // namespace monobrick
