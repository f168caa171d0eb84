#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "monobrick/diagram.hpp"

namespace monobrick {

/// A mono-crossing diagram with its submodule order: a <= b iff M_a embeds
/// into M_b (hom_kind is Injection or Iso).
class MonobrickPoset {
 public:
  /// Throws InvalidInput naming the offending pair if `d` is not mono-crossing.
  explicit MonobrickPoset(ArcDiagram d);

  [[nodiscard]] const ArcDiagram& diagram() const noexcept { return diagram_; }
  [[nodiscard]] const AlgebraSpec& spec() const noexcept { return diagram_.spec(); }
  [[nodiscard]] const std::vector<Arc>& arcs() const noexcept { return diagram_.arcs(); }
  [[nodiscard]] bool less_equal(const Arc& a, const Arc& b) const;

  friend bool operator==(const MonobrickPoset& x, const MonobrickPoset& y) {
    return x.diagram_ == y.diagram_;
  }

 private:
  ArcDiagram diagram_;
};

/// Maximal elements of the submodule order; always a semibrick.
[[nodiscard]] ArcDiagram mmax(const MonobrickPoset& m);

/// m together with every submodule arc N of a member such that each map from
/// M_N into a member is zero or injective.
[[nodiscard]] MonobrickPoset cofinal_closure(const MonobrickPoset& m);

[[nodiscard]] bool is_cofinally_closed(const MonobrickPoset& m);

/// m ⊆ n and every arc of n lies below some arc of m. Throws InvalidInput
/// when the algebras differ.
[[nodiscard]] bool is_cofinal_extension(const MonobrickPoset& m,
                                        const MonobrickPoset& n);

/// Covering pairs (lower, upper) of a partial order on indices [0, count),
/// ordered by (upper, lower).
[[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> covering_relation(
    std::size_t count, const std::function<bool(std::size_t, std::size_t)>& leq);

/// Covering pairs (lower, upper), ordered by the diagram order of
/// (upper, lower).
[[nodiscard]] std::vector<std::pair<Arc, Arc>> hasse(const MonobrickPoset& m);

}  // namespace monobrick
