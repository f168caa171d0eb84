#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monobrick/arc.hpp"
#include "monobrick/oracle/linalg.hpp"

namespace monobrick::oracle {

/// Arrow between 0-based vertices.
struct Arrow {
  int source;
  int target;
};

/// A finite quiver with monomial relations, given as forbidden paths.
struct Quiver {
  int vertices = 0;
  std::vector<Arrow> arrows;
  /// Each path lists arrow indices in the order they are traversed.
  std::vector<std::vector<int>> zero_paths;
};

/// A representation over F_p: a space per vertex, a matrix per arrow.
/// maps[a] has dims[target] rows and dims[source] columns.
struct Rep {
  std::vector<int> dims;
  std::vector<Matrix> maps;

  [[nodiscard]] int total_dim() const noexcept;
  /// Canonical byte string of dims and matrix entries; equal keys mean equal
  /// representations (not merely isomorphic ones).
  [[nodiscard]] std::string key() const;

  friend bool operator==(const Rep&, const Rep&) = default;
};

/// The zero representation of `q`.
[[nodiscard]] Rep zero_rep(const Quiver& q);

/// True iff shapes match `q` and every forbidden path composes to zero.
[[nodiscard]] bool satisfies_relations(const PrimeField& f, const Quiver& q, const Rep& x);

[[nodiscard]] Rep direct_sum(const Quiver& q, const Rep& x, const Rep& y);

/// A morphism: one matrix per vertex, dims[v](target) x dims[v](source).
struct HomElement {
  std::vector<Matrix> components;

  [[nodiscard]] bool is_zero() const noexcept;
  [[nodiscard]] bool is_injective(const PrimeField& f) const;
  [[nodiscard]] bool is_isomorphism(const PrimeField& f) const;
};

/// Basis of Hom(x, y): tuples commuting with every arrow.
[[nodiscard]] std::vector<HomElement> hom_space(const PrimeField& f, const Quiver& q,
                                                const Rep& x, const Rep& y);

[[nodiscard]] int hom_dim(const PrimeField& f, const Quiver& q, const Rep& x, const Rep& y);

/// Every element of the span of `basis` (p^dim of them), including zero.
[[nodiscard]] std::vector<HomElement> all_elements(const PrimeField& f,
                                                   const std::vector<HomElement>& basis);

/// Exhaustive search for an invertible intertwiner; audit path only.
[[nodiscard]] bool are_isomorphic_exhaustive(const PrimeField& f, const Quiver& q,
                                             const Rep& x, const Rep& y);

struct Indecomposable {
  std::string label;
  Rep rep;
};

/// A small algebra with a complete list of indecomposables.
struct QuiverPreset {
  std::string name;
  Quiver quiver;
  std::vector<Indecomposable> indecomposables;
  /// The arc model when the algebra is Nakayama (bricks <-> arcs).
  std::optional<AlgebraSpec> arc_model;

  /// Index of the indecomposable with `label`; throws std::out_of_range.
  [[nodiscard]] int index_of(std::string_view label) const;
};

/// Presets: a2_linear, a3_linear, a3_source, nak2, b3. Throws
/// std::invalid_argument on an unknown name.
[[nodiscard]] QuiverPreset make_preset(std::string_view name);
[[nodiscard]] const std::vector<std::string>& preset_names();

}  // namespace monobrick::oracle
