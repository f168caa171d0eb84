#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace monobrick {

/// Reduces `value` cyclically into [1, n]; never returns 0, so 1 - 1 == n.
[[nodiscard]] constexpr int wrap_mark(int value, int n) noexcept {
  int r = (value - 1) % n;
  if (r < 0) r += n;
  return r + 1;
}

/// An arc (start, end) on [n]. Stands for the uniserial brick with socle
/// S_start and top S_{end-1}.
struct Arc {
  int start = 1;
  int end = 1;

  friend constexpr auto operator<=>(const Arc&, const Arc&) = default;
};

enum class AlgebraKind { LinearA, CyclicB };

/// LinearA(m): admissible arcs on [m+1] (bricks over the linear quiver with m
/// vertices). CyclicB(n): every arc on [n] (cyclic quiver, radical^n = 0).
class AlgebraSpec {
 public:
  static AlgebraSpec linear_a(int m);
  static AlgebraSpec cyclic_b(int n);

  [[nodiscard]] AlgebraKind kind() const noexcept { return kind_; }
  /// The algebra index: m for A_m, n for B_n.
  [[nodiscard]] int index() const noexcept { return index_; }
  /// Number of marks arcs live on.
  [[nodiscard]] int marks() const noexcept {
    return kind_ == AlgebraKind::LinearA ? index_ + 1 : index_;
  }
  [[nodiscard]] bool is_legal(const Arc& a) const noexcept;
  /// All legal arcs, sorted by (start, length).
  [[nodiscard]] std::vector<Arc> arcs() const;
  [[nodiscard]] std::size_t arc_count() const noexcept;
  [[nodiscard]] std::string name() const;

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;

 private:
  AlgebraSpec(AlgebraKind kind, int index) : kind_(kind), index_(index) {}
  AlgebraKind kind_;
  int index_;
};

/// Cyclic length of an arc, in [1, n]; (i, i) has length n.
[[nodiscard]] constexpr int arc_length(const Arc& a, int n) noexcept {
  return wrap_mark(a.end - a.start, n);
}

/// Strict weak order by (start, length); the canonical arc order of diagrams.
struct ArcOrder {
  int marks;
  [[nodiscard]] bool operator()(const Arc& a, const Arc& b) const noexcept {
    if (a.start != b.start) return a.start < b.start;
    return arc_length(a, marks) < arc_length(b, marks);
  }
};

/// (i, i+1, ..., j-1) with cyclic wrap; composition factors bottom-up.
[[nodiscard]] std::vector<int> socle_series(const Arc& a, int n);

/// Position of `mark` in the socle series of `a`, or -1 when absent.
[[nodiscard]] int socle_position(const Arc& a, int mark, int n) noexcept;

/// True iff `part` occurs as a contiguous run inside `whole` (no wrap).
[[nodiscard]] bool is_partial_sequence(const std::vector<int>& part,
                                       const std::vector<int>& whole);

enum class CrossKind { NonCrossing, MonoCrossing, EpiCrossing, StrictlyCrossing };

enum class MorphismKind { Zero, Injection, NonzeroNonInjection, Iso };

[[nodiscard]] std::string_view to_string(CrossKind k) noexcept;
[[nodiscard]] std::string_view to_string(MorphismKind k) noexcept;

/// Four-way classification of a pair of distinct arcs on [n].
/// Throws std::invalid_argument when a == b.
[[nodiscard]] CrossKind crossing_kind(const Arc& a, const Arc& b, int n);

/// Kind of the (at most one-dimensional) hom space M_a -> M_b.
///
/// With a = (i, j), b = (c, d): a nonzero map exists iff c lies in the socle
/// series of a and j-1 lies in that of b (top quotient of M_a matches a
/// submodule of M_b). It is injective iff c == i.
[[nodiscard]] MorphismKind hom_kind(const Arc& a, const Arc& b,
                                    const AlgebraSpec& spec);

/// Arcs of the submodule chain of M_a, shortest first; the last one is `a`.
[[nodiscard]] std::vector<Arc> submodule_arcs(const Arc& a,
                                              const AlgebraSpec& spec);

/// Label of M_a top-first, e.g. (1,4) on [4] -> "3/2/1".
[[nodiscard]] std::string module_label(const Arc& a, int n);

}  // namespace monobrick
