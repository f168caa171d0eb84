#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "monobrick/oracle/universe.hpp"

namespace monobrick::oracle {

/// Closure properties of a subcategory, evaluated inside the bounded
/// universe. Extensions are only tested for middle terms of total dimension
/// at most `extension_dim_bound`.
struct ClosureFlags {
  bool extensions = true;
  bool kernels = true;
  bool cokernels = true;
  bool images = true;
  bool subobjects = true;
  bool quotients = true;
  bool summands = true;
  int extension_dim_bound = 0;

  [[nodiscard]] bool torsion_free() const noexcept { return extensions && subobjects; }
  [[nodiscard]] bool wide() const noexcept { return extensions && kernels && cokernels; }
  [[nodiscard]] bool kernel_image_closed() const noexcept { return extensions && kernels && images; }
  [[nodiscard]] std::string to_string() const;
};

/// A set of classes of one universe; always contains the zero module.
class SubcatSet {
 public:
  explicit SubcatSet(const Universe& u);
  SubcatSet(const Universe& u, const std::vector<ClassId>& members);

  [[nodiscard]] const Universe& universe() const noexcept { return *universe_; }
  [[nodiscard]] bool contains(ClassId id) const { return member_.at(static_cast<std::size_t>(id)); }
  void insert(ClassId id) { member_.at(static_cast<std::size_t>(id)) = true; }
  [[nodiscard]] std::vector<ClassId> members() const;
  [[nodiscard]] std::size_t size() const;
  /// Indecomposable members, as preset indices.
  [[nodiscard]] std::set<int> indecomposables() const;
  [[nodiscard]] std::string to_string() const;

  /// Lazily computed, then cached.
  [[nodiscard]] const ClosureFlags& flags() const;

  friend bool operator==(const SubcatSet& a, const SubcatSet& b) { return a.member_ == b.member_; }

 private:
  const Universe* universe_;
  std::vector<bool> member_;
  mutable std::optional<ClosureFlags> flags_;
};

/// Brick sets are held as sorted preset indices of indecomposables.
using BrickSet = std::vector<int>;

[[nodiscard]] SubcatSet filt(const Universe& u, const std::vector<ClassId>& gens);
[[nodiscard]] SubcatSet filt_bricks(const Universe& u, const BrickSet& bricks);

/// Nonzero members with no proper filtration 0 -> A -> M -> B -> 0 inside e.
[[nodiscard]] std::vector<ClassId> simp(const SubcatSet& e);
[[nodiscard]] BrickSet simp_bricks(const SubcatSet& e);

[[nodiscard]] bool is_extension_closed(const SubcatSet& e);
[[nodiscard]] bool is_left_schur(const SubcatSet& e);
[[nodiscard]] ClosureFlags closure_flags(const SubcatSet& e);

/// Members W such that every map W -> X into e has its cokernel in e.
[[nodiscard]] SubcatSet w_map(const SubcatSet& e);

/// Filt of the subobject closure of `c`; the smallest torsion-free class
/// containing it.
[[nodiscard]] SubcatSet f_map(const Universe& u, const std::vector<ClassId>& c);

/// Black/white picture of a subcategory: indecomposable summands of its
/// members that are (not) in `black`.
[[nodiscard]] std::set<int> white_vertices(const SubcatSet& e, const BrickSet& black);

// ---- brick level: hom elements enumerated one by one ----

/// Indecomposable, and every nonzero endomorphism is invertible.
[[nodiscard]] bool is_brick(const Universe& u, ClassId id);

/// Preset indices of all bricks.
[[nodiscard]] BrickSet bricks(const Universe& u);

enum class PairMaps { Zero, InjectionsOnly, HasNonInjection };

/// Relation table between bricks: kinds of nonzero maps from brick x to y.
class BrickRelations {
 public:
  explicit BrickRelations(const Universe& u);

  [[nodiscard]] const BrickSet& bricks() const noexcept { return bricks_; }
  [[nodiscard]] PairMaps maps(int from, int to) const;
  [[nodiscard]] bool has_injection(int from, int to) const;
  [[nodiscard]] int hom_dim(int from, int to) const;

  [[nodiscard]] bool is_monobrick(const BrickSet& s) const;
  [[nodiscard]] bool is_semibrick(const BrickSet& s) const;
  [[nodiscard]] BrickSet mmax(const BrickSet& s) const;
  /// Bricks embedding into a member such that every map into a member is
  /// zero or injective.
  [[nodiscard]] BrickSet cofinal_closure(const BrickSet& s) const;

 private:
  [[nodiscard]] std::size_t slot(int from, int to) const;
  BrickSet bricks_;
  std::size_t count_;
  std::vector<PairMaps> kinds_;
  std::vector<char> injection_;
  std::vector<int> dims_;
};

/// All monobricks, as sorted brick-index sets, in lexicographic order.
[[nodiscard]] std::vector<BrickSet> monobricks_bruteforce(const BrickRelations& rel);

}  // namespace monobrick::oracle
