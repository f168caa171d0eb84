#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "monobrick/oracle/quiver.hpp"

namespace monobrick::oracle {

using ClassId = int;

/// Isomorphism class of a module in the bounded universe.
struct ModClass {
  ClassId id = 0;
  /// Multiplicity of each indecomposable of the preset.
  std::vector<int> multiplicity;
  Rep rep;
  std::vector<int> dims;
  int total_dim = 0;
  /// Dimension vector followed by dim Hom(I, X) and dim Hom(X, I) for every
  /// indecomposable I.
  std::vector<int> fingerprint;
  /// Indecomposable index, or -1 for zero and decomposable classes.
  int indecomposable = -1;
};

/// Every (sub, quotient) class pair realized by some subrepresentation.
struct SubQuotient {
  ClassId sub;
  ClassId quotient;
  friend auto operator<=>(const SubQuotient&, const SubQuotient&) = default;
};

/// All direct sums of a preset's indecomposables up to a total dimension,
/// together with the classes of every subrepresentation and its quotient.
/// Immutable once built.
class Universe {
 public:
  static constexpr int kDefaultDimBound = 6;

  /// Throws std::runtime_error if two classes share a fingerprint or a
  /// subquotient falls outside the indecomposable list, and
  /// std::invalid_argument on a negative bound.
  Universe(QuiverPreset preset, int dim_bound = kDefaultDimBound, int characteristic = 2);

  [[nodiscard]] const QuiverPreset& preset() const noexcept { return preset_; }
  [[nodiscard]] const Quiver& quiver() const noexcept { return preset_.quiver; }
  [[nodiscard]] const PrimeField& field() const noexcept { return field_; }
  [[nodiscard]] int dim_bound() const noexcept { return dim_bound_; }
  [[nodiscard]] std::size_t size() const noexcept { return classes_.size(); }
  [[nodiscard]] const std::vector<ModClass>& classes() const noexcept { return classes_; }
  [[nodiscard]] const ModClass& at(ClassId id) const { return classes_.at(static_cast<std::size_t>(id)); }
  [[nodiscard]] ClassId zero() const noexcept { return 0; }

  /// Class of the indecomposable with preset index `k`; -1 when it is larger
  /// than the bound.
  [[nodiscard]] ClassId indecomposable(int k) const { return indecomposable_ids_.at(static_cast<std::size_t>(k)); }
  [[nodiscard]] ClassId by_label(std::string_view label) const;
  /// Class with the given multiplicities, or -1 if outside the bound.
  [[nodiscard]] ClassId by_multiplicity(const std::vector<int>& multiplicity) const;
  [[nodiscard]] std::string label(ClassId id) const;

  /// Class of an arbitrary representation by fingerprint; -1 if unknown.
  [[nodiscard]] ClassId identify(const Rep& x) const;

  [[nodiscard]] const std::vector<SubQuotient>& subquotients(ClassId id) const {
    return subquotients_.at(static_cast<std::size_t>(id));
  }
  /// Classes isomorphic to a subrepresentation (resp. quotient) of `id`.
  [[nodiscard]] const std::vector<ClassId>& sub_classes(ClassId id) const {
    return sub_classes_.at(static_cast<std::size_t>(id));
  }
  [[nodiscard]] const std::vector<ClassId>& quotient_classes(ClassId id) const {
    return quotient_classes_.at(static_cast<std::size_t>(id));
  }
  /// Number of subrepresentations (not classes) enumerated for `id`.
  [[nodiscard]] std::size_t subrep_count(ClassId id) const {
    return subrep_counts_.at(static_cast<std::size_t>(id));
  }

 private:
  std::vector<int> fingerprint_of(const Rep& x) const;
  ClassId identify_cached(const Rep& x);
  void build_subquotients(ClassId id);

  QuiverPreset preset_;
  PrimeField field_;
  int dim_bound_;
  std::vector<ModClass> classes_;
  std::vector<ClassId> indecomposable_ids_;
  std::map<std::vector<int>, ClassId> by_fingerprint_;
  std::map<std::vector<int>, ClassId> by_multiplicity_;
  std::unordered_map<std::string, ClassId> by_key_;
  std::vector<std::vector<SubQuotient>> subquotients_;
  std::vector<std::vector<ClassId>> sub_classes_;
  std::vector<std::vector<ClassId>> quotient_classes_;
  std::vector<std::size_t> subrep_counts_;
};

/// Subrepresentations of `x`: one subspace per vertex, stable under arrows.
[[nodiscard]] std::vector<std::vector<Subspace>> subrepresentations(const PrimeField& f,
                                                                    const Quiver& q, const Rep& x);

/// The representation on a stable subspace tuple, in its RREF bases.
[[nodiscard]] Rep restrict_to(const PrimeField& f, const Quiver& q, const Rep& x,
                              const std::vector<Subspace>& sub);

/// The quotient by a stable subspace tuple, in the free-column basis.
[[nodiscard]] Rep quotient_by(const PrimeField& f, const Quiver& q, const Rep& x,
                              const std::vector<Subspace>& sub);

}  // namespace monobrick::oracle
