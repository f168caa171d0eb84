#include "monobrick/oracle/universe.hpp"

#include <algorithm>
#include <stdexcept>

namespace monobrick::oracle {

namespace {

std::vector<int> column(const Matrix& m, int c) {
  std::vector<int> v(static_cast<std::size_t>(m.rows()));
  for (int r = 0; r < m.rows(); ++r) v[static_cast<std::size_t>(r)] = m.at(r, c);
  return v;
}

std::vector<int> apply(const PrimeField& f, const Matrix& m, const std::vector<int>& v) {
  std::vector<int> out(static_cast<std::size_t>(m.rows()), 0);
  for (int r = 0; r < m.rows(); ++r) {
    int acc = 0;
    for (int c = 0; c < m.cols(); ++c) acc += m.at(r, c) * v[static_cast<std::size_t>(c)];
    out[static_cast<std::size_t>(r)] = acc % f.characteristic();
  }
  return out;
}

std::vector<int> row_of(const Matrix& m, int r) {
  std::vector<int> v(static_cast<std::size_t>(m.cols()));
  for (int c = 0; c < m.cols(); ++c) v[static_cast<std::size_t>(c)] = m.at(r, c);
  return v;
}

bool is_zero_vec(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

}  // namespace

std::vector<std::vector<Subspace>> subrepresentations(const PrimeField& f, const Quiver& q,
                                                      const Rep& x) {
  const auto nv = static_cast<std::size_t>(q.vertices);
  std::vector<std::vector<Subspace>> choices(nv);
  for (std::size_t v = 0; v < nv; ++v) choices[v] = all_subspaces(f, x.dims[v]);

  auto stable = [&](const std::vector<Subspace>& pick, std::size_t a) {
    const auto s = static_cast<std::size_t>(q.arrows[a].source);
    const auto t = static_cast<std::size_t>(q.arrows[a].target);
    for (int r = 0; r < pick[s].dim(); ++r) {
      auto image = apply(f, x.maps[a], row_of(pick[s].basis, r));
      if (!is_zero_vec(pick[t].reduce(f, std::move(image)))) return false;
    }
    return true;
  };

  std::vector<std::vector<Subspace>> out;
  std::vector<Subspace> pick(nv);
  auto rec = [&](auto& self, std::size_t v) -> void {
    if (v == nv) {
      out.push_back(pick);
      return;
    }
    for (const auto& s : choices[v]) {
      pick[v] = s;
      bool ok = true;
      for (std::size_t a = 0; a < q.arrows.size() && ok; ++a) {
        const auto src = static_cast<std::size_t>(q.arrows[a].source);
        const auto tgt = static_cast<std::size_t>(q.arrows[a].target);
        if (std::max(src, tgt) == v) ok = stable(pick, a);
      }
      if (ok) self(self, v + 1);
    }
  };
  rec(rec, 0);
  return out;
}

Rep restrict_to(const PrimeField& f, const Quiver& q, const Rep& x, const std::vector<Subspace>& sub) {
  Rep out;
  for (const auto& s : sub) out.dims.push_back(s.dim());
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto& src = sub[static_cast<std::size_t>(q.arrows[a].source)];
    const auto& tgt = sub[static_cast<std::size_t>(q.arrows[a].target)];
    Matrix m(tgt.dim(), src.dim());
    for (int c = 0; c < src.dim(); ++c) {
      auto image = apply(f, x.maps[a], row_of(src.basis, c));
      // coordinates in an RREF basis are the entries at the pivots
      for (int r = 0; r < tgt.dim(); ++r) {
        m.at(r, c) = image[static_cast<std::size_t>(tgt.pivots[static_cast<std::size_t>(r)])];
      }
    }
    out.maps.push_back(std::move(m));
  }
  return out;
}

Rep quotient_by(const PrimeField& f, const Quiver& q, const Rep& x, const std::vector<Subspace>& sub) {
  Rep out;
  std::vector<std::vector<int>> free(sub.size());
  for (std::size_t v = 0; v < sub.size(); ++v) {
    free[v] = sub[v].free_columns();
    out.dims.push_back(static_cast<int>(free[v].size()));
  }
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto s = static_cast<std::size_t>(q.arrows[a].source);
    const auto t = static_cast<std::size_t>(q.arrows[a].target);
    Matrix m(out.dims[t], out.dims[s]);
    for (std::size_t c = 0; c < free[s].size(); ++c) {
      auto image = sub[t].reduce(f, column(x.maps[a], free[s][c]));
      for (std::size_t r = 0; r < free[t].size(); ++r) {
        m.at(static_cast<int>(r), static_cast<int>(c)) = image[static_cast<std::size_t>(free[t][r])];
      }
    }
    out.maps.push_back(std::move(m));
  }
  return out;
}

Universe::Universe(QuiverPreset preset, int dim_bound, int characteristic)
    : preset_(std::move(preset)), field_(characteristic), dim_bound_(dim_bound) {
  const auto& q = preset_.quiver;
  const auto& indecs = preset_.indecomposables;
  for (const auto& ind : indecs) {
    if (!satisfies_relations(field_, q, ind.rep)) {
      throw std::runtime_error("preset " + preset_.name + ": " + ind.label + " violates the relations");
    }
  }
  if (dim_bound_ < 0) throw std::invalid_argument("dim_bound must be >= 0");

  // multisets of indecomposables by total dimension
  std::vector<std::vector<int>> multisets;
  std::vector<int> mult(indecs.size(), 0);
  auto rec = [&](auto& self, std::size_t k, int used) -> void {
    if (k == indecs.size()) {
      multisets.push_back(mult);
      return;
    }
    const int d = indecs[k].rep.total_dim();
    for (int m = 0; used + m * d <= dim_bound_; ++m) {
      mult[k] = m;
      self(self, k + 1, used + m * d);
    }
    mult[k] = 0;
  };
  rec(rec, 0, 0);
  auto total = [&](const std::vector<int>& m) {
    int t = 0;
    for (std::size_t k = 0; k < m.size(); ++k) t += m[k] * indecs[k].rep.total_dim();
    return t;
  };
  std::stable_sort(multisets.begin(), multisets.end(), [&](const auto& a, const auto& b) {
    int ta = total(a), tb = total(b);
    if (ta != tb) return ta < tb;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  });

  indecomposable_ids_.assign(indecs.size(), -1);
  for (const auto& m : multisets) {
    ModClass c;
    c.id = static_cast<ClassId>(classes_.size());
    c.multiplicity = m;
    c.rep = zero_rep(q);
    int parts = 0;
    for (std::size_t k = 0; k < m.size(); ++k) {
      for (int r = 0; r < m[k]; ++r) c.rep = direct_sum(q, c.rep, indecs[k].rep);
      parts += m[k];
      if (m[k] == 1 && parts == 1) c.indecomposable = static_cast<int>(k);
    }
    if (parts != 1) c.indecomposable = -1;
    c.dims = c.rep.dims;
    c.total_dim = c.rep.total_dim();
    c.fingerprint = fingerprint_of(c.rep);
    if (!by_fingerprint_.emplace(c.fingerprint, c.id).second) {
      throw std::runtime_error("fingerprint collision in preset " + preset_.name);
    }
    if (c.indecomposable >= 0) indecomposable_ids_[static_cast<std::size_t>(c.indecomposable)] = c.id;
    by_multiplicity_.emplace(m, c.id);
    by_key_.emplace(c.rep.key(), c.id);
    classes_.push_back(std::move(c));
  }

  subquotients_.resize(classes_.size());
  sub_classes_.resize(classes_.size());
  quotient_classes_.resize(classes_.size());
  subrep_counts_.resize(classes_.size());
  for (const auto& c : classes_) build_subquotients(c.id);
}

std::vector<int> Universe::fingerprint_of(const Rep& x) const {
  std::vector<int> fp = x.dims;
  for (const auto& ind : preset_.indecomposables) {
    fp.push_back(hom_dim(field_, preset_.quiver, ind.rep, x));
    fp.push_back(hom_dim(field_, preset_.quiver, x, ind.rep));
  }
  return fp;
}

ClassId Universe::identify(const Rep& x) const {
  if (auto it = by_key_.find(x.key()); it != by_key_.end()) return it->second;
  auto it = by_fingerprint_.find(fingerprint_of(x));
  return it == by_fingerprint_.end() ? -1 : it->second;
}

ClassId Universe::identify_cached(const Rep& x) {
  auto key = x.key();
  if (auto it = by_key_.find(key); it != by_key_.end()) return it->second;
  auto it = by_fingerprint_.find(fingerprint_of(x));
  if (it == by_fingerprint_.end()) {
    throw std::runtime_error("preset " + preset_.name +
                             ": subquotient outside the indecomposable list (incomplete preset)");
  }
  by_key_.emplace(std::move(key), it->second);
  return it->second;
}

void Universe::build_subquotients(ClassId id) {
  const auto& x = classes_[static_cast<std::size_t>(id)].rep;
  const auto subs = subrepresentations(field_, preset_.quiver, x);
  std::vector<SubQuotient> pairs;
  pairs.reserve(subs.size());
  for (const auto& s : subs) {
    ClassId a = identify_cached(restrict_to(field_, preset_.quiver, x, s));
    ClassId b = identify_cached(quotient_by(field_, preset_.quiver, x, s));
    pairs.push_back({a, b});
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  auto& subc = sub_classes_[static_cast<std::size_t>(id)];
  auto& quot = quotient_classes_[static_cast<std::size_t>(id)];
  for (const auto& p : pairs) {
    subc.push_back(p.sub);
    quot.push_back(p.quotient);
  }
  for (auto* v : {&subc, &quot}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  subrep_counts_[static_cast<std::size_t>(id)] = subs.size();
  subquotients_[static_cast<std::size_t>(id)] = std::move(pairs);
}

ClassId Universe::by_label(std::string_view label) const {
  return indecomposable(preset_.index_of(label));
}

ClassId Universe::by_multiplicity(const std::vector<int>& multiplicity) const {
  auto it = by_multiplicity_.find(multiplicity);
  return it == by_multiplicity_.end() ? -1 : it->second;
}

std::string Universe::label(ClassId id) const {
  const auto& c = at(id);
  if (c.total_dim == 0) return "0";
  std::string out;
  for (std::size_t k = 0; k < c.multiplicity.size(); ++k) {
    for (int r = 0; r < c.multiplicity[k]; ++r) {
      if (!out.empty()) out += "+";
      out += preset_.indecomposables[k].label;
    }
  }
  return out;
}

}  // namespace monobrick::oracle
