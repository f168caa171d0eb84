#include "monobrick/oracle/subcategory.hpp"

#include <algorithm>
#include <sstream>

namespace monobrick::oracle {

namespace {

bool nonzero(const Universe& u, ClassId id) { return u.at(id).total_dim > 0; }

/// Classes isomorphic to subobjects (resp. quotients) of some member.
std::vector<bool> reach(const SubcatSet& e, bool subs) {
  const auto& u = e.universe();
  std::vector<bool> out(u.size(), false);
  for (ClassId x : e.members()) {
    for (ClassId y : subs ? u.sub_classes(x) : u.quotient_classes(x)) out[static_cast<std::size_t>(y)] = true;
  }
  return out;
}

/// Every sub-multiset of `id` other than 0 and itself, as class ids.
std::vector<ClassId> proper_summands(const Universe& u, ClassId id) {
  const auto& whole = u.at(id).multiplicity;
  std::vector<ClassId> out;
  std::vector<int> part(whole.size(), 0);
  auto rec = [&](auto& self, std::size_t k) -> void {
    if (k == whole.size()) {
      if (part != whole && std::any_of(part.begin(), part.end(), [](int m) { return m > 0; })) {
        out.push_back(u.by_multiplicity(part));
      }
      return;
    }
    for (int m = 0; m <= whole[k]; ++m) {
      part[k] = m;
      self(self, k + 1);
    }
    part[k] = 0;
  };
  rec(rec, 0);
  return out;
}

}  // namespace

std::string ClosureFlags::to_string() const {
  std::ostringstream os;
  os << "ext=" << extensions << " ker=" << kernels << " coker=" << cokernels << " im=" << images
     << " sub=" << subobjects << " quot=" << quotients << " summ=" << summands
     << " (extensions up to dim " << extension_dim_bound << ")";
  return os.str();
}

SubcatSet::SubcatSet(const Universe& u) : universe_(&u), member_(u.size(), false) {
  member_[static_cast<std::size_t>(u.zero())] = true;
}

SubcatSet::SubcatSet(const Universe& u, const std::vector<ClassId>& members) : SubcatSet(u) {
  for (ClassId id : members) insert(id);
}

std::vector<ClassId> SubcatSet::members() const {
  std::vector<ClassId> out;
  for (std::size_t k = 0; k < member_.size(); ++k) {
    if (member_[k]) out.push_back(static_cast<ClassId>(k));
  }
  return out;
}

std::size_t SubcatSet::size() const {
  return static_cast<std::size_t>(std::count(member_.begin(), member_.end(), true));
}

std::set<int> SubcatSet::indecomposables() const {
  std::set<int> out;
  for (ClassId id : members()) {
    if (int k = universe_->at(id).indecomposable; k >= 0) out.insert(k);
  }
  return out;
}

std::string SubcatSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (ClassId id : members()) {
    if (!first) out += ", ";
    out += universe_->label(id);
    first = false;
  }
  return out + "}";
}

const ClosureFlags& SubcatSet::flags() const {
  if (!flags_) flags_ = closure_flags(*this);
  return *flags_;
}

SubcatSet filt(const Universe& u, const std::vector<ClassId>& gens) {
  SubcatSet out(u, gens);
  // classes are ordered by total dimension, so filtration factors are decided first
  for (const auto& c : u.classes()) {
    if (out.contains(c.id)) continue;
    for (const auto& sq : u.subquotients(c.id)) {
      if (nonzero(u, sq.sub) && nonzero(u, sq.quotient) && out.contains(sq.sub) && out.contains(sq.quotient)) {
        out.insert(c.id);
        break;
      }
    }
  }
  return out;
}

SubcatSet filt_bricks(const Universe& u, const BrickSet& bricks) {
  std::vector<ClassId> gens;
  for (int b : bricks) gens.push_back(u.indecomposable(b));
  return filt(u, gens);
}

std::vector<ClassId> simp(const SubcatSet& e) {
  const auto& u = e.universe();
  std::vector<ClassId> out;
  for (ClassId m : e.members()) {
    if (!nonzero(u, m)) continue;
    bool splits = std::any_of(u.subquotients(m).begin(), u.subquotients(m).end(), [&](const SubQuotient& sq) {
      return nonzero(u, sq.sub) && nonzero(u, sq.quotient) && e.contains(sq.sub) && e.contains(sq.quotient);
    });
    if (!splits) out.push_back(m);
  }
  return out;
}

BrickSet simp_bricks(const SubcatSet& e) {
  BrickSet out;
  for (ClassId id : simp(e)) {
    int k = e.universe().at(id).indecomposable;
    // a decomposable simple object would break the brick-level view
    if (k < 0) return BrickSet{-1};
    out.push_back(k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_extension_closed(const SubcatSet& e) {
  const auto& u = e.universe();
  for (const auto& c : u.classes()) {
    if (e.contains(c.id)) continue;
    for (const auto& sq : u.subquotients(c.id)) {
      if (e.contains(sq.sub) && e.contains(sq.quotient)) return false;
    }
  }
  return true;
}

bool is_left_schur(const SubcatSet& e) {
  if (!is_extension_closed(e)) return false;
  const auto& u = e.universe();
  const auto into_e = reach(e, true);
  for (ClassId m : simp(e)) {
    // a nonzero map M -> X with nonzero kernel K exists iff M/K embeds in X
    for (const auto& sq : u.subquotients(m)) {
      if (nonzero(u, sq.sub) && nonzero(u, sq.quotient) && into_e[static_cast<std::size_t>(sq.quotient)]) {
        return false;
      }
    }
  }
  return true;
}

ClosureFlags closure_flags(const SubcatSet& e) {
  const auto& u = e.universe();
  ClosureFlags f;
  f.extension_dim_bound = u.dim_bound();
  f.extensions = is_extension_closed(e);
  const auto sub_of_e = reach(e, true);
  const auto quot_of_e = reach(e, false);
  for (ClassId x : e.members()) {
    for (const auto& sq : u.subquotients(x)) {
      if (!e.contains(sq.sub)) f.subobjects = false;
      if (!e.contains(sq.quotient)) f.quotients = false;
      // f: X -> Y with ker f = sq.sub and im f = sq.quotient
      if (sub_of_e[static_cast<std::size_t>(sq.quotient)]) {
        if (!e.contains(sq.sub)) f.kernels = false;
        if (!e.contains(sq.quotient)) f.images = false;
      }
      // f: W -> X with im f = sq.sub and coker f = sq.quotient
      if (quot_of_e[static_cast<std::size_t>(sq.sub)] && !e.contains(sq.quotient)) f.cokernels = false;
    }
    for (ClassId s : proper_summands(u, x)) {
      if (!e.contains(s)) f.summands = false;
    }
  }
  return f;
}

SubcatSet w_map(const SubcatSet& e) {
  const auto& u = e.universe();
  SubcatSet out(u);
  const auto members = e.members();
  for (ClassId w : members) {
    const auto& images = u.quotient_classes(w);
    bool ok = true;
    for (ClassId x : members) {
      for (const auto& sq : u.subquotients(x)) {
        if (std::binary_search(images.begin(), images.end(), sq.sub) && !e.contains(sq.quotient)) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) out.insert(w);
  }
  return out;
}

SubcatSet f_map(const Universe& u, const std::vector<ClassId>& c) {
  std::vector<ClassId> subs;
  for (ClassId x : c) {
    const auto& s = u.sub_classes(x);
    subs.insert(subs.end(), s.begin(), s.end());
  }
  return filt(u, subs);
}

std::set<int> white_vertices(const SubcatSet& e, const BrickSet& black) {
  const auto& u = e.universe();
  std::set<int> out;
  for (ClassId id : e.members()) {
    const auto& m = u.at(id).multiplicity;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] > 0 && std::find(black.begin(), black.end(), static_cast<int>(k)) == black.end()) {
        out.insert(static_cast<int>(k));
      }
    }
  }
  return out;
}

bool is_brick(const Universe& u, ClassId id) {
  const auto& c = u.at(id);
  if (c.indecomposable < 0) return false;
  auto ends = all_elements(u.field(), hom_space(u.field(), u.quiver(), c.rep, c.rep));
  return std::all_of(ends.begin(), ends.end(), [&](const HomElement& h) {
    return h.is_zero() || h.is_isomorphism(u.field());
  });
}

BrickSet bricks(const Universe& u) {
  BrickSet out;
  for (std::size_t k = 0; k < u.preset().indecomposables.size(); ++k) {
    const ClassId id = u.indecomposable(static_cast<int>(k));
    if (id >= 0 && is_brick(u, id)) out.push_back(static_cast<int>(k));
  }
  return out;
}

BrickRelations::BrickRelations(const Universe& u) : bricks_(oracle::bricks(u)) {
  count_ = u.preset().indecomposables.size();
  kinds_.assign(count_ * count_, PairMaps::Zero);
  injection_.assign(count_ * count_, 0);
  dims_.assign(count_ * count_, 0);
  for (int x : bricks_) {
    for (int y : bricks_) {
      const auto& rx = u.at(u.indecomposable(x)).rep;
      const auto& ry = u.at(u.indecomposable(y)).rep;
      auto basis = hom_space(u.field(), u.quiver(), rx, ry);
      dims_[slot(x, y)] = static_cast<int>(basis.size());
      PairMaps kind = PairMaps::Zero;
      for (const auto& h : all_elements(u.field(), basis)) {
        if (h.is_zero()) continue;
        if (h.is_injective(u.field())) {
          injection_[slot(x, y)] = 1;
          if (kind == PairMaps::Zero) kind = PairMaps::InjectionsOnly;
        } else {
          kind = PairMaps::HasNonInjection;
        }
      }
      kinds_[slot(x, y)] = kind;
    }
  }
}

std::size_t BrickRelations::slot(int from, int to) const {
  return static_cast<std::size_t>(from) * count_ + static_cast<std::size_t>(to);
}

PairMaps BrickRelations::maps(int from, int to) const { return kinds_.at(slot(from, to)); }
bool BrickRelations::has_injection(int from, int to) const { return injection_.at(slot(from, to)) != 0; }
int BrickRelations::hom_dim(int from, int to) const { return dims_.at(slot(from, to)); }

bool BrickRelations::is_monobrick(const BrickSet& s) const {
  for (int x : s)
    for (int y : s)
      if (maps(x, y) == PairMaps::HasNonInjection) return false;
  return true;
}

bool BrickRelations::is_semibrick(const BrickSet& s) const {
  for (int x : s)
    for (int y : s)
      if (x != y && maps(x, y) != PairMaps::Zero) return false;
  return true;
}

BrickSet BrickRelations::mmax(const BrickSet& s) const {
  BrickSet out;
  for (int x : s) {
    bool maximal = std::none_of(s.begin(), s.end(), [&](int y) { return y != x && has_injection(x, y); });
    if (maximal) out.push_back(x);
  }
  return out;
}

BrickSet BrickRelations::cofinal_closure(const BrickSet& s) const {
  BrickSet out;
  for (int n : bricks_) {
    bool embeds = std::any_of(s.begin(), s.end(), [&](int m) { return has_injection(n, m); });
    bool schurian = std::none_of(s.begin(), s.end(), [&](int m) { return maps(n, m) == PairMaps::HasNonInjection; });
    if (embeds && schurian) out.push_back(n);
  }
  return out;
}

std::vector<BrickSet> monobricks_bruteforce(const BrickRelations& rel) {
  const auto& all = rel.bricks();
  std::vector<BrickSet> out;
  const std::size_t n = all.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    BrickSet s;
    for (std::size_t k = 0; k < n; ++k) {
      if (mask & (std::size_t{1} << k)) s.push_back(all[k]);
    }
    if (rel.is_monobrick(s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace monobrick::oracle
