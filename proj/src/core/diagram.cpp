#include "monobrick/diagram.hpp"

#include <algorithm>
#include <sstream>

#include "monobrick/errors.hpp"

namespace monobrick {

ArcDiagram::ArcDiagram(AlgebraSpec spec, std::vector<Arc> arcs)
    : spec_(spec), arcs_(std::move(arcs)) {
  for (const auto& a : arcs_) {
    if (!spec_.is_legal(a)) {
      throw InvalidInput("arc (" + std::to_string(a.start) + "," +
                         std::to_string(a.end) + ") is not legal for " +
                         spec_.name());
    }
  }
  std::sort(arcs_.begin(), arcs_.end(), ArcOrder{spec_.marks()});
  auto dup = std::adjacent_find(arcs_.begin(), arcs_.end());
  if (dup != arcs_.end()) {
    throw InvalidInput("duplicate arc (" + std::to_string(dup->start) + "," +
                       std::to_string(dup->end) + ")");
  }
}

bool ArcDiagram::contains(const Arc& a) const noexcept {
  return std::binary_search(arcs_.begin(), arcs_.end(), a, ArcOrder{spec_.marks()});
}

bool ArcDiagram::is_subset_of(const ArcDiagram& other) const {
  if (!(spec_ == other.spec_)) throw InvalidInput("diagrams over different algebras");
  return std::includes(other.arcs_.begin(), other.arcs_.end(), arcs_.begin(),
                       arcs_.end(), ArcOrder{spec_.marks()});
}

std::string ArcDiagram::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < arcs_.size(); ++k) {
    if (k) os << ',';
    os << '(' << arcs_[k].start << ',' << arcs_[k].end << ')';
  }
  os << '}';
  return os.str();
}

std::string CrossingViolation::describe(int marks) const {
  (void)marks;
  std::ostringstream os;
  os << '(' << first.start << ',' << first.end << ") and (" << second.start
     << ',' << second.end << ") are " << monobrick::to_string(kind);
  return os.str();
}

namespace {

template <class Allowed>
std::optional<CrossingViolation> find_pair(const ArcDiagram& d, Allowed allowed) {
  const auto& arcs = d.arcs();
  const int n = d.spec().marks();
  for (std::size_t x = 0; x < arcs.size(); ++x) {
    for (std::size_t y = x + 1; y < arcs.size(); ++y) {
      auto kind = crossing_kind(arcs[x], arcs[y], n);
      if (!allowed(kind)) return CrossingViolation{arcs[x], arcs[y], kind};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<CrossingViolation> find_monobrick_violation(const ArcDiagram& d) {
  return find_pair(d, [](CrossKind k) {
    return k == CrossKind::MonoCrossing || k == CrossKind::NonCrossing;
  });
}

bool is_monobrick_diagram(const ArcDiagram& d) {
  return !find_monobrick_violation(d).has_value();
}

bool is_semibrick_diagram(const ArcDiagram& d) {
  return !find_pair(d, [](CrossKind k) { return k == CrossKind::NonCrossing; })
              .has_value();
}

}  // namespace monobrick
