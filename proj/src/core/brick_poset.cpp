#include "monobrick/brick_poset.hpp"

#include <algorithm>

#include "monobrick/errors.hpp"

namespace monobrick {

MonobrickPoset::MonobrickPoset(ArcDiagram d) : diagram_(std::move(d)) {
  if (auto bad = find_monobrick_violation(diagram_)) {
    throw InvalidInput("not a monobrick: " + bad->describe(spec().marks()));
  }
}

bool MonobrickPoset::less_equal(const Arc& a, const Arc& b) const {
  auto k = hom_kind(a, b, spec());
  return k == MorphismKind::Injection || k == MorphismKind::Iso;
}

ArcDiagram mmax(const MonobrickPoset& m) {
  std::vector<Arc> out;
  for (const auto& a : m.arcs()) {
    bool maximal = std::none_of(m.arcs().begin(), m.arcs().end(), [&](const Arc& b) {
      return b != a && m.less_equal(a, b);
    });
    if (maximal) out.push_back(a);
  }
  return ArcDiagram(m.spec(), std::move(out));
}

MonobrickPoset cofinal_closure(const MonobrickPoset& m) {
  const auto& spec = m.spec();
  std::vector<Arc> out = m.arcs();
  for (const auto& top : m.arcs()) {
    for (const auto& sub : submodule_arcs(top, spec)) {
      if (std::find(out.begin(), out.end(), sub) != out.end()) continue;
      bool schurian = std::all_of(m.arcs().begin(), m.arcs().end(), [&](const Arc& x) {
        return hom_kind(sub, x, spec) != MorphismKind::NonzeroNonInjection;
      });
      if (schurian) out.push_back(sub);
    }
  }
  return MonobrickPoset(ArcDiagram(spec, std::move(out)));
}

bool is_cofinally_closed(const MonobrickPoset& m) {
  return cofinal_closure(m).diagram().size() == m.diagram().size();
}

bool is_cofinal_extension(const MonobrickPoset& m, const MonobrickPoset& n) {
  if (!(m.spec() == n.spec())) {
    throw InvalidInput("cofinal extension check across different algebras");
  }
  if (!m.diagram().is_subset_of(n.diagram())) return false;
  return std::all_of(n.arcs().begin(), n.arcs().end(), [&](const Arc& x) {
    return std::any_of(m.arcs().begin(), m.arcs().end(),
                       [&](const Arc& y) { return n.less_equal(x, y); });
  });
}

std::vector<std::pair<std::size_t, std::size_t>> covering_relation(
    std::size_t count, const std::function<bool(std::size_t, std::size_t)>& leq) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t upper = 0; upper < count; ++upper) {
    for (std::size_t lower = 0; lower < count; ++lower) {
      if (lower == upper || !leq(lower, upper)) continue;
      bool covers = true;
      for (std::size_t mid = 0; mid < count && covers; ++mid) {
        if (mid != lower && mid != upper && leq(lower, mid) && leq(mid, upper)) covers = false;
      }
      if (covers) out.emplace_back(lower, upper);
    }
  }
  return out;
}

std::vector<std::pair<Arc, Arc>> hasse(const MonobrickPoset& m) {
  const auto& arcs = m.arcs();
  auto pairs = covering_relation(arcs.size(), [&](std::size_t x, std::size_t y) {
    return m.less_equal(arcs[x], arcs[y]);
  });
  std::vector<std::pair<Arc, Arc>> out;
  out.reserve(pairs.size());
  for (auto [lo, hi] : pairs) out.emplace_back(arcs[lo], arcs[hi]);
  return out;
}

}  // namespace monobrick
