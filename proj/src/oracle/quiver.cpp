#include "monobrick/oracle/quiver.hpp"

#include <algorithm>
#include <stdexcept>

namespace monobrick::oracle {

int Rep::total_dim() const noexcept {
  int t = 0;
  for (int d : dims) t += d;
  return t;
}

std::string Rep::key() const {
  std::string out;
  for (int d : dims) out.push_back(static_cast<char>('0' + d));
  for (const auto& m : maps) {
    out.push_back('|');
    for (int x : m.data()) out.push_back(static_cast<char>('0' + x));
  }
  return out;
}

Rep zero_rep(const Quiver& q) {
  Rep r;
  r.dims.assign(static_cast<std::size_t>(q.vertices), 0);
  r.maps.assign(q.arrows.size(), Matrix(0, 0));
  return r;
}

bool satisfies_relations(const PrimeField& f, const Quiver& q, const Rep& x) {
  if (x.dims.size() != static_cast<std::size_t>(q.vertices) || x.maps.size() != q.arrows.size()) {
    return false;
  }
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto& arrow = q.arrows[a];
    if (x.maps[a].rows() != x.dims[static_cast<std::size_t>(arrow.target)] ||
        x.maps[a].cols() != x.dims[static_cast<std::size_t>(arrow.source)]) {
      return false;
    }
  }
  for (const auto& path : q.zero_paths) {
    Matrix acc = x.maps[static_cast<std::size_t>(path.front())];
    for (std::size_t k = 1; k < path.size(); ++k) {
      acc = multiply(f, x.maps[static_cast<std::size_t>(path[k])], acc);
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

Rep direct_sum(const Quiver& q, const Rep& x, const Rep& y) {
  Rep out;
  out.dims.resize(static_cast<std::size_t>(q.vertices));
  for (std::size_t v = 0; v < out.dims.size(); ++v) out.dims[v] = x.dims[v] + y.dims[v];
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto& xm = x.maps[a];
    const auto& ym = y.maps[a];
    Matrix m(xm.rows() + ym.rows(), xm.cols() + ym.cols());
    for (int r = 0; r < xm.rows(); ++r)
      for (int c = 0; c < xm.cols(); ++c) m.at(r, c) = xm.at(r, c);
    for (int r = 0; r < ym.rows(); ++r)
      for (int c = 0; c < ym.cols(); ++c) m.at(xm.rows() + r, xm.cols() + c) = ym.at(r, c);
    out.maps.push_back(std::move(m));
  }
  return out;
}

bool HomElement::is_zero() const noexcept {
  return std::all_of(components.begin(), components.end(), [](const Matrix& m) { return m.is_zero(); });
}

bool HomElement::is_injective(const PrimeField& f) const {
  return std::all_of(components.begin(), components.end(),
                     [&](const Matrix& m) { return rank(f, m) == m.cols(); });
}

bool HomElement::is_isomorphism(const PrimeField& f) const {
  return std::all_of(components.begin(), components.end(), [&](const Matrix& m) {
    return m.rows() == m.cols() && rank(f, m) == m.cols();
  });
}

namespace {

struct Layout {
  std::vector<int> offset;
  int unknowns = 0;
};

Layout layout_for(const Rep& x, const Rep& y) {
  Layout l;
  for (std::size_t v = 0; v < x.dims.size(); ++v) {
    l.offset.push_back(l.unknowns);
    l.unknowns += y.dims[v] * x.dims[v];
  }
  return l;
}

Matrix hom_system(const PrimeField& f, const Quiver& q, const Rep& x, const Rep& y, const Layout& l) {
  int equations = 0;
  for (const auto& a : q.arrows) {
    equations += y.dims[static_cast<std::size_t>(a.target)] * x.dims[static_cast<std::size_t>(a.source)];
  }
  Matrix sys(equations, l.unknowns);
  int row = 0;
  for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
    const auto s = static_cast<std::size_t>(q.arrows[ai].source);
    const auto t = static_cast<std::size_t>(q.arrows[ai].target);
    const Matrix& ya = y.maps[ai];
    const Matrix& xa = x.maps[ai];
    // (Y_a f_s - f_t X_a)(r, c) = 0
    for (int r = 0; r < y.dims[t]; ++r) {
      for (int c = 0; c < x.dims[s]; ++c, ++row) {
        for (int k = 0; k < y.dims[s]; ++k) {
          int col = l.offset[s] + k * x.dims[s] + c;
          sys.at(row, col) = f.add(sys.at(row, col), ya.at(r, k));
        }
        for (int k = 0; k < x.dims[t]; ++k) {
          int col = l.offset[t] + r * x.dims[t] + k;
          sys.at(row, col) = f.sub(sys.at(row, col), xa.at(k, c));
        }
      }
    }
  }
  return sys;
}

}  // namespace

std::vector<HomElement> hom_space(const PrimeField& f, const Quiver& q, const Rep& x, const Rep& y) {
  const Layout l = layout_for(x, y);
  auto basis = nullspace(f, hom_system(f, q, x, y, l));
  std::vector<HomElement> out;
  for (const auto& vec : basis) {
    HomElement h;
    for (std::size_t v = 0; v < x.dims.size(); ++v) {
      Matrix m(y.dims[v], x.dims[v]);
      for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
          m.at(r, c) = vec[static_cast<std::size_t>(l.offset[v] + r * m.cols() + c)];
      h.components.push_back(std::move(m));
    }
    out.push_back(std::move(h));
  }
  return out;
}

int hom_dim(const PrimeField& f, const Quiver& q, const Rep& x, const Rep& y) {
  const Layout l = layout_for(x, y);
  if (l.unknowns == 0) return 0;
  return l.unknowns - rank(f, hom_system(f, q, x, y, l));
}

std::vector<HomElement> all_elements(const PrimeField& f, const std::vector<HomElement>& basis) {
  std::vector<HomElement> out;
  if (basis.empty()) return out;
  for_each_vector(f, static_cast<int>(basis.size()), [&](const std::vector<int>& coeffs) {
    HomElement h = basis.front();
    for (std::size_t v = 0; v < h.components.size(); ++v) {
      auto& m = h.components[v];
      for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
          int acc = 0;
          for (std::size_t b = 0; b < basis.size(); ++b) {
            acc = f.add(acc, f.mul(coeffs[b], basis[b].components[v].at(r, c)));
          }
          m.at(r, c) = acc;
        }
      }
    }
    out.push_back(std::move(h));
  });
  return out;
}

bool are_isomorphic_exhaustive(const PrimeField& f, const Quiver& q, const Rep& x, const Rep& y) {
  if (x.dims != y.dims) return false;
  if (x.total_dim() == 0) return true;
  auto elements = all_elements(f, hom_space(f, q, x, y));
  return std::any_of(elements.begin(), elements.end(),
                     [&](const HomElement& h) { return h.is_isomorphism(f); });
}

int QuiverPreset::index_of(std::string_view label) const {
  for (std::size_t k = 0; k < indecomposables.size(); ++k) {
    if (indecomposables[k].label == label) return static_cast<int>(k);
  }
  throw std::out_of_range("preset " + name + " has no indecomposable '" + std::string(label) + "'");
}

namespace {

// Every indecomposable below has dimension at most one at each vertex, so it
// is given by its support and the set of arrows acting as the identity [1].
Indecomposable thin_module(const Quiver& q, std::string label, std::vector<int> support,
                           std::vector<int> identity_arrows) {
  Rep r;
  r.dims.assign(static_cast<std::size_t>(q.vertices), 0);
  for (int v : support) r.dims[static_cast<std::size_t>(v - 1)] = 1;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    Matrix m(r.dims[static_cast<std::size_t>(q.arrows[a].target)],
             r.dims[static_cast<std::size_t>(q.arrows[a].source)]);
    if (std::find(identity_arrows.begin(), identity_arrows.end(), static_cast<int>(a)) !=
        identity_arrows.end()) {
      m.at(0, 0) = 1;
    }
    r.maps.push_back(std::move(m));
  }
  return {std::move(label), std::move(r)};
}

Arrow arrow(int from, int to) { return {from - 1, to - 1}; }

QuiverPreset a2_linear() {
  QuiverPreset p{"a2_linear", {2, {arrow(2, 1)}, {}}, {}, AlgebraSpec::linear_a(2)};
  const auto& q = p.quiver;
  p.indecomposables = {
      thin_module(q, "1", {1}, {}),
      thin_module(q, "2", {2}, {}),
      thin_module(q, "2/1", {1, 2}, {0}),
  };
  return p;
}

QuiverPreset a3_linear() {
  // 1 <- 2 <- 3; arrow 0: 2->1, arrow 1: 3->2
  QuiverPreset p{"a3_linear", {3, {arrow(2, 1), arrow(3, 2)}, {}}, {}, AlgebraSpec::linear_a(3)};
  const auto& q = p.quiver;
  p.indecomposables = {
      thin_module(q, "1", {1}, {}),
      thin_module(q, "2", {2}, {}),
      thin_module(q, "3", {3}, {}),
      thin_module(q, "2/1", {1, 2}, {0}),
      thin_module(q, "3/2", {2, 3}, {1}),
      thin_module(q, "3/2/1", {1, 2, 3}, {0, 1}),
  };
  return p;
}

QuiverPreset a3_source() {
  // 1 -> 2 <- 3; arrow 0: 1->2, arrow 1: 3->2
  QuiverPreset p{"a3_source", {3, {arrow(1, 2), arrow(3, 2)}, {}}, {}, std::nullopt};
  const auto& q = p.quiver;
  p.indecomposables = {
      thin_module(q, "1", {1}, {}),
      thin_module(q, "2", {2}, {}),
      thin_module(q, "3", {3}, {}),
      thin_module(q, "1/2", {1, 2}, {0}),
      thin_module(q, "3/2", {2, 3}, {1}),
      thin_module(q, "13/2", {1, 2, 3}, {0, 1}),
  };
  return p;
}

QuiverPreset nak2() {
  // 1 <-> 2 with both length-2 paths zero; arrow 0: 2->1, arrow 1: 1->2
  QuiverPreset p{"nak2", {2, {arrow(2, 1), arrow(1, 2)}, {{0, 1}, {1, 0}}}, {},
                 AlgebraSpec::cyclic_b(2)};
  const auto& q = p.quiver;
  p.indecomposables = {
      thin_module(q, "1", {1}, {}),
      thin_module(q, "2", {2}, {}),
      thin_module(q, "2/1", {1, 2}, {0}),
      thin_module(q, "1/2", {1, 2}, {1}),
  };
  return p;
}

QuiverPreset b3() {
  // cyclic 1 <- 2 <- 3 <- 1, all length-3 paths zero
  // arrow 0: 2->1, arrow 1: 3->2, arrow 2: 1->3
  QuiverPreset p{"b3",
                 {3,
                  {arrow(2, 1), arrow(3, 2), arrow(1, 3)},
                  {{2, 1, 0}, {0, 2, 1}, {1, 0, 2}}},
                 {},
                 AlgebraSpec::cyclic_b(3)};
  const auto& q = p.quiver;
  p.indecomposables = {
      thin_module(q, "1", {1}, {}),
      thin_module(q, "2", {2}, {}),
      thin_module(q, "3", {3}, {}),
      thin_module(q, "2/1", {1, 2}, {0}),
      thin_module(q, "3/2", {2, 3}, {1}),
      thin_module(q, "1/3", {3, 1}, {2}),
      thin_module(q, "3/2/1", {1, 2, 3}, {0, 1}),
      thin_module(q, "1/3/2", {1, 2, 3}, {1, 2}),
      thin_module(q, "2/1/3", {1, 2, 3}, {2, 0}),
  };
  return p;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"a2_linear", "a3_linear", "a3_source", "nak2", "b3"};
  return names;
}

QuiverPreset make_preset(std::string_view name) {
  if (name == "a2_linear") return a2_linear();
  if (name == "a3_linear") return a3_linear();
  if (name == "a3_source") return a3_source();
  if (name == "nak2") return nak2();
  if (name == "b3") return b3();
  throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
}

}  // namespace monobrick::oracle
