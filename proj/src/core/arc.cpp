#include "monobrick/arc.hpp"

#include <algorithm>
#include <stdexcept>

namespace monobrick {

AlgebraSpec AlgebraSpec::linear_a(int m) {
  // A_0 is the zero algebra: one mark, no arcs.
  if (m < 0) throw std::invalid_argument("LinearA index must be >= 0");
  return AlgebraSpec(AlgebraKind::LinearA, m);
}

AlgebraSpec AlgebraSpec::cyclic_b(int n) {
  if (n < 1) throw std::invalid_argument("CyclicB index must be >= 1");
  return AlgebraSpec(AlgebraKind::CyclicB, n);
}

bool AlgebraSpec::is_legal(const Arc& a) const noexcept {
  const int n = marks();
  if (a.start < 1 || a.start > n || a.end < 1 || a.end > n) return false;
  return kind_ == AlgebraKind::CyclicB || a.start < a.end;
}

std::vector<Arc> AlgebraSpec::arcs() const {
  const int n = marks();
  std::vector<Arc> out;
  out.reserve(arc_count());
  for (int i = 1; i <= n; ++i) {
    for (int len = 1; len <= n; ++len) {
      Arc a{i, wrap_mark(i + len, n)};
      if (kind_ == AlgebraKind::LinearA && i + len > n) break;
      out.push_back(a);
    }
  }
  return out;
}

std::size_t AlgebraSpec::arc_count() const noexcept {
  const auto n = static_cast<std::size_t>(marks());
  return kind_ == AlgebraKind::LinearA ? n * (n - 1) / 2 : n * n;
}

std::string AlgebraSpec::name() const {
  return (kind_ == AlgebraKind::LinearA ? "A" : "B") + std::to_string(index_);
}

std::vector<int> socle_series(const Arc& a, int n) {
  const int len = arc_length(a, n);
  std::vector<int> out(static_cast<std::size_t>(len));
  for (int k = 0; k < len; ++k) out[static_cast<std::size_t>(k)] = wrap_mark(a.start + k, n);
  return out;
}

int socle_position(const Arc& a, int mark, int n) noexcept {
  const int pos = wrap_mark(mark - a.start + 1, n) - 1;
  return pos < arc_length(a, n) ? pos : -1;
}

bool is_partial_sequence(const std::vector<int>& part,
                         const std::vector<int>& whole) {
  if (part.size() > whole.size()) return false;
  return std::search(whole.begin(), whole.end(), part.begin(), part.end()) !=
         whole.end();
}

std::string_view to_string(CrossKind k) noexcept {
  switch (k) {
    case CrossKind::NonCrossing: return "non-crossing";
    case CrossKind::MonoCrossing: return "mono-crossing";
    case CrossKind::EpiCrossing: return "epi-crossing";
    case CrossKind::StrictlyCrossing: return "strictly-crossing";
  }
  return "?";
}

std::string_view to_string(MorphismKind k) noexcept {
  switch (k) {
    case MorphismKind::Zero: return "zero";
    case MorphismKind::Injection: return "injection";
    case MorphismKind::NonzeroNonInjection: return "nonzero-non-injection";
    case MorphismKind::Iso: return "iso";
  }
  return "?";
}

CrossKind crossing_kind(const Arc& a, const Arc& b, int n) {
  if (a == b) throw std::invalid_argument("crossing_kind needs distinct arcs");
  const auto sa = socle_series(a, n);
  const auto sb = socle_series(b, n);
  bool disjoint = std::none_of(sa.begin(), sa.end(), [&](int x) {
    return std::find(sb.begin(), sb.end(), x) != sb.end();
  });
  bool weakly = disjoint || is_partial_sequence(sa, sb) || is_partial_sequence(sb, sa);
  if (!weakly) return CrossKind::StrictlyCrossing;
  if (a.start == b.start) return CrossKind::MonoCrossing;
  if (a.end == b.end) return CrossKind::EpiCrossing;
  return CrossKind::NonCrossing;
}

MorphismKind hom_kind(const Arc& a, const Arc& b, const AlgebraSpec& spec) {
  if (!spec.is_legal(a) || !spec.is_legal(b)) {
    throw std::invalid_argument("hom_kind: arc not legal for " + spec.name());
  }
  if (a == b) return MorphismKind::Iso;
  const int n = spec.marks();
  const int top_a = wrap_mark(a.end - 1, n);
  if (socle_position(a, b.start, n) < 0 || socle_position(b, top_a, n) < 0) {
    return MorphismKind::Zero;
  }
  return b.start == a.start ? MorphismKind::Injection
                            : MorphismKind::NonzeroNonInjection;
}

std::vector<Arc> submodule_arcs(const Arc& a, const AlgebraSpec& spec) {
  if (!spec.is_legal(a)) {
    throw std::invalid_argument("submodule_arcs: arc not legal for " + spec.name());
  }
  const int n = spec.marks();
  const int len = arc_length(a, n);
  std::vector<Arc> out;
  out.reserve(static_cast<std::size_t>(len));
  for (int k = 1; k <= len; ++k) out.push_back(Arc{a.start, wrap_mark(a.start + k, n)});
  return out;
}

std::string module_label(const Arc& a, int n) {
  auto series = socle_series(a, n);
  std::string out;
  for (auto it = series.rbegin(); it != series.rend(); ++it) {
    if (!out.empty()) out += '/';
    out += std::to_string(*it);
  }
  return out;
}

}  // namespace monobrick
