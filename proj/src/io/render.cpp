#include "monobrick/io/render.hpp"

#include <algorithm>
#include <vector>

namespace monobrick::io {

namespace {

constexpr int kStep = 4;

struct Span {
  int left;
  int right;
  int level = 0;
};

}  // namespace

std::string render_ascii(const ArcDiagram& d) {
  const int n = d.spec().marks();
  const bool cyclic = d.spec().kind() == AlgebraKind::CyclicB;
  const int positions = cyclic ? 2 * n + 1 : n;

  std::vector<Span> spans;
  for (const auto& a : d.arcs()) {
    const int from = a.start - 1;
    spans.push_back({from * kStep, (from + arc_length(a, n)) * kStep});
  }
  // Short arcs first; each sits just above everything it touches.
  std::vector<std::size_t> order(spans.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const int lx = spans[x].right - spans[x].left, ly = spans[y].right - spans[y].left;
    return lx != ly ? lx < ly : spans[x].left < spans[y].left;
  });
  int levels = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    Span& s = spans[order[k]];
    int level = 1;
    for (std::size_t q = 0; q < k; ++q) {
      const Span& t = spans[order[q]];
      if (t.left <= s.right && s.left <= t.right) level = std::max(level, t.level + 1);
    }
    s.level = level;
    levels = std::max(levels, level);
  }

  const int width = (positions - 1) * kStep + 1;
  // rows[0] is the top level.
  std::vector<std::string> rows(static_cast<std::size_t>(levels), std::string(static_cast<std::size_t>(width), ' '));
  auto row_of = [&](int level) -> std::string& { return rows[static_cast<std::size_t>(levels - level)]; };
  for (const auto& s : spans) {
    std::string& r = row_of(s.level);
    for (int c = s.left + 1; c < s.right; ++c) r[static_cast<std::size_t>(c)] = '-';
    r[static_cast<std::size_t>(s.left)] = '+';
    r[static_cast<std::size_t>(s.right)] = '+';
  }
  for (const auto& s : spans) {
    for (int lower = 1; lower < s.level; ++lower) {
      std::string& r = row_of(lower);
      for (int c : {s.left, s.right}) {
        char& cell = r[static_cast<std::size_t>(c)];
        if (cell == ' ' || cell == '-') cell = '|';
      }
    }
  }

  std::string base(static_cast<std::size_t>(width), ' ');
  std::string out;
  for (auto& r : rows) {
    r.erase(r.find_last_not_of(' ') + 1);
    out += r + '\n';
  }
  for (int p = 0; p < positions; ++p) {
    const std::string label = std::to_string(p % n + 1);
    base.replace(static_cast<std::size_t>(p * kStep), label.size(), label);
  }
  base.erase(base.find_last_not_of(' ') + 1);
  return out + base + '\n';
}

}  // namespace monobrick::io
