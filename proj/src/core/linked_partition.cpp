#include "monobrick/linked_partition.hpp"

#include <algorithm>
#include <sstream>

#include "monobrick/errors.hpp"

namespace monobrick {

NclPartition::NclPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  for (auto& b : blocks_) std::sort(b.begin(), b.end());
  std::sort(blocks_.begin(), blocks_.end());
}

std::string NclPartition::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (k) os << ',';
    os << '{';
    for (std::size_t x = 0; x < blocks_[k].size(); ++x) {
      if (x) os << ',';
      os << blocks_[k][x];
    }
    os << '}';
  }
  os << '}';
  return os.str();
}

std::string NclViolation::describe() const {
  static constexpr const char* names[] = {"range", "NCL1", "NCL2", "NCL3"};
  return std::string(names[static_cast<int>(condition)]) + ": " + detail;
}

namespace {

bool contains(const std::vector<int>& block, int x) {
  return std::binary_search(block.begin(), block.end(), x);
}

std::string block_str(const std::vector<int>& b) {
  std::string s = "{";
  for (std::size_t k = 0; k < b.size(); ++k) s += (k ? "," : "") + std::to_string(b[k]);
  return s + "}";
}

}  // namespace

std::optional<NclViolation> find_ncl_violation(const NclPartition& p) {
  const int n = p.n();
  const auto& blocks = p.blocks();
  if (n < 1) return NclViolation{NclCondition::Range, "n must be positive"};
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const auto& b = blocks[k];
    if (b.empty()) return NclViolation{NclCondition::Range, "empty block"};
    if (b.front() < 1 || b.back() > n) {
      return NclViolation{NclCondition::Range, block_str(b) + " leaves [1," + std::to_string(n) + "]"};
    }
    if (std::adjacent_find(b.begin(), b.end()) != b.end()) {
      return NclViolation{NclCondition::Range, block_str(b) + " repeats an element"};
    }
    if (k > 0 && blocks[k - 1] == b) {
      return NclViolation{NclCondition::Range, "duplicate block " + block_str(b)};
    }
  }
  for (int x = 1; x <= n; ++x) {
    bool covered = std::any_of(blocks.begin(), blocks.end(),
                               [&](const auto& b) { return contains(b, x); });
    if (!covered) return NclViolation{NclCondition::NCL1, std::to_string(x) + " is in no block"};
  }
  for (const auto& e : blocks) {
    for (const auto& f : blocks) {
      if (&e == &f) continue;
      // a < b < c < d with a, c in E and b, d in F
      for (int b : f) {
        for (int d : f) {
          if (d <= b) continue;
          bool below = std::any_of(e.begin(), e.end(), [&](int a) { return a < b; });
          bool between = std::any_of(e.begin(), e.end(), [&](int c) { return b < c && c < d; });
          if (below && between) {
            return NclViolation{NclCondition::NCL2, block_str(e) + " and " + block_str(f) + " cross"};
          }
        }
      }
    }
  }
  for (std::size_t x = 0; x < blocks.size(); ++x) {
    for (std::size_t y = x + 1; y < blocks.size(); ++y) {
      const auto& e = blocks[x];
      const auto& f = blocks[y];
      std::vector<int> shared;
      std::set_intersection(e.begin(), e.end(), f.begin(), f.end(), std::back_inserter(shared));
      if (shared.empty()) continue;
      auto pair = block_str(e) + " and " + block_str(f);
      if (shared.size() > 1) return NclViolation{NclCondition::NCL3, pair + " share two elements"};
      const int j = shared.front();
      bool e_side = j == e.front() && e.size() > 1 && j != f.front();
      bool f_side = j == f.front() && f.size() > 1 && j != e.front();
      if (!e_side && !f_side) {
        return NclViolation{NclCondition::NCL3, pair + " share " + std::to_string(j) + " illegally"};
      }
    }
  }
  return std::nullopt;
}

ArcDiagram to_diagram(const NclPartition& p) {
  if (auto bad = find_ncl_violation(p)) throw InvalidInput(bad->describe());
  std::vector<Arc> arcs;
  for (const auto& block : p.blocks()) {
    for (std::size_t k = 1; k < block.size(); ++k) arcs.push_back(Arc{block.front(), block[k]});
  }
  return ArcDiagram(AlgebraSpec::linear_a(p.n() - 1), std::move(arcs));
}

NclPartition from_diagram(const ArcDiagram& d) {
  if (d.spec().kind() != AlgebraKind::LinearA) {
    throw InvalidInput("linked partitions need an admissible (type A) diagram");
  }
  if (auto bad = find_monobrick_violation(d)) {
    throw InvalidInput("not a monobrick: " + bad->describe(d.spec().marks()));
  }
  const int n = d.spec().marks();
  std::vector<std::vector<int>> blocks;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> block;
    bool touched = false;
    for (const auto& a : d.arcs()) {
      if (a.start == i) block.push_back(a.end);
      if (a.start == i || a.end == i) touched = true;
    }
    if (!block.empty()) {
      block.push_back(i);
      blocks.push_back(std::move(block));
    } else if (!touched) {
      blocks.push_back({i});
    }
  }
  return NclPartition(n, std::move(blocks));
}

std::vector<NclPartition> enumerate_ncl_partitions(int n) {
  // Block minima are distinct and every element is a non-minimal member of at
  // most one block, so a candidate is fixed by choosing for each element j
  // whether it opens a block and which earlier block (if any) it joins.
  std::vector<NclPartition> out;
  std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> opens(static_cast<std::size_t>(n) + 1, 0);

  auto emit = [&] {
    std::vector<std::vector<int>> blocks;
    for (int m = 1; m <= n; ++m) {
      if (!opens[m]) continue;
      std::vector<int> block{m};
      for (int j = m + 1; j <= n; ++j) {
        if (parent[j] == m) block.push_back(j);
      }
      blocks.push_back(std::move(block));
    }
    NclPartition p(n, std::move(blocks));
    if (validate(p)) out.push_back(std::move(p));
  };

  auto rec = [&](auto& self, int j) -> void {
    if (j > n) {
      emit();
      return;
    }
    for (int open = 0; open <= 1; ++open) {
      opens[j] = static_cast<char>(open);
      for (int m = 0; m < j; ++m) {
        if (m > 0 && !opens[m]) continue;
        parent[j] = m;
        self(self, j + 1);
      }
    }
    opens[j] = 0;
    parent[j] = 0;
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end(), [](const NclPartition& a, const NclPartition& b) {
    return a.blocks() < b.blocks();
  });
  return out;
}

}  // namespace monobrick
