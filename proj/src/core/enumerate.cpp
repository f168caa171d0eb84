#include "monobrick/enumerate.hpp"

#include <algorithm>
#include <bitset>
#include <cstdlib>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "monobrick/brick_poset.hpp"
#include "monobrick/errors.hpp"

namespace monobrick {

namespace {

constexpr std::size_t kMaxArcs = 256;
using ArcSet = std::bitset<kMaxArcs>;

int env_int(const char* name, int fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    return std::stoi(raw);
  } catch (const std::exception&) {
    return fallback;
  }
}

class CliqueSearch {
 public:
  CliqueSearch(const AlgebraSpec& spec, DiagramKind kind, const DiagramVisitor& visitor)
      : spec_(spec), kind_(kind), visitor_(visitor), arcs_(spec.arcs()) {
    if (arcs_.size() > kMaxArcs) throw BudgetExceeded("too many arcs for " + spec.name());
    const int n = spec.marks();
    adjacent_.resize(arcs_.size());
    later_.resize(arcs_.size());
    for (std::size_t x = 0; x < arcs_.size(); ++x) {
      for (std::size_t y = x + 1; y < arcs_.size(); ++y) {
        later_[x].set(y);
        auto k = crossing_kind(arcs_[x], arcs_[y], n);
        bool ok = k == CrossKind::NonCrossing ||
                  (k == CrossKind::MonoCrossing && kind != DiagramKind::Semibrick);
        if (ok) {
          adjacent_[x].set(y);
          adjacent_[y].set(x);
        }
      }
    }
  }

  [[nodiscard]] std::size_t arc_count() const noexcept { return arcs_.size(); }

  /// Count of the empty diagram (0 or 1 after filtering), visiting it.
  std::uint64_t visit_empty(std::mutex* lock) {
    std::vector<std::size_t> chosen;
    return emit(chosen, lock);
  }

  /// All diagrams whose first arc is `first`.
  std::uint64_t run_from(std::size_t first, std::mutex* lock) {
    std::vector<std::size_t> chosen{first};
    return descend(chosen, adjacent_[first] & later_[first], lock);
  }

 private:
  std::uint64_t descend(std::vector<std::size_t>& chosen, const ArcSet& candidates,
                        std::mutex* lock) {
    std::uint64_t total = emit(chosen, lock);
    for (std::size_t y = candidates._Find_first(); y < kMaxArcs;
         y = candidates._Find_next(y)) {
      chosen.push_back(y);
      total += descend(chosen, candidates & adjacent_[y] & later_[y], lock);
      chosen.pop_back();
    }
    return total;
  }

  std::uint64_t emit(const std::vector<std::size_t>& chosen, std::mutex* lock) {
    if (!visitor_ && kind_ != DiagramKind::CofinallyClosed) return 1;
    std::vector<Arc> arcs;
    arcs.reserve(chosen.size());
    for (auto idx : chosen) arcs.push_back(arcs_[idx]);
    ArcDiagram d(spec_, std::move(arcs));
    if (kind_ == DiagramKind::CofinallyClosed &&
        !is_cofinally_closed(MonobrickPoset(d))) {
      return 0;
    }
    if (visitor_) {
      if (lock != nullptr) {
        std::scoped_lock guard(*lock);
        visitor_(d);
      } else {
        visitor_(d);
      }
    }
    return 1;
  }

  AlgebraSpec spec_;
  DiagramKind kind_;
  const DiagramVisitor& visitor_;
  std::vector<Arc> arcs_;
  std::vector<ArcSet> adjacent_;
  std::vector<ArcSet> later_;
};

}  // namespace

EnumerationBudget EnumerationBudget::from_environment() {
  EnumerationBudget b;
  b.max_linear_a = env_int("MONOBRICK_MAX_A", b.max_linear_a);
  b.max_cyclic_b = env_int("MONOBRICK_MAX_B", b.max_cyclic_b);
  return b;
}

std::uint64_t enumerate(const AlgebraSpec& spec, DiagramKind kind,
                        const DiagramVisitor& visitor,
                        const EnumerationOptions& options) {
  const int cap = spec.kind() == AlgebraKind::LinearA ? options.budget.max_linear_a
                                                      : options.budget.max_cyclic_b;
  if (spec.index() > cap) {
    throw BudgetExceeded(spec.name() + " exceeds the enumeration cap n <= " +
                         std::to_string(cap));
  }
  CliqueSearch search(spec, kind, visitor);
  const std::size_t arcs = search.arc_count();
  const unsigned workers = std::max(1u, options.workers);

  if (workers == 1) {
    std::uint64_t total = search.visit_empty(nullptr);
    for (std::size_t first = 0; first < arcs; ++first) total += search.run_from(first, nullptr);
    return total;
  }

  std::mutex lock;
  std::vector<std::uint64_t> partial(workers, 0);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t first = w; first < arcs; first += workers) {
          partial[w] += search.run_from(first, &lock);
        }
      });
    }
  }
  std::uint64_t total = search.visit_empty(&lock);
  for (auto p : partial) total += p;
  return total;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt catalan(int n) { return binomial(2 * n, n) / (n + 1); }

BigInt schroder_count(int n) {
  BigInt total = 0;
  for (int i = 0; i <= n; ++i) total += binomial(n, i) * binomial(n + i, i) / (i + 1);
  return total;
}

BigInt b_count(int n) {
  BigInt total = 0;
  for (int i = 0; i <= n - 1; ++i) total += binomial(n - 1, i) * binomial(n + i, i);
  return 2 * total;
}

bool recurrence_check(int n) {
  auto a = [](int i) { return schroder_count(i - 1); };
  BigInt rhs = a(n);
  for (int i = 1; i <= n; ++i) rhs += i * a(i) * a(n + 1 - i);
  return b_count(n) == rhs;
}

CountReport count_report(const AlgebraSpec& spec, const EnumerationOptions& options) {
  CountReport r{spec, 0, 0, false};
  r.enumerated = enumerate(spec, DiagramKind::Monobrick, {}, options);
  if (spec.kind() == AlgebraKind::LinearA) {
    r.closed_form = schroder_count(spec.index());
  } else {
    r.closed_form = b_count(spec.index());
  }
  r.recurrence_ok = spec.index() >= 1 ? recurrence_check(spec.index()) : true;
  return r;
}

}  // namespace monobrick
