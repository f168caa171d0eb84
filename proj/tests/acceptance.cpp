// One line per acceptance criterion: PASS/FAIL, what was checked, wall time.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "monobrick/enumerate.hpp"
#include "monobrick/linked_partition.hpp"
#include "monobrick/oracle/verify.hpp"

using namespace monobrick;
using namespace monobrick::oracle;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

std::map<std::string, std::unique_ptr<Universe>> g_universes;

const Universe& universe(const std::string& name) {
  auto& slot = g_universes[name];
  if (!slot) slot = std::make_unique<Universe>(make_preset(name));
  return *slot;
}

/// Folds named checks into one outcome that reports the first failure.
Outcome fold(const std::vector<CheckResult>& checks, const std::string& summary) {
  for (const auto& c : checks) {
    if (!c.passed) return {false, c.name + ": " + c.detail};
  }
  return {true, summary};
}

Outcome counts(bool linear, int max_n, const std::vector<long>& literal) {
  std::ostringstream os;
  for (int n = 1; n <= max_n; ++n) {
    const auto spec = linear ? AlgebraSpec::linear_a(n) : AlgebraSpec::cyclic_b(n);
    const BigInt got = enumerate(spec, DiagramKind::Monobrick);
    const BigInt want = linear ? schroder_count(n) : b_count(n);
    if (got != want || want != literal[static_cast<std::size_t>(n - 1)]) {
      return {false, spec.name() + ": enumerated " + got.str() + ", closed form " + want.str()};
    }
    os << (n > 1 ? " " : "") << got;
  }
  return {true, os.str()};
}

Outcome semibricks() {
  const std::vector<long> cat{1, 2, 5, 14, 42, 132, 429};
  const std::vector<long> central{2, 6, 20, 70, 252, 924, 3432};
  for (int n = 1; n <= 7; ++n) {
    const auto a = enumerate(AlgebraSpec::linear_a(n - 1), DiagramKind::Semibrick);
    const auto b = enumerate(AlgebraSpec::cyclic_b(n), DiagramKind::Semibrick);
    const BigInt c2n = binomial(2 * n, n);
    if (BigInt(a) != c2n / (n + 1) || BigInt(a) != cat[static_cast<std::size_t>(n - 1)]) {
      return {false, "A" + std::to_string(n - 1) + " semibricks " + std::to_string(a)};
    }
    if (BigInt(b) != c2n || BigInt(b) != central[static_cast<std::size_t>(n - 1)]) {
      return {false, "B" + std::to_string(n) + " semibricks " + std::to_string(b)};
    }
  }
  return {true, "A_{n-1}: 1 2 5 14 42 132 429; B_n: 2 6 20 70 252 924 3432"};
}

Outcome recurrence() {
  for (int n = 1; n <= 6; ++n) {
    if (!recurrence_check(n)) return {false, "fails at n = " + std::to_string(n)};
  }
  return {true, "b_n = a_n + sum i a_i a_{n+1-i} for n = 1..6"};
}

Outcome ncl() {
  std::ostringstream os;
  for (int n = 1; n <= 7; ++n) {
    const auto parts = enumerate_ncl_partitions(n);
    if (BigInt(parts.size()) != schroder_count(n - 1)) {
      return {false, "[" + std::to_string(n) + "]: " + std::to_string(parts.size()) + " partitions"};
    }
    std::set<std::vector<Arc>> images;
    for (const auto& p : parts) {
      const auto d = to_diagram(p);
      if (from_diagram(d) != p) return {false, "partition roundtrip fails at " + p.to_string()};
      images.insert(d.arcs());
    }
    bool ok = images.size() == parts.size();
    std::uint64_t diagrams = enumerate(AlgebraSpec::linear_a(n - 1), DiagramKind::Monobrick, [&](const ArcDiagram& d) {
      ok = ok && images.count(d.arcs()) == 1 && to_diagram(from_diagram(d)) == d;
    });
    if (!ok || diagrams != parts.size()) return {false, "diagram roundtrip fails on [" + std::to_string(n) + "]"};
    os << (n > 1 ? " " : "") << parts.size();
  }
  return {true, os.str() + " partitions, both roundtrips exact"};
}

Outcome census() {
  std::ostringstream os;
  for (const char* name : {"a3_linear", "a3_source", "nak2"}) {
    const auto& u = universe(name);
    const auto got = monobricks_bruteforce(BrickRelations(u)).size();
    if (got != expected_monobrick_count(name)) return {false, std::string(name) + ": " + std::to_string(got)};
    os << name << " " << got << " ";
  }
  return {true, os.str() + "monobricks"};
}

Outcome tables() {
  std::size_t rows = 0;
  for (const char* name : {"a3_linear", "a3_source", "nak2"}) {
    const auto& u = universe(name);
    const auto checks = check_table(u, BrickRelations(u), *fixture_for(name));
    if (auto o = fold(checks, ""); !o.passed) return o;
    rows += checks.size();
  }
  return {true, std::to_string(rows) + " rows of three tables"};
}

Outcome identities() {
  std::size_t checks = 0;
  for (const auto& name : preset_names()) {
    const auto& u = universe(name);
    const auto results = check_identities(u, BrickRelations(u));
    if (auto o = fold(results, ""); !o.passed) return {false, name + ": " + o.detail};
    checks += results.size();
  }
  return {true, std::to_string(checks) + " identity checks over " + std::to_string(preset_names().size()) + " presets"};
}

Outcome nakayama() {
  std::size_t generated = 0;
  for (const char* name : {"nak2", "b3", "a2_linear", "a3_linear"}) {
    const auto& u = universe(name);
    const BrickRelations rel(u);
    const auto c = schur_census(u, rel);
    if (!c.violations.empty() || !c.converse_failures.empty()) {
      return {false, std::string(name) + ": left Schur and kernel/image closure disagree"};
    }
    generated += c.generated;
  }
  const auto& u = universe("a3_source");
  const BrickRelations rel(u);
  std::set<BrickSet> starred;
  for (const auto& row : fixture_for("a3_source")->rows) {
    if (row.failure != ClosureFailure::None) starred.insert(brick_set(u.preset(), row.monobrick));
  }
  std::set<BrickSet> found;
  for (const auto& mm : monobricks_bruteforce(rel)) {
    const auto e = filt_bricks(u, mm);
    if (is_left_schur(e) && !e.flags().kernel_image_closed()) found.insert(mm);
  }
  if (found.size() < 4 || found != starred) {
    return {false, "a3_source: " + std::to_string(found.size()) + " violations, not the starred rows"};
  }
  return {true, "equivalence on " + std::to_string(generated) + " generated subcategories; a3_source violations " +
                    std::to_string(found.size()) + " = starred rows"};
}

Outcome arcs() {
  std::size_t checks = 0;
  for (const char* name : {"a3_linear", "nak2", "b3"}) {
    const auto& u = universe(name);
    const auto results = check_arc_agreement(u, BrickRelations(u));
    if (results.empty()) return {false, std::string(name) + " has no arc model"};
    if (auto o = fold(results, ""); !o.passed) return {false, std::string(name) + ": " + o.detail};
    checks += results.size();
  }
  return {true, "A3, B2, B3: hom kinds, crossing kinds, monobrick sets (" + std::to_string(checks) + " checks)"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "monobrick counts, type A, n = 1..7", 60,
       [] { return counts(true, 7, {2, 6, 22, 90, 394, 1806, 8558}); }},
      {2, "monobrick counts, type B, n = 1..6", 120,
       [] { return counts(false, 6, {2, 8, 38, 192, 1002, 5336}); }},
      {3, "semibrick counts, Catalan and central binomial", 0, semibricks},
      {4, "recurrence between type A and type B counts", 0, recurrence},
      {5, "non-crossing linked partitions biject onto type A monobricks", 0, ncl},
      {6, "matrix-level monobrick census", 30, census},
      {7, "table fixtures", 0, tables},
      {8, "structural identities on every preset", 0, identities},
      {9, "left Schur vs closure under extensions, kernels, images", 0, nakayama},
      {10, "arc model vs matrix hom spaces", 0, arcs},
  };

  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.passed = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit)";
    }
    all = all && o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << " [" << std::setw(2) << c.id << "] " << c.title << ": " << o.detail
              << " (" << std::fixed << std::setprecision(2) << secs << " s)" << std::endl;
  }
  return all ? 0 : 1;
}
