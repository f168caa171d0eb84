#pragma once

#include <cstdint>
#include <functional>

#include <boost/multiprecision/cpp_int.hpp>

#include "monobrick/diagram.hpp"

namespace monobrick {

using BigInt = boost::multiprecision::cpp_int;

enum class DiagramKind { Monobrick, Semibrick, CofinallyClosed };

/// Size caps for enumeration. Defaults: A_n with n <= 10, B_n with n <= 7.
struct EnumerationBudget {
  int max_linear_a = 10;
  int max_cyclic_b = 7;

  /// Defaults overridden by MONOBRICK_MAX_A / MONOBRICK_MAX_B when set.
  static EnumerationBudget from_environment();
};

struct EnumerationOptions {
  EnumerationBudget budget{};
  /// Worker threads; 1 gives the deterministic lexicographic visit order.
  unsigned workers = 1;
};

using DiagramVisitor = std::function<void(const ArcDiagram&)>;

/// Visits every diagram of `kind` once and returns how many there were.
///
/// Diagrams are the cliques (empty and non-maximal included) of the graph on
/// legal arcs whose edges join mono-crossing or non-crossing pairs
/// (non-crossing only for semibricks). With one worker the visit order is
/// lexicographic in the sorted arc lists; with several, the visitor is still
/// never called concurrently but the order is unspecified. An empty visitor
/// just counts. Throws BudgetExceeded above the configured cap.
std::uint64_t enumerate(const AlgebraSpec& spec, DiagramKind kind,
                        const DiagramVisitor& visitor = {},
                        const EnumerationOptions& options = {});

/// n-th large Schröder number: sum_i C(n,i) C(n+i,i) / (i+1).
[[nodiscard]] BigInt schroder_count(int n);

/// Number of monobricks over B_n: 2 sum_{i<n} C(n-1,i) C(n+i,i).
[[nodiscard]] BigInt b_count(int n);

[[nodiscard]] BigInt binomial(int n, int k);
[[nodiscard]] BigInt catalan(int n);

/// b_n == a_n + sum_{i=1..n} i a_i a_{n+1-i}, with a_i = schroder_count(i-1).
[[nodiscard]] bool recurrence_check(int n);

struct CountReport {
  AlgebraSpec spec;
  BigInt enumerated;
  BigInt closed_form;
  bool recurrence_ok = false;

  [[nodiscard]] bool matches() const { return enumerated == closed_form; }
};

/// Enumerates monobricks over `spec` and pairs the count with its closed form.
[[nodiscard]] CountReport count_report(const AlgebraSpec& spec,
                                       const EnumerationOptions& options = {});

}  // namespace monobrick
