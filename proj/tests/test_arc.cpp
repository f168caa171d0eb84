#include <doctest.h>

#include <stdexcept>

#include "monobrick/arc.hpp"

using namespace monobrick;

namespace {
using Series = std::vector<int>;
}

TEST_CASE("wrap_mark stays in [1, n]") {
  CHECK(wrap_mark(0, 3) == 3);
  CHECK(wrap_mark(4, 3) == 1);
  CHECK(wrap_mark(-2, 3) == 1);
  CHECK(wrap_mark(3, 3) == 3);
  for (int n = 1; n <= 6; ++n) {
    for (int v = -20; v <= 20; ++v) {
      const int w = wrap_mark(v, n);
      CHECK(w >= 1);
      CHECK(w <= n);
      CHECK((w - v) % n == 0);
    }
  }
}

TEST_CASE("algebra specs") {
  CHECK(AlgebraSpec::linear_a(3).marks() == 4);
  CHECK(AlgebraSpec::cyclic_b(3).marks() == 3);
  CHECK(AlgebraSpec::linear_a(0).arcs().empty());
  CHECK_THROWS_AS((void)AlgebraSpec::linear_a(-1), std::invalid_argument);
  CHECK_THROWS_AS((void)AlgebraSpec::cyclic_b(0), std::invalid_argument);
  CHECK(AlgebraSpec::linear_a(3).name() == "A3");
  CHECK(AlgebraSpec::cyclic_b(2).name() == "B2");

  const auto a = AlgebraSpec::linear_a(3);
  CHECK(a.is_legal({1, 4}));
  CHECK_FALSE(a.is_legal({4, 1}));
  CHECK_FALSE(a.is_legal({2, 2}));
  CHECK_FALSE(a.is_legal({0, 2}));
  CHECK(AlgebraSpec::cyclic_b(3).is_legal({3, 2}));
  CHECK(AlgebraSpec::cyclic_b(3).is_legal({2, 2}));

  for (int m = 0; m <= 6; ++m) CHECK(AlgebraSpec::linear_a(m).arcs().size() == AlgebraSpec::linear_a(m).arc_count());
  for (int n = 1; n <= 6; ++n) CHECK(AlgebraSpec::cyclic_b(n).arcs().size() == static_cast<std::size_t>(n * n));

  const auto arcs = AlgebraSpec::cyclic_b(2).arcs();
  CHECK(arcs == std::vector<Arc>{{1, 2}, {1, 1}, {2, 1}, {2, 2}});
}

TEST_CASE("socle series") {
  CHECK(socle_series({2, 3}, 3) == Series{2});
  CHECK(socle_series({3, 2}, 3) == Series{3, 1});
  CHECK(socle_series({1, 1}, 3) == Series{1, 2, 3});
  CHECK(socle_series({1, 4}, 4) == Series{1, 2, 3});
  CHECK(arc_length({1, 1}, 3) == 3);
  CHECK(socle_position({3, 2}, 1, 3) == 1);
  CHECK(socle_position({3, 2}, 2, 3) == -1);
}

TEST_CASE("partial sequences do not wrap") {
  CHECK(is_partial_sequence({2, 3}, {1, 2, 3}));
  CHECK(is_partial_sequence({}, {1}));
  CHECK_FALSE(is_partial_sequence({3, 1}, {1, 2, 3}));
  CHECK_FALSE(is_partial_sequence({1, 2, 3}, {1, 2}));
}

TEST_CASE("crossing kinds") {
  CHECK(crossing_kind({1, 3}, {2, 4}, 4) == CrossKind::StrictlyCrossing);
  CHECK(crossing_kind({3, 1}, {3, 2}, 3) == CrossKind::MonoCrossing);
  CHECK(crossing_kind({1, 2}, {3, 4}, 4) == CrossKind::NonCrossing);
  CHECK(crossing_kind({3, 2}, {1, 1}, 3) == CrossKind::StrictlyCrossing);
  CHECK(crossing_kind({1, 4}, {2, 4}, 4) == CrossKind::EpiCrossing);
  CHECK(crossing_kind({1, 4}, {2, 3}, 4) == CrossKind::NonCrossing);
  CHECK_THROWS_AS((void)crossing_kind({1, 2}, {1, 2}, 3), std::invalid_argument);
  CHECK(to_string(CrossKind::MonoCrossing) == "mono-crossing");

  // Symmetric in its arguments.
  for (int n = 1; n <= 5; ++n) {
    const auto arcs = AlgebraSpec::cyclic_b(n).arcs();
    for (const auto& a : arcs) {
      for (const auto& b : arcs) {
        if (a == b) continue;
        CHECK(crossing_kind(a, b, n) == crossing_kind(b, a, n));
      }
    }
  }
}

TEST_CASE("hom kinds") {
  CHECK(hom_kind({1, 3}, {2, 3}, AlgebraSpec::linear_a(2)) == MorphismKind::NonzeroNonInjection);
  CHECK(hom_kind({1, 2}, {1, 4}, AlgebraSpec::linear_a(3)) == MorphismKind::Injection);
  CHECK(hom_kind({1, 2}, {2, 3}, AlgebraSpec::linear_a(2)) == MorphismKind::Zero);
  CHECK(hom_kind({1, 1}, {2, 2}, AlgebraSpec::cyclic_b(2)) == MorphismKind::NonzeroNonInjection);
  CHECK(hom_kind({2, 3}, {2, 3}, AlgebraSpec::linear_a(2)) == MorphismKind::Iso);
  CHECK(hom_kind({1, 4}, {1, 2}, AlgebraSpec::linear_a(3)) == MorphismKind::Zero);
  CHECK_THROWS_AS((void)hom_kind({2, 1}, {1, 2}, AlgebraSpec::linear_a(2)), std::invalid_argument);
}

TEST_CASE("hom kind agrees with the crossing classification") {
  // Pairs with maps both ways are exactly the mono- and epi-crossing ones
  // on linear algebras, where no arc is long enough to wrap.
  for (int m = 1; m <= 6; ++m) {
    const auto spec = AlgebraSpec::linear_a(m);
    for (const auto& a : spec.arcs()) {
      for (const auto& b : spec.arcs()) {
        if (a == b) continue;
        const auto k = crossing_kind(a, b, spec.marks());
        const auto ab = hom_kind(a, b, spec), ba = hom_kind(b, a, spec);
        const bool non_inj = ab == MorphismKind::NonzeroNonInjection || ba == MorphismKind::NonzeroNonInjection;
        const bool inj = ab == MorphismKind::Injection || ba == MorphismKind::Injection;
        if (k == CrossKind::NonCrossing) CHECK((!inj && !non_inj));
        if (k == CrossKind::MonoCrossing) CHECK((inj && !non_inj));
        if (k == CrossKind::EpiCrossing || k == CrossKind::StrictlyCrossing) CHECK(non_inj);
      }
    }
  }
}

TEST_CASE("submodule chains and labels") {
  CHECK(submodule_arcs({1, 4}, AlgebraSpec::linear_a(3)) == std::vector<Arc>{{1, 2}, {1, 3}, {1, 4}});
  CHECK(submodule_arcs({3, 2}, AlgebraSpec::cyclic_b(3)) == std::vector<Arc>{{3, 1}, {3, 2}});
  CHECK(submodule_arcs({1, 2}, AlgebraSpec::linear_a(3)) == std::vector<Arc>{{1, 2}});
  for (const auto& a : AlgebraSpec::cyclic_b(4).arcs()) {
    for (const auto& s : submodule_arcs(a, AlgebraSpec::cyclic_b(4))) {
      const auto k = hom_kind(s, a, AlgebraSpec::cyclic_b(4));
      CHECK((k == MorphismKind::Injection || k == MorphismKind::Iso));
    }
  }
  CHECK(module_label({1, 4}, 4) == "3/2/1");
  CHECK(module_label({1, 1}, 2) == "2/1");
  CHECK(module_label({2, 2}, 2) == "1/2");
  CHECK(module_label({3, 4}, 4) == "3");
}
