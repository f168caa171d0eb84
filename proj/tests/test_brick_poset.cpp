#include <doctest.h>

#include "monobrick/brick_poset.hpp"
#include "monobrick/enumerate.hpp"
#include "monobrick/errors.hpp"

using namespace monobrick;

namespace {

const AlgebraSpec kA3 = AlgebraSpec::linear_a(3);
const AlgebraSpec kB2 = AlgebraSpec::cyclic_b(2);

MonobrickPoset poset(const AlgebraSpec& s, std::vector<Arc> arcs) { return MonobrickPoset(ArcDiagram(s, std::move(arcs))); }

}  // namespace

TEST_CASE("construction rejects non-monobricks") {
  CHECK_THROWS_AS(poset(kA3, {{1, 3}, {2, 4}}), InvalidInput);
  try {
    (void)poset(kA3, {{1, 4}, {2, 4}});
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("(1,4)") != std::string::npos);
    CHECK(std::string(e.what()).find("epi-crossing") != std::string::npos);
  }
}

TEST_CASE("submodule order") {
  const auto m = poset(kA3, {{1, 2}, {1, 3}, {1, 4}});
  CHECK(m.less_equal({1, 2}, {1, 4}));
  CHECK(m.less_equal({1, 3}, {1, 3}));
  CHECK_FALSE(m.less_equal({1, 4}, {1, 2}));
}

TEST_CASE("mmax") {
  CHECK(mmax(poset(kA3, {{1, 2}, {1, 3}, {1, 4}})) == ArcDiagram(kA3, {{1, 4}}));
  CHECK(mmax(poset(kA3, {})) == ArcDiagram(kA3));
  CHECK(mmax(poset(kA3, {{1, 2}, {3, 4}})) == ArcDiagram(kA3, {{1, 2}, {3, 4}}));
}

TEST_CASE("cofinal closure") {
  CHECK(cofinal_closure(poset(kA3, {{1, 2}, {2, 4}})).diagram() == ArcDiagram(kA3, {{1, 2}, {2, 3}, {2, 4}}));
  CHECK(cofinal_closure(poset(kA3, {{1, 4}})).diagram() == ArcDiagram(kA3, {{1, 2}, {1, 3}, {1, 4}}));
  CHECK(cofinal_closure(poset(kA3, {})).diagram() == ArcDiagram(kA3));
  // 1/2 is the arc (2,2) on [2]; its closure adds the simple 2 = (2,1).
  CHECK(cofinal_closure(poset(kB2, {{2, 2}})).diagram() == ArcDiagram(kB2, {{2, 1}, {2, 2}}));
  CHECK(cofinal_closure(poset(kB2, {{1, 1}})).diagram() == ArcDiagram(kB2, {{1, 2}, {1, 1}}));
  // 2/1 maps onto 2, so only the simple 1 joins.
  CHECK(cofinal_closure(poset(kA3, {{1, 4}, {2, 3}})).diagram() == ArcDiagram(kA3, {{1, 2}, {1, 4}, {2, 3}}));
}

TEST_CASE("cofinally closed and cofinal extensions") {
  CHECK(is_cofinally_closed(poset(kA3, {{1, 2}, {1, 3}, {1, 4}})));
  CHECK_FALSE(is_cofinally_closed(poset(kA3, {{1, 4}})));
  CHECK(is_cofinally_closed(poset(kA3, {})));

  const auto m = poset(kA3, {{1, 4}});
  CHECK(is_cofinal_extension(m, poset(kA3, {{1, 2}, {1, 3}, {1, 4}})));
  CHECK(is_cofinal_extension(m, m));
  CHECK_FALSE(is_cofinal_extension(poset(kA3, {{1, 2}}), poset(kA3, {{1, 2}, {3, 4}})));
  CHECK_THROWS_AS((void)is_cofinal_extension(m, poset(AlgebraSpec::linear_a(4), {{1, 4}})), InvalidInput);
}

TEST_CASE("hasse diagrams") {
  CHECK(hasse(poset(kA3, {{1, 2}, {1, 3}, {1, 4}})).size() == 2);
  CHECK(hasse(poset(kA3, {{1, 2}, {2, 3}, {3, 4}})).empty());
  const auto h = hasse(poset(kA3, {{1, 2}, {1, 3}, {1, 4}}));
  CHECK(h.front() == std::pair<Arc, Arc>{{1, 2}, {1, 3}});
  // Diamond on indices: 0 < 1, 0 < 2, 1 < 3, 2 < 3, 0 < 3.
  auto leq = [](std::size_t a, std::size_t b) {
    if (a == b || a == 0 || b == 3) return true;
    return false;
  };
  CHECK(covering_relation(4, leq).size() == 4);
}

TEST_CASE("projection identities over whole enumerations") {
  for (const auto& spec : {AlgebraSpec::linear_a(4), AlgebraSpec::cyclic_b(3)}) {
    std::size_t semi = 0, closed = 0, total = 0;
    enumerate(spec, DiagramKind::Monobrick, [&](const ArcDiagram& d) {
      const MonobrickPoset m(d);
      const auto top = mmax(m);
      const auto cl = cofinal_closure(m);
      ++total;
      CHECK(is_semibrick_diagram(top));
      CHECK(is_cofinally_closed(cl));
      CHECK(is_cofinal_extension(m, cl));
      CHECK(mmax(cl) == top);
      CHECK(cofinal_closure(cl) == cl);
      CHECK((top == d) == is_semibrick_diagram(d));
      semi += is_semibrick_diagram(d);
      closed += is_cofinally_closed(m);
    });
    // Both projections hit the same number of classes.
    CHECK(semi == closed);
    CHECK(total > semi);
  }
}
