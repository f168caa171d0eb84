#include <doctest.h>

#include <set>

#include "monobrick/enumerate.hpp"
#include "monobrick/errors.hpp"
#include "monobrick/linked_partition.hpp"

using namespace monobrick;

namespace {
using Blocks = std::vector<std::vector<int>>;
}

TEST_CASE("validation") {
  CHECK(validate(NclPartition(4, {{1, 2, 4}, {2, 3}})));
  CHECK(validate(NclPartition(3, {{1}, {2}, {3}})));
  const NclPartition crossing(4, {{1, 3}, {2, 4}});
  CHECK_FALSE(validate(crossing));
  CHECK(find_ncl_violation(crossing)->condition == NclCondition::NCL2);
  CHECK(find_ncl_violation(crossing)->describe().find("NCL2") != std::string::npos);
  CHECK_FALSE(validate(NclPartition(3, {{1, 2}, {4}})));
  CHECK_FALSE(validate(NclPartition(3, {{1, 2}, {}, {3}})));
  CHECK(NclPartition(4, {{2, 3}, {4, 2, 1}}) == NclPartition(4, {{1, 2, 4}, {2, 3}}));
}

TEST_CASE("partitions to diagrams and back") {
  const auto d = to_diagram(NclPartition(4, {{1, 2, 4}, {2, 3}}));
  CHECK(d == ArcDiagram(AlgebraSpec::linear_a(3), {{1, 2}, {1, 4}, {2, 3}}));
  CHECK(to_diagram(NclPartition(3, {{1}, {2}, {3}})).empty());
  CHECK(to_diagram(NclPartition(4, {{1, 2}, {3, 4}})) == ArcDiagram(AlgebraSpec::linear_a(3), {{1, 2}, {3, 4}}));

  CHECK(from_diagram(d) == NclPartition(4, {{1, 2, 4}, {2, 3}}));
  CHECK(from_diagram(ArcDiagram(AlgebraSpec::linear_a(2))) == NclPartition(3, {{1}, {2}, {3}}));
  CHECK(from_diagram(ArcDiagram(AlgebraSpec::linear_a(3), {{1, 2}, {3, 4}})) == NclPartition(4, {{1, 2}, {3, 4}}));

  CHECK_THROWS_AS((void)to_diagram(NclPartition(4, {{1, 3}, {2, 4}})), InvalidInput);
  CHECK_THROWS_AS((void)from_diagram(ArcDiagram(AlgebraSpec::cyclic_b(2))), InvalidInput);
  CHECK_THROWS_AS((void)from_diagram(ArcDiagram(AlgebraSpec::linear_a(3), {{1, 3}, {2, 4}})), InvalidInput);
}

TEST_CASE("enumerated partitions biject onto monobrick diagrams") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    const auto parts = enumerate_ncl_partitions(n);
    CHECK(parts.size() == schroder_count(n - 1));
    std::set<std::vector<Arc>> images;
    for (const auto& p : parts) {
      CHECK(validate(p));
      const auto d = to_diagram(p);
      CHECK(is_monobrick_diagram(d));
      CHECK(from_diagram(d) == p);
      images.insert(d.arcs());
    }
    CHECK(images.size() == parts.size());
    enumerate(AlgebraSpec::linear_a(n - 1), DiagramKind::Monobrick, [&](const ArcDiagram& d) {
      CHECK(images.count(d.arcs()) == 1);
      CHECK(to_diagram(from_diagram(d)) == d);
    });
  }
}
