#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "monobrick/enumerate.hpp"
#include "monobrick/errors.hpp"
#include "monobrick/io/cli.hpp"
#include "monobrick/io/json_codec.hpp"
#include "monobrick/io/render.hpp"

using namespace monobrick;
using namespace monobrick::io;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("diagram codec") {
  const ArcDiagram d(AlgebraSpec::cyclic_b(3), {{1, 1}, {2, 3}});
  const Json j = diagram_to_json(d);
  CHECK(j == Json::parse(R"({"n":3,"algebra":"B","arcs":[[1,1],[2,3]]})"));
  CHECK(diagram_from_json(j) == d);
  CHECK(diagram_from_json(Json::parse(j.dump())) == d);
  CHECK_THROWS_AS((void)diagram_from_json(Json::parse(R"({"n":3,"algebra":"C","arcs":[]})")), std::invalid_argument);
  CHECK_THROWS_AS((void)diagram_from_json(Json::parse(R"({"n":3,"algebra":"A"})")), std::invalid_argument);
  CHECK_THROWS_AS((void)diagram_from_json(Json::parse(R"({"n":2,"algebra":"A","arcs":[[3,1]]})")), InvalidInput);

  // Every enumerated diagram survives a text roundtrip.
  enumerate(AlgebraSpec::cyclic_b(3), DiagramKind::Monobrick, [](const ArcDiagram& x) {
    CHECK(diagram_from_json(Json::parse(diagram_to_json(x).dump())) == x);
  });
}

TEST_CASE("partition codec") {
  const NclPartition p(4, {{1, 2, 4}, {2, 3}});
  CHECK(partition_to_json(p) == Json::parse(R"({"n":4,"blocks":[[1,2,4],[2,3]]})"));
  CHECK(partition_from_json(partition_to_json(p)) == p);
  CHECK_THROWS_AS((void)partition_from_json(Json::parse(R"({"blocks":[]})")), std::invalid_argument);
}

TEST_CASE("ascii rendering") {
  const auto fig = render_ascii(ArcDiagram(AlgebraSpec::linear_a(3), {{1, 2}, {1, 4}, {3, 4}}));
  CHECK(fig ==
        "+-----------+\n"
        "+---+   +---+\n"
        "1   2   3   4\n");
  CHECK(render_ascii(ArcDiagram(AlgebraSpec::linear_a(3))) == "1   2   3   4\n");
  CHECK(render_ascii(ArcDiagram(AlgebraSpec::cyclic_b(3), {{3, 2}})) ==
        "        +-------+\n"
        "1   2   3   1   2   3   1\n");
  // Nesting puts the outer arc on top, with its legs running down.
  CHECK(render_ascii(ArcDiagram(AlgebraSpec::linear_a(3), {{1, 4}, {2, 3}})) ==
        "+-----------+\n"
        "|   +---+   |\n"
        "1   2   3   4\n");
  const auto crossing = render_ascii(ArcDiagram(AlgebraSpec::linear_a(3), {{1, 3}, {2, 4}}));
  CHECK(lines(crossing).size() == 3);
}

TEST_CASE("cli enumerate") {
  auto r = run({"enumerate", "--algebra", "A", "--n", "3", "--kind", "monobrick"});
  CHECK(r.code == kOk);
  auto ls = lines(r.out);
  CHECK(ls.size() == 23);
  CHECK(ls.back() == R"({"count":22})");
  CHECK(ls.front() == R"({"algebra":"A","arcs":[],"n":3})");

  CHECK(lines(run({"enumerate", "--algebra", "B", "--n", "2", "--kind", "semibrick"}).out).size() == 7);
  CHECK(lines(run({"enumerate", "--algebra", "A", "--n", "1"}).out).size() == 3);
  CHECK(run({"enumerate", "--algebra", "B", "--n", "3"}).out == run({"enumerate", "--algebra", "B", "--n", "3"}).out);
  CHECK(lines(run({"enumerate", "--algebra", "A", "--n", "3", "--format", "csv"}).out).back() == "count,22");
  CHECK(lines(run({"enumerate", "--algebra", "B", "--n", "4", "--workers", "3"}).out).back() == R"({"count":192})");

  CHECK(run({"enumerate", "--algebra", "C", "--n", "3"}).code == kUsage);
  CHECK(run({"enumerate", "--algebra", "B", "--n", "0"}).code == kUsage);
  CHECK(run({"enumerate", "--algebra", "A"}).code == kUsage);
  CHECK(run({"enumerate", "--algebra", "B", "--n", "8"}).code == kBudget);
  CHECK(run({"enumerate", "--algebra", "A", "--n", "3", "--budget-a", "2"}).code == kBudget);
  CHECK(run({}).code == kUsage);
  CHECK(run({"--help"}).code == kOk);
}

TEST_CASE("cli count") {
  const auto a = run({"count", "--algebra", "A", "--max-n", "3"});
  CHECK(a.code == kOk);
  CHECK(a.out.find("| 3 | 22 | 22 | true |") != std::string::npos);
  const auto b = run({"count", "--algebra", "B", "--max-n", "5", "--format", "csv"});
  CHECK(b.out.find("2,8,8,true") != std::string::npos);
  CHECK(b.out.find("5,1002,1002,true") != std::string::npos);
  const auto j = Json::parse(run({"count", "--algebra", "B", "--max-n", "2", "--format", "json"}).out);
  CHECK(j.size() == 2);
  CHECK(j[1]["enumerated"] == "8");
}

TEST_CASE("cli closure and mmax") {
  const std::string chain = R"({"n":3,"algebra":"A","arcs":[[1,4]]})";
  auto r = run({"closure", "--diagram", chain});
  CHECK(r.code == kOk);
  CHECK(diagram_from_json(Json::parse(r.out)) == ArcDiagram(AlgebraSpec::linear_a(3), {{1, 2}, {1, 3}, {1, 4}}));
  r = run({"mmax"}, R"({"n":3,"algebra":"A","arcs":[[1,2],[1,3],[1,4]]})");
  CHECK(diagram_from_json(Json::parse(r.out)) == ArcDiagram(AlgebraSpec::linear_a(3), {{1, 4}}));
  r = run({"closure"}, R"({"n":3,"algebra":"A","arcs":[]})");
  CHECK(diagram_from_json(Json::parse(r.out)).empty());

  const auto h = Json::parse(run({"closure", "--hasse", "--diagram", chain}).out);
  CHECK(h["hasse"].size() == 2);

  r = run({"closure", "--diagram", R"({"n":3,"algebra":"A","arcs":[[1,3],[2,4]]})"});
  CHECK(r.code == kInvalidInput);
  CHECK(r.err.find("(1,3)") != std::string::npos);
  CHECK(r.err.find("(2,4)") != std::string::npos);
  r = run({"mmax", "--diagram", R"({"n":3,"algebra":"A","arcs":[[1,4],[2,4]]})"});
  CHECK(r.code == kInvalidInput);
  CHECK(r.err.find("epi-crossing") != std::string::npos);
  CHECK(run({"closure", "--diagram", "not json"}).code == kUsage);
}

TEST_CASE("cli ncl") {
  auto r = run({"ncl", "--diagram", R"({"n":4,"blocks":[[1,2,4],[2,3]]})"});
  CHECK(r.code == kOk);
  const auto d = Json::parse(r.out);
  CHECK(diagram_from_json(d) == ArcDiagram(AlgebraSpec::linear_a(3), {{1, 2}, {1, 4}, {2, 3}}));
  const auto back = run({"ncl", "--diagram", d.dump()});
  CHECK(partition_from_json(Json::parse(back.out)) == NclPartition(4, {{1, 2, 4}, {2, 3}}));
  CHECK(diagram_from_json(Json::parse(run({"ncl"}, R"({"n":3,"blocks":[[1],[2],[3]]})").out)).empty());

  r = run({"ncl", "--diagram", R"({"n":4,"blocks":[[1,3],[2,4]]})"});
  CHECK(r.code == kInvalidInput);
  CHECK(r.err.find("NCL2") != std::string::npos);

  const auto all = lines(run({"ncl", "--enumerate", "--n", "4"}).out);
  CHECK(all.back() == R"({"count":22})");
}

TEST_CASE("cli render and output files") {
  const auto r = run({"render", "--diagram", R"({"n":3,"algebra":"A","arcs":[]})"});
  CHECK(r.out == "1   2   3   4\n");
  const auto path = std::filesystem::temp_directory_path() / "monobrick_cli_test.json";
  CHECK(run({"enumerate", "--algebra", "A", "--n", "2", "--out", path.string()}).code == kOk);
  std::ifstream f(path);
  std::string text((std::istreambuf_iterator<char>(f)), {});
  CHECK(lines(text).back() == R"({"count":6})");
  std::filesystem::remove(path);
}

TEST_CASE("cli oracle") {
  auto r = run({"oracle", "verify", "--preset", "nak2"});
  CHECK(r.code == kOk);
  CHECK(r.out.find("8 monobricks") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  r = run({"oracle", "verify", "--preset", "a3_source", "--format", "json"});
  CHECK(r.code == kOk);
  const auto j = Json::parse(r.out);
  CHECK(j["monobricks"] == 26);
  CHECK(j["all_passed"] == true);
  CHECK(run({"oracle", "verify", "--preset", "d4"}).code == kUsage);
  CHECK(run({"oracle", "verify", "--preset", "nak2", "--char", "4"}).code == kUsage);
}
