#include "monobrick/oracle/fixtures.hpp"

namespace monobrick::oracle {

namespace {

using Labels = std::vector<std::string>;
constexpr auto kItself = std::nullopt;

TableRow row(Labels m, Labels white, std::optional<Labels> mmax, std::optional<Labels> closure,
             ClosureFailure failure = ClosureFailure::None) {
  return TableRow{std::move(m), std::move(white), std::move(mmax), std::move(closure),
                  std::nullopt, std::nullopt, failure};
}

TableRow verdict_row(Labels m, Labels white, bool wide, std::optional<Labels> mmax, bool tf,
                     std::optional<Labels> closure) {
  return TableRow{std::move(m), std::move(white), std::move(mmax), std::move(closure),
                  wide, tf, ClosureFailure::None};
}

}  // namespace

const TableFixture& linear_a3_table() {
  static const TableFixture t{
      "monobricks over k[1<-2<-3]",
      "a3_linear",
      {
          verdict_row({"1", "2/1"}, {}, false, Labels{"2/1"}, true, kItself),
          verdict_row({"1", "3/2/1"}, {}, false, Labels{"3/2/1"}, false, Labels{"1", "2/1", "3/2/1"}),
          verdict_row({"1", "2"}, {"2/1"}, true, kItself, true, kItself),
          verdict_row({"1", "3/2"}, {"3/2/1"}, true, kItself, false, Labels{"1", "2", "3/2"}),
          verdict_row({"1", "3"}, {}, true, kItself, true, kItself),
          verdict_row({"2/1", "3/2/1"}, {}, false, Labels{"3/2/1"}, false, Labels{"1", "2/1", "3/2/1"}),
          verdict_row({"2/1", "3"}, {"3/2/1"}, true, kItself, false, Labels{"1", "2/1", "3"}),
          verdict_row({"2", "3/2/1"}, {}, true, kItself, false, Labels{"1", "3/2/1", "2"}),
          verdict_row({"2", "3/2"}, {}, false, Labels{"3/2"}, true, kItself),
          verdict_row({"2", "3"}, {"3/2"}, true, kItself, true, kItself),
          verdict_row({"1", "2/1", "3/2/1"}, {}, false, Labels{"3/2/1"}, true, kItself),
          verdict_row({"1", "2/1", "3"}, {"3/2/1"}, false, Labels{"2/1", "3"}, true, kItself),
          verdict_row({"1", "3/2/1", "2"}, {"2/1"}, false, Labels{"2", "3/2/1"}, true, kItself),
          verdict_row({"1", "2", "3/2"}, {"2/1", "3/2/1"}, false, Labels{"1", "3/2"}, true, kItself),
          verdict_row({"1", "2", "3"}, {"2/1", "3/2/1", "3/2"}, true, kItself, true, kItself),
      }};
  return t;
}

const TableFixture& source_a3_table() {
  const Labels diamond{"2", "3/2", "1/2", "13/2"};
  static const TableFixture t{
      "monobricks over k[1->2<-3]",
      "a3_source",
      {
          row({"2", "1/2"}, {}, Labels{"1/2"}, kItself),
          row({"2", "3/2"}, {}, Labels{"3/2"}, kItself),
          row({"2", "13/2"}, {"1/2", "3/2"}, Labels{"13/2"}, diamond, ClosureFailure::NotSummandClosed),
          row({"2", "1"}, {"1/2"}, kItself, kItself),
          row({"2", "3"}, {"3/2"}, kItself, kItself),
          row({"1/2", "3/2"}, {}, kItself, Labels{"3/2", "2", "1/2"}),
          // 2 is a submodule with only injective maps in, so the closure is the diamond.
          row({"1/2", "13/2"}, {}, Labels{"13/2"}, diamond),
          row({"3/2", "13/2"}, {}, Labels{"13/2"}, diamond),
          row({"1/2", "3"}, {"13/2"}, kItself, Labels{"2", "1/2", "3"}),
          row({"3/2", "1"}, {"13/2"}, kItself, Labels{"2", "3/2", "1"}),
          row({"1", "3"}, {}, kItself, kItself),
          row({"3/2", "2", "1/2"}, {}, Labels{"1/2", "3/2"}, kItself),
          row({"2", "1/2", "13/2"}, {"3/2"}, Labels{"13/2"}, diamond, ClosureFailure::NotSummandClosed),
          row({"2", "3/2", "13/2"}, {"1/2"}, Labels{"13/2"}, diamond, ClosureFailure::NotSummandClosed),
          row({"2", "1/2", "3"}, {"13/2", "3/2"}, Labels{"1/2", "3"}, kItself),
          row({"2", "3/2", "1"}, {"13/2", "1/2"}, Labels{"3/2", "1"}, kItself),
          row({"3/2", "13/2", "1/2"}, {}, Labels{"13/2"}, diamond, ClosureFailure::NotKernelClosed),
          row({"1", "2", "3"}, {"1/2", "13/2", "3/2"}, kItself, kItself),
          row(diamond, {}, Labels{"13/2"}, kItself),
      }};
  return t;
}

const TableFixture& nakayama2_table() {
  auto plain = [](Labels m, std::optional<Labels> mmax, std::optional<Labels> closure) {
    return TableRow{std::move(m), std::nullopt, std::move(mmax), std::move(closure),
                    std::nullopt, std::nullopt, ClosureFailure::None};
  };
  static const TableFixture t{
      "monobricks over cyclic Nakayama algebras with two simples",
      "nak2",
      {
          plain({}, kItself, kItself),
          plain({"1"}, kItself, kItself),
          plain({"2"}, kItself, kItself),
          plain({"1/2"}, kItself, Labels{"2", "1/2"}),
          plain({"2/1"}, kItself, Labels{"1", "2/1"}),
          plain({"1", "2/1"}, Labels{"2/1"}, kItself),
          plain({"2", "1/2"}, Labels{"1/2"}, kItself),
          plain({"1", "2"}, kItself, kItself),
      }};
  return t;
}

const TableFixture* fixture_for(const std::string& preset) {
  if (preset == "a3_linear") return &linear_a3_table();
  if (preset == "a3_source") return &source_a3_table();
  if (preset == "nak2") return &nakayama2_table();
  return nullptr;
}

}  // namespace monobrick::oracle
