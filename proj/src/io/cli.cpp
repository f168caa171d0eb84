#include "monobrick/io/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include "monobrick/brick_poset.hpp"
#include "monobrick/enumerate.hpp"
#include "monobrick/errors.hpp"
#include "monobrick/io/json_codec.hpp"
#include "monobrick/io/render.hpp"
#include "monobrick/linked_partition.hpp"
#include "monobrick/oracle/verify.hpp"

namespace monobrick::io {

namespace {

enum class Format { Json, Csv, Markdown, Ascii };

struct RunConfig {
  std::string algebra;
  int n = -1;
  int min_n = 1;
  int max_n = -1;
  std::string kind = "monobrick";
  std::string preset;
  int dim_bound = 6;
  int characteristic = 2;
  std::optional<Format> format;
  std::string out_path;
  std::string in_path;
  std::string diagram;
  unsigned workers = 1;
  std::optional<int> budget_a;
  std::optional<int> budget_b;
  bool hasse = false;
  bool enumerate_all = false;
};

const std::map<std::string, Format> kFormats{
    {"json", Format::Json}, {"csv", Format::Csv}, {"markdown", Format::Markdown}, {"ascii", Format::Ascii}};

const std::map<std::string, DiagramKind> kKinds{{"monobrick", DiagramKind::Monobrick},
                                                {"semibrick", DiagramKind::Semibrick},
                                                {"cofinally-closed", DiagramKind::CofinallyClosed}};

AlgebraSpec algebra_of(const RunConfig& c, int n) {
  if (c.algebra == "A") return AlgebraSpec::linear_a(n);
  return AlgebraSpec::cyclic_b(n);
}

EnumerationOptions options_of(const RunConfig& c) {
  EnumerationOptions o;
  o.budget = EnumerationBudget::from_environment();
  if (c.budget_a) o.budget.max_linear_a = *c.budget_a;
  if (c.budget_b) o.budget.max_cyclic_b = *c.budget_b;
  o.workers = std::max(1u, c.workers);
  return o;
}

std::string arcs_text(const ArcDiagram& d) {
  std::string s;
  for (const auto& a : d.arcs()) {
    if (!s.empty()) s += ' ';
    s += "(" + std::to_string(a.start) + "," + std::to_string(a.end) + ")";
  }
  return s;
}

Json read_json(const RunConfig& c, std::istream& in) {
  std::string text;
  if (!c.diagram.empty()) {
    text = c.diagram;
  } else if (!c.in_path.empty()) {
    std::ifstream f(c.in_path);
    if (!f) throw std::invalid_argument("cannot read " + c.in_path);
    text.assign(std::istreambuf_iterator<char>(f), {});
  } else {
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("input is not JSON: ") + e.what());
  }
}

void write_diagram(std::ostream& os, const ArcDiagram& d, Format f) {
  switch (f) {
    case Format::Json: os << diagram_to_json(d).dump() << '\n'; break;
    case Format::Ascii: os << render_ascii(d); break;
    case Format::Csv:
      os << "start,end\n";
      for (const auto& a : d.arcs()) os << a.start << ',' << a.end << '\n';
      break;
    case Format::Markdown:
      os << "| start | end |\n|---|---|\n";
      for (const auto& a : d.arcs()) os << "| " << a.start << " | " << a.end << " |\n";
      break;
  }
}

int cmd_enumerate(const RunConfig& c, std::ostream& os) {
  const AlgebraSpec spec = algebra_of(c, c.n);
  const Format f = c.format.value_or(Format::Json);
  std::uint64_t index = 0;
  if (f == Format::Csv) os << "index,arcs\n";
  if (f == Format::Markdown) os << "| # | arcs |\n|---|---|\n";
  auto count = enumerate(
      spec, kKinds.at(c.kind),
      [&](const ArcDiagram& d) {
        ++index;
        switch (f) {
          case Format::Json: os << diagram_to_json(d).dump() << '\n'; break;
          case Format::Csv: os << index << ",\"" << arcs_text(d) << "\"\n"; break;
          case Format::Markdown: os << "| " << index << " | " << arcs_text(d) << " |\n"; break;
          case Format::Ascii: os << '#' << index << '\n' << render_ascii(d) << '\n'; break;
        }
      },
      options_of(c));
  if (f == Format::Json) {
    os << Json{{"count", count}}.dump() << '\n';
  } else if (f == Format::Csv) {
    os << "count," << count << '\n';
  } else {
    os << (f == Format::Markdown ? "\n" : "") << "count: " << count << '\n';
  }
  return kOk;
}

int cmd_count(const RunConfig& c, std::ostream& os) {
  const int max_n = c.max_n >= 0 ? c.max_n : (c.algebra == "A" ? 7 : 6);
  const Format f = c.format.value_or(Format::Markdown);
  const auto opts = options_of(c);
  Json rows = Json::array();
  bool all = true;
  if (f == Format::Csv) os << "n,enumerated,closed-form,recurrence-ok\n";
  if (f == Format::Markdown || f == Format::Ascii) {
    os << "| n | enumerated | closed-form | recurrence-ok |\n|---|---|---|---|\n";
  }
  for (int n = c.min_n; n <= max_n; ++n) {
    const auto r = count_report(algebra_of(c, n), opts);
    const bool rec = recurrence_check(n);
    all = all && r.matches() && rec;
    const std::string e = r.enumerated.str(), cf = r.closed_form.str();
    const char* ok = rec ? "true" : "false";
    switch (f) {
      case Format::Json:
        rows.push_back({{"algebra", c.algebra}, {"n", n}, {"enumerated", e}, {"closed_form", cf},
                        {"recurrence_ok", rec}});
        break;
      case Format::Csv: os << n << ',' << e << ',' << cf << ',' << ok << '\n'; break;
      default: os << "| " << n << " | " << e << " | " << cf << " | " << ok << " |\n"; break;
    }
  }
  if (f == Format::Json) os << rows.dump(2) << '\n';
  return all ? kOk : kChecksFailed;
}

int cmd_poset(const RunConfig& c, std::istream& in, std::ostream& os, bool closure) {
  const MonobrickPoset input(diagram_from_json(read_json(c, in)));
  const MonobrickPoset result = closure ? cofinal_closure(input) : MonobrickPoset(mmax(input));
  const Format f = c.format.value_or(Format::Json);
  const auto pairs = c.hasse ? hasse(result) : std::vector<std::pair<Arc, Arc>>{};
  if (f == Format::Json) {
    Json j = diagram_to_json(result.diagram());
    if (c.hasse) {
      Json h = Json::array();
      for (const auto& [lo, hi] : pairs) h.push_back(Json::array({arc_to_json(lo), arc_to_json(hi)}));
      j["hasse"] = std::move(h);
    }
    os << j.dump() << '\n';
    return kOk;
  }
  write_diagram(os, result.diagram(), f);
  for (const auto& [lo, hi] : pairs) {
    os << "(" << lo.start << "," << lo.end << ") < (" << hi.start << "," << hi.end << ")\n";
  }
  return kOk;
}

int cmd_ncl(const RunConfig& c, std::istream& in, std::ostream& os) {
  if (c.enumerate_all) {
    if (c.n < 1) throw std::invalid_argument("--enumerate needs --n >= 1");
    const auto parts = enumerate_ncl_partitions(c.n);
    for (const auto& p : parts) {
      os << Json{{"partition", partition_to_json(p)}, {"diagram", diagram_to_json(to_diagram(p))}}.dump() << '\n';
    }
    os << Json{{"count", parts.size()}}.dump() << '\n';
    return kOk;
  }
  const Json j = read_json(c, in);
  if (j.contains("blocks")) {
    os << diagram_to_json(to_diagram(partition_from_json(j))).dump() << '\n';
  } else {
    os << partition_to_json(from_diagram(diagram_from_json(j))).dump() << '\n';
  }
  return kOk;
}

int cmd_oracle(const RunConfig& c, std::ostream& os) {
  const oracle::Universe u(oracle::make_preset(c.preset), c.dim_bound, c.characteristic);
  const auto report = oracle::verify_preset(u);
  const std::size_t passed = static_cast<std::size_t>(
      std::count_if(report.checks.begin(), report.checks.end(), [](const auto& k) { return k.passed; }));
  if (c.format.value_or(Format::Ascii) == Format::Json) {
    Json checks = Json::array();
    for (const auto& k : report.checks) checks.push_back({{"name", k.name}, {"passed", k.passed}, {"detail", k.detail}});
    os << Json{{"preset", report.preset},       {"dim_bound", report.dim_bound},
               {"characteristic", report.characteristic}, {"universe", u.size()},
               {"monobricks", report.monobricks}, {"checks", checks},
               {"all_passed", report.all_passed()}}
              .dump(2)
       << '\n';
  } else {
    for (const auto& k : report.checks) {
      os << (k.passed ? "PASS " : "FAIL ") << k.name;
      if (!k.detail.empty()) os << ": " << k.detail;
      os << '\n';
    }
    os << report.preset << " (dim <= " << report.dim_bound << ", p = " << report.characteristic << ", "
       << u.size() << " classes): " << report.monobricks << " monobricks, " << passed << "/"
       << report.checks.size() << " checks passed\n";
  }
  return report.all_passed() ? kOk : kChecksFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Monobricks, arc diagrams and their subcategories", "monobrick"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  auto add_format = [&](CLI::App* s) {
    s->add_option("--format", c.format, "json, csv, markdown or ascii")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
    s->add_option("--out", c.out_path, "write output to a file");
  };
  auto add_algebra = [&](CLI::App* s) {
    s->add_option("--algebra", c.algebra, "A (linear) or B (cyclic)")->required()->check(CLI::IsMember({"A", "B"}));
    s->add_option("--workers", c.workers, "enumeration threads")->check(CLI::Range(1u, 256u));
    s->add_option("--budget-a", c.budget_a, "largest A_n allowed");
    s->add_option("--budget-b", c.budget_b, "largest B_n allowed");
  };
  auto add_input = [&](CLI::App* s) {
    s->add_option("--in", c.in_path, "JSON input file (default: stdin)");
    s->add_option("--diagram", c.diagram, "JSON input given inline");
  };

  auto* en = app.add_subcommand("enumerate", "list diagrams of one kind");
  add_algebra(en);
  en->add_option("--n", c.n, "algebra index")->required();
  en->add_option("--kind", c.kind, "monobrick, semibrick or cofinally-closed")->check(CLI::IsMember({"monobrick", "semibrick", "cofinally-closed"}));
  add_format(en);

  auto* co = app.add_subcommand("count", "enumerated counts against closed forms");
  add_algebra(co);
  co->add_option("--min-n", c.min_n)->check(CLI::NonNegativeNumber);
  co->add_option("--max-n", c.max_n, "default 7 for A, 6 for B");
  add_format(co);

  auto* cl = app.add_subcommand("closure", "cofinal closure of a monobrick diagram");
  auto* mm = app.add_subcommand("mmax", "maximal arcs of a monobrick diagram");
  for (auto* s : {cl, mm}) {
    add_input(s);
    s->add_flag("--hasse", c.hasse, "also emit the covering relation");
    add_format(s);
  }

  auto* ncl = app.add_subcommand("ncl", "convert between linked partitions and arc diagrams");
  add_input(ncl);
  ncl->add_flag("--enumerate", c.enumerate_all, "list every partition of [n] with its diagram");
  ncl->add_option("--n", c.n);
  add_format(ncl);

  auto* orc = app.add_subcommand("oracle", "matrix-level verification");
  orc->require_subcommand(1);
  auto* ver = orc->add_subcommand("verify", "run the invariant suite on a preset");
  ver->add_option("--preset", c.preset)->required();
  ver->add_option("--dim-bound", c.dim_bound, "largest total dimension in the universe");
  ver->add_option("--char", c.characteristic, "field characteristic")->check(CLI::IsMember({2, 3, 5, 7}));
  add_format(ver);

  auto* re = app.add_subcommand("render", "draw a diagram");
  add_input(re);
  add_format(re);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::ofstream file;
  if (!c.out_path.empty()) {
    file.open(c.out_path);
    if (!file) {
      err << "error: cannot write " << c.out_path << '\n';
      return kUsage;
    }
  }
  std::ostream& os = c.out_path.empty() ? out : file;

  try {
    if (en->parsed()) return cmd_enumerate(c, os);
    if (co->parsed()) return cmd_count(c, os);
    if (cl->parsed()) return cmd_poset(c, in, os, true);
    if (mm->parsed()) return cmd_poset(c, in, os, false);
    if (ncl->parsed()) return cmd_ncl(c, in, os);
    if (ver->parsed()) return cmd_oracle(c, os);
    if (re->parsed()) {
      write_diagram(os, diagram_from_json(read_json(c, in)), c.format.value_or(Format::Ascii));
      return kOk;
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace monobrick::io
