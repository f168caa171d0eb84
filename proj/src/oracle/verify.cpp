#include "monobrick/oracle/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "monobrick/brick_poset.hpp"
#include "monobrick/enumerate.hpp"

namespace monobrick::oracle {

namespace {

class Checker {
 public:
  explicit Checker(std::vector<CheckResult>& out) : out_(out) {}

  /// Starts a check; failures recorded through fail() keep the first message.
  void begin(std::string name) { out_.push_back({std::move(name), true, {}}); }
  void fail(const std::string& why) {
    auto& c = out_.back();
    if (c.passed) c.detail = why;
    c.passed = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
  void pass_detail(const std::string& d) {
    if (out_.back().passed) out_.back().detail = d;
  }

 private:
  std::vector<CheckResult>& out_;
};

BrickSet sorted(BrickSet s) {
  std::sort(s.begin(), s.end());
  return s;
}

std::string set_str(const Universe& u, const BrickSet& s) { return brick_set_string(u.preset(), s); }

std::string indices_str(const QuiverPreset& p, const std::set<int>& s) {
  return brick_set_string(p, BrickSet(s.begin(), s.end()));
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::size_t expected_monobrick_count(const std::string& preset) {
  static const std::map<std::string, std::size_t> counts{
      {"a2_linear", 6}, {"a3_linear", 22}, {"a3_source", 26}, {"nak2", 8}, {"b3", 38}};
  return counts.at(preset);
}

BrickSet brick_set(const QuiverPreset& p, const std::vector<std::string>& labels) {
  BrickSet out;
  for (const auto& l : labels) out.push_back(p.index_of(l));
  return sorted(std::move(out));
}

std::string brick_set_string(const QuiverPreset& p, const BrickSet& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ", ";
    out += s[k] >= 0 ? p.indecomposables[static_cast<std::size_t>(s[k])].label : "<decomposable>";
  }
  return out + "}";
}

std::vector<CheckResult> check_table(const Universe& u, const BrickRelations& rel, const TableFixture& table) {
  std::vector<CheckResult> out;
  Checker c(out);
  const auto& p = u.preset();
  std::size_t row_no = 0;
  for (const auto& row : table.rows) {
    ++row_no;
    const BrickSet mm = brick_set(p, row.monobrick);
    const std::string tag = table.preset + " row " + std::to_string(row_no) + " " + set_str(u, mm);
    c.begin(tag);
    if (!rel.is_monobrick(mm)) {
      c.fail("not a monobrick");
      continue;
    }
    const SubcatSet e = filt_bricks(u, mm);
    const BrickSet want_mmax = row.mmax ? brick_set(p, *row.mmax) : mm;
    const BrickSet want_closure = row.closure ? brick_set(p, *row.closure) : mm;

    BrickSet got_mmax = rel.mmax(mm);
    c.expect(got_mmax == want_mmax, "mmax " + set_str(u, got_mmax) + " != " + set_str(u, want_mmax));
    BrickSet via_w = simp_bricks(w_map(e));
    c.expect(via_w == want_mmax, "simp W(Filt) " + set_str(u, via_w) + " != " + set_str(u, want_mmax));

    BrickSet got_closure = rel.cofinal_closure(mm);
    c.expect(got_closure == want_closure,
             "closure " + set_str(u, got_closure) + " != " + set_str(u, want_closure));
    BrickSet via_f = simp_bricks(f_map(u, e.members()));
    c.expect(via_f == want_closure, "simp F(Filt) " + set_str(u, via_f) + " != " + set_str(u, want_closure));

    const bool want_wide = row.wide.value_or(!row.mmax.has_value());
    const bool want_tf = row.torsion_free.value_or(!row.closure.has_value());
    const auto& flags = e.flags();
    c.expect(flags.wide() == want_wide, "wide flag " + std::to_string(flags.wide()) + "; " + flags.to_string());
    c.expect((w_map(e) == e) == want_wide, "W(E) == E disagrees with the wide column");
    c.expect(flags.torsion_free() == want_tf, "torsion-free flag " + std::to_string(flags.torsion_free()));

    if (row.white) {
      auto got_white = white_vertices(e, mm);
      auto want = brick_set(p, *row.white);
      std::set<int> want_white(want.begin(), want.end());
      c.expect(got_white == want_white,
               "white " + indices_str(p, got_white) + " != " + indices_str(p, want_white));
      std::set<int> black(mm.begin(), mm.end());
      for (int k : e.indecomposables()) {
        c.expect(black.count(k) || want_white.count(k), "indecomposable member outside the picture");
      }
    }

    switch (row.failure) {
      case ClosureFailure::None:
        c.expect(flags.summands && flags.kernels && flags.images,
                 "expected closed under kernels and images: " + flags.to_string());
        break;
      case ClosureFailure::NotSummandClosed:
        c.expect(!flags.summands && !flags.kernels && !flags.images,
                 "expected (*) summand failure: " + flags.to_string());
        break;
      case ClosureFailure::NotKernelClosed:
        c.expect(flags.summands && flags.images && !flags.kernels,
                 "expected (**) kernel failure: " + flags.to_string());
        break;
    }
    c.pass_detail("mmax " + set_str(u, got_mmax) + ", closure " + set_str(u, got_closure));
  }
  return out;
}

std::vector<CheckResult> check_arc_agreement(const Universe& u, const BrickRelations& rel) {
  std::vector<CheckResult> out;
  const auto& p = u.preset();
  if (!p.arc_model) return out;
  Checker c(out);
  const AlgebraSpec spec = *p.arc_model;
  const int n = spec.marks();
  const auto arcs = spec.arcs();

  c.begin("arc labels biject onto bricks");
  std::map<Arc, int> brick_of;
  std::set<int> hit;
  for (const auto& a : arcs) {
    int idx = -1;
    try {
      idx = p.index_of(module_label(a, n));
    } catch (const std::out_of_range& ex) {
      c.fail(ex.what());
      continue;
    }
    brick_of[a] = idx;
    hit.insert(idx);
  }
  c.expect(hit.size() == arcs.size() && hit.size() == rel.bricks().size(),
           "arcs " + std::to_string(arcs.size()) + " vs bricks " + std::to_string(rel.bricks().size()));
  if (!out.back().passed) return out;
  c.pass_detail(std::to_string(arcs.size()) + " arcs");

  c.begin("hom_kind matches matrix hom spaces");
  for (const auto& a : arcs) {
    for (const auto& b : arcs) {
      const int x = brick_of[a], y = brick_of[b];
      MorphismKind oracle = MorphismKind::Zero;
      if (a == b) {
        oracle = rel.hom_dim(x, y) == 1 ? MorphismKind::Iso : MorphismKind::NonzeroNonInjection;
      } else if (rel.maps(x, y) == PairMaps::InjectionsOnly) {
        oracle = MorphismKind::Injection;
      } else if (rel.maps(x, y) == PairMaps::HasNonInjection) {
        oracle = MorphismKind::NonzeroNonInjection;
      }
      auto arc_kind = hom_kind(a, b, spec);
      c.expect(arc_kind == oracle, module_label(a, n) + " -> " + module_label(b, n) + ": arc says " +
                                       std::string(to_string(arc_kind)) + ", matrices say " +
                                       std::string(to_string(oracle)));
      c.expect(rel.hom_dim(x, y) <= 1, "hom space of dimension > 1");
    }
  }
  c.pass_detail(std::to_string(arcs.size() * arcs.size()) + " ordered pairs");

  c.begin("crossing kinds match pairwise semibrick/monobrick");
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      BrickSet pair = sorted({brick_of[arcs[i]], brick_of[arcs[j]]});
      auto k = crossing_kind(arcs[i], arcs[j], n);
      bool semi = rel.is_semibrick(pair), mono = rel.is_monobrick(pair);
      c.expect((k == CrossKind::NonCrossing) == semi, "non-crossing vs semibrick at " + set_str(u, pair));
      c.expect((k == CrossKind::MonoCrossing) == (mono && !semi), "mono-crossing vs monobrick at " + set_str(u, pair));
    }
  }

  const auto brute = monobricks_bruteforce(rel);
  std::set<BrickSet> brute_set(brute.begin(), brute.end());
  auto to_bricks = [&](const ArcDiagram& d) {
    BrickSet s;
    for (const auto& a : d.arcs()) s.push_back(brick_of[a]);
    return sorted(std::move(s));
  };

  c.begin("arc monobricks equal brute-force monobricks");
  std::set<BrickSet> from_arcs;
  enumerate(spec, DiagramKind::Monobrick, [&](const ArcDiagram& d) { from_arcs.insert(to_bricks(d)); });
  c.expect(from_arcs == brute_set, "arc side " + std::to_string(from_arcs.size()) + " vs matrices " +
                                       std::to_string(brute_set.size()));
  c.pass_detail(std::to_string(from_arcs.size()) + " monobricks");

  c.begin("arc semibricks equal brute-force semibricks");
  std::set<BrickSet> semi_arcs, semi_brute;
  enumerate(spec, DiagramKind::Semibrick, [&](const ArcDiagram& d) { semi_arcs.insert(to_bricks(d)); });
  for (const auto& s : brute) {
    if (rel.is_semibrick(s)) semi_brute.insert(s);
  }
  c.expect(semi_arcs == semi_brute, "semibrick sets differ");
  c.pass_detail(std::to_string(semi_arcs.size()) + " semibricks");

  c.begin("arc mmax and cofinal closure match matrices");
  enumerate(spec, DiagramKind::Monobrick, [&](const ArcDiagram& d) {
    MonobrickPoset m(d);
    auto s = to_bricks(d);
    auto arc_max = to_bricks(mmax(m));
    auto arc_cl = to_bricks(cofinal_closure(m).diagram());
    c.expect(arc_max == rel.mmax(s), "mmax differs at " + d.to_string());
    c.expect(arc_cl == rel.cofinal_closure(s), "closure differs at " + d.to_string());
  });
  return out;
}

SchurCensus schur_census(const Universe& u, const BrickRelations& rel) {
  SchurCensus census;
  const auto& all = rel.bricks();
  for (std::size_t mask = 0; mask < (std::size_t{1} << all.size()); ++mask) {
    BrickSet s;
    for (std::size_t k = 0; k < all.size(); ++k) {
      if (mask & (std::size_t{1} << k)) s.push_back(all[k]);
    }
    SubcatSet e = filt_bricks(u, s);
    const bool schur = is_left_schur(e);
    const bool kic = e.flags().kernel_image_closed();
    ++census.generated;
    if (schur == kic) {
      ++census.agreements;
    } else if (schur) {
      census.violations.push_back(s);
    } else {
      census.converse_failures.push_back(s);
    }
  }
  return census;
}

std::vector<CheckResult> check_identities(const Universe& u, const BrickRelations& rel) {
  std::vector<CheckResult> out;
  Checker c(out);
  const auto& p = u.preset();

  c.begin("indecomposables pairwise non-isomorphic");
  for (std::size_t x = 0; x < p.indecomposables.size(); ++x) {
    for (std::size_t y = x + 1; y < p.indecomposables.size(); ++y) {
      c.expect(!are_isomorphic_exhaustive(u.field(), p.quiver, p.indecomposables[x].rep, p.indecomposables[y].rep),
               p.indecomposables[x].label + " ~ " + p.indecomposables[y].label);
    }
  }
  c.pass_detail(std::to_string(p.indecomposables.size()) + " indecomposables, universe of " +
                std::to_string(u.size()) + " classes");

  const auto mbricks = monobricks_bruteforce(rel);

  c.begin("monobrick census");
  c.expect(mbricks.size() == expected_monobrick_count(p.name),
           std::to_string(mbricks.size()) + " != " + std::to_string(expected_monobrick_count(p.name)));
  c.pass_detail(std::to_string(mbricks.size()) + " monobricks over " + std::to_string(rel.bricks().size()) +
                " bricks");

  std::vector<SubcatSet> filts;
  for (const auto& mm : mbricks) filts.push_back(filt_bricks(u, mm));

  c.begin("simp(Filt M) = M and Filt(simp E) = E");
  for (std::size_t k = 0; k < mbricks.size(); ++k) {
    const auto s = simp(filts[k]);
    c.expect(simp_bricks(filts[k]) == mbricks[k], "simp differs at " + set_str(u, mbricks[k]));
    c.expect(filt(u, s) == filts[k], "Filt(simp) differs at " + set_str(u, mbricks[k]));
  }

  c.begin("Filt M is left Schur");
  for (std::size_t k = 0; k < mbricks.size(); ++k) {
    c.expect(is_left_schur(filts[k]), "not left Schur at " + set_str(u, mbricks[k]));
  }

  c.begin("cofinal closure = simp F(M)");
  for (std::size_t k = 0; k < mbricks.size(); ++k) {
    auto via_f = simp_bricks(f_map(u, filts[k].members()));
    c.expect(via_f == rel.cofinal_closure(mbricks[k]), "differs at " + set_str(u, mbricks[k]));
  }

  c.begin("Filt M torsion-free iff M cofinally closed");
  std::size_t cc = 0;
  for (std::size_t k = 0; k < mbricks.size(); ++k) {
    bool closed = rel.cofinal_closure(mbricks[k]) == mbricks[k];
    cc += closed;
    c.expect(filts[k].flags().torsion_free() == closed, "differs at " + set_str(u, mbricks[k]));
  }
  c.pass_detail(std::to_string(cc) + " torsion-free classes");

  c.begin("W(Filt M) = Filt(mmax M)");
  std::size_t semibricks = 0;
  for (std::size_t k = 0; k < mbricks.size(); ++k) {
    semibricks += rel.is_semibrick(mbricks[k]);
    c.expect(w_map(filts[k]) == filt_bricks(u, rel.mmax(mbricks[k])), "differs at " + set_str(u, mbricks[k]));
  }
  c.pass_detail(std::to_string(semibricks) + " semibricks");

  c.begin("mmax(cofinal closure M) = mmax M");
  for (const auto& mm : mbricks) {
    c.expect(rel.mmax(rel.cofinal_closure(mm)) == rel.mmax(mm), "differs at " + set_str(u, mm));
  }

  c.begin("semibrick iff mmax M = M iff wide");
  for (std::size_t k = 0; k < mbricks.size(); ++k) {
    const bool semi = rel.is_semibrick(mbricks[k]);
    c.expect(semi == (rel.mmax(mbricks[k]) == mbricks[k]), "mmax differs at " + set_str(u, mbricks[k]));
    c.expect(semi == filts[k].flags().wide(), "wide flag differs at " + set_str(u, mbricks[k]));
  }

  std::vector<SubcatSet> wides, torfs;
  for (const auto& e : filts) {
    if (e.flags().wide()) wides.push_back(e);
    if (e.flags().torsion_free()) torfs.push_back(e);
  }

  c.begin("W o F = id on wide subcategories");
  for (const auto& w : wides) {
    auto t = f_map(u, w.members());
    c.expect(t.flags().torsion_free(), "F(W) not torsion-free at " + w.to_string());
    c.expect(w_map(t) == w, "W(F(W)) != W at " + w.to_string());
  }

  c.begin("F o W = id on torsion-free classes");
  for (const auto& t : torfs) {
    auto w = w_map(t);
    c.expect(w.flags().wide(), "W(T) not wide");
    c.expect(f_map(u, w.members()) == t, "F(W(T)) != T at " + t.to_string());
  }
  c.expect(wides.size() == semibricks && torfs.size() == cc, "bijection counts disagree");
  c.pass_detail(std::to_string(wides.size()) + " wide <-> " + std::to_string(torfs.size()) + " torsion-free");

  c.begin("finite counts consistent");
  {
    std::set<BrickSet> closures, maxima;
    for (const auto& mm : mbricks) {
      if (rel.is_semibrick(mm)) closures.insert(rel.cofinal_closure(mm));
      if (rel.cofinal_closure(mm) == mm) maxima.insert(rel.mmax(mm));
    }
    c.expect(closures.size() == semibricks, "closure is not injective on semibricks");
    c.expect(maxima.size() == semibricks, "mmax is not onto semibricks from cofinally closed ones");
    c.expect(semibricks <= cc && cc <= mbricks.size(), "count ordering broken");
    for (const auto& mm : mbricks) {
      c.expect(rel.is_monobrick(rel.cofinal_closure(mm)), "closure is not a monobrick");
      for (int x : mm) {
        auto top = rel.mmax(mm);
        bool below = std::any_of(top.begin(), top.end(), [&](int y) { return x == y || rel.has_injection(x, y); });
        c.expect(below, "element above no maximal element");
      }
    }
    c.pass_detail(std::to_string(rel.bricks().size()) + " bricks, " + std::to_string(semibricks) + " semibricks, " +
                  std::to_string(cc) + " cofinally closed, " + std::to_string(mbricks.size()) + " monobricks");
  }

  return out;
}

std::vector<CheckResult> check_schur(const Universe& u, const BrickRelations& rel) {
  std::vector<CheckResult> out;
  Checker c(out);
  const auto census = schur_census(u, rel);
  c.begin("closed under extensions, kernels, images implies left Schur");
  c.expect(census.converse_failures.empty(),
           census.converse_failures.empty() ? "" : "fails at Filt " + set_str(u, census.converse_failures.front()));
  c.pass_detail(std::to_string(census.generated) + " generated subcategories");

  if (u.preset().arc_model) {
    c.begin("left Schur iff closed under extensions, kernels, images");
    c.expect(census.violations.empty(),
             census.violations.empty() ? "" : "violated at Filt " + set_str(u, census.violations.front()));
    c.pass_detail(std::to_string(census.agreements) + "/" + std::to_string(census.generated) + " agree");
  } else {
    c.begin("left Schur without kernel/image closure exists");
    const auto mbricks = monobricks_bruteforce(rel);
    std::size_t among_monobricks = 0;
    std::string which;
    for (const auto& mm : mbricks) {
      if (filt_bricks(u, mm).flags().kernel_image_closed()) continue;
      ++among_monobricks;
      which += " Filt" + set_str(u, mm);
    }
    c.expect(among_monobricks >= 4, std::to_string(among_monobricks) + " violations among monobricks");
    c.pass_detail(std::to_string(among_monobricks) + " of " + std::to_string(mbricks.size()) +
                  " left Schur subcategories are not closed under kernels and images:" + which);
  }

  return out;
}

VerifyReport verify_preset(const Universe& u) {
  VerifyReport report;
  report.preset = u.preset().name;
  report.dim_bound = u.dim_bound();
  report.characteristic = u.field().characteristic();
  const BrickRelations rel(u);
  report.monobricks = monobricks_bruteforce(rel).size();
  auto append = [&](std::vector<CheckResult> more) {
    report.checks.insert(report.checks.end(), more.begin(), more.end());
  };
  append(check_identities(u, rel));
  append(check_schur(u, rel));
  if (const auto* table = fixture_for(u.preset().name)) append(check_table(u, rel, *table));
  append(check_arc_agreement(u, rel));
  return report;
}

}  // namespace monobrick::oracle
