// Acceptance run: one PASS/FAIL line per criterion. Reports that the
// criteria ask to keep are written to the directory given as argv[1]
// (default: acceptance-reports in the working directory).

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "mbraid.hpp"
#include "support/random_words.hpp"

using namespace mbraid;
using mbraid::testing::Rng;
using mbraid::testing::pick;

namespace {

std::filesystem::path archive_dir = "acceptance-reports";

void archive(std::string const& name, std::string const& text) {
  std::filesystem::create_directories(archive_dir);
  std::ofstream(archive_dir / name) << text;
}

GroupPtr group(std::string const& name) {
  if (name == "S3") {
    return std::make_shared<FiniteGroupTable const>(
        FiniteGroupTable::symmetric3());
  }
  return std::make_shared<FiniteGroupTable const>(
      FiniteGroupTable::cyclic(std::stoi(name.substr(1))));
}

std::vector<GroupPresentation> presentations(int n) {
  std::vector<GroupPresentation> out;
  for (Dialect d : {Dialect::Classical, Dialect::Z2, Dialect::Virtual,
                    Dialect::Dotted, Dialect::TwistedDotted,
                    Dialect::Z2Quotient}) {
    out.push_back(presentation_for(d, n));
  }
  out.push_back(presentation_for(Dialect::Dotted, n, nullptr, {false}));
  out.push_back(presentation_for(Dialect::TwistedDotted, n, nullptr, {false}));
  for (auto g : {"Z2", "Z3", "S3"}) {
    out.push_back(presentation_for(Dialect::GBraid, n, group(g)));
  }
  return out;
}

std::string label(GroupPresentation const& p) {
  std::string s = std::string(dialect_name(p.dialect())) + " n=" +
                  std::to_string(p.strands());
  if (p.group()) s += " G=" + p.group()->name();
  if ((p.dialect() == Dialect::Dotted || p.dialect() == Dialect::TwistedDotted) &&
      !p.extensions().dot_crossing_far_commute) {
    s += " ext=off";
  }
  return s;
}

bool replays(RewriteEngine const& engine, Verdict const& v) {
  if (v.outcome != Outcome::Equal || !v.trace) return false;
  try {
    return engine.replay(*v.trace).empty();
  } catch (error const&) {
    return false;
  }
}

struct Outcome_ {
  bool pass = true;
  std::string detail;
};

Outcome_ fail(std::string why) { return {false, std::move(why)}; }

// 1. every relator is a consequence of its presentation in one step
Outcome_ relator_sanity() {
  std::size_t checked = 0;
  for (int n : {3, 4, 5}) {
    for (auto const& p : presentations(n)) {
      RewriteEngine engine(p);
      SearchOptions opt;
      opt.budget = 10;
      for (auto const& r : p.relators()) {
        auto v = engine.consequence(r.word, opt);
        if (!replays(engine, v) || v.trace->depth() > 1) {
          return fail(label(p) + " " + r.name + " not trivial at depth 1");
        }
        ++checked;
      }
    }
  }
  return {true, std::to_string(checked) + " relators"};
}

// 2. phi maps every z2 relator to a trivial virtual word
Outcome_ phi_well_defined() {
  std::size_t deepest = 0, total = 0;
  std::string text;
  for (int n : {3, 4}) {
    auto rep = phi_welldefined_report(n);
    RewriteEngine engine(presentation_for(Dialect::Virtual, n));
    text += "n=" + std::to_string(n) + "\n" + rep.text();
    for (auto const& e : rep.entries) {
      if (!replays(engine, e.verdict)) {
        return fail("n=" + std::to_string(n) + " " + e.relator + " " +
                    std::string(outcome_name(e.verdict.outcome)));
      }
      deepest = std::max(deepest, e.verdict.trace->depth());
      ++total;
    }
  }
  archive("phi_report.txt", text);
  if (deepest > 6) return fail("depth " + std::to_string(deepest) + " > 6");
  return {true, std::to_string(total) + " relators, max depth " +
                    std::to_string(deepest)};
}

// 3. the odd square is nontrivial while the virtual square is trivial
Outcome_ reverse_obstruction() {
  std::string text;
  for (int i = 1; i <= 2; ++i) {
    auto ob = reverse_map_obstruction(3, i);
    text += ob.text();
    if (!ob.holds()) return fail("i=" + std::to_string(i));
    RewriteEngine ev(presentation_for(Dialect::Virtual, 3));
    if (!replays(ev, ob.virtual_square_verdict)) return fail("replay");
  }
  archive("reverse_obstruction.txt", text);
  return {true, "i=1,2"};
}

// 4. even z2 words agree with classical braids
Outcome_ even_words_are_classical() {
  Rng rng(4);
  for (int k = 0; k < 200; ++k) {
    int const n = pick(rng, 3, 4);
    auto pz = presentation_for(Dialect::Z2, n);
    std::vector<SymmetrizedRelator> even;
    for (auto const& r : symmetrized_relators(pz)) {
      if (std::all_of(r.letters.begin(), r.letters.end(),
                      [](Token const& t) { return t.label == 0; })) {
        even.push_back(r);
      }
    }
    auto w = mbraid::testing::random_even_z2(rng, n, 8);
    auto w2 = w;
    int const steps = pick(rng, 1, 4);
    for (int s = 0; s < steps; ++s) {
      w2 = mbraid::testing::apply_relator(rng, w2, even);
    }
    if (!classical_equal(mbraid::testing::drop_labels(w),
                         mbraid::testing::drop_labels(w2))) {
      return fail("mutated pair " + format(w) + " / " + format(w2));
    }
  }
  // unequal classical pairs never become equal as even z2 words
  int pairs = 0, unknown = 0;
  std::map<int, RewriteEngine> engines;
  for (int n : {3, 4}) engines.emplace(n, presentation_for(Dialect::Z2, n));
  SearchOptions opt;
  opt.budget = 5000;
  while (pairs < 200) {
    int const n = pick(rng, 3, 4);
    auto u = mbraid::testing::random_word(rng, Dialect::Classical, n, 8);
    auto v = mbraid::testing::random_word(rng, Dialect::Classical, n, 8);
    if (classical_equal(u, v)) continue;
    ++pairs;
    auto verdict = engines.at(n).equal(mbraid::testing::even_lift(u),
                                       mbraid::testing::even_lift(v), opt);
    if (verdict.outcome == Outcome::Equal) {
      return fail("lift of " + format(u) + " / " + format(v) + " equal");
    }
    unknown += verdict.outcome == Outcome::Unknown;
  }
  return {true, "200 mutations, 200 unequal pairs (" + std::to_string(unknown) +
                    " unknown)"};
}

// 5. relator sets of Z2-braids and G-braids over Z2 coincide
Outcome_ iso() {
  std::string text;
  for (int n = 2; n <= 6; ++n) {
    auto rep = z2_iso_report(n);
    text += "n=" + std::to_string(n) + "\n" + rep.text();
    if (rep.discrepancies()) {
      return fail("n=" + std::to_string(n) + ": " +
                  std::to_string(rep.discrepancies()) + " discrepancies");
    }
  }
  archive("iso_report.txt", text);
  return {true, "n=2..6"};
}

// 6. g undoes f; f respects the z2 relators
Outcome_ f_inclusion() {
  Rng rng(6);
  for (int k = 0; k < 1000; ++k) {
    int const n = pick(rng, 2, 5);
    auto w = mbraid::testing::random_word(rng, Dialect::Z2, n, 12);
    if (g_map(f_map(w)) != w) return fail("g(f(" + format(w) + "))");
  }
  std::string on_text, off_text, summary;
  for (int n : {3, 4}) {
    auto on = f_welldefined_report(n, default_budget, true);
    on_text += "n=" + std::to_string(n) + "\n" + on.text();
    RewriteEngine engine(presentation_for(Dialect::Dotted, n));
    for (auto const& e : on.entries) {
      if (!replays(engine, e.verdict)) {
        return fail("flag on, n=" + std::to_string(n) + " " + e.relator);
      }
    }
    // Each unknown exhausts the budget; a reduced budget keeps this short.
    auto off = f_welldefined_report(n, 20000, false);
    off_text += "n=" + std::to_string(n) + "\n" + off.text();
    if (off.count(Outcome::Distinct)) return fail("flag off gave distinct");
    summary += " off n=" + std::to_string(n) + ": " +
               std::to_string(off.count(Outcome::Equal)) + " equal/" +
               std::to_string(off.count(Outcome::Unknown)) + " unknown;";
  }
  archive("f_report_extension_on.txt", on_text);
  archive("f_report_extension_off.txt", off_text);
  return {true, "1000 words; on: all equal;" + summary};
}

// 7. dotted moves on good words change parities by z2 moves only
Outcome_ move_invariance() {
  Rng rng(7);
  std::size_t braid_steps = 0;
  std::string first_log;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    int const n = pick(rng, 3, 4);
    auto w = f_map(mbraid::testing::random_word(rng, Dialect::Z2, n, 10));
    auto res = move_invariance_harness(w, 100, seed);
    if (!res.passed) {
      return fail("seed " + std::to_string(seed) + ": " + res.failure);
    }
    if (res.braid_parity_violations) return fail("odd braid move");
    braid_steps += res.braid_steps;
    if (seed == 0) {
      for (auto const& l : res.log) first_log += l + "\n";
    }
  }
  archive("moves_seed0.txt", first_log);
  return {true, "100 seeds x 100 moves, " + std::to_string(braid_steps) +
                    " braid moves"};
}

// 8. f(s_{i,1})^2 is trivial in the twisted group only
Outcome_ twisted_inclusion() {
  std::string text;
  for (int n : {3, 4}) {
    RewriteEngine engine(presentation_for(Dialect::TwistedDotted, n));
    for (int i = 1; i < n; ++i) {
      auto v = twisted_lune_check(i, n);
      if (!replays(engine, v)) return fail("twisted lune not equal");
      auto fam = engine.families_used(*v.trace);
      if (std::count(fam.begin(), fam.end(), RelatorFamily::TwistedFourDots) <
          1) {
        return fail("trace avoids the twisted four-dot relation");
      }
      text += "n=" + std::to_string(n) + " i=" + std::to_string(i) + "\n" +
              serialize(*v.trace);
      auto plain = relator_consequence(lune_word(Dialect::Dotted, n, i),
                                       presentation_for(Dialect::Dotted, n));
      if (plain.outcome != Outcome::Distinct ||
          plain.certificate->component != "crossing exponent sum") {
        return fail("untwisted lune not distinct");
      }
    }
  }
  archive("twisted_lune.txt", text);
  return {true, "n=3,4 all i"};
}

// 9. classical decider and rewrite engine never contradict
Outcome_ cross_validation() {
  Rng rng(9);
  std::map<int, RewriteEngine> engines;
  for (int n : {2, 3, 4}) engines.emplace(n, presentation_for(Dialect::Classical, n));
  SearchOptions opt;
  opt.budget = 20000;
  int decided = 0;
  for (int k = 0; k < 500; ++k) {
    int const n = pick(rng, 2, 4);
    auto& engine = engines.at(n);
    auto u = mbraid::testing::random_word(rng, Dialect::Classical, n, 6);
    BraidWord v;
    if (k % 2) {
      v = mbraid::testing::random_word(rng, Dialect::Classical, n, 6);
    } else {
      v = mbraid::testing::apply_relator(rng, u, engine.relators());
    }
    bool const same = classical_equal(u, v);
    auto verdict = engine.equal(u, v, opt);
    if (verdict.outcome == Outcome::Unknown) continue;
    ++decided;
    if ((verdict.outcome == Outcome::Equal) != same) {
      return fail(format(u) + " / " + format(v));
    }
  }
  return {true, "500 pairs, " + std::to_string(decided) + " decided"};
}

// 10. invariants survive relator insertion
Outcome_ invariant_soundness() {
  Rng rng(10);
  std::size_t checked = 0;
  for (int n : {3, 4}) {
    for (auto const& p : presentations(n)) {
      auto rels = symmetrized_relators(p);
      for (int k = 0; k < 500; ++k) {
        auto w = mbraid::testing::random_word(rng, p.dialect(), n, 10,
                                              p.group());
        auto w2 = free_reduce(mbraid::testing::insert_relator(rng, w, rels));
        if (invariants(w, p) != invariants(w2, p)) {
          return fail(label(p) + ": " + format(w) + " -> " + format(w2));
        }
        ++checked;
      }
    }
  }
  return {true, std::to_string(checked) + " insertions"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) archive_dir = argv[1];
  struct Criterion {
    int id;
    std::string name;
    std::function<Outcome_()> run;
    double limit;  // seconds, 0 for none
  };
  std::vector<Criterion> criteria{
      {1, "relator sanity", relator_sanity, 5},
      {2, "phi well defined", phi_well_defined, 60},
      {3, "reverse map obstruction", reverse_obstruction, 0},
      {4, "even words are classical", even_words_are_classical, 0},
      {5, "Z2-braids = G-braids over Z2", iso, 0},
      {6, "f inclusion", f_inclusion, 0},
      {7, "move invariance", move_invariance, 0},
      {8, "twisted inclusion", twisted_inclusion, 0},
      {9, "decider cross-validation", cross_validation, 300},
      {10, "invariant soundness", invariant_soundness, 0},
  };
  int failed = 0;
  for (auto const& c : criteria) {
    auto const t0 = std::chrono::steady_clock::now();
    Outcome_ r;
    try {
      r = c.run();
    } catch (std::exception const& e) {
      r = fail(std::string("exception: ") + e.what());
    }
    double const secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (r.pass && c.limit > 0 && secs > c.limit) {
      r = fail("took " + std::to_string(secs) + " s");
    }
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (r.pass ? "PASS" : "FAIL") << " criterion " << c.id
         << " (" << c.name << "): " << r.detail << " [" << secs << " s]";
    std::cout << line.str() << std::endl;
    failed += !r.pass;
  }
  return failed ? 1 : 0;
}
