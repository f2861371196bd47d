#pragma once

#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mbraid.hpp"

namespace mbraid::cli {

enum ExitCode : int {
  kSuccess = 0,
  kDistinct = 1,
  kUnknown = 2,
  kUsage = 64,
};

struct Options {
  std::string dialect = "classical";
  int strands = 3;
  std::string group;
  std::size_t budget = default_budget;
  std::uint64_t seed = 0;
  std::string extension = "on";
  std::string output;
  std::string from;
  std::string to;
  std::string map;
  int index = 0;
  std::size_t moves = 100;
  std::vector<std::string> words;
};

inline GroupPtr group_from_name(std::string const& name) {
  if (name.empty()) {
    return nullptr;
  }
  if (name == "S3") {
    return std::make_shared<FiniteGroupTable const>(
        FiniteGroupTable::symmetric3());
  }
  if (name.size() > 1 && name[0] == 'Z' &&
      name.find_first_not_of("0123456789", 1) == std::string::npos) {
    int const m = std::stoi(name.substr(1));
    if (m >= 1 && m <= 32) {
      return std::make_shared<FiniteGroupTable const>(
          FiniteGroupTable::cyclic(m));
    }
  }
  throw error("unknown group '" + name + "' (expected Z<m> or S3)");
}

class Runner {
 public:
  explicit Runner(Options const& o) : o_(o) {}

  int reduce(std::ostream& out) const {
    out << format(free_reduce(word(0))) << "\n";
    return kSuccess;
  }

  int equal(std::ostream& out) const {
    auto const u = word(0);
    auto const v = word(1);
    if (u.dialect() == Dialect::Classical) {
      bool const same = classical_equal(u, v);
      out << (same ? "EQUAL" : "DISTINCT") << "\n";
      return same ? kSuccess : kDistinct;
    }
    SearchOptions opt;
    opt.budget = o_.budget;
    RewriteEngine const engine(presentation());
    return verdict(engine.equal(u, v, opt), out);
  }

  int convert(std::ostream& out) const {
    auto const from = parse_dialect(o_.from);
    auto const to = parse_dialect(o_.to);
    auto const w = parse(o_.words.at(0), from, o_.strands);
    BraidWord image;
    if (from == Dialect::Z2 && to == Dialect::Virtual) {
      image = phi(w);
    } else if (from == Dialect::Z2 && to == Dialect::Dotted) {
      image = f_map(w);
    } else if (from == Dialect::Z2Quotient && to == Dialect::TwistedDotted) {
      image = f_twisted(w);
    } else if (from == Dialect::Dotted && to == Dialect::Z2) {
      image = g_map(w);
    } else {
      throw error("no map from " + o_.from + " to " + o_.to);
    }
    out << format(image) << "\n";
    return kSuccess;
  }

  int check_good(std::ostream& out) const {
    auto const w = word(0, dotted_dialect());
    bool const good = is_good(w);
    out << (good ? "good" : "not good") << "\n";
    return good ? kSuccess : kDistinct;
  }

  int extract(std::ostream& out) const {
    auto const w = word(0, Dialect::Dotted);
    auto const image = g_map(w);
    out << format(image) << "\n";
    return kSuccess;
  }

  int verify_hom(std::ostream& out) const {
    bool const ext = extension();
    if (o_.map == "phi") {
      return report(phi_welldefined_report(o_.strands, o_.budget), out);
    }
    if (o_.map == "f") {
      return report(f_welldefined_report(o_.strands, o_.budget, ext), out);
    }
    if (o_.map == "twisted-lune") {
      int worst = kSuccess;
      for (int i = 1; i < o_.strands; ++i) {
        if (o_.index && i != o_.index) {
          continue;
        }
        out << "lune(" << i << ") ";
        worst = std::max(worst,
                         verdict(twisted_lune_check(i, o_.strands, o_.budget),
                                 out));
      }
      return worst;
    }
    if (o_.map == "reverse") {
      int code = kSuccess;
      for (int i = 1; i < o_.strands; ++i) {
        if (o_.index && i != o_.index) {
          continue;
        }
        auto const ob = reverse_map_obstruction(o_.strands, i);
        out << ob.text();
        if (!ob.holds()) {
          code = kDistinct;
        }
      }
      return code;
    }
    if (o_.map == "moves") {
      auto const w = word(0, Dialect::Dotted);
      auto const res =
          move_invariance_harness(w, o_.moves, o_.seed, Extensions{ext});
      for (auto const& line : res.log) {
        out << line << "\n";
      }
      out << (res.passed ? "PASS" : "FAIL " + res.failure) << "\n";
      return res.passed ? kSuccess : kDistinct;
    }
    throw error("unknown map '" + o_.map +
                "' (expected phi, f, twisted-lune, reverse or moves)");
  }

  int iso_report(std::ostream& out) const {
    auto const rep = z2_iso_report(o_.strands);
    out << rep.text();
    out << "discrepancies " << rep.discrepancies() << "\n";
    return rep.discrepancies() ? kDistinct : kSuccess;
  }

  int invariants_cmd(std::ostream& out) const {
    out << format(invariants(word(0), presentation()));
    return kSuccess;
  }

  int render(std::ostream& out) const {
    auto const svg = render_svg(word(0));
    if (o_.output.empty()) {
      out << svg;
    } else {
      std::ofstream file(o_.output, std::ios::binary);
      if (!(file << svg)) {
        throw error("cannot write '" + o_.output + "'");
      }
    }
    return kSuccess;
  }

 private:
  Dialect dialect() const { return parse_dialect(o_.dialect); }

  Dialect dotted_dialect() const {
    auto const d = dialect();
    return d == Dialect::TwistedDotted ? d : Dialect::Dotted;
  }

  GroupPtr group(Dialect d) const {
    if (d != Dialect::GBraid) {
      if (!o_.group.empty()) {
        throw error("--group only applies to the gbraid dialect");
      }
      return nullptr;
    }
    if (o_.group.empty()) {
      throw error("the gbraid dialect needs --group");
    }
    return group_from_name(o_.group);
  }

  bool extension() const {
    if (o_.extension != "on" && o_.extension != "off") {
      throw error("--extension must be on or off");
    }
    return o_.extension == "on";
  }

  BraidWord word(std::size_t k, std::optional<Dialect> d = {}) const {
    auto const dd = d.value_or(dialect());
    if (k >= o_.words.size()) {
      throw error("missing word argument");
    }
    return parse(o_.words[k], dd, o_.strands, group(dd));
  }

  GroupPresentation presentation() const {
    auto const d = dialect();
    return presentation_for(d, o_.strands, group(d), Extensions{extension()});
  }

  static int verdict(Verdict const& v, std::ostream& out) {
    out << outcome_name(v.outcome);
    switch (v.outcome) {
      case Outcome::Equal:
        out << " depth=" << v.trace->depth() << "\n"
            << "start " << format(v.trace->start) << "\n"
            << serialize(*v.trace);
        return kSuccess;
      case Outcome::Distinct:
        out << " " << v.certificate->describe() << "\n";
        return kDistinct;
      case Outcome::Unknown:
        out << " expanded=" << v.expanded << "\n";
        return kUnknown;
    }
    return kUnknown;
  }

  static int report(HomReport const& rep, std::ostream& out) {
    out << rep.text();
    if (rep.count(Outcome::Distinct)) {
      return kDistinct;
    }
    return rep.all_equal() ? kSuccess : kUnknown;
  }

  Options const& o_;
};

// Parses argv and runs one command. Output goes to `out` only when the
// command succeeds in producing it; errors print one line to `err`.
inline int run(int argc, char const* const* argv, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Marked braid groups: words, presentations, maps, deciders",
               "mbraid"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool with_dialect, std::size_t words) {
    if (with_dialect) {
      sub->add_option("--dialect", o.dialect,
                      "classical, z2, gbraid, virtual, dotted, "
                      "twisted-dotted or z2-quotient");
      sub->add_option("--group", o.group, "label group for gbraid: Z<m>, S3");
    }
    sub->add_option("-n,--strands", o.strands, "number of strands")
        ->check(CLI::Range(1, 63));
    if (words) {
      sub->add_option("words", o.words, "braid words")
          ->expected(static_cast<int>(words))
          ->required();
    }
  };

  auto* reduce = app.add_subcommand("reduce", "free reduction of a word");
  common(reduce, true, 1);
  auto* equal = app.add_subcommand("equal", "decide or semi-decide equality");
  common(equal, true, 2);
  equal->add_option("--budget", o.budget, "search nodes to expand");
  equal->add_option("--extension", o.extension,
                    "dot-crossing far commutativity: on or off");
  auto* convert = app.add_subcommand("convert", "apply phi, f, f~ or g");
  common(convert, false, 1);
  convert->add_option("--from", o.from)->required();
  convert->add_option("--to", o.to)->required();
  auto* good = app.add_subcommand("check-good", "even dots on every strand");
  common(good, true, 1);
  auto* extract = app.add_subcommand("extract", "parity of a good dotted word");
  common(extract, false, 1);
  auto* verify = app.add_subcommand("verify-hom", "check a map on relators");
  common(verify, false, 0);
  verify->add_option("--map", o.map,
                     "phi, f, twisted-lune, reverse or moves")
      ->required();
  verify->add_option("--budget", o.budget, "search nodes to expand");
  verify->add_option("--extension", o.extension,
                     "dot-crossing far commutativity: on or off");
  verify->add_option("--index", o.index, "restrict to one generator index");
  verify->add_option("--seed", o.seed, "random seed for --map moves");
  verify->add_option("--moves", o.moves, "move count for --map moves");
  verify->add_option("words", o.words, "start word for --map moves")
      ->expected(0, 1);
  auto* iso = app.add_subcommand("iso-report", "Z2-braids vs G-braids, G=Z2");
  common(iso, false, 0);
  auto* inv = app.add_subcommand("invariants", "relator-invariant record");
  common(inv, true, 1);
  inv->add_option("--extension", o.extension,
                  "dot-crossing far commutativity: on or off");
  auto* render = app.add_subcommand("render", "SVG flat diagram");
  common(render, true, 1);
  render->add_option("-o,--output", o.output, "output path");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return kSuccess;
  } catch (CLI::CallForAllHelp const&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (CLI::ParseError const& e) {
    err << "mbraid: " << e.what() << "\n";
    return kUsage;
  }

  std::ostringstream buffer;
  int code = kSuccess;
  try {
    Runner const r(o);
    if (*reduce) code = r.reduce(buffer);
    else if (*equal) code = r.equal(buffer);
    else if (*convert) code = r.convert(buffer);
    else if (*good) code = r.check_good(buffer);
    else if (*extract) code = r.extract(buffer);
    else if (*verify) code = r.verify_hom(buffer);
    else if (*iso) code = r.iso_report(buffer);
    else if (*inv) code = r.invariants_cmd(buffer);
    else if (*render) code = r.render(buffer);
  } catch (std::exception const& e) {
    err << "mbraid: " << e.what() << "\n";
    return kUsage;
  }
  out << buffer.str();
  return code;
}

}  // namespace mbraid::cli
