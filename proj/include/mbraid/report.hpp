#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "mbraid/search.hpp"

namespace mbraid {

// Verdicts for the images of every relator of a source presentation under
// a word map, checked in the target presentation.
struct HomReport {
  struct Entry {
    std::string relator;  // source relator name
    BraidWord image;
    Verdict verdict;
  };

  std::vector<Entry> entries;
  std::vector<SymmetrizedRelator> target_relators;

  std::size_t count(Outcome o) const {
    std::size_t k = 0;
    for (auto const& e : entries) {
      k += e.verdict.outcome == o;
    }
    return k;
  }

  bool all_equal() const { return count(Outcome::Equal) == entries.size(); }

  // "<relator-id> EQUAL depth=k" plus the trace, or "<relator-id> UNKNOWN".
  std::string text() const {
    std::string out;
    for (auto const& e : entries) {
      out += e.relator + " ";
      switch (e.verdict.outcome) {
        case Outcome::Equal:
          out += "EQUAL depth=" + std::to_string(e.verdict.trace->depth()) +
                 "\n" + serialize(*e.verdict.trace);
          break;
        case Outcome::Unknown: out += "UNKNOWN\n"; break;
        case Outcome::Distinct:
          out += "DISTINCT " + e.verdict.certificate->describe() + "\n";
          break;
      }
    }
    return out;
  }
};

inline HomReport hom_report(
    GroupPresentation const& source, GroupPresentation const& target,
    std::function<BraidWord(BraidWord const&)> const& map,
    SearchOptions const& opt) {
  RewriteEngine const engine(target);
  HomReport rep;
  rep.target_relators = engine.relators();
  for (auto const& r : source.relators()) {
    auto image = map(r.word);
    auto verdict = engine.consequence(image, opt);
    rep.entries.push_back({r.name, std::move(image), std::move(verdict)});
  }
  return rep;
}

}  // namespace mbraid
