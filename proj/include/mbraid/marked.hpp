#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mbraid/presentation.hpp"

namespace mbraid {

struct LabelTriple {
  int g = 0;
  int h = 0;
  int w = 0;
};

inline bool label_triple_admissible(LabelTriple const& t,
                                    FiniteGroupTable const& G) {
  return G.multiply(G.multiply(t.g, t.h), t.w) == G.identity();
}

// The two sides of the G-braid relation at position i:
//   s_{i,g} s_{i+1,h} s_{i,w} = s_{i+1,w^-1} s_{i,h^-1} s_{i+1,g^-1}.
inline std::pair<BraidWord, BraidWord> g_relation(int n, int i,
                                                  LabelTriple const& t,
                                                  GroupPtr const& G) {
  using T = Token;
  if (!G) {
    throw error("g_relation needs a group table");
  }
  if (!G->contains(t.g) || !G->contains(t.h) || !G->contains(t.w)) {
    throw error("label outside the group");
  }
  if (!label_triple_admissible(t, *G)) {
    throw error("inadmissible triple (" + G->label(t.g) + "," + G->label(t.h) +
                "," + G->label(t.w) + "): product is not the identity");
  }
  if (i < 1 || i > n - 2) {
    throw error("braid relation index out of range");
  }
  auto lhs = make_word(Dialect::GBraid, n,
                       {T::marked(i, t.g), T::marked(i + 1, t.h),
                        T::marked(i, t.w)},
                       G);
  auto rhs = make_word(Dialect::GBraid, n,
                       {T::marked(i + 1, G->inverse(t.w)),
                        T::marked(i, G->inverse(t.h)),
                        T::marked(i + 1, G->inverse(t.g))},
                       G);
  return {std::move(lhs), std::move(rhs)};
}

struct IsoLine {
  std::string relator;  // formatted symmetrized relator
  std::string status;   // OK, MISSING-IN-z2, MISSING-IN-gbraid
};

struct IsoReport {
  int strands = 0;
  std::vector<IsoLine> lines;

  std::size_t discrepancies() const {
    return static_cast<std::size_t>(
        std::count_if(lines.begin(), lines.end(),
                      [](IsoLine const& l) { return l.status != "OK"; }));
  }

  std::string text() const {
    std::string out;
    for (auto const& l : lines) {
      out += l.relator + " " + l.status + "\n";
    }
    return out;
  }
};

// Compares the symmetrized relator sets of the Z2-braid group and the
// G-braid group with G = Z2, identifying label 0 with 0 and 1 with 1.
inline IsoReport z2_iso_report(int n) {
  auto const z2 = std::make_shared<FiniteGroupTable const>(
      FiniteGroupTable::cyclic(2));
  auto const pz = presentation_for(Dialect::Z2, n);
  auto const pg = presentation_for(Dialect::GBraid, n, z2);
  std::set<std::vector<Token>> sz, sg;
  for (auto const& r : symmetrized_relators(pz)) sz.insert(r.letters);
  for (auto const& r : symmetrized_relators(pg)) sg.insert(r.letters);
  std::set<std::vector<Token>> all = sz;
  all.insert(sg.begin(), sg.end());
  IsoReport rep{n, {}};
  for (auto const& w : all) {
    std::string status = "OK";
    if (!sz.count(w)) {
      status = "MISSING-IN-z2";
    } else if (!sg.count(w)) {
      status = "MISSING-IN-gbraid";
    }
    rep.lines.push_back({format(std::span<Token const>(w)), status});
  }
  return rep;
}

}  // namespace mbraid
