#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mbraid/report.hpp"

namespace mbraid {

// Even crossings go to classical crossings, odd crossings to virtual ones.
// The sign of an odd letter is dropped since v_i is an involution; this is
// where the map stops being injective.
inline BraidWord phi(BraidWord const& w) {
  if (w.dialect() != Dialect::Z2) {
    throw error("phi expects a z2 word");
  }
  std::vector<Token> out;
  out.reserve(w.size());
  for (auto const& t : w) {
    out.push_back(t.label == 0 ? Token::crossing(t.index, t.sign)
                               : Token::virt(t.index));
  }
  return make_word(Dialect::Virtual, w.strands(), std::move(out));
}

inline HomReport phi_welldefined_report(int n,
                                        std::size_t budget = default_budget) {
  if (n < 3) {
    throw error("phi_welldefined_report needs n >= 3");
  }
  SearchOptions opt;
  opt.budget = budget;
  return hom_report(presentation_for(Dialect::Z2, n),
                    presentation_for(Dialect::Virtual, n), phi, opt);
}

// s_{i,1}^2 is non-trivial among Z2-braids while v_i^2 is trivial among
// virtual braids, so sending v_i to s_{i,1} does not define a homomorphism.
struct ReverseMapObstruction {
  int strands = 0;
  int index = 0;
  BraidWord odd_square;
  Verdict odd_square_verdict;  // expected Distinct
  BraidWord virtual_square;
  Verdict virtual_square_verdict;  // expected Equal

  bool holds() const {
    return odd_square_verdict.outcome == Outcome::Distinct &&
           virtual_square_verdict.outcome == Outcome::Equal;
  }

  std::string text() const {
    std::string out = "z2 " + format(odd_square) + " = e ? " +
                      std::string(outcome_name(odd_square_verdict.outcome));
    if (odd_square_verdict.certificate) {
      out += " (" + odd_square_verdict.certificate->describe() + ")";
    }
    out += "\nvirtual " + format(virtual_square) + " = e ? " +
           std::string(outcome_name(virtual_square_verdict.outcome)) + "\n";
    if (virtual_square_verdict.trace) {
      out += serialize(*virtual_square_verdict.trace);
    }
    return out;
  }
};

inline ReverseMapObstruction reverse_map_obstruction(int n, int i) {
  if (n < 2 || i < 1 || i > n - 1) {
    throw error("reverse_map_obstruction needs 1 <= i <= n-1, n >= 2");
  }
  auto const pz = presentation_for(Dialect::Z2, n);
  auto const pv = presentation_for(Dialect::Virtual, n);
  ReverseMapObstruction out;
  out.strands = n;
  out.index = i;
  out.odd_square = pz.word({Token::marked(i, 1), Token::marked(i, 1)});
  out.odd_square_verdict = relator_consequence(out.odd_square, pz);
  out.virtual_square = pv.word({Token::virt(i), Token::virt(i)});
  out.virtual_square_verdict = relator_consequence(out.virtual_square, pv);
  return out;
}

}  // namespace mbraid
