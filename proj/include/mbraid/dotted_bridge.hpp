#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "mbraid/report.hpp"

namespace mbraid {

namespace detail {

inline std::vector<Token> dotted_image(std::vector<Token> const& letters) {
  using T = Token;
  std::vector<Token> out;
  for (auto const& t : letters) {
    if (t.label == 0) {
      out.push_back(T::crossing(t.index, t.sign));
    } else if (t.sign > 0) {
      out.insert(out.end(), {T::dot(t.index), T::crossing(t.index),
                             T::dot(t.index + 1)});
    } else {
      out.insert(out.end(), {T::dot(t.index + 1), T::crossing(t.index, -1),
                             T::dot(t.index)});
    }
  }
  return out;
}

}  // namespace detail

// s_{i,0} -> s_i, s_{i,1} -> d_i s_i d_{i+1}; inverse letters go to the
// inverse of the image.
inline BraidWord f_map(BraidWord const& w) {
  if (w.dialect() != Dialect::Z2) {
    throw error("f_map expects a z2 word");
  }
  return make_word(Dialect::Dotted, w.strands(),
                   detail::dotted_image(w.letters()));
}

inline BraidWord f_twisted(BraidWord const& w) {
  if (w.dialect() != Dialect::Z2Quotient) {
    throw error("f_twisted expects a z2-quotient word");
  }
  return make_word(Dialect::TwistedDotted, w.strands(),
                   detail::dotted_image(w.letters()));
}

// Every strand carries an even number of dots.
inline bool is_good(BraidWord const& w) {
  for (int c : scan_strands(w).dots) {
    if (c % 2) {
      return false;
    }
  }
  return true;
}

// Parity of each crossing of a good word, computed from the dots on the
// two half-strands above the crossing and, separately, from those below.
struct ParityAssignment {
  struct Crossing {
    std::size_t position;  // index of the letter in the word
    int incoming;
    int outgoing;
  };
  std::vector<Crossing> crossings;
};

inline ParityAssignment parity_assignment(BraidWord const& w) {
  auto const total = scan_strands(w).dots;
  for (int c : total) {
    if (c % 2) {
      throw error("parity assignment needs a good word");
    }
  }
  ParityAssignment out;
  auto perm = identity_permutation(w.strands());
  std::vector<int> seen(w.strands(), 0);
  for (std::size_t k = 0; k < w.size(); ++k) {
    auto const& t = w[k];
    if (t.kind == Kind::Dot) {
      ++seen[perm[t.index - 1] - 1];
      continue;
    }
    int const a = perm[t.index - 1] - 1;
    int const b = perm[t.index] - 1;
    int const in = (seen[a] + seen[b]) % 2;
    int const out_parity = ((total[a] - seen[a]) + (total[b] - seen[b])) % 2;
    if (in != out_parity) {
      throw error("internal: half-strand parities disagree on a good word");
    }
    out.crossings.push_back({k, in, out_parity});
    std::swap(perm[t.index - 1], perm[t.index]);
  }
  return out;
}

namespace detail {

// Labels crossings of `letters` by incoming dot parity, starting from the
// given strand positions and dot counts (updated in place).
inline std::vector<Token> label_crossings(std::vector<Token> const& letters,
                                          Permutation& perm,
                                          std::vector<int>& dots) {
  std::vector<Token> out;
  for (auto const& t : letters) {
    if (t.kind == Kind::Dot) {
      ++dots[perm[t.index - 1] - 1];
      continue;
    }
    int const p = (dots[perm[t.index - 1] - 1] + dots[perm[t.index] - 1]) % 2;
    out.push_back(Token::marked(t.index, p, t.sign));
    std::swap(perm[t.index - 1], perm[t.index]);
  }
  return out;
}

}  // namespace detail

// Reads a parity off every crossing of a good dotted word; dots vanish.
inline BraidWord g_map(BraidWord const& w) {
  if (w.dialect() != Dialect::Dotted) {
    throw error("g_map expects a dotted word");
  }
  if (!is_good(w)) {
    throw error("g_map needs a good word (every strand with an even number "
                "of dots)");
  }
  auto perm = identity_permutation(w.strands());
  std::vector<int> dots(w.strands(), 0);
  return make_word(Dialect::Z2, w.strands(),
                   detail::label_crossings(w.letters(), perm, dots));
}

inline BraidWord lune_word(Dialect d, int n, int i) {
  using T = Token;
  return make_word(d, n,
                   {T::dot(i), T::crossing(i), T::dot(i + 1), T::dot(i),
                    T::crossing(i), T::dot(i + 1)});
}

// f(s_{i,1}) f(s_{i,1}) = e in the twisted dotted group.
inline Verdict twisted_lune_check(int i, int n,
                                  std::size_t budget = default_budget) {
  if (n < 2 || i < 1 || i > n - 1) {
    throw error("twisted_lune_check needs 1 <= i <= n-1");
  }
  return relator_consequence(lune_word(Dialect::TwistedDotted, n, i),
                             presentation_for(Dialect::TwistedDotted, n),
                             budget);
}

inline HomReport f_welldefined_report(int n, std::size_t budget,
                                      bool dot_crossing_far_commute) {
  if (n < 3) {
    throw error("f_welldefined_report needs n >= 3");
  }
  SearchOptions opt;
  opt.budget = budget;
  return hom_report(
      presentation_for(Dialect::Z2, n),
      presentation_for(Dialect::Dotted, n, nullptr,
                       Extensions{dot_crossing_far_commute}),
      f_map, opt);
}

struct HarnessResult {
  bool passed = true;
  std::string failure;
  std::vector<std::string> log;  // STEP <k> <relator-id> good=<b> g-delta=<..>
  std::size_t braid_steps = 0;   // RIII moves seen
  std::size_t braid_parity_violations = 0;
  BraidWord final_word;
};

// Applies random relator insertions and deletions of the dotted
// presentation to a good word. After each move the word must still be good
// and its parity image must change by nothing (dot moves) or by exactly
// one Z2 relator (crossing-only moves).
inline HarnessResult move_invariance_harness(BraidWord const& start,
                                             std::size_t moves,
                                             std::uint64_t seed,
                                             Extensions ext = {}) {
  if (start.dialect() != Dialect::Dotted) {
    throw error("move_invariance_harness expects a dotted word");
  }
  if (!is_good(start)) {
    throw error("move_invariance_harness needs a good word");
  }
  int const n = start.strands();
  HarnessResult res;
  res.final_word = start;
  if (n < 2) {
    return res;
  }
  auto const pd = presentation_for(Dialect::Dotted, n, nullptr, ext);
  auto const dotted = symmetrized_relators(pd);
  auto const pz = presentation_for(Dialect::Z2, n);
  auto const z2 = symmetrized_relators(pz);
  std::map<std::vector<Token>, std::size_t> z2_index;
  for (std::size_t j = 0; j < z2.size(); ++j) {
    z2_index.emplace(z2[j].letters, j);
  }

  std::mt19937_64 rng(seed);
  std::vector<Token> w = free_reduce(std::span<Token const>(start.letters()));
  auto fail = [&](std::size_t k, std::string const& why) {
    res.passed = false;
    res.failure = "step " + std::to_string(k) + ": " + why;
  };

  for (std::size_t k = 1; k <= moves && res.passed; ++k) {
    std::vector<std::pair<std::size_t, std::size_t>> occurrences;
    if (rng() % 2) {
      for (std::size_t p = 0; p < w.size(); ++p) {
        for (std::size_t j = 0; j < dotted.size(); ++j) {
          auto const& r = dotted[j].letters;
          if (p + r.size() <= w.size() &&
              std::equal(r.begin(), r.end(), w.begin() + p)) {
            occurrences.emplace_back(p, j);
          }
        }
      }
    }
    bool const deleting = !occurrences.empty();
    std::size_t pos = 0;
    std::size_t rel = 0;
    if (deleting) {
      std::tie(pos, rel) = occurrences[rng() % occurrences.size()];
    } else {
      rel = rng() % dotted.size();
      pos = rng() % (w.size() + 1);
    }
    auto const& segment = dotted[rel].letters;
    auto const family = pd.relators()[dotted[rel].origin].family;

    // The segment's crossings, labelled in the context of the prefix.
    auto perm = identity_permutation(n);
    std::vector<int> dots(n, 0);
    std::size_t const q =
        detail::label_crossings({w.begin(), w.begin() + pos}, perm, dots)
            .size();
    auto const labelled = detail::label_crossings(segment, perm, dots);

    std::string delta = "none";
    if (is_artin_family(family)) {
      auto found = z2_index.find(labelled);
      if (found == z2_index.end()) {
        fail(k, "crossing move labelled " +
                    format(std::span<Token const>(labelled)) +
                    " is not a z2 relator");
        break;
      }
      delta = pz.relators()[z2[found->second].origin].name;
      if (family == RelatorFamily::BraidRelation) {
        ++res.braid_steps;
        int sum = 0;
        for (auto const& t : labelled) {
          if (t.sign > 0) sum += t.label;
        }
        if (sum % 2) {
          ++res.braid_parity_violations;
          fail(k, "braid move with odd parity sum");
          break;
        }
      }
    } else if (!free_reduce(std::span<Token const>(labelled)).empty()) {
      fail(k, "dot move changed the parity image");
      break;
    }

    std::vector<Token> next = w;
    auto g_expected = g_map(start.with_letters(w)).letters();
    if (deleting) {
      next.erase(next.begin() + pos, next.begin() + pos + segment.size());
      if (q + labelled.size() > g_expected.size() ||
          !std::equal(labelled.begin(), labelled.end(),
                      g_expected.begin() + q)) {
        fail(k, "deleted segment not found in the parity image");
        break;
      }
      g_expected.erase(g_expected.begin() + q,
                       g_expected.begin() + q + labelled.size());
    } else {
      next.insert(next.begin() + pos, segment.begin(), segment.end());
      g_expected.insert(g_expected.begin() + q, labelled.begin(),
                        labelled.end());
    }
    next = free_reduce(std::span<Token const>(next));
    auto const next_word = start.with_letters(next);
    bool const good = is_good(next_word);
    res.log.push_back("STEP " + std::to_string(k) + " " +
                      pd.relators()[dotted[rel].origin].name +
                      " good=" + (good ? "true" : "false") +
                      " g-delta=" + delta);
    if (!good) {
      fail(k, "word is no longer good");
      break;
    }
    auto const g_after = free_reduce(g_map(next_word)).letters();
    if (g_after != free_reduce(std::span<Token const>(g_expected))) {
      fail(k, "parity image is not related by the expected move");
      break;
    }
    w = std::move(next);
  }
  res.final_word = start.with_letters(std::move(w));
  return res;
}

}  // namespace mbraid
