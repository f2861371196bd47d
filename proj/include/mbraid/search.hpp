#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mbraid/invariants.hpp"
#include "mbraid/presentation.hpp"
#include "mbraid/trace.hpp"

namespace mbraid {

inline constexpr std::size_t default_budget = 200000;

struct SearchOptions {
  std::size_t budget = default_budget;  // nodes expanded
  // Successors longer than the reduced start word plus `growth` letters are
  // pruned; 0 means "longest symmetrized relator".
  std::size_t growth = 0;
  // Also insert relators that cancel nothing against the current word.
  bool pure_insertions = false;
};

enum class Outcome { Equal, Distinct, Unknown };

inline std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Equal: return "EQUAL";
    case Outcome::Distinct: return "DISTINCT";
    case Outcome::Unknown: return "UNKNOWN";
  }
  return "?";
}

struct Verdict {
  Outcome outcome = Outcome::Unknown;
  std::optional<DerivationTrace> trace;    // Equal
  std::optional<Certificate> certificate;  // Distinct
  std::size_t expanded = 0;
};

// Letter codes for the search. Codes are dense 16-bit integers whose
// numeric order matches Token ordering, so comparing code strings compares
// words lexicographically.
class Alphabet {
 public:
  explicit Alphabet(BraidWord const& sample)
      : labels_(detail::label_count(sample.dialect(), sample.group())) {
    if (sample.strands() >= 64 || labels_ > 64) {
      throw error("alphabet too large for the rewrite engine");
    }
    inverse_.resize(4 * 64 * labels_ * 2);
    for (std::size_t c = 0; c < inverse_.size(); ++c) {
      auto const code = static_cast<char16_t>(c);
      inverse_[c] = decode(code).self_inverse()
                        ? code
                        : static_cast<char16_t>(c ^ 1);
    }
  }

  char16_t encode(Token const& t) const {
    int code = ((static_cast<int>(t.kind) * 64 + t.index) * labels_ + t.label) *
                   2 +
               (t.sign < 0 ? 1 : 0);
    return static_cast<char16_t>(code);
  }

  Token decode(char16_t c) const {
    int code = c;
    Token t;
    t.sign = (code & 1) ? -1 : 1;
    code >>= 1;
    t.label = code % labels_;
    code /= labels_;
    t.index = code % 64;
    t.kind = static_cast<Kind>(code / 64);
    return t;
  }

  char16_t invert(char16_t c) const { return inverse_[c]; }

  std::u16string encode(std::span<Token const> w) const {
    std::u16string out;
    out.reserve(w.size());
    for (auto const& t : w) {
      out.push_back(encode(t));
    }
    return out;
  }

  std::vector<Token> decode(std::u16string_view w) const {
    std::vector<Token> out;
    out.reserve(w.size());
    for (char16_t c : w) {
      out.push_back(decode(c));
    }
    return out;
  }

 private:
  int labels_;
  std::vector<char16_t> inverse_;
};

// Best-first search for a derivation of the empty word. Words are expanded
// shortest first, ties broken lexicographically on letters. A successor
// replaces a prefix u of some symmetrized relator u·t found in the word by
// t^-1 (this is one relator insertion followed by free cancellation, or a
// deletion when t is empty) and is freely reduced.
class RewriteEngine {
 public:
  explicit RewriteEngine(GroupPresentation p)
      : presentation_(std::move(p)),
        relators_(symmetrized_relators(presentation_)),
        alphabet_(presentation_.identity()) {
    for (std::size_t j = 0; j < relators_.size(); ++j) {
      auto code = alphabet_.encode(relators_[j].letters);
      longest_ = std::max(longest_, code.size());
      by_first_[code.front()].push_back(j);
      index_.emplace(code, j);
      codes_.push_back(std::move(code));
    }
  }

  GroupPresentation const& presentation() const { return presentation_; }
  std::vector<SymmetrizedRelator> const& relators() const { return relators_; }

  Verdict equal(BraidWord const& u, BraidWord const& v,
                SearchOptions const& opt = {}) const {
    if (!presentation_.accepts(u) || !presentation_.accepts(v)) {
      throw error("words do not match the presentation's dialect and strands");
    }
    Verdict out;
    auto const iu = invariants(u, presentation_);
    auto const iv = invariants(v, presentation_);
    if (auto diff = first_difference(iu, iv)) {
      out.outcome = Outcome::Distinct;
      out.certificate = std::move(diff);
      return out;
    }
    BraidWord const start = u * invert(v);
    std::vector<TraceStep> prefix;
    auto reduced = cancel_recorded(start.letters(), prefix);
    return search(start, std::move(prefix), alphabet_.encode(reduced), opt);
  }

  Verdict consequence(BraidWord const& target,
                      SearchOptions const& opt = {}) const {
    return equal(target, presentation_.identity(), opt);
  }

  BraidWord replay(DerivationTrace const& t) const {
    return mbraid::replay(relators_, t);
  }

  // Origin relator of every relator step of the trace.
  std::vector<RelatorFamily> families_used(DerivationTrace const& t) const {
    std::vector<RelatorFamily> out;
    for (auto const& s : t.steps) {
      if (s.op != StepOp::Cancel) {
        out.push_back(
            presentation_.relators()[relators_[s.relator].origin].family);
      }
    }
    return out;
  }

 private:
  struct Move {
    std::size_t pos = 0;
    std::size_t relator = 0;
    std::size_t matched = 0;  // letters of the relator found in the word
  };

  struct Node {
    std::u16string const* word;
    std::int64_t parent;
    Move move;
  };

  // Leftmost-first free cancellation, recording each step.
  static std::vector<Token> cancel_recorded(std::vector<Token> w,
                                            std::vector<TraceStep>& steps) {
    std::size_t i = 0;
    while (i + 1 < w.size()) {
      if (w[i].cancels(w[i + 1])) {
        steps.push_back({i, 0, StepOp::Cancel});
        w.erase(w.begin() + i, w.begin() + i + 2);
        i = i ? i - 1 : 0;
      } else {
        ++i;
      }
    }
    return w;
  }

  std::u16string inverse_code(std::u16string_view w) const {
    std::u16string out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      out.push_back(alphabet_.invert(*it));
    }
    return out;
  }

  void push_reduced(std::u16string& out, char16_t c) const {
    if (!out.empty() && out.back() == alphabet_.invert(c)) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }

  // Writes the freely reduced result of move m on the reduced word w.
  void apply(std::u16string const& w, Move const& m,
             std::u16string& out) const {
    auto const& r = codes_[m.relator];
    out.assign(w, 0, m.pos);
    if (m.matched == 0) {
      for (char16_t c : r) push_reduced(out, c);
    } else {
      for (std::size_t k = r.size(); k > m.matched; --k) {
        push_reduced(out, alphabet_.invert(r[k - 1]));
      }
    }
    for (std::size_t k = m.pos + m.matched; k < w.size(); ++k) {
      push_reduced(out, w[k]);
    }
  }

  template <typename F>
  void successors(std::u16string const& w, SearchOptions const& opt,
                  F&& emit) const {
    for (std::size_t p = 0; p < w.size(); ++p) {
      auto it = by_first_.find(w[p]);
      if (it == by_first_.end()) {
        continue;
      }
      for (std::size_t j : it->second) {
        auto const& r = codes_[j];
        for (std::size_t k = 1; k <= r.size() && p + k <= w.size(); ++k) {
          if (w[p + k - 1] != r[k - 1]) {
            break;
          }
          if (!emit(Move{p, j, k})) {
            return;
          }
        }
      }
    }
    if (opt.pure_insertions) {
      for (std::size_t p = 0; p <= w.size(); ++p) {
        for (std::size_t j = 0; j < codes_.size(); ++j) {
          if (!emit(Move{p, j, 0})) {
            return;
          }
        }
      }
    }
  }

  // Turns one move into trace steps, leaving `w` as the reduced result.
  void record(std::vector<Token>& w, Move const& m,
              std::vector<TraceStep>& steps) const {
    auto const& r = relators_[m.relator].letters;
    if (m.matched == r.size()) {
      steps.push_back({m.pos, m.relator, StepOp::Delete});
      w.erase(w.begin() + m.pos, w.begin() + m.pos + r.size());
    } else {
      std::size_t id = m.relator;
      std::size_t at = m.pos;
      if (m.matched > 0) {
        // u^-1 t^-1 is the inverse of the rotation t·u of the relator u·t.
        auto const& code = codes_[m.relator];
        auto rotated = code.substr(m.matched) + code.substr(0, m.matched);
        auto found = index_.find(inverse_code(rotated));
        if (found == index_.end()) {
          throw error("symmetrized relators are not closed under rotation");
        }
        id = found->second;
        at = m.pos + m.matched;
      }
      auto const& ins = relators_[id].letters;
      steps.push_back({at, id, StepOp::Insert});
      w.insert(w.begin() + at, ins.begin(), ins.end());
    }
    w = cancel_recorded(std::move(w), steps);
  }

  Verdict search(BraidWord const& start, std::vector<TraceStep> prefix,
                 std::u16string root, SearchOptions const& opt) const {
    Verdict out;
    std::size_t const cap =
        root.size() + (opt.growth ? opt.growth : longest_);
    std::unordered_map<std::u16string, std::int64_t> seen;
    std::vector<Node> nodes;
    using Entry = std::tuple<std::size_t, std::u16string_view, std::int64_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;

    auto add = [&](std::u16string const& word, std::int64_t parent, Move m) {
      if (seen.find(word) != seen.end()) {
        return std::int64_t{-1};
      }
      auto it = seen.emplace(word, 0).first;
      auto id = static_cast<std::int64_t>(nodes.size());
      it->second = id;
      nodes.push_back({&it->first, parent, m});
      frontier.emplace(it->first.size(), std::u16string_view(it->first), id);
      return id;
    };

    std::u16string next;
    bool const trivial = root.empty();
    std::int64_t goal = add(root, -1, {});
    if (!trivial) {
      goal = -1;
    }
    while (goal < 0 && !frontier.empty() && out.expanded < opt.budget) {
      auto const id = std::get<2>(frontier.top());
      frontier.pop();
      ++out.expanded;
      std::u16string const& w = *nodes[id].word;
      successors(w, opt, [&](Move const& m) {
        apply(w, m, next);
        if (next.size() > cap) {
          return true;
        }
        bool const done = next.empty();
        auto nid = add(next, id, m);
        if (done && nid >= 0) {
          goal = nid;
          return false;
        }
        return true;
      });
    }
    if (goal < 0) {
      out.outcome = Outcome::Unknown;
      return out;
    }

    std::vector<Move> path;
    for (auto at = goal; nodes[at].parent >= 0; at = nodes[at].parent) {
      path.push_back(nodes[at].move);
    }
    std::reverse(path.begin(), path.end());
    DerivationTrace trace{start, std::move(prefix), start};
    std::vector<Token> w = mbraid::replay(relators_, start, trace.steps).letters();
    for (auto const& m : path) {
      record(w, m, trace.steps);
    }
    trace.end = start.with_letters(std::move(w));
    if (!trace.end.empty()) {
      throw error("internal: reconstructed derivation does not end empty");
    }
    out.outcome = Outcome::Equal;
    out.trace = std::move(trace);
    return out;
  }

  GroupPresentation presentation_;
  std::vector<SymmetrizedRelator> relators_;
  Alphabet alphabet_;
  std::vector<std::u16string> codes_;
  std::map<char16_t, std::vector<std::size_t>> by_first_;
  std::unordered_map<std::u16string, std::size_t> index_;
  std::size_t longest_ = 0;
};

inline Verdict equal_semidecide(BraidWord const& u, BraidWord const& v,
                                GroupPresentation const& p,
                                std::size_t budget = default_budget) {
  SearchOptions opt;
  opt.budget = budget;
  return RewriteEngine(p).equal(u, v, opt);
}

inline Verdict relator_consequence(BraidWord const& target,
                                   GroupPresentation const& p,
                                   std::size_t budget = default_budget) {
  SearchOptions opt;
  opt.budget = budget;
  return RewriteEngine(p).consequence(target, opt);
}

}  // namespace mbraid
