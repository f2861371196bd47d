#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <memory>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mbraid/group_table.hpp"
#include "mbraid/token.hpp"

namespace mbraid {

using GroupPtr = std::shared_ptr<FiniteGroupTable const>;

// A finite word over the generators of one dialect on a fixed number of
// strands. Letters are read left to right, which is top to bottom in the
// flat diagram.
class BraidWord {
 public:
  BraidWord() = default;

  Dialect dialect() const { return dialect_; }
  int strands() const { return strands_; }
  GroupPtr const& group() const { return group_; }
  std::vector<Token> const& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Token const& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  // Same dialect, strand count and label group.
  bool compatible(BraidWord const& other) const {
    return dialect_ == other.dialect_ && strands_ == other.strands_ &&
           same_group(group_, other.group_);
  }

  // Word over the same alphabet with different letters; letters are
  // assumed to be valid already.
  BraidWord with_letters(std::vector<Token> letters) const {
    BraidWord w = *this;
    w.letters_ = std::move(letters);
    return w;
  }

  friend bool operator==(BraidWord const& a, BraidWord const& b) {
    return a.compatible(b) && a.letters_ == b.letters_;
  }

 private:
  static bool same_group(GroupPtr const& a, GroupPtr const& b) {
    if (a == b) {
      return true;
    }
    return a && b && *a == *b;
  }

  friend BraidWord make_unchecked(Dialect, int, std::vector<Token>, GroupPtr);

  Dialect dialect_ = Dialect::Classical;
  int strands_ = 1;
  GroupPtr group_;
  std::vector<Token> letters_;
};

namespace detail {

inline std::string token_context(std::size_t pos, Token const& t) {
  return "token " + std::to_string(pos + 1) + " (" +
         std::string(kind_name(t.kind)) + " " + std::to_string(t.index) + ")";
}

inline int label_count(Dialect d, GroupPtr const& g) {
  if (d == Dialect::GBraid) {
    return g ? g->order() : 0;
  }
  return has_labels(d) ? 2 : 1;
}

inline void check_token(Dialect d, int n, GroupPtr const& g, Token& t,
                        std::size_t pos) {
  if (!admissible(d, t.kind)) {
    throw error(token_context(pos, t) + ": " + std::string(kind_name(t.kind)) +
                " illegal in " + std::string(dialect_name(d)) + " dialect");
  }
  int const hi = t.kind == Kind::Dot ? n : n - 1;
  if (t.index < 1 || t.index > hi) {
    throw error(token_context(pos, t) + ": index out of range 1.." +
                std::to_string(hi));
  }
  if (t.self_inverse()) {
    t.sign = 1;
  } else if (t.sign != 1 && t.sign != -1) {
    throw error(token_context(pos, t) + ": sign must be +1 or -1");
  }
  if (t.kind == Kind::Marked) {
    if (t.label < 0 || t.label >= label_count(d, g)) {
      throw error(token_context(pos, t) + ": unknown label " +
                  std::to_string(t.label));
    }
  } else if (t.label != 0) {
    throw error(token_context(pos, t) + ": label not allowed");
  }
}

}  // namespace detail

inline BraidWord make_unchecked(Dialect d, int n, std::vector<Token> letters,
                                GroupPtr g = nullptr) {
  BraidWord w;
  w.dialect_ = d;
  w.strands_ = n;
  w.group_ = std::move(g);
  w.letters_ = std::move(letters);
  return w;
}

// Validating constructor: every letter must be admissible in the dialect,
// indices in range for n strands, labels in the label group.
inline BraidWord make_word(Dialect d, int n, std::vector<Token> letters,
                           GroupPtr g = nullptr) {
  if (d == Dialect::Mixed) {
    throw error("the mixed dialect is reserved for test fixtures");
  }
  if (n < 1) {
    throw error("strand count must be at least 1");
  }
  if ((d == Dialect::GBraid) != static_cast<bool>(g)) {
    throw error(d == Dialect::GBraid
                    ? "gbraid words need a label group"
                    : "only gbraid words carry a label group");
  }
  for (std::size_t i = 0; i < letters.size(); ++i) {
    detail::check_token(d, n, g, letters[i], i);
  }
  return make_unchecked(d, n, std::move(letters), std::move(g));
}

inline BraidWord empty_word(Dialect d, int n, GroupPtr g = nullptr) {
  return make_word(d, n, {}, std::move(g));
}

namespace detail {

// Permissive words mixing every token kind; Z2 labels.
inline BraidWord make_mixed_word(int n, std::vector<Token> letters) {
  for (std::size_t i = 0; i < letters.size(); ++i) {
    check_token(Dialect::Mixed, n, nullptr, letters[i], i);
  }
  return make_unchecked(Dialect::Mixed, n, std::move(letters));
}

}  // namespace detail

inline BraidWord invert(BraidWord const& w) {
  std::vector<Token> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return w.with_letters(std::move(out));
}

inline BraidWord concat(BraidWord const& u, BraidWord const& v) {
  if (!u.compatible(v)) {
    throw error("cannot concatenate words of different dialect or strand count");
  }
  std::vector<Token> out = u.letters();
  out.insert(out.end(), v.begin(), v.end());
  return u.with_letters(std::move(out));
}

inline BraidWord operator*(BraidWord const& u, BraidWord const& v) {
  return concat(u, v);
}

inline std::vector<Token> free_reduce(std::span<Token const> letters) {
  std::vector<Token> out;
  out.reserve(letters.size());
  for (auto const& t : letters) {
    if (!out.empty() && out.back().cancels(t)) {
      out.pop_back();
    } else {
      out.push_back(t);
    }
  }
  return out;
}

inline BraidWord free_reduce(BraidWord const& w) {
  return w.with_letters(free_reduce(std::span<Token const>(w.letters())));
}

// Entry p-1 holds the strand (named by its top endpoint) that arrives at
// bottom position p.
using Permutation = std::vector<int>;

inline Permutation identity_permutation(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

// Permutation of a word u·v, given those of u (first) and v (second).
inline Permutation compose(Permutation const& first,
                           Permutation const& second) {
  Permutation out(first.size());
  for (std::size_t p = 0; p < out.size(); ++p) {
    out[p] = first[second[p] - 1];
  }
  return out;
}

struct StrandState {
  Permutation perm;
  std::vector<int> dots;  // dots[s-1]: dots met by strand s
};

// Top-to-bottom scan. A dot at position j is charged to the strand
// currently at position j; crossings swap positions i and i+1.
inline StrandState scan_strands(BraidWord const& w) {
  StrandState st{identity_permutation(w.strands()),
                 std::vector<int>(w.strands(), 0)};
  for (auto const& t : w) {
    if (t.kind == Kind::Dot) {
      ++st.dots[st.perm[t.index - 1] - 1];
    } else {
      std::swap(st.perm[t.index - 1], st.perm[t.index]);
    }
  }
  return st;
}

inline Permutation permutation(BraidWord const& w) {
  return scan_strands(w).perm;
}

inline std::string format_permutation(Permutation const& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    out += (i ? " " : "") + std::to_string(p[i]);
  }
  return out + "]";
}

inline std::string format_token(Token const& t, GroupPtr const& g = nullptr) {
  std::string out;
  switch (t.kind) {
    case Kind::Classical:
    case Kind::Marked: out = t.sign > 0 ? "s" : "S"; break;
    case Kind::Virtual: out = "v"; break;
    case Kind::Dot: out = "d"; break;
  }
  out += std::to_string(t.index);
  if (t.kind == Kind::Marked) {
    out += "[" + (g ? g->label(t.label) : std::to_string(t.label)) + "]";
  }
  return out;
}

inline std::string format(std::span<Token const> letters,
                          GroupPtr const& g = nullptr) {
  if (letters.empty()) {
    return "e";
  }
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) {
      out += ' ';
    }
    out += format_token(letters[i], g);
  }
  return out;
}

inline std::string format(BraidWord const& w) {
  return format(std::span<Token const>(w.letters()), w.group());
}

inline std::ostream& operator<<(std::ostream& os, BraidWord const& w) {
  return os << format(w);
}

namespace detail {

inline Token parse_token(std::string_view text, std::size_t pos, Dialect d,
                         GroupPtr const& g) {
  auto fail = [&](std::string const& why) -> error {
    return error("token " + std::to_string(pos + 1) + " ('" +
                 std::string(text) + "'): " + why);
  };
  if (text.size() < 2) {
    throw fail("unknown token");
  }
  Token t;
  switch (text[0]) {
    case 's': t.kind = Kind::Classical; t.sign = 1; break;
    case 'S': t.kind = Kind::Classical; t.sign = -1; break;
    case 'v': t.kind = Kind::Virtual; break;
    case 'd': t.kind = Kind::Dot; break;
    default: throw fail("unknown token");
  }
  std::size_t i = 1;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    ++i;
  }
  if (i == 1 || i - 1 > 4) {
    throw fail("missing or malformed index");
  }
  t.index = std::stoi(std::string(text.substr(1, i - 1)));
  bool labelled = false;
  std::string label;
  if (i < text.size()) {
    if (text[i] != '[' || text.back() != ']' || i + 2 >= text.size()) {
      throw fail("unknown token");
    }
    labelled = true;
    label = std::string(text.substr(i + 1, text.size() - i - 2));
  }
  if (labelled) {
    if (t.kind != Kind::Classical) {
      throw fail("only crossings carry labels");
    }
    t.kind = Kind::Marked;
  }
  if (!admissible(d, t.kind)) {
    if (t.kind == Kind::Classical && has_labels(d) && d != Dialect::Mixed) {
      throw fail("crossings in " + std::string(dialect_name(d)) +
                 " dialect need a label");
    }
    throw fail(std::string(kind_name(t.kind)) + " illegal in " +
               std::string(dialect_name(d)) + " dialect");
  }
  if (labelled) {
    if (d == Dialect::GBraid) {
      auto found = g ? g->find(label) : std::nullopt;
      if (!found) {
        throw fail("unknown label '" + label + "'");
      }
      t.label = *found;
    } else if (label == "0" || label == "1") {
      t.label = label == "1";
    } else {
      throw fail("unknown label '" + label + "'");
    }
  }
  return t;
}

}  // namespace detail

// Grammar: letters separated by whitespace; s<i>, S<i>, s<i>[<label>],
// S<i>[<label>], v<i>, d<j>; the empty word is "e".
inline BraidWord parse(std::string_view text, Dialect d, int n,
                       GroupPtr g = nullptr) {
  std::vector<std::string> parts;
  std::istringstream in{std::string(text)};
  for (std::string part; in >> part;) {
    parts.push_back(part);
  }
  std::vector<Token> letters;
  if (!(parts.size() == 1 && parts[0] == "e")) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      letters.push_back(detail::parse_token(parts[i], i, d, g));
    }
  }
  if (d == Dialect::Mixed) {
    return detail::make_mixed_word(n, std::move(letters));
  }
  return make_word(d, n, std::move(letters), std::move(g));
}

}  // namespace mbraid
