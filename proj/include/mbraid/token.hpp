#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mbraid {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Dialect : std::uint8_t {
  Classical,
  Z2,
  GBraid,
  Virtual,
  Dotted,
  TwistedDotted,
  Z2Quotient,
  // Accepts every token kind with Z2 labels; only reachable through
  // detail::make_mixed_word, for test fixtures.
  Mixed,
};

enum class Kind : std::uint8_t { Classical, Marked, Virtual, Dot };

inline std::string_view dialect_name(Dialect d) {
  switch (d) {
    case Dialect::Classical: return "classical";
    case Dialect::Z2: return "z2";
    case Dialect::GBraid: return "gbraid";
    case Dialect::Virtual: return "virtual";
    case Dialect::Dotted: return "dotted";
    case Dialect::TwistedDotted: return "twisted-dotted";
    case Dialect::Z2Quotient: return "z2-quotient";
    case Dialect::Mixed: return "mixed";
  }
  return "?";
}

inline Dialect parse_dialect(std::string_view s) {
  for (auto d : {Dialect::Classical, Dialect::Z2, Dialect::GBraid,
                 Dialect::Virtual, Dialect::Dotted, Dialect::TwistedDotted,
                 Dialect::Z2Quotient}) {
    if (dialect_name(d) == s) {
      return d;
    }
  }
  throw error("unknown dialect '" + std::string(s) + "'");
}

inline std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::Classical: return "crossing";
    case Kind::Marked: return "marked crossing";
    case Kind::Virtual: return "virtual crossing";
    case Kind::Dot: return "dot";
  }
  return "?";
}

inline bool admissible(Dialect d, Kind k) {
  switch (d) {
    case Dialect::Classical: return k == Kind::Classical;
    case Dialect::Z2:
    case Dialect::GBraid:
    case Dialect::Z2Quotient: return k == Kind::Marked;
    case Dialect::Virtual: return k == Kind::Classical || k == Kind::Virtual;
    case Dialect::Dotted:
    case Dialect::TwistedDotted: return k == Kind::Classical || k == Kind::Dot;
    case Dialect::Mixed: return true;
  }
  return false;
}

inline bool has_labels(Dialect d) {
  return d == Dialect::Z2 || d == Dialect::GBraid ||
         d == Dialect::Z2Quotient || d == Dialect::Mixed;
}

inline bool has_dots(Dialect d) {
  return d == Dialect::Dotted || d == Dialect::TwistedDotted ||
         d == Dialect::Mixed;
}

// One letter of a braid word. Virtual and Dot letters are involutions and
// always carry sign +1. Ordering is (kind, index, label, sign) with the
// positive letter first; the search engine's tie-breaking relies on it.
struct Token {
  Kind kind = Kind::Classical;
  int index = 1;
  int sign = 1;
  int label = 0;

  static constexpr Token crossing(int i, int sign = 1) {
    return {Kind::Classical, i, sign, 0};
  }
  static constexpr Token marked(int i, int label, int sign = 1) {
    return {Kind::Marked, i, sign, label};
  }
  static constexpr Token virt(int i) { return {Kind::Virtual, i, 1, 0}; }
  static constexpr Token dot(int j) { return {Kind::Dot, j, 1, 0}; }

  constexpr bool self_inverse() const {
    return kind == Kind::Virtual || kind == Kind::Dot;
  }
  constexpr bool is_crossing() const { return kind != Kind::Dot; }

  constexpr Token inverse() const {
    if (self_inverse()) {
      return *this;
    }
    return {kind, index, -sign, label};
  }

  constexpr bool cancels(Token const& other) const {
    return other == inverse();
  }

  friend constexpr bool operator==(Token const&, Token const&) = default;
  friend constexpr std::strong_ordering operator<=>(Token const& a,
                                                    Token const& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    if (auto c = a.index <=> b.index; c != 0) return c;
    if (auto c = a.label <=> b.label; c != 0) return c;
    return b.sign <=> a.sign;
  }
};

}  // namespace mbraid
