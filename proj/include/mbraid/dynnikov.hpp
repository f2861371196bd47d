#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mbraid/word.hpp"

namespace mbraid {

using BigInt = boost::multiprecision::cpp_int;

// Dynnikov coordinates (a_1, b_1, ..., a_n, b_n) of a lamination. Braids act
// on the right, one generator at a time; a braid is trivial exactly when it
// fixes the canonical vector (0, 1, 0, 1, ..., 0, 1).
struct DynnikovCoordinates {
  std::vector<BigInt> a;
  std::vector<BigInt> b;

  static DynnikovCoordinates canonical(int n) {
    return {std::vector<BigInt>(n, 0), std::vector<BigInt>(n, 1)};
  }

  friend bool operator==(DynnikovCoordinates const&,
                         DynnikovCoordinates const&) = default;
};

namespace detail {

inline BigInt pos(BigInt const& x) { return x > 0 ? x : BigInt(0); }
inline BigInt neg(BigInt const& x) { return x < 0 ? x : BigInt(0); }

inline void act(DynnikovCoordinates& c, int i, int sign) {
  std::size_t const k = i - 1;
  BigInt const ai = c.a[k], bi = c.b[k], aj = c.a[k + 1], bj = c.b[k + 1];
  if (sign > 0) {
    BigInt const t = ai - neg(bi) - aj + pos(bj);
    c.a[k] = ai + pos(bi) + pos(pos(bj) - t);
    c.b[k] = bj - pos(t);
    c.a[k + 1] = aj + neg(bj) + neg(neg(bi) + t);
    c.b[k + 1] = bi + pos(t);
  } else {
    BigInt const t = ai + neg(bi) - aj - pos(bj);
    c.a[k] = ai - pos(bi) - pos(pos(bj) + t);
    c.b[k] = bj + neg(t);
    c.a[k + 1] = aj - neg(bj) - neg(neg(bi) - t);
    c.b[k + 1] = bi - neg(t);
  }
}

inline void require_classical(BraidWord const& w) {
  if (w.dialect() != Dialect::Classical) {
    throw error("classical braid word expected, got " +
                std::string(dialect_name(w.dialect())));
  }
}

}  // namespace detail

inline DynnikovCoordinates coordinate_action(BraidWord const& w,
                                             DynnikovCoordinates start) {
  detail::require_classical(w);
  for (auto const& t : w) {
    detail::act(start, t.index, t.sign);
  }
  return start;
}

inline DynnikovCoordinates coordinate_action(BraidWord const& w) {
  detail::require_classical(w);
  if (w.strands() < 3) {
    throw error("coordinate action needs at least 3 strands; use the "
                "exponent sum for 2 strands");
  }
  return coordinate_action(w, DynnikovCoordinates::canonical(w.strands()));
}

inline bool classical_equal(BraidWord const& u, BraidWord const& v) {
  detail::require_classical(u);
  detail::require_classical(v);
  if (u.strands() != v.strands()) {
    throw error("strand counts differ");
  }
  if (u.strands() < 3) {
    long sum = 0;
    for (auto const& t : u) sum += t.sign;
    for (auto const& t : v) sum -= t.sign;
    return sum == 0;
  }
  auto const canonical = DynnikovCoordinates::canonical(u.strands());
  return coordinate_action(u * invert(v)) == canonical;
}

}  // namespace mbraid
