#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mbraid/word.hpp"

namespace mbraid {

enum class RelatorFamily {
  FarCommute,          // s_i s_j = s_j s_i, |i-j| >= 2 (any labels)
  BraidRelation,       // RIII, including the marked variants
  VirtualFarCommute,   // v_i v_j = v_j v_i
  VirtualBraid,        // v_i v_{i+1} v_i = v_{i+1} v_i v_{i+1}
  VirtualSquare,       // v_i^2 = e
  MixedBraid,          // s_i v_{i+1} v_i = v_{i+1} v_i s_{i+1}
  MixedFarCommute,     // s_i v_j = v_j s_i
  DotSquare,           // d_i^2 = e
  DotCommute,          // d_i d_j = d_j d_i
  FourDots,            // d_i d_{i+1} s_i d_i d_{i+1} = s_i
  TwistedFourDots,     // d_i d_{i+1} s_i d_i d_{i+1} = s_i^{-1}
  DotCrossingCommute,  // d_k s_i = s_i d_k, k not in {i, i+1}
  OddSquare,           // s_{i,1}^2 = e (quotient by odd involutions)
};

inline std::string_view family_name(RelatorFamily f) {
  switch (f) {
    case RelatorFamily::FarCommute: return "far-commute";
    case RelatorFamily::BraidRelation: return "braid";
    case RelatorFamily::VirtualFarCommute: return "virtual-far-commute";
    case RelatorFamily::VirtualBraid: return "virtual-braid";
    case RelatorFamily::VirtualSquare: return "virtual-square";
    case RelatorFamily::MixedBraid: return "mixed-braid";
    case RelatorFamily::MixedFarCommute: return "mixed-far-commute";
    case RelatorFamily::DotSquare: return "dot-square";
    case RelatorFamily::DotCommute: return "dot-commute";
    case RelatorFamily::FourDots: return "four-dots";
    case RelatorFamily::TwistedFourDots: return "twisted-four-dots";
    case RelatorFamily::DotCrossingCommute: return "dot-crossing-commute";
    case RelatorFamily::OddSquare: return "odd-square";
  }
  return "?";
}

// Relators built only from crossings (the Artin-type moves); everything
// else involves dots, virtual letters or the odd-square quotient.
inline bool is_artin_family(RelatorFamily f) {
  return f == RelatorFamily::FarCommute || f == RelatorFamily::BraidRelation;
}

struct Relator {
  std::string name;
  RelatorFamily family;
  BraidWord word;  // lhs * rhs^-1
};

struct Extensions {
  bool dot_crossing_far_commute = true;

  friend bool operator==(Extensions const&, Extensions const&) = default;
};

class GroupPresentation {
 public:
  GroupPresentation(Dialect d, int n, GroupPtr g, Extensions ext,
                    std::vector<Relator> relators)
      : dialect_(d),
        strands_(n),
        group_(std::move(g)),
        extensions_(ext),
        relators_(std::move(relators)) {}

  Dialect dialect() const { return dialect_; }
  int strands() const { return strands_; }
  GroupPtr const& group() const { return group_; }
  Extensions const& extensions() const { return extensions_; }
  std::vector<Relator> const& relators() const { return relators_; }

  BraidWord word(std::vector<Token> letters) const {
    return make_word(dialect_, strands_, std::move(letters), group_);
  }
  BraidWord identity() const { return word({}); }

  bool accepts(BraidWord const& w) const {
    return w.dialect() == dialect_ && w.strands() == strands_ &&
           w.compatible(identity());
  }

 private:
  Dialect dialect_;
  int strands_;
  GroupPtr group_;
  Extensions extensions_;
  std::vector<Relator> relators_;
};

namespace detail {

inline std::vector<Token> inverse_letters(std::vector<Token> const& w) {
  std::vector<Token> out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back(it->inverse());
  }
  return out;
}

inline std::vector<Token> relation(std::vector<Token> lhs,
                                   std::vector<Token> const& rhs) {
  auto inv = inverse_letters(rhs);
  lhs.insert(lhs.end(), inv.begin(), inv.end());
  return lhs;
}

class RelatorBuilder {
 public:
  RelatorBuilder(Dialect d, int n, GroupPtr g)
      : dialect_(d), n_(n), group_(std::move(g)) {}

  void add(std::string name, RelatorFamily f, std::vector<Token> lhs,
           std::vector<Token> const& rhs) {
    out_.push_back({std::move(name), f,
                    make_word(dialect_, n_, relation(std::move(lhs), rhs),
                              group_)});
  }

  std::vector<Relator> take() { return std::move(out_); }

 private:
  Dialect dialect_;
  int n_;
  GroupPtr group_;
  std::vector<Relator> out_;
};

inline std::string label_text(int label, GroupPtr const& g) {
  return g ? g->label(label) : std::to_string(label);
}

inline void add_artin(RelatorBuilder& b, int n) {
  using T = Token;
  for (int i = 1; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      b.add("far(" + std::to_string(i) + "," + std::to_string(j) + ")",
            RelatorFamily::FarCommute, {T::crossing(i), T::crossing(j)},
            {T::crossing(j), T::crossing(i)});
    }
  }
  for (int i = 1; i + 1 < n; ++i) {
    b.add("braid(" + std::to_string(i) + ")", RelatorFamily::BraidRelation,
          {T::crossing(i), T::crossing(i + 1), T::crossing(i)},
          {T::crossing(i + 1), T::crossing(i), T::crossing(i + 1)});
  }
}

inline void add_marked_far(RelatorBuilder& b, int n, int labels,
                           GroupPtr const& g) {
  using T = Token;
  for (int i = 1; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      for (int x = 0; x < labels; ++x) {
        for (int y = 0; y < labels; ++y) {
          b.add("far(" + std::to_string(i) + "[" + label_text(x, g) + "]," +
                    std::to_string(j) + "[" + label_text(y, g) + "])",
                RelatorFamily::FarCommute, {T::marked(i, x), T::marked(j, y)},
                {T::marked(j, y), T::marked(i, x)});
        }
      }
    }
  }
}

inline void add_dotted(RelatorBuilder& b, int n, bool twisted,
                       Extensions const& ext) {
  using T = Token;
  add_artin(b, n);
  for (int i = 1; i <= n; ++i) {
    b.add("dot-square(" + std::to_string(i) + ")", RelatorFamily::DotSquare,
          {T::dot(i), T::dot(i)}, {});
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      b.add("dot-commute(" + std::to_string(i) + "," + std::to_string(j) + ")",
            RelatorFamily::DotCommute, {T::dot(i), T::dot(j)},
            {T::dot(j), T::dot(i)});
    }
  }
  // Every crossing position 1..n-1 gets a four-dot relation.
  for (int i = 1; i < n; ++i) {
    std::vector<Token> lhs{T::dot(i), T::dot(i + 1), T::crossing(i), T::dot(i),
                           T::dot(i + 1)};
    if (twisted) {
      b.add("twisted-four-dots(" + std::to_string(i) + ")",
            RelatorFamily::TwistedFourDots, lhs, {T::crossing(i, -1)});
    } else {
      b.add("four-dots(" + std::to_string(i) + ")", RelatorFamily::FourDots,
            lhs, {T::crossing(i)});
    }
  }
  if (ext.dot_crossing_far_commute) {
    for (int i = 1; i < n; ++i) {
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == i + 1) {
          continue;
        }
        b.add("dot-crossing(" + std::to_string(k) + "," + std::to_string(i) +
                  ")",
              RelatorFamily::DotCrossingCommute, {T::dot(k), T::crossing(i)},
              {T::crossing(i), T::dot(k)});
      }
    }
  }
}

}  // namespace detail

// True iff eps + eta + xi is even.
struct ParityTriple {
  int eps = 0;
  int eta = 0;
  int xi = 0;
};

inline bool z2_triple_admissible(ParityTriple const& t) {
  return (t.eps + t.eta + t.xi) % 2 == 0;
}

// Admissible Z2 braid-relation triples in lexicographic order:
// (0,0,0), (0,1,1), (1,0,1), (1,1,0).
inline std::vector<ParityTriple> admissible_parity_triples() {
  std::vector<ParityTriple> out;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 2; ++c) {
        if (z2_triple_admissible({a, b, c})) {
          out.push_back({a, b, c});
        }
      }
    }
  }
  return out;
}

// The complete relator list of one of the groups. The list is a pure
// function of its arguments, order included.
inline GroupPresentation presentation_for(Dialect d, int n,
                                          GroupPtr g = nullptr,
                                          Extensions ext = {}) {
  using T = Token;
  if (n < 2) {
    throw error("presentations need at least 2 strands");
  }
  if ((d == Dialect::GBraid) != static_cast<bool>(g)) {
    throw error(d == Dialect::GBraid ? "gbraid presentation needs a group table"
                                     : "group table given for a dialect "
                                       "without labels");
  }
  if (d == Dialect::Mixed) {
    throw error("the mixed dialect has no presentation");
  }
  detail::RelatorBuilder b(d, n, g);
  switch (d) {
    case Dialect::Classical: detail::add_artin(b, n); break;
    case Dialect::Z2:
    case Dialect::Z2Quotient: {
      detail::add_marked_far(b, n, 2, nullptr);
      for (int i = 1; i + 1 < n; ++i) {
        for (auto const& t : admissible_parity_triples()) {
          b.add("braid(" + std::to_string(i) + ";" + std::to_string(t.eps) +
                    "," + std::to_string(t.eta) + "," + std::to_string(t.xi) +
                    ")",
                RelatorFamily::BraidRelation,
                {T::marked(i, t.eps), T::marked(i + 1, t.eta),
                 T::marked(i, t.xi)},
                {T::marked(i + 1, t.xi), T::marked(i, t.eta),
                 T::marked(i + 1, t.eps)});
        }
      }
      if (d == Dialect::Z2Quotient) {
        for (int i = 1; i < n; ++i) {
          b.add("odd-square(" + std::to_string(i) + ")",
                RelatorFamily::OddSquare, {T::marked(i, 1), T::marked(i, 1)},
                {});
        }
      }
      break;
    }
    case Dialect::GBraid: {
      detail::add_marked_far(b, n, g->order(), g);
      for (int i = 1; i + 1 < n; ++i) {
        for (int x = 0; x < g->order(); ++x) {
          for (int y = 0; y < g->order(); ++y) {
            int const w = g->inverse(g->multiply(x, y));
            b.add("braid(" + std::to_string(i) + ";" + g->label(x) + "," +
                      g->label(y) + "," + g->label(w) + ")",
                  RelatorFamily::BraidRelation,
                  {T::marked(i, x), T::marked(i + 1, y), T::marked(i, w)},
                  {T::marked(i + 1, g->inverse(w)),
                   T::marked(i, g->inverse(y)),
                   T::marked(i + 1, g->inverse(x))});
          }
        }
      }
      break;
    }
    case Dialect::Virtual: {
      detail::add_artin(b, n);
      for (int i = 1; i < n; ++i) {
        for (int j = i + 2; j < n; ++j) {
          b.add("virtual-far(" + std::to_string(i) + "," + std::to_string(j) +
                    ")",
                RelatorFamily::VirtualFarCommute, {T::virt(i), T::virt(j)},
                {T::virt(j), T::virt(i)});
        }
      }
      for (int i = 1; i + 1 < n; ++i) {
        b.add("virtual-braid(" + std::to_string(i) + ")",
              RelatorFamily::VirtualBraid,
              {T::virt(i), T::virt(i + 1), T::virt(i)},
              {T::virt(i + 1), T::virt(i), T::virt(i + 1)});
      }
      for (int i = 1; i < n; ++i) {
        b.add("virtual-square(" + std::to_string(i) + ")",
              RelatorFamily::VirtualSquare, {T::virt(i), T::virt(i)}, {});
      }
      for (int i = 1; i + 1 < n; ++i) {
        b.add("mixed-braid(" + std::to_string(i) + ")",
              RelatorFamily::MixedBraid,
              {T::crossing(i), T::virt(i + 1), T::virt(i)},
              {T::virt(i + 1), T::virt(i), T::crossing(i + 1)});
      }
      for (int i = 1; i < n; ++i) {
        for (int j = 1; j < n; ++j) {
          if (j - i >= 2 || i - j >= 2) {
            b.add("mixed-far(" + std::to_string(i) + "," + std::to_string(j) +
                      ")",
                  RelatorFamily::MixedFarCommute, {T::crossing(i), T::virt(j)},
                  {T::virt(j), T::crossing(i)});
          }
        }
      }
      break;
    }
    case Dialect::Dotted: detail::add_dotted(b, n, false, ext); break;
    case Dialect::TwistedDotted: detail::add_dotted(b, n, true, ext); break;
    case Dialect::Mixed: break;
  }
  bool const dotted = d == Dialect::Dotted || d == Dialect::TwistedDotted;
  return GroupPresentation(d, n, std::move(g),
                           dotted ? ext : Extensions{false}, b.take());
}

inline GroupPresentation quotient_presentation(int n) {
  return presentation_for(Dialect::Z2Quotient, n);
}

struct SymmetrizedRelator {
  std::vector<Token> letters;
  std::size_t origin;  // index into GroupPresentation::relators()
};

// Closure of the relators under cyclic rotation and inversion, freely
// reduced, empty words dropped, first occurrence kept. Order: relators in
// presentation order; for each, the rotations of r, then those of r^-1.
inline std::vector<SymmetrizedRelator> symmetrized_relators(
    GroupPresentation const& p) {
  std::vector<SymmetrizedRelator> out;
  std::map<std::vector<Token>, std::size_t> seen;
  auto push = [&](std::vector<Token> w, std::size_t origin) {
    w = free_reduce(std::span<Token const>(w));
    if (w.empty() || seen.count(w)) {
      return;
    }
    seen.emplace(w, out.size());
    out.push_back({std::move(w), origin});
  };
  for (std::size_t k = 0; k < p.relators().size(); ++k) {
    auto const& r = p.relators()[k].word.letters();
    for (auto const& base : {r, detail::inverse_letters(r)}) {
      for (std::size_t s = 0; s < base.size(); ++s) {
        std::vector<Token> rot(base.begin() + s, base.end());
        rot.insert(rot.end(), base.begin(), base.begin() + s);
        push(std::move(rot), k);
      }
    }
  }
  return out;
}

}  // namespace mbraid
