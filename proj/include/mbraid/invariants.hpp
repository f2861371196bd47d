#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mbraid/presentation.hpp"

namespace mbraid {

// Quantities left unchanged by every relator of the presentation the record
// was computed for; two words whose records differ are distinct.
struct InvariantRecord {
  Permutation permutation;
  // Named integer components, in a fixed per-dialect order.
  std::vector<std::pair<std::string, std::int64_t>> abelian;
  std::vector<int> dot_parity;  // per strand, dotted dialects only

  friend bool operator==(InvariantRecord const&,
                         InvariantRecord const&) = default;
};

struct Certificate {
  std::string component;
  std::string left;
  std::string right;

  std::string describe() const {
    return component + ": " + left + " vs " + right;
  }
};

namespace detail {

inline std::int64_t mod2(std::int64_t x) { return ((x % 2) + 2) % 2; }

// Label classes {g, g^-1}; representative is the smaller index.
inline int label_class(int label, GroupPtr const& g) {
  if (!g) {
    return label;
  }
  return std::min(label, g->inverse(label));
}

inline std::string label_class_name(int rep, GroupPtr const& g) {
  if (!g) {
    return std::to_string(rep);
  }
  int const inv = g->inverse(rep);
  if (inv == rep) {
    return g->label(rep);
  }
  return g->label(rep) + "," + g->label(inv);
}

}  // namespace detail

inline InvariantRecord invariants(BraidWord const& w,
                                  GroupPresentation const& p) {
  if (!p.accepts(w)) {
    throw error("word does not belong to the presentation's dialect");
  }
  InvariantRecord rec;
  auto const scan = scan_strands(w);
  rec.permutation = scan.perm;

  std::int64_t crossing = 0;
  std::int64_t virtuals = 0;
  int const labels = detail::label_count(w.dialect(), w.group());
  std::vector<std::int64_t> per_label(labels, 0);
  for (auto const& t : w) {
    switch (t.kind) {
      case Kind::Classical: crossing += t.sign; break;
      case Kind::Marked:
        per_label[detail::label_class(t.label, w.group())] += t.sign;
        break;
      case Kind::Virtual: ++virtuals; break;
      case Kind::Dot: break;
    }
  }

  switch (p.dialect()) {
    case Dialect::Classical:
      rec.abelian.emplace_back("exponent sum", crossing);
      break;
    case Dialect::Virtual:
      rec.abelian.emplace_back("exponent sum", crossing);
      rec.abelian.emplace_back("virtual count mod 2", detail::mod2(virtuals));
      break;
    case Dialect::Z2:
      rec.abelian.emplace_back("odd exponent sum mod 2",
                               detail::mod2(per_label[1]));
      rec.abelian.emplace_back("exponent sum label 0", per_label[0]);
      rec.abelian.emplace_back("exponent sum label 1", per_label[1]);
      break;
    case Dialect::Z2Quotient:
      rec.abelian.emplace_back("odd exponent sum mod 2",
                               detail::mod2(per_label[1]));
      rec.abelian.emplace_back("exponent sum label 0", per_label[0]);
      break;
    case Dialect::GBraid:
      for (int c = 0; c < labels; ++c) {
        if (detail::label_class(c, w.group()) == c) {
          rec.abelian.emplace_back(
              "exponent sum labels {" + detail::label_class_name(c, w.group()) +
                  "}",
              per_label[c]);
        }
      }
      break;
    case Dialect::Dotted:
      rec.abelian.emplace_back("crossing exponent sum", crossing);
      break;
    case Dialect::TwistedDotted:
      rec.abelian.emplace_back("crossing exponent sum mod 2",
                               detail::mod2(crossing));
      break;
    case Dialect::Mixed: break;
  }
  if (p.dialect() == Dialect::Dotted || p.dialect() == Dialect::TwistedDotted) {
    for (int c : scan.dots) {
      rec.dot_parity.push_back(c % 2);
    }
  }
  return rec;
}

// First component (in record order) on which the records differ.
inline std::optional<Certificate> first_difference(InvariantRecord const& a,
                                                   InvariantRecord const& b) {
  if (a.permutation != b.permutation) {
    return Certificate{"permutation", format_permutation(a.permutation),
                       format_permutation(b.permutation)};
  }
  for (std::size_t i = 0; i < a.abelian.size() && i < b.abelian.size(); ++i) {
    if (a.abelian[i] != b.abelian[i]) {
      return Certificate{a.abelian[i].first, std::to_string(a.abelian[i].second),
                         std::to_string(b.abelian[i].second)};
    }
  }
  if (a.dot_parity != b.dot_parity) {
    return Certificate{"dot parity", format_permutation(a.dot_parity),
                       format_permutation(b.dot_parity)};
  }
  return std::nullopt;
}

inline std::string format(InvariantRecord const& r) {
  std::string out = "permutation " + format_permutation(r.permutation) + "\n";
  for (auto const& [name, value] : r.abelian) {
    out += name + " " + std::to_string(value) + "\n";
  }
  if (!r.dot_parity.empty()) {
    out += "dot parity " + format_permutation(r.dot_parity) + "\n";
  }
  return out;
}

}  // namespace mbraid
