#include <catch_amalgamated.hpp>

#include <set>

#include "mbraid.hpp"
#include "support/random_words.hpp"

using namespace mbraid;
using mbraid::testing::Rng;

namespace {

using Letters = std::vector<Token>;

GroupPtr group(std::string const& name) {
  if (name == "S3") {
    return std::make_shared<FiniteGroupTable const>(
        FiniteGroupTable::symmetric3());
  }
  return std::make_shared<FiniteGroupTable const>(
      FiniteGroupTable::cyclic(std::stoi(name.substr(1))));
}

std::vector<GroupPresentation> all_presentations(int n) {
  std::vector<GroupPresentation> out;
  for (Dialect d : {Dialect::Classical, Dialect::Z2, Dialect::Virtual,
                    Dialect::Dotted, Dialect::TwistedDotted,
                    Dialect::Z2Quotient}) {
    out.push_back(presentation_for(d, n));
  }
  out.push_back(presentation_for(Dialect::Dotted, n, nullptr, {false}));
  for (auto g : {"Z2", "Z3", "S3"}) {
    out.push_back(presentation_for(Dialect::GBraid, n, group(g)));
  }
  return out;
}

Letters inverse_of(Letters const& w) {
  Letters out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

// Plain closure under rotation and inversion, by brute force.
std::set<Letters> closure(std::vector<Letters> const& words) {
  std::set<Letters> out;
  for (auto const& w0 : words) {
    for (auto const& w : {w0, inverse_of(w0)}) {
      for (std::size_t k = 0; k < w.size(); ++k) {
        Letters r(w.begin() + k, w.end());
        r.insert(r.end(), w.begin(), w.begin() + k);
        r = free_reduce(std::span<Token const>(r));
        if (!r.empty()) out.insert(r);
      }
    }
  }
  return out;
}

std::set<Letters> as_set(std::vector<SymmetrizedRelator> const& rels) {
  std::set<Letters> out;
  for (auto const& r : rels) out.insert(r.letters);
  return out;
}

}  // namespace

TEST_CASE("classical presentation on three strands") {
  auto p = presentation_for(Dialect::Classical, 3);
  REQUIRE(p.relators().size() == 1);
  CHECK(format(p.relators()[0].word) == "s1 s2 s1 S2 S1 S2");
  CHECK(p.relators()[0].family == RelatorFamily::BraidRelation);
  auto p4 = presentation_for(Dialect::Classical, 4);
  CHECK(p4.relators().size() == 3);  // far(1,3), braid(1), braid(2)
}

TEST_CASE("presentations need two strands and a group exactly for gbraid") {
  CHECK_THROWS_AS(presentation_for(Dialect::Classical, 1), error);
  CHECK_THROWS_AS(presentation_for(Dialect::GBraid, 3), error);
  CHECK_THROWS_AS(presentation_for(Dialect::Z2, 3, group("Z2")), error);
  CHECK(presentation_for(Dialect::Z2, 2).relators().empty());
}

TEST_CASE("z2 braid relators are exactly the admissible parity triples") {
  CHECK(z2_triple_admissible({0, 0, 0}));
  CHECK(z2_triple_admissible({1, 1, 0}));
  CHECK_FALSE(z2_triple_admissible({1, 0, 0}));
  CHECK_FALSE(z2_triple_admissible({1, 1, 1}));

  for (int n : {3, 4, 5}) {
    auto p = presentation_for(Dialect::Z2, n);
    std::set<std::tuple<int, int, int, int>> seen;
    for (auto const& r : p.relators()) {
      if (r.family != RelatorFamily::BraidRelation) continue;
      auto const& w = r.word;
      REQUIRE(w.size() == 6);
      int const i = w[0].index;
      // lhs s_{i,e} s_{i+1,h} s_{i,x}; rhs inverted in the tail
      CHECK(w[3] == Token::marked(i + 1, w[0].label, -1));
      CHECK(w[4] == Token::marked(i, w[1].label, -1));
      CHECK(w[5] == Token::marked(i + 1, w[2].label, -1));
      CHECK((w[0].label + w[1].label + w[2].label) % 2 == 0);
      seen.emplace(i, w[0].label, w[1].label, w[2].label);
    }
    CHECK(seen.size() == 4u * (n - 2));
  }
}

TEST_CASE("gbraid over Z3 has nine braid relators on three strands") {
  auto G = group("Z3");
  auto p = presentation_for(Dialect::GBraid, 3, G);
  int braid = 0;
  for (auto const& r : p.relators()) {
    if (r.family != RelatorFamily::BraidRelation) continue;
    ++braid;
    auto const& w = r.word;
    CHECK((w[0].label + w[1].label + w[2].label) % 3 == 0);
  }
  // oracle: count (g,h,w) in Z3^3 with g+h+w = 0
  int expected = 0;
  for (int g = 0; g < 3; ++g)
    for (int h = 0; h < 3; ++h)
      for (int w = 0; w < 3; ++w) expected += (g + h + w) % 3 == 0;
  CHECK(braid == expected);
  CHECK(braid == 9);
}

TEST_CASE("quotient presentation adds odd squares") {
  auto q = quotient_presentation(3);
  auto z = presentation_for(Dialect::Z2, 3);
  REQUIRE(q.relators().size() == z.relators().size() + 2);
  CHECK(format(q.relators()[q.relators().size() - 2].word) == "s1[1] s1[1]");
  CHECK(format(q.relators().back().word) == "s2[1] s2[1]");
}

TEST_CASE("dotted presentation with and without the extension") {
  auto on = presentation_for(Dialect::Dotted, 4);
  auto off = presentation_for(Dialect::Dotted, 4, nullptr, {false});
  auto count = [](GroupPresentation const& p, RelatorFamily f) {
    int k = 0;
    for (auto const& r : p.relators()) k += r.family == f;
    return k;
  };
  CHECK(count(on, RelatorFamily::DotSquare) == 4);
  CHECK(count(on, RelatorFamily::DotCommute) == 6);
  CHECK(count(on, RelatorFamily::FourDots) == 3);
  // dot k commutes with s_i for k outside {i, i+1}: 2 per i
  CHECK(count(on, RelatorFamily::DotCrossingCommute) == 6);
  CHECK(count(off, RelatorFamily::DotCrossingCommute) == 0);
  auto tw = presentation_for(Dialect::TwistedDotted, 3);
  CHECK(count(tw, RelatorFamily::TwistedFourDots) == 2);
  CHECK(count(tw, RelatorFamily::FourDots) == 0);
}

TEST_CASE("every dotted relator preserves goodness") {
  for (Dialect d : {Dialect::Dotted, Dialect::TwistedDotted}) {
    auto const p = presentation_for(d, 4);
    for (auto const& r : p.relators()) {
      for (int c : scan_strands(r.word).dots) {
        CHECK(c % 2 == 0);
      }
    }
  }
}

TEST_CASE("symmetrized relators") {
  auto p = presentation_for(Dialect::Classical, 3);
  auto s = symmetrized_relators(p);
  CHECK(s.size() == 12);
  CHECK(as_set(s) == closure({p.relators()[0].word.letters()}));

  auto r = p.relators()[0].word;
  CHECK(as_set(s).count(invert(r).letters()) == 1);

  // a trivial relator drops out
  auto v = presentation_for(Dialect::Virtual, 3);
  for (auto const& x : symmetrized_relators(v)) {
    CHECK_FALSE(x.letters.empty());
  }
}

TEST_CASE("symmetrized closure is closed") {
  for (int n : {3, 4}) {
    for (auto const& p : all_presentations(n)) {
      auto s = as_set(symmetrized_relators(p));
      std::vector<Letters> again(s.begin(), s.end());
      CHECK(closure(again) == s);
      std::vector<Letters> originals;
      for (auto const& r : p.relators()) originals.push_back(r.word.letters());
      CHECK(closure(originals) == s);
    }
  }
}

TEST_CASE("presentations are deterministic") {
  auto a = symmetrized_relators(presentation_for(Dialect::Dotted, 4));
  auto b = symmetrized_relators(presentation_for(Dialect::Dotted, 4));
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].letters == b[k].letters);
    CHECK(a[k].origin == b[k].origin);
  }
}

TEST_CASE("invariants examples") {
  auto z = presentation_for(Dialect::Z2, 3);
  auto sq = parse("s1[1] s1[1]", Dialect::Z2, 3);
  auto rec = invariants(sq, z);
  auto e = invariants(z.identity(), z);
  auto cert = first_difference(rec, e);
  REQUIRE(cert);
  CHECK(cert->component == "exponent sum label 1");
  CHECK(cert->left == "2");
  CHECK(cert->right == "0");

  CHECK(e.permutation == identity_permutation(3));
  for (auto const& [name, value] : e.abelian) CHECK(value == 0);

  auto d = presentation_for(Dialect::Dotted, 2);
  auto f = invariants(parse("d1 s1 d2 d1 s1 d2", Dialect::Dotted, 2), d);
  CHECK(f.dot_parity == std::vector<int>{0, 0});
  CHECK(f.abelian[0].second == 2);
}

TEST_CASE("invariants are unchanged by relator insertion") {
  Rng rng(2024);
  for (int n : {3, 4}) {
    for (auto const& p : all_presentations(n)) {
      auto rels = symmetrized_relators(p);
      for (int k = 0; k < 100; ++k) {
        auto w = mbraid::testing::random_word(rng, p.dialect(), n, 10,
                                              p.group());
        auto w2 = free_reduce(mbraid::testing::insert_relator(rng, w, rels));
        CHECK(invariants(w, p) == invariants(w2, p));
      }
    }
  }
}
