#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mbraid/token.hpp"

namespace mbraid {

// A finite group given by its Cayley table. Used as the label group of
// G-braids. The table is validated on construction: closure,
// associativity, a two-sided identity and two-sided inverses.
class FiniteGroupTable {
 public:
  FiniteGroupTable(std::string name, std::vector<std::string> labels,
                   std::vector<std::vector<int>> table)
      : name_(std::move(name)),
        labels_(std::move(labels)),
        table_(std::move(table)) {
    validate();
  }

  static FiniteGroupTable cyclic(int m) {
    if (m < 1) {
      throw error("cyclic group order must be positive");
    }
    std::vector<std::string> labels;
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int g = 0; g < m; ++g) {
      labels.push_back(std::to_string(g));
      for (int h = 0; h < m; ++h) {
        table[g][h] = (g + h) % m;
      }
    }
    return FiniteGroupTable("Z" + std::to_string(m), std::move(labels),
                            std::move(table));
  }

  static FiniteGroupTable trivial() {
    return FiniteGroupTable("1", {"e"}, {{0}});
  }

  // Permutations of {1,2,3} in lexicographic order of their images;
  // product g*h means "apply g, then h".
  static FiniteGroupTable symmetric3() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::string> labels{"e",     "(23)", "(12)",
                                    "(123)", "(132)", "(13)"};
    std::vector<std::vector<int>> table(6, std::vector<int>(6));
    for (int g = 0; g < 6; ++g) {
      for (int h = 0; h < 6; ++h) {
        std::array<int, 3> gh{};
        for (int x = 0; x < 3; ++x) {
          gh[x] = perms[h][perms[g][x]];
        }
        table[g][h] = static_cast<int>(
            std::find(perms.begin(), perms.end(), gh) - perms.begin());
      }
    }
    return FiniteGroupTable("S3", std::move(labels), std::move(table));
  }

  std::string const& name() const { return name_; }
  int order() const { return static_cast<int>(labels_.size()); }
  int identity() const { return identity_; }
  int multiply(int g, int h) const { return table_[g][h]; }
  int inverse(int g) const { return inverse_[g]; }
  std::string const& label(int g) const { return labels_[g]; }
  std::vector<std::string> const& labels() const { return labels_; }

  std::optional<int> find(std::string const& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
      return std::nullopt;
    }
    return static_cast<int>(it - labels_.begin());
  }

  bool contains(int g) const { return g >= 0 && g < order(); }

  friend bool operator==(FiniteGroupTable const& a,
                         FiniteGroupTable const& b) {
    return a.labels_ == b.labels_ && a.table_ == b.table_;
  }

 private:
  void validate() {
    int const m = order();
    if (m == 0 || static_cast<int>(table_.size()) != m) {
      throw error("group table must be square and non-empty");
    }
    for (auto const& row : table_) {
      if (static_cast<int>(row.size()) != m) {
        throw error("group table must be square");
      }
      for (int x : row) {
        if (x < 0 || x >= m) {
          throw error("group table entry out of range");
        }
      }
    }
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i].empty() ||
          labels_[i].find_first_of(" []") != std::string::npos) {
        throw error("group labels must be non-empty and free of ' ', '[', ']'");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (labels_[i] == labels_[j]) {
          throw error("duplicate group label '" + labels_[i] + "'");
        }
      }
    }
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        for (int c = 0; c < m; ++c) {
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
            throw error("group table is not associative");
          }
        }
      }
    }
    identity_ = -1;
    for (int e = 0; e < m && identity_ < 0; ++e) {
      bool ok = true;
      for (int g = 0; g < m && ok; ++g) {
        ok = table_[e][g] == g && table_[g][e] == g;
      }
      if (ok) {
        identity_ = e;
      }
    }
    if (identity_ < 0) {
      throw error("group table has no identity");
    }
    inverse_.assign(m, -1);
    for (int g = 0; g < m; ++g) {
      for (int h = 0; h < m; ++h) {
        if (table_[g][h] == identity_ && table_[h][g] == identity_) {
          inverse_[g] = h;
          break;
        }
      }
      if (inverse_[g] < 0) {
        throw error("element '" + labels_[g] + "' has no inverse");
      }
    }
  }

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> table_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

}  // namespace mbraid
