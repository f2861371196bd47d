#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "mbraid/presentation.hpp"

namespace mbraid {

enum class StepOp : char { Insert = '+', Delete = '-', Cancel = 'c' };

// One rewrite step. `relator` indexes symmetrized_relators() of the
// presentation and is unused for Cancel, which removes the inverse pair at
// positions pos, pos+1.
struct TraceStep {
  std::size_t pos = 0;
  std::size_t relator = 0;
  StepOp op = StepOp::Cancel;

  friend bool operator==(TraceStep const&, TraceStep const&) = default;
};

struct DerivationTrace {
  BraidWord start;
  std::vector<TraceStep> steps;
  BraidWord end;

  // Relator applications; free cancellations are not counted.
  std::size_t depth() const {
    std::size_t d = 0;
    for (auto const& s : steps) {
      d += s.op != StepOp::Cancel;
    }
    return d;
  }
};

// Applies the steps to `start`; throws on the first illegal step.
inline BraidWord replay(std::vector<SymmetrizedRelator> const& relators,
                        BraidWord const& start,
                        std::vector<TraceStep> const& steps) {
  std::vector<Token> w = start.letters();
  std::size_t k = 0;
  for (auto const& s : steps) {
    ++k;
    auto fail = [&](std::string const& why) {
      return error("trace step " + std::to_string(k) + ": " + why);
    };
    if (s.op == StepOp::Cancel) {
      if (s.pos + 1 >= w.size() || !w[s.pos].cancels(w[s.pos + 1])) {
        throw fail("no inverse pair at position " + std::to_string(s.pos));
      }
      w.erase(w.begin() + s.pos, w.begin() + s.pos + 2);
      continue;
    }
    if (s.relator >= relators.size()) {
      throw fail("unknown relator " + std::to_string(s.relator));
    }
    auto const& r = relators[s.relator].letters;
    if (s.op == StepOp::Insert) {
      if (s.pos > w.size()) {
        throw fail("insert position out of range");
      }
      w.insert(w.begin() + s.pos, r.begin(), r.end());
    } else {
      if (s.pos + r.size() > w.size() ||
          !std::equal(r.begin(), r.end(), w.begin() + s.pos)) {
        throw fail("relator " + std::to_string(s.relator) +
                   " does not occur at position " + std::to_string(s.pos));
      }
      w.erase(w.begin() + s.pos, w.begin() + s.pos + r.size());
    }
  }
  return start.with_letters(std::move(w));
}

inline BraidWord replay(std::vector<SymmetrizedRelator> const& relators,
                        DerivationTrace const& t) {
  return replay(relators, t.start, t.steps);
}

// Line format: "TRACE <dialect> n=<n>", one "<pos> <relator-id> <op>" per
// step ("*" as the id of a cancellation), "QED".
inline std::string serialize(DerivationTrace const& t) {
  std::string out = "TRACE " + std::string(dialect_name(t.start.dialect())) +
                    " n=" + std::to_string(t.start.strands()) + "\n";
  for (auto const& s : t.steps) {
    out += std::to_string(s.pos) + " " +
           (s.op == StepOp::Cancel ? std::string("*")
                                   : std::to_string(s.relator)) +
           " " + static_cast<char>(s.op) + "\n";
  }
  return out + "QED\n";
}

struct ParsedTrace {
  Dialect dialect;
  int strands;
  std::vector<TraceStep> steps;
};

inline ParsedTrace parse_trace(std::string const& text) {
  std::istringstream in(text);
  std::string line;
  auto fail = [](std::string const& why) {
    return error("malformed trace: " + why);
  };
  if (!std::getline(in, line)) {
    throw fail("missing header");
  }
  ParsedTrace out{};
  {
    std::istringstream head(line);
    std::string tag, dialect, nfield, extra;
    if (!(head >> tag >> dialect >> nfield) || tag != "TRACE" ||
        nfield.rfind("n=", 0) != 0 || (head >> extra)) {
      throw fail("bad header '" + line + "'");
    }
    out.dialect = parse_dialect(dialect);
    try {
      out.strands = std::stoi(nfield.substr(2));
    } catch (std::exception const&) {
      throw fail("bad strand count");
    }
  }
  bool done = false;
  while (std::getline(in, line)) {
    if (done) {
      throw fail("content after QED");
    }
    if (line == "QED") {
      done = true;
      continue;
    }
    std::istringstream ls(line);
    std::string pos, rel, op, extra;
    if (!(ls >> pos >> rel >> op) || (ls >> extra) || op.size() != 1 ||
        pos.find_first_not_of("0123456789") != std::string::npos) {
      throw fail("bad step '" + line + "'");
    }
    TraceStep s;
    s.pos = std::stoul(pos);
    switch (op[0]) {
      case '+': s.op = StepOp::Insert; break;
      case '-': s.op = StepOp::Delete; break;
      case 'c': s.op = StepOp::Cancel; break;
      default: throw fail("bad step '" + line + "'");
    }
    if (s.op == StepOp::Cancel) {
      if (rel != "*") {
        throw fail("cancellation carries no relator");
      }
    } else {
      if (rel.empty() ||
          rel.find_first_not_of("0123456789") != std::string::npos) {
        throw fail("bad relator id '" + rel + "'");
      }
      s.relator = std::stoul(rel);
    }
    out.steps.push_back(s);
  }
  if (!done) {
    throw fail("missing QED");
  }
  return out;
}

}  // namespace mbraid
