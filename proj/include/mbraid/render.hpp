#pragma once

#include <algorithm>
#include <string>

#include "mbraid/word.hpp"

namespace mbraid {

// Flat diagram as SVG 1.1: one column per letter, strands running left to
// right, under-strands broken around the crossing, virtual crossings
// circled, dots as filled circles, marked crossings labelled. Output is a
// pure function of the word.
inline std::string render_svg(BraidWord const& w) {
  constexpr int step = 40;
  constexpr int margin = 20;
  int const n = w.strands();
  int const rows = static_cast<int>(w.size());
  // Computed with strands vertical, then transposed on output.
  int const height = step * (n + 1);
  int const width = 2 * margin + step * std::max(rows, 1);
  auto x = [&](int pos) { return step * pos; };
  auto num = [](int v) { return std::to_string(v); };
  auto line = [&](int x1, int y1, int x2, int y2) {
    return "<line x1=\"" + num(y1) + "\" y1=\"" + num(x1) + "\" x2=\"" +
           num(y2) + "\" y2=\"" + num(x2) + "\"/>\n";
  };

  std::string body;
  for (int r = 0; r < std::max(rows, 1); ++r) {
    int const y0 = margin + step * r;
    int const y1 = y0 + step;
    int const ym = y0 + step / 2;
    Token const* t = rows ? &w[r] : nullptr;
    for (int p = 1; p <= n; ++p) {
      bool const busy = t && t->is_crossing() &&
                        (p == t->index || p == t->index + 1);
      if (!busy) {
        body += line(x(p), y0, x(p), y1);
      }
    }
    if (!t) {
      continue;
    }
    int const i = t->index;
    switch (t->kind) {
      case Kind::Dot:
        body += "<circle class=\"dot\" cx=\"" + num(ym) + "\" cy=\"" +
                num(x(i)) + "\" r=\"4\"/>\n";
        break;
      case Kind::Virtual:
        body += line(x(i), y0, x(i + 1), y1);
        body += line(x(i + 1), y0, x(i), y1);
        body += "<circle class=\"virtual\" cx=\"" + num(ym) + "\" cy=\"" +
                num((x(i) + x(i + 1)) / 2) + "\" r=\"8\"/>\n";
        break;
      case Kind::Classical:
      case Kind::Marked: {
        // For a positive letter the strand moving from position i to i+1
        // passes over.
        int const ox0 = t->sign > 0 ? x(i) : x(i + 1);
        int const ox1 = t->sign > 0 ? x(i + 1) : x(i);
        body += line(ox0, y0, ox1, y1);
        int const ux0 = ox1;
        int const ux1 = ox0;
        int const gap = 6;
        int const dir = ux1 > ux0 ? 1 : -1;
        int const xm = (ux0 + ux1) / 2;
        body += line(ux0, y0, xm - dir * gap, ym - gap);
        body += line(xm + dir * gap, ym + gap, ux1, y1);
        if (t->kind == Kind::Marked) {
          std::string label =
              w.group() ? w.group()->label(t->label) : num(t->label);
          body += "<text x=\"" + num(ym - 4) + "\" y=\"" + num(xm - 10) +
                  "\">" + label + "</text>\n";
        }
        break;
      }
    }
  }

  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         num(width) + "\" height=\"" + num(height) + "\" viewBox=\"0 0 " +
         num(width) + " " + num(height) +
         "\">\n"
         "<title>" +
         format(w) +
         "</title>\n"
         "<g stroke=\"black\" stroke-width=\"2\" fill=\"none\" "
         "font-family=\"sans-serif\" font-size=\"12\">\n" +
         body +
         "</g>\n"
         "<style>circle.dot{fill:black}circle.virtual{stroke-width:1}"
         "text{fill:black;stroke:none}</style>\n"
         "</svg>\n";
}

}  // namespace mbraid
