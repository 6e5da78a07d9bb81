#pragma once

// Presentation of wiring diagrams. Row 1 is drawn at the top; the letter at
// time t crosses rows w_t and w_t + 1 in column t. Output is deterministic
// for a given word and spec.

#include <cstddef>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "little.hpp"
#include "permutation.hpp"

namespace redword {

  enum class RenderFormat { ascii, svg };

  struct RenderSpec {
    RenderFormat          format = RenderFormat::ascii;
    std::set<std::size_t> highlight;  // 1-based crossing indices
    bool                  labels = true;
  };

  namespace detail {
    inline void check_highlight(Word const& word, RenderSpec const& spec) {
      for (auto t : spec.highlight) {
        if (t < 1 || t > word.size()) {
          throw domain_error("highlighted crossing " + std::to_string(t)
                             + " out of range 1.." + std::to_string(word.size()));
        }
      }
    }

    inline std::string pad_left(std::string s, std::size_t width) {
      return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
    }

    // Coordinates are multiples of 1/2; print them without floating point.
    inline std::string half_units(int twice) {
      std::string s = std::to_string(twice / 2);
      if (twice % 2 != 0) {
        s += ".5";
      }
      if (twice < 0 && twice / 2 == 0) {
        s = "-" + s;
      }
      return s;
    }
  }  // namespace detail

  inline std::string render_wiring_ascii(Word const& word, RenderSpec const& spec = {}) {
    detail::check_highlight(word, spec);
    auto const        d     = wiring_diagram(word);
    std::size_t const n     = d.n;
    std::size_t const width = std::to_string(n).size();
    auto const&       final = d.states.back();

    std::vector<std::string> lines(2 * n - 1);
    for (std::size_t r = 1; r <= n; ++r) {
      auto& wire = lines[2 * (r - 1)];
      wire       = spec.labels ? detail::pad_left(std::to_string(r), width) + " -" : "-";
      if (r < n) {
        lines[2 * r - 1] = std::string(spec.labels ? width + 2 : 1, ' ');
      }
    }
    for (std::size_t t = 1; t <= word.size(); ++t) {
      auto const a = static_cast<std::size_t>(word[t - 1]);
      for (std::size_t r = 1; r <= n; ++r) {
        auto& wire = lines[2 * (r - 1)];
        if (r == a) {
          wire += "-\\ /-";
        } else if (r == a + 1) {
          wire += "-/ \\-";
        } else {
          wire += "-----";
        }
        if (r < n) {
          char const glyph = spec.highlight.count(t) ? '#' : 'X';
          lines[2 * r - 1] += r == a ? std::string("  ") + glyph + "  " : "     ";
        }
      }
    }
    std::string out;
    for (std::size_t r = 1; r <= n; ++r) {
      auto& wire = lines[2 * (r - 1)];
      wire += "-";
      if (spec.labels) {
        wire += " " + std::to_string(final(r));
      }
      out += wire + "\n";
      if (r < n) {
        auto gap = lines[2 * r - 1];
        while (!gap.empty() && gap.back() == ' ') {
          gap.pop_back();
        }
        out += gap + "\n";
      }
    }
    return out;
  }

  // One unit between wires. Wire k is the path `wire-k`; crossing t is the
  // circle `crossing-t`, carrying class `highlight` when requested.
  inline std::string render_wiring_svg(Word const& word, RenderSpec const& spec = {}) {
    detail::check_highlight(word, spec);
    auto const        d = wiring_diagram(word);
    std::size_t const n = d.n;
    std::size_t const m = word.size();
    auto const        h = detail::half_units;
    int const         scale = 40;

    std::ostringstream os;
    int const          vb_x = -2, vb_w = static_cast<int>(m) + 4;
    int const          vb_h = static_cast<int>(n) + 1;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << vb_x << " 0 "
       << vb_w << ' ' << vb_h << "\" width=\"" << vb_w * scale << "\" height=\""
       << vb_h * scale << "\">\n";
    os << "<style>.wire{fill:none;stroke:#333;stroke-width:0.06}"
          ".crossing{fill:transparent;stroke:none;cursor:pointer}"
          ".crossing.highlight{fill:#e4572e;fill-opacity:0.35}"
          ".label{font:0.4px sans-serif;text-anchor:middle;dominant-baseline:middle}"
          "</style>\n";

    // rows[t][v - 1] = row of wire v after t steps
    std::vector<std::vector<int>> rows(m + 1, std::vector<int>(n));
    for (std::size_t t = 0; t <= m; ++t) {
      auto const& line = d.states[t].one_line();
      for (std::size_t r = 0; r < n; ++r) {
        rows[t][line[r] - 1] = static_cast<int>(r + 1);
      }
    }
    for (std::size_t v = 1; v <= n; ++v) {
      os << "<path id=\"wire-" << v << "\" class=\"wire\" d=\"M0 " << rows[0][v - 1];
      for (std::size_t t = 1; t <= m; ++t) {
        int const before = rows[t - 1][v - 1];
        int const after  = rows[t][v - 1];
        int const x2     = 2 * static_cast<int>(t);
        os << " L" << h(x2 - 1) << ' ' << before << " L" << h(x2 + 1) << ' ' << after;
      }
      os << " L" << m + 1 << ' ' << rows[m][v - 1] << "\"/>\n";
    }
    for (std::size_t t = 1; t <= m; ++t) {
      auto const [u, v] = d.crossing_pairs[t - 1];
      os << "<circle id=\"crossing-" << t << "\" class=\"crossing"
         << (spec.highlight.count(t) ? " highlight" : "") << "\" cx=\"" << t
         << "\" cy=\"" << h(2 * word[t - 1] + 1) << "\" r=\"0.35\" data-letter=\""
         << word[t - 1] << "\" data-wires=\"" << u << ',' << v << "\"/>\n";
    }
    if (spec.labels) {
      auto const& final = d.states.back();
      for (std::size_t r = 1; r <= n; ++r) {
        os << "<text class=\"label\" x=\"-0.6\" y=\"" << r << "\">" << r << "</text>\n";
        os << "<text class=\"label\" x=\"" << h(2 * static_cast<int>(m) + 3) << "\" y=\""
           << r << "\">" << final(r) << "</text>\n";
      }
    }
    os << "</svg>\n";
    return os.str();
  }

  inline std::string render_wiring(Word const& word, RenderSpec const& spec = {}) {
    return spec.format == RenderFormat::svg ? render_wiring_svg(word, spec)
                                            : render_wiring_ascii(word, spec);
  }

}  // namespace redword
