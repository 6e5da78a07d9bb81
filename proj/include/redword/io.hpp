#pragma once

// Text and JSON forms of the library's values.
//
//   word         "4 2 1 2 3 2 4"          {"letters": [4,2,1,2,3,2,4]}
//   permutation  "3 5 2 4 1"              [3,5,2,4,1]
//   tableau      one row per line         {"rows": [[1,3,7],[2,6],[4],[5]]}
//
// Cells and positions in JSON are 1-based.

#include <cctype>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "edelman_greene.hpp"
#include "errors.hpp"
#include "little.hpp"
#include "permutation.hpp"
#include "tableau.hpp"

namespace redword {

  using json = nlohmann::json;

  ////////////////////////////////////////////////////////////////////////
  // Text
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    struct token {
      std::string_view text;
      std::size_t      column;  // 1-based
    };

    inline std::vector<token> split_tokens(std::string_view text,
                                           std::string_view separators) {
      std::vector<token> out;
      std::size_t        i = 0;
      while (i < text.size()) {
        while (i < text.size() && separators.find(text[i]) != std::string_view::npos) {
          ++i;
        }
        std::size_t const begin = i;
        while (i < text.size() && separators.find(text[i]) == std::string_view::npos) {
          ++i;
        }
        if (i > begin) {
          out.push_back({text.substr(begin, i - begin), begin + 1});
        }
      }
      return out;
    }

    inline int parse_positive(token const& tok, std::size_t column_offset = 0) {
      std::size_t const column = tok.column + column_offset;
      for (char ch : tok.text) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
          throw parse_error("'" + std::string(tok.text)
                                + "' is not a positive integer",
                            column);
        }
      }
      if (tok.text.size() > 9) {
        throw parse_error("'" + std::string(tok.text) + "' is too large", column);
      }
      int const v = std::stoi(std::string(tok.text));
      if (v < 1) {
        throw parse_error("letters must be positive, got " + std::string(tok.text),
                          column);
      }
      return v;
    }

    inline std::vector<int> parse_positive_list(std::string_view text) {
      std::vector<int> out;
      for (auto const& tok : split_tokens(text, " \t\r\n,")) {
        out.push_back(parse_positive(tok));
      }
      return out;
    }
  }  // namespace detail

  // Whitespace-separated positive integers.
  inline Word parse_word_text(std::string_view text) {
    std::vector<letter_type> letters;
    for (auto const& tok : detail::split_tokens(text, " \t\r\n")) {
      letters.push_back(detail::parse_positive(tok));
    }
    return Word(std::move(letters));
  }

  inline Permutation parse_permutation_text(std::string_view text) {
    auto values = detail::parse_positive_list(text);
    try {
      return Permutation(std::move(values));
    } catch (domain_error const& e) {
      throw parse_error(e.what(), 1);
    }
  }

  // One row per line, entries separated by spaces.
  inline Tableau parse_tableau_text(std::string_view text) {
    std::vector<std::vector<int>> rows;
    std::size_t                   offset = 0;
    while (offset <= text.size()) {
      std::size_t end = text.find('\n', offset);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      std::vector<int> row;
      for (auto const& tok : detail::split_tokens(text.substr(offset, end - offset), " \t\r")) {
        row.push_back(detail::parse_positive(tok, offset));
      }
      if (!row.empty()) {
        rows.push_back(std::move(row));
      }
      offset = end + 1;
    }
    try {
      return Tableau(std::move(rows));
    } catch (domain_error const& e) {
      throw parse_error(e.what(), 1);
    }
  }

  namespace detail {
    template <typename Range>
    std::string join(Range const& r, char const* sep = " ") {
      std::ostringstream os;
      bool               first = true;
      for (auto const& x : r) {
        if (!first) {
          os << sep;
        }
        os << x;
        first = false;
      }
      return os.str();
    }
  }  // namespace detail

  inline std::string to_text(Word const& w) {
    return detail::join(w.letters());
  }

  inline std::string to_text(Permutation const& p) {
    return detail::join(p.one_line());
  }

  inline std::string to_text(Tableau const& t) {
    std::string out;
    for (auto const& row : t.rows()) {
      out += detail::join(row);
      out += '\n';
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // JSON
  ////////////////////////////////////////////////////////////////////////

  inline void to_json(json& j, Word const& w) {
    j = json{{"letters", w.letters()}};
  }

  inline void from_json(json const& j, Word& w) {
    w = Word(j.at("letters").get<std::vector<letter_type>>());
  }

  inline void to_json(json& j, Permutation const& p) {
    j = p.one_line();
  }

  inline void from_json(json const& j, Permutation& p) {
    p = Permutation(j.get<std::vector<int>>());
  }

  inline void to_json(json& j, Tableau const& t) {
    j = json{{"rows", t.rows()}};
  }

  inline void from_json(json const& j, Tableau& t) {
    t = Tableau(j.at("rows").get<std::vector<std::vector<int>>>());
  }

  inline void to_json(json& j, Shape const& s) {
    j = s.parts();
  }

  inline json cell_json(Cell c) {
    return json::array({c.row + 1, c.col + 1});
  }

  inline void to_json(json& j, InsertionStep const& s) {
    json path = json::array();
    for (auto const& c : s.path) {
      path.push_back(cell_json(c));
    }
    j = json{{"letter", s.letter}, {"path", path}};
    if (!s.special_rows.empty()) {
      json rows = json::array();
      for (int r : s.special_rows) {
        rows.push_back(r + 1);
      }
      j["special_rows"] = rows;
    }
  }

  inline void to_json(json& j, InsertionResult const& r) {
    j = json{{"p", r.p}, {"q", r.q}, {"steps", r.steps}};
  }

  inline void to_json(json& j, CKMove const& m) {
    j = json{{"pos", m.pos}, {"kind", to_string(m.kind)}, {"direction", to_string(m.direction)}};
  }

  inline void from_json(json const& j, CKMove& m) {
    m.pos               = j.at("pos").get<std::size_t>();
    auto const kind     = j.at("kind").get<std::string>();
    auto const direction = j.value("direction", std::string("forward"));
    if (kind == "type1" || kind == "1") {
      m.kind = CKKind::type1;
    } else if (kind == "type2" || kind == "2") {
      m.kind = CKKind::type2;
    } else if (kind == "type3" || kind == "3") {
      m.kind = CKKind::type3;
    } else {
      throw domain_error("unknown Coxeter-Knuth move kind '" + kind + "'");
    }
    if (direction == "forward") {
      m.direction = CKDirection::forward;
    } else if (direction == "backward") {
      m.direction = CKDirection::backward;
    } else {
      throw domain_error("unknown direction '" + direction + "'");
    }
  }

  inline void to_json(json& j, BumpStep const& s) {
    switch (s.kind) {
      case BumpStepKind::decrement:
      case BumpStepKind::increment:
        j = json{{"index", s.index}, {"from", s.before}, {"to", s.after}};
        break;
      case BumpStepKind::shift:
        j = json{{"index", s.index}, {"shift", true}};
        break;
      case BumpStepKind::unshift:
        j = json{{"unshift", true}};
        break;
    }
  }

  inline void to_json(json& j, BumpTrace const& t) {
    j = json{{"start", t.start}, {"steps", t.steps}, {"result", t.result}};
    if (t.inverse) {
      j["inverse"] = true;
    }
  }

  inline void to_json(json& j, GrassmannianData const& g) {
    j = json{{"k", g.k}, {"row_labels", g.row_labels}, {"col_labels", g.col_labels}};
  }

  inline void to_json(json& j, WiringDiagram const& d) {
    json pairs = json::array();
    for (auto const& [u, v] : d.crossing_pairs) {
      pairs.push_back(json::array({u, v}));
    }
    j = json{{"word", d.word}, {"n", d.n}, {"states", d.states}, {"crossing_pairs", pairs}};
  }

}  // namespace redword
