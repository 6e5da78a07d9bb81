#pragma once

// Wiring diagrams, Little bumps and the Little map.
//
// In the wiring diagram of w = w_1 ... w_m, wire k starts in row k; the
// letter w_t crosses the wires sitting in rows w_t and w_t + 1 after t - 1
// steps. Because a wire keeps its starting value as label, a crossing is
// identified by the unordered pair of values it exchanges. A word is reduced
// iff no pair of wires crosses twice.
//
// A Little bump started at index i decrements w_i. If that makes two
// crossings exchange the same pair of wires, the other crossing is
// decremented next, and so on until the word is reduced again. Decrementing
// a letter 1 instead increments every other letter (a fresh top wire is
// added), which always leaves a reduced word. Inverse bumps are the same
// procedure with increments.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edelman_greene.hpp"
#include "errors.hpp"
#include "permutation.hpp"
#include "tableau.hpp"

namespace redword {

  // Unordered pair of wire values, stored as (smaller, larger).
  using wire_pair = std::pair<int, int>;

  inline wire_pair make_wire_pair(int u, int v) {
    return u < v ? wire_pair{u, v} : wire_pair{v, u};
  }

  struct WiringDiagram {
    Word                     word;
    std::size_t              n = 1;
    std::vector<Permutation> states;          // sigma^0 ... sigma^m
    std::vector<wire_pair>   crossing_pairs;  // crossing_pairs[t - 1] for letter t
  };

  // Values exchanged by each letter, in order; works for any word.
  inline std::vector<wire_pair> crossing_pairs(std::vector<letter_type> const& letters,
                                               std::size_t n) {
    std::vector<int> rows(n);
    for (std::size_t k = 0; k < n; ++k) {
      rows[k] = static_cast<int>(k + 1);
    }
    std::vector<wire_pair> out;
    out.reserve(letters.size());
    for (letter_type a : letters) {
      out.push_back(make_wire_pair(rows[a - 1], rows[a]));
      std::swap(rows[a - 1], rows[a]);
    }
    return out;
  }

  inline std::vector<wire_pair> crossing_pairs(Word const& word) {
    return crossing_pairs(word.letters(), word.degree());
  }

  inline WiringDiagram wiring_diagram(Word const& word) {
    WiringDiagram d;
    d.word = word;
    d.n    = word.degree();
    d.states.reserve(word.size() + 1);
    std::vector<int> rows = Permutation::identity(d.n).one_line();
    d.states.emplace_back(rows);
    for (letter_type a : word) {
      d.crossing_pairs.push_back(make_wire_pair(rows[a - 1], rows[a]));
      std::swap(rows[a - 1], rows[a]);
      d.states.emplace_back(rows);
    }
    return d;
  }

  // Row occupied by wire `value` after each step: rows[t] for t = 0..m.
  inline std::vector<int> trajectory(Word const& word, int value) {
    auto const d = wiring_diagram(word);
    if (value < 1 || static_cast<std::size_t>(value) > d.n) {
      throw domain_error("no wire labelled " + std::to_string(value));
    }
    std::vector<int> out;
    for (auto const& s : d.states) {
      auto const& line = s.one_line();
      out.push_back(static_cast<int>(
          std::find(line.begin(), line.end(), value) - line.begin() + 1));
    }
    return out;
  }

  // 1-based indices of the crossings in which wire `value` takes part.
  inline std::vector<std::size_t> crossings_featuring(Word const& word, int value) {
    std::vector<std::size_t> out;
    auto const               pairs = crossing_pairs(word);
    for (std::size_t t = 0; t < pairs.size(); ++t) {
      if (pairs[t].first == value || pairs[t].second == value) {
        out.push_back(t + 1);
      }
    }
    return out;
  }

  // The unique 1-based index at which wires u and v cross.
  inline std::size_t crossing_of_values(Word const& word, int u, int v) {
    require_reduced(word, "crossing_of_values");
    auto const target = make_wire_pair(u, v);
    auto const pairs  = crossing_pairs(word);
    auto const it     = std::find(pairs.begin(), pairs.end(), target);
    if (u == v || it == pairs.end()) {
      throw not_found_error("wires " + std::to_string(u) + " and "
                            + std::to_string(v) + " never cross");
    }
    return static_cast<std::size_t>(it - pairs.begin()) + 1;
  }

  ////////////////////////////////////////////////////////////////////////
  // Bumps
  ////////////////////////////////////////////////////////////////////////

  enum class BumpStepKind {
    decrement,  // letter -> letter - 1
    increment,  // letter -> letter + 1 (inverse bumps)
    shift,      // letter was 1: every other letter incremented
    unshift     // every letter decremented (removes an unused first wire)
  };

  struct BumpStep {
    std::size_t  index  = 0;  // 1-based; 0 for unshift
    letter_type  before = 0;
    letter_type  after  = 0;
    BumpStepKind kind   = BumpStepKind::decrement;

    friend bool operator==(BumpStep const&, BumpStep const&) = default;
  };

  struct BumpTrace {
    std::size_t           start = 0;
    std::vector<BumpStep> steps;
    Word                  result;
    bool                  inverse = false;

    bool shifted() const noexcept {
      return std::any_of(steps.begin(), steps.end(), [](BumpStep const& s) {
        return s.kind == BumpStepKind::shift || s.kind == BumpStepKind::unshift;
      });
    }

    // Index of the last letter changed by the bump itself.
    std::size_t terminal_index() const {
      for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        if (it->kind != BumpStepKind::unshift) {
          return it->index;
        }
      }
      return start;
    }

    // Word obtained from `from` by replaying the first `count` steps.
    Word replay(Word const& from, std::size_t count) const {
      auto letters = from.letters();
      for (std::size_t s = 0; s < count && s < steps.size(); ++s) {
        auto const& st = steps[s];
        switch (st.kind) {
          case BumpStepKind::decrement:
          case BumpStepKind::increment:
            letters[st.index - 1] = st.after;
            break;
          case BumpStepKind::shift:
            for (std::size_t k = 0; k < letters.size(); ++k) {
              if (k != st.index - 1) {
                ++letters[k];
              }
            }
            break;
          case BumpStepKind::unshift:
            for (auto& a : letters) {
              --a;
            }
            break;
        }
      }
      return Word(std::move(letters));
    }
  };

  // A bump may start at index i only when deleting the i-th letter leaves
  // a reduced word; otherwise the decremented crossing duplicates more than
  // one other crossing (e.g. the middle letter of 3 4 3).
  inline bool is_bump_start(Word const& word, std::size_t start) {
    if (start < 1 || start > word.size()) {
      return false;
    }
    auto letters = word.letters();
    letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(start - 1));
    return is_reduced(Word(std::move(letters)));
  }

  // Valid bump starts of a reduced word, ascending.
  inline std::vector<std::size_t> bump_starts(Word const& word) {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i <= word.size(); ++i) {
      if (is_bump_start(word, i)) {
        out.push_back(i);
      }
    }
    return out;
  }

  namespace detail {
    inline BumpTrace run_bump(Word const& word,
                              std::size_t start,
                              int         direction,
                              bool        collapse) {
      require_reduced(word, direction < 0 ? "little_bump" : "inverse_bump");
      std::size_t const m = word.size();
      if (start < 1 || start > m) {
        throw domain_error("bump start " + std::to_string(start)
                           + " out of range 1.." + std::to_string(m));
      }
      if (!is_bump_start(word, start)) {
        throw domain_error("invalid_bump_start",
                           "deleting letter " + std::to_string(start)
                               + " leaves a non-reduced word; no bump starts there");
      }
      BumpTrace trace;
      trace.start   = start;
      trace.inverse = direction > 0;

      std::vector<letter_type> letters = word.letters();
      std::vector<bool>        visited(m, false);
      std::size_t              idx = start - 1;
      for (;;) {
        if (visited[idx]) {
          throw internal_error("bump revisited index " + std::to_string(idx + 1));
        }
        visited[idx] = true;

        if (direction < 0 && letters[idx] == 1) {
          for (std::size_t k = 0; k < m; ++k) {
            if (k != idx) {
              ++letters[k];
            }
          }
          trace.steps.push_back({idx + 1, 1, 1, BumpStepKind::shift});
          if (!is_reduced(Word(letters))) {
            throw internal_error("shift step left a non-reduced word");
          }
          break;
        }

        letter_type const before = letters[idx];
        letters[idx] += direction;
        trace.steps.push_back({idx + 1,
                               before,
                               letters[idx],
                               direction < 0 ? BumpStepKind::decrement
                                             : BumpStepKind::increment});

        std::size_t n = 1;
        for (letter_type a : letters) {
          n = std::max(n, static_cast<std::size_t>(a) + 1);
        }
        auto const  pairs = crossing_pairs(letters, n);
        std::size_t next  = m;
        for (std::size_t k = 0; k < m; ++k) {
          if (k != idx && pairs[k] == pairs[idx]) {
            next = k;
            break;
          }
        }
        if (next == m) {
          if (!is_reduced(Word(letters))) {
            throw internal_error("bump stopped on a non-reduced word");
          }
          break;
        }
        idx = next;
      }

      if (collapse && !letters.empty()
          && *std::min_element(letters.begin(), letters.end()) > 1) {
        for (auto& a : letters) {
          --a;
        }
        trace.steps.push_back({0, 0, 0, BumpStepKind::unshift});
      }
      trace.result = Word(std::move(letters));
      return trace;
    }
  }  // namespace detail

  // w -> w (up arrow)_start, with every intermediate step recorded.
  inline BumpTrace little_bump(Word const& word, std::size_t start) {
    return detail::run_bump(word, start, -1, false);
  }

  // Bump started at the crossing of wires u and v.
  inline BumpTrace little_bump_at_values(Word const& word, int u, int v) {
    return little_bump(word, crossing_of_values(word, u, v));
  }

  // Increment-direction bump. With `collapse`, a result that no longer uses
  // the first wire is shifted down by one, undoing a shift step of the
  // forward bump.
  inline BumpTrace inverse_bump(Word const& word,
                                std::size_t start,
                                bool        collapse = false) {
    return detail::run_bump(word, start, +1, collapse);
  }

  // Inverse of a forward trace: applied to trace.result, yields the word
  // the forward bump started from.
  inline BumpTrace undo_bump(BumpTrace const& forward) {
    if (forward.inverse) {
      return little_bump(forward.result, forward.terminal_index());
    }
    return inverse_bump(forward.result, forward.terminal_index(), forward.shifted());
  }

  ////////////////////////////////////////////////////////////////////////
  // Grassmannian words and the tableau Tab
  ////////////////////////////////////////////////////////////////////////

  // sigma = a_1 ... a_k b_1 ... b_{n-k} with the single descent at k.
  struct GrassmannianData {
    int              k = 0;
    std::vector<int> row_labels;  // a_k, ..., a_1 (top to bottom)
    std::vector<int> col_labels;  // b_1, ..., b_{n-k} (left to right)

    friend bool operator==(GrassmannianData const&, GrassmannianData const&) = default;
  };

  inline GrassmannianData grassmannian_data(Permutation const& perm) {
    auto const des = descent_set(perm);
    if (des.size() != 1) {
      throw domain_error("permutation is not Grassmannian ("
                         + std::to_string(des.size()) + " descents)");
    }
    GrassmannianData g;
    g.k = des.front();
    for (int i = g.k; i >= 1; --i) {
      g.row_labels.push_back(perm(i));
    }
    for (std::size_t j = g.k + 1; j <= perm.degree(); ++j) {
      g.col_labels.push_back(perm(j));
    }
    return g;
  }

  inline bool is_grassmannian_word(Word const& word) {
    return word.empty() || is_grassmannian(perm_from_word(word));
  }

  // Crossing t exchanges some a_i with some b_j; it contributes m + 1 - t in
  // row a_i, column b_j.
  inline Tableau grassmannian_tab(Word const& word) {
    if (word.empty()) {
      return Tableau();
    }
    require_reduced(word, "grassmannian_tab");
    auto const g     = grassmannian_data(perm_from_word(word));
    auto const pairs = crossing_pairs(word);
    auto const m     = static_cast<int>(word.size());

    auto index_in = [](std::vector<int> const& v, int x) {
      auto it = std::find(v.begin(), v.end(), x);
      return it == v.end() ? -1 : static_cast<int>(it - v.begin());
    };

    std::vector<std::vector<int>> grid(g.row_labels.size(),
                                       std::vector<int>(g.col_labels.size(), 0));
    for (int t = 0; t < m; ++t) {
      auto [u, v] = pairs[t];
      int r       = index_in(g.row_labels, u);
      int c       = index_in(g.col_labels, v);
      if (r < 0 || c < 0) {
        r = index_in(g.row_labels, v);
        c = index_in(g.col_labels, u);
      }
      if (r < 0 || c < 0 || grid[r][c] != 0) {
        throw internal_error("Grassmannian crossing does not pair an a with a b");
      }
      grid[r][c] = m - t;
    }

    std::vector<std::vector<int>> rows;
    for (auto const& line : grid) {
      std::vector<int> row;
      for (int x : line) {
        if (x == 0) {
          break;
        }
        row.push_back(x);
      }
      if (row.empty()) {
        break;
      }
      rows.push_back(std::move(row));
    }
    Tableau tab(std::move(rows));
    if (tab.size() != word.size() || !is_standard(tab)) {
      throw internal_error("Tab produced a non-standard filling");
    }
    return tab;
  }

  ////////////////////////////////////////////////////////////////////////
  // The Little map
  ////////////////////////////////////////////////////////////////////////

  struct LittleResult {
    Tableau                tableau;
    std::vector<BumpTrace> traces;
    Word                   grassmannian_word;
  };

  // Start of the canonical bump: the crossing of the two values forming the
  // lexicographically last inversion (i, j) of sigma.
  inline std::size_t canonical_bump_start(Word const& word) {
    auto const  perm = perm_from_word(word);
    int const   n    = static_cast<int>(perm.degree());
    for (int i = n; i >= 1; --i) {
      for (int j = n; j > i; --j) {
        if (perm(i) > perm(j)) {
          return crossing_of_values(word, perm(j), perm(i));
        }
      }
    }
    throw domain_error("the identity has no inversions");
  }

  inline LittleResult ls(Word const& word) {
    require_reduced(word, "ls");
    std::size_t const cap = 4 * word.size() * word.degree();
    LittleResult      out;
    Word              cur = word;
    while (!is_grassmannian_word(cur)) {
      if (out.traces.size() >= cap) {
        throw internal_error("Little map exceeded " + std::to_string(cap)
                             + " bumps");
      }
      out.traces.push_back(little_bump(cur, canonical_bump_start(cur)));
      cur = out.traces.back().result;
    }
    out.tableau           = grassmannian_tab(cur);
    out.grassmannian_word = std::move(cur);
    return out;
  }

  struct NormalizeResult {
    Word                   word;
    std::vector<BumpTrace> traces;
  };

  // Moves initial fixed points of a Grassmannian permutation to the end.
  // One round bumps, for each b_j in turn, at the last crossing featuring
  // b_j; the round decrements every letter exactly once. With the degree
  // inferred from the letters, trailing fixed points never appear, so the
  // loop ends at the minimal Grassmannian permutation of the same shape.
  inline NormalizeResult minimal_grassmannian_normalize(Word const& word) {
    require_reduced(word, "minimal_grassmannian_normalize");
    if (!is_grassmannian_word(word)) {
      throw domain_error("minimal_grassmannian_normalize requires a "
                         "Grassmannian word");
    }
    NormalizeResult out{word, {}};
    while (!out.word.empty() && out.word.min_letter() > 1) {
      Word const round_start = out.word;
      auto const g           = grassmannian_data(perm_from_word(round_start));
      for (int b : g.col_labels) {
        auto const featuring = crossings_featuring(round_start, b);
        if (featuring.empty()) {
          continue;
        }
        out.traces.push_back(little_bump(out.word, featuring.back()));
        out.word = out.traces.back().result;
      }
      auto expected = round_start.letters();
      for (auto& a : expected) {
        --a;
      }
      if (out.word.letters() != expected) {
        throw internal_error("normalization round did not decrement every letter");
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Robinson-Schensted embedding
  ////////////////////////////////////////////////////////////////////////

  // (2 sigma_n - 1) ... (2 sigma_1 - 1); distinct odd letters, so reduced.
  inline Word rs_embedding_word(Permutation const& perm) {
    std::vector<letter_type> letters;
    for (std::size_t i = perm.degree(); i >= 1; --i) {
      letters.push_back(2 * perm(i) - 1);
    }
    return Word(std::move(letters));
  }

  // Classical Schensted row insertion of sigma_1, ..., sigma_n.
  inline std::pair<Tableau, Tableau> rs(Permutation const& perm) {
    std::vector<std::vector<int>> p;
    std::vector<std::vector<int>> q;
    for (std::size_t t = 1; t <= perm.degree(); ++t) {
      int         x = perm(t);
      std::size_t r = 0;
      for (;; ++r) {
        if (r == p.size()) {
          p.emplace_back();
          q.emplace_back();
        }
        auto it = std::upper_bound(p[r].begin(), p[r].end(), x);
        if (it == p[r].end()) {
          p[r].push_back(x);
          q[r].push_back(static_cast<int>(t));
          break;
        }
        std::swap(*it, x);
      }
    }
    return {Tableau(std::move(p)), Tableau(std::move(q))};
  }

}  // namespace redword
