#pragma once

// Edelman-Greene insertion and Coxeter-Knuth moves.
//
// Inserting a letter x into a row R = r_1 < r_2 < ... < r_l:
//   1. if R is empty or x >= r_l, append x to R;
//   2. otherwise let j be the least index with x < r_j, and
//      a. if r_j = x + 1 and r_{j-1} = x (j > 1), leave R unchanged and
//         insert x + 1 into the rows below (a "special" bump);
//      b. else replace r_j by x and insert the old r_j into the rows below.
// A word w_1 ... w_m is inserted right to left; the recording tableau holds
// k in the box created by the k-th insertion.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "permutation.hpp"
#include "tableau.hpp"

namespace redword {

  struct InsertionStep {
    letter_type letter = 0;
    // One cell per row touched, top to bottom; the last is the new box.
    std::vector<Cell> path;
    // Rows (0-based) in which rule 2a fired.
    std::vector<int> special_rows;

    Cell new_box() const {
      return path.back();
    }
  };

  struct InsertionResult {
    Tableau                    p;
    Tableau                    q;
    std::vector<InsertionStep> steps;
  };

  namespace detail {
    // Inserts `letter` into the rows in place and returns the step record.
    inline InsertionStep eg_insert_rows(std::vector<std::vector<int>>& rows,
                                        letter_type                    letter) {
      InsertionStep step;
      step.letter = letter;
      int x       = letter;
      for (int r = 0;; ++r) {
        if (r == static_cast<int>(rows.size())) {
          rows.emplace_back();
        }
        auto& row = rows[r];
        if (row.empty() || x >= row.back()) {
          row.push_back(x);
          step.path.push_back({r, static_cast<int>(row.size()) - 1});
          return step;
        }
        auto const j = static_cast<int>(
            std::upper_bound(row.begin(), row.end(), x) - row.begin());
        step.path.push_back({r, j});
        if (row[j] == x + 1 && j > 0 && row[j - 1] == x) {
          step.special_rows.push_back(r);
          x = x + 1;
        } else {
          std::swap(row[j], x);
        }
      }
    }
  }  // namespace detail

  // Inserts one letter into an insertion tableau; returns the new tableau
  // together with the insertion path (whose last cell is the new box).
  inline std::pair<Tableau, InsertionStep> eg_insert_letter(Tableau const& p,
                                                            letter_type letter) {
    if (letter < 1) {
      throw domain_error("letters must be positive");
    }
    auto rows = p.rows();
    auto step = detail::eg_insert_rows(rows, letter);
    return {Tableau(std::move(rows)), std::move(step)};
  }

  // Incremental insertion; feed letters in insertion order (that is, the
  // word read right to left).
  class EdelmanGreene {
   public:
    InsertionStep const& insert(letter_type letter) {
      if (letter < 1) {
        throw domain_error("letters must be positive");
      }
      _steps.push_back(detail::eg_insert_rows(_p, letter));
      Cell const box = _steps.back().new_box();
      if (box.row == static_cast<int>(_q.size())) {
        _q.emplace_back();
      }
      _q[box.row].push_back(static_cast<int>(_steps.size()));
      return _steps.back();
    }

    Tableau p() const {
      return Tableau(_p);
    }

    Tableau q() const {
      return Tableau(_q);
    }

    std::vector<InsertionStep> const& steps() const noexcept {
      return _steps;
    }

   private:
    std::vector<std::vector<int>> _p;
    std::vector<std::vector<int>> _q;
    std::vector<InsertionStep>    _steps;
  };

  // EG(w) = (P(w), Q(w)); any word is accepted, P is increasing when w is
  // reduced.
  inline InsertionResult eg(Word const& word) {
    EdelmanGreene ins;
    for (std::size_t k = word.size(); k-- > 0;) {
      ins.insert(word[k]);
    }
    return {ins.p(), ins.q(), ins.steps()};
  }

  // Recording tableau only; the hot path of the verification sweeps.
  inline Tableau eg_q(Word const& word) {
    std::vector<std::vector<int>> p;
    std::vector<std::vector<int>> q;
    for (std::size_t k = word.size(), t = 1; k-- > 0; ++t) {
      int const row = detail::eg_insert_rows(p, word[k]).new_box().row;
      if (row == static_cast<int>(q.size())) {
        q.emplace_back();
      }
      q[row].push_back(static_cast<int>(t));
    }
    return Tableau(std::move(q));
  }

  // Column reading word of P(w).
  inline Word tau(Word const& word) {
    require_reduced(word, "tau");
    return column_reading_word(eg(word).p);
  }

  ////////////////////////////////////////////////////////////////////////
  // Coxeter-Knuth moves
  ////////////////////////////////////////////////////////////////////////

  // With a < b < c:
  //   type1:  a c b  <->  c a b
  //   type2:  b a c  <->  b c a
  //   type3:  x (x+1) x  <->  (x+1) x (x+1)
  // The left-hand side is the forward direction.
  enum class CKKind { type1 = 1, type2 = 2, type3 = 3 };
  enum class CKDirection { forward, backward };

  struct CKMove {
    std::size_t pos = 1;  // leftmost of the three letters, 1-based
    CKKind      kind      = CKKind::type1;
    CKDirection direction = CKDirection::forward;

    friend bool operator==(CKMove const&, CKMove const&) = default;
  };

  inline char const* to_string(CKKind k) {
    switch (k) {
      case CKKind::type1:
        return "type1";
      case CKKind::type2:
        return "type2";
      case CKKind::type3:
        return "type3";
    }
    return "?";
  }

  inline char const* to_string(CKDirection d) {
    return d == CKDirection::forward ? "forward" : "backward";
  }

  inline CKMove inverse_move(CKMove const& m) {
    return {m.pos,
            m.kind,
            m.direction == CKDirection::forward ? CKDirection::backward
                                                : CKDirection::forward};
  }

  // Every move applicable to w_pos w_{pos+1} w_{pos+2}. At most one pattern
  // can match a given triple.
  inline std::vector<CKMove> ck_moves_at(Word const& word, std::size_t pos) {
    if (pos < 1 || pos + 2 > word.size()) {
      throw domain_error("Coxeter-Knuth window at position "
                         + std::to_string(pos) + " does not fit a word of length "
                         + std::to_string(word.size()));
    }
    int const x = word[pos - 1];
    int const y = word[pos];
    int const z = word[pos + 1];

    std::vector<CKMove> out;
    auto add = [&](CKKind k, CKDirection d) { out.push_back({pos, k, d}); };
    if (x < z && z < y) {
      add(CKKind::type1, CKDirection::forward);  // a c b
    } else if (y < z && z < x) {
      add(CKKind::type1, CKDirection::backward);  // c a b
    } else if (y < x && x < z) {
      add(CKKind::type2, CKDirection::forward);  // b a c
    } else if (z < x && x < y) {
      add(CKKind::type2, CKDirection::backward);  // b c a
    } else if (x == z && y == x + 1) {
      add(CKKind::type3, CKDirection::forward);
    } else if (x == z && y == x - 1) {
      add(CKKind::type3, CKDirection::backward);
    }
    return out;
  }

  // All moves at all windows, ordered by position.
  inline std::vector<CKMove> ck_moves(Word const& word) {
    std::vector<CKMove> out;
    for (std::size_t pos = 1; pos + 2 <= word.size(); ++pos) {
      auto here = ck_moves_at(word, pos);
      out.insert(out.end(), here.begin(), here.end());
    }
    return out;
  }

  inline Word apply_ck(Word const& word, CKMove const& move) {
    auto const moves = ck_moves_at(word, move.pos);
    if (std::find(moves.begin(), moves.end(), move) == moves.end()) {
      throw domain_error(std::string("Coxeter-Knuth move ") + to_string(move.kind)
                         + " " + to_string(move.direction)
                         + " does not apply at position "
                         + std::to_string(move.pos));
    }
    auto        letters = word.letters();
    std::size_t i       = move.pos - 1;
    switch (move.kind) {
      case CKKind::type1:
        std::swap(letters[i], letters[i + 1]);
        break;
      case CKKind::type2:
        std::swap(letters[i + 1], letters[i + 2]);
        break;
      case CKKind::type3: {
        int const d = move.direction == CKDirection::forward ? 1 : -1;
        letters[i] += d;
        letters[i + 1] -= d;
        letters[i + 2] += d;
        break;
      }
    }
    return Word(std::move(letters));
  }

  // Closure of a reduced word under Coxeter-Knuth moves.
  inline std::set<Word> ck_class(Word const& word) {
    require_reduced(word, "ck_class");
    std::set<Word>   seen{word};
    std::deque<Word> queue{word};
    while (!queue.empty()) {
      Word const w = std::move(queue.front());
      queue.pop_front();
      for (auto const& m : ck_moves(w)) {
        Word v = apply_ck(w, m);
        if (seen.insert(v).second) {
          queue.push_back(std::move(v));
        }
      }
    }
    return seen;
  }

}  // namespace redword
