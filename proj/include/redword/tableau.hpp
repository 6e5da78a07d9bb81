#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"
#include "permutation.hpp"

namespace redword {

  using big_int = boost::multiprecision::cpp_int;

  // A partition: weakly decreasing positive parts.
  class Shape {
   public:
    Shape() = default;

    Shape(std::initializer_list<int> parts) : Shape(std::vector<int>(parts)) {}

    explicit Shape(std::vector<int> parts) : _parts(std::move(parts)) {
      for (std::size_t k = 0; k < _parts.size(); ++k) {
        if (_parts[k] < 1 || (k > 0 && _parts[k] > _parts[k - 1])) {
          throw domain_error("parts of a shape must be positive and weakly "
                             "decreasing");
        }
      }
    }

    std::vector<int> const& parts() const noexcept {
      return _parts;
    }

    std::size_t size() const noexcept {
      std::size_t total = 0;
      for (int p : _parts) {
        total += p;
      }
      return total;
    }

    // Length of column c (0-based).
    int column_length(int c) const noexcept {
      int len = 0;
      for (int p : _parts) {
        if (p > c) {
          ++len;
        }
      }
      return len;
    }

    friend bool operator==(Shape const&, Shape const&)  = default;
    friend auto operator<=>(Shape const&, Shape const&) = default;

   private:
    std::vector<int> _parts;
  };

  // 0-based (row, column) of a box.
  struct Cell {
    int row = 0;
    int col = 0;

    friend bool operator==(Cell const&, Cell const&)  = default;
    friend auto operator<=>(Cell const&, Cell const&) = default;
  };

  // Left-justified rows of positive integers with weakly decreasing row
  // lengths. Zero rows is the empty tableau.
  class Tableau {
   public:
    using row_type = std::vector<int>;

    Tableau() = default;

    Tableau(std::initializer_list<std::initializer_list<int>> rows) {
      for (auto const& r : rows) {
        _rows.emplace_back(r);
      }
      validate();
    }

    explicit Tableau(std::vector<row_type> rows) : _rows(std::move(rows)) {
      validate();
    }

    std::vector<row_type> const& rows() const noexcept {
      return _rows;
    }

    std::size_t num_rows() const noexcept {
      return _rows.size();
    }

    bool empty() const noexcept {
      return _rows.empty();
    }

    std::size_t size() const noexcept {
      std::size_t total = 0;
      for (auto const& r : _rows) {
        total += r.size();
      }
      return total;
    }

    int at(Cell c) const {
      return _rows.at(c.row).at(c.col);
    }

    friend bool operator==(Tableau const&, Tableau const&)  = default;
    friend auto operator<=>(Tableau const&, Tableau const&) = default;

   private:
    void validate() const {
      for (std::size_t r = 0; r < _rows.size(); ++r) {
        if (_rows[r].empty()) {
          throw domain_error("tableau rows must be non-empty");
        }
        if (r > 0 && _rows[r].size() > _rows[r - 1].size()) {
          throw domain_error("tableau row lengths must weakly decrease");
        }
        for (int v : _rows[r]) {
          if (v < 1) {
            throw domain_error("tableau entries must be positive");
          }
        }
      }
    }

    std::vector<row_type> _rows;
  };

  inline Shape shape_of(Tableau const& t) {
    std::vector<int> parts;
    for (auto const& r : t.rows()) {
      parts.push_back(static_cast<int>(r.size()));
    }
    return Shape(std::move(parts));
  }

  // Rows and columns strictly increase; values may repeat elsewhere.
  inline bool is_increasing(Tableau const& t) {
    auto const& rows = t.rows();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < rows[r].size(); ++c) {
        if (c > 0 && rows[r][c - 1] >= rows[r][c]) {
          return false;
        }
        if (r > 0 && rows[r - 1][c] >= rows[r][c]) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool is_standard(Tableau const& t) {
    std::size_t const n = t.size();
    std::vector<bool> seen(n + 1, false);
    for (auto const& row : t.rows()) {
      for (int v : row) {
        if (static_cast<std::size_t>(v) > n || seen[v]) {
          return false;
        }
        seen[v] = true;
      }
    }
    return is_increasing(t);
  }

  // Number of standard Young tableaux of shape s, by the hook-length
  // product, in exact arithmetic.
  inline big_int hook_length_count(Shape const& s) {
    big_int numerator = 1;
    for (std::size_t k = 2; k <= s.size(); ++k) {
      numerator *= k;
    }
    big_int     denominator = 1;
    auto const& parts       = s.parts();
    for (std::size_t r = 0; r < parts.size(); ++r) {
      for (int c = 0; c < parts[r]; ++c) {
        int const arm = parts[r] - c - 1;
        int const leg = s.column_length(c) - static_cast<int>(r) - 1;
        denominator *= arm + leg + 1;
      }
    }
    return numerator / denominator;
  }

  // (n-1, n-2, ..., 1)
  inline Shape staircase(int n) {
    if (n < 2) {
      throw domain_error("staircase(n) requires n >= 2");
    }
    std::vector<int> parts;
    for (int k = n - 1; k >= 1; --k) {
      parts.push_back(k);
    }
    return Shape(std::move(parts));
  }

  // Exchanges the entries N - i and N - j of a standard tableau with N boxes.
  // The result need not be standard.
  inline Tableau swap_labels(Tableau const& t, int i, int j) {
    int const n = static_cast<int>(t.size());
    if (!is_standard(t)) {
      throw domain_error("swap_labels requires a standard tableau");
    }
    int const x = n - i;
    int const y = n - j;
    if (x < 1 || x > n || y < 1 || y > n) {
      throw domain_error("swap_labels: labels " + std::to_string(x) + " and "
                         + std::to_string(y) + " are not entries 1.."
                         + std::to_string(n));
    }
    auto rows = t.rows();
    for (auto& row : rows) {
      for (int& v : row) {
        if (v == x) {
          v = y;
        } else if (v == y) {
          v = x;
        }
      }
    }
    return Tableau(std::move(rows));
  }

  // Columns read top to bottom, rightmost column first.
  inline Word column_reading_word(Tableau const& t) {
    std::vector<letter_type> out;
    auto const&              rows = t.rows();
    if (rows.empty()) {
      return Word();
    }
    for (int c = static_cast<int>(rows[0].size()) - 1; c >= 0; --c) {
      for (auto const& row : rows) {
        if (static_cast<int>(row.size()) <= c) {
          break;
        }
        out.push_back(row[c]);
      }
    }
    return Word(std::move(out));
  }

  // True iff the entries of every column form a run of consecutive integers.
  inline bool has_consecutive_columns(Tableau const& t) {
    auto const& rows = t.rows();
    for (std::size_t r = 1; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < rows[r].size(); ++c) {
        if (rows[r][c] != rows[r - 1][c] + 1) {
          return false;
        }
      }
    }
    return true;
  }

  // Applies f to every entry.
  template <typename F>
  Tableau transform_entries(Tableau const& t, F&& f) {
    auto rows = t.rows();
    for (auto& row : rows) {
      for (int& v : row) {
        v = f(v);
      }
    }
    return Tableau(std::move(rows));
  }

  // k -> (k + 1) / 2; maps the odd entries 2p - 1 back to p.
  inline Tableau halve_odd_entries(Tableau const& t) {
    return transform_entries(t, [](int v) {
      if (v % 2 == 0) {
        throw domain_error("halve_odd_entries: entry " + std::to_string(v)
                           + " is even");
      }
      return (v + 1) / 2;
    });
  }

  // Mutable builder used by the insertion algorithms; rows may grow one box
  // at a time while keeping the partition shape.
  class TableauBuilder {
   public:
    TableauBuilder() = default;
    explicit TableauBuilder(Tableau const& t) : _rows(t.rows()) {}

    std::vector<std::vector<int>>& rows() noexcept {
      return _rows;
    }

    void set(Cell c, int value) {
      while (static_cast<int>(_rows.size()) <= c.row) {
        _rows.emplace_back();
      }
      auto& row = _rows[c.row];
      if (static_cast<int>(row.size()) == c.col) {
        row.push_back(value);
      } else {
        row.at(c.col) = value;
      }
    }

    Tableau build() const {
      return Tableau(_rows);
    }

   private:
    std::vector<std::vector<int>> _rows;
  };

}  // namespace redword
