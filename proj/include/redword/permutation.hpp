#pragma once

// Permutations of {1, ..., n} in one-line notation, words in the adjacent
// transpositions s_1, s_2, ..., and the inversion/descent structure that
// links them. Positions and letters are 1-based throughout.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace redword {

  using letter_type = int;

  // A finite sequence of positive letters; letter k names s_k. A word does
  // not carry an ambient degree: its degree is (max letter + 1), or 1 for
  // the empty word.
  class Word {
   public:
    Word() = default;

    Word(std::initializer_list<letter_type> letters)
        : Word(std::vector<letter_type>(letters)) {}

    explicit Word(std::vector<letter_type> letters)
        : _letters(std::move(letters)) {
      for (std::size_t i = 0; i < _letters.size(); ++i) {
        if (_letters[i] < 1) {
          throw domain_error("letter at position " + std::to_string(i + 1)
                             + " is " + std::to_string(_letters[i])
                             + ", letters must be positive");
        }
      }
    }

    std::size_t size() const noexcept {
      return _letters.size();
    }

    bool empty() const noexcept {
      return _letters.empty();
    }

    // 0-based, like the underlying container.
    letter_type operator[](std::size_t i) const noexcept {
      return _letters[i];
    }

    // 1-based, checked.
    letter_type at(std::size_t pos) const {
      if (pos < 1 || pos > _letters.size()) {
        throw domain_error("position " + std::to_string(pos)
                           + " out of range 1.."
                           + std::to_string(_letters.size()));
      }
      return _letters[pos - 1];
    }

    std::vector<letter_type> const& letters() const noexcept {
      return _letters;
    }

    auto begin() const noexcept {
      return _letters.begin();
    }

    auto end() const noexcept {
      return _letters.end();
    }

    std::size_t degree() const noexcept {
      if (_letters.empty()) {
        return 1;
      }
      return static_cast<std::size_t>(
                 *std::max_element(_letters.begin(), _letters.end()))
             + 1;
    }

    letter_type min_letter() const noexcept {
      return _letters.empty()
                 ? 0
                 : *std::min_element(_letters.begin(), _letters.end());
    }

    friend bool operator==(Word const&, Word const&)  = default;
    friend auto operator<=>(Word const&, Word const&) = default;

   private:
    std::vector<letter_type> _letters;
  };

  // A bijection of {1, ..., n}, stored in one-line notation. Trailing fixed
  // points are significant: 1 2 and 1 2 3 are different permutations.
  class Permutation {
   public:
    Permutation() : _map{1} {}

    Permutation(std::initializer_list<int> one_line)
        : Permutation(std::vector<int>(one_line)) {}

    explicit Permutation(std::vector<int> one_line) : _map(std::move(one_line)) {
      if (_map.empty()) {
        throw domain_error("a permutation has degree at least 1");
      }
      std::vector<bool> seen(_map.size() + 1, false);
      for (int v : _map) {
        if (v < 1 || static_cast<std::size_t>(v) > _map.size() || seen[v]) {
          throw domain_error("not a permutation of 1.."
                             + std::to_string(_map.size()));
        }
        seen[v] = true;
      }
    }

    static Permutation identity(std::size_t n) {
      if (n < 1) {
        throw domain_error("a permutation has degree at least 1");
      }
      std::vector<int> map(n);
      std::iota(map.begin(), map.end(), 1);
      return Permutation(std::move(map), unchecked{});
    }

    // n n-1 ... 1
    static Permutation reverse(std::size_t n) {
      auto p = identity(n);
      std::reverse(p._map.begin(), p._map.end());
      return p;
    }

    std::size_t degree() const noexcept {
      return _map.size();
    }

    // sigma_i, 1-based.
    int operator()(std::size_t i) const noexcept {
      return _map[i - 1];
    }

    std::vector<int> const& one_line() const noexcept {
      return _map;
    }

    bool is_identity() const noexcept {
      for (std::size_t i = 0; i < _map.size(); ++i) {
        if (_map[i] != static_cast<int>(i + 1)) {
          return false;
        }
      }
      return true;
    }

    friend bool operator==(Permutation const&, Permutation const&) = default;

    friend std::strong_ordering operator<=>(Permutation const& x,
                                            Permutation const& y) {
      if (auto c = x._map.size() <=> y._map.size(); c != 0) {
        return c;
      }
      return x._map <=> y._map;
    }

   private:
    struct unchecked {};
    Permutation(std::vector<int> map, unchecked) : _map(std::move(map)) {}

    friend Permutation perm_from_word(Word const&);
    friend Permutation inverse(Permutation const&);

    std::vector<int> _map;
  };

  // s_{w_1} s_{w_2} ... s_{w_m}, each factor acting on the right by swapping
  // the entries in positions w_i and w_i + 1.
  inline Permutation perm_from_word(Word const& word) {
    std::vector<int> map(word.degree());
    std::iota(map.begin(), map.end(), 1);
    for (letter_type a : word) {
      std::swap(map[a - 1], map[a]);
    }
    return Permutation(std::move(map), Permutation::unchecked{});
  }

  inline Permutation inverse(Permutation const& perm) {
    std::vector<int> inv(perm.degree());
    for (std::size_t i = 1; i <= perm.degree(); ++i) {
      inv[perm(i) - 1] = static_cast<int>(i);
    }
    return Permutation(std::move(inv), Permutation::unchecked{});
  }

  using position_pair = std::pair<int, int>;

  // All (i, j) with i < j and sigma_i > sigma_j, lexicographically ascending.
  inline std::vector<position_pair> inversions(Permutation const& perm) {
    std::vector<position_pair> out;
    int const n = static_cast<int>(perm.degree());
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        if (perm(i) > perm(j)) {
          out.emplace_back(i, j);
        }
      }
    }
    return out;
  }

  inline std::size_t length(Permutation const& perm) {
    std::size_t count = 0;
    for (std::size_t i = 1; i <= perm.degree(); ++i) {
      for (std::size_t j = i + 1; j <= perm.degree(); ++j) {
        count += perm(i) > perm(j);
      }
    }
    return count;
  }

  inline std::vector<int> descent_set(Permutation const& perm) {
    std::vector<int> out;
    for (std::size_t i = 1; i < perm.degree(); ++i) {
      if (perm(i) > perm(i + 1)) {
        out.push_back(static_cast<int>(i));
      }
    }
    return out;
  }

  inline bool is_grassmannian(Permutation const& perm) {
    return descent_set(perm).size() == 1;
  }

  // Positions i with w_i > w_{i+1}.
  inline std::vector<int> word_descent_set(Word const& word) {
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i] > word[i + 1]) {
        out.push_back(static_cast<int>(i + 1));
      }
    }
    return out;
  }

  // A word is reduced iff every letter creates an inversion, i.e. the two
  // entries it swaps are in increasing order at that moment.
  inline bool is_reduced(Word const& word) {
    std::vector<int> map(word.degree());
    std::iota(map.begin(), map.end(), 1);
    for (letter_type a : word) {
      if (map[a - 1] > map[a]) {
        return false;
      }
      std::swap(map[a - 1], map[a]);
    }
    return true;
  }

  inline void require_reduced(Word const& word, char const* what) {
    if (!is_reduced(word)) {
      throw not_reduced_error(std::string(what) + " requires a reduced word");
    }
  }

  namespace detail {
    // `inv` is the inverse of the running permutation; letter a can come
    // first iff a+1 precedes a in the running permutation.
    template <typename Visitor>
    bool reduced_words_rec(std::vector<int>&          inv,
                           std::vector<letter_type>& prefix,
                           std::size_t               remaining,
                           Visitor&                  visit) {
      if (remaining == 0) {
        return visit(Word(prefix));
      }
      int const n = static_cast<int>(inv.size());
      for (int a = 1; a < n; ++a) {
        if (inv[a] < inv[a - 1]) {
          // left multiplication by s_a exchanges the values a and a + 1
          std::swap(inv[a - 1], inv[a]);
          prefix.push_back(a);
          bool const go_on = reduced_words_rec(inv, prefix, remaining - 1, visit);
          prefix.pop_back();
          std::swap(inv[a - 1], inv[a]);
          if (!go_on) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace detail

  // Calls `visit` on every reduced word of `perm`, in ascending lexicographic
  // order. If `visit` returns bool, returning false stops the enumeration.
  template <typename Visitor>
  void for_each_reduced_word(Permutation const& perm, Visitor&& visit) {
    auto adapter = [&visit](Word const& w) -> bool {
      if constexpr (std::is_same_v<std::invoke_result_t<Visitor&, Word const&>,
                                   bool>) {
        return visit(w);
      } else {
        visit(w);
        return true;
      }
    };
    std::vector<int>         inv = inverse(perm).one_line();
    std::vector<letter_type> prefix;
    detail::reduced_words_rec(inv, prefix, length(perm), adapter);
  }

  inline std::vector<Word> enumerate_reduced_words(Permutation const& perm) {
    std::vector<Word> out;
    for_each_reduced_word(perm, [&out](Word const& w) { out.push_back(w); });
    return out;
  }

  // Every permutation of {1, ..., n} in lexicographic order of one-line
  // notation.
  inline std::vector<Permutation> all_permutations(std::size_t n) {
    std::vector<Permutation> out;
    std::vector<int>         map = Permutation::identity(n).one_line();
    do {
      out.emplace_back(map);
    } while (std::next_permutation(map.begin(), map.end()));
    return out;
  }

}  // namespace redword
