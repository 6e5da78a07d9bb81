#include <gtest/gtest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "redword/little.hpp"

using namespace redword;

namespace {
  Word const figure_word{4, 2, 1, 2, 3, 2, 4};

  template <typename F>
  void for_each_word(std::size_t n, F&& f) {
    for (auto const& sigma : all_permutations(n)) {
      for_each_reduced_word(sigma, f);
    }
  }
}  // namespace

TEST(Wiring, CrossingPairsAndStates) {
  auto const d = wiring_diagram(Word{1, 2, 1});
  EXPECT_EQ(d.n, 3u);
  ASSERT_EQ(d.states.size(), 4u);
  EXPECT_EQ(d.states.back().one_line(), (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(d.crossing_pairs,
            (std::vector<wire_pair>{{1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(trajectory(Word{1, 2, 1}, 1), (std::vector<int>{1, 2, 3, 3}));
  EXPECT_EQ(crossings_featuring(Word{1, 2, 1}, 3), (std::vector<std::size_t>{2, 3}));
  EXPECT_THROW(trajectory(Word{1}, 3), domain_error);
}

TEST(Wiring, CrossingOfValues) {
  EXPECT_EQ(crossing_of_values(Word{1, 2, 1}, 1, 2), 1u);
  EXPECT_EQ(crossing_of_values(Word{1, 2, 1}, 3, 2), 3u);
  EXPECT_THROW(crossing_of_values(Word{1}, 1, 3), not_found_error);
  EXPECT_THROW(crossing_of_values(Word{1, 1}, 1, 2), not_reduced_error);
}

// Each pair of wires crosses at most once in a reduced word: every
// inversion of the permutation is a crossing, exactly once.
TEST(Wiring, CrossingsAreTheInversions) {
  for_each_word(5, [](Word const& w) {
    auto const pairs = crossing_pairs(w);
    std::set<wire_pair> distinct(pairs.begin(), pairs.end());
    ASSERT_EQ(distinct.size(), pairs.size());
    auto const perm = perm_from_word(w);
    std::set<wire_pair> inv;
    for (auto [i, j] : inversions(perm)) {
      inv.insert(make_wire_pair(perm(i), perm(j)));
    }
    ASSERT_EQ(distinct, inv);
  });
}

TEST(Bump, ShiftWhenLetterIsOne) {
  auto const t = little_bump(Word{1, 2, 1}, 1);
  EXPECT_EQ(t.result, (Word{1, 3, 2}));
  ASSERT_EQ(t.steps.size(), 1u);
  EXPECT_EQ(t.steps[0].kind, BumpStepKind::shift);
  EXPECT_TRUE(t.shifted());
}

TEST(Bump, SingleDecrement) {
  auto const t = little_bump(Word{2}, 1);
  EXPECT_EQ(t.result, (Word{1}));
  EXPECT_EQ(t.steps.size(), 1u);
  EXPECT_EQ(t.terminal_index(), 1u);
}

TEST(Bump, FigureBumps) {
  auto const first = little_bump(figure_word, 7);
  EXPECT_EQ(first.result, (Word{5, 3, 1, 2, 4, 3, 4}));
  auto const second = little_bump(first.result, 7);
  EXPECT_EQ(second.result, (Word{6, 4, 1, 2, 5, 3, 4}));
  // replaying a trace reconstructs the intermediate words
  EXPECT_EQ(first.replay(figure_word, first.steps.size()), first.result);
  EXPECT_EQ(first.replay(figure_word, 0), figure_word);
}

TEST(Bump, Errors) {
  EXPECT_THROW(little_bump(Word{1, 1}, 1), not_reduced_error);
  EXPECT_THROW(little_bump(Word{1, 2}, 3), domain_error);
  EXPECT_THROW(little_bump(Word{1, 2}, 0), domain_error);
  EXPECT_THROW(inverse_bump(Word{1, 1}, 1), not_reduced_error);
}

// Deleting a letter of a reduced word need not leave a reduced word: in
// 3 4 3 the outer crossings exchange different wire pairs once the middle
// one is gone. No bump starts there.
TEST(Bump, StartsRequireReducedDeletion) {
  Word const w{3, 4, 3};
  EXPECT_FALSE(is_bump_start(w, 2));
  EXPECT_TRUE(is_bump_start(w, 1));
  EXPECT_TRUE(is_bump_start(w, 3));
  EXPECT_EQ(bump_starts(w), (std::vector<std::size_t>{1, 3}));
  try {
    little_bump(w, 2);
    FAIL() << "expected an error";
  } catch (domain_error const& e) {
    EXPECT_EQ(e.code(), "invalid_bump_start");
  }
}

// A start is valid exactly when the crossing there joins values adjacent
// in the permutation's inversion order: sigma * t_{uv} loses one inversion.
TEST(Bump, ValidStartsMatchLengthDropOracle) {
  for_each_word(5, [](Word const& w) {
    auto const perm  = perm_from_word(w);
    auto const pairs = crossing_pairs(w);
    for (std::size_t s = 1; s <= w.size(); ++s) {
      auto line     = perm.one_line();
      auto [u, v]   = pairs[s - 1];
      auto iu       = std::find(line.begin(), line.end(), u);
      auto iv       = std::find(line.begin(), line.end(), v);
      std::iter_swap(iu, iv);
      bool const drops_by_one = oracle::inversion_count(line)
                                == static_cast<int>(w.size()) - 1;
      ASSERT_EQ(is_bump_start(w, s), drops_by_one)
          << ::testing::PrintToString(w.letters()) << " start " << s;
    }
  });
}

TEST(Bump, PropertiesOverS5) {
  for_each_word(5, [](Word const& w) {
    for (auto s : bump_starts(w)) {
      auto const t = little_bump(w, s);
      std::set<std::size_t> idx;
      for (auto const& st : t.steps) {
        idx.insert(st.index);
      }
      ASSERT_EQ(idx.size(), t.steps.size()) << "index revisited";
      ASSERT_EQ(t.result.size(), w.size());
      ASSERT_TRUE(is_reduced(t.result));
      ASSERT_EQ(word_descent_set(t.result), word_descent_set(w));
      ASSERT_EQ(eg_q(t.result), eg_q(w));
    }
  });
}

TEST(InverseBump, Examples) {
  EXPECT_EQ(inverse_bump(Word{1}, 1).result, (Word{2}));
  // undoing the shift of 1 2 1 -> 1 3 2
  auto const fwd = little_bump(Word{1, 2, 1}, 1);
  auto const back = undo_bump(fwd);
  EXPECT_EQ(back.result, (Word{1, 2, 1}));
  EXPECT_TRUE(back.inverse);
}

TEST(InverseBump, RoundTripOnShortWords) {
  // reduced words of length <= 6 with letters <= 4
  for_each_word(5, [](Word const& w) {
    if (w.size() > 6) {
      return;
    }
    for (auto s : bump_starts(w)) {
      auto const fwd = little_bump(w, s);
      ASSERT_EQ(undo_bump(fwd).result, w);
      auto const bwd = inverse_bump(w, s);
      ASSERT_EQ(little_bump(bwd.result, bwd.terminal_index()).result, w);
      ASSERT_EQ(undo_bump(bwd).result, w);
    }
  });
}

TEST(Grassmannian, Data) {
  auto const g = grassmannian_data(Permutation{2, 4, 1, 3});
  EXPECT_EQ(g.k, 2);
  EXPECT_EQ(g.row_labels, (std::vector<int>{4, 2}));
  EXPECT_EQ(g.col_labels, (std::vector<int>{1, 3}));
  EXPECT_THROW(grassmannian_data(Permutation{3, 2, 1}), domain_error);
  EXPECT_THROW(grassmannian_data(Permutation{1, 2}), domain_error);
}

TEST(Grassmannian, Tab) {
  EXPECT_TRUE(grassmannian_tab(Word{}).empty());
  EXPECT_EQ(grassmannian_tab(Word{1, 3, 2}), (Tableau{{1, 2}, {3}}));
  Word const fig_final{6, 4, 1, 2, 5, 3, 4};
  EXPECT_EQ(grassmannian_tab(fig_final), (Tableau{{1, 3, 7}, {2, 6}, {4}, {5}}));
  auto const g = grassmannian_data(perm_from_word(fig_final));
  EXPECT_EQ(g.row_labels, (std::vector<int>{7, 5, 3, 2}));
  EXPECT_EQ(g.col_labels, (std::vector<int>{1, 4, 6}));
  EXPECT_THROW(grassmannian_tab(Word{1, 2, 1}), domain_error);
}

// Tab(w) = Q(w) for Grassmannian words.
TEST(Grassmannian, TabEqualsQ) {
  for_each_word(5, [](Word const& w) {
    if (!w.empty() && is_grassmannian_word(w)) {
      ASSERT_EQ(grassmannian_tab(w), eg_q(w));
    }
  });
}

TEST(LittleMap, Figure) {
  auto const r = ls(figure_word);
  EXPECT_EQ(r.tableau, (Tableau{{1, 3, 7}, {2, 6}, {4}, {5}}));
  ASSERT_EQ(r.traces.size(), 2u);
  EXPECT_EQ(r.traces[0].start, 7u);
  EXPECT_EQ(r.traces[1].start, 7u);
  EXPECT_EQ(r.grassmannian_word, (Word{6, 4, 1, 2, 5, 3, 4}));
}

TEST(LittleMap, SmallCases) {
  EXPECT_TRUE(ls(Word{}).tableau.empty());
  EXPECT_EQ(ls(Word{1, 2, 1}).tableau, (Tableau{{1, 2}, {3}}));
  EXPECT_EQ(ls(Word{1}).tableau, (Tableau{{1}}));
  EXPECT_THROW(ls(Word{2, 2}), not_reduced_error);
}

TEST(LittleMap, CanonicalStartIsLastInversion) {
  // 3 2 1 via 1 2 1: last inversion (2,3) -> values 2,1 cross at index 1
  EXPECT_EQ(canonical_bump_start(Word{1, 2, 1}), 1u);
  EXPECT_THROW(canonical_bump_start(Word{}), domain_error);
}

TEST(LittleMap, EqualsQOverS5) {
  for_each_word(5, [](Word const& w) { ASSERT_EQ(ls(w).tableau, eg_q(w)); });
}

TEST(Normalize, FixedPointsAndExamples) {
  auto const same = minimal_grassmannian_normalize(Word{1, 3, 2});
  EXPECT_EQ(same.word, (Word{1, 3, 2}));
  EXPECT_TRUE(same.traces.empty());
  // 1 3 2 4 ... : perm 1 3 2 -> word 2 is perm 1 3 2 with a leading fixed point
  auto const shifted = minimal_grassmannian_normalize(Word{2});
  EXPECT_EQ(shifted.word, (Word{1}));
  EXPECT_EQ(shifted.traces.size(), 1u);
  EXPECT_THROW(minimal_grassmannian_normalize(Word{1, 2, 1}), domain_error);
}

// Two Grassmannian words with equal Tab normalize to the same word, and the
// result has no leading fixed point.
TEST(Normalize, ConfluentOverS6) {
  std::map<Tableau, Word> seen;
  for_each_word(6, [&](Word const& w) {
    if (w.empty() || !is_grassmannian_word(w)) {
      return;
    }
    auto const r = minimal_grassmannian_normalize(w);
    ASSERT_EQ(r.word.min_letter(), 1);
    ASSERT_EQ(grassmannian_tab(r.word), grassmannian_tab(w));
    auto const [it, fresh] = seen.try_emplace(grassmannian_tab(w), r.word);
    ASSERT_EQ(it->second, r.word) << ::testing::PrintToString(w.letters());
  });
}

TEST(RobinsonSchensted, Examples) {
  EXPECT_EQ(rs_embedding_word(Permutation{1}), (Word{1}));
  EXPECT_EQ(rs_embedding_word(Permutation{2, 3, 1}), (Word{1, 5, 3}));
  EXPECT_EQ(rs_embedding_word(Permutation{3, 5, 2, 4, 1}), (Word{1, 7, 3, 9, 5}));
  auto const [p, q] = rs(Permutation{2, 3, 1});
  EXPECT_EQ(p, (Tableau{{1, 3}, {2}}));
  EXPECT_EQ(q, (Tableau{{1, 2}, {3}}));
  EXPECT_EQ(ls(Word{1, 5, 3}).tableau, q);
  auto const [pi, qi] = rs(Permutation::identity(3));
  EXPECT_EQ(pi, (Tableau{{1, 2, 3}}));
  EXPECT_EQ(qi, pi);
}

TEST(RobinsonSchensted, MatchesOracleAndLittleMap) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (auto const& sigma : all_permutations(n)) {
      auto const [p, q] = rs(sigma);
      auto const [op, oq] = oracle::schensted(sigma.one_line());
      ASSERT_EQ(p.rows(), op);
      ASSERT_EQ(q.rows(), oq);
      ASSERT_EQ(ls(rs_embedding_word(sigma)).tableau, q);
      ASSERT_EQ(ls(rs_embedding_word(inverse(sigma))).tableau, p);
    }
  }
}
