#include <gtest/gtest.h>

#include "redword/verify.hpp"

using namespace redword;

namespace {
  json without_elapsed(VerificationReport const& r) {
    json j = r;
    j.erase("elapsed_ms");
    return j;
  }
}  // namespace

TEST(ReverseWordCount, Formula) {
  EXPECT_EQ(reverse_word_count_formula(2), 1);
  EXPECT_EQ(reverse_word_count_formula(3), 2);
  EXPECT_EQ(reverse_word_count_formula(4), 16);
  EXPECT_EQ(reverse_word_count_formula(5), 768);
  EXPECT_EQ(reverse_word_count_formula(6), 292864);
}

TEST(Harness, RejectsBadEnvelope) {
  EXPECT_THROW(verify_same_map(1), domain_error);
  EXPECT_THROW(verify_q_bump_invariance(9), domain_error);
}

TEST(Harness, ReportJsonShape) {
  auto const r = verify_same_map(3);
  json const j = r;
  EXPECT_EQ(j["check"], "same_map");
  EXPECT_EQ(j["envelope"], "S<=3");
  EXPECT_EQ(j["cases"], 1 + 1 + 1 + 1 + 1 + 2);  // |Red| over S_3
  EXPECT_TRUE(j["failures"].empty());
  EXPECT_TRUE(j.contains("elapsed_ms"));
}

TEST(Harness, CalibrationPicksShiftedLabels) {
  auto const c = calibrate_label_convention(4);
  EXPECT_FALSE(c.verbatim_passes);
  EXPECT_TRUE(c.shifted_passes);
  ASSERT_TRUE(c.chosen().has_value());
  EXPECT_EQ(*c.chosen(), calibrated_label_convention);
}

TEST(Harness, PredictedQForTypeTwoHasTwoCandidates) {
  Tableau const q{{1, 3, 7}, {2, 6}, {4}, {5}};
  auto const    one = predicted_ck_q(q, {2, CKKind::type1, CKDirection::forward},
                                     LabelConvention::shifted);
  auto const    two = predicted_ck_q(q, {2, CKKind::type2, CKDirection::forward},
                                     LabelConvention::shifted);
  EXPECT_EQ(one.size(), 1u);
  EXPECT_EQ(two.size(), 2u);
  // middle index i = 3; t_{2,3} swaps entries 7+1-2 = 6 and 5
  EXPECT_EQ(one[0], (Tableau{{1, 3, 7}, {2, 5}, {4}, {6}}));
}

TEST(Harness, TransitionalCasesHold) {
  for (auto const& c : transitional_bump_cases()) {
    EXPECT_EQ(little_bump(c.word, c.word_start).result, c.word_result);
    EXPECT_EQ(little_bump(c.partner, c.partner_start).result, c.partner_result);
  }
}

TEST(Harness, SmallSweepsPass) {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (auto const& r : {verify_stanley(n), verify_same_map(n), verify_q_bump_invariance(n),
                          verify_bump_descents(n), verify_descent_corollary(n),
                          verify_ck_q_action(n), verify_ck_bump_commute(n),
                          verify_column_word_invariance(n), verify_bump_round_trip(n),
                          verify_lam(n), verify_rs_embedding(n)}) {
      EXPECT_TRUE(r.passed()) << json(r).dump();
    }
  }
}

TEST(Harness, IncreasingTableauxEnumeration) {
  // one-box tableaux with entries in 1..3, plus the empty tableau excluded
  auto const t = increasing_tableaux(1, 3);
  EXPECT_EQ(t.size(), 3u);
  for (auto const& x : increasing_tableaux(4, 4)) {
    EXPECT_TRUE(is_increasing(x));
  }
  EXPECT_TRUE(verify_increasing_tableaux(6, 4).passed());
}

TEST(Harness, RandomWalksAreSeededAndHonest) {
  auto const a = verify_any_sequence_corollary(4, 1000, 7);
  auto const b = verify_any_sequence_corollary(4, 1000, 7);
  EXPECT_EQ(without_elapsed(a), without_elapsed(b));
  EXPECT_EQ(a.failure_count, 0u);
  EXPECT_EQ(a.cases_checked + a.inconclusive, 1000u);
  EXPECT_GT(a.cases_checked, 0u);
}

TEST(Harness, WalkFromAGrassmannianWordIsConclusiveImmediately) {
  // only reduced word in S_2 is 1, Grassmannian; Tab = LS = [[1]]
  auto const r = verify_any_sequence_corollary(2, 20, 3);
  EXPECT_EQ(r.inconclusive, 0u);
  EXPECT_EQ(r.cases_checked, 20u);
}

TEST(Harness, RunAllIsDeterministicAndSorted) {
  Profile const p{3, false, 11, 100};
  auto const    a = run_all(p);
  auto const    b = run_all(p);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(without_elapsed(a[i]), without_elapsed(b[i]));
    if (i > 0) {
      EXPECT_LE(std::tie(a[i - 1].check_name, a[i - 1].envelope),
                std::tie(a[i].check_name, a[i].envelope));
    }
  }
  EXPECT_TRUE(all_passed(a));
  EXPECT_TRUE(all_passed(run_all(Profile{2, false, 1, 10})));
}

// Counterexample records must be replayable: a deliberately wrong
// expectation produces a record whose input reproduces the mismatch.
TEST(Harness, FailureRecordsAreReplayable) {
  VerificationReport r = detail::make_report("probe", "S<=3");
  detail::sweep_reduced_words(3, r, [](Word const& w, detail::CaseLog& log) {
    Tableau wrong = w.empty() ? Tableau{{1}} : Tableau();
    log.expect_eq(json(w), wrong, eg_q(w));
  });
  EXPECT_EQ(r.failure_count, r.cases_checked);
  for (auto const& f : r.failures) {
    Word const w = f.input.get<Word>();
    EXPECT_EQ(json(eg_q(w)), f.got);
  }
}
