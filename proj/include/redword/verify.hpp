#pragma once

// Exhaustive checks of the correspondence between Edelman-Greene insertion,
// Little bumps and Coxeter-Knuth moves. Every check sweeps a finite envelope
// (all reduced words of all permutations of a given degree, all increasing
// tableaux up to a size, ...) and reports counterexamples as replayable JSON
// records.
//
// Reduced words of a permutation in S_k are also reduced words of its
// extension by fixed points to S_n, n > k, so sweeping Red(sigma) for all
// sigma in S_n covers every reduced word with letters below n.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "edelman_greene.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "little.hpp"
#include "permutation.hpp"
#include "tableau.hpp"

namespace redword {

  struct Failure {
    json input;
    json expected;
    json got;
  };

  struct VerificationReport {
    std::string          check_name;
    std::string          envelope;
    std::size_t          cases_checked = 0;
    std::vector<Failure> failures;           // at most max_recorded_failures
    std::size_t          failure_count = 0;  // including unrecorded ones
    std::size_t          inconclusive  = 0;
    double               elapsed_ms    = 0;

    static constexpr std::size_t max_recorded_failures = 100;

    bool passed() const noexcept {
      return failure_count == 0 && cases_checked > 0;
    }
  };

  inline void to_json(json& j, Failure const& f) {
    j = json{{"input", f.input}, {"expected", f.expected}, {"got", f.got}};
  }

  inline void to_json(json& j, VerificationReport const& r) {
    j = json{{"check", r.check_name},
             {"envelope", r.envelope},
             {"cases", r.cases_checked},
             {"failures", r.failures},
             {"elapsed_ms", r.elapsed_ms}};
    if (r.failure_count > r.failures.size()) {
      j["failure_count"] = r.failure_count;
    }
    if (r.inconclusive > 0) {
      j["inconclusive"] = r.inconclusive;
    }
  }

  namespace detail {

    class CaseLog {
     public:
      void pass() {
        ++_cases;
      }

      void fail(Failure f) {
        ++_cases;
        ++_failure_count;
        if (_failures.size() < VerificationReport::max_recorded_failures) {
          _failures.push_back(std::move(f));
        }
      }

      template <typename Expected, typename Got>
      void expect_eq(json input, Expected const& expected, Got const& got) {
        if (expected == got) {
          pass();
        } else {
          fail({std::move(input), json(expected), json(got)});
        }
      }

      void inconclusive() {
        ++_inconclusive;
      }

      // Runs one case, turning a thrown error into a recorded failure.
      template <typename F>
      void guarded(json const& input, F&& f) {
        try {
          f();
        } catch (std::exception const& e) {
          fail({input, "no exception", std::string("exception: ") + e.what()});
        }
      }

      void merge_into(VerificationReport& r) const {
        r.cases_checked += _cases;
        r.failure_count += _failure_count;
        r.inconclusive += _inconclusive;
        for (auto const& f : _failures) {
          if (r.failures.size() < VerificationReport::max_recorded_failures) {
            r.failures.push_back(f);
          }
        }
      }

     private:
      std::size_t          _cases         = 0;
      std::size_t          _failure_count = 0;
      std::size_t          _inconclusive  = 0;
      std::vector<Failure> _failures;
    };

    // Runs task(i) for i in [0, count) on a pool of threads.
    template <typename Task>
    void parallel_for(std::size_t count, Task&& task) {
      std::size_t const workers = std::max<std::size_t>(
          1, std::min<std::size_t>(std::thread::hardware_concurrency(), count));
      std::atomic<std::size_t> next{0};
      auto                     worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
          task(i);
        }
      };
      if (workers == 1) {
        worker();
        return;
      }
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back(worker);
      }
      for (auto& t : pool) {
        t.join();
      }
    }

    // Calls fn(word, log) for every reduced word of every permutation of
    // degree n. Work is split by permutation; logs merge in permutation
    // order, so reports do not depend on scheduling.
    template <typename Fn>
    void sweep_reduced_words(std::size_t n, VerificationReport& report, Fn&& fn) {
      auto const           perms = all_permutations(n);
      std::vector<CaseLog> logs(perms.size());
      parallel_for(perms.size(), [&](std::size_t i) {
        for_each_reduced_word(perms[i], [&](Word const& w) {
          logs[i].guarded(json(w), [&] { fn(w, logs[i]); });
        });
      });
      for (auto const& log : logs) {
        log.merge_into(report);
      }
    }

    inline std::vector<Word> all_reduced_words(std::size_t n) {
      std::vector<Word> out;
      for (auto const& p : all_permutations(n)) {
        for_each_reduced_word(p, [&out](Word const& w) { out.push_back(w); });
      }
      return out;
    }

    inline std::string envelope_sn(std::size_t n) {
      return "S<=" + std::to_string(n);
    }

    inline void require_n_max(std::size_t n_max, std::size_t hi = 6) {
      if (n_max < 2 || n_max > hi) {
        throw domain_error("n_max must lie in 2.." + std::to_string(hi));
      }
    }

    class Stopwatch {
     public:
      double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - _start)
            .count();
      }

     private:
      std::chrono::steady_clock::time_point _start = std::chrono::steady_clock::now();
    };

    inline VerificationReport make_report(std::string name, std::string envelope) {
      VerificationReport r;
      r.check_name = std::move(name);
      r.envelope   = std::move(envelope);
      return r;
    }

    inline json bump_input(Word const& w, std::size_t start) {
      return json{{"letters", w.letters()}, {"start", start}};
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Reduced words of the reverse permutation
  ////////////////////////////////////////////////////////////////////////

  // binom(n, 2)! / (1^{n-1} 3^{n-2} 5^{n-3} ... (2n-3)^1)
  inline big_int reverse_word_count_formula(int n) {
    big_int num = 1;
    for (int k = 2; k <= n * (n - 1) / 2; ++k) {
      num *= k;
    }
    big_int den = 1;
    for (int k = 1; k <= n - 1; ++k) {
      for (int e = 0; e < n - k; ++e) {
        den *= 2 * k - 1;
      }
    }
    return num / den;
  }

  inline VerificationReport verify_stanley(std::size_t n_max) {
    detail::require_n_max(n_max);
    detail::Stopwatch t;
    auto              r = detail::make_report("stanley", detail::envelope_sn(n_max));
    detail::CaseLog   log;
    for (std::size_t n = 2; n <= n_max; ++n) {
      std::size_t count = 0;
      for_each_reduced_word(Permutation::reverse(n), [&count](Word const&) { ++count; });
      big_int const formula = reverse_word_count_formula(static_cast<int>(n));
      big_int const hooks   = hook_length_count(staircase(static_cast<int>(n)));
      json const    got     = {{"enumerated", count},
                               {"formula", formula.str()},
                               {"hook_length", hooks.str()}};
      if (big_int(count) == formula && formula == hooks) {
        log.pass();
      } else {
        log.fail({json{{"n", n}}, "all three counts equal", got});
      }
    }
    log.merge_into(r);
    r.elapsed_ms = t.elapsed_ms();
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Q(w) = LS(w), bump invariance, descents
  ////////////////////////////////////////////////////////////////////////

  inline VerificationReport verify_same_map(std::size_t n_max) {
    detail::require_n_max(n_max, 7);
    detail::Stopwatch t;
    auto r = detail::make_report("same_map", detail::envelope_sn(n_max));
    detail::sweep_reduced_words(n_max, r, [](Word const& w, detail::CaseLog& log) {
      log.expect_eq(json(w), eg_q(w), ls(w).tableau);
    });
    r.elapsed_ms = t.elapsed_ms();
    return r;
  }

  inline VerificationReport verify_q_bump_invariance(std::size_t n_max) {
    detail::require_n_max(n_max);
    detail::Stopwatch t;
    auto r = detail::make_report("q_bump_invariance", detail::envelope_sn(n_max));
    detail::sweep_reduced_words(n_max, r, [](Word const& w, detail::CaseLog& log) {
      Tableau const q = eg_q(w);
      for (std::size_t const s : bump_starts(w)) {
        log.guarded(detail::bump_input(w, s), [&] {
          log.expect_eq(detail::bump_input(w, s), q, eg_q(little_bump(w, s).result));
        });
      }
    });
    r.elapsed_ms = t.elapsed_ms();
    return r;
  }

  // A bump changes each index at most once, keeps the word reduced and of
  // the same length, and preserves the descent set of the word.
  inline VerificationReport verify_bump_descents(std::size_t n_max) {
    detail::require_n_max(n_max);
    detail::Stopwatch t;
    auto r = detail::make_report("bump_descent_structure", detail::envelope_sn(n_max));
    detail::sweep_reduced_words(n_max, r, [](Word const& w, detail::CaseLog& log) {
      auto const des = word_descent_set(w);
      for (std::size_t const s : bump_starts(w)) {
        log.guarded(detail::bump_input(w, s), [&] {
          auto const               trace = little_bump(w, s);
          std::set<std::size_t>    indices;
          for (auto const& st : trace.steps) {
            indices.insert(st.index);
          }
          bool const ok = indices.size() == trace.steps.size()
                          && trace.result.size() == w.size()
                          && is_reduced(trace.result)
                          && word_descent_set(trace.result) == des;
          if (ok) {
            log.pass();
          } else {
            log.fail({detail::bump_input(w, s),
                      json{{"descents", des}},
                      json{{"trace", trace}, {"descents", word_descent_set(trace.result)}}});
          }
        });
      }
    });
    r.elapsed_ms = t.elapsed_ms();
    return r;
  }

  inline VerificationReport verify_descent_corollary(std::size_t n_max) {
    detail::require_n_max(n_max);
    detail::Stopwatch t;
    auto r = detail::make_report("descent_corollary", detail::envelope_sn(n_max));
    std::map<Tableau, std::pair<Word, std::vector<int>>> first_seen;
    detail::CaseLog                                      log;
    for (auto const& w : detail::all_reduced_words(n_max)) {
      auto const des          = word_descent_set(w);
      auto const [it, is_new] = first_seen.try_emplace(eg_q(w), w, des);
      if (is_new || it->second.second == des) {
        log.pass();
      } else {
        log.fail({json{{"letters", w.letters()}, {"same_q_as", it->second.first}},
                  json{{"descents", it->second.second}},
                  json{{"descents", des}}});
      }
    }
    log.merge_into(r);
    r.elapsed_ms = t.elapsed_ms();
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Action of Coxeter-Knuth moves on Q
  ////////////////////////////////////////////////////////////////////////

  // How the index pair (i, j) of the entry swap t_{i,j} names entries of a
  // standard tableau with N boxes: N - i (verbatim) or N + 1 - i (shifted).
  enum class LabelConvention { verbatim, shifted };

  inline char const* to_string(LabelConvention c) {
    return c == LabelConvention::verbatim ? "verbatim" : "shifted";
  }

  // Chosen by calibrate_label_convention() on S_4; see verify_ck_q_action.
  inline constexpr LabelConvention calibrated_label_convention
      = LabelConvention::shifted;

  // Recording tableaux that Q(w alpha) may equal, according to the entry
  // swaps predicted for a move on the window (i - 1, i, i + 1).
  inline std::vector<Tableau> predicted_ck_q(Tableau const&  q,
                                             CKMove const&   move,
                                             LabelConvention convention) {
    int const i     = static_cast<int>(move.pos) + 1;
    int const shift = convention == LabelConvention::shifted ? 1 : 0;
    std::vector<std::pair<int, int>> swaps{{i - 1, i}};
    if (move.kind == CKKind::type2) {
      swaps.emplace_back(i, i + 1);
    }
    std::vector<Tableau> out;
    for (auto [a, b] : swaps) {
      try {
        out.push_back(swap_labels(q, a - shift, b - shift));
      } catch (domain_error const&) {
        // label outside 1..N: this prediction is impossible
      }
    }
    return out;
  }

  namespace detail {
    inline VerificationReport ck_q_action_sweep(std::size_t n, LabelConvention c) {
      auto r = make_report(std::string("ck_q_action_") + to_string(c), envelope_sn(n));
      sweep_reduced_words(n, r, [c](Word const& w, CaseLog& log) {
        Tableau const q = eg_q(w);
        for (auto const& mv : ck_moves(w)) {
          Word const moved = apply_ck(w, mv);
          Tableau const got = eg_q(moved);
          auto const    candidates = predicted_ck_q(q, mv, c);
          json const    input{{"letters", w.letters()}, {"move", mv}};
          if (std::find(candidates.begin(), candidates.end(), got) != candidates.end()) {
            log.pass();
          } else {
            log.fail({input, candidates, got});
          }
        }
      });
      return r;
    }
  }  // namespace detail

  struct Calibration {
    bool verbatim_passes = false;
    bool shifted_passes  = false;

    // The unique passing convention, if exactly one passes.
    std::optional<LabelConvention> chosen() const {
      if (verbatim_passes == shifted_passes) {
        return std::nullopt;
      }
      return verbatim_passes ? LabelConvention::verbatim : LabelConvention::shifted;
    }
  };

  inline Calibration calibrate_label_convention(std::size_t n = 4) {
    return {detail::ck_q_action_sweep(n, LabelConvention::verbatim).passed(),
            detail::ck_q_action_sweep(n, LabelConvention::shifted).passed()};
  }

  // Calibrates the label convention on S_4 (exactly one must pass and it
  // must be the pinned one), then sweeps S_{n_max} with the pinned one.
  inline VerificationReport verify_ck_q_action(std::size_t n_max) {
    detail::require_n_max(n_max);
    detail::Stopwatch t;
    auto              r = detail::make_report("ck_q_action", detail::envelope_sn(n_max));

    auto const      cal = calibrate_label_convention(4);
    detail::CaseLog calibration;
    json const      cal_got{{"verbatim_passes", cal.verbatim_passes},
                            {"shifted_passes", cal.shifted_passes}};
    if (cal.chosen() == calibrated_label_convention) {
      calibration.pass();
    } else {
      calibration.fail({json{{"calibration", "S<=4"}},
                        json{{"unique_passing", to_string(calibrated_label_convention)}},
                        cal_got});
    }
    calibration.merge_into(r);

    auto const sweep = detail::ck_q_action_sweep(n_max, calibrated_label_convention);
    r.cases_checked += sweep.cases_checked;
    r.failure_count += sweep.failure_count;
    for (auto const& f : sweep.failures) {
      if (r.failures.size() < VerificationReport::max_recorded_failures) {
        r.failures.push_back(f);
      }
    }
    r.elapsed_ms = t.elapsed_ms();
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Coxeter-Knuth moves commute with bumps
  ////////////////////////////////////////////////////////////////////////

  // A word, a Coxeter-Knuth partner of it, the bump start in each, and the
  // two bumped words: the transitional configurations in which the move
  // changes type across the bump.
  struct TransitionalBump {
    Word        word;
    Word        partner;
    std::size_t word_start;
    std::size_t partner_start;
    Word        word_result;
    Word        partner_result;
  };

  inline std::vector<TransitionalBump> transitional_bump_cases() {
    return {
        // type 1 -> type 3
        {{3, 1, 2}, {1, 3, 2}, 1, 2, {2, 1, 2}, {1, 2, 1}},
        // type 2 -> type 3
        {{2, 1, 3}, {2, 3, 1}, 3, 2, {2, 1, 2}, {1, 2, 1}},
        // type 3 -> type 1
        {{2, 3, 2}, {3, 2, 3}, 1, 3, {1, 3, 2}, {3, 1, 2}},
        // type 3 -> type 2
        {{2, 3, 2}, {3, 2, 3}, 3, 1, {2, 3, 1}, {2, 1, 3}},
    };
  }

  namespace detail {
    // True iff some Coxeter-Knuth move in the window at `pos` takes a to b.
    inline bool ck_related_at(Word const& a, Word const& b, std::size_t pos) {
      if (a.size() != b.size() || pos + 2 > a.size()) {
        return false;
      }
      for (auto const& mv : ck_moves_at(a, pos)) {
        if (apply_ck(a, mv) == b) {
          return true;
        }
      }
      return false;
    }
  }  // namespace detail

  inline VerificationReport verify_ck_bump_commute(std::size_t n_max) {
    detail::require_n_max(n_max);
    detail::Stopwatch t;
    auto r = detail::make_report("ck_bump_commute", detail::envelope_sn(n_max));

    detail::CaseLog fixed;
    for (auto const& c : transitional_bump_cases()) {
      json const input{{"word", c.word}, {"partner", c.partner}};
      fixed.guarded(input, [&] {
        auto const a      = little_bump(c.word, c.word_start).result;
        auto const b      = little_bump(c.partner, c.partner_start).result;
        auto const pairs  = crossing_pairs(c.word);
        auto const ppairs = crossing_pairs(c.partner);
        bool const ok = a == c.word_result && b == c.partner_result
                        && pairs[c.word_start - 1] == ppairs[c.partner_start - 1]
                        && detail::ck_related_at(c.word, c.partner, 1)
                        && detail::ck_related_at(a, b, 1);
        if (ok) {
          fixed.pass();
        } else {
          fixed.fail({input,
                      json::array({c.word_result, c.partner_result}),
                      json::array({a, b})});
        }
      });
    }
    fixed.merge_into(r);

    detail::sweep_reduced_words(n_max, r, [](Word const& w, detail::CaseLog& log) {
      auto const pairs = crossing_pairs(w);
      for (auto const& mv : ck_moves(w)) {
        Word const moved = apply_ck(w, mv);
        for (std::size_t const start : bump_starts(w)) {
          auto const [u, v] = pairs[start - 1];
          json const input{{"letters", w.letters()}, {"move", mv}, {"wires", {u, v}}};
          log.guarded(input, [&] {
            Word const bumped_then = little_bump_at_values(w, u, v).result;
            Word const moved_then  = little_bump_at_values(moved, u, v).result;
            if (detail::ck_related_at(bumped_then, moved_then, mv.pos)) {
              log.pass();
            } else {
              log.fail({input,
                        json{{"ck_partner_of", bumped_then}, {"at", mv.pos}},
                        moved_then});
            }
          });
        }
      }
    });
    r.elapsed_ms = t.elapsed_ms();
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Column reading words
  ////////////////////////////////////////////////////////////////////////

  // Every bump of tau(w) keeps Q and yields a column reading word with the
  // same column sizes.
  inline VerificationReport verify_column_word_invariance(std::size_t n_max) {
    detail::require_n_max(n_max);
    detail::Stopwatch t;
    auto r = detail::make_report("column_word_invariance", detail::envelope_sn(n_max));
    detail::sweep_reduced_words(n_max, r, [](Word const& w, detail::CaseLog& log) {
      Word const tw    = tau(w);
      auto const base  = eg(tw);
      auto const shape = shape_of(base.p);
      for (std::size_t const s : bump_starts(tw)) {
        log.guarded(detail::bump_input(tw, s), [&] {
          Word const u  = little_bump(tw, s).result;
          auto const ru = eg(u);
          bool const ok = ru.q == base.q && shape_of(ru.p) == shape
                          && column_reading_word(ru.p) == u;
          if (ok) {
            log.pass();
          } else {
            log.fail({detail::bump_input(tw, s),
                      json{{"q", base.q}, {"column_word", true}},
                      json{{"q", ru.q}, {"p", ru.p}, {"bumped", u}}});
          }
        });
      }
    });
    r.elapsed_ms = t.elapsed_ms();
    return r;
  }

  // Every increasing tableau with at most `max_cells` boxes and entries in
  // 1..alphabet, in a fixed order.
  inline std::vector<Tableau> increasing_tableaux(int max_cells, int alphabet) {
    std::vector<Tableau> out;
    // shapes as partitions of 0..max_cells, then fillings row by row
    std::vector<std::vector<int>> shapes;
    std::function<void(std::vector<int>&, int, int)> parts
        = [&](std::vector<int>& cur, int left, int cap) {
            if (!cur.empty()) {
              shapes.push_back(cur);
            }
            for (int p = std::min(left, cap); p >= 1; --p) {
              cur.push_back(p);
              parts(cur, left - p, p);
              cur.pop_back();
            }
          };
    std::vector<int> cur;
    parts(cur, max_cells, max_cells);

    for (auto const& shape : shapes) {
      std::vector<std::vector<int>> rows;
      for (int len : shape) {
        rows.emplace_back(len, 0);
      }
      std::function<void(std::size_t, int)> fill = [&](std::size_t r, int c) {
        if (r == rows.size()) {
          out.emplace_back(rows);
          return;
        }
        if (c == static_cast<int>(rows[r].size())) {
          fill(r + 1, 0);
          return;
        }
        int lo = 1;
        if (c > 0) {
          lo = std::max(lo, rows[r][c - 1] + 1);
        }
        if (r > 0) {
          lo = std::max(lo, rows[r - 1][c] + 1);
        }
        for (int v = lo; v <= alphabet; ++v) {
          rows[r][c] = v;
          fill(r, c + 1);
        }
      };
      fill(0, 0);
    }
    return out;
  }

  // P(tau(T)) = T and each column of Q(tau(T)) holds consecutive entries.
  inline VerificationReport verify_increasing_tableaux(int max_cells = 8, int alphabet = 5) {
    detail::Stopwatch t;
    auto r = detail::make_report("column_word_tableaux",
                                 "increasing T, <=" + std::to_string(max_cells)
                                     + " cells, entries <=" + std::to_string(alphabet));
    detail::CaseLog log;
    for (auto const& tab : increasing_tableaux(max_cells, alphabet)) {
      log.guarded(json(tab), [&] {
        auto const res = eg(column_reading_word(tab));
        if (res.p == tab && has_consecutive_columns(res.q)) {
          log.pass();
        } else {
          log.fail({json(tab), json{{"p", tab}, {"consecutive_columns", true}},
                    json{{"p", res.p}, {"q", res.q}}});
        }
      });
    }
    log.merge_into(r);
    r.elapsed_ms = t.elapsed_ms();
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Inverse bumps
  ////////////////////////////////////////////////////////////////////////

  inline VerificationReport verify_bump_round_trip(std::size_t n_max) {
    detail::require_n_max(n_max);
    detail::Stopwatch t;
    auto r = detail::make_report("bump_round_trip", detail::envelope_sn(n_max));
    detail::sweep_reduced_words(n_max, r, [](Word const& w, detail::CaseLog& log) {
      for (std::size_t const s : bump_starts(w)) {
        log.guarded(detail::bump_input(w, s), [&] {
          auto const forward = little_bump(w, s);
          log.expect_eq(json{{"forward", detail::bump_input(w, s)}}, w,
                        undo_bump(forward).result);
        });
        log.guarded(detail::bump_input(w, s), [&] {
          auto const backward = inverse_bump(w, s);
          log.expect_eq(json{{"inverse", detail::bump_input(w, s)}}, w,
                        little_bump(backward.result, backward.terminal_index()).result);
        });
      }
    });
    r.elapsed_ms = t.elapsed_ms();
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Q-fibers communicate
  ////////////////////////////////////////////////////////////////////////

  // The canonical representative reached from w by Little bumps: the Little
  // map's Grassmannian word, normalized to the minimal Grassmannian
  // permutation of its shape.
  inline Word communication_canonical_word(Word const& w) {
    return minimal_grassmannian_normalize(ls(w).grassmannian_word).word;
  }

  // Words with equal Q reach the same canonical word; words with different
  // Q never do.
  inline VerificationReport verify_lam(std::size_t n_max) {
    detail::require_n_max(n_max);
    detail::Stopwatch t;
    auto r = detail::make_report("lam", detail::envelope_sn(n_max));

    auto const           words = detail::all_reduced_words(n_max);
    std::vector<Tableau> qs(words.size());
    std::vector<std::optional<Word>> canon(words.size());
    std::vector<std::string>         errors(words.size());
    detail::parallel_for(words.size(), [&](std::size_t i) {
      try {
        qs[i]    = eg_q(words[i]);
        canon[i] = communication_canonical_word(words[i]);
      } catch (std::exception const& e) {
        errors[i] = e.what();
      }
    });

    detail::CaseLog                                     log;
    std::map<Tableau, std::pair<Word, Word>>            by_q;     // q -> (witness, canonical)
    std::map<Word, std::pair<Word, Tableau>>            by_canon; // canonical -> (witness, q)
    for (std::size_t i = 0; i < words.size(); ++i) {
      auto const& w = words[i];
      if (!canon[i]) {
        log.fail({json(w), "canonical word", "exception: " + errors[i]});
        continue;
      }
      auto const& c          = *canon[i];
      auto const [qi, q_new] = by_q.try_emplace(qs[i], w, c);
      auto const [ci, c_new] = by_canon.try_emplace(c, w, qs[i]);
      if (!q_new && qi->second.second != c) {
        log.fail({json{{"letters", w.letters()}, {"same_q_as", qi->second.first}},
                  json{{"canonical", qi->second.second}},
                  json{{"canonical", c}}});
      } else if (!c_new && ci->second.second != qs[i]) {
        log.fail({json{{"letters", w.letters()}, {"same_canonical_as", ci->second.first}},
                  json{{"q", ci->second.second}},
                  json{{"q", qs[i]}}});
      } else {
        log.pass();
      }
    }
    log.merge_into(r);
    r.elapsed_ms = t.elapsed_ms();
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Robinson-Schensted embedding
  ////////////////////////////////////////////////////////////////////////

  inline VerificationReport verify_rs_embedding(std::size_t n_max) {
    detail::require_n_max(n_max, 7);
    detail::Stopwatch t;
    auto r = detail::make_report("rs_embedding", detail::envelope_sn(n_max));
    for (std::size_t n = 1; n <= n_max; ++n) {
      auto const           perms = all_permutations(n);
      std::vector<detail::CaseLog> logs(perms.size());
      detail::parallel_for(perms.size(), [&](std::size_t i) {
        auto const& sigma = perms[i];
        logs[i].guarded(json(sigma), [&] {
          auto const [p_rs, q_rs] = rs(sigma);
          logs[i].expect_eq(json{{"perm", sigma}, {"side", "Q"}}, q_rs,
                            ls(rs_embedding_word(sigma)).tableau);
          logs[i].expect_eq(json{{"perm", sigma}, {"side", "P"}}, p_rs,
                            ls(rs_embedding_word(inverse(sigma))).tableau);
        });
      });
      for (auto const& log : logs) {
        log.merge_into(r);
      }
    }
    r.elapsed_ms = t.elapsed_ms();
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Random bump sequences
  ////////////////////////////////////////////////////////////////////////

  // Random walks of Little bumps from random reduced words; whenever a walk
  // reaches a Grassmannian word, its Tab must equal LS of the start. Walks
  // that stay non-Grassmannian for `walk_bound` bumps are inconclusive.
  inline VerificationReport verify_any_sequence_corollary(std::size_t   n_max,
                                                          std::size_t   trials,
                                                          std::uint64_t seed,
                                                          std::size_t   walk_bound = 64) {
    detail::require_n_max(n_max);
    detail::Stopwatch t;
    auto r = detail::make_report("any_sequence", detail::envelope_sn(n_max) + ", "
                                                     + std::to_string(trials)
                                                     + " walks, seed "
                                                     + std::to_string(seed));
    auto const       words = detail::all_reduced_words(n_max);
    std::mt19937_64  rng(seed);
    detail::CaseLog  log;
    for (std::size_t trial = 0; trial < trials; ++trial) {
      Word const& w = words[rng() % words.size()];
      json        input{{"letters", w.letters()}, {"seed", seed}, {"trial", trial}};
      log.guarded(input, [&] {
        Tableau const            target = ls(w).tableau;
        Word                     cur    = w;
        std::vector<std::size_t> starts;
        for (std::size_t step = 0;; ++step) {
          if (is_grassmannian_word(cur)) {
            input["starts"] = starts;
            log.expect_eq(input, target, grassmannian_tab(cur));
            return;
          }
          if (step == walk_bound) {
            log.inconclusive();
            return;
          }
          auto const        starts_here = bump_starts(cur);
          std::size_t const s = starts_here[rng() % starts_here.size()];
          starts.push_back(s);
          cur = little_bump(cur, s).result;
        }
      });
    }
    log.merge_into(r);
    r.elapsed_ms = t.elapsed_ms();
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Everything
  ////////////////////////////////////////////////////////////////////////

  struct Profile {
    std::size_t   n_max    = 5;
    bool          extended = false;
    std::uint64_t seed     = 1;
    std::size_t   trials   = 1000;
  };

  // Reports sorted by (check name, envelope).
  inline std::vector<VerificationReport> run_all(Profile const& profile) {
    std::size_t const        n = profile.n_max;
    std::vector<VerificationReport> out;
    out.push_back(verify_stanley(n));
    out.push_back(verify_same_map(n));
    out.push_back(verify_q_bump_invariance(n));
    out.push_back(verify_bump_descents(n));
    out.push_back(verify_descent_corollary(n));
    out.push_back(verify_ck_q_action(n));
    out.push_back(verify_ck_bump_commute(n));
    out.push_back(verify_column_word_invariance(n));
    out.push_back(verify_increasing_tableaux());
    out.push_back(verify_bump_round_trip(n));
    out.push_back(verify_lam(n));
    out.push_back(verify_rs_embedding(n));
    out.push_back(verify_any_sequence_corollary(n, profile.trials, profile.seed));
    if (profile.extended) {
      out.push_back(verify_same_map(6));
      out.push_back(verify_rs_embedding(6));
    }
    std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      return std::tie(a.check_name, a.envelope) < std::tie(b.check_name, b.envelope);
    });
    return out;
  }

  inline bool all_passed(std::vector<VerificationReport> const& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](auto const& r) { return r.passed(); });
  }

}  // namespace redword
