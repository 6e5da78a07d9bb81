// Command-line front end: one subcommand per core operation, plus the
// verification harness and the JSON service.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "redword/api.hpp"
#include "redword/edelman_greene.hpp"
#include "redword/io.hpp"
#include "redword/little.hpp"
#include "redword/render.hpp"
#include "redword/server.hpp"
#include "redword/verify.hpp"

namespace {

  using namespace redword;

  std::string join_args(std::vector<std::string> const& args) {
    std::string out;
    for (auto const& a : args) {
      out += a;
      out += ' ';
    }
    return out;
  }

  Word word_arg(std::vector<std::string> const& args) {
    return parse_word_text(join_args(args));
  }

  void print_tableau(char const* name, Tableau const& t) {
    std::cout << name << ":\n";
    if (t.empty()) {
      std::cout << "  (empty)\n";
    }
    for (auto const& row : t.rows()) {
      std::cout << "  " << detail::join(row) << '\n';
    }
  }

  std::string describe(BumpStep const& s) {
    switch (s.kind) {
      case BumpStepKind::decrement:
      case BumpStepKind::increment:
        return "w" + std::to_string(s.index) + ": " + std::to_string(s.before)
               + " -> " + std::to_string(s.after);
      case BumpStepKind::shift:
        return "w" + std::to_string(s.index) + " = 1: shift every other letter up";
      case BumpStepKind::unshift:
        return "shift every letter down";
    }
    return "";
  }

  void print_trace(BumpTrace const& t) {
    std::cout << (t.inverse ? "inverse bump" : "bump") << " from " << t.start << '\n';
    for (auto const& s : t.steps) {
      std::cout << "  " << describe(s) << '\n';
    }
    std::cout << "  result: " << to_text(t.result) << '\n';
  }

  std::vector<std::size_t> parse_index_list(std::string const& text) {
    std::vector<std::size_t> out;
    for (int v : detail::parse_positive_list(text)) {
      out.push_back(static_cast<std::size_t>(v));
    }
    return out;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduced words, Edelman-Greene insertion and Little bumps"};
  app.require_subcommand(1);
  app.fallthrough();

  bool                     as_json = false;
  std::vector<std::string> letters;
  app.add_flag("--json", as_json, "print JSON instead of text");

  auto* cmd_enum = app.add_subcommand("enum", "list the reduced words of a permutation");
  std::vector<std::string> perm_args;
  std::size_t              limit      = 0;
  bool                     count_only = false;
  cmd_enum->add_option("perm", perm_args, "one-line notation, e.g. 3 2 1")->required();
  cmd_enum->add_option("--limit", limit, "stop after this many words (0: no limit)");
  cmd_enum->add_flag("--count", count_only, "print only the number of words");

  auto* cmd_eg = app.add_subcommand("eg", "Edelman-Greene insertion");
  bool  show_steps = false;
  cmd_eg->add_option("letters", letters, "the word");
  cmd_eg->add_flag("--steps", show_steps, "print each insertion path");

  auto* cmd_little = app.add_subcommand("little", "the Little map LS(w)");
  cmd_little->add_option("letters", letters, "a reduced word");

  auto*       cmd_bump = app.add_subcommand("bump", "one Little bump");
  std::size_t start    = 0;
  std::string pair_text;
  bool        inverse_dir = false;
  cmd_bump->add_option("letters", letters, "a reduced word");
  auto* start_opt = cmd_bump->add_option("--start", start, "1-based start index");
  auto* pair_opt  = cmd_bump->add_option("--pair", pair_text, "start at the crossing of wires u,v");
  start_opt->excludes(pair_opt);
  cmd_bump->add_flag("--inverse", inverse_dir, "bump in the increment direction");

  auto*       cmd_ck = app.add_subcommand("ck", "Coxeter-Knuth moves");
  std::string apply_text;
  bool        show_class = false;
  cmd_ck->add_option("letters", letters, "the word");
  cmd_ck->add_option("--apply", apply_text, "pos:kind[:direction], e.g. 1:1:forward");
  cmd_ck->add_flag("--class", show_class, "print the whole Coxeter-Knuth class");

  auto* cmd_tab = app.add_subcommand("tab", "Tab of a Grassmannian word");
  cmd_tab->add_option("letters", letters, "a reduced Grassmannian word");

  auto* cmd_norm = app.add_subcommand("normalize", "minimal Grassmannian form");
  cmd_norm->add_option("letters", letters, "a reduced Grassmannian word");

  auto*         cmd_verify = app.add_subcommand("verify", "run the exhaustive checks");
  Profile       profile;
  cmd_verify->add_option("--n", profile.n_max, "largest degree swept (2..6)")
      ->check(CLI::Range(2, 6));
  cmd_verify->add_flag("--extended", profile.extended, "add the degree 6 sweeps");
  cmd_verify->add_option("--seed", profile.seed, "seed of the random walks");
  cmd_verify->add_option("--trials", profile.trials, "number of random walks");

  auto*       cmd_render = app.add_subcommand("render", "draw the wiring diagram");
  std::string format     = "ascii";
  std::string highlight_text;
  bool        no_labels = false;
  cmd_render->add_option("letters", letters, "the word");
  cmd_render->add_option("--format", format, "ascii or svg")
      ->check(CLI::IsMember({"ascii", "svg"}));
  cmd_render->add_option("--highlight", highlight_text, "crossings to mark, e.g. 1,3");
  cmd_render->add_flag("--no-labels", no_labels, "omit wire labels");

  auto*       cmd_serve = app.add_subcommand("serve", "serve the JSON routes over HTTP");
  int         port      = 8080;
  std::string host      = "127.0.0.1";
  cmd_serve->add_option("--port", port, "TCP port")->check(CLI::Range(1, 65535));
  cmd_serve->add_option("--host", host, "address to bind");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_enum->parsed()) {
      auto const  perm  = parse_permutation_text(join_args(perm_args));
      std::size_t count = 0;
      json        words = json::array();
      for_each_reduced_word(perm, [&](Word const& w) {
        if (limit != 0 && count == limit) {
          return false;
        }
        ++count;
        if (as_json) {
          words.push_back(w.letters());
        } else if (!count_only) {
          std::cout << to_text(w) << '\n';
        }
        return true;
      });
      if (as_json) {
        std::cout << json{{"perm", perm}, {"count", count}, {"words", words}}.dump() << '\n';
      } else if (count_only) {
        std::cout << count << '\n';
      }
      return 0;
    }

    if (cmd_eg->parsed()) {
      auto const r = eg(word_arg(letters));
      if (as_json) {
        std::cout << json(r).dump() << '\n';
        return 0;
      }
      if (show_steps) {
        for (std::size_t k = 0; k < r.steps.size(); ++k) {
          auto const& s = r.steps[k];
          std::cout << "insert " << s.letter << ": path";
          for (auto const& c : s.path) {
            std::cout << " (" << c.row + 1 << ',' << c.col + 1 << ')';
          }
          if (!s.special_rows.empty()) {
            std::cout << "  special in row";
            for (int row : s.special_rows) {
              std::cout << ' ' << row + 1;
            }
          }
          std::cout << '\n';
        }
      }
      print_tableau("P", r.p);
      print_tableau("Q", r.q);
      return 0;
    }

    if (cmd_little->parsed()) {
      auto const r = ls(word_arg(letters));
      if (as_json) {
        std::cout << json{{"tableau", r.tableau},
                          {"traces", r.traces},
                          {"grassmannian_word", r.grassmannian_word}}
                         .dump()
                  << '\n';
        return 0;
      }
      for (auto const& t : r.traces) {
        print_trace(t);
      }
      std::cout << "grassmannian word: " << to_text(r.grassmannian_word) << '\n';
      print_tableau("LS", r.tableau);
      return 0;
    }

    if (cmd_bump->parsed()) {
      Word const w = word_arg(letters);
      if (!pair_text.empty()) {
        auto const uv = detail::parse_positive_list(pair_text);
        if (uv.size() != 2) {
          throw domain_error("--pair takes two wire values");
        }
        start = crossing_of_values(w, uv[0], uv[1]);
      } else if (start == 0) {
        throw domain_error("give --start or --pair");
      }
      auto const t = inverse_dir ? inverse_bump(w, start) : little_bump(w, start);
      if (as_json) {
        std::cout << json(t).dump() << '\n';
      } else {
        print_trace(t);
      }
      return 0;
    }

    if (cmd_ck->parsed()) {
      Word const w = word_arg(letters);
      if (show_class) {
        for (auto const& v : ck_class(w)) {
          std::cout << to_text(v) << '\n';
        }
        return 0;
      }
      if (!apply_text.empty()) {
        auto const parts = detail::split_tokens(apply_text, ":");
        if (parts.size() < 2 || parts.size() > 3) {
          throw domain_error("--apply takes pos:kind[:direction]");
        }
        json mv{{"pos", detail::parse_positive(parts[0])},
                {"kind", std::string(parts[1].text)}};
        if (parts.size() == 3) {
          mv["direction"] = std::string(parts[2].text);
        }
        Word const v = apply_ck(w, mv.get<CKMove>());
        std::cout << (as_json ? json(v).dump() : to_text(v)) << '\n';
        return 0;
      }
      auto const moves = ck_moves(w);
      if (as_json) {
        std::cout << json(moves).dump() << '\n';
        return 0;
      }
      for (auto const& mv : moves) {
        std::cout << mv.pos << ' ' << to_string(mv.kind) << ' ' << to_string(mv.direction)
                  << " -> " << to_text(apply_ck(w, mv)) << '\n';
      }
      return 0;
    }

    if (cmd_tab->parsed()) {
      Word const    w = word_arg(letters);
      Tableau const t = grassmannian_tab(w);
      if (as_json) {
        std::cout << json(t).dump() << '\n';
      } else {
        print_tableau("Tab", t);
      }
      return 0;
    }

    if (cmd_norm->parsed()) {
      auto const r = minimal_grassmannian_normalize(word_arg(letters));
      if (as_json) {
        std::cout << json{{"word", r.word}, {"traces", r.traces}}.dump() << '\n';
        return 0;
      }
      for (auto const& t : r.traces) {
        print_trace(t);
      }
      std::cout << to_text(r.word) << '\n';
      return 0;
    }

    if (cmd_verify->parsed()) {
      auto const reports = run_all(profile);
      for (auto const& r : reports) {
        if (as_json) {
          std::cout << json(r).dump() << '\n';
        } else {
          std::cout << (r.passed() ? "PASS " : "FAIL ") << r.check_name << " ["
                    << r.envelope << "] cases=" << r.cases_checked
                    << " failures=" << r.failure_count;
          if (r.inconclusive > 0) {
            std::cout << " inconclusive=" << r.inconclusive;
          }
          std::cout << " " << r.elapsed_ms << " ms\n";
          for (auto const& f : r.failures) {
            std::cout << "  " << json(f).dump() << '\n';
          }
        }
      }
      return all_passed(reports) ? 0 : 1;
    }

    if (cmd_render->parsed()) {
      RenderSpec spec;
      spec.format = format == "svg" ? RenderFormat::svg : RenderFormat::ascii;
      spec.labels = !no_labels;
      for (auto t : parse_index_list(highlight_text)) {
        spec.highlight.insert(t);
      }
      std::cout << render_wiring(word_arg(letters), spec);
      return 0;
    }

    if (cmd_serve->parsed()) {
      httplib::Server server;
      mount_api(server);
      std::cerr << "listening on " << host << ':' << port << '\n';
      if (!server.listen(host, port)) {
        std::cerr << "cannot bind " << host << ':' << port << '\n';
        return 1;
      }
      return 0;
    }
  } catch (parse_error const& e) {
    std::cerr << "error: " << e.what() << " (column " << e.column() << ")\n";
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
