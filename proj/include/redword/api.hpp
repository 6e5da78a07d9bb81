#pragma once

// Stateless JSON endpoints. Every route takes a JSON object and answers
// with a JSON object that echoes the canonical parsed input under "input".
// Failures answer {"error": {"code", "message", "at"}} with a 4xx status,
// or 500 for internal errors; no request makes the handler throw.

#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "edelman_greene.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "little.hpp"
#include "permutation.hpp"
#include "render.hpp"
#include "tableau.hpp"

namespace redword {

  struct ApiResponse {
    int  status = 200;
    json body;
  };

  // Request size limits; they keep every route cheap.
  struct ApiLimits {
    static constexpr std::size_t max_length  = 64;   // letters per word
    static constexpr int         max_letter  = 32;
    static constexpr std::size_t max_degree  = 12;   // /api/enumerate
    static constexpr std::size_t max_limit   = 10000;
    static constexpr std::size_t default_limit = 1000;
  };

  namespace detail {

    class schema_error : public error {
     public:
      schema_error(std::string const& message, json at = nullptr)
          : error("schema", message), _at(std::move(at)) {}

      json const& at() const noexcept {
        return _at;
      }

     private:
      json _at;
    };

    inline json const& require_field(json const& body, char const* key) {
      if (!body.contains(key)) {
        throw schema_error(std::string("missing field '") + key + "'", key);
      }
      return body.at(key);
    }

    inline std::vector<int> int_array(json const& j, char const* key) {
      if (!j.is_array()) {
        throw schema_error(std::string("'") + key + "' must be an array", key);
      }
      std::vector<int> out;
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer()) {
          throw schema_error(std::string("'") + key + "' must hold integers",
                             json{{"field", key}, {"index", i}});
        }
        auto const v = j[i].get<long long>();
        if (v < -(1LL << 30) || v > (1LL << 30)) {
          throw schema_error(std::string("'") + key + "' holds an out-of-range value",
                             json{{"field", key}, {"index", i}});
        }
        out.push_back(static_cast<int>(v));
      }
      return out;
    }

    inline std::size_t index_field(json const& body, char const* key) {
      json const& j = require_field(body, key);
      if (!j.is_number_integer() || j.get<long long>() < 0) {
        throw schema_error(std::string("'") + key + "' must be a non-negative integer",
                           key);
      }
      return j.get<std::size_t>();
    }

    inline Word word_field(json const& body) {
      auto letters = int_array(require_field(body, "letters"), "letters");
      if (letters.size() > ApiLimits::max_length) {
        throw schema_error("word longer than " + std::to_string(ApiLimits::max_length),
                           "letters");
      }
      for (std::size_t i = 0; i < letters.size(); ++i) {
        if (letters[i] > ApiLimits::max_letter) {
          throw schema_error("letters are limited to " + std::to_string(ApiLimits::max_letter),
                             json{{"field", "letters"}, {"index", i}});
        }
      }
      return Word(std::move(letters));
    }

    inline Word reduced_word_field(json const& body) {
      Word w = word_field(body);
      require_reduced(w, "this route");
      return w;
    }

    inline json word_summary(Word const& w) {
      json j{{"letters", w.letters()}, {"reduced", is_reduced(w)}};
      if (is_reduced(w)) {
        j["permutation"] = perm_from_word(w);
        j["descents"]    = word_descent_set(w);
      }
      return j;
    }

    using route_fn = std::function<json(json const& body, json& input)>;

    inline json route_parse(json const& body, json& input) {
      json const& text_j = require_field(body, "text");
      if (!text_j.is_string()) {
        throw schema_error("'text' must be a string", "text");
      }
      auto const text = text_j.get<std::string>();
      auto const kind = body.value("kind", std::string("word"));
      input           = json{{"text", text}, {"kind", kind}};
      if (kind == "word") {
        Word const w = parse_word_text(text);
        if (w.size() > ApiLimits::max_length
            || (!w.empty() && w.degree() > ApiLimits::max_letter + 1)) {
          throw schema_error("word exceeds the service limits", "text");
        }
        return {{"word", word_summary(w)}};
      }
      if (kind == "permutation") {
        return {{"permutation", parse_permutation_text(text)}};
      }
      if (kind == "tableau") {
        return {{"tableau", parse_tableau_text(text)}};
      }
      throw schema_error("'kind' must be word, permutation or tableau", "kind");
    }

    inline json route_eg(json const& body, json& input) {
      Word const w = word_field(body);
      input        = w;
      json out     = eg(w);
      out["reduced"] = is_reduced(w);
      return out;
    }

    inline json route_little(json const& body, json& input) {
      Word const w = reduced_word_field(body);
      input        = w;
      auto const r = ls(w);
      return {{"tableau", r.tableau},
              {"traces", r.traces},
              {"grassmannian_word", r.grassmannian_word}};
    }

    inline json route_bump(json const& body, json& input) {
      Word const w = reduced_word_field(body);
      if (body.contains("value_pair")) {
        auto const pair = int_array(body.at("value_pair"), "value_pair");
        if (pair.size() != 2) {
          throw schema_error("'value_pair' must hold two values", "value_pair");
        }
        input = json{{"letters", w.letters()}, {"value_pair", pair}};
        return {{"trace", little_bump_at_values(w, pair[0], pair[1])}};
      }
      std::size_t const start = index_field(body, "start");
      input                   = json{{"letters", w.letters()}, {"start", start}};
      return {{"trace", little_bump(w, start)}};
    }

    inline json route_inverse_bump(json const& body, json& input) {
      Word const        w        = reduced_word_field(body);
      std::size_t const start    = index_field(body, "start");
      bool const        collapse = body.value("collapse", false);
      input = json{{"letters", w.letters()}, {"start", start}, {"collapse", collapse}};
      return {{"trace", inverse_bump(w, start, collapse)}};
    }

    inline json ck_moves_json(Word const& w, std::vector<CKMove> const& moves) {
      json out = json::array();
      for (auto const& mv : moves) {
        json j      = mv;
        j["result"] = apply_ck(w, mv);
        out.push_back(std::move(j));
      }
      return out;
    }

    inline json route_ck_moves(json const& body, json& input) {
      Word const w = word_field(body);
      if (body.contains("pos")) {
        std::size_t const pos = index_field(body, "pos");
        input                 = json{{"letters", w.letters()}, {"pos", pos}};
        return {{"moves", ck_moves_json(w, ck_moves_at(w, pos))}};
      }
      input = w;
      return {{"moves", ck_moves_json(w, ck_moves(w))}};
    }

    inline json route_ck_apply(json const& body, json& input) {
      Word const w = word_field(body);
      index_field(body, "pos");
      require_field(body, "kind");
      CKMove mv;
      try {
        mv = body.get<CKMove>();
      } catch (json::exception const& e) {
        throw schema_error(e.what());
      }
      input          = json{{"letters", w.letters()}, {"move", mv}};
      Word const out = apply_ck(w, mv);
      json       res{{"result", out}};
      if (is_reduced(w)) {
        res["q_before"] = eg_q(w);
        res["q_after"]  = eg_q(out);
      }
      return res;
    }

    inline json route_tab(json const& body, json& input) {
      Word const w = reduced_word_field(body);
      input        = w;
      json out{{"tableau", grassmannian_tab(w)}};
      if (!w.empty()) {
        out["grassmannian"] = grassmannian_data(perm_from_word(w));
      }
      return out;
    }

    inline json route_normalize(json const& body, json& input) {
      Word const w = reduced_word_field(body);
      input        = w;
      auto const r = minimal_grassmannian_normalize(w);
      return {{"word", r.word}, {"traces", r.traces}};
    }

    inline json route_enumerate(json const& body, json& input) {
      auto const values = int_array(require_field(body, "perm"), "perm");
      if (values.size() > ApiLimits::max_degree) {
        throw schema_error("permutations are limited to degree "
                               + std::to_string(ApiLimits::max_degree),
                           "perm");
      }
      Permutation const perm{std::vector<int>(values)};
      std::size_t       limit = ApiLimits::default_limit;
      if (body.contains("limit")) {
        limit = index_field(body, "limit");
      }
      if (limit > ApiLimits::max_limit) {
        throw schema_error("'limit' may be at most " + std::to_string(ApiLimits::max_limit),
                           "limit");
      }
      input = json{{"perm", perm}, {"limit", limit}};
      json words     = json::array();
      bool truncated = false;
      for_each_reduced_word(perm, [&](Word const& w) {
        if (words.size() == limit) {
          truncated = true;
          return false;
        }
        words.push_back(w.letters());
        return true;
      });
      return {{"words", words}, {"count", words.size()}, {"truncated", truncated}};
    }

    inline json route_render_svg(json const& body, json& input) {
      Word const w = word_field(body);
      RenderSpec spec;
      spec.format = RenderFormat::svg;
      if (body.contains("highlight")) {
        for (int t : int_array(body.at("highlight"), "highlight")) {
          if (t < 1) {
            throw domain_error("highlight indices are 1-based");
          }
          spec.highlight.insert(static_cast<std::size_t>(t));
        }
      }
      spec.labels = body.value("labels", true);
      input = json{{"letters", w.letters()},
                   {"highlight", spec.highlight},
                   {"labels", spec.labels}};
      return {{"svg", render_wiring_svg(w, spec)}};
    }

    inline std::map<std::string, route_fn> const& routes() {
      static std::map<std::string, route_fn> const table{
          {"/api/parse", route_parse},
          {"/api/eg", route_eg},
          {"/api/little", route_little},
          {"/api/bump", route_bump},
          {"/api/inverse_bump", route_inverse_bump},
          {"/api/ck/moves", route_ck_moves},
          {"/api/ck/apply", route_ck_apply},
          {"/api/tab", route_tab},
          {"/api/normalize", route_normalize},
          {"/api/enumerate", route_enumerate},
          {"/api/render/svg", route_render_svg},
      };
      return table;
    }

    inline ApiResponse error_response(int status, std::string code, std::string message,
                                      json at, json input) {
      json body{{"error", {{"code", std::move(code)}, {"message", std::move(message)}, {"at", std::move(at)}}}};
      if (!input.is_null()) {
        body["input"] = std::move(input);
      }
      return {status, std::move(body)};
    }
  }  // namespace detail

  inline std::vector<std::string> api_routes() {
    std::vector<std::string> out;
    for (auto const& [name, fn] : detail::routes()) {
      out.push_back(name);
    }
    return out;
  }

  inline ApiResponse handle_request(std::string const& route, json const& body) {
    auto const& table = detail::routes();
    auto const  it    = table.find(route);
    if (it == table.end()) {
      return detail::error_response(404, "unknown_route", "no route " + route, route, nullptr);
    }
    if (!body.is_object()) {
      return detail::error_response(400, "schema", "request body must be a JSON object",
                                    nullptr, nullptr);
    }
    json input;
    try {
      json out     = it->second(body, input);
      out["input"] = input;
      return {200, std::move(out)};
    } catch (parse_error const& e) {
      return detail::error_response(400, e.code(), e.what(), e.column(), input);
    } catch (detail::schema_error const& e) {
      return detail::error_response(400, e.code(), e.what(), e.at(), input);
    } catch (internal_error const& e) {
      return detail::error_response(500, e.code(), e.what(), nullptr, input);
    } catch (not_found_error const& e) {
      return detail::error_response(404, e.code(), e.what(), nullptr, input);
    } catch (error const& e) {
      return detail::error_response(400, e.code(), e.what(), nullptr, input);
    } catch (json::exception const& e) {
      return detail::error_response(400, "schema", e.what(), nullptr, input);
    } catch (std::exception const& e) {
      return detail::error_response(500, "internal_error", e.what(), nullptr, input);
    }
  }

  // Parses the raw request text first; malformed JSON is a schema error.
  inline ApiResponse handle_request_text(std::string const& route, std::string const& text) {
    json body = json::parse(text, nullptr, false);
    if (body.is_discarded()) {
      return detail::error_response(400, "schema", "request body is not valid JSON",
                                    nullptr, nullptr);
    }
    return handle_request(route, body);
  }

}  // namespace redword
