#include <gtest/gtest.h>

#include "redword/api.hpp"

using namespace redword;

namespace {
  ApiResponse post(std::string const& route, char const* body) {
    return handle_request(route, json::parse(body));
  }
}  // namespace

TEST(Api, EgFigure) {
  auto const r = post("/api/eg", R"({"letters":[4,2,1,2,3,2,4]})");
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.body["p"]["rows"], json::parse("[[1,2,4],[2,3],[3],[4]]"));
  EXPECT_EQ(r.body["q"]["rows"], json::parse("[[1,3,7],[2,6],[4],[5]]"));
  EXPECT_EQ(r.body["steps"].size(), 7u);
  EXPECT_EQ(r.body["input"]["letters"], json::parse("[4,2,1,2,3,2,4]"));
}

TEST(Api, EgEmpty) {
  auto const r = post("/api/eg", R"({"letters":[]})");
  ASSERT_EQ(r.status, 200);
  EXPECT_TRUE(r.body["p"]["rows"].empty());
  EXPECT_TRUE(r.body["q"]["rows"].empty());
}

TEST(Api, BumpShift) {
  auto const r = post("/api/bump", R"({"letters":[1,2,1],"start":1})");
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.body["trace"]["steps"].size(), 1u);
  EXPECT_EQ(r.body["trace"]["steps"][0]["shift"], true);
  EXPECT_EQ(r.body["trace"]["result"]["letters"], json::parse("[1,3,2]"));
}

TEST(Api, BumpByValuePair) {
  auto const r = post("/api/bump", R"({"letters":[1,2,1],"value_pair":[2,1]})");
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.body["trace"]["start"], 1);
  auto const miss = post("/api/bump", R"({"letters":[1],"value_pair":[1,3]})");
  EXPECT_EQ(miss.status, 404);
  EXPECT_EQ(miss.body["error"]["code"], "not_found");
}

TEST(Api, NotReduced) {
  for (char const* route : {"/api/little", "/api/bump", "/api/tab", "/api/normalize"}) {
    auto const r = post(route, R"({"letters":[1,1],"start":1})");
    EXPECT_EQ(r.status, 400) << route;
    EXPECT_EQ(r.body["error"]["code"], "not_reduced") << route;
    EXPECT_TRUE(r.body["error"].contains("message"));
    EXPECT_TRUE(r.body["error"].contains("at"));
  }
}

TEST(Api, SchemaErrors) {
  EXPECT_EQ(post("/api/eg", R"({})").body["error"]["code"], "schema");
  EXPECT_EQ(post("/api/eg", R"({"letters":"1 2"})").body["error"]["code"], "schema");
  EXPECT_EQ(post("/api/eg", R"({"letters":[1.5]})").body["error"]["code"], "schema");
  EXPECT_EQ(post("/api/eg", R"({"letters":[0]})").body["error"]["code"], "domain_error");
  EXPECT_EQ(post("/api/eg", R"({"letters":[100000]})").body["error"]["code"], "schema");
  EXPECT_EQ(post("/api/bump", R"({"letters":[1,2]})").body["error"]["code"], "schema");
  EXPECT_EQ(post("/api/bump", R"({"letters":[1,2],"start":-1})").status, 400);
  EXPECT_EQ(handle_request("/api/eg", json::array()).status, 400);
  EXPECT_EQ(handle_request_text("/api/eg", "{not json").status, 400);
  auto const unknown = post("/api/nope", "{}");
  EXPECT_EQ(unknown.status, 404);
  EXPECT_EQ(unknown.body["error"]["code"], "unknown_route");
}

TEST(Api, Parse) {
  auto const ok = post("/api/parse", R"({"text":"4 2 1 2 3 2 4"})");
  ASSERT_EQ(ok.status, 200);
  EXPECT_EQ(ok.body["word"]["permutation"], json::parse("[3,5,2,4,1]"));
  EXPECT_EQ(ok.body["word"]["reduced"], true);
  auto const bad = post("/api/parse", R"({"text":"1 0 2"})");
  EXPECT_EQ(bad.status, 400);
  EXPECT_EQ(bad.body["error"]["code"], "parse_error");
  EXPECT_EQ(bad.body["error"]["at"], 3);
  EXPECT_EQ(bad.body["input"]["text"], "1 0 2");
  auto const perm = post("/api/parse", R"({"text":"2 3 1","kind":"permutation"})");
  EXPECT_EQ(perm.body["permutation"], json::parse("[2,3,1]"));
  auto const tab = post("/api/parse", R"({"text":"1 2\n3","kind":"tableau"})");
  EXPECT_EQ(tab.body["tableau"]["rows"], json::parse("[[1,2],[3]]"));
  EXPECT_EQ(post("/api/parse", R"({"text":"1","kind":"shape"})").status, 400);
}

TEST(Api, LittleTraceMatchesLibrary) {
  auto const r = post("/api/little", R"({"letters":[4,2,1,2,3,2,4]})");
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.body["tableau"]["rows"], json::parse("[[1,3,7],[2,6],[4],[5]]"));
  EXPECT_EQ(r.body["traces"], json(ls(Word{4, 2, 1, 2, 3, 2, 4}).traces));
}

TEST(Api, InverseBumpAndInvalidStart) {
  auto const r = post("/api/inverse_bump", R"({"letters":[1],"start":1})");
  EXPECT_EQ(r.body["trace"]["result"]["letters"], json::parse("[2]"));
  auto const bad = post("/api/bump", R"({"letters":[3,4,3],"start":2})");
  EXPECT_EQ(bad.status, 400);
  EXPECT_EQ(bad.body["error"]["code"], "invalid_bump_start");
}

TEST(Api, CkMovesAndApply) {
  auto const m = post("/api/ck/moves", R"({"letters":[1,3,2]})");
  ASSERT_EQ(m.body["moves"].size(), 1u);
  EXPECT_EQ(m.body["moves"][0]["kind"], "type1");
  EXPECT_EQ(m.body["moves"][0]["result"]["letters"], json::parse("[3,1,2]"));
  auto const a = post("/api/ck/apply",
                      R"({"letters":[1,3,2],"pos":1,"kind":"type1","direction":"forward"})");
  ASSERT_EQ(a.status, 200);
  EXPECT_EQ(a.body["result"]["letters"], json::parse("[3,1,2]"));
  auto const bad = post("/api/ck/apply", R"({"letters":[1,3,2],"pos":1,"kind":"type3"})");
  EXPECT_EQ(bad.status, 400);
  EXPECT_EQ(post("/api/ck/moves", R"({"letters":[1,3],"pos":1})").status, 400);
}

TEST(Api, TabNormalizeEnumerateRender) {
  auto const t = post("/api/tab", R"({"letters":[6,4,1,2,5,3,4]})");
  EXPECT_EQ(t.body["grassmannian"]["row_labels"], json::parse("[7,5,3,2]"));
  EXPECT_EQ(post("/api/tab", R"({"letters":[1,2,1]})").status, 400);
  auto const n = post("/api/normalize", R"({"letters":[2]})");
  EXPECT_EQ(n.body["word"]["letters"], json::parse("[1]"));
  auto const e = post("/api/enumerate", R"({"perm":[3,2,1]})");
  EXPECT_EQ(e.body["words"], json::parse("[[1,2,1],[2,1,2]]"));
  auto const lim = post("/api/enumerate", R"({"perm":[4,3,2,1],"limit":5})");
  EXPECT_EQ(lim.body["count"], 5);
  EXPECT_EQ(lim.body["truncated"], true);
  EXPECT_EQ(post("/api/enumerate", R"({"perm":[1,1]})").status, 400);
  auto const s = post("/api/render/svg", R"({"letters":[1,2,1],"highlight":[2]})");
  EXPECT_NE(s.body["svg"].get<std::string>().find("crossing-2\" class=\"crossing highlight"),
            std::string::npos);
  EXPECT_EQ(post("/api/render/svg", R"({"letters":[1],"highlight":[4]})").status, 400);
}

// Statelessness: replaying a request yields the same response.
TEST(Api, PureFunctionOfBody) {
  for (auto const& route : api_routes()) {
    json const body{{"letters", {2, 1, 2}}, {"start", 1}, {"perm", {2, 1}}, {"text", "2 1"},
                    {"pos", 1}, {"kind", "type3"}, {"direction", "backward"}};
    EXPECT_EQ(handle_request(route, body).body, handle_request(route, body).body) << route;
  }
}

// Arbitrary small bodies never escape as exceptions.
TEST(Api, NeverThrows) {
  std::vector<json> const bodies{
      json::object(),
      json{{"letters", nullptr}},
      json{{"letters", {1, 2}}, {"start", "x"}},
      json{{"letters", {1, 2}}, {"value_pair", {1}}},
      json{{"letters", {1, 2}}, {"pos", 9}, {"kind", 1}},
      json{{"perm", {3, 2, 1}}, {"limit", 1e20}},
      json{{"text", 5}},
      json{{"letters", {2, 1, 2}}, {"highlight", {0}}},
  };
  for (auto const& route : api_routes()) {
    for (auto const& b : bodies) {
      ApiResponse r;
      EXPECT_NO_THROW(r = handle_request(route, b)) << route << ' ' << b.dump();
      EXPECT_TRUE(r.status == 200 || r.body.contains("error")) << route << ' ' << b.dump();
    }
  }
}
