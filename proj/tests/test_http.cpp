#include <gtest/gtest.h>

#include <thread>

#include "redword/server.hpp"

using namespace redword;

TEST(Http, ServesJsonRoutes) {
  httplib::Server server;
  mount_api(server);
  int const port = server.bind_to_any_port("127.0.0.1");
  ASSERT_GT(port, 0);
  std::thread thread([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  httplib::Client client("127.0.0.1", port);
  auto res = client.Post("/api/eg", R"({"letters":[4,2,1,2,3,2,4]})", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  auto const body = json::parse(res->body);
  EXPECT_EQ(body["q"]["rows"], json::parse("[[1,3,7],[2,6],[4],[5]]"));

  auto bad = client.Post("/api/little", R"({"letters":[1,1]})", "application/json");
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->status, 400);
  EXPECT_EQ(json::parse(bad->body)["error"]["code"], "not_reduced");

  auto garbage = client.Post("/api/eg", "nonsense", "application/json");
  ASSERT_TRUE(garbage);
  EXPECT_EQ(garbage->status, 400);

  auto index = client.Get("/api");
  ASSERT_TRUE(index);
  EXPECT_EQ(json::parse(index->body)["routes"].size(), api_routes().size());

  server.stop();
  thread.join();
}
