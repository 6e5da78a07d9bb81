#pragma once

// Binds the JSON routes to an HTTP server: POST <route> with a JSON body.

#include <string>

#include "httplib.h"

#include "api.hpp"

namespace redword {

  inline void mount_api(httplib::Server& server) {
    for (auto const& route : api_routes()) {
      server.Post(route, [route](httplib::Request const& req, httplib::Response& res) {
        auto const reply = handle_request_text(route, req.body);
        res.status       = reply.status;
        res.set_header("Access-Control-Allow-Origin", "*");
        res.set_content(reply.body.dump(), "application/json");
      });
    }
    server.Options(R"(/api/.*)", [](httplib::Request const&, httplib::Response& res) {
      res.set_header("Access-Control-Allow-Origin", "*");
      res.set_header("Access-Control-Allow-Methods", "POST, OPTIONS");
      res.set_header("Access-Control-Allow-Headers", "Content-Type");
      res.status = 204;
    });
    server.Get("/api", [](httplib::Request const&, httplib::Response& res) {
      res.set_content(json{{"routes", api_routes()}}.dump(), "application/json");
    });
  }

}  // namespace redword
