#pragma once

// cpp-httplib adapter for Api.

#include <filesystem>
#include <string>

#include <httplib.h>

#include "wayfinder/api.hpp"

namespace wayfinder {

/// Routes every request on `server` through `api`. When `static_dir` is set
/// it is mounted at /ui for the browser workbench.
inline void attach_api(httplib::Server& server, Api& api,
                       const std::filesystem::path& static_dir = {}) {
  auto forward = [&api](const httplib::Request& req, httplib::Response& res) {
    ApiResponse out = api.handle({req.method, req.path, req.body});
    res.status = out.status;
    res.set_content(out.text(), "application/json");
  };
  server.Get(".*", forward);
  server.Post(".*", forward);
  if (!static_dir.empty()) server.set_mount_point("/ui", static_dir.string());
}

}  // namespace wayfinder
