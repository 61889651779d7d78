// Copyright 2026 The oclpath Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "http.hpp"

#include <httplib.h>

#include <fmt/format.h>

#include "oclpath/error.hpp"

namespace oclpath::detail {

HttpResponse post_json(const std::string& url, const std::string& body,
                       const std::vector<std::pair<std::string, std::string>>& headers,
                       std::chrono::seconds timeout) {
  auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw BackendError(fmt::format("malformed URL '{}'", url));
  auto path_start = url.find('/', scheme_end + 3);
  std::string origin = url.substr(0, path_start);
  std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);

  httplib::Client client(origin);
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);

  httplib::Headers hdrs;
  for (const auto& [k, v] : headers) hdrs.emplace(k, v);
  auto res = client.Post(path, hdrs, body, "application/json");
  if (!res)
    throw BackendError(fmt::format("request to {} failed: {}", url, httplib::to_string(res.error())));
  return {res->status, res->body};
}

}  // namespace oclpath::detail
