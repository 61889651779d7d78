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

#ifndef OCLPATH_SRC_HTTP_HPP
#define OCLPATH_SRC_HTTP_HPP

#include <chrono>
#include <string>
#include <utility>
#include <vector>

namespace oclpath::detail {

struct HttpResponse {
  int status = 0;
  std::string body;
};

// POSTs a JSON body to an absolute http(s) URL. Throws BackendError when no
// response was received (connection refused, timeout, TLS failure).
HttpResponse post_json(const std::string& url, const std::string& body,
                       const std::vector<std::pair<std::string, std::string>>& headers,
                       std::chrono::seconds timeout);

}  // namespace oclpath::detail

#endif  // OCLPATH_SRC_HTTP_HPP
