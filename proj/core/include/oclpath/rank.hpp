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

#ifndef OCLPATH_RANK_HPP
#define OCLPATH_RANK_HPP

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "oclpath/embedding.hpp"
#include "oclpath/model.hpp"
#include "oclpath/nlp.hpp"
#include "oclpath/pathgen.hpp"

namespace oclpath {

enum class Metric { Jaccard, Cosine };

std::string_view to_string(Metric metric);
Metric parse_metric(std::string_view text);

using PropertySet = std::set<std::string>;

struct PathPropertySet {
  SimplePath path;
  PropertySet properties;
};

// Normalized names of the path's classes, their attributes and operations,
// and for each hop (a, b) the roles on b's end only.
PathPropertySet property_set(const UmlModel& model, const SimplePath& path);

// |E ∩ P| / |E ∪ P|, and 0 for two empty sets.
double jaccard(const nlp::UmlElementSet& elements, const PropertySet& properties);

// Mean pairwise cosine over E × P. Returns 0 (and logs a warning) when either
// set is empty.
double cosine_score(const nlp::UmlElementSet& elements, const PropertySet& properties,
                    const Embedder& embedder);

struct RankedPath {
  SimplePath path;
  PropertySet properties;
  double score = 0;
  Metric metric = Metric::Jaccard;
  std::size_t rank = 0;
};

struct RankOptions {
  Metric metric = Metric::Jaccard;
  std::size_t k = 10;
  const Embedder* embedder = nullptr;  // required for cosine
  unsigned threads = 1;
};

// Scores every path, sorts by score descending (ties in path_order) and
// keeps the first k. Throws DataError on an empty path set or k == 0.
std::vector<RankedPath> rank_paths(const UmlModel& model, const std::vector<SimplePath>& paths,
                                   const nlp::UmlElementSet& elements, const RankOptions& options);

}  // namespace oclpath

#endif  // OCLPATH_RANK_HPP
