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

#ifndef OCLPATH_NLP_HPP
#define OCLPATH_NLP_HPP

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace oclpath::nlp {

enum class Pos { Noun, Adj, Verb, Other };

std::string_view to_string(Pos pos);

struct Token {
  std::string surface;
  std::string lemma;  // lowercase, never empty
  Pos pos = Pos::Other;

  friend bool operator==(const Token&, const Token&) = default;
};

// Lowercased noun/adjective lemmas extracted from a specification.
using UmlElementSet = std::set<std::string>;

// Splits text into word, number and punctuation pieces. Possessive "'s" is
// split off as its own piece; typographic quotes count as punctuation.
std::vector<std::string> tokenize(std::string_view text);

// Assigns part of speech and lemma to each word. Implementations must be
// deterministic and thread-safe.
class Tagger {
 public:
  virtual ~Tagger() = default;
  virtual std::vector<Token> tag(std::span<const std::string> words) const = 0;
};

// Closed-class word lists plus suffix rules. Unknown words are nouns.
class LexiconTagger final : public Tagger {
 public:
  std::vector<Token> tag(std::span<const std::string> words) const override;
};

const Tagger& default_tagger();

// Lemma of `word` under the given part of speech, lowercased.
std::string lemmatize(std::string_view word, Pos pos);

// Normalization applied to UML names before matching: lowercase + noun lemma.
// "maxNrPassengers" -> "maxnrpassenger", "flights" -> "flight".
std::string normalize_term(std::string_view name);

// Throws DataError on empty or whitespace-only input.
std::vector<Token> preprocess(std::string_view specText, const Tagger& tagger = default_tagger());

UmlElementSet extract_uml_elements(std::span<const Token> tokens);

}  // namespace oclpath::nlp

#endif  // OCLPATH_NLP_HPP
