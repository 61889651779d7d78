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

#include "oclpath/nlp.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "oclpath/error.hpp"

namespace oclpath::nlp {

namespace {

using WordSet = std::unordered_set<std::string_view>;
using WordMap = std::unordered_map<std::string_view, std::string_view>;

const WordSet kDeterminers = {
    "the", "a", "an", "this", "that", "these", "those", "each", "every", "any",
    "some", "no", "all", "both", "either", "neither", "another", "such", "its",
    "his", "her", "their", "our", "my", "your", "whose", "which", "what", "whatever",
    "several", "many", "few", "much", "other", "'s"};

const WordSet kPrepositions = {
    "of", "in", "on", "at", "by", "for", "with", "without", "from", "to", "into",
    "onto", "over", "under", "between", "among", "through", "during", "before", "after",
    "above", "below", "within", "per", "than", "about", "against", "along", "across",
    "around", "behind", "beyond", "upon", "via", "towards", "toward", "until", "since",
    "except", "like", "up", "down", "out", "off"};

const WordSet kModals = {"may", "might", "must", "shall", "should", "will", "would",
                         "can", "could", "cannot"};

const WordSet kOtherClosed = {
    // pronouns
    "it", "he", "she", "they", "we", "i", "you", "him", "them", "us", "me", "itself",
    "himself", "herself", "themselves", "who", "whom", "one", "none", "nobody", "nothing",
    "someone", "something", "anyone", "anything", "everyone", "everything",
    // conjunctions
    "and", "or", "but", "nor", "if", "then", "else", "when", "whenever", "while",
    "whereas", "unless", "because", "although", "though", "so", "whether", "as", "where",
    "also", "otherwise", "hence", "thus",
    // auxiliaries
    "is", "are", "was", "were", "be", "been", "being", "am", "do", "does", "did", "done",
    // adverbs and particles
    "not", "n't", "never", "always", "only", "least", "most", "more", "less", "very",
    "too", "exactly", "just", "still", "even", "already", "often", "there", "here",
    "once", "twice", "fewer", "again", "yet", "ever", "how", "why", "now", "either",
    "respectively", "together", "therefore", "strictly"};

const WordSet kAdjectives = {
    "maximum", "minimum", "valid", "invalid", "total", "same", "different", "new", "old",
    "young", "current", "active", "inactive", "empty", "full", "male", "female",
    "positive", "negative", "unique", "first", "last", "next", "previous", "high",
    "low", "higher", "lower", "large", "small", "long", "short", "available", "special",
    "free", "late", "early", "single", "equal", "greater", "smaller", "larger", "older",
    "younger", "certain", "own", "possible", "open", "closed", "initial", "final",
    "main", "average", "correct", "wrong", "true", "false", "distinct", "additional",
    "individual", "personal", "public", "private", "regular", "annual", "monthly",
    "daily", "weekly", "legal", "adult", "senior", "junior", "primary", "secondary",
    "local", "international", "national", "domestic", "whole", "entire", "non",
    "zero", "married"};

// Base forms. Ambiguous noun/verb words ("book", "use") are resolved by context.
const WordSet kVerbs = {
    "exceed", "have", "own", "contain", "include", "hold", "belong", "earn", "burn",
    "enroll", "register", "receive", "give", "get", "make", "take", "pay", "buy", "sell",
    "book", "cancel", "assign", "allocate", "depart", "arrive", "fly", "operate", "manage",
    "supervise", "employ", "work", "live", "need", "require", "exist", "equal", "match",
    "differ", "refer", "relate", "use", "provide", "offer", "deliver", "serve", "issue",
    "expire", "start", "end", "begin", "finish", "create", "delete", "add", "remove",
    "increase", "decrease", "reach", "allow", "permit", "ensure", "keep", "become",
    "remain", "apply", "follow", "occur", "happen", "define", "denote", "indicate",
    "represent", "correspond", "consist", "satisfy", "lie", "fall", "participate",
    "join", "leave", "visit", "teach", "attend", "borrow", "lend", "return", "rent",
    "order", "ship", "store", "list", "show", "see", "know", "say", "go", "come", "run",
    "drive", "write", "read", "check", "verify", "contribute", "precede",
    "succeed", "lead", "head", "supply", "purchase", "transfer", "deposit", "withdraw",
    "open", "close", "schedule", "reserve", "admit", "treat", "prescribe", "enrol",
    "sign", "accept", "reject", "approve", "submit", "grade", "pass", "fail", "marry",
    "divorce", "report", "lose", "win", "play", "score", "cost", "charge", "spend"};

const WordMap kIrregularVerbs = {
    {"has", "have"},   {"had", "have"},      {"having", "have"},   {"made", "make"},
    {"flew", "fly"},   {"flown", "fly"},     {"gave", "give"},     {"given", "give"},
    {"held", "hold"},  {"took", "take"},     {"taken", "take"},    {"paid", "pay"},
    {"bought", "buy"}, {"sold", "sell"},     {"got", "get"},       {"gotten", "get"},
    {"kept", "keep"},  {"became", "become"}, {"began", "begin"},   {"begun", "begin"},
    {"fell", "fall"},  {"fallen", "fall"},   {"lay", "lie"},       {"lain", "lie"},
    {"left", "leave"}, {"taught", "teach"},  {"lent", "lend"},     {"saw", "see"},
    {"seen", "see"},   {"knew", "know"},     {"known", "know"},    {"said", "say"},
    {"went", "go"},    {"gone", "go"},       {"came", "come"},     {"ran", "run"},
    {"drove", "drive"},{"driven", "drive"},  {"wrote", "write"},   {"written", "write"},
    {"led", "lead"},   {"lost", "lose"},     {"won", "win"},       {"spent", "spend"},
    {"burnt", "burn"}, {"shown", "show"},    {"withdrew", "withdraw"},
    {"withdrawn", "withdraw"}};

const WordMap kIrregularNouns = {
    {"people", "person"},   {"men", "man"},         {"women", "woman"},
    {"children", "child"},  {"feet", "foot"},       {"teeth", "tooth"},
    {"mice", "mouse"},      {"geese", "goose"},     {"criteria", "criterion"},
    {"analyses", "analysis"}, {"indices", "index"}, {"series", "series"},
    {"species", "species"}, {"news", "news"},       {"knives", "knife"},
    {"wives", "wife"},      {"lives", "life"},      {"halves", "half"},
    {"shelves", "shelf"},   {"leaves", "leaf"},     {"movies", "movie"},
    {"employees", "employee"}, {"fees", "fee"},     {"theses", "thesis"},
    {"phenomena", "phenomenon"}, {"aircraft", "aircraft"}, {"data", "data"},
    {"staff", "staff"},     {"salaries", "salary"}, {"cookies", "cookie"}};

const WordSet kBeForms = {"is", "are", "was", "were", "be", "been", "being", "am"};

bool is_word_byte(unsigned char c) {
  return std::isalnum(c) || c == '_' || c >= 0x80;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

// Length in bytes of a typographic quote starting at `i`, or 0.
std::size_t typographic_quote(std::string_view text, std::size_t i) {
  if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
      static_cast<unsigned char>(text[i + 1]) == 0x80) {
    unsigned char c = static_cast<unsigned char>(text[i + 2]);
    if (c == 0x98 || c == 0x99 || c == 0x9C || c == 0x9D) return 3;
  }
  return 0;
}

bool is_apostrophe(std::string_view text, std::size_t i, std::size_t* len) {
  if (text[i] == '\'') {
    *len = 1;
    return true;
  }
  if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
      static_cast<unsigned char>(text[i + 1]) == 0x80 &&
      static_cast<unsigned char>(text[i + 2]) == 0x99) {
    *len = 3;
    return true;
  }
  return false;
}

std::string noun_lemma(const std::string& w) {
  if (auto it = kIrregularNouns.find(w); it != kIrregularNouns.end()) return std::string(it->second);
  if (w.size() <= 3) return w;
  if (ends_with(w, "ss") || ends_with(w, "us") || ends_with(w, "is")) return w;
  if (ends_with(w, "ies") && w.size() > 4) return w.substr(0, w.size() - 3) + "y";
  for (std::string_view suffix : {"sses", "xes", "ches", "shes", "zzes"}) {
    if (ends_with(w, suffix)) return w.substr(0, w.size() - 2);
  }
  if (w.back() == 's') return w.substr(0, w.size() - 1);
  return w;
}

// Base form of a verb form, or empty when the word is not a known verb.
std::string verb_base(const std::string& w) {
  if (auto it = kIrregularVerbs.find(w); it != kIrregularVerbs.end()) return std::string(it->second);
  if (kVerbs.count(w)) return w;
  auto known = [](const std::string& s) { return !s.empty() && kVerbs.count(s) > 0; };
  auto from_stem = [&](std::string stem) -> std::string {
    if (known(stem)) return stem;
    if (stem.size() >= 2 && stem[stem.size() - 1] == stem[stem.size() - 2] &&
        !is_vowel(stem.back()) && known(stem.substr(0, stem.size() - 1)))
      return stem.substr(0, stem.size() - 1);
    if (known(stem + "e")) return stem + "e";
    return {};
  };
  if (ends_with(w, "ies") && w.size() > 4) {
    std::string base = w.substr(0, w.size() - 3) + "y";
    if (known(base)) return base;
  }
  if (ends_with(w, "ied") && w.size() > 4) {
    std::string base = w.substr(0, w.size() - 3) + "y";
    if (known(base)) return base;
  }
  if (ends_with(w, "ing") && w.size() > 4) {
    if (auto b = from_stem(w.substr(0, w.size() - 3)); !b.empty()) return b;
  }
  if (ends_with(w, "ed") && w.size() > 3) {
    if (auto b = from_stem(w.substr(0, w.size() - 2)); !b.empty()) return b;
    if (known(w.substr(0, w.size() - 1))) return w.substr(0, w.size() - 1);
  }
  if (ends_with(w, "es") && w.size() > 3 && known(w.substr(0, w.size() - 2)))
    return w.substr(0, w.size() - 2);
  if (ends_with(w, "s") && w.size() > 2 && known(w.substr(0, w.size() - 1)))
    return w.substr(0, w.size() - 1);
  return {};
}

bool adjective_by_suffix(const std::string& w) {
  if (w.size() < 6) return false;
  for (std::string_view suffix : {"able", "ible", "ous", "ful", "less", "ive"}) {
    if (ends_with(w, suffix)) return true;
  }
  return false;
}

bool has_inner_upper(std::string_view surface) {
  return std::any_of(surface.begin() + (surface.empty() ? 0 : 1), surface.end(),
                     [](unsigned char c) { return std::isupper(c); });
}

bool is_punctuation(std::string_view s) {
  return !s.empty() && !is_word_byte(static_cast<unsigned char>(s.front())) && s != "'s" &&
         s != "n't";
}

}  // namespace

std::string_view to_string(Pos pos) {
  switch (pos) {
    case Pos::Noun: return "NOUN";
    case Pos::Adj: return "ADJ";
    case Pos::Verb: return "VERB";
    case Pos::Other: return "OTHER";
  }
  return "OTHER";
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (std::size_t q = typographic_quote(text, i)) {
      out.emplace_back(text.substr(i, q));
      i += q;
      continue;
    }
    if (!is_word_byte(c)) {
      out.emplace_back(1, static_cast<char>(c));
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(c)) {
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                                 ((text[i] == '.' || text[i] == ',') && i + 1 < text.size() &&
                                  std::isdigit(static_cast<unsigned char>(text[i + 1])))))
        ++i;
      out.emplace_back(text.substr(start, i - start));
      continue;
    }
    while (i < text.size() && is_word_byte(static_cast<unsigned char>(text[i])) &&
           !typographic_quote(text, i))
      ++i;
    std::string word(text.substr(start, i - start));
    std::size_t alen = 0;
    if (i < text.size() && is_apostrophe(text, i, &alen)) {
      std::size_t after = i + alen;
      auto letter_at = [&](std::size_t k) {
        return k < text.size() && std::isalpha(static_cast<unsigned char>(text[k]));
      };
      if (after < text.size() && (text[after] == 's' || text[after] == 'S') && !letter_at(after + 1)) {
        out.push_back(std::move(word));
        out.emplace_back("'s");
        i = after + 1;
        continue;
      }
      if (word.size() > 1 && (word.back() == 'n' || word.back() == 'N') && after < text.size() &&
          (text[after] == 't' || text[after] == 'T') && !letter_at(after + 1)) {
        word.pop_back();
        out.push_back(std::move(word));
        out.emplace_back("n't");
        i = after + 1;
        continue;
      }
    }
    out.push_back(std::move(word));
  }
  return out;
}

std::string lemmatize(std::string_view word, Pos pos) {
  std::string w = lower(word);
  switch (pos) {
    case Pos::Noun: return noun_lemma(w);
    case Pos::Verb: {
      if (kBeForms.count(w)) return "be";
      std::string base = verb_base(w);
      return base.empty() ? w : base;
    }
    case Pos::Adj:
    case Pos::Other:
      if (kBeForms.count(w)) return "be";
      return w;
  }
  return w;
}

std::string normalize_term(std::string_view name) { return noun_lemma(lower(name)); }

std::vector<Token> LexiconTagger::tag(std::span<const std::string> words) const {
  std::vector<Token> out;
  out.reserve(words.size());
  bool sentence_start = true;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::string& surface = words[i];
    std::string w = lower(surface);
    Token tok{surface, w, Pos::Other};

    if (is_punctuation(surface) || std::isdigit(static_cast<unsigned char>(surface.front()))) {
      tok.pos = Pos::Other;
    } else if (kDeterminers.count(w) || kPrepositions.count(w) || kModals.count(w) ||
               kOtherClosed.count(w)) {
      tok.pos = Pos::Other;
      tok.lemma = lemmatize(w, Pos::Other);
    } else if (has_inner_upper(surface)) {
      // CamelCase identifiers and acronyms name model elements.
      tok.pos = Pos::Noun;
      tok.lemma = noun_lemma(w);
    } else {
      const Token* prev = out.empty() ? nullptr : &out.back();
      // Skip a negation when looking for a governing modal ("may not exceed").
      const Token* governor = prev;
      if (governor && (governor->lemma == "not" || governor->lemma == "n't") && out.size() >= 2)
        governor = &out[out.size() - 2];
      bool after_modal = governor && (kModals.count(governor->lemma) || governor->lemma == "to" ||
                                      governor->lemma == "do");
      bool nominal = prev && (kDeterminers.count(prev->lemma) || prev->pos == Pos::Adj ||
                              (kPrepositions.count(prev->lemma) && prev->lemma != "to") ||
                              std::isdigit(static_cast<unsigned char>(prev->surface.front())));
      bool capitalized = std::isupper(static_cast<unsigned char>(surface.front())) && !sentence_start;

      bool verb = !verb_base(w).empty();
      bool adj = kAdjectives.count(w) || adjective_by_suffix(w);

      if (verb && after_modal) {
        tok.pos = Pos::Verb;
      } else if (adj && !capitalized) {
        tok.pos = Pos::Adj;
      } else if (verb && !nominal && !capitalized) {
        tok.pos = Pos::Verb;
      } else {
        tok.pos = Pos::Noun;
      }
      tok.lemma = lemmatize(w, tok.pos);
    }
    if (tok.lemma.empty()) tok.lemma = w;
    sentence_start = surface == "." || surface == "!" || surface == "?" || surface == ";";
    out.push_back(std::move(tok));
  }
  return out;
}

const Tagger& default_tagger() {
  static const LexiconTagger tagger;
  return tagger;
}

std::vector<Token> preprocess(std::string_view specText, const Tagger& tagger) {
  if (specText.find_first_not_of(" \t\r\n") == std::string_view::npos)
    throw DataError("specification text is empty");
  std::vector<std::string> words = tokenize(specText);
  return tagger.tag(words);
}

UmlElementSet extract_uml_elements(std::span<const Token> tokens) {
  UmlElementSet out;
  for (const Token& t : tokens) {
    if ((t.pos == Pos::Noun || t.pos == Pos::Adj) && !t.lemma.empty()) out.insert(lower(t.lemma));
  }
  return out;
}

}  // namespace oclpath::nlp
