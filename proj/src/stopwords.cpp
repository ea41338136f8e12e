// Copyright 2026 the kwsense authors
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

#include "kwsense/stopwords.hpp"

#include <array>
#include <fstream>
#include <istream>

#include "kwsense/errors.hpp"
#include "kwsense/text.hpp"

namespace kwsense {

namespace {

// en-1
constexpr std::array<std::string_view, 159> kEnglish = {
    "a",          "about",   "above",    "after",   "again",     "against",  "all",
    "am",         "an",      "and",      "any",     "are",       "aren't",   "as",
    "at",         "be",      "because",  "been",    "before",    "being",    "below",
    "between",    "both",    "but",      "by",      "can",       "cannot",   "could",
    "couldn't",   "did",     "didn't",   "do",      "does",      "doesn't",  "doing",
    "don't",      "down",    "during",   "each",    "few",       "for",      "from",
    "further",    "had",     "hadn't",   "has",     "hasn't",    "have",     "haven't",
    "having",     "he",      "her",      "here",    "hers",      "herself",  "him",
    "himself",    "his",     "how",      "i",       "if",        "in",       "into",
    "is",         "isn't",   "it",       "it's",    "its",       "itself",   "just",
    "me",         "more",    "most",     "my",      "myself",    "no",       "nor",
    "not",        "now",     "of",       "off",     "on",        "once",     "only",
    "or",         "other",   "ought",    "our",     "ours",      "ourselves", "out",
    "over",       "own",     "same",     "shall",   "she",       "should",   "shouldn't",
    "so",         "some",    "such",     "than",    "that",      "the",      "their",
    "theirs",     "them",    "themselves", "then",  "there",     "these",    "they",
    "this",       "those",   "through",  "to",      "too",       "under",    "until",
    "up",         "upon",    "us",       "very",    "was",       "wasn't",   "we",
    "were",       "weren't", "what",     "when",    "where",     "which",    "while",
    "who",        "whom",    "why",      "will",    "with",      "won't",    "would",
    "wouldn't",   "you",     "your",     "yours",   "yourself",  "yourselves", "'s",
    "also",       "may",     "might",    "must",    "one",       "s",        "t",
    "etc",        "via",     "within",   "without", "whether"};

}  // namespace

StopwordSet::StopwordSet(const std::vector<std::string>& words) {
  for (const std::string& w : words) {
    std::string key = normalize_token(trim(w));
    if (!key.empty()) words_.insert(std::move(key));
  }
}

bool StopwordSet::contains(std::string_view word) const {
  return words_.contains(normalize_token(trim(word)));
}

const StopwordSet& default_stopwords() {
  static const StopwordSet set(std::vector<std::string>(kEnglish.begin(), kEnglish.end()));
  return set;
}

StopwordSet parse_stopwords(std::istream& in) {
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    words.emplace_back(t);
  }
  return StopwordSet(words);
}

StopwordSet load_stopwords(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open stopword file " + path.string());
  return parse_stopwords(in);
}

}  // namespace kwsense
