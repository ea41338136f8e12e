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

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kwsense/disambig.hpp"
#include "kwsense/embedding_model.hpp"
#include "kwsense/lexicon.hpp"

namespace kwsense {

// --- Word-pair correlation ---------------------------------------------

struct WordPair {
  std::string first;
  std::string second;
  double human = 0.0;
};

struct WordPairDataset {
  std::vector<WordPair> pairs;
};

/// "word1<TAB>word2<TAB>score" lines. Lines without tabs are split on
/// whitespace. A first line whose score is not numeric is taken as a header.
WordPairDataset load_word_pairs(const std::filesystem::path& path);
WordPairDataset parse_word_pairs(std::istream& in, const std::string& source_name);

/// 1-based ranks, ties receiving the average of the positions they span.
std::vector<double> average_ranks(std::span<const double> values);

/// Pearson correlation. Throws DomainError when either side has zero
/// variance or the lengths differ or are below 2.
double pearson(std::span<const double> xs, std::span<const double> ys);

/// Spearman rank correlation. Tie-free inputs use 1 - 6 sum(d^2) / (n (n^2 - 1))
/// with an exact integer sum; tied inputs use Pearson over average ranks.
/// Throws DomainError("undefined correlation") on zero rank variance.
double spearman(std::span<const double> xs, std::span<const double> ys);

struct PairEvalResult {
  double rho = 0.0;
  std::size_t covered = 0;
  std::size_t skipped = 0;
};

/// Throws DomainError when fewer than two pairs are covered by the model.
PairEvalResult eval_wordpairs(const EmbeddingModel& model, const WordPairDataset& dataset);

// --- WSD scoring --------------------------------------------------------

struct WsdTarget {
  std::size_t position = 0;
  std::string keyword;
  std::vector<std::string> gold;
};

struct WsdItem {
  std::string item_id;
  std::vector<std::string> tokens;
  std::vector<WsdTarget> targets;
};

struct WsdCorpus {
  std::vector<WsdItem> items;

  std::size_t target_count() const noexcept;
};

/// JSON Lines: {"item_id", "tokens": [...], "targets": [{"position",
/// "keyword", "gold": [...]}]}. "keyword" defaults to the token at
/// "position".
WsdCorpus load_wsd_corpus(const std::filesystem::path& path);
WsdCorpus parse_wsd_corpus(std::istream& in, const std::string& source_name);

enum class TargetStatus { kAnswered, kUnknownKeyword, kFailed };

std::string_view target_status_name(TargetStatus s) noexcept;

struct WsdRecord {
  std::string item_id;
  std::size_t position = 0;
  std::string keyword;
  std::vector<std::string> gold;
  std::optional<std::string> predicted;
  double score = 0.0;
  bool correct = false;
  TargetStatus status = TargetStatus::kUnknownKeyword;
  std::string message;
};

struct WsdMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

WsdMetrics compute_metrics(std::size_t attempted, std::size_t correct, std::size_t total);

struct WsdReport {
  std::size_t attempted = 0;
  std::size_t correct = 0;
  std::size_t total = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::vector<WsdRecord> records;
  /// "item_id:position:gold_id" for gold ids absent from the lexicon.
  std::vector<std::string> unresolved_gold;
  std::vector<std::string> warnings;
};

/// Each target is disambiguated with every other token of its item as
/// context. Unknown keywords count toward the total but are not attempted.
/// `jobs` > 1 spreads targets over worker threads; output order and
/// values do not depend on it.
WsdReport eval_wsd(const EmbeddingModel& model, const Lexicon& lexicon, const WsdCorpus& corpus,
                   const ContextConfig& cfg, const AlgoParams& params,
                   const StrategyStores& stores = {}, std::size_t jobs = 1);

}  // namespace kwsense
