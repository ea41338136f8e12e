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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kwsense/embedding_model.hpp"
#include "kwsense/lexicon.hpp"
#include "kwsense/relatedness.hpp"
#include "kwsense/sif.hpp"
#include "kwsense/stopwords.hpp"

namespace kwsense {

struct ContextConfig {
  std::size_t max_context = 4;
  /// Minimum word relatedness to the keyword for joining the active context.
  double threshold = 0.5;
  StopwordSet stopwords = default_stopwords();

  void check() const;
};

/// Step-2 rescoring strategy.
enum class Strategy { kOverlap, kAverage, kSif, kTopK, kDocVec };

std::string_view strategy_name(Strategy s) noexcept;
/// Accepts the names printed by strategy_name, case-insensitively.
std::optional<Strategy> parse_strategy(std::string_view name);

struct AlgoParams {
  RelWeights weights;
  double proximity_factor = 0.75;
  double freq_a = 0.5;
  double freq_b = 0.5;
  Strategy strategy = Strategy::kTopK;
  /// Number of nearest description terms kept by TopK.
  std::size_t k = 15;

  void check() const;
};

struct ContextMember {
  std::string word;
  double score = 0.0;
};

/// The context words most related to the target keyword, best first.
struct ActiveContext {
  std::string target;
  std::vector<ContextMember> members;

  bool empty() const noexcept { return members.empty(); }
  std::vector<std::string> words() const;
};

struct StepTrace {
  double step1 = 0.0;
  double step2_delta = 0.0;
  double step3_delta = 0.0;
};

struct SenseScore {
  std::string sense_id;
  double score = 0.0;
  StepTrace trace;
};

struct StrategyStores {
  const SenseVectorStore* sif = nullptr;
  const SenseVectorStore* docvec = nullptr;
};

struct DisambiguationResult {
  std::string keyword;
  ActiveContext context;
  /// Descending by score; ties keep lexicon order.
  std::vector<SenseScore> ranking;
};

/// Deduplicates (normalized), drops stopwords and the keyword itself,
/// keeps words whose relatedness to `keyword` is defined and reaches the
/// threshold, then keeps the best max_context (earlier position wins ties).
ActiveContext select_active_context(const EmbeddingModel& model,
                                    std::span<const std::string> context_words,
                                    std::string_view keyword, const ContextConfig& cfg);

/// Step 1: mean sense-word relatedness of each sense against the active
/// context. Scores are 0 when the context is empty. Result is parallel to
/// `senses`.
std::vector<SenseScore> step1_base_scores(const EmbeddingModel& model, const Lexicon& lexicon,
                                          std::span<const Sense* const> senses,
                                          const ActiveContext& ca, const RelWeights& weights);

/// |description ∩ context| / min(|description|, |context|) over normalized
/// forms, ignoring stopwords in the description. 0 if either side is empty.
double overlap(const ActiveContext& ca, std::span<const std::string> description,
               const StopwordSet& stopwords = default_stopwords());

/// Throws ConfigError when the strategy needs a store that is absent or
/// whose dimension differs from the model's.
void check_strategy_inputs(const EmbeddingModel& model, const AlgoParams& params,
                           const StrategyStores& stores);

/// Strategy strength in [0, 1] for one sense, or missing when its inputs
/// are unavailable. With an empty active context the vector strategies use
/// the keyword itself as context.
std::optional<double> strategy_strength(const EmbeddingModel& model, const Sense& sense,
                                        std::string_view keyword, const ActiveContext& ca,
                                        const AlgoParams& params, const StrategyStores& stores,
                                        const StopwordSet& stopwords = default_stopwords());

/// Step 2: score += (1 - maxScore) * strength, maxScore taken over the
/// incoming scores. Senses without a strength keep their score.
std::vector<SenseScore> step2_rescore(const EmbeddingModel& model,
                                      std::span<const Sense* const> senses,
                                      std::vector<SenseScore> scores, std::string_view keyword,
                                      const ActiveContext& ca, const AlgoParams& params,
                                      const StrategyStores& stores,
                                      const StopwordSet& stopwords = default_stopwords());

/// sqrt(a * frequency / total + b). Throws DomainError when total <= 0.
double norm_freq(const Sense& sense, double total_freq, double a, double b);

/// Step 3: senses scoring above proximity_factor * maxScore gain
/// (1 - maxScore) * normFreq. Skipped when every frequency is zero.
std::vector<SenseScore> step3_frequency(std::vector<SenseScore> scores,
                                        std::span<const Sense* const> senses,
                                        const AlgoParams& params);

/// Full pipeline for one keyword. Throws UnknownKeywordError when the
/// lexicon has no senses for it.
DisambiguationResult disambiguate(const EmbeddingModel& model, const Lexicon& lexicon,
                                  std::string_view keyword,
                                  std::span<const std::string> context_words,
                                  const ContextConfig& cfg, const AlgoParams& params,
                                  const StrategyStores& stores = {});

}  // namespace kwsense
