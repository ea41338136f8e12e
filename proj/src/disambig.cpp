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

#include "kwsense/disambig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "kwsense/errors.hpp"
#include "kwsense/text.hpp"

namespace kwsense {

void ContextConfig::check() const {
  if (max_context < 1) throw ConfigError("max_context must be at least 1");
  if (!(threshold >= 0.0 && threshold <= 1.0)) throw ConfigError("threshold must lie in [0, 1]");
}

std::string_view strategy_name(Strategy s) noexcept {
  switch (s) {
    case Strategy::kOverlap:
      return "overlap";
    case Strategy::kAverage:
      return "average";
    case Strategy::kSif:
      return "sif";
    case Strategy::kTopK:
      return "topk";
    case Strategy::kDocVec:
      return "docvec";
  }
  return "unknown";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  const std::string key = normalize_token(name);
  for (Strategy s : {Strategy::kOverlap, Strategy::kAverage, Strategy::kSif, Strategy::kTopK,
                     Strategy::kDocVec}) {
    if (key == strategy_name(s)) return s;
  }
  return std::nullopt;
}

void AlgoParams::check() const {
  weights.check();
  if (!(proximity_factor >= 0.0 && proximity_factor <= 1.0)) {
    throw ConfigError("proximity factor must lie in [0, 1]");
  }
  if (!(freq_a >= 0.0 && freq_a <= 1.0 && freq_b >= 0.0 && freq_b <= 1.0) ||
      std::abs(freq_a + freq_b - 1.0) > 1e-12) {
    throw ConfigError("frequency weights a, b must lie in [0, 1] and sum to 1");
  }
  if (k < 1) throw ConfigError("k must be at least 1");
}

std::vector<std::string> ActiveContext::words() const {
  std::vector<std::string> out;
  out.reserve(members.size());
  for (const ContextMember& m : members) out.push_back(m.word);
  return out;
}

ActiveContext select_active_context(const EmbeddingModel& model,
                                    std::span<const std::string> context_words,
                                    std::string_view keyword, const ContextConfig& cfg) {
  cfg.check();
  ActiveContext ca;
  ca.target = std::string(keyword);
  const std::string target = normalize_token(trim(keyword));
  std::unordered_set<std::string> seen;

  for (const std::string& raw : context_words) {
    const std::string word(trim(raw));
    const std::string key = normalize_token(word);
    if (key.empty() || key == target || cfg.stopwords.contains(key)) continue;
    if (!seen.insert(key).second) continue;
    const std::optional<double> r = rel_words(model, word, keyword);
    if (r && *r >= cfg.threshold) ca.members.push_back({word, *r});
  }
  std::stable_sort(ca.members.begin(), ca.members.end(),
                   [](const ContextMember& a, const ContextMember& b) { return a.score > b.score; });
  if (ca.members.size() > cfg.max_context) ca.members.resize(cfg.max_context);
  return ca;
}

std::vector<SenseScore> step1_base_scores(const EmbeddingModel& model, const Lexicon& lexicon,
                                          std::span<const Sense* const> senses,
                                          const ActiveContext& ca, const RelWeights& weights) {
  std::vector<SenseScore> scores;
  scores.reserve(senses.size());
  for (const Sense* s : senses) {
    double sum = 0.0;
    std::size_t n = 0;
    for (const ContextMember& m : ca.members) {
      if (auto r = try_rel_sense_word(model, lexicon, *s, m.word, weights)) {
        sum += *r;
        ++n;
      }
    }
    const double base = n ? sum / static_cast<double>(n) : 0.0;
    scores.push_back({s->id, base, StepTrace{base, 0.0, 0.0}});
  }
  return scores;
}

double overlap(const ActiveContext& ca, std::span<const std::string> description,
               const StopwordSet& stopwords) {
  std::unordered_set<std::string> context;
  for (const ContextMember& m : ca.members) context.insert(normalize_token(trim(m.word)));
  std::unordered_set<std::string> desc;
  for (const std::string& d : description) {
    std::string key = normalize_token(trim(d));
    if (!key.empty() && !stopwords.contains(key)) desc.insert(std::move(key));
  }
  if (context.empty() || desc.empty()) return 0.0;
  std::size_t common = 0;
  for (const std::string& c : context) common += desc.contains(c) ? 1 : 0;
  return static_cast<double>(common) / static_cast<double>(std::min(context.size(), desc.size()));
}

void check_strategy_inputs(const EmbeddingModel& model, const AlgoParams& params,
                           const StrategyStores& stores) {
  auto require = [&](const SenseVectorStore* store, const char* what) {
    if (store == nullptr) {
      throw ConfigError(std::string("strategy ") + std::string(strategy_name(params.strategy)) +
                        " requires a " + what + " store");
    }
    if (store->size() > 0 && store->dim() != model.dim()) {
      throw ConfigError(std::string(what) + " store dimension " + std::to_string(store->dim()) +
                        " differs from model dimension " + std::to_string(model.dim()));
    }
  };
  if (params.strategy == Strategy::kSif) require(stores.sif, "SIF");
  if (params.strategy == Strategy::kDocVec) require(stores.docvec, "doc-vector");
}

namespace {

// score + delta never exceeds 1 in exact arithmetic (score <= maxScore and
// delta <= 1 - maxScore); the clamp absorbs the last-ulp rounding.
double bounded_add(double score, double delta) { return std::min(1.0, score + delta); }

// Vectors standing in for the active context in the vector strategies.
std::vector<Vector> context_vectors(const EmbeddingModel& model, std::string_view keyword,
                                    const ActiveContext& ca) {
  std::vector<Vector> out;
  for (const ContextMember& m : ca.members) {
    if (auto v = phrase_vector(model, m.word)) out.push_back(std::move(*v));
  }
  if (out.empty()) {
    if (auto v = phrase_vector(model, keyword)) out.push_back(std::move(*v));
  }
  return out;
}

std::optional<double> average_strength(const EmbeddingModel& model, std::string_view keyword,
                                       const ActiveContext& ca,
                                       std::span<const std::string> description) {
  std::vector<std::string> words = ca.words();
  if (words.empty()) words.emplace_back(keyword);
  std::vector<std::optional<Vector>> dv;
  dv.reserve(description.size());
  for (const std::string& d : description) dv.push_back(phrase_vector(model, d));
  double sum = 0.0;
  std::size_t n = 0;
  for (const std::string& w : words) {
    const std::optional<Vector> wv = phrase_vector(model, w);
    if (!wv) continue;
    for (const auto& v : dv) {
      if (!v) continue;
      sum += angular_relatedness(*wv, *v);
      ++n;
    }
  }
  if (n == 0) return std::nullopt;
  return sum / static_cast<double>(n);
}

std::optional<double> topk_strength(const EmbeddingModel& model, std::string_view keyword,
                                    const ActiveContext& ca,
                                    std::span<const std::string> description, std::size_t k) {
  const std::vector<Vector> ctx = context_vectors(model, keyword, ca);
  if (ctx.empty()) return std::nullopt;
  const Vector ctx_centroid = centroid(std::span<const Vector>(ctx));

  // Nearness is measured against the centroid of the context plus keyword.
  std::vector<Vector> query_set = ctx;
  if (!ca.empty()) {
    if (auto kv = phrase_vector(model, keyword)) query_set.push_back(std::move(*kv));
  }
  const Vector query = centroid(std::span<const Vector>(query_set));

  struct Candidate {
    double nearness;
    std::size_t order;
    Vector v;
  };
  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i < description.size(); ++i) {
    if (auto v = phrase_vector(model, description[i])) {
      const double nearness = angular_relatedness(query, *v);
      candidates.push_back({nearness, i, std::move(*v)});
    }
  }
  if (candidates.empty()) return std::nullopt;
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.nearness > b.nearness; });
  if (candidates.size() > k) candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(k), candidates.end());

  std::vector<VectorView> top;
  top.reserve(candidates.size());
  for (const Candidate& c : candidates) top.push_back(c.v);
  return angular_relatedness(ctx_centroid, centroid(std::span<const VectorView>(top)));
}

std::optional<double> store_strength(const EmbeddingModel& model, std::string_view keyword,
                                     const ActiveContext& ca, const SenseVectorStore& store,
                                     const std::string& id) {
  const Vector* target = store.find(id);
  if (target == nullptr) return std::nullopt;
  const std::vector<Vector> ctx = context_vectors(model, keyword, ca);
  if (ctx.empty()) return std::nullopt;
  return angular_relatedness(centroid(std::span<const Vector>(ctx)), *target);
}

}  // namespace

std::optional<double> strategy_strength(const EmbeddingModel& model, const Sense& sense,
                                        std::string_view keyword, const ActiveContext& ca,
                                        const AlgoParams& params, const StrategyStores& stores,
                                        const StopwordSet& stopwords) {
  try {
    switch (params.strategy) {
      case Strategy::kOverlap:
        return overlap(ca, sense.description_terms, stopwords);
      case Strategy::kAverage:
        return average_strength(model, keyword, ca, sense.description_terms);
      case Strategy::kTopK:
        return topk_strength(model, keyword, ca, sense.description_terms, params.k);
      case Strategy::kSif:
        if (stores.sif == nullptr) return std::nullopt;
        return store_strength(model, keyword, ca, *stores.sif, sense.id);
      case Strategy::kDocVec:
        if (stores.docvec == nullptr) return std::nullopt;
        return store_strength(model, keyword, ca, *stores.docvec, sense.id);
    }
  } catch (const DomainError&) {
    // A zero centroid or store vector: no usable direction for this sense.
  }
  return std::nullopt;
}

std::vector<SenseScore> step2_rescore(const EmbeddingModel& model,
                                      std::span<const Sense* const> senses,
                                      std::vector<SenseScore> scores, std::string_view keyword,
                                      const ActiveContext& ca, const AlgoParams& params,
                                      const StrategyStores& stores,
                                      const StopwordSet& stopwords) {
  check_strategy_inputs(model, params, stores);
  if (scores.empty()) return scores;
  double max_score = scores.front().score;
  for (const SenseScore& s : scores) max_score = std::max(max_score, s.score);

  for (std::size_t i = 0; i < scores.size(); ++i) {
    const std::optional<double> strength =
        strategy_strength(model, *senses[i], keyword, ca, params, stores, stopwords);
    if (!strength) continue;
    const double updated = bounded_add(scores[i].score, (1.0 - max_score) * *strength);
    scores[i].trace.step2_delta = updated - scores[i].score;
    scores[i].score = updated;
  }
  return scores;
}

double norm_freq(const Sense& sense, double total_freq, double a, double b) {
  if (!(total_freq > 0.0)) throw DomainError("normFreq needs a positive total frequency");
  return std::sqrt(a * sense.frequency / total_freq + b);
}

std::vector<SenseScore> step3_frequency(std::vector<SenseScore> scores,
                                        std::span<const Sense* const> senses,
                                        const AlgoParams& params) {
  double total = 0.0;
  for (const Sense* s : senses) total += s->frequency;
  if (!(total > 0.0) || scores.empty()) return scores;

  double max_score = scores.front().score;
  for (const SenseScore& s : scores) max_score = std::max(max_score, s.score);
  const double gate = params.proximity_factor * max_score;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!(scores[i].score > gate)) continue;
    const double updated = bounded_add(
        scores[i].score,
        (1.0 - max_score) * norm_freq(*senses[i], total, params.freq_a, params.freq_b));
    scores[i].trace.step3_delta = updated - scores[i].score;
    scores[i].score = updated;
  }
  return scores;
}

DisambiguationResult disambiguate(const EmbeddingModel& model, const Lexicon& lexicon,
                                  std::string_view keyword,
                                  std::span<const std::string> context_words,
                                  const ContextConfig& cfg, const AlgoParams& params,
                                  const StrategyStores& stores) {
  cfg.check();
  params.check();
  check_strategy_inputs(model, params, stores);

  const std::vector<const Sense*> senses = lexicon.senses_of(keyword);
  if (senses.empty()) throw UnknownKeywordError(std::string(keyword));

  DisambiguationResult result;
  result.keyword = std::string(keyword);
  result.context = select_active_context(model, context_words, keyword, cfg);

  std::vector<SenseScore> scores =
      step1_base_scores(model, lexicon, senses, result.context, params.weights);
  scores = step2_rescore(model, senses, std::move(scores), keyword, result.context, params,
                         stores, cfg.stopwords);
  scores = step3_frequency(std::move(scores), senses, params);

  std::stable_sort(scores.begin(), scores.end(),
                   [](const SenseScore& a, const SenseScore& b) { return a.score > b.score; });
  result.ranking = std::move(scores);
  return result;
}

}  // namespace kwsense
