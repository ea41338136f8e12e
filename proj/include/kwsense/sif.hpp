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
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kwsense/embedding_model.hpp"
#include "kwsense/lexicon.hpp"
#include "kwsense/vector.hpp"

namespace kwsense {

/// Precomputed per-sense vectors (SIF description embeddings or document
/// vectors). All vectors share one dimension.
class SenseVectorStore {
 public:
  SenseVectorStore() = default;
  explicit SenseVectorStore(std::size_t dim) : dim_(dim) {}

  /// Throws DomainError on a dimension mismatch or a repeated id.
  void insert(std::string id, Vector v);

  const Vector* find(std::string_view id) const;
  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return ids_.size(); }
  /// Ids in insertion order.
  const std::vector<std::string>& ids() const noexcept { return ids_; }

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> ids_;
  std::unordered_map<std::string, Vector> vectors_;
};

/// JSON Lines: {"id": "<sense id>", "vector": [floats]}.
SenseVectorStore load_docvec_store(const std::filesystem::path& path);
SenseVectorStore parse_docvec_store(std::istream& in, const std::string& source_name);

struct SifConfig {
  /// Weighting constant a in a / (a + p(w)).
  double smoothing = 1e-3;
  std::optional<std::filesystem::path> word_freq_source;
  bool remove_component = true;
  /// Subtract the row mean before extracting the principal direction.
  /// Off by default: with two rows, centering makes both outputs equal.
  bool center = false;

  void check() const;
};

/// Token -> count. Lookups normalize like the embedding model does.
class WordFrequencies {
 public:
  void add(std::string token, double count);
  /// Relative frequency; 0 for unknown tokens or an empty table.
  double probability(std::string_view token) const;
  std::size_t size() const noexcept { return counts_.size(); }

 private:
  std::unordered_map<std::string, double> counts_;
  double total_ = 0.0;
};

/// Lines "token count" with positive integer counts.
WordFrequencies load_word_frequencies(const std::filesystem::path& path);
WordFrequencies parse_word_frequencies(std::istream& in, const std::string& source_name);

struct SifDescription {
  std::string id;
  std::vector<std::string> tokens;
};

struct SifResult {
  /// Input order, minus descriptions with no in-vocabulary token.
  std::vector<std::pair<std::string, Vector>> vectors;
  /// Unit principal direction that was removed, when removal ran.
  std::optional<Vector> principal_direction;
  std::vector<std::string> warnings;

  SenseVectorStore to_store() const;
};

/// Smooth-inverse-frequency embeddings of token bags. Uses `freqs` when
/// given, else the table named by cfg.word_freq_source, else uniform
/// probabilities.
SifResult sif_embeddings(const EmbeddingModel& model, std::span<const SifDescription> descriptions,
                         const SifConfig& cfg, const WordFrequencies* freqs = nullptr);

/// SIF store over the description terms of every sense in the lexicon.
SenseVectorStore build_sif_store(const EmbeddingModel& model, const Lexicon& lexicon,
                                 const SifConfig& cfg, const WordFrequencies* freqs = nullptr);

/// First principal direction (top right singular vector) of the rows,
/// optionally mean-centered, by power iteration on X^T X: all-ones start,
/// at most 100 iterations, stop once the step changes by less than 1e-9.
/// Missing when the (centered) rows are all zero.
std::optional<Vector> principal_direction(std::span<const Vector> rows, bool center = false);

}  // namespace kwsense
