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

#include <optional>
#include <string_view>

#include "kwsense/embedding_model.hpp"
#include "kwsense/lexicon.hpp"
#include "kwsense/vector.hpp"

namespace kwsense {

/// Level weights of the two-level relatedness. w0 + w1 == 1, both >= 0.
struct RelWeights {
  double w0 = 0.5;
  double w1 = 0.5;

  /// Throws ConfigError when w0 is outside [0, 1].
  static RelWeights from_w0(double w0);
  /// Throws ConfigError when the invariant does not hold.
  void check() const;
};

/// Cosine similarity clamped to [-1, 1]. Throws DomainError on a zero
/// vector or mismatched dimensions.
double cosine(VectorView a, VectorView b);

/// 1 - angle(a, b) / pi, in [0, 1]: 1 for equal directions, 0.5 for
/// orthogonal ones, 0 for opposite ones. The angle is evaluated with the
/// half-chord formula, so equal inputs give exactly 1. Throws DomainError
/// for a zero vector or mismatched dimensions.
double angular_relatedness(VectorView a, VectorView b);

/// Word-word relatedness over phrase vectors; missing if either side is
/// entirely out of vocabulary.
std::optional<double> rel_words(const EmbeddingModel& model, std::string_view x,
                                std::string_view y);

// Sense-sense relatedness. Synonym or context pairs whose relatedness is
// missing are skipped and the denominator shrinks accordingly.

/// Mean rel_words over Syn(a) x Syn(b). Throws DomainError on an empty
/// synonym set.
std::optional<double> rel0_senses(const EmbeddingModel& model, const Sense& a, const Sense& b);

/// Mean rel0 over OC(a) x OC(b). OC members that reference a sense use its
/// synonyms; labels (and unresolved ids) act as single-synonym senses.
/// Missing when either context is empty.
std::optional<double> rel1_senses(const EmbeddingModel& model, const Lexicon& lexicon,
                                  const Sense& a, const Sense& b);

/// w0 * rel0 + w1 * rel1, dropping a missing level and renormalizing the
/// other to weight 1. Missing only when both levels are missing.
std::optional<double> try_rel_senses(const EmbeddingModel& model, const Lexicon& lexicon,
                                     const Sense& a, const Sense& b, const RelWeights& w);

/// As try_rel_senses but throws DomainError when both levels are missing.
double rel_senses(const EmbeddingModel& model, const Lexicon& lexicon, const Sense& a,
                  const Sense& b, const RelWeights& w);

// Sense-word relatedness.

std::optional<double> rel0_sense_word(const EmbeddingModel& model, const Sense& t,
                                      std::string_view word);

std::optional<double> rel1_sense_word(const EmbeddingModel& model, const Lexicon& lexicon,
                                      const Sense& t, std::string_view word);

std::optional<double> try_rel_sense_word(const EmbeddingModel& model, const Lexicon& lexicon,
                                         const Sense& t, std::string_view word,
                                         const RelWeights& w);

double rel_sense_word(const EmbeddingModel& model, const Lexicon& lexicon, const Sense& t,
                      std::string_view word, const RelWeights& w);

}  // namespace kwsense
