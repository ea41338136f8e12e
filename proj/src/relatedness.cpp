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

#include "kwsense/relatedness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "kwsense/errors.hpp"
#include "kwsense/kernels.hpp"

namespace kwsense {

RelWeights RelWeights::from_w0(double w0) {
  RelWeights w{w0, 1.0 - w0};
  w.check();
  return w;
}

void RelWeights::check() const {
  if (!(w0 >= 0.0 && w1 >= 0.0 && w0 <= 1.0 && w1 <= 1.0) || std::abs(w0 + w1 - 1.0) > 1e-12) {
    throw ConfigError("relatedness weights must be nonnegative and sum to 1");
  }
}

double cosine(VectorView a, VectorView b) {
  if (a.size() != b.size()) throw DomainError("cosine over vectors of different dimension");
  const kernels::DotNorms d = kernels::dot_norms(a, b);
  if (d.norm_a == 0.0 || d.norm_b == 0.0) throw DomainError("undefined cosine for zero vector");
  // sqrt(na * nb) keeps cosine(v, v) exactly 1; fall back when the product
  // leaves the normal range.
  double denom = std::sqrt(d.norm_a * d.norm_b);
  if (!std::isnormal(denom)) denom = std::sqrt(d.norm_a) * std::sqrt(d.norm_b);
  return std::clamp(d.dot / denom, -1.0, 1.0);
}

double angular_relatedness(VectorView a, VectorView b) {
  if (a.size() != b.size()) throw DomainError("angle between vectors of different dimension");
  const kernels::DotNorms d = kernels::dot_norms(a, b);
  if (d.norm_a == 0.0 || d.norm_b == 0.0) throw DomainError("undefined angle for zero vector");
  const double na = std::sqrt(d.norm_a);
  const double nb = std::sqrt(d.norm_b);
  if (!std::isfinite(na) || !std::isfinite(nb)) throw DomainError("vector norm out of range");
  // angle = 2 atan2(|a^ - b^|, |a^ + b^|): well conditioned over the whole
  // range, unlike arccos of the cosine near 0 and pi.
  const kernels::HalfChords c = kernels::half_chords(a, b, 1.0 / na, 1.0 / nb);
  const double angle = 2.0 * std::atan2(std::sqrt(c.diff), std::sqrt(c.sum));
  return std::clamp(1.0 - angle / std::numbers::pi, 0.0, 1.0);
}

std::optional<double> rel_words(const EmbeddingModel& model, std::string_view x,
                                std::string_view y) {
  const std::optional<Vector> vx = phrase_vector(model, x);
  if (!vx) return std::nullopt;
  const std::optional<Vector> vy = phrase_vector(model, y);
  if (!vy) return std::nullopt;
  return angular_relatedness(*vx, *vy);
}

namespace {

using Labels = std::span<const std::string>;

// Running mean that ignores missing samples.
class MeanOfPresent {
 public:
  void add(std::optional<double> x) {
    if (x) {
      sum_ += *x;
      ++n_;
    }
  }
  std::optional<double> value() const {
    if (n_ == 0) return std::nullopt;
    return sum_ / static_cast<double>(n_);
  }

 private:
  double sum_ = 0.0;
  std::size_t n_ = 0;
};

// Synonym labels of an OC member.
Labels labels_of(const ContextRef& ref, const Lexicon& lexicon) {
  if (ref.kind == ContextRef::Kind::kSense) {
    if (const Sense* s = lexicon.find(ref.value)) return s->synonyms;
  }
  return Labels(&ref.value, 1);
}

std::vector<std::optional<Vector>> phrase_vectors(const EmbeddingModel& model, Labels labels) {
  std::vector<std::optional<Vector>> out;
  out.reserve(labels.size());
  for (const std::string& l : labels) out.push_back(phrase_vector(model, l));
  return out;
}

std::optional<double> rel0_labels(const EmbeddingModel& model, Labels a, Labels b) {
  if (a.empty() || b.empty()) throw DomainError("sense with an empty synonym set");
  const auto va = phrase_vectors(model, a);
  const auto vb = phrase_vectors(model, b);
  MeanOfPresent mean;
  for (const auto& x : va) {
    if (!x) continue;
    for (const auto& y : vb) {
      if (y) mean.add(angular_relatedness(*x, *y));
    }
  }
  return mean.value();
}

std::optional<double> rel0_labels_word(const EmbeddingModel& model, Labels syn,
                                       const Vector& word) {
  if (syn.empty()) throw DomainError("sense with an empty synonym set");
  MeanOfPresent mean;
  for (const std::string& s : syn) {
    if (auto v = phrase_vector(model, s)) mean.add(angular_relatedness(*v, word));
  }
  return mean.value();
}

std::optional<double> combine(std::optional<double> r0, std::optional<double> r1,
                              const RelWeights& w) {
  if (r0 && r1) return std::clamp(w.w0 * *r0 + w.w1 * *r1, 0.0, 1.0);
  if (r0) return r0;
  return r1;
}

}  // namespace

std::optional<double> rel0_senses(const EmbeddingModel& model, const Sense& a, const Sense& b) {
  return rel0_labels(model, a.synonyms, b.synonyms);
}

std::optional<double> rel1_senses(const EmbeddingModel& model, const Lexicon& lexicon,
                                  const Sense& a, const Sense& b) {
  if (a.core_context.empty() || b.core_context.empty()) return std::nullopt;
  MeanOfPresent mean;
  for (const ContextRef& x : a.core_context) {
    for (const ContextRef& y : b.core_context) {
      mean.add(rel0_labels(model, labels_of(x, lexicon), labels_of(y, lexicon)));
    }
  }
  return mean.value();
}

std::optional<double> try_rel_senses(const EmbeddingModel& model, const Lexicon& lexicon,
                                     const Sense& a, const Sense& b, const RelWeights& w) {
  return combine(rel0_senses(model, a, b), rel1_senses(model, lexicon, a, b), w);
}

double rel_senses(const EmbeddingModel& model, const Lexicon& lexicon, const Sense& a,
                  const Sense& b, const RelWeights& w) {
  if (auto r = try_rel_senses(model, lexicon, a, b, w)) return *r;
  throw DomainError("senses not representable in model: " + a.id + ", " + b.id);
}

std::optional<double> rel0_sense_word(const EmbeddingModel& model, const Sense& t,
                                      std::string_view word) {
  if (t.synonyms.empty()) throw DomainError("sense with an empty synonym set: " + t.id);
  const std::optional<Vector> vw = phrase_vector(model, word);
  if (!vw) return std::nullopt;
  return rel0_labels_word(model, t.synonyms, *vw);
}

std::optional<double> rel1_sense_word(const EmbeddingModel& model, const Lexicon& lexicon,
                                      const Sense& t, std::string_view word) {
  if (t.core_context.empty()) return std::nullopt;
  const std::optional<Vector> vw = phrase_vector(model, word);
  if (!vw) return std::nullopt;
  MeanOfPresent mean;
  for (const ContextRef& oc : t.core_context) {
    mean.add(rel0_labels_word(model, labels_of(oc, lexicon), *vw));
  }
  return mean.value();
}

std::optional<double> try_rel_sense_word(const EmbeddingModel& model, const Lexicon& lexicon,
                                         const Sense& t, std::string_view word,
                                         const RelWeights& w) {
  return combine(rel0_sense_word(model, t, word), rel1_sense_word(model, lexicon, t, word), w);
}

double rel_sense_word(const EmbeddingModel& model, const Lexicon& lexicon, const Sense& t,
                      std::string_view word, const RelWeights& w) {
  if (auto r = try_rel_sense_word(model, lexicon, t, word, w)) return *r;
  throw DomainError("sense " + t.id + " and word '" + std::string(word) +
                    "' not representable in model");
}

}  // namespace kwsense
