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

#include "kwsense/sif.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>

#include <json.hpp>

#include "kwsense/errors.hpp"
#include "kwsense/kernels.hpp"
#include "kwsense/text.hpp"

namespace kwsense {

void SenseVectorStore::insert(std::string id, Vector v) {
  if (dim_ == 0) dim_ = v.dim();
  if (v.dim() != dim_) {
    throw DomainError("vector for '" + id + "' has dimension " + std::to_string(v.dim()) +
                      ", store holds " + std::to_string(dim_));
  }
  auto [it, inserted] = vectors_.try_emplace(id, std::move(v));
  if (!inserted) throw DomainError("repeated id in vector store: " + id);
  ids_.push_back(std::move(id));
}

const Vector* SenseVectorStore::find(std::string_view id) const {
  auto it = vectors_.find(std::string(id));
  return it == vectors_.end() ? nullptr : &it->second;
}

SenseVectorStore parse_docvec_store(std::istream& in, const std::string& source_name) {
  SenseVectorStore store;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(source_name, line_no, std::string("malformed JSON: ") + e.what());
    }
    if (!obj.is_object() || !obj.contains("id") || !obj["id"].is_string() ||
        !obj.contains("vector") || !obj["vector"].is_array()) {
      throw ParseError(source_name, line_no, "expected {\"id\": string, \"vector\": [numbers]}");
    }
    std::vector<double> values;
    for (const auto& x : obj["vector"]) {
      if (!x.is_number()) throw ParseError(source_name, line_no, "vector must hold numbers");
      values.push_back(x.get<double>());
    }
    try {
      store.insert(obj["id"].get<std::string>(), Vector(std::move(values)));
    } catch (const DomainError& e) {
      throw ParseError(source_name, line_no, e.what());
    }
  }
  return store;
}

SenseVectorStore load_docvec_store(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return parse_docvec_store(in, path.string());
}

void SifConfig::check() const {
  if (!(smoothing > 0.0) || !std::isfinite(smoothing)) {
    throw ConfigError("SIF smoothing must be positive");
  }
}

void WordFrequencies::add(std::string token, double count) {
  counts_[normalize_token(token)] += count;
  total_ += count;
}

double WordFrequencies::probability(std::string_view token) const {
  if (total_ <= 0.0) return 0.0;
  auto it = counts_.find(normalize_token(token));
  return it == counts_.end() ? 0.0 : it->second / total_;
}

WordFrequencies parse_word_frequencies(std::istream& in, const std::string& source_name) {
  WordFrequencies table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<std::string> fields = split_whitespace(line);
    if (fields.empty()) continue;
    unsigned long long count = 0;
    const std::string& c = fields.back();
    auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), count);
    if (fields.size() != 2 || ec != std::errc() || ptr != c.data() + c.size() || count == 0) {
      throw ParseError(source_name, line_no, "expected \"token count\" with a positive count");
    }
    table.add(fields[0], static_cast<double>(count));
  }
  return table;
}

WordFrequencies load_word_frequencies(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return parse_word_frequencies(in, path.string());
}

SenseVectorStore SifResult::to_store() const {
  SenseVectorStore store;
  for (const auto& [id, v] : vectors) store.insert(id, v);
  return store;
}

std::optional<Vector> principal_direction(std::span<const Vector> rows, bool center) {
  if (rows.empty()) return std::nullopt;
  const std::size_t dim = rows.front().dim();
  const double n = static_cast<double>(rows.size());

  std::vector<double> mean(dim, 0.0);
  if (center) {
    for (const Vector& r : rows) kernels::accumulate(mean, r);
    kernels::scale(mean, 1.0 / n);
  }

  std::vector<std::vector<double>> centered;
  centered.reserve(rows.size());
  bool all_zero = true;
  for (const Vector& r : rows) {
    std::vector<double> c(r.components());
    kernels::axpy(c, -1.0, mean);
    for (double x : c) all_zero = all_zero && x == 0.0;
    centered.push_back(std::move(c));
  }
  if (all_zero) return std::nullopt;

  // y = Xc^T (Xc x)
  auto apply = [&](std::span<const double> x) {
    std::vector<double> y(dim, 0.0);
    for (const auto& c : centered) kernels::axpy(y, kernels::dot(c, x), c);
    return y;
  };
  auto normalize = [](std::vector<double>& v) {
    const double norm = std::sqrt(kernels::dot(v, v));
    if (norm == 0.0 || !std::isfinite(norm)) return false;
    kernels::scale(v, 1.0 / norm);
    return true;
  };

  // All-ones start; if it lies in the null space, walk the standard basis.
  std::vector<double> x(dim, 1.0);
  normalize(x);
  std::vector<double> y = apply(x);
  for (std::size_t j = 0; !normalize(y) && j < dim; ++j) {
    std::fill(x.begin(), x.end(), 0.0);
    x[j] = 1.0;
    y = apply(x);
  }
  if (std::sqrt(kernels::dot(y, y)) == 0.0) return std::nullopt;

  for (int iter = 0; iter < 100; ++iter) {
    x.swap(y);
    y = apply(x);
    if (!normalize(y)) break;
    double change = 0.0;
    for (std::size_t i = 0; i < dim; ++i) change += (y[i] - x[i]) * (y[i] - x[i]);
    if (std::sqrt(change) < 1e-9) break;
  }
  return Vector(std::move(y));
}

SifResult sif_embeddings(const EmbeddingModel& model, std::span<const SifDescription> descriptions,
                         const SifConfig& cfg, const WordFrequencies* freqs) {
  cfg.check();
  WordFrequencies loaded;
  if (freqs == nullptr && cfg.word_freq_source) {
    loaded = load_word_frequencies(*cfg.word_freq_source);
    freqs = &loaded;
  }

  SifResult result;
  for (const SifDescription& d : descriptions) {
    std::vector<double> acc(model.dim(), 0.0);
    double weight_sum = 0.0;
    for (const std::string& token : d.tokens) {
      std::optional<Vector> v = phrase_vector(model, token);
      if (!v) continue;
      const double p = freqs ? freqs->probability(token) : 0.0;
      const double weight = cfg.smoothing / (cfg.smoothing + p);
      kernels::axpy(acc, weight, *v);
      weight_sum += weight;
    }
    if (weight_sum == 0.0) {
      result.warnings.push_back("no in-vocabulary tokens for '" + d.id + "', omitted");
      continue;
    }
    kernels::scale(acc, 1.0 / weight_sum);
    result.vectors.emplace_back(d.id, Vector(std::move(acc)));
  }

  if (cfg.remove_component && result.vectors.size() >= 2) {
    std::vector<Vector> rows;
    rows.reserve(result.vectors.size());
    for (const auto& [id, v] : result.vectors) rows.push_back(v);
    result.principal_direction = principal_direction(rows, cfg.center);
    if (result.principal_direction) {
      const VectorView u = *result.principal_direction;
      for (auto& [id, v] : result.vectors) {
        std::vector<double> out(v.components());
        kernels::axpy(out, -kernels::dot(u, v), u);
        v = Vector(std::move(out));
      }
    }
  }
  return result;
}

SenseVectorStore build_sif_store(const EmbeddingModel& model, const Lexicon& lexicon,
                                 const SifConfig& cfg, const WordFrequencies* freqs) {
  std::vector<SifDescription> descriptions;
  descriptions.reserve(lexicon.size());
  for (const Sense& s : lexicon.senses()) descriptions.push_back({s.id, s.description_terms});
  return sif_embeddings(model, descriptions, cfg, freqs).to_store();
}

}  // namespace kwsense
