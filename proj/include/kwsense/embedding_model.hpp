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
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kwsense/vector.hpp"

namespace kwsense {

/// Immutable token -> vector map. Rows live in one contiguous buffer and
/// lookups hand out views into it, so a model must outlive its views.
class EmbeddingModel {
 public:
  class Builder {
   public:
    enum class AddResult { kAdded, kDuplicate, kEmptyToken };

    Builder(std::string name, std::size_t dim);

    /// Throws DomainError on a length mismatch or non-finite values.
    /// Duplicates keep the first occurrence.
    AddResult add(std::string token, std::span<const double> values);
    AddResult add(std::string token, std::span<const float> values);

    void reserve(std::size_t rows);
    std::size_t size() const noexcept { return tokens_.size(); }
    EmbeddingModel build() &&;

   private:
    AddResult insert_token(std::string& token);

    std::string name_;
    std::size_t dim_;
    std::size_t duplicates_ = 0;
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<double> data_;
  };

  std::string_view name() const noexcept { return name_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return tokens_.size(); }
  /// Number of repeated tokens dropped while loading.
  std::size_t duplicate_count() const noexcept { return duplicates_; }

  /// Tokens in load order.
  const std::vector<std::string>& tokens() const noexcept { return tokens_; }
  VectorView row(std::size_t i) const noexcept { return {data_.data() + i * dim_, dim_}; }

  /// Normalized lookup: the lowercased token first, then the raw form.
  /// Empty and absent tokens are missing.
  std::optional<VectorView> lookup(std::string_view token) const;

  /// Byte-exact lookup with no normalization.
  std::optional<VectorView> find_exact(std::string_view token) const;

 private:
  EmbeddingModel() = default;

  std::string name_;
  std::size_t dim_ = 0;
  std::size_t duplicates_ = 0;
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<double> data_;
};

/// Centroid of the in-vocabulary whitespace tokens of `phrase`; missing
/// when none of them is in the vocabulary.
std::optional<Vector> phrase_vector(const EmbeddingModel& model, std::string_view phrase);

// Text format: optional "<count> <dim>" header, then "token f1 ... fdim".
EmbeddingModel load_text_model(const std::filesystem::path& path);
EmbeddingModel parse_text_model(std::istream& in, const std::string& source_name);

// word2vec binary layout: ASCII header, then token bytes, a space, and dim
// little-endian float32 values per entry.
EmbeddingModel load_binary_model(const std::filesystem::path& path);
EmbeddingModel parse_binary_model(std::istream& in, const std::string& source_name);

enum class ModelFormat { kText, kBinary };

EmbeddingModel load_model(const std::filesystem::path& path, ModelFormat format);

/// Writes the text format with a header and round-trip precision.
void save_text_model(const EmbeddingModel& model, std::ostream& out);

}  // namespace kwsense
