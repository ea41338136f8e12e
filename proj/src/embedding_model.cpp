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

#include "kwsense/embedding_model.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>

#include "kwsense/errors.hpp"
#include "kwsense/text.hpp"

namespace kwsense {

EmbeddingModel::Builder::Builder(std::string name, std::size_t dim)
    : name_(std::move(name)), dim_(dim) {
  if (dim == 0) throw DomainError("embedding dimension must be positive");
}

void EmbeddingModel::Builder::reserve(std::size_t rows) {
  tokens_.reserve(rows);
  index_.reserve(rows);
  data_.reserve(rows * dim_);
}

EmbeddingModel::Builder::AddResult EmbeddingModel::Builder::insert_token(std::string& token) {
  if (token.empty()) return AddResult::kEmptyToken;
  auto [it, inserted] = index_.try_emplace(token, tokens_.size());
  if (!inserted) {
    ++duplicates_;
    return AddResult::kDuplicate;
  }
  tokens_.push_back(std::move(token));
  return AddResult::kAdded;
}

EmbeddingModel::Builder::AddResult EmbeddingModel::Builder::add(std::string token,
                                                                std::span<const double> values) {
  if (values.size() != dim_) {
    throw DomainError("vector for '" + token + "' has " + std::to_string(values.size()) +
                      " components, expected " + std::to_string(dim_));
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw DomainError("non-finite component in vector for '" + token + "'");
  }
  const AddResult r = insert_token(token);
  if (r == AddResult::kAdded) data_.insert(data_.end(), values.begin(), values.end());
  return r;
}

EmbeddingModel::Builder::AddResult EmbeddingModel::Builder::add(std::string token,
                                                                std::span<const float> values) {
  std::vector<double> widened(values.begin(), values.end());
  return add(std::move(token), std::span<const double>(widened));
}

EmbeddingModel EmbeddingModel::Builder::build() && {
  EmbeddingModel m;
  m.name_ = std::move(name_);
  m.dim_ = dim_;
  m.duplicates_ = duplicates_;
  m.tokens_ = std::move(tokens_);
  m.index_ = std::move(index_);
  m.data_ = std::move(data_);
  return m;
}

std::optional<VectorView> EmbeddingModel::find_exact(std::string_view token) const {
  if (token.empty()) return std::nullopt;
  auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return row(it->second);
}

std::optional<VectorView> EmbeddingModel::lookup(std::string_view token) const {
  if (token.empty()) return std::nullopt;
  const std::string lowered = normalize_token(token);
  if (auto hit = find_exact(lowered)) return hit;
  if (lowered != token) return find_exact(token);
  return std::nullopt;
}

std::optional<Vector> phrase_vector(const EmbeddingModel& model, std::string_view phrase) {
  std::vector<VectorView> found;
  for (const std::string& token : split_whitespace(phrase)) {
    if (auto v = model.lookup(token)) found.push_back(*v);
  }
  if (found.empty()) return std::nullopt;
  if (found.size() == 1) return Vector(std::vector<double>(found[0].begin(), found[0].end()));
  return centroid(std::span<const VectorView>(found));
}

namespace {

bool parse_double(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

bool parse_size(std::string_view s, std::size_t& out) {
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return !s.empty() && ec == std::errc() && ptr == end;
}

std::ifstream open_or_throw(const std::filesystem::path& path, std::ios::openmode mode) {
  std::ifstream in(path, mode);
  if (!in) throw Error("cannot open " + path.string());
  return in;
}

}  // namespace

EmbeddingModel parse_text_model(std::istream& in, const std::string& source_name) {
  std::optional<EmbeddingModel::Builder> builder;
  std::optional<std::size_t> declared_dim;
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  bool saw_content = false;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> fields = split_whitespace(line);
    if (fields.empty()) continue;

    if (!saw_content) {
      saw_content = true;
      std::size_t count = 0;
      std::size_t dim = 0;
      if (fields.size() == 2 && parse_size(fields[0], count) && parse_size(fields[1], dim)) {
        if (dim == 0) throw ParseError(source_name, line_no, "header declares dimension 0");
        declared_dim = dim;
        builder.emplace(source_name, dim);
        builder->reserve(count);
        continue;
      }
    }

    if (fields.size() < 2) {
      throw ParseError(source_name, line_no, "malformed line: expected a token and values");
    }
    const std::size_t dim = fields.size() - 1;
    if (declared_dim && dim != *declared_dim) {
      throw ParseError(source_name, line_no,
                       "dimension mismatch: " + std::to_string(dim) + " values, header declares " +
                           std::to_string(*declared_dim));
    }
    if (!builder) builder.emplace(source_name, dim);

    values.resize(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (!parse_double(fields[i + 1], values[i]) || !std::isfinite(values[i])) {
        throw ParseError(source_name, line_no, "malformed value '" + fields[i + 1] + "'");
      }
    }
    try {
      builder->add(std::move(fields[0]), std::span<const double>(values));
    } catch (const DomainError&) {
      throw ParseError(source_name, line_no, "dimension mismatch with earlier lines");
    }
  }
  if (!builder || builder->size() == 0) throw ParseError(source_name, 0, "no vectors in file");
  return std::move(*builder).build();
}

EmbeddingModel load_text_model(const std::filesystem::path& path) {
  std::ifstream in = open_or_throw(path, std::ios::in);
  return parse_text_model(in, path.string());
}

EmbeddingModel parse_binary_model(std::istream& in, const std::string& source_name) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError(source_name, 1, "empty file");
  std::vector<std::string> fields = split_whitespace(header);
  std::size_t count = 0;
  std::size_t dim = 0;
  if (fields.size() != 2 || !parse_size(fields[0], count) || !parse_size(fields[1], dim) ||
      dim == 0) {
    throw ParseError(source_name, 1, "header is not two integers \"<vocab_count> <dim>\"");
  }

  EmbeddingModel::Builder builder(source_name, dim);
  builder.reserve(count);
  std::vector<char> raw(dim * sizeof(float));
  std::vector<float> values(dim);
  std::string token;

  auto truncated = [&](std::size_t read) {
    return ParseError(source_name, 0,
                      "truncated file: read " + std::to_string(read) + " of " +
                          std::to_string(count) + " entries");
  };

  for (std::size_t entry = 0; entry < count; ++entry) {
    int c = in.get();
    while (c == '\n' || c == '\r') c = in.get();
    token.clear();
    while (c != std::char_traits<char>::eof() && c != ' ') {
      token.push_back(static_cast<char>(c));
      c = in.get();
    }
    if (c == std::char_traits<char>::eof()) throw truncated(entry);

    if (!in.read(raw.data(), static_cast<std::streamsize>(raw.size()))) throw truncated(entry);
    for (std::size_t i = 0; i < dim; ++i) {
      const auto* b = reinterpret_cast<const unsigned char*>(raw.data() + i * 4);
      const std::uint32_t bits = static_cast<std::uint32_t>(b[0]) |
                                 (static_cast<std::uint32_t>(b[1]) << 8) |
                                 (static_cast<std::uint32_t>(b[2]) << 16) |
                                 (static_cast<std::uint32_t>(b[3]) << 24);
      values[i] = std::bit_cast<float>(bits);
      if (!std::isfinite(values[i])) {
        throw ParseError(source_name, 0,
                         "non-finite value in entry " + std::to_string(entry) + " ('" + token +
                             "')");
      }
    }
    builder.add(token, std::span<const float>(values));
  }
  return std::move(builder).build();
}

EmbeddingModel load_binary_model(const std::filesystem::path& path) {
  std::ifstream in = open_or_throw(path, std::ios::in | std::ios::binary);
  return parse_binary_model(in, path.string());
}

EmbeddingModel load_model(const std::filesystem::path& path, ModelFormat format) {
  return format == ModelFormat::kBinary ? load_binary_model(path) : load_text_model(path);
}

void save_text_model(const EmbeddingModel& model, std::ostream& out) {
  out << model.size() << ' ' << model.dim() << '\n';
  std::array<char, 32> buf{};
  for (std::size_t i = 0; i < model.size(); ++i) {
    out << model.tokens()[i];
    for (double v : model.row(i)) {
      auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
      out << ' ' << std::string_view(buf.data(), static_cast<std::size_t>(ptr - buf.data()));
    }
    out << '\n';
  }
}

}  // namespace kwsense
