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
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace kwsense {

/// One member of a sense's core ontological context: either a reference
/// to another sense in the same lexicon or a plain label.
struct ContextRef {
  enum class Kind { kSense, kLabel };

  Kind kind = Kind::kLabel;
  std::string value;

  static ContextRef sense(std::string id) { return {Kind::kSense, std::move(id)}; }
  static ContextRef label(std::string text) { return {Kind::kLabel, std::move(text)}; }

  friend bool operator==(const ContextRef&, const ContextRef&) = default;
};

struct Sense {
  std::string id;
  std::vector<std::string> lemmas;
  /// Equivalent labels, including the term label itself. Never empty.
  std::vector<std::string> synonyms;
  /// Hypernyms and stated context senses; feeds the level-1 relatedness.
  std::vector<ContextRef> core_context;
  /// Broad description (gloss words, related-term labels); feeds step 2
  /// of the disambiguation.
  std::vector<std::string> description_terms;
  /// Usage frequency; 0 means unknown.
  double frequency = 0.0;

  friend bool operator==(const Sense&, const Sense&) = default;
};

/// Immutable sense inventory with a normalized-lemma index. Sense order is
/// the insertion (file) order and is the tie-breaker everywhere downstream.
class Lexicon {
 public:
  Lexicon() = default;

  /// Throws ValidationError on duplicate ids, empty lemma or synonym sets
  /// and negative or non-finite frequencies. Dangling references are
  /// allowed here and surface through validate().
  explicit Lexicon(std::vector<Sense> senses, std::vector<std::string> warnings = {});

  std::size_t size() const noexcept { return senses_.size(); }
  const std::vector<Sense>& senses() const noexcept { return senses_; }

  const Sense* find(std::string_view id) const;
  /// File position of a sense id, or size() when absent.
  std::size_t position(std::string_view id) const;

  /// Candidate senses for a keyword, in file order. Empty when unknown.
  std::vector<const Sense*> senses_of(std::string_view keyword) const;

  /// Normalized lemmas in first-seen order.
  const std::vector<std::string>& lemmas() const noexcept { return lemma_order_; }

  /// Non-fatal loader diagnostics (unknown fields and the like).
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  friend bool operator==(const Lexicon& a, const Lexicon& b) { return a.senses_ == b.senses_; }

 private:
  std::vector<Sense> senses_;
  std::unordered_map<std::string, std::size_t> by_id_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_lemma_;
  std::vector<std::string> lemma_order_;
  std::vector<std::string> warnings_;
};

struct DanglingRef {
  std::string sense_id;
  std::string ref;

  friend bool operator==(const DanglingRef&, const DanglingRef&) = default;
};

struct ValidationReport {
  std::vector<DanglingRef> dangling_refs;
  std::vector<std::string> empty_descriptions;
  std::size_t zero_frequency = 0;
  std::size_t total_senses = 0;
  std::vector<std::string> notes;

  bool empty() const noexcept {
    return dangling_refs.empty() && empty_descriptions.empty() && zero_frequency == 0 &&
           notes.empty();
  }
  double zero_frequency_fraction() const noexcept {
    return total_senses ? static_cast<double>(zero_frequency) / total_senses : 0.0;
  }
};

ValidationReport validate(const Lexicon& lexicon);

/// JSON Lines, one sense per line. Dangling sense references raise a
/// ValidationError listing every offender unless `reject_dangling` is off.
Lexicon load_lexicon(const std::filesystem::path& path, bool reject_dangling = true);
Lexicon parse_lexicon(std::istream& in, const std::string& source_name,
                      bool reject_dangling = true);

void save_lexicon(const Lexicon& lexicon, std::ostream& out);

}  // namespace kwsense
