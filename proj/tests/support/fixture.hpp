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

#include <filesystem>
#include <map>
#include <string>

#include "kwsense/disambig.hpp"
#include "kwsense/embedding_model.hpp"
#include "kwsense/lexicon.hpp"
#include "kwsense/sif.hpp"
#include "oracle.hpp"

namespace fixture {

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(KWSENSE_TEST_DATA_DIR) / name;
}

inline const kwsense::EmbeddingModel& toy_model() {
  static const kwsense::EmbeddingModel m = kwsense::load_text_model(data_path("toy_model.txt"));
  return m;
}

inline const kwsense::Lexicon& java_lexicon() {
  static const kwsense::Lexicon l = kwsense::load_lexicon(data_path("java_lexicon.jsonl"));
  return l;
}

inline const kwsense::SenseVectorStore& toy_docvec() {
  static const kwsense::SenseVectorStore s =
      kwsense::load_docvec_store(data_path("toy_docvec.jsonl"));
  return s;
}

inline const kwsense::SenseVectorStore& toy_sif() {
  static const kwsense::SenseVectorStore s =
      kwsense::build_sif_store(toy_model(), java_lexicon(), kwsense::SifConfig{});
  return s;
}

inline oracle::Store to_oracle_store(const kwsense::SenseVectorStore& store) {
  oracle::Store out;
  for (const std::string& id : store.ids()) out[id] = store.find(id)->components();
  return out;
}

inline std::set<std::string> builtin_stopword_sample(const std::vector<std::string>& words) {
  std::set<std::string> out;
  for (const auto& w : words) {
    if (kwsense::default_stopwords().contains(w)) out.insert(oracle::lower(w));
  }
  return out;
}

inline kwsense::Strategy strategy_of(const std::string& name) {
  return *kwsense::parse_strategy(name);
}

}  // namespace fixture
