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

#include <string>

#include <json.hpp>

#include "kwsense/disambig.hpp"
#include "kwsense/evaluation.hpp"
#include "kwsense/lexicon.hpp"

namespace kwsense {

// JSON objects use nlohmann's default (sorted) key order, so dumps are
// stable across runs.

nlohmann::json to_json(const ActiveContext& ca);
nlohmann::json to_json(const DisambiguationResult& result);
nlohmann::json to_json(const PairEvalResult& result);
nlohmann::json to_json(const WsdReport& report);
nlohmann::json to_json(const ValidationReport& report);

// Fixed-width text renderings.

std::string format_table(const DisambiguationResult& result);
std::string format_table(const PairEvalResult& result);
std::string format_table(const WsdReport& report);

}  // namespace kwsense
