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

#include "kwsense/lexicon.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include <json.hpp>

#include "kwsense/errors.hpp"
#include "kwsense/text.hpp"

namespace kwsense {

using nlohmann::json;

Lexicon::Lexicon(std::vector<Sense> senses, std::vector<std::string> warnings)
    : senses_(std::move(senses)), warnings_(std::move(warnings)) {
  by_id_.reserve(senses_.size());
  for (std::size_t i = 0; i < senses_.size(); ++i) {
    const Sense& s = senses_[i];
    if (s.id.empty()) throw ValidationError("sense at position " + std::to_string(i) + " has no id");
    if (!by_id_.try_emplace(s.id, i).second) throw ValidationError("duplicate sense id: " + s.id);
    if (s.synonyms.empty()) throw ValidationError("sense " + s.id + " has no synonyms");
    if (s.lemmas.empty()) throw ValidationError("sense " + s.id + " has no lemmas");
    if (!std::isfinite(s.frequency) || s.frequency < 0.0) {
      throw ValidationError("sense " + s.id + " has a negative or non-finite frequency");
    }
    for (const std::string& lemma : s.lemmas) {
      std::string key = normalize_token(trim(lemma));
      if (key.empty()) throw ValidationError("sense " + s.id + " has an empty lemma");
      auto [it, fresh] = by_lemma_.try_emplace(key);
      if (fresh) lemma_order_.push_back(key);
      if (it->second.empty() || it->second.back() != i) it->second.push_back(i);
    }
  }
}

const Sense* Lexicon::find(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  return it == by_id_.end() ? nullptr : &senses_[it->second];
}

std::size_t Lexicon::position(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  return it == by_id_.end() ? senses_.size() : it->second;
}

std::vector<const Sense*> Lexicon::senses_of(std::string_view keyword) const {
  std::vector<const Sense*> out;
  auto it = by_lemma_.find(normalize_token(trim(keyword)));
  if (it == by_lemma_.end()) return out;
  out.reserve(it->second.size());
  for (std::size_t i : it->second) out.push_back(&senses_[i]);
  return out;
}

ValidationReport validate(const Lexicon& lexicon) {
  ValidationReport report;
  report.total_senses = lexicon.size();
  for (const Sense& s : lexicon.senses()) {
    for (const ContextRef& ref : s.core_context) {
      if (ref.kind == ContextRef::Kind::kSense && lexicon.find(ref.value) == nullptr) {
        report.dangling_refs.push_back({s.id, ref.value});
      }
    }
    if (s.description_terms.empty()) report.empty_descriptions.push_back(s.id);
    if (s.frequency == 0.0) ++report.zero_frequency;
  }
  if (report.total_senses > 0 && report.zero_frequency == report.total_senses) {
    report.notes.emplace_back("all frequencies are zero: frequency re-ranking will be skipped");
  }
  return report;
}

namespace {

const std::set<std::string, std::less<>> kKnownFields = {
    "id", "lemmas", "synonyms", "core_context", "description_terms", "frequency"};

std::vector<std::string> string_list(const json& obj, const char* field, bool required,
                                     const std::string& source, std::size_t line) {
  std::vector<std::string> out;
  auto it = obj.find(field);
  if (it == obj.end() || it->is_null()) {
    if (required) throw ParseError(source, line, std::string("missing \"") + field + "\"");
    return out;
  }
  if (!it->is_array()) throw ParseError(source, line, std::string("\"") + field + "\" must be a list");
  for (const json& v : *it) {
    if (!v.is_string()) {
      throw ParseError(source, line, std::string("\"") + field + "\" must contain strings");
    }
    out.push_back(v.get<std::string>());
  }
  if (required && out.empty()) {
    throw ParseError(source, line, std::string("\"") + field + "\" must not be empty");
  }
  return out;
}

Sense parse_sense(const json& obj, const std::string& source, std::size_t line,
                  std::vector<std::string>& warnings) {
  if (!obj.is_object()) throw ParseError(source, line, "expected a JSON object");
  Sense s;
  auto id = obj.find("id");
  if (id == obj.end() || !id->is_string() || id->get<std::string>().empty()) {
    throw ParseError(source, line, "missing or empty \"id\"");
  }
  s.id = id->get<std::string>();
  s.lemmas = string_list(obj, "lemmas", true, source, line);
  s.synonyms = string_list(obj, "synonyms", true, source, line);
  s.description_terms = string_list(obj, "description_terms", false, source, line);

  if (auto cc = obj.find("core_context"); cc != obj.end() && !cc->is_null()) {
    if (!cc->is_array()) throw ParseError(source, line, "\"core_context\" must be a list");
    for (const json& ref : *cc) {
      const bool has_ref = ref.is_object() && ref.contains("ref");
      const bool has_label = ref.is_object() && ref.contains("label");
      if (has_ref == has_label) {
        throw ParseError(source, line,
                         "core_context entries need exactly one of \"ref\" or \"label\"");
      }
      const json& value = has_ref ? ref.at("ref") : ref.at("label");
      if (!value.is_string() || value.get<std::string>().empty()) {
        throw ParseError(source, line, "core_context value must be a non-empty string");
      }
      s.core_context.push_back(has_ref ? ContextRef::sense(value.get<std::string>())
                                       : ContextRef::label(value.get<std::string>()));
    }
  }

  if (auto f = obj.find("frequency"); f != obj.end() && !f->is_null()) {
    if (!f->is_number()) throw ParseError(source, line, "\"frequency\" must be a number");
    s.frequency = f->get<double>();
    if (!std::isfinite(s.frequency) || s.frequency < 0.0) {
      throw ParseError(source, line, "\"frequency\" must be nonnegative");
    }
  }

  for (const auto& [key, value] : obj.items()) {
    if (!kKnownFields.contains(key)) {
      warnings.push_back(source + ":" + std::to_string(line) + ": ignoring unknown field \"" +
                         key + "\"");
    }
  }
  return s;
}

}  // namespace

Lexicon parse_lexicon(std::istream& in, const std::string& source_name, bool reject_dangling) {
  std::vector<Sense> senses;
  std::vector<std::string> warnings;
  std::set<std::string, std::less<>> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(source_name, line_no, std::string("malformed JSON: ") + e.what());
    }
    Sense s = parse_sense(obj, source_name, line_no, warnings);
    if (!seen.insert(s.id).second) {
      throw ParseError(source_name, line_no, "duplicate sense id \"" + s.id + "\"");
    }
    senses.push_back(std::move(s));
  }

  Lexicon lexicon(std::move(senses), std::move(warnings));
  if (!reject_dangling) return lexicon;
  ValidationReport report = validate(lexicon);
  if (!report.dangling_refs.empty()) {
    std::string msg = source_name + ": dangling sense references:";
    for (const DanglingRef& d : report.dangling_refs) msg += " " + d.sense_id + "->" + d.ref;
    throw ValidationError(msg);
  }
  return lexicon;
}

Lexicon load_lexicon(const std::filesystem::path& path, bool reject_dangling) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return parse_lexicon(in, path.string(), reject_dangling);
}

void save_lexicon(const Lexicon& lexicon, std::ostream& out) {
  for (const Sense& s : lexicon.senses()) {
    json cc = json::array();
    for (const ContextRef& ref : s.core_context) {
      cc.push_back({{ref.kind == ContextRef::Kind::kSense ? "ref" : "label", ref.value}});
    }
    json obj = {{"id", s.id},
                {"lemmas", s.lemmas},
                {"synonyms", s.synonyms},
                {"core_context", cc},
                {"description_terms", s.description_terms},
                {"frequency", s.frequency}};
    out << obj.dump() << '\n';
  }
}

}  // namespace kwsense
