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

#include "kwsense/report.hpp"

#include <cstdio>
#include <string_view>

namespace kwsense {

using nlohmann::json;

namespace {

std::string fixed(double v, int precision = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
  return buf;
}

std::string pad(std::string_view s, std::size_t width) {
  std::string out(s);
  if (out.size() < width) out.append(width - out.size(), ' ');
  return out;
}

}  // namespace

json to_json(const ActiveContext& ca) {
  json members = json::array();
  for (const ContextMember& m : ca.members) members.push_back({{"word", m.word}, {"score", m.score}});
  return {{"target", ca.target}, {"members", members}};
}

json to_json(const DisambiguationResult& result) {
  json ranking = json::array();
  for (const SenseScore& s : result.ranking) {
    ranking.push_back({{"sense", s.sense_id},
                       {"score", s.score},
                       {"trace",
                        {{"step1", s.trace.step1},
                         {"step2_delta", s.trace.step2_delta},
                         {"step3_delta", s.trace.step3_delta}}}});
  }
  return {{"keyword", result.keyword},
          {"active_context", to_json(result.context)},
          {"senses", ranking}};
}

json to_json(const PairEvalResult& result) {
  return {{"rho", result.rho}, {"covered", result.covered}, {"skipped", result.skipped}};
}

json to_json(const WsdReport& report) {
  json records = json::array();
  for (const WsdRecord& r : report.records) {
    json rec = {{"item_id", r.item_id},
                {"position", r.position},
                {"keyword", r.keyword},
                {"gold", r.gold},
                {"status", std::string(target_status_name(r.status))},
                {"correct", r.correct}};
    rec["predicted"] = r.predicted ? json(*r.predicted) : json(nullptr);
    if (r.predicted) rec["score"] = r.score;
    if (!r.message.empty()) rec["message"] = r.message;
    records.push_back(std::move(rec));
  }
  return {{"attempted", report.attempted},
          {"correct", report.correct},
          {"total", report.total},
          {"precision", report.precision},
          {"recall", report.recall},
          {"f1", report.f1},
          {"unresolved_gold", report.unresolved_gold},
          {"warnings", report.warnings},
          {"records", records}};
}

json to_json(const ValidationReport& report) {
  json dangling = json::array();
  for (const DanglingRef& d : report.dangling_refs) {
    dangling.push_back({{"sense", d.sense_id}, {"ref", d.ref}});
  }
  return {{"dangling_refs", dangling},
          {"empty_descriptions", report.empty_descriptions},
          {"zero_frequency", report.zero_frequency},
          {"zero_frequency_fraction", report.zero_frequency_fraction()},
          {"total_senses", report.total_senses},
          {"notes", report.notes}};
}

std::string format_table(const DisambiguationResult& result) {
  std::string out = "keyword: " + result.keyword + "\n";
  out += "active context:";
  if (result.context.empty()) out += " (empty)";
  for (const ContextMember& m : result.context.members) {
    out += " " + m.word + "=" + fixed(m.score, 4);
  }
  out += "\n";
  out += "  " + pad("sense", 32) + pad("score", 10) + pad("step1", 10) + pad("+step2", 10) +
         "+step3\n";
  for (const SenseScore& s : result.ranking) {
    out += "  " + pad(s.sense_id, 32) + pad(fixed(s.score, 4), 10) +
           pad(fixed(s.trace.step1, 4), 10) + pad(fixed(s.trace.step2_delta, 4), 10) +
           fixed(s.trace.step3_delta, 4) + "\n";
  }
  return out;
}

std::string format_table(const PairEvalResult& result) {
  const std::size_t n = result.covered + result.skipped;
  return pad("spearman", 12) + fixed(result.rho) + "\n" + pad("coverage", 12) +
         std::to_string(result.covered) + "/" + std::to_string(n) + "\n" + pad("skipped", 12) +
         std::to_string(result.skipped) + "\n";
}

std::string format_table(const WsdReport& report) {
  std::string out;
  out += pad("total", 12) + std::to_string(report.total) + "\n";
  out += pad("attempted", 12) + std::to_string(report.attempted) + "\n";
  out += pad("correct", 12) + std::to_string(report.correct) + "\n";
  out += pad("precision", 12) + fixed(report.precision) + "\n";
  out += pad("recall", 12) + fixed(report.recall) + "\n";
  out += pad("f1", 12) + fixed(report.f1) + "\n";
  if (!report.unresolved_gold.empty()) {
    out += pad("unresolved", 12) + std::to_string(report.unresolved_gold.size()) + " gold ids\n";
  }
  for (const std::string& w : report.warnings) out += "warning: " + w + "\n";
  return out;
}

}  // namespace kwsense
