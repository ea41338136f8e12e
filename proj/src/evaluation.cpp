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

#include "kwsense/evaluation.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <numeric>
#include <thread>

#include <json.hpp>

#include "kwsense/errors.hpp"
#include "kwsense/relatedness.hpp"
#include "kwsense/text.hpp"

namespace kwsense {

namespace {

bool parse_real(std::string_view s, double& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return !s.empty() && ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    out.emplace_back(trim(line.substr(start, tab == std::string_view::npos ? tab : tab - start)));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

bool has_ties(std::span<const double> v) {
  std::vector<double> sorted(v.begin(), v.end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

}  // namespace

WordPairDataset parse_word_pairs(std::istream& in, const std::string& source_name) {
  WordPairDataset ds;
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    std::vector<std::string> fields =
        line.find('\t') != std::string::npos ? split_tabs(line) : split_whitespace(line);
    double score = 0.0;
    const bool numeric = fields.size() == 3 && parse_real(fields[2], score);
    if (!numeric) {
      if (first) {
        first = false;
        continue;
      }
      throw ParseError(source_name, line_no, "expected \"word1<TAB>word2<TAB>score\"");
    }
    first = false;
    ds.pairs.push_back({fields[0], fields[1], score});
  }
  return ds;
}

WordPairDataset load_word_pairs(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return parse_word_pairs(in, path.string());
}

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    // positions i..j (0-based) share rank mean(i+1 .. j+1)
    const double rank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = rank;
    i = j + 1;
  }
  return ranks;
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw DomainError("correlation over sequences of different length");
  if (xs.size() < 2) throw DomainError("correlation needs at least two observations");
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw DomainError("undefined correlation");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double spearman(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw DomainError("correlation over sequences of different length");
  if (xs.size() < 2) throw DomainError("correlation needs at least two observations");
  const std::vector<double> rx = average_ranks(xs);
  const std::vector<double> ry = average_ranks(ys);
  if (has_ties(xs) || has_ties(ys)) return pearson(rx, ry);

  std::int64_t sum_d2 = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    const auto d = static_cast<std::int64_t>(rx[i]) - static_cast<std::int64_t>(ry[i]);
    sum_d2 += d * d;
  }
  const double n = static_cast<double>(xs.size());
  return 1.0 - 6.0 * static_cast<double>(sum_d2) / (n * (n * n - 1.0));
}

PairEvalResult eval_wordpairs(const EmbeddingModel& model, const WordPairDataset& dataset) {
  PairEvalResult result;
  std::vector<double> model_scores;
  std::vector<double> human_scores;
  for (const WordPair& p : dataset.pairs) {
    if (auto r = rel_words(model, p.first, p.second)) {
      model_scores.push_back(*r);
      human_scores.push_back(p.human);
      ++result.covered;
    } else {
      ++result.skipped;
    }
  }
  if (result.covered < 2) {
    throw DomainError("fewer than two word pairs covered by the model (" +
                      std::to_string(result.covered) + ")");
  }
  result.rho = spearman(model_scores, human_scores);
  return result;
}

std::size_t WsdCorpus::target_count() const noexcept {
  std::size_t n = 0;
  for (const WsdItem& item : items) n += item.targets.size();
  return n;
}

WsdCorpus parse_wsd_corpus(std::istream& in, const std::string& source_name) {
  using nlohmann::json;
  WsdCorpus corpus;
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
    auto fail = [&](const std::string& what) { return ParseError(source_name, line_no, what); };
    if (!obj.is_object()) throw fail("expected a JSON object");
    WsdItem item;
    if (!obj.contains("item_id") || !obj["item_id"].is_string()) throw fail("missing \"item_id\"");
    item.item_id = obj["item_id"].get<std::string>();
    if (!obj.contains("tokens") || !obj["tokens"].is_array()) throw fail("missing \"tokens\"");
    for (const json& t : obj["tokens"]) {
      if (!t.is_string()) throw fail("\"tokens\" must contain strings");
      item.tokens.push_back(t.get<std::string>());
    }
    if (obj.contains("targets")) {
      if (!obj["targets"].is_array()) throw fail("\"targets\" must be a list");
      for (const json& t : obj["targets"]) {
        if (!t.is_object() || !t.contains("position") || !t["position"].is_number_unsigned()) {
          throw fail("target needs a nonnegative integer \"position\"");
        }
        WsdTarget target;
        target.position = t["position"].get<std::size_t>();
        if (target.position >= item.tokens.size()) {
          throw fail("target position " + std::to_string(target.position) + " out of range");
        }
        if (t.contains("keyword")) {
          if (!t["keyword"].is_string()) throw fail("\"keyword\" must be a string");
          target.keyword = t["keyword"].get<std::string>();
        } else {
          target.keyword = item.tokens[target.position];
        }
        if (!t.contains("gold") || !t["gold"].is_array() || t["gold"].empty()) {
          throw fail("target needs a nonempty \"gold\" list");
        }
        for (const json& g : t["gold"]) {
          if (!g.is_string()) throw fail("\"gold\" must contain strings");
          target.gold.push_back(g.get<std::string>());
        }
        item.targets.push_back(std::move(target));
      }
    }
    corpus.items.push_back(std::move(item));
  }
  return corpus;
}

WsdCorpus load_wsd_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return parse_wsd_corpus(in, path.string());
}

std::string_view target_status_name(TargetStatus s) noexcept {
  switch (s) {
    case TargetStatus::kAnswered:
      return "answered";
    case TargetStatus::kUnknownKeyword:
      return "unknown_keyword";
    case TargetStatus::kFailed:
      return "failed";
  }
  return "failed";
}

WsdMetrics compute_metrics(std::size_t attempted, std::size_t correct, std::size_t total) {
  WsdMetrics m;
  m.precision = attempted ? static_cast<double>(correct) / static_cast<double>(attempted) : 0.0;
  m.recall = total ? static_cast<double>(correct) / static_cast<double>(total) : 0.0;
  m.f1 = (m.precision + m.recall) > 0.0
             ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
             : 0.0;
  return m;
}

WsdReport eval_wsd(const EmbeddingModel& model, const Lexicon& lexicon, const WsdCorpus& corpus,
                   const ContextConfig& cfg, const AlgoParams& params,
                   const StrategyStores& stores, std::size_t jobs) {
  cfg.check();
  params.check();
  check_strategy_inputs(model, params, stores);

  struct Job {
    const WsdItem* item;
    const WsdTarget* target;
  };
  std::vector<Job> work;
  work.reserve(corpus.target_count());
  for (const WsdItem& item : corpus.items) {
    for (const WsdTarget& t : item.targets) work.push_back({&item, &t});
  }

  std::vector<WsdRecord> records(work.size());
  auto run_one = [&](std::size_t i) {
    const WsdItem& item = *work[i].item;
    const WsdTarget& target = *work[i].target;
    WsdRecord& rec = records[i];
    rec.item_id = item.item_id;
    rec.position = target.position;
    rec.keyword = target.keyword;
    rec.gold = target.gold;

    std::vector<std::string> context;
    context.reserve(item.tokens.size());
    for (std::size_t p = 0; p < item.tokens.size(); ++p) {
      if (p != target.position) context.push_back(item.tokens[p]);
    }
    try {
      const DisambiguationResult r =
          disambiguate(model, lexicon, target.keyword, context, cfg, params, stores);
      rec.status = TargetStatus::kAnswered;
      rec.predicted = r.ranking.front().sense_id;
      rec.score = r.ranking.front().score;
      rec.correct =
          std::find(target.gold.begin(), target.gold.end(), *rec.predicted) != target.gold.end();
    } catch (const UnknownKeywordError&) {
      rec.status = TargetStatus::kUnknownKeyword;
    } catch (const std::exception& e) {
      rec.status = TargetStatus::kFailed;
      rec.message = e.what();
    }
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min(jobs, work.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < work.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < work.size(); i = next++) run_one(i);
      });
    }
  }

  WsdReport report;
  report.total = records.size();
  for (const WsdRecord& rec : records) {
    if (rec.status == TargetStatus::kAnswered) ++report.attempted;
    if (rec.correct) ++report.correct;
    if (rec.status == TargetStatus::kFailed) {
      report.warnings.push_back(rec.item_id + ":" + std::to_string(rec.position) + ": " +
                                rec.message);
    }
    for (const std::string& g : rec.gold) {
      if (lexicon.find(g) == nullptr) {
        report.unresolved_gold.push_back(rec.item_id + ":" + std::to_string(rec.position) + ":" +
                                         g);
      }
    }
  }
  if (report.total == 0) report.warnings.emplace_back("corpus has no targets");
  const WsdMetrics m = compute_metrics(report.attempted, report.correct, report.total);
  report.precision = m.precision;
  report.recall = m.recall;
  report.f1 = m.f1;
  report.records = std::move(records);
  return report;
}

}  // namespace kwsense
