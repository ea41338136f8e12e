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

// Acceptance checks. Prints one PASS/FAIL/SKIPPED line per criterion and
// exits nonzero if any criterion fails. Tolerances are fixed here.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "fixture.hpp"
#include "gen.hpp"
#include "kwsense/disambig.hpp"
#include "kwsense/evaluation.hpp"
#include "kwsense/relatedness.hpp"
#include "kwsense/sif.hpp"

namespace {

constexpr double kLandmarkTol = 1e-9;
constexpr double kPropertyTol = 1e-12;
constexpr double kOracleTol = 1e-10;
constexpr double kReproTolPoints = 1.5;
constexpr double kAngularBudgetSec = 1.0;
constexpr double kEquationBudgetSec = 1.0;
constexpr double kAlgorithmBudgetSec = 5.0;
constexpr double kPerfBudgetSec = 0.100;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  enum class Kind { kPass, kFail, kSkipped } kind;
  std::string detail;
};

Outcome pass(std::string d) { return {Outcome::Kind::kPass, std::move(d)}; }
Outcome fail(std::string d) { return {Outcome::Kind::kFail, std::move(d)}; }
Outcome skipped(std::string d) { return {Outcome::Kind::kSkipped, std::move(d)}; }

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), f, args...);
  return buf;
}

// ---------------------------------------------------------------------------

Outcome angular_suite() {
  const auto t0 = Clock::now();
  using V = std::vector<double>;
  const double same = kwsense::angular_relatedness(V{0.3, -1.2, 2.0}, V{0.3, -1.2, 2.0});
  const double orth = kwsense::angular_relatedness(V{1, 0, 0}, V{0, 5, 0});
  const double anti = kwsense::angular_relatedness(V{1, 2, 3}, V{-1, -2, -3});
  if (std::fabs(same - 1.0) > kLandmarkTol || std::fabs(orth - 0.5) > kLandmarkTol ||
      std::fabs(anti) > kLandmarkTol) {
    return fail(fmt("landmarks %.17g %.17g %.17g", same, orth, anti));
  }
  gen::Rng rng(1001);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t dim = 2 + rng.index(299);
    auto a = rng.nonzero_vector(dim);
    auto b = rng.nonzero_vector(dim);
    const double r = kwsense::angular_relatedness(a, b);
    worst = std::max(worst, std::fabs(r - kwsense::angular_relatedness(b, a)));
    const double la = std::exp(rng.uniform(-6, 6));
    const double lb = std::exp(rng.uniform(-6, 6));
    for (double& x : a) x *= la;
    for (double& x : b) x *= lb;
    worst = std::max(worst, std::fabs(r - kwsense::angular_relatedness(a, b)));
  }
  const double secs = seconds_since(t0);
  const std::string d = fmt("max deviation %.3g (tol %.0e), %.3f s", worst, kPropertyTol, secs);
  if (worst > kPropertyTol || secs >= kAngularBudgetSec) return fail(d);
  return pass(d);
}

Outcome equation_oracle() {
  const auto t0 = Clock::now();
  const auto& m = fixture::toy_model();
  const auto& lex = fixture::java_lexicon();
  const auto om = oracle::copy_model(m);
  const std::vector<std::string> context{"indonesian", "coffee", "programming"};
  kwsense::RelWeights w;
  double worst = 0.0;
  std::size_t compared = 0;
  for (const kwsense::Sense& t : lex.senses()) {
    for (const std::string& word : context) {
      auto got = kwsense::try_rel_sense_word(m, lex, t, word, w);
      auto want = oracle::rel_sw(om, t, word, lex.senses(), w.w0, w.w1);
      if (got.has_value() != want.has_value()) return fail("availability differs for " + t.id + "/" + word);
      if (got) {
        worst = std::max(worst, std::fabs(*got - *want));
        ++compared;
      }
    }
    for (const kwsense::Sense& u : lex.senses()) {
      auto got = kwsense::try_rel_senses(m, lex, t, u, w);
      auto want = oracle::rel_ss(om, t, u, lex.senses(), w.w0, w.w1);
      if (got.has_value() != want.has_value()) return fail("availability differs for " + t.id + "/" + u.id);
      if (got) {
        worst = std::max(worst, std::fabs(*got - *want));
        ++compared;
      }
    }
  }
  const double secs = seconds_since(t0);
  const std::string d = fmt("%zu values, max deviation %.3g (tol %.0e), %.3f s", compared, worst,
                            kOracleTol, secs);
  if (worst > kOracleTol || secs >= kEquationBudgetSec) return fail(d);
  return pass(d);
}

std::vector<std::vector<std::string>> subsets_up_to(const std::vector<std::string>& pool, std::size_t max) {
  std::vector<std::vector<std::string>> out{{}};
  for (const std::string& w : pool) {
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (out[i].size() < max) {
        auto s = out[i];
        s.push_back(w);
        out.push_back(std::move(s));
      }
    }
  }
  return out;
}

Outcome algorithm_oracle() {
  const auto t0 = Clock::now();
  const auto& m = fixture::toy_model();
  const auto& lex = fixture::java_lexicon();
  const auto om = oracle::copy_model(m);
  const auto sif = fixture::to_oracle_store(fixture::toy_sif());
  const auto docvec = fixture::to_oracle_store(fixture::toy_docvec());
  const kwsense::StrategyStores stores{&fixture::toy_sif(), &fixture::toy_docvec()};
  const std::vector<std::string> pool{"indonesian", "island", "bali", "coffee", "cup", "code", "software", "the"};
  const auto contexts = subsets_up_to(pool, 4);

  double worst = 0.0;
  std::size_t runs = 0;
  for (const char* name : {"overlap", "average", "sif", "topk", "docvec"}) {
    for (const char* keyword : {"java", "island", "coffee"}) {
      for (const auto& ctx : contexts) {
        kwsense::AlgoParams params;
        params.strategy = fixture::strategy_of(name);
        auto got = kwsense::disambiguate(m, lex, keyword, ctx, kwsense::ContextConfig{}, params, stores);
        oracle::Params op;
        op.strategy = name;
        std::vector<std::string> all = ctx;
        for (const auto& s : lex.senses()) all.insert(all.end(), s.description_terms.begin(), s.description_terms.end());
        op.stopwords = fixture::builtin_stopword_sample(all);
        auto want = oracle::disambiguate(om, lex.senses(), keyword, ctx, op, &sif, &docvec);
        if (got.ranking.size() != want.ranked.size()) return fail("ranking length differs");
        for (std::size_t i = 0; i < want.ranked.size(); ++i) {
          if (got.ranking[i].sense_id != want.ranked[i].first) {
            return fail(std::string("ranking differs: strategy ") + name + ", keyword " + keyword);
          }
          worst = std::max(worst, std::fabs(got.ranking[i].score - want.ranked[i].second));
        }
        ++runs;
      }
    }
  }
  const double secs = seconds_since(t0);
  const std::string d = fmt("%zu runs (5 strategies x 3 keywords x %zu contexts), max deviation %.3g (tol %.0e), %.3f s",
                            runs, contexts.size(), worst, kOracleTol, secs);
  if (worst > kOracleTol || secs >= kAlgorithmBudgetSec) return fail(d);
  return pass(d);
}

Outcome score_bounds() {
  gen::Rng rng(1004);
  const kwsense::Strategy strategies[] = {kwsense::Strategy::kOverlap, kwsense::Strategy::kAverage,
                                          kwsense::Strategy::kSif, kwsense::Strategy::kTopK,
                                          kwsense::Strategy::kDocVec};
  std::size_t checked = 0;
  for (int run = 0; run < 10000; ++run) {
    const std::size_t dim = 2 + rng.index(7);
    auto world = gen::random_world(rng, 15 + rng.index(20), dim, 1 + rng.index(6), rng.index(7), rng.index(8));
    kwsense::AlgoParams params;
    params.strategy = strategies[run % 5];
    params.k = 1 + rng.index(5);
    params.weights = kwsense::RelWeights::from_w0(rng.uniform(0, 1));
    params.proximity_factor = rng.uniform(0, 1);
    params.freq_a = rng.uniform(0, 1);
    params.freq_b = 1 - params.freq_a;
    kwsense::ContextConfig cfg;
    cfg.threshold = rng.uniform(0, 0.8);
    cfg.max_context = 1 + rng.index(4);

    kwsense::SenseVectorStore docvec(dim);
    for (const auto& s : world.lexicon.senses()) docvec.insert(s.id, kwsense::Vector(rng.nonzero_vector(dim)));
    const auto sif = kwsense::build_sif_store(world.model, world.lexicon, kwsense::SifConfig{});
    const kwsense::StrategyStores stores{&sif, &docvec};

    const auto senses = world.lexicon.senses_of(world.keyword);
    const auto ca = kwsense::select_active_context(world.model, world.context, world.keyword, cfg);
    auto s1 = kwsense::step1_base_scores(world.model, world.lexicon, senses, ca, params.weights);
    auto s2 = kwsense::step2_rescore(world.model, senses, s1, world.keyword, ca, params, stores);
    auto s3 = kwsense::step3_frequency(s2, senses, params);
    for (std::size_t i = 0; i < senses.size(); ++i) {
      const double a = s1[i].score, b = s2[i].score, c = s3[i].score;
      if (!(a >= 0.0 && a <= b && b <= c && c <= 1.0)) {
        return fail(fmt("run %d sense %zu: %.17g -> %.17g -> %.17g", run, i, a, b, c));
      }
      ++checked;
    }
  }
  return pass(fmt("10000 runs, %zu sense trajectories in [0,1] and nondecreasing", checked));
}

double closed_form(const std::vector<double>& rx, const std::vector<double>& ry) {
  double d2 = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) d2 += (rx[i] - ry[i]) * (rx[i] - ry[i]);
  const double n = static_cast<double>(rx.size());
  return 1.0 - 6.0 * d2 / (n * (n * n - 1.0));
}

Outcome spearman_check() {
  gen::Rng rng(1005);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng.index(200);
    std::vector<double> rx(n), ry(n);
    std::iota(rx.begin(), rx.end(), 1.0);
    std::iota(ry.begin(), ry.end(), 1.0);
    std::shuffle(rx.begin(), rx.end(), rng.engine());
    std::shuffle(ry.begin(), ry.end(), rng.engine());
    // Present the ranks through a monotone transform so the implementation has to rank.
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
      xs[i] = std::exp(rx[i] / 10.0);
      ys[i] = -1.0 / ry[i];
    }
    const double got = kwsense::spearman(xs, ys);
    const double want = closed_form(rx, ry);
    if (got != want) return fail(fmt("permutation %d (n=%zu): %.17g vs %.17g", t, n, got, want));
  }
  const double example = kwsense::spearman(std::vector<double>{1, 2, 3, 4, 5}, std::vector<double>{1, 2, 3, 5, 4});
  if (std::fabs(example - 0.9) > 1e-15) return fail(fmt("0.9 example gave %.17g", example));
  // Hand-built tie: (1, 2, 2, 3) ranks to (1, 2.5, 2.5, 4); against (1, 2, 3, 4)
  // the rank correlation is 4.5 / sqrt(4.5 * 5) = 3 / sqrt(10).
  const double tied = kwsense::spearman(std::vector<double>{1, 2, 2, 3}, std::vector<double>{1, 2, 3, 4});
  if (std::fabs(tied - 0.9486832980505138) > 1e-12) return fail(fmt("tied case gave %.17g", tied));
  const double all_tied = kwsense::spearman(std::vector<double>{4, 4, 1, 1}, std::vector<double>{2, 2, 1, 1});
  if (std::fabs(all_tied - 1.0) > 1e-12) return fail(fmt("paired ties gave %.17g", all_tied));
  return pass("100 random permutations exact; 0.9 example; tied cases 3/sqrt(10) and 1");
}

Outcome toy_wsd() {
  const auto& m = fixture::toy_model();
  const auto& lex = fixture::java_lexicon();
  const auto corpus = kwsense::load_wsd_corpus(fixture::data_path("java_corpus.jsonl"));
  const kwsense::StrategyStores stores{&fixture::toy_sif(), &fixture::toy_docvec()};
  std::string summary;
  for (const char* name : {"overlap", "average", "sif", "topk", "docvec"}) {
    kwsense::AlgoParams params;
    params.strategy = fixture::strategy_of(name);
    const auto report = kwsense::eval_wsd(m, lex, corpus, kwsense::ContextConfig{}, params, stores, 2);
    for (std::size_t i = 0; i < corpus.items.size(); ++i) {
      bool island_cue = false;
      for (const auto& tok : corpus.items[i].tokens) {
        const std::string t = oracle::lower(tok);
        island_cue = island_cue || t == "island" || t == "indonesian";
      }
      if (island_cue && report.records[i].predicted != std::optional<std::string>("java#island")) {
        return fail(std::string(name) + ": " + corpus.items[i].item_id + " not resolved to java#island");
      }
    }
    const double p = report.attempted ? double(report.correct) / report.attempted : 0.0;
    const double r = report.total ? double(report.correct) / report.total : 0.0;
    const double f = p + r > 0 ? 2 * p * r / (p + r) : 0.0;
    if (std::fabs(report.precision - p) > 1e-15 || std::fabs(report.recall - r) > 1e-15 ||
        std::fabs(report.f1 - f) > 1e-15) {
      return fail(std::string(name) + ": P/R/F1 accounting mismatch");
    }
    summary += fmt("%s P=%.3f R=%.3f F1=%.3f; ", name, p, r, f);
  }
  return pass(summary + "island cue -> java#island in every strategy");
}

const char* env(const char* name) {
  const char* v = std::getenv(name);
  return v && *v ? v : nullptr;
}

kwsense::ModelFormat format_of(const std::string& path) {
  return path.size() > 4 && path.substr(path.size() - 4) == ".bin" ? kwsense::ModelFormat::kBinary
                                                                   : kwsense::ModelFormat::kText;
}

Outcome reproduction() {
  // Word-pair run: Spearman x 100 against the published 87.3 on GM.
  const char* pairs = env("KWSENSE_REPRO_PAIRS");
  const char* pairs_model = env("KWSENSE_REPRO_PAIRS_MODEL");
  // WSD run: a corpus + lexicon + model and the published percentage.
  const char* corpus = env("KWSENSE_REPRO_WSD_CORPUS");
  const char* lexicon = env("KWSENSE_REPRO_WSD_LEXICON");
  const char* wsd_model = env("KWSENSE_REPRO_WSD_MODEL");
  const char* target = env("KWSENSE_REPRO_WSD_TARGET");
  const char* metric = env("KWSENSE_REPRO_WSD_METRIC");

  if (!(pairs && pairs_model) && !(corpus && lexicon && wsd_model && target)) {
    return skipped(
        "needs full-size pre-trained vectors and benchmark data; set KWSENSE_REPRO_PAIRS + "
        "KWSENSE_REPRO_PAIRS_MODEL and/or KWSENSE_REPRO_WSD_{CORPUS,LEXICON,MODEL,TARGET[,METRIC]}");
  }
  std::string detail;
  bool ok = true;
  try {
    if (pairs && pairs_model) {
      const auto model = kwsense::load_model(pairs_model, format_of(pairs_model));
      const auto res = kwsense::eval_wordpairs(model, kwsense::load_word_pairs(pairs));
      const double got = 100.0 * res.rho;
      ok = ok && std::fabs(got - 87.3) <= kReproTolPoints;
      detail += fmt("pairs rho=%.2f vs 87.3 (coverage %zu/%zu); ", got, res.covered, res.covered + res.skipped);
    }
    if (corpus && lexicon && wsd_model && target) {
      const auto model = kwsense::load_model(wsd_model, format_of(wsd_model));
      const auto lex = kwsense::load_lexicon(lexicon, false);
      const auto report = kwsense::eval_wsd(model, lex, kwsense::load_wsd_corpus(corpus),
                                            kwsense::ContextConfig{}, kwsense::AlgoParams{}, {}, 8);
      const std::string which = metric ? metric : "f1";
      const double got = 100.0 * (which == "precision" ? report.precision
                                  : which == "recall"  ? report.recall
                                                       : report.f1);
      const double want = std::stod(target);
      ok = ok && std::fabs(got - want) <= kReproTolPoints;
      detail += fmt("wsd %s=%.2f vs %.2f; ", which.c_str(), got, want);
    }
  } catch (const std::exception& e) {
    return fail(std::string("reproduction run failed: ") + e.what());
  }
  detail += fmt("tolerance +/-%.1f points", kReproTolPoints);
  return ok ? pass(detail) : fail(detail);
}

Outcome performance() {
  gen::Rng rng(1008);
  auto world = gen::random_world(rng, 3000, 50, 100, 30, 8, false);
  kwsense::ContextConfig cfg;
  cfg.threshold = 0.0;
  double worst = 0.0;
  std::string per_strategy;
  for (auto st : {kwsense::Strategy::kTopK, kwsense::Strategy::kAverage, kwsense::Strategy::kOverlap}) {
    kwsense::AlgoParams params;
    params.strategy = st;
    for (int rep = 0; rep < 3; ++rep) {
      const auto t0 = Clock::now();
      auto res = kwsense::disambiguate(world.model, world.lexicon, world.keyword, world.context, cfg, params);
      const double secs = seconds_since(t0);
      if (res.ranking.size() != 100) return fail("expected 100 candidate senses");
      worst = std::max(worst, secs);
      if (rep == 0) per_strategy += fmt("%s %.1f ms; ", std::string(kwsense::strategy_name(st)).c_str(), secs * 1e3);
    }
  }
  const std::string d = per_strategy + fmt("worst %.1f ms (budget %.0f ms, 100 senses x 30 terms, dim 50)",
                                           worst * 1e3, kPerfBudgetSec * 1e3);
  return worst < kPerfBudgetSec ? pass(d) : fail(d);
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"angular-relatedness-suite", angular_suite},
      {"equation-oracle-equivalence", equation_oracle},
      {"algorithm-oracle-equivalence", algorithm_oracle},
      {"score-bounds-property", score_bounds},
      {"spearman-correctness", spearman_check},
      {"toy-wsd-sanity", toy_wsd},
      {"published-number-reproduction", reproduction},
      {"performance", performance},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const char* tag = o.kind == Outcome::Kind::kPass   ? "PASS"
                      : o.kind == Outcome::Kind::kFail ? "FAIL"
                                                       : "SKIPPED";
    std::printf("%s %s: %s\n", tag, name, o.detail.c_str());
    failures += o.kind == Outcome::Kind::kFail;
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
