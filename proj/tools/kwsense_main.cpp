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

// kwsense command-line front end.
//
// Exit codes:
//   0  command completed
//   1  runtime failure (I/O, malformed input file)
//   2  usage or configuration error, unresolved sense id, unknown keyword
//   3  relatedness undefined: inputs out of vocabulary

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kwsense/disambig.hpp"
#include "kwsense/embedding_model.hpp"
#include "kwsense/errors.hpp"
#include "kwsense/evaluation.hpp"
#include "kwsense/kernels.hpp"
#include "kwsense/lexicon.hpp"
#include "kwsense/relatedness.hpp"
#include "kwsense/report.hpp"
#include "kwsense/sif.hpp"
#include "kwsense/stopwords.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;
constexpr int kExitOov = 3;

struct ExitError {
  int code;
  std::string message;
};

struct RunConfig {
  std::string model_path;
  std::string model_format = "auto";
  std::string lexicon_path;
  std::string strategy = "topk";
  std::size_t k = 15;
  double threshold = 0.5;
  std::size_t max_context = 4;
  double w0 = 0.5;
  double proximity_factor = 0.75;
  double freq_a = 0.5;
  double sif_smoothing = 1e-3;
  std::string sif_freqs;
  bool sif_keep_component = false;
  std::string docvec_path;
  std::size_t jobs = 1;
  std::string output = "table";

  kwsense::ContextConfig context;
  kwsense::AlgoParams params;

  // Checks every constraint before anything is loaded.
  void finalize() {
    try {
      auto strategy_value = kwsense::parse_strategy(strategy);
      if (!strategy_value) throw kwsense::ConfigError("unknown strategy '" + strategy + "'");
      if (output != "table" && output != "json") {
        throw kwsense::ConfigError("--output must be table or json");
      }
      if (model_format != "auto" && model_format != "text" && model_format != "binary") {
        throw kwsense::ConfigError("--model-format must be text or binary");
      }
      if (jobs < 1) throw kwsense::ConfigError("--jobs must be at least 1");
      params.strategy = *strategy_value;
      params.k = k;
      params.weights = kwsense::RelWeights::from_w0(w0);
      params.proximity_factor = proximity_factor;
      params.freq_a = freq_a;
      params.freq_b = 1.0 - freq_a;
      params.check();
      context.max_context = max_context;
      context.threshold = threshold;
      context.check();
      sif().check();
      if (params.strategy == kwsense::Strategy::kDocVec && docvec_path.empty()) {
        throw kwsense::ConfigError("strategy docvec requires --docvec");
      }
    } catch (const kwsense::ConfigError& e) {
      throw ExitError{kExitConfig, e.what()};
    }
  }

  kwsense::SifConfig sif() const {
    kwsense::SifConfig cfg;
    cfg.smoothing = sif_smoothing;
    if (!sif_freqs.empty()) cfg.word_freq_source = sif_freqs;
    cfg.remove_component = !sif_keep_component;
    return cfg;
  }

  json echo() const {
    return {{"model", model_path},
            {"model_format", model_format},
            {"lexicon", lexicon_path},
            {"strategy", std::string(kwsense::strategy_name(params.strategy))},
            {"k", params.k},
            {"threshold", context.threshold},
            {"max_context", context.max_context},
            {"w0", params.weights.w0},
            {"w1", params.weights.w1},
            {"proximity_factor", params.proximity_factor},
            {"freq_a", params.freq_a},
            {"freq_b", params.freq_b},
            {"sif_smoothing", sif_smoothing},
            {"sif_freqs", sif_freqs},
            {"sif_remove_component", !sif_keep_component},
            {"docvec", docvec_path},
            {"jobs", jobs},
            {"stopwords", std::getenv("KWSENSE_STOPWORDS") ? std::getenv("KWSENSE_STOPWORDS")
                                                           : std::string("builtin:") +
                                                                 std::string(kwsense::kStopwordListVersion)},
            {"kernels", std::string(kwsense::kernels::isa_name(kwsense::kernels::active_isa()))}};
  }

  std::string echo_line() const {
    std::string out = "#";
    const json config = echo();
    for (const auto& [key, value] : config.items()) {
      out += " " + key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
    }
    return out + "\n";
  }
};

kwsense::EmbeddingModel load_model(const RunConfig& rc) {
  if (rc.model_path.empty()) throw ExitError{kExitConfig, "--model is required"};
  kwsense::ModelFormat format = kwsense::ModelFormat::kText;
  if (rc.model_format == "binary" ||
      (rc.model_format == "auto" && rc.model_path.size() >= 4 &&
       rc.model_path.compare(rc.model_path.size() - 4, 4, ".bin") == 0)) {
    format = kwsense::ModelFormat::kBinary;
  }
  return kwsense::load_model(rc.model_path, format);
}

kwsense::Lexicon load_lexicon(const RunConfig& rc) {
  if (rc.lexicon_path.empty()) throw ExitError{kExitConfig, "--lexicon is required"};
  kwsense::Lexicon lexicon = kwsense::load_lexicon(rc.lexicon_path);
  for (const std::string& w : lexicon.warnings()) std::cerr << "warning: " << w << "\n";
  return lexicon;
}

void apply_stopword_env(RunConfig& rc) {
  if (const char* path = std::getenv("KWSENSE_STOPWORDS"); path && *path) {
    try {
      rc.context.stopwords = kwsense::load_stopwords(path);
    } catch (const kwsense::Error& e) {
      throw ExitError{kExitConfig, e.what()};
    }
  }
}

// Owns whichever per-sense stores the strategy needs.
struct Stores {
  std::optional<kwsense::SenseVectorStore> sif;
  std::optional<kwsense::SenseVectorStore> docvec;

  kwsense::StrategyStores view() const {
    return {sif ? &*sif : nullptr, docvec ? &*docvec : nullptr};
  }
};

Stores load_stores(const RunConfig& rc, const kwsense::EmbeddingModel& model,
                   const kwsense::Lexicon& lexicon) {
  Stores stores;
  if (rc.params.strategy == kwsense::Strategy::kSif) {
    stores.sif = kwsense::build_sif_store(model, lexicon, rc.sif());
  }
  if (rc.params.strategy == kwsense::Strategy::kDocVec) {
    stores.docvec = kwsense::load_docvec_store(rc.docvec_path);
  }
  try {
    kwsense::check_strategy_inputs(model, rc.params, stores.view());
  } catch (const kwsense::ConfigError& e) {
    throw ExitError{kExitConfig, e.what()};
  }
  return stores;
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10f", v);
  return buf;
}

constexpr std::string_view kSensePrefix = "sense:";

int cmd_rel(const RunConfig& rc, const std::vector<std::string>& args) {
  if (args.size() != 2) throw ExitError{kExitConfig, "rel takes exactly two arguments"};
  const kwsense::EmbeddingModel model = load_model(rc);

  const bool sense_a = args[0].starts_with(kSensePrefix);
  const bool sense_b = args[1].starts_with(kSensePrefix);
  std::optional<kwsense::Lexicon> lexicon;
  if (sense_a || sense_b) lexicon = load_lexicon(rc);

  auto resolve = [&](const std::string& arg) -> const kwsense::Sense* {
    const std::string id = arg.substr(kSensePrefix.size());
    const kwsense::Sense* s = lexicon->find(id);
    if (s == nullptr) throw ExitError{kExitConfig, "unresolved sense id: " + id};
    return s;
  };

  std::optional<double> value;
  std::string mode;
  if (sense_a && sense_b) {
    mode = "sense-sense";
    value = kwsense::try_rel_senses(model, *lexicon, *resolve(args[0]), *resolve(args[1]),
                                    rc.params.weights);
  } else if (sense_a || sense_b) {
    mode = "sense-word";
    const kwsense::Sense* s = resolve(sense_a ? args[0] : args[1]);
    value = kwsense::try_rel_sense_word(model, *lexicon, *s, sense_a ? args[1] : args[0],
                                        rc.params.weights);
  } else {
    mode = "word-word";
    value = kwsense::rel_words(model, args[0], args[1]);
  }
  if (!value) throw ExitError{kExitOov, "relatedness undefined: out of vocabulary"};

  if (rc.output == "json") {
    json out = {{"config", rc.echo()},
                {"mode", mode},
                {"a", args[0]},
                {"b", args[1]},
                {"relatedness", *value}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << format_value(*value) << "\n";
  }
  return kExitOk;
}

int cmd_disambiguate(const RunConfig& rc, const std::vector<std::string>& keywords) {
  if (keywords.empty()) throw ExitError{kExitConfig, "disambiguate needs at least one keyword"};
  const kwsense::EmbeddingModel model = load_model(rc);
  const kwsense::Lexicon lexicon = load_lexicon(rc);
  const Stores stores = load_stores(rc, model, lexicon);

  json results = json::array();
  std::string table = rc.echo_line();
  for (std::size_t i = 0; i < keywords.size(); ++i) {
    std::vector<std::string> context;
    for (std::size_t j = 0; j < keywords.size(); ++j) {
      if (j != i) context.push_back(keywords[j]);
    }
    try {
      const kwsense::DisambiguationResult r = kwsense::disambiguate(
          model, lexicon, keywords[i], context, rc.context, rc.params, stores.view());
      results.push_back(kwsense::to_json(r));
      table += kwsense::format_table(r);
    } catch (const kwsense::UnknownKeywordError&) {
      results.push_back({{"keyword", keywords[i]}, {"status", "no senses"}});
      table += "keyword: " + keywords[i] + "\n  no senses\n";
    }
  }
  if (rc.output == "json") {
    std::cout << json{{"config", rc.echo()}, {"results", results}}.dump(2) << "\n";
  } else {
    std::cout << table;
  }
  return kExitOk;
}

int cmd_eval_pairs(const RunConfig& rc, const std::string& dataset_path) {
  const kwsense::WordPairDataset dataset = kwsense::load_word_pairs(dataset_path);
  const kwsense::EmbeddingModel model = load_model(rc);
  const kwsense::PairEvalResult r = kwsense::eval_wordpairs(model, dataset);
  if (rc.output == "json") {
    std::cout << json{{"config", rc.echo()}, {"dataset", dataset_path}, {"result", kwsense::to_json(r)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << rc.echo_line() << "# dataset=" << dataset_path << "\n" << kwsense::format_table(r);
  }
  return kExitOk;
}

int cmd_eval_wsd(const RunConfig& rc, const std::string& corpus_path) {
  const kwsense::WsdCorpus corpus = kwsense::load_wsd_corpus(corpus_path);
  const kwsense::EmbeddingModel model = load_model(rc);
  const kwsense::Lexicon lexicon = load_lexicon(rc);
  const Stores stores = load_stores(rc, model, lexicon);
  const kwsense::WsdReport report =
      kwsense::eval_wsd(model, lexicon, corpus, rc.context, rc.params, stores.view(), rc.jobs);
  for (const std::string& w : report.warnings) std::cerr << "warning: " << w << "\n";
  if (rc.output == "json") {
    std::cout << json{{"config", rc.echo()}, {"corpus", corpus_path}, {"report", kwsense::to_json(report)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << rc.echo_line() << "# corpus=" << corpus_path << "\n"
              << kwsense::format_table(report);
  }
  return kExitOk;
}

int cmd_validate(const RunConfig& rc) {
  if (rc.lexicon_path.empty()) throw ExitError{kExitConfig, "--lexicon is required"};
  const kwsense::Lexicon lexicon = kwsense::load_lexicon(rc.lexicon_path, false);
  for (const std::string& w : lexicon.warnings()) std::cerr << "warning: " << w << "\n";
  const kwsense::ValidationReport report = kwsense::validate(lexicon);
  if (rc.output == "json") {
    std::cout << kwsense::to_json(report).dump(2) << "\n";
  } else {
    std::cout << "senses              " << report.total_senses << "\n"
              << "dangling refs       " << report.dangling_refs.size() << "\n"
              << "empty descriptions  " << report.empty_descriptions.size() << "\n"
              << "zero frequency      " << report.zero_frequency << "\n";
    for (const std::string& n : report.notes) std::cout << "note: " << n << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Keyword sense disambiguation with embedding-based relatedness"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig rc;
  app.add_option("--model", rc.model_path, "Embedding model file");
  app.add_option("--model-format", rc.model_format, "text | binary (default: .bin => binary)");
  app.add_option("--lexicon", rc.lexicon_path, "Sense inventory (JSON Lines)");
  app.add_option("--strategy", rc.strategy, "overlap | average | sif | topk | docvec")
      ->capture_default_str();
  app.add_option("--k", rc.k, "Nearest description terms kept by topk")->capture_default_str();
  app.add_option("--threshold", rc.threshold, "Active-context relatedness threshold")
      ->capture_default_str();
  app.add_option("--max-context", rc.max_context, "Maximum active-context size")
      ->capture_default_str();
  app.add_option("--w0", rc.w0, "Level-0 weight (w1 = 1 - w0)")->capture_default_str();
  app.add_option("--proximity-factor", rc.proximity_factor, "Frequency re-ranking gate")
      ->capture_default_str();
  app.add_option("--freq-a", rc.freq_a, "normFreq weight a (b = 1 - a)")->capture_default_str();
  app.add_option("--docvec", rc.docvec_path, "Per-sense document vectors (JSON Lines)");
  app.add_option("--sif-freqs", rc.sif_freqs, "Word frequency table for SIF weights");
  app.add_option("--sif-smoothing", rc.sif_smoothing, "SIF smoothing constant")
      ->capture_default_str();
  app.add_flag("--sif-keep-component", rc.sif_keep_component,
               "Skip principal-component removal in SIF");
  app.add_option("--jobs", rc.jobs, "Worker threads for evaluation")->capture_default_str();
  app.add_option("--output", rc.output, "table | json")->capture_default_str();

  std::vector<std::string> rel_args;
  CLI::App* rel = app.add_subcommand("rel", "Relatedness of two words or senses (sense:<id>)");
  rel->add_option("items", rel_args, "Two words or sense:<id> references")->required();

  std::vector<std::string> keywords;
  CLI::App* dis = app.add_subcommand("disambiguate", "Disambiguate each keyword against the others");
  dis->add_option("keywords", keywords, "Keyword query")->required();

  std::string pairs_path;
  CLI::App* pairs = app.add_subcommand("eval-pairs", "Spearman correlation on a word-pair dataset");
  pairs->add_option("dataset", pairs_path, "TSV word1, word2, score")->required();

  std::string corpus_path;
  CLI::App* wsd = app.add_subcommand("eval-wsd", "Precision/recall/F1 on a WSD corpus");
  wsd->add_option("corpus", corpus_path, "WSD corpus (JSON Lines)")->required();

  CLI::App* val = app.add_subcommand("validate-lexicon", "Load and report on a lexicon");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    rc.finalize();
    apply_stopword_env(rc);
    if (*rel) return cmd_rel(rc, rel_args);
    if (*dis) return cmd_disambiguate(rc, keywords);
    if (*pairs) return cmd_eval_pairs(rc, pairs_path);
    if (*wsd) return cmd_eval_wsd(rc, corpus_path);
    if (*val) return cmd_validate(rc);
  } catch (const ExitError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const kwsense::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitConfig;
}
