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

// End-to-end checks of the command-line tool.

#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <string>

#include "fixture.hpp"
#include "kwsense/relatedness.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(KWSENSE_CLI_PATH) + " --model " +
                          fixture::data_path("toy_model.txt").string() + " --lexicon " +
                          fixture::data_path("java_lexicon.jsonl").string() + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const std::string& name) { return fixture::data_path(name).string(); }

}  // namespace

TEST_CASE("cli rel prints one value in [0,1]") {
  auto r = run("rel island sea");
  CHECK(r.status == 0);
  const double v = std::stod(r.out);
  CHECK(v >= 0.0);
  CHECK(v <= 1.0);
  CHECK(std::fabs(v - *kwsense::rel_words(fixture::toy_model(), "island", "sea")) <= 1e-9);
}

TEST_CASE("cli rel between a sense and a word") {
  auto r = run("rel sense:java#island island");
  CHECK(r.status == 0);
  const auto& lex = fixture::java_lexicon();
  const double want = kwsense::rel_sense_word(fixture::toy_model(), lex, *lex.find("java#island"),
                                              "island", kwsense::RelWeights{});
  CHECK(std::fabs(std::stod(r.out) - want) <= 1e-9);
  // One synonym and one core-context label: every pair compared is (x, x).
  auto self = run("rel sense:island#land sense:island#land");
  CHECK(self.status == 0);
  CHECK(std::stod(self.out) == 1.0);
}

TEST_CASE("cli rel exit codes") {
  CHECK(run("rel qzx sea").status == 3);
  CHECK(run("rel sense:nope#1 sea").status == 2);
  CHECK(run("--strategy lesk rel island sea").status == 2);
  CHECK(run("--w0 1.5 rel island sea").status == 2);
}

TEST_CASE("cli disambiguate") {
  auto r = run("--output json disambiguate java island indonesia");
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["results"][0]["keyword"] == "java");
  CHECK(j["results"][0]["senses"][0]["sense"] == "java#island");

  auto single = run("disambiguate island sea");
  CHECK(single.status == 0);
  CHECK(single.out.find("island#land") != std::string::npos);

  auto unknown = run("disambiguate foo bar");
  CHECK(unknown.status == 0);
  CHECK(unknown.out.find("no senses") != std::string::npos);
}

TEST_CASE("cli eval-pairs") {
  auto r = run("--output json eval-pairs " + data("toy_pairs.tsv"));
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["covered"] == 5);

  const std::string path = "kwsense_cli_pairs.tsv";
  {
    std::ofstream f(path);
    f << "island\tsea\t9\ncoffee\tdrink\t8\ncode\tsoftware\t7\nqzx\tsea\t1\n";
  }
  auto cov = run("eval-pairs " + path);
  CHECK(cov.status == 0);
  CHECK(cov.out.find("3/4") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("cli eval-wsd echoes its configuration") {
  auto r = run("--strategy topk --k 15 eval-wsd " + data("java_corpus.jsonl"));
  CHECK(r.status == 0);
  CHECK(r.out.find("strategy=topk") != std::string::npos);
  CHECK(r.out.find("k=15") != std::string::npos);
  CHECK(r.out.find("precision   1.000000") != std::string::npos);

  auto j = nlohmann::json::parse(run("--output json --strategy overlap --k 7 eval-wsd " +
                                     data("java_corpus.jsonl")).out);
  CHECK(j["config"]["strategy"] == "overlap");
  CHECK(j["config"]["k"] == 7);
  CHECK(j["report"]["total"] == 6);
}

TEST_CASE("cli eval-wsd on an empty corpus") {
  const std::string path = "kwsense_cli_empty.jsonl";
  { std::ofstream f(path); }
  auto r = run("eval-wsd " + path);
  CHECK(r.status == 0);
  CHECK(r.out.find("total       0") != std::string::npos);
  CHECK(r.out.find("corpus has no targets") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("cli validate-lexicon and missing inputs") {
  CHECK(run("validate-lexicon").status == 0);
  CHECK(run("--docvec /nonexistent.jsonl --strategy docvec disambiguate java island").status != 0);
  CHECK(run("--strategy docvec disambiguate java island").status == 2);
}
