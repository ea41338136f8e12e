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


#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "fixture.hpp"
#include "gen.hpp"
#include "kwsense/errors.hpp"
#include "kwsense/relatedness.hpp"

using kwsense::ContextRef;
using kwsense::EmbeddingModel;
using kwsense::Lexicon;
using kwsense::Sense;

namespace {

// 2-d model whose words sit at the given angles (in units of pi) on the unit circle;
// the angular relatedness of two words is then 1 - |angle difference|.
EmbeddingModel circle(const std::vector<std::pair<std::string, double>>& words) {
  EmbeddingModel::Builder b("circle", 2);
  for (const auto& [w, a] : words) {
    std::vector<double> v{std::cos(a * std::numbers::pi), std::sin(a * std::numbers::pi)};
    b.add(w, std::span<const double>(v));
  }
  return std::move(b).build();
}

Sense sense(std::string id, std::vector<std::string> syn, std::vector<ContextRef> oc = {}) {
  Sense s;
  s.id = std::move(id);
  s.lemmas = {syn.front()};
  s.synonyms = std::move(syn);
  s.core_context = std::move(oc);
  s.frequency = 1;
  return s;
}

constexpr double kTol = 1e-12;

}  // namespace

TEST_CASE("cosine examples") {
  using V = std::vector<double>;
  CHECK(kwsense::cosine(V{1, 0}, V{1, 0}) == 1.0);
  CHECK(kwsense::cosine(V{1, 0}, V{0, 1}) == 0.0);
  CHECK(kwsense::cosine(V{1, 1}, V{1, 0}) == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(kwsense::cosine(V{0, 0}, V{1, 0}), kwsense::DomainError);
  CHECK_THROWS_AS(kwsense::cosine(V{1, 0}, V{1, 0, 0}), kwsense::DomainError);
}

TEST_CASE("angular relatedness at the landmarks") {
  using V = std::vector<double>;
  CHECK(std::fabs(kwsense::angular_relatedness(V{3, 4}, V{3, 4}) - 1.0) <= 1e-9);
  CHECK(std::fabs(kwsense::angular_relatedness(V{1, 0}, V{0, 2}) - 0.5) <= 1e-9);
  CHECK(std::fabs(kwsense::angular_relatedness(V{1, 2}, V{-1, -2}) - 0.0) <= 1e-9);
}

TEST_CASE("angular relatedness of a vector with itself is exactly 1") {
  gen::Rng rng(31);
  for (int i = 0; i < 500; ++i) {
    auto v = rng.nonzero_vector(1 + rng.index(300));
    CHECK(kwsense::angular_relatedness(v, v) == 1.0);
  }
}

TEST_CASE("angular relatedness is symmetric, bounded and scale invariant") {
  gen::Rng rng(32);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t dim = 1 + rng.index(64);
    auto a = rng.nonzero_vector(dim);
    auto b = rng.nonzero_vector(dim);
    const double r = kwsense::angular_relatedness(a, b);
    CHECK(r >= 0.0);
    CHECK(r <= 1.0);
    CHECK(std::fabs(r - kwsense::angular_relatedness(b, a)) <= kTol);
    auto sa = a;
    auto sb = b;
    const double la = std::exp(rng.uniform(-5, 5));
    const double lb = std::exp(rng.uniform(-5, 5));
    for (double& x : sa) x *= la;
    for (double& x : sb) x *= lb;
    CHECK(std::fabs(r - kwsense::angular_relatedness(sa, sb)) <= kTol);
  }
}

TEST_CASE("angular relatedness agrees with the wedge-product angle") {
  gen::Rng rng(33);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t dim = 2 + rng.index(50);
    auto a = rng.nonzero_vector(dim);
    auto b = rng.nonzero_vector(dim);
    CHECK(std::fabs(kwsense::angular_relatedness(a, b) - oracle::angular(a, b)) <= 1e-12);
  }
}

TEST_CASE("word relatedness examples") {
  auto m = circle({{"sea", 0.0}, {"island", 0.25}});
  CHECK(*kwsense::rel_words(m, "sea", "sea") == 1.0);
  CHECK(std::fabs(*kwsense::rel_words(m, "sea", "island") - 0.75) <= kTol);
  CHECK_FALSE(kwsense::rel_words(m, "qzx", "sea").has_value());
  CHECK_FALSE(kwsense::rel_words(m, "sea", "").has_value());
}

TEST_CASE("level-0 sense relatedness") {
  auto m = circle({{"sea", 0.0}, {"island", 0.25}, {"x", 0.0}, {"y", 0.2}});
  CHECK(std::fabs(*kwsense::rel0_senses(m, sense("a", {"x"}), sense("b", {"y"})) - 0.8) <= kTol);
  CHECK(std::fabs(*kwsense::rel0_senses(m, sense("a", {"sea"}), sense("b", {"island", "sea"})) -
                  0.875) <= kTol);
  CHECK_FALSE(kwsense::rel0_senses(m, sense("a", {"qq"}), sense("b", {"zz", "ww"})).has_value());
  // Missing pairs shrink the denominator rather than count as zero.
  CHECK(std::fabs(*kwsense::rel0_senses(m, sense("a", {"sea", "qq"}), sense("b", {"island"})) -
                  0.75) <= kTol);
}

TEST_CASE("level-1 sense relatedness") {
  auto m = circle({{"p", 0.0}, {"q", 0.1}, {"r", 0.4}, {"a", 0.9}, {"b", 0.9}});
  Lexicon lex({sense("h1", {"p"}), sense("h2", {"q"}), sense("h3", {"r"}),
               sense("sa", {"a"}, {ContextRef::sense("h1"), ContextRef::sense("h2")}),
               sense("sb", {"b"}, {ContextRef::sense("h3")}),
               sense("sc", {"a"}, {})});
  // rel0(h1,h3) = 0.6, rel0(h2,h3) = 0.7
  CHECK(std::fabs(*kwsense::rel1_senses(m, lex, *lex.find("sa"), *lex.find("sb")) - 0.65) <= kTol);
  CHECK_FALSE(kwsense::rel1_senses(m, lex, *lex.find("sc"), *lex.find("sb")).has_value());
  // Labels act as single-synonym pseudo-senses.
  Sense la = sense("la", {"a"}, {ContextRef::label("p")});
  Sense lb = sense("lb", {"b"}, {ContextRef::label("r")});
  CHECK(std::fabs(*kwsense::rel1_senses(m, lex, la, lb) - 0.6) <= kTol);
}

TEST_CASE("combined sense relatedness") {
  auto m = circle({{"x", 0.0}, {"y", 0.2}, {"p", 0.0}, {"q", 0.6}});
  Lexicon lex;
  Sense a = sense("a", {"x"}, {ContextRef::label("p")});
  Sense b = sense("b", {"y"}, {ContextRef::label("q")});
  kwsense::RelWeights w;
  CHECK(std::fabs(kwsense::rel_senses(m, lex, a, b, w) - 0.6) <= kTol);
  Sense bare = sense("bare", {"y"});
  CHECK(std::fabs(kwsense::rel_senses(m, lex, a, bare, w) - 0.8) <= kTol);
  CHECK(kwsense::rel_senses(m, lex, a, a, w) == 1.0);
  CHECK(std::fabs(kwsense::rel_senses(m, lex, a, b, kwsense::RelWeights::from_w0(1.0)) - 0.8) <= kTol);
  CHECK_THROWS_AS(kwsense::rel_senses(m, lex, sense("u", {"zz"}), sense("v", {"ww"}), w),
                  kwsense::DomainError);
  CHECK_FALSE(kwsense::try_rel_senses(m, lex, sense("u", {"zz"}), sense("v", {"ww"}), w).has_value());
}

TEST_CASE("sense-word relatedness") {
  auto m = circle({{"s", 0.0}, {"s2", 0.5}, {"w", 0.2}, {"h", 0.5}, {"h2", 0.3}, {"v", 0.0}});
  Lexicon lex;
  kwsense::RelWeights w;
  Sense single = sense("t1", {"s"});
  CHECK(std::fabs(*kwsense::rel0_sense_word(m, single, "w") - 0.8) <= kTol);
  // Two synonyms at relatedness 0.8 and 0.9 with "w": mean.
  Sense two = sense("t2", {"s", "h2"});
  CHECK(std::fabs(*kwsense::rel0_sense_word(m, two, "w") - 0.85) <= kTol);
  CHECK_FALSE(kwsense::rel0_sense_word(m, single, "qzx").has_value());

  Sense with_oc = sense("t3", {"v"}, {ContextRef::label("h")});
  CHECK(std::fabs(*kwsense::rel1_sense_word(m, lex, with_oc, "v") - 0.5) <= kTol);
  CHECK_FALSE(kwsense::rel1_sense_word(m, lex, single, "v").has_value());
  Sense two_oc = sense("t4", {"v"}, {ContextRef::label("h"), ContextRef::label("h2")});
  CHECK(std::fabs(*kwsense::rel1_sense_word(m, lex, two_oc, "v") - 0.6) <= kTol);

  // rel0 = 1.0, rel1 = 0.5 -> 0.75
  CHECK(std::fabs(kwsense::rel_sense_word(m, lex, with_oc, "v", w) - 0.75) <= kTol);
  // rel1 missing, rel0 = 0.8 -> 0.8
  CHECK(std::fabs(kwsense::rel_sense_word(m, lex, single, "w", w) - 0.8) <= kTol);
  CHECK_THROWS_AS(kwsense::rel_sense_word(m, lex, single, "qzx", w), kwsense::DomainError);
}

TEST_CASE("weights must be nonnegative and sum to one") {
  CHECK_NOTHROW(kwsense::RelWeights{}.check());
  CHECK_NOTHROW(kwsense::RelWeights::from_w0(0.3).check());
  CHECK_THROWS_AS((kwsense::RelWeights{0.7, 0.7}.check()), kwsense::ConfigError);
  CHECK_THROWS_AS((kwsense::RelWeights{-0.1, 1.1}.check()), kwsense::ConfigError);
  CHECK_THROWS_AS(kwsense::RelWeights::from_w0(1.5), kwsense::ConfigError);
}

TEST_CASE("toy fixture: sense relatedness matches the brute-force expansion") {
  const auto& m = fixture::toy_model();
  const auto& lex = fixture::java_lexicon();
  const auto om = oracle::copy_model(m);
  for (double w0 : {0.0, 0.3, 0.5, 1.0}) {
    auto w = kwsense::RelWeights::from_w0(w0);
    for (const Sense& t : lex.senses()) {
      for (const std::string& word : m.tokens()) {
        auto got = kwsense::try_rel_sense_word(m, lex, t, word, w);
        auto want = oracle::rel_sw(om, t, word, lex.senses(), w.w0, w.w1);
        REQUIRE(got.has_value() == want.has_value());
        if (got) CHECK(std::fabs(*got - *want) <= 1e-10);
      }
      for (const Sense& u : lex.senses()) {
        auto got = kwsense::try_rel_senses(m, lex, t, u, w);
        auto want = oracle::rel_ss(om, t, u, lex.senses(), w.w0, w.w1);
        REQUIRE(got.has_value() == want.has_value());
        if (got) CHECK(std::fabs(*got - *want) <= 1e-10);
      }
    }
  }
}

TEST_CASE("island sense of java is closer to indonesia than the other senses") {
  const auto& m = fixture::toy_model();
  const auto& lex = fixture::java_lexicon();
  kwsense::RelWeights w;
  const double island = kwsense::rel_sense_word(m, lex, *lex.find("java#island"), "indonesia", w);
  CHECK(island > kwsense::rel_sense_word(m, lex, *lex.find("java#coffee"), "indonesia", w));
  CHECK(island > kwsense::rel_sense_word(m, lex, *lex.find("java#language"), "indonesia", w));
}
