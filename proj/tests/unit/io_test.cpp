// Copyright 2026 The nmg Authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nmg/constructions.hpp"
#include "nmg/io.hpp"
#include "oracle.hpp"

using namespace nmg;

TEST_CASE("profile document layout") {
  const ProfileDocument doc{GameConfig(3, Rational(3, 2)), StrategyProfile({{1, 2}, {}, {0}}), {}};
  const std::string text = write_profile_document(doc);
  CHECK(text ==
        "{\n"
        "  \"n\": 3,\n"
        "  \"alpha\": \"3/2\",\n"
        "  \"strategies\": [\n"
        "    [1, 2],\n"
        "    [],\n"
        "    [0]\n"
        "  ]\n"
        "}\n");
  const ProfileDocument back = parse_profile_document(text);
  CHECK(back.config.n() == 3);
  CHECK(back.config.alpha() == Rational(3, 2));
  CHECK(back.profile == doc.profile);
  CHECK(back.labels.empty());
}

TEST_CASE("canonical files round trip byte for byte") {
  for (ConstructionId id : all_constructions()) {
    const Construction c = build(id, 4, Rational(7, 2));
    const ProfileDocument doc{GameConfig(c.profile.size(), Rational(7, 2)), c.profile, c.labels};
    const std::string text = write_profile_document(doc);
    CHECK(write_profile_document(parse_profile_document(text)) == text);
  }
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    const ProfileDocument doc{GameConfig(n, Rational(1 + static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 3))),
                              oracle::random_profile(rng, n, 0.3), {}};
    const std::string text = write_profile_document(doc);
    CHECK(write_profile_document(parse_profile_document(text)) == text);
  }
}

TEST_CASE("lenient input is normalised") {
  const auto doc = parse_profile_document(R"({"n": 3, "alpha": 2, "strategies": [[2, 1], [], []]})");
  CHECK(doc.config.alpha() == 2);
  CHECK(doc.profile.strategy(0) == Strategy{1, 2});
}

TEST_CASE("bad documents are rejected") {
  CHECK_THROWS(parse_profile_document("not json"));
  CHECK_THROWS(parse_profile_document(R"({"n": 2, "alpha": "1", "strategies": [[1]]})"));
  CHECK_THROWS(parse_profile_document(R"({"n": 2, "alpha": 1.5, "strategies": [[1], []]})"));
  CHECK_THROWS(parse_profile_document(R"({"n": 2, "alpha": "0", "strategies": [[1], []]})"));
  CHECK_THROWS(parse_profile_document(R"({"n": 2, "alpha": "1", "strategies": [[0], []]})"));
  CHECK_THROWS(parse_profile_document(R"({"n": 2, "alpha": "1", "strategies": [[5], []]})"));
  CHECK_THROWS(parse_profile_document(R"({"n": 2, "strategies": [[1], []]})"));
  CHECK_THROWS(parse_profile_document(R"({"n": 2, "alpha": "1", "strategies": [[1], []], "labels": ["a"]})"));
}

TEST_CASE("edge lists") {
  const Graph g = parse_edge_list("# a path\nn 4\n0 1\n1 2  # middle\n\n2 3\n");
  CHECK(g.size() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(parse_edge_list(write_edge_list(g)) == g);
  CHECK_THROWS(parse_edge_list("0 1\n"));
  CHECK_THROWS(parse_edge_list("n 2\n0 5\n"));
  CHECK_THROWS(parse_edge_list("n 2\n0 x\n"));
}

TEST_CASE("files") {
  const auto dir = std::filesystem::temp_directory_path() / "nmg_io_test";
  std::filesystem::create_directories(dir);
  const Construction c = build_lmr(3);
  const ProfileDocument doc{GameConfig(9, Rational(1)), c.profile, c.labels};
  write_profile_file(dir / "lmr.json", doc);
  const auto back = read_profile_file(dir / "lmr.json");
  CHECK(back.profile == c.profile);
  CHECK(back.labels == c.labels);
  CHECK_THROWS(read_profile_file(dir / "missing.json"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("dot output") {
  const Construction c = build_small(ConstructionId::Cycle4);
  const std::string dot = to_dot(c.profile, c.labels);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("v1") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '>') == 4);
}
