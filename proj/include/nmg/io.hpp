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

#ifndef NMG_IO_HPP
#define NMG_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "nmg/game.hpp"

namespace nmg {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Contents of a profile file. `labels` is either empty or holds one
/// human-readable name per node id.
struct ProfileDocument {
  GameConfig config;
  StrategyProfile profile;
  std::vector<std::string> labels;
};

// Profile file format (JSON):
//
//   {
//     "n": 6,
//     "alpha": "2",
//     "strategies": [
//       [1],
//       [],
//       [0, 3]
//     ],
//     "labels": [
//       "v1",
//       ...
//     ]
//   }
//
// "alpha" is a string "P/Q" or an integer (string or JSON number); floats are
// rejected. "labels" is optional. write_profile_document emits exactly this
// layout (two-space indent, one strategy per line, sorted targets, trailing
// newline), so canonical files round-trip byte for byte.
ProfileDocument parse_profile_document(std::string_view text);
std::string write_profile_document(const ProfileDocument& doc);

ProfileDocument read_profile_file(const std::filesystem::path& path);
void write_profile_file(const std::filesystem::path& path, const ProfileDocument& doc);

// Edge-list graph format:
//
//   # comment
//   n 5
//   0 1
//   1 2
//
// The "n" line comes first; each following line is one undirected edge with
// 0-based endpoints. Blank lines and '#' comments are ignored.
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::filesystem::path& path);
std::string write_edge_list(const Graph& g);

/// Graphviz text for external rendering. Bought edges are drawn as arcs
/// from buyer to target.
/// Graphviz text; each edge points from its buyer to its target.
std::string to_dot(const StrategyProfile& profile, const std::vector<std::string>& labels = {});

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace nmg

#endif  // NMG_IO_HPP
