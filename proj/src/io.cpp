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

#include "nmg/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace nmg {

namespace {

using json = nlohmann::json;

Rational alpha_from_json(const json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  throw FormatError("\"alpha\" must be a string \"P/Q\" or an integer");
}

}  // namespace

ProfileDocument parse_profile_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("profile is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("profile must be a JSON object");
  for (const char* key : {"n", "alpha", "strategies"}) {
    if (!doc.contains(key)) throw FormatError(std::string("profile lacks field \"") + key + "\"");
  }
  if (!doc["n"].is_number_unsigned()) throw FormatError("\"n\" must be a positive integer");
  const auto n = doc["n"].get<std::size_t>();
  const auto& raw = doc["strategies"];
  if (!raw.is_array() || raw.size() != n) {
    throw FormatError("\"strategies\" must be an array with n entries");
  }
  std::vector<Strategy> strategies;
  strategies.reserve(n);
  for (const auto& entry : raw) {
    if (!entry.is_array()) throw FormatError("each strategy must be an array of node ids");
    Strategy s;
    for (const auto& t : entry) {
      if (!t.is_number_integer()) throw FormatError("node ids must be integers");
      s.push_back(t.get<NodeId>());
    }
    strategies.push_back(std::move(s));
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const auto& l = doc["labels"];
    if (!l.is_array() || l.size() != n) throw FormatError("\"labels\" must have n entries");
    for (const auto& name : l) {
      if (!name.is_string()) throw FormatError("labels must be strings");
      labels.push_back(name.get<std::string>());
    }
  }
  try {
    return ProfileDocument{GameConfig(n, alpha_from_json(doc["alpha"])),
                           StrategyProfile(std::move(strategies)), std::move(labels)};
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("invalid profile: ") + e.what());
  }
}

std::string write_profile_document(const ProfileDocument& doc) {
  check_compatible(doc.profile, doc.config);
  std::ostringstream out;
  out << "{\n";
  out << "  \"n\": " << doc.config.n() << ",\n";
  out << "  \"alpha\": \"" << to_string(doc.config.alpha()) << "\",\n";
  out << "  \"strategies\": [\n";
  const auto strategies = doc.profile.strategies();
  for (std::size_t u = 0; u < strategies.size(); ++u) {
    out << "    [";
    for (std::size_t i = 0; i < strategies[u].size(); ++i) {
      if (i > 0) out << ", ";
      out << strategies[u][i];
    }
    out << "]" << (u + 1 < strategies.size() ? "," : "") << "\n";
  }
  out << "  ]";
  if (!doc.labels.empty()) {
    if (doc.labels.size() != doc.config.n()) {
      throw ValidationError("label count does not match n");
    }
    out << ",\n  \"labels\": [\n";
    for (std::size_t u = 0; u < doc.labels.size(); ++u) {
      out << "    " << json(doc.labels[u]).dump() << (u + 1 < doc.labels.size() ? "," : "")
          << "\n";
    }
    out << "  ]";
  }
  out << "\n}\n";
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write file '" + path.string() + "'");
  out << text;
}

ProfileDocument read_profile_file(const std::filesystem::path& path) {
  return parse_profile_document(read_text_file(path));
}

void write_profile_file(const std::filesystem::path& path, const ProfileDocument& doc) {
  write_text_file(path, write_profile_document(doc));
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t n = 0;
  bool have_n = false;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    const std::string where = "edge list line " + std::to_string(line_no) + ": ";
    if (!have_n) {
      long long count = 0;
      if (first != "n" || !(fields >> count) || count <= 0) {
        throw FormatError(where + "expected 'n <node count>' before any edge");
      }
      n = static_cast<std::size_t>(count);
      have_n = true;
      continue;
    }
    long long u = 0, v = 0;
    std::string rest;
    try {
      u = std::stoll(first);
    } catch (const std::exception&) {
      throw FormatError(where + "expected two node ids");
    }
    if (!(fields >> v) || (fields >> rest)) throw FormatError(where + "expected two node ids");
    edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
  }
  if (!have_n) throw FormatError("edge list lacks the 'n <node count>' line");
  try {
    return Graph(n, edges);
  } catch (const ValidationError& e) {
    throw FormatError(std::string("invalid edge list: ") + e.what());
  }
}

Graph read_edge_list_file(const std::filesystem::path& path) {
  return parse_edge_list(read_text_file(path));
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.size() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

std::string to_dot(const StrategyProfile& profile, const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << "digraph profile {\n";
  for (std::size_t u = 0; u < profile.size(); ++u) {
    out << "  " << u;
    if (!labels.empty()) out << " [label=" << json(labels.at(u)).dump() << "]";
    out << ";\n";
  }
  for (std::size_t u = 0; u < profile.size(); ++u) {
    for (NodeId v : profile.strategy(static_cast<NodeId>(u))) {
      out << "  " << u << " -> " << v << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace nmg
