// Copyright 2026 The majill Authors
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

#include <sstream>
#include <string>

#include "majill/analysis.h"

namespace majill {
namespace {

constexpr const char* kSchema = "majill.report/1";

std::string color_name(Color c) { return c == Color::kRed ? "red" : "blue"; }

}  // namespace

nlohmann::json to_json(const AgentStatus& s) {
  nlohmann::json j;
  j["color"] = color_name(s.own_color);
  j["local_winner"] = to_string(s.local_winner);
  j["global_winner"] = to_string(s.global_winner);
  j["opposition"] = to_string(s.opposition);
  j["illusion"] = to_string(s.illusion);
  j["illusion_color"] =
      s.illusion_color ? nlohmann::json(color_name(*s.illusion_color))
                       : nlohmann::json(nullptr);
  j["isolated"] = s.isolated;
  return j;
}

nlohmann::json to_json(const NetworkIllusionReport& r) {
  nlohmann::json j;
  j["schema"] = kSchema;
  j["n"] = r.n;
  j["global_winner"] = to_string(r.global_winner);
  j["counts"] = {{"strict", r.strict_count},
                 {"weak_only", r.weak_only_count},
                 {"none", r.none_count}};
  nlohmann::json flags = nlohmann::json::object();
  for (NetworkIllusion kind : kAllNetworkIllusions) {
    flags[std::string(to_string(kind))] = r.flag(kind);
  }
  j["flags"] = flags;
  j["chromaticity"] = to_string(r.chromaticity);
  j["isolated_nodes"] = r.isolated_nodes;
  nlohmann::json agents = nlohmann::json::array();
  for (std::size_t i = 0; i < r.agents.size(); ++i) {
    nlohmann::json a = to_json(r.agents[i]);
    a["node"] = i;
    agents.push_back(std::move(a));
  }
  j["agents"] = std::move(agents);
  return j;
}

nlohmann::json to_json(const PqReport& r) {
  nlohmann::json j;
  j["schema"] = kSchema;
  j["n"] = r.n;
  j["p"] = r.p.to_string();
  j["q"] = r.q.to_string();
  j["counts"] = {{"q", r.q_count}, {"weak_q", r.weak_q_count}};
  j["flags"] = {{"p-q", r.p_q},
                {"weak-p-q", r.weak_p_q},
                {"p-weak-q", r.p_weak_q},
                {"weak-p-weak-q", r.weak_p_weak_q}};
  j["chromaticity"] = {{"q", to_string(r.q_chromaticity)},
                       {"weak_q", to_string(r.weak_q_chromaticity)}};
  return j;
}

std::string to_text(const NetworkIllusionReport& r) {
  std::ostringstream out;
  out << "n " << r.n << "\n";
  out << "global_winner " << to_string(r.global_winner) << "\n";
  out << "counts strict=" << r.strict_count << " weak_only=" << r.weak_only_count
      << " none=" << r.none_count << "\n";
  for (NetworkIllusion kind : kAllNetworkIllusions) {
    out << "flag " << to_string(kind) << " " << (r.flag(kind) ? "yes" : "no")
        << "\n";
  }
  out << "chromaticity " << to_string(r.chromaticity) << "\n";
  if (!r.isolated_nodes.empty()) {
    out << "isolated_nodes";
    for (NodeId i : r.isolated_nodes) out << " " << i;
    out << "\n";
  }
  out << "# node color local global opposition illusion illusion_color\n";
  for (std::size_t i = 0; i < r.agents.size(); ++i) {
    const AgentStatus& s = r.agents[i];
    out << "agent " << i << " " << color_name(s.own_color) << " "
        << to_string(s.local_winner) << " " << to_string(s.global_winner) << " "
        << to_string(s.opposition) << " " << to_string(s.illusion) << " "
        << (s.illusion_color ? color_name(*s.illusion_color) : "-") << "\n";
  }
  return out.str();
}

std::string to_text(const PqReport& r) {
  std::ostringstream out;
  out << "p " << r.p.to_string() << " q " << r.q.to_string() << "\n";
  out << "counts q=" << r.q_count << " weak_q=" << r.weak_q_count << "\n";
  out << "flag p-q " << (r.p_q ? "yes" : "no") << "\n";
  out << "flag weak-p-q " << (r.weak_p_q ? "yes" : "no") << "\n";
  out << "flag p-weak-q " << (r.p_weak_q ? "yes" : "no") << "\n";
  out << "flag weak-p-weak-q " << (r.weak_p_weak_q ? "yes" : "no") << "\n";
  out << "chromaticity q=" << to_string(r.q_chromaticity)
      << " weak_q=" << to_string(r.weak_q_chromaticity) << "\n";
  return out.str();
}

}  // namespace majill
