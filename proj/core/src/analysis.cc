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

#include "majill/analysis.h"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <string>

#include "majill/errors.h"

namespace majill {
namespace {

constexpr unsigned kRedBit = 1;
constexpr unsigned kBlueBit = 2;

struct Counts {
  std::uint64_t local_red;
  std::uint64_t degree;
  std::uint64_t global_red;
  std::uint64_t n;
};

Counts counts_at(const ColoredGraph& cg, NodeId i, std::size_t global_red) {
  return {cg.red_neighbors(i), cg.graph().degree(i), global_red, cg.size()};
}

Counts counts_at(const ColoredGraph& cg, NodeId i) {
  return counts_at(cg, i, cg.red_count());
}

// Bitmask of colors witnessing a (weak) q-illusion at one node.
unsigned witnesses(const Counts& c, const Threshold& q, bool weak) {
  unsigned mask = 0;
  const std::uint64_t local[2] = {c.local_red, c.degree - c.local_red};
  const std::uint64_t global[2] = {c.global_red, c.n - c.global_red};
  for (int x = 0; x < 2; ++x) {
    const int loc = q.compare_fraction(local[x], c.degree);
    const int glob = q.compare_fraction(global[x], c.n);
    const bool hit = weak ? (loc >= 0 && glob <= 0 && !(loc == 0 && glob == 0))
                          : (loc > 0 && glob < 0);
    if (hit) mask |= x == 0 ? kRedBit : kBlueBit;
  }
  return mask;
}

std::optional<Color> first_witness(unsigned mask) {
  if (mask & kRedBit) return Color::kRed;
  if (mask & kBlueBit) return Color::kBlue;
  return std::nullopt;
}

Chromaticity chromaticity_of(const std::vector<unsigned>& masks) {
  unsigned common = kRedBit | kBlueBit;
  for (unsigned m : masks) {
    if (m != 0) common &= m;
  }
  return common != 0 ? Chromaticity::kMonochromatic
                     : Chromaticity::kPolychromatic;
}

// Sign of count/n - p, used for the "more than / at least a p fraction of
// the agents" comparisons.
bool more_than(const Threshold& p, std::size_t count, std::size_t n) {
  return p.compare_fraction(count, n) > 0;
}
bool at_least(const Threshold& p, std::size_t count, std::size_t n) {
  return p.compare_fraction(count, n) >= 0;
}

}  // namespace

Threshold::Threshold(std::uint64_t numerator, std::uint64_t denominator)
    : numerator_(numerator), denominator_(denominator) {
  if (denominator == 0) throw InvalidInput("threshold denominator is zero");
  if (numerator > denominator) {
    throw InvalidInput("threshold " + to_string() + " exceeds 1");
  }
}

Threshold Threshold::parse(std::string_view text) {
  auto parse_int = [&](std::string_view part, std::size_t offset) {
    std::uint64_t value = 0;
    const auto* end = part.data() + part.size();
    auto [ptr, ec] = std::from_chars(part.data(), end, value);
    if (ec != std::errc() || ptr != end || part.empty()) {
      throw ParseError(0, offset,
                       "expected a nonnegative integer in threshold '" +
                           std::string(text) + "'");
    }
    return value;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Threshold(parse_int(text, 1), 1);
  const auto num = parse_int(text.substr(0, slash), 1);
  const auto den = parse_int(text.substr(slash + 1), slash + 2);
  return Threshold(num, den);
}

int Threshold::compare_fraction(std::uint64_t count, std::uint64_t total) const {
  const std::uint64_t lhs = count * denominator_;
  const std::uint64_t rhs = numerator_ * total;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

bool Threshold::operator==(const Threshold& other) const {
  return numerator_ * other.denominator_ == other.numerator_ * denominator_;
}

bool Threshold::operator<(const Threshold& other) const {
  return numerator_ * other.denominator_ < other.numerator_ * denominator_;
}

std::string Threshold::to_string() const {
  return std::to_string(numerator_) + "/" + std::to_string(denominator_);
}

std::string_view to_string(Level level) {
  switch (level) {
    case Level::kNone:
      return "none";
    case Level::kWeak:
      return "weak";
    case Level::kStrict:
      return "strict";
  }
  return "none";
}

std::string_view to_string(NetworkIllusion kind) {
  switch (kind) {
    case NetworkIllusion::kMajorityMajority:
      return "majority-majority";
    case NetworkIllusion::kWeakMajorityMajority:
      return "weak-majority-majority";
    case NetworkIllusion::kMajorityWeakMajority:
      return "majority-weak-majority";
    case NetworkIllusion::kWeakMajorityWeakMajority:
      return "weak-majority-weak-majority";
    case NetworkIllusion::kUnanimityMajority:
      return "unanimity-majority";
    case NetworkIllusion::kUnanimityWeakMajority:
      return "unanimity-weak-majority";
  }
  return "";
}

std::optional<NetworkIllusion> parse_network_illusion(std::string_view name) {
  for (NetworkIllusion kind : kAllNetworkIllusions) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

std::string_view to_string(Chromaticity c) {
  return c == Chromaticity::kMonochromatic ? "monochromatic" : "polychromatic";
}

AgentStatus classify_agent(Color own, Winner local, Winner global,
                           bool isolated) {
  AgentStatus s;
  s.own_color = own;
  s.local_winner = local;
  s.global_winner = global;
  s.isolated = isolated;

  if (local == Winner::kTie) {
    s.opposition = Level::kWeak;
  } else if (local != as_winner(own)) {
    s.opposition = Level::kStrict;
  }

  if (local != global) {
    const bool strict = local != Winner::kTie && global != Winner::kTie;
    s.illusion = strict ? Level::kStrict : Level::kWeak;
    if (local != Winner::kTie) {
      s.illusion_color = local == Winner::kRed ? Color::kRed : Color::kBlue;
    } else {
      s.illusion_color = global == Winner::kRed ? Color::kBlue : Color::kRed;
    }
  }
  return s;
}

AgentStatus agent_status(const ColoredGraph& cg, NodeId i) {
  return classify_agent(cg.color(i), local_winner(cg, i), global_winner(cg),
                        cg.graph().degree(i) == 0);
}

bool NetworkIllusionReport::flag(NetworkIllusion kind) const {
  switch (kind) {
    case NetworkIllusion::kMajorityMajority:
      return majority_majority;
    case NetworkIllusion::kWeakMajorityMajority:
      return weak_majority_majority;
    case NetworkIllusion::kMajorityWeakMajority:
      return majority_weak_majority;
    case NetworkIllusion::kWeakMajorityWeakMajority:
      return weak_majority_weak_majority;
    case NetworkIllusion::kUnanimityMajority:
      return unanimity_majority;
    case NetworkIllusion::kUnanimityWeakMajority:
      return unanimity_weak_majority;
  }
  return false;
}

NetworkIllusionReport classify_network(const ColoredGraph& cg) {
  NetworkIllusionReport r;
  r.n = cg.size();
  r.global_winner = global_winner(cg);
  r.agents.reserve(r.n);
  std::vector<unsigned> masks;
  for (NodeId i = 0; i < r.n; ++i) {
    AgentStatus s = classify_agent(cg.color(i), local_winner(cg, i),
                                   r.global_winner, cg.graph().degree(i) == 0);
    if (s.isolated) r.isolated_nodes.push_back(i);
    switch (s.illusion) {
      case Level::kStrict:
        ++r.strict_count;
        break;
      case Level::kWeak:
        ++r.weak_only_count;
        break;
      case Level::kNone:
        ++r.none_count;
        break;
    }
    if (s.illusion_color) {
      masks.push_back(*s.illusion_color == Color::kRed ? kRedBit : kBlueBit);
    }
    r.agents.push_back(s);
  }
  const std::size_t strict = r.strict_count;
  const std::size_t any = r.strict_count + r.weak_only_count;
  r.majority_majority = 2 * strict > r.n;
  r.weak_majority_majority = 2 * strict >= r.n && r.n > 0;
  r.majority_weak_majority = 2 * any > r.n;
  r.weak_majority_weak_majority = 2 * any >= r.n && r.n > 0;
  r.unanimity_majority = strict == r.n && r.n > 0;
  r.unanimity_weak_majority = any == r.n && r.n > 0;
  r.chromaticity = chromaticity_of(masks);
  return r;
}

std::optional<Color> q_illusion(const ColoredGraph& cg, NodeId i,
                                const Threshold& q) {
  return first_witness(witnesses(counts_at(cg, i), q, /*weak=*/false));
}

std::optional<Color> weak_q_illusion(const ColoredGraph& cg, NodeId i,
                                     const Threshold& q) {
  return first_witness(witnesses(counts_at(cg, i), q, /*weak=*/true));
}

PqReport pq_report(const ColoredGraph& cg, const Threshold& p,
                   const Threshold& q) {
  PqReport r;
  r.p = p;
  r.q = q;
  r.n = cg.size();
  std::vector<unsigned> strict_masks;
  std::vector<unsigned> weak_masks;
  const std::size_t global_red = cg.red_count();
  for (NodeId i = 0; i < r.n; ++i) {
    const Counts c = counts_at(cg, i, global_red);
    const unsigned s = witnesses(c, q, false);
    const unsigned w = witnesses(c, q, true);
    if (s) ++r.q_count;
    if (w) ++r.weak_q_count;
    strict_masks.push_back(s);
    weak_masks.push_back(w);
  }
  r.p_q = more_than(p, r.q_count, r.n);
  r.weak_p_q = at_least(p, r.q_count, r.n) && r.n > 0;
  r.p_weak_q = more_than(p, r.weak_q_count, r.n);
  r.weak_p_weak_q = at_least(p, r.weak_q_count, r.n) && r.n > 0;
  r.q_chromaticity = chromaticity_of(strict_masks);
  r.weak_q_chromaticity = chromaticity_of(weak_masks);

  const Threshold half = Threshold::half();
  if (!(half < q) && r.q_chromaticity == Chromaticity::kPolychromatic) {
    throw InternalInvariantError("polychromatic q-illusion with q <= 1/2");
  }
  if (q < half && r.weak_q_chromaticity == Chromaticity::kPolychromatic) {
    throw InternalInvariantError("polychromatic weak q-illusion with q < 1/2");
  }
  return r;
}

}  // namespace majill
