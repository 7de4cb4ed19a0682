#include "alleyflow/graph.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <set>
#include <string>

namespace alleyflow {

namespace {

bool valid_token(std::string_view s) {
  if (s.empty()) return false;
  for (unsigned char c : s) {
    if (!std::isalnum(c)) return false;
  }
  return true;
}

std::string link_name(const Link& l) { return l.from + "-" + l.to; }

}  // namespace

std::vector<std::string> WalkwayGraph::node_ids() const {
  std::vector<std::string> ids;
  ids.reserve(nodes_.size());
  for (const Node& n : nodes_) ids.push_back(n.id);
  return ids;
}

WalkwayGraph build_graph(std::vector<Node> nodes, std::vector<Link> links) {
  if (nodes.empty()) throw EmptyGraph("graph has no nodes");

  WalkwayGraph g;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node& n = nodes[i];
    if (!valid_token(n.id)) {
      throw InvalidNodeId("node record " + std::to_string(i) + ": id '" + n.id +
                              "' is not a nonempty alphanumeric token",
                          i);
    }
    if (!std::isfinite(n.x) || !std::isfinite(n.y)) {
      throw NonFiniteCoordinate("node '" + n.id + "': coordinates must be finite", i);
    }
    if (!g.index_.emplace(n.id, i).second) {
      throw DuplicateNodeId("node '" + n.id + "' defined more than once", i);
    }
  }

  const std::size_t n = nodes.size();
  constexpr double kInf = std::numeric_limits<double>::infinity();
  g.adj_ = Matrix<std::uint8_t>(n, n, 0);
  g.dist_ = Matrix<double>(n, n, kInf);
  for (std::size_t i = 0; i < n; ++i) g.dist_(i, i) = 0.0;

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t li = 0; li < links.size(); ++li) {
    const Link& l = links[li];
    const auto from = g.index_.find(l.from);
    if (from == g.index_.end()) {
      throw UnknownEndpoint("link '" + link_name(l) + "': unknown node '" + l.from + "'", li);
    }
    const auto to = g.index_.find(l.to);
    if (to == g.index_.end()) {
      throw UnknownEndpoint("link '" + link_name(l) + "': unknown node '" + l.to + "'", li);
    }
    const std::size_t a = from->second;
    const std::size_t b = to->second;
    if (a == b) throw SelfLoop("link '" + link_name(l) + "' connects a node to itself", li);

    const double dx = nodes[a].x - nodes[b].x;
    const double dy = nodes[a].y - nodes[b].y;
    // std::sqrt is correctly rounded, unlike std::hypot on some libms;
    // keeps D reproducible across platforms.
    const double length = std::sqrt(dx * dx + dy * dy);

    const auto add_directed = [&](std::size_t s, std::size_t t) {
      if (!seen.emplace(s, t).second) {
        throw DuplicateLink("link '" + link_name(l) + "' duplicates the directed pair '" +
                                nodes[s].id + "-" + nodes[t].id + "'",
                            li);
      }
      g.adj_(s, t) = 1;
      g.dist_(s, t) = length;
      g.directed_.emplace_back(s, t);
    };
    add_directed(a, b);
    if (!l.one_way) add_directed(b, a);
  }

  std::set<std::pair<std::size_t, std::size_t>> alley_set;
  for (const auto& [s, t] : g.directed_) {
    alley_set.emplace(std::min(s, t), std::max(s, t));
  }
  g.alleys_.assign(alley_set.begin(), alley_set.end());

  g.nodes_ = std::move(nodes);
  g.links_ = std::move(links);
  return g;
}

}  // namespace alleyflow
