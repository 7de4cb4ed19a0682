#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alleyflow/errors.hpp"
#include "alleyflow/matrix.hpp"

namespace alleyflow {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// A node sits mid-alley; coordinates are map meters.
struct Node {
  std::string id;
  double x = 0.0;
  double y = 0.0;
};

// An alley between two nodes. Two-way unless one_way is set (cashier
// lanes are the one-way case).
struct Link {
  std::string from;
  std::string to;
  bool one_way = false;
};

// Build errors carry the index of the offending input record so file
// loaders can map them back to source rows.
struct GraphError : Error {
  GraphError(const std::string& msg, std::size_t record)
      : Error(msg), record_index(record) {}
  std::size_t record_index;
};
struct DuplicateNodeId : GraphError {
  using GraphError::GraphError;
};
struct InvalidNodeId : GraphError {
  using GraphError::GraphError;
};
struct NonFiniteCoordinate : GraphError {
  using GraphError::GraphError;
};
struct UnknownEndpoint : GraphError {
  using GraphError::GraphError;
};
struct SelfLoop : GraphError {
  using GraphError::GraphError;
};
struct DuplicateLink : GraphError {
  using GraphError::GraphError;
};
struct EmptyGraph : Error {
  using Error::Error;
};

// Immutable walkway network. Node order (matrix row order) is input
// order. A is the 0/1 adjacency matrix; D holds Euclidean link lengths in
// meters with +inf marking unconnected pairs and a zero diagonal. Safe
// for concurrent reads once built.
class WalkwayGraph {
public:
  std::size_t node_count() const { return nodes_.size(); }
  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(std::size_t i) const { return nodes_[i]; }
  const std::vector<Link>& links() const { return links_; }

  std::optional<std::size_t> index_of(std::string_view id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  const Matrix<std::uint8_t>& adjacency() const { return adj_; }
  const Matrix<double>& distances() const { return dist_; }

  bool has_link(std::size_t from, std::size_t to) const {
    return adj_(from, to) != 0;
  }

  // Directed (from, to) index pairs after two-way expansion, in input order.
  const std::vector<std::pair<std::size_t, std::size_t>>& directed_links() const {
    return directed_;
  }

  // Undirected node-index pairs (i < j), sorted; one entry per alley.
  const std::vector<std::pair<std::size_t, std::size_t>>& alleys() const {
    return alleys_;
  }

  std::vector<std::string> node_ids() const;

private:
  friend WalkwayGraph build_graph(std::vector<Node> nodes, std::vector<Link> links);
  WalkwayGraph() = default;

  std::vector<Node> nodes_;
  std::vector<Link> links_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<std::pair<std::size_t, std::size_t>> directed_;
  std::vector<std::pair<std::size_t, std::size_t>> alleys_;
  Matrix<std::uint8_t> adj_;
  Matrix<double> dist_;
};

// Validates the inputs and derives A and D. Two-way links expand into both
// directed entries; link length is the Euclidean distance between the
// endpoint coordinates.
WalkwayGraph build_graph(std::vector<Node> nodes, std::vector<Link> links);

}  // namespace alleyflow
