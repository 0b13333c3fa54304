#ifndef HOPMC_GRAPH_HPP
#define HOPMC_GRAPH_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hopmc/errors.hpp"

namespace hopmc {

using NodeId = int;
using EdgeId = int;
using HopDistance = int;

// Sentinel for "no path": larger than any hop count a finite graph can have.
inline constexpr HopDistance kUnreachable = std::numeric_limits<HopDistance>::max();

struct Edge {
  NodeId a = 0;
  NodeId b = 0;
  double reliability = 0.0;  // operation probability, in (0,1)
};

// Undirected network with dense 0-based node ids, an ordered edge list
// (edge id = position; parallel edges allowed, self-loops not), and a
// terminal set K of at least two distinct nodes.
class Network {
 public:
  struct Arc {
    NodeId to;
    EdgeId edge;
  };

  Network(int node_count, std::vector<Edge> edges, std::vector<NodeId> terminals);

  int node_count() const { return node_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<size_t>(e)]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<NodeId>& terminals() const { return terminals_; }
  std::span<const Arc> arcs(NodeId v) const {
    return {arcs_.data() + arc_start_[static_cast<size_t>(v)],
            arcs_.data() + arc_start_[static_cast<size_t>(v) + 1]};
  }

 private:
  int node_count_;
  std::vector<Edge> edges_;
  std::vector<NodeId> terminals_;
  // CSR-style adjacency over the full edge list.
  std::vector<Arc> arcs_;
  std::vector<int> arc_start_;
};

// State of every edge: up (operational) or down (failed).
struct Configuration {
  std::vector<std::uint8_t> up;

  Configuration() = default;
  explicit Configuration(int edge_count) : up(static_cast<size_t>(edge_count), 0) {}

  bool is_up(EdgeId e) const { return up[static_cast<size_t>(e)] != 0; }
  void set(EdgeId e, bool value) { up[static_cast<size_t>(e)] = value ? 1 : 0; }
  int size() const { return static_cast<int>(up.size()); }
};

// All edges up / a configuration whose up-set is exactly `subset`.
Configuration full_configuration(const Network& net);
Configuration configuration_from_subset(const Network& net, std::span<const EdgeId> subset);

// Reusable workspace so hot loops do not allocate.
struct BfsScratch {
  std::vector<HopDistance> dist;
  std::vector<NodeId> queue;
};

// Hop distances from source over the up-edges of x; kUnreachable where no path.
void bfs_distances(const Network& net, const Configuration& x, NodeId source,
                   BfsScratch& scratch);
std::vector<HopDistance> bfs_distances(const Network& net, const Configuration& x,
                                       NodeId source);

// Largest hop distance over all pairs of terminals (kUnreachable if any pair
// is disconnected).
HopDistance max_terminal_distance(const Network& net, const Configuration& x,
                                  BfsScratch& scratch);
HopDistance max_terminal_distance(const Network& net, const Configuration& x);

// True iff every terminal pair is within hop distance d of each other using
// only the active edges. No bound (nullopt) means plain connectivity.
bool is_d_connected(const Network& net, const Configuration& active,
                    std::optional<HopDistance> d);
bool is_d_connected(const Network& net, std::span<const EdgeId> active_subset,
                    std::optional<HopDistance> d);

}  // namespace hopmc

#endif
