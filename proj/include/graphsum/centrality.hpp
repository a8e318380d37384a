#ifndef GRAPHSUM_CENTRALITY_HPP_
#define GRAPHSUM_CENTRALITY_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphsum/graph.hpp"

namespace graphsum {

enum class Algorithm { kPageRank, kHits, kCloseness, kDegree, kBetweenness, kClusters };

inline constexpr std::array<Algorithm, 6> kAllAlgorithms = {
    Algorithm::kPageRank, Algorithm::kHits,        Algorithm::kCloseness,
    Algorithm::kDegree,   Algorithm::kBetweenness, Algorithm::kClusters};

// Lowercase names: pagerank, hits, closeness, degree, betweenness, clusters.
std::string_view to_string(Algorithm algorithm);
// Case-insensitive; throws ConfigError listing the valid names.
Algorithm parse_algorithm(std::string_view name);

struct SolverConfig {
  double damping = 0.85;
  double tolerance = 1e-8;  // L1 change between iterations
  int max_iterations = 200;

  void validate() const;
};

/// Per-node scores, aligned with TextGraph::nodes().
struct ScoreVector {
  Algorithm algorithm = Algorithm::kPageRank;
  std::vector<NodeId> nodes;
  std::vector<double> scores;
  std::optional<int> iterations_used;
  std::optional<bool> converged;
  std::optional<std::vector<int>> communities;  // clusters only

  // Throws if `id` is not in the vector.
  double score(NodeId id) const;
  std::optional<int> community(NodeId id) const;
  // `algorithm<TAB>kind:ordinal<TAB>score` per node, in NodeId order.
  std::string dump() const;
};

// Weighted PageRank by power iteration. Nodes without edges redistribute
// their mass uniformly. Scores sum to 1.
ScoreVector pagerank(const TextGraph &g, const SolverConfig &cfg = {});

// Principal eigenvector of the adjacency matrix, reported as the authority
// vector of a hub/authority iteration. Each half-step multiplies by A + I,
// which has the same leading eigenvector as A but no sign-alternating
// partner on bipartite graphs. Unit Euclidean norm.
ScoreVector hits(const TextGraph &g, const SolverConfig &cfg = {});

// Harmonic closeness: sum of 1/dist over reachable nodes, edge length 1/weight.
ScoreVector closeness(const TextGraph &g);

// Weighted degree.
ScoreVector degree(const TextGraph &g);

// Brandes betweenness with edge length 1/weight; each unordered pair counted once.
ScoreVector betweenness(const TextGraph &g);

// Label propagation communities. A node's score is its edge weight inside
// its community times the community's share of all nodes.
ScoreVector cluster_scores(const TextGraph &g);

// Deterministic label propagation. Community ids are dense and numbered in
// order of each community's smallest node.
std::vector<int> label_propagation(const TextGraph &g, int max_sweeps = 100);

ScoreVector compute(Algorithm algorithm, const TextGraph &g, const SolverConfig &cfg = {});

}  // namespace graphsum

#endif  // GRAPHSUM_CENTRALITY_HPP_
