#ifndef GRAPHSUM_GRAPH_HPP_
#define GRAPHSUM_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "graphsum/ner.hpp"
#include "graphsum/textprep.hpp"

namespace graphsum {

enum class NodeKind { kSentence, kEntity };

// Sentence nodes order before entity nodes; ties break by ordinal.
struct NodeId {
  NodeKind kind = NodeKind::kSentence;
  int ordinal = 0;

  auto operator<=>(const NodeId &) const = default;
  bool operator==(const NodeId &) const = default;
};

inline NodeId sentence_node(int index) { return {NodeKind::kSentence, index}; }
inline NodeId entity_node(int ordinal) { return {NodeKind::kEntity, ordinal}; }

// "sentence:3" / "entity:0"
std::string to_string(NodeId id);

struct Edge {
  NodeId u;  // u < v
  NodeId v;
  double weight = 0.0;

  bool operator==(const Edge &) const = default;
};

struct GraphConfig {
  double sentence_similarity_threshold = 0.0;
  double entity_edge_scale = 1.0;
  double cooccurrence_scale = 1.0;

  void validate() const;
};

/// Weighted undirected graph over sentence and entity nodes. Nodes are kept
/// in ascending NodeId order and algorithms address them by that position.
class TextGraph {
 public:
  struct Neighbor {
    std::size_t index;
    double weight;
  };

  TextGraph() = default;
  // Throws on duplicate nodes, dangling endpoints, self-loops, repeated
  // pairs or non-positive weights. Edge endpoints may be given in any order.
  TextGraph(std::vector<NodeId> nodes, std::vector<Edge> edges);

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<NodeId> &nodes() const { return nodes_; }
  const NodeId &node(std::size_t i) const { return nodes_[i]; }
  // Sorted by (u, v).
  const std::vector<Edge> &edges() const { return edges_; }

  std::optional<std::size_t> index_of(NodeId id) const;
  std::span<const Neighbor> neighbors(std::size_t i) const { return adjacency_[i]; }
  // Sum of incident edge weights.
  double strength(std::size_t i) const { return strength_[i]; }
  // 0 when the pair is not connected.
  double weight(NodeId a, NodeId b) const;

  // One `kind:ordinal<TAB>kind:ordinal<TAB>weight` line per edge.
  std::string to_edge_list() const;

 private:
  std::vector<NodeId> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<double> strength_;
};

// Overlap of the lemma sets, |A ∩ B| / (log(2+|A|) + log(2+|B|)), divided by
// the largest value the same pair sizes could reach. 0 if either set is empty.
double lemma_set_similarity(const std::set<std::string> &a, const std::set<std::string> &b);
double sentence_similarity(const Sentence &a, const Sentence &b);

// Nodes: every sentence with at least one token, plus every entity with a
// mention in such a sentence. Edges: sentence-sentence similarity above the
// threshold, sentence-entity mention counts, entity-entity co-occurrence
// counts (number of shared sentences).
TextGraph build_graph(const std::vector<Sentence> &sentences, const std::vector<Entity> &entities,
                      const GraphConfig &config);

}  // namespace graphsum

#endif  // GRAPHSUM_GRAPH_HPP_
