#include "graphsum/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>

#include "graphsum/error.hpp"

namespace graphsum {

namespace {

std::string format_weight(double w) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), w);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string to_string(NodeId id) {
  return (id.kind == NodeKind::kSentence ? "sentence:" : "entity:") + std::to_string(id.ordinal);
}

void GraphConfig::validate() const {
  if (!(sentence_similarity_threshold >= 0.0 && sentence_similarity_threshold < 1.0)) {
    throw ConfigError("graph", "sentence_similarity_threshold must lie in [0, 1)");
  }
  if (!(entity_edge_scale > 0.0) || !(cooccurrence_scale > 0.0)) {
    throw ConfigError("graph", "edge scales must be positive");
  }
}

TextGraph::TextGraph(std::vector<NodeId> nodes, std::vector<Edge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  std::sort(nodes_.begin(), nodes_.end());
  if (std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end()) {
    throw Error("graph", "duplicate node id");
  }
  for (const auto &n : nodes_) {
    if (n.ordinal < 0) throw Error("graph", "negative node ordinal");
  }
  for (auto &e : edges_) {
    if (e.u == e.v) throw Error("graph", "self-loop on " + to_string(e.u));
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw Error("graph", "edge weight must be positive and finite");
    }
    if (e.v < e.u) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge &a, const Edge &b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
      throw Error("graph", "parallel edge " + to_string(edges_[i].u) + " - " +
                               to_string(edges_[i].v));
    }
  }

  adjacency_.assign(nodes_.size(), {});
  strength_.assign(nodes_.size(), 0.0);
  for (const auto &e : edges_) {
    const auto a = index_of(e.u);
    const auto b = index_of(e.v);
    if (!a || !b) throw Error("graph", "edge references an unknown node");
    adjacency_[*a].push_back({*b, e.weight});
    adjacency_[*b].push_back({*a, e.weight});
    strength_[*a] += e.weight;
    strength_[*b] += e.weight;
  }
  for (auto &list : adjacency_) {
    std::sort(list.begin(), list.end(),
              [](const Neighbor &x, const Neighbor &y) { return x.index < y.index; });
  }
}

std::optional<std::size_t> TextGraph::index_of(NodeId id) const {
  const auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id);
  if (it == nodes_.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

double TextGraph::weight(NodeId a, NodeId b) const {
  const auto ia = index_of(a);
  const auto ib = index_of(b);
  if (!ia || !ib) return 0.0;
  const auto &list = adjacency_[*ia];
  const auto it = std::lower_bound(list.begin(), list.end(), *ib,
                                   [](const Neighbor &n, std::size_t i) { return n.index < i; });
  return it != list.end() && it->index == *ib ? it->weight : 0.0;
}

std::string TextGraph::to_edge_list() const {
  std::string out;
  for (const auto &e : edges_) {
    out += to_string(e.u);
    out += '\t';
    out += to_string(e.v);
    out += '\t';
    out += format_weight(e.weight);
    out += '\n';
  }
  return out;
}

double lemma_set_similarity(const std::set<std::string> &a, const std::set<std::string> &b) {
  if (a.empty() || b.empty()) return 0.0;
  std::size_t shared = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++shared;
      ++ia;
      ++ib;
    }
  }
  const double norm = std::log(2.0 + static_cast<double>(a.size())) +
                      std::log(2.0 + static_cast<double>(b.size()));
  const double raw = static_cast<double>(shared) / norm;
  const double best = static_cast<double>(std::min(a.size(), b.size())) / norm;
  return std::clamp(raw / best, 0.0, 1.0);
}

double sentence_similarity(const Sentence &a, const Sentence &b) {
  return lemma_set_similarity(a.lemma_set(), b.lemma_set());
}

TextGraph build_graph(const std::vector<Sentence> &sentences, const std::vector<Entity> &entities,
                      const GraphConfig &config) {
  config.validate();
  if (sentences.empty()) throw Error("graph", "cannot build a graph from zero sentences");
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    if (sentences[i].index != static_cast<int>(i)) {
      throw Error("graph", "sentence indices must be contiguous from 0");
    }
  }

  std::vector<NodeId> nodes;
  std::vector<Edge> edges;
  std::vector<bool> alive(sentences.size(), false);
  std::vector<std::set<std::string>> lemmas(sentences.size());
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    if (sentences[i].tokens.empty()) continue;
    alive[i] = true;
    lemmas[i] = sentences[i].lemma_set();
    nodes.push_back(sentence_node(static_cast<int>(i)));
  }

  for (std::size_t i = 0; i < sentences.size(); ++i) {
    if (!alive[i]) continue;
    for (std::size_t j = i + 1; j < sentences.size(); ++j) {
      if (!alive[j]) continue;
      const double sim = lemma_set_similarity(lemmas[i], lemmas[j]);
      if (sim > config.sentence_similarity_threshold && sim > 0.0) {
        edges.push_back({sentence_node(static_cast<int>(i)), sentence_node(static_cast<int>(j)), sim});
      }
    }
  }

  // Entities present in each surviving sentence, in entity order.
  std::vector<std::vector<int>> present(sentences.size());
  for (std::size_t e = 0; e < entities.size(); ++e) {
    std::map<int, int> counts;
    for (const auto &m : entities[e].mentions) {
      if (m.sentence_index < 0 || m.sentence_index >= static_cast<int>(sentences.size())) {
        throw Error("graph", "entity '" + entities[e].canonical +
                                 "' mentions sentence " + std::to_string(m.sentence_index) +
                                 " which does not exist");
      }
      if (alive[static_cast<std::size_t>(m.sentence_index)]) ++counts[m.sentence_index];
    }
    if (counts.empty()) continue;
    const NodeId id = entity_node(static_cast<int>(e));
    nodes.push_back(id);
    for (const auto &[s, n] : counts) {
      edges.push_back({sentence_node(s), id, config.entity_edge_scale * n});
      present[static_cast<std::size_t>(s)].push_back(static_cast<int>(e));
    }
  }

  std::map<std::pair<int, int>, int> cooccur;
  for (const auto &list : present) {
    for (std::size_t a = 0; a < list.size(); ++a) {
      for (std::size_t b = a + 1; b < list.size(); ++b) ++cooccur[{list[a], list[b]}];
    }
  }
  for (const auto &[pair, n] : cooccur) {
    edges.push_back({entity_node(pair.first), entity_node(pair.second), config.cooccurrence_scale * n});
  }

  return TextGraph(std::move(nodes), std::move(edges));
}

}  // namespace graphsum
