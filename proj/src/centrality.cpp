#include "graphsum/centrality.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <queue>

#include "graphsum/error.hpp"
#include "graphsum/utf8.hpp"

namespace graphsum {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Relative tolerance for treating two path lengths as equal.
constexpr double kPathTolerance = 1e-10;

bool same_length(double a, double b) {
  return std::abs(a - b) <= kPathTolerance * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

ScoreVector make_vector(Algorithm algorithm, const TextGraph &g) {
  ScoreVector out;
  out.algorithm = algorithm;
  out.nodes = g.nodes();
  out.scores.assign(g.node_count(), 0.0);
  return out;
}

void require_nodes(const TextGraph &g, std::string_view what) {
  if (g.node_count() == 0) {
    throw Error("centrality", std::string(what) + " needs a graph with at least one node");
  }
}

void normalize_l2(std::vector<double> &v) {
  double sq = 0.0;
  for (const double x : v) sq += x * x;
  const double norm = std::sqrt(sq);
  if (norm > 0.0) {
    for (double &x : v) x /= norm;
  }
}

double l1_distance(const std::vector<double> &a, const std::vector<double> &b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
  return d;
}

// (A + I) x
std::vector<double> shifted_product(const TextGraph &g, const std::vector<double> &x) {
  std::vector<double> out(x);
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    for (const auto &nb : g.neighbors(v)) out[v] += nb.weight * x[nb.index];
  }
  return out;
}

using QueueEntry = std::pair<double, std::size_t>;
using MinQueue = std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>>;

std::vector<double> shortest_lengths(const TextGraph &g, std::size_t source) {
  std::vector<double> dist(g.node_count(), kInf);
  std::vector<bool> done(g.node_count(), false);
  MinQueue queue;
  dist[source] = 0.0;
  queue.emplace(0.0, source);
  while (!queue.empty()) {
    const auto [d, v] = queue.top();
    queue.pop();
    if (done[v]) continue;
    done[v] = true;
    for (const auto &nb : g.neighbors(v)) {
      const double nd = d + 1.0 / nb.weight;
      if (nd < dist[nb.index]) {
        dist[nb.index] = nd;
        queue.emplace(nd, nb.index);
      }
    }
  }
  return dist;
}

std::string format_score(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kPageRank: return "pagerank";
    case Algorithm::kHits: return "hits";
    case Algorithm::kCloseness: return "closeness";
    case Algorithm::kDegree: return "degree";
    case Algorithm::kBetweenness: return "betweenness";
    case Algorithm::kClusters: return "clusters";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  const std::string lower = utf8::to_lower(name);
  for (const Algorithm a : kAllAlgorithms) {
    if (to_string(a) == lower) return a;
  }
  throw ConfigError("centrality",
                    "unknown algorithm '" + std::string(name) +
                        "' (expected pagerank, hits, closeness, degree, betweenness or clusters)");
}

void SolverConfig::validate() const {
  if (!(damping > 0.0 && damping < 1.0)) {
    throw ConfigError("centrality", "damping must lie in (0, 1)");
  }
  if (!(tolerance > 0.0)) throw ConfigError("centrality", "tolerance must be positive");
  if (max_iterations < 1) throw ConfigError("centrality", "max_iterations must be at least 1");
}

double ScoreVector::score(NodeId id) const {
  const auto it = std::lower_bound(nodes.begin(), nodes.end(), id);
  if (it == nodes.end() || *it != id) {
    throw Error("centrality", "no score for node " + to_string(id));
  }
  return scores[static_cast<std::size_t>(it - nodes.begin())];
}

std::optional<int> ScoreVector::community(NodeId id) const {
  if (!communities) return std::nullopt;
  const auto it = std::lower_bound(nodes.begin(), nodes.end(), id);
  if (it == nodes.end() || *it != id) return std::nullopt;
  return (*communities)[static_cast<std::size_t>(it - nodes.begin())];
}

std::string ScoreVector::dump() const {
  std::string out;
  const std::string_view name = to_string(algorithm);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out.append(name);
    out += '\t';
    out += to_string(nodes[i]);
    out += '\t';
    out += format_score(scores[i]);
    out += '\n';
  }
  return out;
}

ScoreVector pagerank(const TextGraph &g, const SolverConfig &cfg) {
  cfg.validate();
  require_nodes(g, "pagerank");
  const std::size_t n = g.node_count();
  const double inv_n = 1.0 / static_cast<double>(n);
  const double d = cfg.damping;

  ScoreVector out = make_vector(Algorithm::kPageRank, g);
  std::vector<double> x(n, inv_n);
  std::vector<double> next(n);
  bool converged = false;
  int iterations = 0;
  while (iterations < cfg.max_iterations) {
    ++iterations;
    double dangling = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
      if (g.strength(u) == 0.0) dangling += x[u];
    }
    const double base = (1.0 - d) * inv_n + d * dangling * inv_n;
    std::fill(next.begin(), next.end(), base);
    for (std::size_t u = 0; u < n; ++u) {
      const double s = g.strength(u);
      if (s == 0.0) continue;
      const double share = d * x[u] / s;
      for (const auto &nb : g.neighbors(u)) next[nb.index] += share * nb.weight;
    }
    const double change = l1_distance(x, next);
    x.swap(next);
    if (change < cfg.tolerance) {
      converged = true;
      break;
    }
  }

  double total = 0.0;
  for (const double v : x) total += v;
  for (double &v : x) v /= total;
  out.scores = std::move(x);
  out.iterations_used = iterations;
  out.converged = converged;
  return out;
}

ScoreVector hits(const TextGraph &g, const SolverConfig &cfg) {
  cfg.validate();
  require_nodes(g, "hits");
  const std::size_t n = g.node_count();

  ScoreVector out = make_vector(Algorithm::kHits, g);
  std::vector<double> hub(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> authority = hub;
  bool converged = false;
  int iterations = 0;
  while (iterations < cfg.max_iterations) {
    ++iterations;
    std::vector<double> next = shifted_product(g, hub);
    normalize_l2(next);
    hub = shifted_product(g, next);
    normalize_l2(hub);
    const double change = l1_distance(authority, next);
    authority.swap(next);
    if (change < cfg.tolerance) {
      converged = true;
      break;
    }
  }

  out.scores = std::move(authority);
  out.iterations_used = iterations;
  out.converged = converged;
  return out;
}

ScoreVector closeness(const TextGraph &g) {
  require_nodes(g, "closeness");
  ScoreVector out = make_vector(Algorithm::kCloseness, g);
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    const auto dist = shortest_lengths(g, v);
    double sum = 0.0;
    for (std::size_t u = 0; u < dist.size(); ++u) {
      if (u != v && dist[u] < kInf) sum += 1.0 / dist[u];
    }
    out.scores[v] = sum;
  }
  return out;
}

ScoreVector degree(const TextGraph &g) {
  require_nodes(g, "degree");
  ScoreVector out = make_vector(Algorithm::kDegree, g);
  for (std::size_t v = 0; v < g.node_count(); ++v) out.scores[v] = g.strength(v);
  return out;
}

ScoreVector betweenness(const TextGraph &g) {
  require_nodes(g, "betweenness");
  const std::size_t n = g.node_count();
  ScoreVector out = make_vector(Algorithm::kBetweenness, g);
  std::vector<double> centrality(n, 0.0);

  std::vector<double> dist(n);
  std::vector<double> sigma(n);
  std::vector<double> delta(n);
  std::vector<bool> done(n);
  std::vector<std::vector<std::size_t>> preds(n);
  std::vector<std::size_t> order;
  order.reserve(n);

  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(done.begin(), done.end(), false);
    for (auto &p : preds) p.clear();
    order.clear();

    MinQueue queue;
    dist[s] = 0.0;
    sigma[s] = 1.0;
    queue.emplace(0.0, s);
    while (!queue.empty()) {
      const auto [d, v] = queue.top();
      queue.pop();
      if (done[v]) continue;
      done[v] = true;
      order.push_back(v);
      for (const auto &nb : g.neighbors(v)) {
        const std::size_t w = nb.index;
        if (done[w]) continue;
        const double nd = d + 1.0 / nb.weight;
        if (dist[w] == kInf || (nd < dist[w] && !same_length(nd, dist[w]))) {
          dist[w] = nd;
          sigma[w] = sigma[v];
          preds[w].assign(1, v);
          queue.emplace(nd, w);
        } else if (same_length(nd, dist[w])) {
          sigma[w] += sigma[v];
          preds[w].push_back(v);
        }
      }
    }

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const std::size_t w = *it;
      for (const std::size_t v : preds[w]) {
        delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      }
      if (w != s) centrality[w] += delta[w];
    }
  }

  for (std::size_t v = 0; v < n; ++v) out.scores[v] = centrality[v] / 2.0;
  return out;
}

std::vector<int> label_propagation(const TextGraph &g, int max_sweeps) {
  const std::size_t n = g.node_count();
  std::vector<std::size_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = i;

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool changed = false;
    for (std::size_t v = 0; v < n; ++v) {
      const auto nbs = g.neighbors(v);
      if (nbs.empty()) continue;
      std::map<std::size_t, double> sums;
      for (const auto &nb : nbs) sums[labels[nb.index]] += nb.weight;
      std::size_t best = sums.begin()->first;
      double best_sum = sums.begin()->second;
      for (const auto &[label, sum] : sums) {
        if (sum > best_sum) {
          best = label;
          best_sum = sum;
        }
      }
      if (best != labels[v]) {
        labels[v] = best;
        changed = true;
      }
    }
    if (!changed) break;
  }

  std::map<std::size_t, int> dense;
  std::vector<int> out(n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto [it, inserted] = dense.emplace(labels[v], static_cast<int>(dense.size()));
    out[v] = it->second;
  }
  return out;
}

ScoreVector cluster_scores(const TextGraph &g) {
  require_nodes(g, "clusters");
  const std::size_t n = g.node_count();
  ScoreVector out = make_vector(Algorithm::kClusters, g);
  const auto community = label_propagation(g);

  const int k = n == 0 ? 0 : *std::max_element(community.begin(), community.end()) + 1;
  std::vector<std::size_t> size(static_cast<std::size_t>(k), 0);
  for (const int c : community) ++size[static_cast<std::size_t>(c)];

  for (std::size_t v = 0; v < n; ++v) {
    double inside = 0.0;
    for (const auto &nb : g.neighbors(v)) {
      if (community[nb.index] == community[v]) inside += nb.weight;
    }
    const double share =
        static_cast<double>(size[static_cast<std::size_t>(community[v])]) / static_cast<double>(n);
    out.scores[v] = inside * share;
  }
  out.communities = community;
  return out;
}

ScoreVector compute(Algorithm algorithm, const TextGraph &g, const SolverConfig &cfg) {
  switch (algorithm) {
    case Algorithm::kPageRank: return pagerank(g, cfg);
    case Algorithm::kHits: return hits(g, cfg);
    case Algorithm::kCloseness: return closeness(g);
    case Algorithm::kDegree: return degree(g);
    case Algorithm::kBetweenness: return betweenness(g);
    case Algorithm::kClusters: return cluster_scores(g);
  }
  throw Error("centrality", "unhandled algorithm");
}

}  // namespace graphsum
