#include "graphsum/summarizer.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <deque>
#include <set>

#include "graphsum/error.hpp"

namespace graphsum {

void RankingConfig::validate() const {
  if (!(entity_bonus_alpha >= 0.0) || !std::isfinite(entity_bonus_alpha)) {
    throw ConfigError("summarizer", "entity_bonus_alpha must be a finite value >= 0");
  }
  if (budget_sentences < 1) throw ConfigError("summarizer", "budget_sentences must be >= 1");
  if (!(redundancy_threshold > 0.0 && redundancy_threshold <= 1.0)) {
    throw ConfigError("summarizer", "redundancy_threshold must lie in (0, 1]");
  }
  if (budget_words && *budget_words < 1) {
    throw ConfigError("summarizer", "budget_words must be >= 1");
  }
}

std::vector<RankedSentence> rank_sentences(const TextGraph &g, const ScoreVector &scores,
                                           const RankingConfig &cfg) {
  cfg.validate();
  if (scores.nodes != g.nodes() || scores.scores.size() != g.node_count()) {
    throw Error("summarizer", "score vector does not cover the graph's nodes");
  }

  double max_entity_weight = 0.0;
  for (const auto &e : g.edges()) {
    if (e.u.kind == NodeKind::kSentence && e.v.kind == NodeKind::kEntity) {
      max_entity_weight = std::max(max_entity_weight, e.weight);
    }
  }
  if (max_entity_weight == 0.0) max_entity_weight = 1.0;

  std::vector<RankedSentence> ranked;
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    const NodeId id = g.node(i);
    if (id.kind != NodeKind::kSentence) continue;
    double bonus = 0.0;
    for (const auto &nb : g.neighbors(i)) {
      if (g.node(nb.index).kind != NodeKind::kEntity) continue;
      bonus += scores.scores[nb.index] * nb.weight / max_entity_weight;
    }
    ranked.push_back({id.ordinal, scores.scores[i] + cfg.entity_bonus_alpha * bonus});
  }
  std::sort(ranked.begin(), ranked.end(), [](const RankedSentence &a, const RankedSentence &b) {
    if (a.score != b.score) return a.score > b.score;
    return a.index < b.index;
  });
  return ranked;
}

std::map<int, int> sentence_communities(const ScoreVector &scores) {
  std::map<int, int> out;
  if (!scores.communities) return out;
  for (std::size_t i = 0; i < scores.nodes.size(); ++i) {
    if (scores.nodes[i].kind == NodeKind::kSentence) {
      out[scores.nodes[i].ordinal] = (*scores.communities)[i];
    }
  }
  return out;
}

SummaryResult select_summary(const std::vector<RankedSentence> &ranked,
                             const std::vector<Sentence> &sentences, const RankingConfig &cfg,
                             const std::optional<std::map<int, int>> &cluster_ids) {
  cfg.validate();
  if (ranked.empty()) throw Error("summarizer", "nothing to select from an empty ranking");
  for (const auto &r : ranked) {
    if (r.index < 0 || r.index >= static_cast<int>(sentences.size())) {
      throw Error("summarizer", "ranked sentence " + std::to_string(r.index) + " does not exist");
    }
  }

  SummaryResult result;
  for (const auto &r : ranked) result.per_sentence_score[r.index] = r.score;

  std::map<int, std::set<std::string>> lemma_cache;
  auto lemmas = [&](int index) -> const std::set<std::string> & {
    auto it = lemma_cache.find(index);
    if (it == lemma_cache.end()) {
      it = lemma_cache.emplace(index, sentences[static_cast<std::size_t>(index)].lemma_set()).first;
    }
    return it->second;
  };

  std::vector<int> chosen;
  std::size_t words = 0;
  const auto budget = static_cast<std::size_t>(cfg.budget_sentences);
  bool out_of_words = false;

  // Returns true if `index` was accepted.
  auto try_take = [&](int index) {
    for (const int other : chosen) {
      if (other == index) return false;
      if (lemma_set_similarity(lemmas(index), lemmas(other)) > cfg.redundancy_threshold) {
        return false;
      }
    }
    if (cfg.budget_words) {
      const std::size_t n = tokenize(sentences[static_cast<std::size_t>(index)].text).size();
      if (words + n > static_cast<std::size_t>(*cfg.budget_words)) {
        out_of_words = true;
        return false;
      }
      words += n;
    }
    chosen.push_back(index);
    return true;
  };

  if (!cluster_ids) {
    for (const auto &r : ranked) {
      if (chosen.size() >= budget) break;
      try_take(r.index);
      if (out_of_words) break;
    }
  } else {
    std::vector<std::deque<int>> queues;
    std::map<long long, std::size_t> slot;
    long long unlabeled = 0;
    for (const auto &r : ranked) {
      const auto it = cluster_ids->find(r.index);
      // Sentences without a community each form their own group; the keys
      // sit below any real community id.
      const long long key = it != cluster_ids->end() ? it->second : INT32_MIN - 1LL - unlabeled++;
      const auto [pos, inserted] = slot.emplace(key, queues.size());
      if (inserted) queues.emplace_back();
      queues[pos->second].push_back(r.index);
    }
    bool progress = true;
    while (chosen.size() < budget && progress && !out_of_words) {
      progress = false;
      for (auto &queue : queues) {
        if (chosen.size() >= budget || out_of_words) break;
        while (!queue.empty()) {
          const int index = queue.front();
          queue.pop_front();
          progress = true;
          if (try_take(index) || out_of_words) break;
        }
      }
    }
  }

  std::sort(chosen.begin(), chosen.end());
  result.selected = chosen;
  for (const int index : chosen) {
    if (!result.text.empty()) result.text.push_back(' ');
    result.text += sentences[static_cast<std::size_t>(index)].text;
  }
  return result;
}

}  // namespace graphsum
