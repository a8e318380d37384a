#ifndef GRAPHSUM_SUMMARIZER_HPP_
#define GRAPHSUM_SUMMARIZER_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graphsum/centrality.hpp"
#include "graphsum/graph.hpp"
#include "graphsum/textprep.hpp"

namespace graphsum {

struct RankingConfig {
  double entity_bonus_alpha = 0.5;
  int budget_sentences = 3;
  double redundancy_threshold = 0.5;
  // When set, selection also stops before the summary would exceed this
  // many tokens.
  std::optional<int> budget_words;

  void validate() const;
};

struct RankedSentence {
  int index = 0;
  double score = 0.0;

  bool operator==(const RankedSentence &) const = default;
};

struct SummaryResult {
  std::vector<int> selected;  // ascending
  std::string text;           // selected sentence texts joined by one space
  std::map<int, double> per_sentence_score;

  bool operator==(const SummaryResult &) const = default;
};

// Sentence score plus alpha times the scores of adjacent entities, each
// weighted by its edge weight over the largest sentence-entity weight.
// Sorted by descending score, ties by ascending index.
std::vector<RankedSentence> rank_sentences(const TextGraph &g, const ScoreVector &scores,
                                           const RankingConfig &cfg);

// Greedy selection in rank order, skipping candidates whose similarity to an
// already selected sentence exceeds the redundancy threshold. With
// `cluster_ids` (sentence index -> community) candidates are taken
// round-robin across communities, ordered by each community's best sentence.
SummaryResult select_summary(const std::vector<RankedSentence> &ranked,
                             const std::vector<Sentence> &sentences, const RankingConfig &cfg,
                             const std::optional<std::map<int, int>> &cluster_ids = std::nullopt);

// Sentence index -> community id for the sentence nodes of a clusters score vector.
std::map<int, int> sentence_communities(const ScoreVector &scores);

}  // namespace graphsum

#endif  // GRAPHSUM_SUMMARIZER_HPP_
