#ifndef GRAPHSUM_ROUGE_HPP_
#define GRAPHSUM_ROUGE_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphsum/summarizer.hpp"

namespace graphsum {

struct RougeConfig {
  bool stemming = false;  // compare lemmas instead of surface tokens
  std::vector<int> n_values = {1, 2};

  void validate() const;
};

struct RougeScore {
  int n = 1;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t matched = 0;  // clipped n-gram overlap
  std::size_t candidate_ngrams = 0;
  std::size_t reference_ngrams = 0;

  bool operator==(const RougeScore &) const = default;
};

// Lowercased tokens as compared by rouge_n; stop words are kept.
std::vector<std::string> rouge_tokens(std::string_view text, const RougeConfig &cfg = {});

RougeScore rouge_n(std::string_view candidate, std::string_view reference, int n,
                   const RougeConfig &cfg = {});

// Scores the summary against the space-joined reference for every configured
// n. Returns nullopt when the document has no reference to compare against.
std::optional<std::map<int, RougeScore>> evaluate_document(
    const SummaryResult &result, const std::optional<std::vector<std::string>> &reference,
    const RougeConfig &cfg = {});

}  // namespace graphsum

#endif  // GRAPHSUM_ROUGE_HPP_
