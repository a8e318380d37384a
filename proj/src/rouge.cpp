#include "graphsum/rouge.hpp"

#include <algorithm>

#include "graphsum/error.hpp"
#include "graphsum/textprep.hpp"
#include "graphsum/utf8.hpp"

namespace graphsum {

namespace {

using NgramCounts = std::map<std::vector<std::string>, std::size_t>;

NgramCounts count_ngrams(const std::vector<std::string> &tokens, std::size_t n,
                         std::size_t &total) {
  NgramCounts counts;
  total = 0;
  if (tokens.size() < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    ++counts[std::vector<std::string>(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                                      tokens.begin() + static_cast<std::ptrdiff_t>(i + n))];
    ++total;
  }
  return counts;
}

}  // namespace

void RougeConfig::validate() const {
  if (n_values.empty()) throw ConfigError("rouge", "n_values must not be empty");
  for (const int n : n_values) {
    if (n < 1) throw ConfigError("rouge", "every n in n_values must be >= 1");
  }
}

std::vector<std::string> rouge_tokens(std::string_view text, const RougeConfig &cfg) {
  std::vector<std::string> tokens = tokenize(text);
  for (auto &t : tokens) {
    t = utf8::to_lower(t);
    if (cfg.stemming) t = lemmatize(t);
  }
  return tokens;
}

RougeScore rouge_n(std::string_view candidate, std::string_view reference, int n,
                   const RougeConfig &cfg) {
  if (n < 1) throw ConfigError("rouge", "n must be >= 1");
  const auto size = static_cast<std::size_t>(n);
  RougeScore score;
  score.n = n;
  const auto cand = count_ngrams(rouge_tokens(candidate, cfg), size, score.candidate_ngrams);
  const auto ref = count_ngrams(rouge_tokens(reference, cfg), size, score.reference_ngrams);
  for (const auto &[gram, count] : cand) {
    const auto it = ref.find(gram);
    if (it != ref.end()) score.matched += std::min(count, it->second);
  }
  if (score.candidate_ngrams > 0) {
    score.precision =
        static_cast<double>(score.matched) / static_cast<double>(score.candidate_ngrams);
  }
  if (score.reference_ngrams > 0) {
    score.recall = static_cast<double>(score.matched) / static_cast<double>(score.reference_ngrams);
  }
  if (score.precision + score.recall > 0.0) {
    score.f1 = 2.0 * score.precision * score.recall / (score.precision + score.recall);
  }
  return score;
}

std::optional<std::map<int, RougeScore>> evaluate_document(
    const SummaryResult &result, const std::optional<std::vector<std::string>> &reference,
    const RougeConfig &cfg) {
  cfg.validate();
  if (!reference || reference->empty()) return std::nullopt;
  std::string joined;
  for (const auto &h : *reference) {
    if (!joined.empty()) joined.push_back(' ');
    joined += h;
  }
  std::map<int, RougeScore> scores;
  for (const int n : cfg.n_values) scores[n] = rouge_n(result.text, joined, n, cfg);
  return scores;
}

}  // namespace graphsum
