#ifndef GRAPHSUM_PIPELINE_HPP_
#define GRAPHSUM_PIPELINE_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphsum/centrality.hpp"
#include "graphsum/corpus.hpp"
#include "graphsum/graph.hpp"
#include "graphsum/ner.hpp"
#include "graphsum/rouge.hpp"
#include "graphsum/summarizer.hpp"
#include "graphsum/textprep.hpp"

namespace graphsum {

struct PipelineOptions {
  bool use_entities = true;
  RecognizerConfig recognizer;
  GraphConfig graph;
  SolverConfig solver;
  RankingConfig ranking;

  void validate() const;
};

/// A document carried through segmentation, preprocessing, entity
/// recognition and graph construction.
struct PreparedDocument {
  std::vector<Sentence> sentences;
  std::vector<Entity> entities;
  TextGraph graph;
};

struct AlgorithmSummary {
  Algorithm algorithm = Algorithm::kPageRank;
  ScoreVector scores;
  std::vector<RankedSentence> ranking;
  SummaryResult summary;
};

// `recognizer` may be null when options.use_entities is false. Throws
// MalformedDocumentError if the body has no sentence with content words.
PreparedDocument prepare_document(std::string_view body, const PipelineOptions &options,
                                  const EntityRecognizer *recognizer);

AlgorithmSummary summarize_prepared(const PreparedDocument &doc, Algorithm algorithm,
                                    const PipelineOptions &options);

// One-shot convenience: builds its own recognizer.
AlgorithmSummary summarize_text(std::string_view body, Algorithm algorithm,
                                const PipelineOptions &options = {});

/// Everything a summarize or benchmark run needs. Mirrors the flat JSON
/// config file accepted by the command line tool.
struct RunConfig {
  std::vector<Algorithm> algorithms{kAllAlgorithms.begin(), kAllAlgorithms.end()};
  PipelineOptions pipeline;
  RougeConfig rouge;
  std::filesystem::path input;
  std::filesystem::path output;
  bool recursive = false;
  std::optional<int> limit;
  std::optional<int> jobs;

  void validate() const;
};

// "all" or a single algorithm name.
std::vector<Algorithm> parse_algorithm_selection(std::string_view text);

// Overrides fields of `config` with the keys present in a flat JSON object.
// Unknown keys and ill-typed values raise ConfigError.
void apply_config_json(RunConfig &config, std::string_view json_text);
void apply_config_file(RunConfig &config, const std::filesystem::path &path);

// Every score-affecting setting as a JSON object, with stable key order.
std::string config_echo(const RunConfig &config);

}  // namespace graphsum

#endif  // GRAPHSUM_PIPELINE_HPP_
