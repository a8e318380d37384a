#ifndef GRAPHSUM_BENCHMARK_HPP_
#define GRAPHSUM_BENCHMARK_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "graphsum/pipeline.hpp"

namespace graphsum {

struct MeanScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  bool operator==(const MeanScore &) const = default;
};

struct AlgorithmRow {
  Algorithm algorithm = Algorithm::kPageRank;
  std::size_t documents = 0;
  std::map<int, MeanScore> means;  // keyed by n
};

struct DocumentRecord {
  std::string id;
  Algorithm algorithm = Algorithm::kPageRank;
  std::vector<int> selected;
  std::string summary;
  std::map<int, RougeScore> scores;
};

struct SkippedDocument {
  std::string id;
  std::string reason;
};

struct BenchmarkReport {
  std::vector<AlgorithmRow> rows;  // one per requested algorithm, in request order
  std::vector<DocumentRecord> records;  // by document id, then request order
  std::size_t document_count = 0;  // evaluated + skipped
  std::size_t evaluated_count = 0;
  std::vector<SkippedDocument> skipped;
  std::string config;  // config_echo of the run
  int budget_sentences = 0;
  double wall_seconds = 0.0;
};

// Summarizes and scores every document with every requested algorithm using
// config.jobs worker threads. Documents without a reference, and documents
// the pipeline rejects, are reported as skipped. Throws if nothing could be
// evaluated. The report does not depend on the number of workers.
BenchmarkReport run_benchmark(const std::vector<Document> &docs, const RunConfig &config);

std::string record_json(const DocumentRecord &record);
// Counts, skipped ids, config echo and per-algorithm means. Wall-clock time
// is left out so reruns compare byte for byte.
std::string aggregate_json(const BenchmarkReport &report);
// Per-document records followed by the aggregate record, one JSON per line.
std::string report_jsonl(const BenchmarkReport &report);
// Aligned table, one row per algorithm, 4 decimals.
std::string format_table(const BenchmarkReport &report);

}  // namespace graphsum

#endif  // GRAPHSUM_BENCHMARK_HPP_
