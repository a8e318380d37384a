// graphsum command line tool: summarize documents, benchmark a corpus, and
// print corpus statistics.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphsum/benchmark.hpp"
#include "graphsum/corpus.hpp"
#include "graphsum/error.hpp"
#include "graphsum/pipeline.hpp"

namespace {

using graphsum::RunConfig;
using nlohmann::json;

struct Overrides {
  std::string config_path;
  std::optional<std::string> algorithm;
  std::optional<int> budget;
  std::optional<int> budget_words;
  std::optional<double> alpha;
  std::optional<double> threshold;
  std::optional<double> redundancy;
  std::optional<double> damping;
  std::optional<int> limit;
  std::optional<int> jobs;
  std::vector<std::string> gazetteers;
  bool no_entities = false;
  bool stemming = false;
  bool recursive = false;
  std::string format = "text";
  std::string out;
  bool verbose = false;
};

void add_model_options(CLI::App &cmd, Overrides &o) {
  cmd.add_option("--config", o.config_path, "Flat JSON config file; flags override it");
  cmd.add_option("--algorithm", o.algorithm,
                 "pagerank, hits, closeness, degree, betweenness, clusters or all");
  cmd.add_option("--budget", o.budget, "Summary length in sentences")->check(CLI::PositiveNumber);
  cmd.add_option("--budget-words", o.budget_words, "Also stop before exceeding this many words")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--alpha", o.alpha, "Weight of adjacent entity scores in sentence ranking");
  cmd.add_option("--threshold", o.threshold,
                 "Minimum similarity for a sentence-sentence edge");
  cmd.add_option("--redundancy", o.redundancy,
                 "Skip sentences more similar than this to a selected one");
  cmd.add_option("--damping", o.damping, "PageRank damping factor");
  cmd.add_option("--gazetteer", o.gazetteers, "Gazetteer file (surface<TAB>TYPE), repeatable");
  cmd.add_flag("--no-entities", o.no_entities, "Build the graph from sentences only");
  cmd.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "jsonl"}));
}

RunConfig build_config(const Overrides &o) {
  RunConfig config;
  if (!o.config_path.empty()) graphsum::apply_config_file(config, o.config_path);
  auto &p = config.pipeline;
  if (o.algorithm) config.algorithms = graphsum::parse_algorithm_selection(*o.algorithm);
  if (o.budget) p.ranking.budget_sentences = *o.budget;
  if (o.budget_words) p.ranking.budget_words = *o.budget_words;
  if (o.alpha) p.ranking.entity_bonus_alpha = *o.alpha;
  if (o.threshold) p.graph.sentence_similarity_threshold = *o.threshold;
  if (o.redundancy) p.ranking.redundancy_threshold = *o.redundancy;
  if (o.damping) p.solver.damping = *o.damping;
  if (o.no_entities) p.use_entities = false;
  if (o.stemming) config.rouge.stemming = true;
  if (o.recursive) config.recursive = true;
  for (const auto &g : o.gazetteers) p.recognizer.gazetteer_paths.emplace_back(g);
  if (o.limit) config.limit = *o.limit;
  if (o.jobs) config.jobs = *o.jobs;
  if (!o.out.empty()) config.output = o.out;
  config.validate();
  return config;
}

void write_file(const std::filesystem::path &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw graphsum::IoError("cli", path.string(), "cannot open for writing");
  out << content;
  if (!out) throw graphsum::IoError("cli", path.string(), "write failed");
}

int run_summarize(const std::string &input, const Overrides &o) {
  RunConfig config = build_config(o);
  config.input = input;
  auto docs = graphsum::load_corpus(config.input, config.recursive);
  if (config.limit && docs.size() > static_cast<std::size_t>(*config.limit)) {
    docs.resize(static_cast<std::size_t>(*config.limit));
  }
  if (docs.empty()) throw graphsum::Error("corpus", "no documents found in " + input);

  const auto &options = config.pipeline;
  std::optional<graphsum::RuleBasedRecognizer> recognizer;
  if (options.use_entities) recognizer.emplace(options.recognizer);

  std::string output;
  for (const auto &doc : docs) {
    const auto prepared =
        graphsum::prepare_document(doc.body, options, recognizer ? &*recognizer : nullptr);
    for (const auto algorithm : config.algorithms) {
      const auto result = graphsum::summarize_prepared(prepared, algorithm, options);
      if (o.format == "jsonl") {
        json record;
        record["id"] = doc.id;
        record["algorithm"] = std::string(graphsum::to_string(algorithm));
        record["selected"] = result.summary.selected;
        record["summary"] = result.summary.text;
        if (o.verbose) {
          json ranking = json::array();
          for (const auto &r : result.ranking) ranking.push_back({r.index, r.score});
          record["ranking"] = ranking;
        }
        output += record.dump() + '\n';
        continue;
      }
      if (docs.size() > 1 || config.algorithms.size() > 1) {
        output += "== " + doc.id + " [" + std::string(graphsum::to_string(algorithm)) + "]\n";
      }
      output += result.summary.text + '\n';
      if (o.verbose) {
        output += "-- ranking\n";
        for (const auto &r : result.ranking) {
          char buf[64];
          std::snprintf(buf, sizeof(buf), "%4d  %.6f", r.index, r.score);
          output += std::string(buf) + '\n';
        }
      }
    }
    if (o.verbose && o.format == "text") {
      output += "-- entities\n";
      for (const auto &e : prepared.entities) {
        output += e.canonical + '\t' + std::string(graphsum::to_string(e.type)) + '\t' +
                  std::to_string(e.mentions.size()) + '\n';
      }
    }
  }
  if (!config.output.empty()) {
    write_file(config.output, output);
  } else {
    std::cout << output;
  }
  return 0;
}

int run_benchmark(const std::string &input, const Overrides &o) {
  RunConfig config = build_config(o);
  config.input = input;
  if (!config.jobs) {
    config.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }
  const auto docs = graphsum::load_corpus(config.input, config.recursive);
  const auto report = graphsum::run_benchmark(docs, config);
  if (!config.output.empty()) write_file(config.output, graphsum::report_jsonl(report));
  if (o.format == "jsonl") {
    std::cout << graphsum::report_jsonl(report);
  } else {
    std::cout << graphsum::format_table(report);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "wall time: %.2f s  jobs: %d\n", report.wall_seconds,
                  *config.jobs);
    std::cout << buf;
  }
  return 0;
}

int run_stats(const std::string &input, const Overrides &o) {
  const auto docs = graphsum::load_corpus(input, o.recursive);
  const auto stats = graphsum::compute_stats(docs);
  if (o.format == "jsonl") {
    json out{{"document_count", stats.document_count},
             {"reference_count", stats.reference_count},
             {"mean_body_tokens", stats.mean_body_tokens},
             {"min_body_tokens", stats.min_body_tokens},
             {"max_body_tokens", stats.max_body_tokens},
             {"mean_reference_tokens", stats.mean_reference_tokens},
             {"min_reference_tokens", stats.min_reference_tokens},
             {"max_reference_tokens", stats.max_reference_tokens},
             {"vocabulary_size", stats.vocabulary_size}};
    std::cout << out.dump() << '\n';
    return 0;
  }
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "articles            %zu\n"
                "with summaries      %zu\n"
                "article tokens      mean %.1f  min %zu  max %zu\n"
                "summary tokens      mean %.1f  min %zu  max %zu\n"
                "vocabulary          %zu\n",
                stats.document_count, stats.reference_count, stats.mean_body_tokens,
                stats.min_body_tokens, stats.max_body_tokens, stats.mean_reference_tokens,
                stats.min_reference_tokens, stats.max_reference_tokens, stats.vocabulary_size);
  std::cout << buf;
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Graph-based extractive summarization with named entities"};
  app.require_subcommand(1);

  Overrides o;
  std::string input;

  auto *summarize = app.add_subcommand("summarize", "Summarize a document or corpus");
  summarize->add_option("input", input, "Story, text or JSONL file, or a directory")->required();
  add_model_options(*summarize, o);
  summarize->add_option("--limit", o.limit, "Summarize at most this many documents")
      ->check(CLI::PositiveNumber);
  summarize->add_option("--out", o.out, "Write output to this file instead of stdout");
  summarize->add_flag("--recursive", o.recursive, "Descend into subdirectories");
  summarize->add_flag("-v,--verbose", o.verbose, "Also print sentence ranking and entities");

  auto *benchmark = app.add_subcommand("benchmark", "Score summaries against references");
  benchmark->add_option("corpus", input, "Corpus file or directory")->required();
  add_model_options(*benchmark, o);
  benchmark->add_option("--limit", o.limit, "Use at most this many documents")
      ->check(CLI::PositiveNumber);
  benchmark->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  benchmark->add_option("--out", o.out, "Report file (JSONL)");
  benchmark->add_flag("--stemming", o.stemming, "Compare lemmas in ROUGE");
  benchmark->add_flag("--recursive", o.recursive, "Descend into subdirectories");

  auto *stats = app.add_subcommand("stats", "Print corpus statistics");
  stats->add_option("corpus", input, "Corpus file or directory")->required();
  stats->add_flag("--recursive", o.recursive, "Descend into subdirectories");
  stats->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "jsonl"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (summarize->parsed()) return run_summarize(input, o);
    if (benchmark->parsed()) return run_benchmark(input, o);
    if (stats->parsed()) return run_stats(input, o);
  } catch (const graphsum::Error &e) {
    std::cerr << "graphsum: " << e.module() << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "graphsum: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
