#include "graphsum/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "graphsum/error.hpp"
#include "graphsum/utf8.hpp"

namespace graphsum {

using nlohmann::json;

void PipelineOptions::validate() const {
  recognizer.validate();
  graph.validate();
  solver.validate();
  ranking.validate();
}

PreparedDocument prepare_document(std::string_view body, const PipelineOptions &options,
                                  const EntityRecognizer *recognizer) {
  PreparedDocument doc;
  doc.sentences = Lexicon::builtin().preprocess(segment_sentences(body));
  const bool has_content = std::any_of(doc.sentences.begin(), doc.sentences.end(),
                                       [](const Sentence &s) { return !s.tokens.empty(); });
  if (!has_content) {
    throw MalformedDocumentError("textprep", "document has no sentence with content words");
  }
  if (options.use_entities) {
    if (recognizer == nullptr) throw Error("ner", "entities enabled but no recognizer supplied");
    doc.entities = recognizer->recognize(doc.sentences);
  }
  doc.graph = build_graph(doc.sentences, doc.entities, options.graph);
  return doc;
}

AlgorithmSummary summarize_prepared(const PreparedDocument &doc, Algorithm algorithm,
                                    const PipelineOptions &options) {
  AlgorithmSummary out;
  out.algorithm = algorithm;
  out.scores = compute(algorithm, doc.graph, options.solver);
  out.ranking = rank_sentences(doc.graph, out.scores, options.ranking);
  std::optional<std::map<int, int>> clusters;
  if (algorithm == Algorithm::kClusters) clusters = sentence_communities(out.scores);
  out.summary = select_summary(out.ranking, doc.sentences, options.ranking, clusters);
  return out;
}

AlgorithmSummary summarize_text(std::string_view body, Algorithm algorithm,
                                const PipelineOptions &options) {
  options.validate();
  std::optional<RuleBasedRecognizer> recognizer;
  if (options.use_entities) recognizer.emplace(options.recognizer);
  const auto doc =
      prepare_document(body, options, recognizer ? &*recognizer : nullptr);
  return summarize_prepared(doc, algorithm, options);
}

void RunConfig::validate() const {
  if (algorithms.empty()) throw ConfigError("cli", "no algorithm selected");
  pipeline.validate();
  rouge.validate();
  if (limit && *limit < 1) throw ConfigError("cli", "limit must be >= 1");
  if (jobs && *jobs < 1) throw ConfigError("cli", "jobs must be >= 1");
}

std::vector<Algorithm> parse_algorithm_selection(std::string_view text) {
  if (utf8::to_lower(text) == "all") return {kAllAlgorithms.begin(), kAllAlgorithms.end()};
  return {parse_algorithm(text)};
}

namespace {

template <typename T>
T get_as(const json &value, const std::string &key) {
  try {
    return value.get<T>();
  } catch (const json::exception &) {
    throw ConfigError("cli", "config key '" + key + "' has the wrong type");
  }
}

std::vector<Algorithm> algorithms_from_json(const json &value) {
  if (value.is_string()) return parse_algorithm_selection(value.get<std::string>());
  if (!value.is_array()) throw ConfigError("cli", "config key 'algorithm' must be a string or list");
  std::vector<Algorithm> out;
  for (const auto &item : value) {
    if (!item.is_string()) throw ConfigError("cli", "config key 'algorithm' must list names");
    out.push_back(parse_algorithm(item.get<std::string>()));
  }
  return out;
}

}  // namespace

void apply_config_json(RunConfig &config, std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error &e) {
    throw ConfigError("cli", std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("cli", "config must be a JSON object");

  auto &p = config.pipeline;
  for (const auto &[key, value] : root.items()) {
    if (key == "algorithm") {
      config.algorithms = algorithms_from_json(value);
    } else if (key == "damping") {
      p.solver.damping = get_as<double>(value, key);
    } else if (key == "tolerance") {
      p.solver.tolerance = get_as<double>(value, key);
    } else if (key == "max_iterations") {
      p.solver.max_iterations = get_as<int>(value, key);
    } else if (key == "sentence_similarity_threshold") {
      p.graph.sentence_similarity_threshold = get_as<double>(value, key);
    } else if (key == "entity_edge_scale") {
      p.graph.entity_edge_scale = get_as<double>(value, key);
    } else if (key == "cooccurrence_scale") {
      p.graph.cooccurrence_scale = get_as<double>(value, key);
    } else if (key == "entity_bonus_alpha") {
      p.ranking.entity_bonus_alpha = get_as<double>(value, key);
    } else if (key == "budget_sentences") {
      p.ranking.budget_sentences = get_as<int>(value, key);
    } else if (key == "budget_words") {
      p.ranking.budget_words =
          value.is_null() ? std::nullopt : std::optional<int>(get_as<int>(value, key));
    } else if (key == "redundancy_threshold") {
      p.ranking.redundancy_threshold = get_as<double>(value, key);
    } else if (key == "entities") {
      p.use_entities = get_as<bool>(value, key);
    } else if (key == "gazetteers") {
      p.recognizer.gazetteer_paths.clear();
      for (const auto &path : get_as<std::vector<std::string>>(value, key)) {
        p.recognizer.gazetteer_paths.emplace_back(path);
      }
    } else if (key == "min_mention_length") {
      p.recognizer.min_mention_length = get_as<int>(value, key);
    } else if (key == "merge_titlecase_runs") {
      p.recognizer.merge_titlecase_runs = get_as<bool>(value, key);
    } else if (key == "stemming") {
      config.rouge.stemming = get_as<bool>(value, key);
    } else if (key == "n_values") {
      config.rouge.n_values = get_as<std::vector<int>>(value, key);
    } else if (key == "input") {
      config.input = get_as<std::string>(value, key);
    } else if (key == "output") {
      config.output = get_as<std::string>(value, key);
    } else if (key == "recursive") {
      config.recursive = get_as<bool>(value, key);
    } else if (key == "limit") {
      config.limit = value.is_null() ? std::nullopt : std::optional<int>(get_as<int>(value, key));
    } else if (key == "jobs") {
      config.jobs = value.is_null() ? std::nullopt : std::optional<int>(get_as<int>(value, key));
    } else {
      throw ConfigError("cli", "unknown config key '" + key + "'");
    }
  }
}

void apply_config_file(RunConfig &config, const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cli", path.string(), "cannot open config file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    apply_config_json(config, buf.str());
  } catch (const ConfigError &e) {
    throw ConfigError("cli", path.string() + ": " + e.what());
  }
}

std::string config_echo(const RunConfig &config) {
  const auto &p = config.pipeline;
  json out;
  json algorithms = json::array();
  for (const Algorithm a : config.algorithms) algorithms.push_back(std::string(to_string(a)));
  out["algorithm"] = algorithms;
  out["damping"] = p.solver.damping;
  out["tolerance"] = p.solver.tolerance;
  out["max_iterations"] = p.solver.max_iterations;
  out["sentence_similarity_threshold"] = p.graph.sentence_similarity_threshold;
  out["entity_edge_scale"] = p.graph.entity_edge_scale;
  out["cooccurrence_scale"] = p.graph.cooccurrence_scale;
  out["entity_bonus_alpha"] = p.ranking.entity_bonus_alpha;
  out["budget_sentences"] = p.ranking.budget_sentences;
  out["budget_words"] = p.ranking.budget_words ? json(*p.ranking.budget_words) : json(nullptr);
  out["redundancy_threshold"] = p.ranking.redundancy_threshold;
  out["entities"] = p.use_entities;
  json gazetteers = json::array();
  for (const auto &g : p.recognizer.gazetteer_paths) gazetteers.push_back(g.generic_string());
  out["gazetteers"] = gazetteers;
  out["min_mention_length"] = p.recognizer.min_mention_length;
  out["merge_titlecase_runs"] = p.recognizer.merge_titlecase_runs;
  out["stemming"] = config.rouge.stemming;
  out["n_values"] = config.rouge.n_values;
  out["limit"] = config.limit ? json(*config.limit) : json(nullptr);
  return out.dump();
}

}  // namespace graphsum
