#include "graphsum/benchmark.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "graphsum/error.hpp"

namespace graphsum {

using nlohmann::json;

namespace {

struct Outcome {
  bool evaluated = false;
  std::string skip_reason;
  std::vector<DocumentRecord> records;  // request order
};

Outcome process(const Document &doc, const RunConfig &config, const EntityRecognizer *recognizer) {
  Outcome out;
  if (!doc.reference || doc.reference->empty()) {
    out.skip_reason = "no reference summary";
    return out;
  }
  try {
    const auto prepared = prepare_document(doc.body, config.pipeline, recognizer);
    for (const Algorithm algorithm : config.algorithms) {
      const auto result = summarize_prepared(prepared, algorithm, config.pipeline);
      DocumentRecord record;
      record.id = doc.id;
      record.algorithm = algorithm;
      record.selected = result.summary.selected;
      record.summary = result.summary.text;
      record.scores = *evaluate_document(result.summary, doc.reference, config.rouge);
      out.records.push_back(std::move(record));
    }
    out.evaluated = true;
  } catch (const Error &e) {
    out.records.clear();
    out.skip_reason = e.module() + ": " + e.what();
  }
  return out;
}

json score_json(const RougeScore &s) {
  return json{{"p", s.precision}, {"r", s.recall}, {"f1", s.f1}};
}

json mean_json(const MeanScore &s) {
  return json{{"p", s.precision}, {"r", s.recall}, {"f1", s.f1}};
}

std::string fixed4(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", x);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.insert(0, width - s.size(), ' ');
  return s;
}

std::string pad_right(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

BenchmarkReport run_benchmark(const std::vector<Document> &docs, const RunConfig &config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();

  // The limit applies to corpus order; records are then kept in id order.
  std::size_t count = docs.size();
  if (config.limit) count = std::min(count, static_cast<std::size_t>(*config.limit));
  std::vector<std::size_t> order(count);
  for (std::size_t i = 0; i < count; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return docs[a].id < docs[b].id; });

  std::optional<RuleBasedRecognizer> recognizer;
  if (config.pipeline.use_entities) recognizer.emplace(config.pipeline.recognizer);
  const EntityRecognizer *rec = recognizer ? &*recognizer : nullptr;

  std::vector<Outcome> outcomes(order.size());
  const std::size_t workers =
      std::min<std::size_t>(std::max(1, config.jobs.value_or(1)), std::max<std::size_t>(1, order.size()));
  std::atomic<std::size_t> next{0};
  std::mutex log_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < order.size(); i = next++) {
      outcomes[i] = process(docs[order[i]], config, rec);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < workers; ++t) threads.emplace_back(work);
    for (auto &t : threads) t.join();
  }

  BenchmarkReport report;
  report.config = config_echo(config);
  report.budget_sentences = config.pipeline.ranking.budget_sentences;
  report.document_count = order.size();
  for (const Algorithm a : config.algorithms) {
    AlgorithmRow row;
    row.algorithm = a;
    for (const int n : config.rouge.n_values) row.means[n] = {};
    report.rows.push_back(row);
  }

  for (std::size_t i = 0; i < order.size(); ++i) {
    auto &outcome = outcomes[i];
    const auto &doc = docs[order[i]];
    if (!outcome.evaluated) {
      report.skipped.push_back({doc.id, outcome.skip_reason});
      if (doc.reference && !doc.reference->empty()) {
        std::lock_guard lock(log_mutex);
        std::cerr << "graphsum: skipped document '" << doc.id << "': " << outcome.skip_reason
                  << '\n';
      }
      continue;
    }
    ++report.evaluated_count;
    for (std::size_t r = 0; r < outcome.records.size(); ++r) {
      auto &row = report.rows[r];
      ++row.documents;
      for (const auto &[n, score] : outcome.records[r].scores) {
        auto &mean = row.means[n];
        mean.precision += score.precision;
        mean.recall += score.recall;
        mean.f1 += score.f1;
      }
      report.records.push_back(std::move(outcome.records[r]));
    }
  }
  if (report.evaluated_count == 0) {
    throw Error("cli", "no document could be evaluated (" + std::to_string(report.skipped.size()) +
                           " skipped)");
  }
  for (auto &row : report.rows) {
    const auto count = static_cast<double>(row.documents);
    for (auto &[n, mean] : row.means) {
      mean.precision /= count;
      mean.recall /= count;
      mean.f1 /= count;
    }
  }

  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string record_json(const DocumentRecord &record) {
  json out;
  out["id"] = record.id;
  out["algorithm"] = std::string(to_string(record.algorithm));
  out["selected"] = record.selected;
  out["summary"] = record.summary;
  for (const auto &[n, score] : record.scores) out["rouge" + std::to_string(n)] = score_json(score);
  return out.dump();
}

std::string aggregate_json(const BenchmarkReport &report) {
  json out;
  out["type"] = "aggregate";
  out["document_count"] = report.document_count;
  out["evaluated_count"] = report.evaluated_count;
  out["skipped_count"] = report.skipped.size();
  json skipped = json::array();
  for (const auto &s : report.skipped) skipped.push_back({{"id", s.id}, {"reason", s.reason}});
  out["skipped"] = skipped;
  out["budget_sentences"] = report.budget_sentences;
  out["config"] = json::parse(report.config);
  json rows = json::array();
  for (const auto &row : report.rows) {
    json r;
    r["algorithm"] = std::string(to_string(row.algorithm));
    r["documents"] = row.documents;
    for (const auto &[n, mean] : row.means) r["rouge" + std::to_string(n)] = mean_json(mean);
    rows.push_back(r);
  }
  out["rows"] = rows;
  return out.dump();
}

std::string report_jsonl(const BenchmarkReport &report) {
  std::string out;
  for (const auto &record : report.records) {
    out += record_json(record);
    out += '\n';
  }
  out += aggregate_json(report);
  out += '\n';
  return out;
}

std::string format_table(const BenchmarkReport &report) {
  constexpr std::size_t kNameWidth = 12;
  constexpr std::size_t kCell = 8;
  std::vector<int> ns;
  if (!report.rows.empty()) {
    for (const auto &[n, mean] : report.rows.front().means) ns.push_back(n);
  }

  std::string out;
  out += "documents: " + std::to_string(report.document_count) +
         "  evaluated: " + std::to_string(report.evaluated_count) +
         "  skipped: " + std::to_string(report.skipped.size()) +
         "  budget: " + std::to_string(report.budget_sentences) + " sentences\n";

  std::string head1 = pad_right("", kNameWidth);
  std::string head2 = pad_right("algorithm", kNameWidth);
  for (const int n : ns) {
    head1 += pad_right("  ROUGE-" + std::to_string(n), 3 * kCell);
    head2 += pad("P", kCell) + pad("R", kCell) + pad("F1", kCell);
  }
  out += head1 + '\n' + head2 + '\n';
  for (const auto &row : report.rows) {
    std::string line = pad_right(std::string(to_string(row.algorithm)), kNameWidth);
    for (const int n : ns) {
      const auto &m = row.means.at(n);
      line += pad(fixed4(m.precision), kCell) + pad(fixed4(m.recall), kCell) + pad(fixed4(m.f1), kCell);
    }
    out += line + '\n';
  }
  return out;
}

}  // namespace graphsum
