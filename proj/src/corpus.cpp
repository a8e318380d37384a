#include "graphsum/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "graphsum/error.hpp"
#include "graphsum/textprep.hpp"
#include "graphsum/utf8.hpp"

namespace graphsum {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::string_view kHighlightMarker = "@highlight";

std::string read_file(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("corpus", path.string(), "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("corpus", path.string(), "read failed");
  return buf.str();
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

// Joins the non-empty trimmed lines of one highlight block with spaces.
std::string collapse_block(const std::vector<std::string_view> &lines) {
  std::string out;
  for (const auto line : lines) {
    const std::string_view t = utf8::trim(line);
    if (t.empty()) continue;
    if (!out.empty()) out.push_back(' ');
    out.append(t);
  }
  return out;
}

std::string zero_padded(std::size_t n) {
  std::string digits = std::to_string(n);
  if (digits.size() < 6) digits.insert(0, 6 - digits.size(), '0');
  return digits;
}

bool is_corpus_file(const fs::path &p) {
  const auto ext = p.extension();
  return ext == ".story" || ext == ".txt" || ext == ".jsonl";
}

std::vector<Document> load_file(const fs::path &path) {
  if (path.extension() == ".jsonl") return load_jsonl(path);
  return {load_story_file(path)};
}

}  // namespace

Document parse_story(std::string_view text, std::string id) {
  const std::string clean = utf8::sanitize(text);
  const auto lines = split_lines(clean);

  std::vector<std::string_view> body_lines;
  std::vector<std::vector<std::string_view>> blocks;
  for (const auto line : lines) {
    if (utf8::trim(line) == kHighlightMarker) {
      blocks.emplace_back();
    } else if (blocks.empty()) {
      body_lines.push_back(line);
    } else {
      blocks.back().push_back(line);
    }
  }

  std::string body;
  for (std::size_t i = 0; i < body_lines.size(); ++i) {
    if (i > 0) body.push_back('\n');
    body.append(body_lines[i]);
  }

  Document doc;
  doc.id = std::move(id);
  doc.body = std::string(utf8::trim(body));
  if (doc.body.empty()) {
    throw MalformedDocumentError("corpus", "document '" + doc.id + "' has an empty body");
  }
  if (!blocks.empty()) {
    std::vector<std::string> highlights;
    for (const auto &block : blocks) {
      std::string h = collapse_block(block);
      if (!h.empty()) highlights.push_back(std::move(h));
    }
    if (!highlights.empty()) doc.reference = std::move(highlights);
  }
  return doc;
}

Document load_story_file(const fs::path &path) {
  return parse_story(read_file(path), path.stem().string());
}

std::vector<Document> parse_jsonl(std::string_view text) {
  const std::string clean = utf8::sanitize(text);
  const auto lines = split_lines(clean);
  std::vector<Document> docs;
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (utf8::trim(lines[i]).empty()) continue;
    const std::string where = "line " + std::to_string(i + 1);
    json record;
    try {
      record = json::parse(lines[i]);
    } catch (const json::parse_error &e) {
      throw FormatError("corpus", where + ": malformed JSON (" + e.what() + ")");
    }
    if (!record.is_object()) throw FormatError("corpus", where + ": expected a JSON object");

    Document doc;
    if (const auto it = record.find("id"); it != record.end()) {
      if (!it->is_string()) throw FormatError("corpus", where + ": `id` must be a string");
      doc.id = it->get<std::string>();
    } else {
      doc.id = zero_padded(i);
    }

    const auto text_it = record.find("text");
    if (text_it == record.end() || !text_it->is_string()) {
      throw FormatError("corpus", where + ": missing string field `text`");
    }
    doc.body = text_it->get<std::string>();
    if (utf8::trim(doc.body).empty()) {
      throw MalformedDocumentError("corpus", where + ": document '" + doc.id +
                                                 "' has an empty body");
    }

    if (const auto it = record.find("summary"); it != record.end() && !it->is_null()) {
      std::vector<std::string> highlights;
      if (it->is_string()) {
        highlights.push_back(it->get<std::string>());
      } else if (it->is_array()) {
        for (const auto &h : *it) {
          if (!h.is_string()) {
            throw FormatError("corpus", where + ": `summary` entries must be strings");
          }
          highlights.push_back(h.get<std::string>());
        }
      } else {
        throw FormatError("corpus", where + ": `summary` must be a string or list of strings");
      }
      std::erase_if(highlights, [](const std::string &h) { return utf8::trim(h).empty(); });
      doc.reference = std::move(highlights);
    }

    if (!seen.insert(doc.id).second) {
      throw FormatError("corpus", where + ": duplicate id '" + doc.id + "'");
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

std::vector<Document> load_jsonl(const fs::path &path) {
  try {
    return parse_jsonl(read_file(path));
  } catch (const FormatError &e) {
    throw FormatError("corpus", path.string() + ": " + e.what());
  } catch (const MalformedDocumentError &e) {
    throw MalformedDocumentError("corpus", path.string() + ": " + e.what());
  }
}

std::string to_jsonl_line(const Document &doc) {
  json record;
  record["id"] = doc.id;
  record["text"] = doc.body;
  if (doc.reference) record["summary"] = *doc.reference;
  return record.dump();
}

void write_jsonl(const fs::path &path, const std::vector<Document> &docs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("corpus", path.string(), "cannot open for writing");
  for (const auto &doc : docs) out << to_jsonl_line(doc) << '\n';
  if (!out) throw IoError("corpus", path.string(), "write failed");
}

std::vector<Document> load_corpus(const fs::path &path, bool recursive) {
  std::error_code ec;
  if (!fs::exists(path, ec)) throw IoError("corpus", path.string(), "no such file or directory");
  if (!fs::is_directory(path, ec)) return load_file(path);

  std::vector<fs::path> files;
  auto collect = [&](const fs::directory_entry &entry) {
    if (entry.is_regular_file() && is_corpus_file(entry.path())) files.push_back(entry.path());
  };
  try {
    if (recursive) {
      for (const auto &entry : fs::recursive_directory_iterator(path)) collect(entry);
    } else {
      for (const auto &entry : fs::directory_iterator(path)) collect(entry);
    }
  } catch (const fs::filesystem_error &e) {
    throw IoError("corpus", path.string(), e.what());
  }
  std::sort(files.begin(), files.end(), [&](const fs::path &a, const fs::path &b) {
    return a.lexically_relative(path).generic_string() <
           b.lexically_relative(path).generic_string();
  });

  std::vector<Document> docs;
  std::unordered_set<std::string> seen;
  for (const auto &file : files) {
    for (auto &doc : load_file(file)) {
      if (!seen.insert(doc.id).second) {
        throw FormatError("corpus", file.string() + ": duplicate id '" + doc.id + "'");
      }
      docs.push_back(std::move(doc));
    }
  }
  return docs;
}

CorpusStats compute_stats(const std::vector<Document> &docs) {
  if (docs.empty()) throw Error("corpus", "cannot compute statistics of an empty corpus");
  CorpusStats stats;
  stats.document_count = docs.size();
  std::unordered_set<std::string> vocabulary;
  std::size_t body_total = 0;
  std::size_t reference_total = 0;
  bool first_body = true;
  bool first_reference = true;
  for (const auto &doc : docs) {
    const auto tokens = tokenize(doc.body);
    body_total += tokens.size();
    stats.min_body_tokens = first_body ? tokens.size() : std::min(stats.min_body_tokens, tokens.size());
    stats.max_body_tokens = std::max(stats.max_body_tokens, tokens.size());
    first_body = false;
    for (const auto &t : tokens) vocabulary.insert(utf8::to_lower(t));

    if (doc.reference && !doc.reference->empty()) {
      const std::size_t n = tokenize(joined_reference(doc)).size();
      ++stats.reference_count;
      reference_total += n;
      stats.min_reference_tokens = first_reference ? n : std::min(stats.min_reference_tokens, n);
      stats.max_reference_tokens = std::max(stats.max_reference_tokens, n);
      first_reference = false;
    }
  }
  stats.mean_body_tokens = static_cast<double>(body_total) / static_cast<double>(docs.size());
  if (stats.reference_count > 0) {
    stats.mean_reference_tokens =
        static_cast<double>(reference_total) / static_cast<double>(stats.reference_count);
  }
  stats.vocabulary_size = vocabulary.size();
  return stats;
}

std::string joined_reference(const Document &doc) {
  std::string out;
  if (!doc.reference) return out;
  for (const auto &h : *doc.reference) {
    if (!out.empty()) out.push_back(' ');
    out.append(h);
  }
  return out;
}

}  // namespace graphsum
