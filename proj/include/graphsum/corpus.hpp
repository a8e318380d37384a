#ifndef GRAPHSUM_CORPUS_HPP_
#define GRAPHSUM_CORPUS_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace graphsum {

struct Document {
  std::string id;
  std::string body;
  // Highlight sentences; absent when the source carries no reference.
  std::optional<std::vector<std::string>> reference;

  bool operator==(const Document &) const = default;
};

struct CorpusStats {
  std::size_t document_count = 0;
  std::size_t reference_count = 0;
  double mean_body_tokens = 0.0;
  std::size_t min_body_tokens = 0;
  std::size_t max_body_tokens = 0;
  double mean_reference_tokens = 0.0;
  std::size_t min_reference_tokens = 0;
  std::size_t max_reference_tokens = 0;
  std::size_t vocabulary_size = 0;
};

// Parses CNN/DailyMail story text: the body is everything before the first
// line reading "@highlight"; each marker introduces one highlight.
Document parse_story(std::string_view text, std::string id);

// Loads a `.story` (or plain text) file; the id is the filename stem.
// Invalid UTF-8 is replaced with U+FFFD.
Document load_story_file(const std::filesystem::path &path);

// One JSON object per line with keys `text` (required), `id` and `summary`
// (string or list of strings). Lines without an id are numbered "000000",
// "000001", ... by their zero-based line position.
std::vector<Document> parse_jsonl(std::string_view text);
std::vector<Document> load_jsonl(const std::filesystem::path &path);

std::string to_jsonl_line(const Document &doc);
void write_jsonl(const std::filesystem::path &path, const std::vector<Document> &docs);

// Loads every `.story`, `.txt` and `.jsonl` file of a directory (or a single
// file) in lexicographic path order. Ids must be unique.
std::vector<Document> load_corpus(const std::filesystem::path &path, bool recursive = false);

CorpusStats compute_stats(const std::vector<Document> &docs);

// Reference highlights joined with single spaces, as used for evaluation.
std::string joined_reference(const Document &doc);

}  // namespace graphsum

#endif  // GRAPHSUM_CORPUS_HPP_
