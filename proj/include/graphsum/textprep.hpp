#ifndef GRAPHSUM_TEXTPREP_HPP_
#define GRAPHSUM_TEXTPREP_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace graphsum {

struct ProcessedToken {
  std::string surface;  // cleaned, lowercased
  std::string lemma;    // base form

  bool operator==(const ProcessedToken &) const = default;
};

struct Sentence {
  int index = 0;
  std::string text;
  std::vector<ProcessedToken> tokens;

  // Distinct lemmas of the sentence.
  std::set<std::string> lemma_set() const;
};

/// A token produced by the tokenizer together with its byte range in the
/// source text and whether punctuation was stripped from either side.
struct TokenSpan {
  std::string_view text;
  std::size_t begin = 0;
  std::size_t end = 0;
  bool stripped_leading = false;
  bool stripped_trailing = false;
};

// Splits a document body into sentences at `.`, `!` and `?` when the
// terminator (plus any closing quotes) is followed by whitespace and an
// upper-case letter, or by the end of the text. A blank line is always a
// boundary. Known abbreviations ("Mr.", "U.S.") and single-letter initials
// suppress the split. Candidates without any letter are dropped.
std::vector<Sentence> segment_sentences(std::string_view body);

// Whitespace tokenization followed by stripping of leading and trailing
// non-alphanumeric characters. Internal punctuation is left in place.
std::vector<std::string> tokenize(std::string_view text);
std::vector<TokenSpan> tokenize_spans(std::string_view text);

// Removes every character that is not a letter, digit, hyphen or apostrophe,
// normalizes U+2019 to ', and trims hyphens/apostrophes from both ends.
std::string clean_token(std::string_view token);

bool is_abbreviation(std::string_view word);

/// Stop-word list and lemma table. Immutable once constructed, so one
/// instance can be shared across threads.
class Lexicon {
 public:
  Lexicon(std::unordered_set<std::string> stop_words,
          std::unordered_map<std::string, std::string> lemma_table);

  // The stop-word list and lemma table compiled into the library.
  static const Lexicon &builtin();

  // Loads replacement tables. A missing path keeps the built-in table.
  static Lexicon load(const std::optional<std::filesystem::path> &stop_words_path,
                      const std::optional<std::filesystem::path> &lemma_table_path);

  // One lowercase token per line; '#' starts a comment.
  static std::unordered_set<std::string> parse_stop_words(std::string_view text);
  // `inflected<TAB>lemma` per line; '#' starts a comment.
  static std::unordered_map<std::string, std::string> parse_lemma_table(std::string_view text);

  bool is_stop_word(std::string_view lemma) const;
  const std::unordered_set<std::string> &stop_words() const { return stop_words_; }
  const std::unordered_map<std::string, std::string> &lemma_table() const { return lemma_table_; }

  std::string lemmatize(std::string_view token) const;

  // tokenize -> clean -> lowercase -> lemmatize -> drop stop-words.
  // Tokens are always recomputed from `text`.
  Sentence preprocess(Sentence sentence) const;
  std::vector<Sentence> preprocess(std::vector<Sentence> sentences) const;

 private:
  std::unordered_set<std::string> stop_words_;
  std::unordered_map<std::string, std::string> lemma_table_;
};

// Convenience wrappers over Lexicon::builtin().
std::string lemmatize(std::string_view token);
Sentence preprocess(Sentence sentence);

}  // namespace graphsum

#endif  // GRAPHSUM_TEXTPREP_HPP_
