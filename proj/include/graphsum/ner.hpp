#ifndef GRAPHSUM_NER_HPP_
#define GRAPHSUM_NER_HPP_

#include <cstddef>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "graphsum/textprep.hpp"

namespace graphsum {

enum class EntityType { kPerson, kOrg, kGpe, kOther };

std::string_view to_string(EntityType type);
// Accepts PERSON/ORG/GPE/OTHER (any case) plus LOC as an alias of GPE.
// Anything else maps to kOther.
EntityType parse_entity_type(std::string_view label);

struct Mention {
  int sentence_index = 0;
  std::string surface;     // verbatim slice of the sentence text
  std::size_t offset = 0;  // byte offset of `surface` in the sentence text

  bool operator==(const Mention &) const = default;
};

struct Entity {
  std::string canonical;  // lowercase form of the longest mention
  EntityType type = EntityType::kOther;
  std::vector<Mention> mentions;  // sorted by (sentence_index, offset)

  bool operator==(const Entity &) const = default;
};

struct RecognizerConfig {
  std::vector<std::filesystem::path> gazetteer_paths;
  int min_mention_length = 2;
  bool merge_titlecase_runs = true;

  void validate() const;
};

/// A mention before merging, as produced by a recognizer backend.
struct CandidateMention {
  Mention mention;
  EntityType type = EntityType::kOther;
  bool from_gazetteer = false;
};

// Groups candidate mentions into entities. Two surfaces belong together when
// they are equal ignoring case, or when one is a trailing word sequence of
// exactly one longest surface ("Ronaldo" -> "Cristiano Ronaldo"). A short
// form that trails several different long forms stays separate. The result
// depends only on the set of candidates, not their order.
std::vector<Entity> merge_mentions(std::vector<CandidateMention> candidates);

/// Case-insensitive phrase list matched on token boundaries.
class Gazetteer {
 public:
  Gazetteer() = default;

  // Lines are `surface<TAB>TYPE`; '#' starts a comment.
  static Gazetteer load(const std::vector<std::filesystem::path> &paths);
  void add(std::string_view surface, EntityType type);
  bool empty() const { return entries_.empty(); }

  struct Match {
    std::size_t first_token = 0;
    std::size_t last_token = 0;  // inclusive
    EntityType type = EntityType::kOther;
  };
  // Longest match at each position, scanning left to right without overlap.
  std::vector<Match> find(const std::vector<std::string> &lower_tokens) const;

 private:
  struct Entry {
    std::vector<std::string> tokens;
    EntityType type;
  };
  std::vector<Entry> entries_;
};

/// Recognizer contract. Implementations return merged entities whose
/// mentions point into the given sentences.
class EntityRecognizer {
 public:
  virtual ~EntityRecognizer() = default;
  virtual std::vector<Entity> recognize(const std::vector<Sentence> &sentences) const = 0;
};

/// Title-case runs plus gazetteer matches, typed by gazetteer label,
/// honorific ("Mr. X" -> PERSON) or corporate suffix ("... FC" -> ORG).
class RuleBasedRecognizer final : public EntityRecognizer {
 public:
  explicit RuleBasedRecognizer(RecognizerConfig config,
                               const Lexicon &lexicon = Lexicon::builtin());

  std::vector<Entity> recognize(const std::vector<Sentence> &sentences) const override;

 private:
  RecognizerConfig config_;
  const Lexicon &lexicon_;
  Gazetteer gazetteer_;
};

std::vector<Entity> extract_entities(const std::vector<Sentence> &sentences,
                                     const RecognizerConfig &config);

// Imports externally tagged mentions: a JSON list of
// {"text", "type", "sentence_index"} records.
std::vector<Entity> parse_annotations(std::string_view json_text,
                                      const std::vector<Sentence> &sentences);
std::vector<Entity> import_annotations(const std::filesystem::path &path,
                                       const std::vector<Sentence> &sentences);

}  // namespace graphsum

#endif  // GRAPHSUM_NER_HPP_
