#include "graphsum/ner.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>
#include <unordered_set>

#include <json.hpp>

#include "graphsum/error.hpp"
#include "graphsum/utf8.hpp"

namespace graphsum {

namespace fs = std::filesystem;

namespace {

// Capitalized by convention but not names on their own.
constexpr std::string_view kCalendarWords[] = {
    "monday", "tuesday",  "wednesday", "thursday", "friday",   "saturday", "sunday",
    "january", "february", "march",   "april",    "june",     "july",     "august",
    "september", "october", "november", "december"};

constexpr std::string_view kHonorifics[] = {"mr", "mrs", "ms", "miss", "dr", "prof"};
constexpr std::string_view kCorporateMarkers[] = {
    "fc",     "inc",   "ltd",     "corp",        "co",      "llc",        "plc",
    "united", "city",  "club",    "group",       "company", "corporation", "association",
    "council", "university", "party", "bank"};

template <std::size_t N>
bool contains(const std::string_view (&list)[N], std::string_view word) {
  return std::ranges::find(list, word) != std::end(list);
}

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::size_t pos = 0;
  std::string current;
  while (pos < text.size()) {
    const std::size_t start = pos;
    const char32_t cp = utf8::decode(text, pos);
    if (utf8::is_space(cp)) {
      if (!current.empty()) words.push_back(std::move(current));
      current.clear();
    } else {
      current.append(text.substr(start, pos - start));
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

// Lowercase, whitespace-normalized word sequence used as the merge key.
std::vector<std::string> key_words(std::string_view surface) {
  return split_words(utf8::to_lower(surface));
}

std::string join_words(const std::vector<std::string> &words) {
  std::string out;
  for (const auto &w : words) {
    if (!out.empty()) out.push_back(' ');
    out += w;
  }
  return out;
}

bool is_word_suffix(const std::vector<std::string> &shorter,
                    const std::vector<std::string> &longer) {
  if (shorter.size() >= longer.size()) return false;
  return std::equal(shorter.rbegin(), shorter.rend(), longer.rbegin());
}

std::size_t code_point_count(std::string_view s) {
  std::size_t n = 0;
  std::size_t pos = 0;
  while (pos < s.size()) {
    utf8::decode(s, pos);
    ++n;
  }
  return n;
}

bool starts_upper(std::string_view token) {
  if (token.empty()) return false;
  std::size_t pos = 0;
  return utf8::is_upper(utf8::decode(token, pos));
}

// Length in bytes of a trailing possessive ('s or ’s), or 0.
std::size_t possessive_suffix(std::string_view token) {
  if (token.size() > 2 && token.substr(token.size() - 2) == "'s") return 2;
  if (token.size() > 4 && token.substr(token.size() - 4) == "\xE2\x80\x99s") return 4;
  return 0;
}

EntityType vote_type(const std::vector<const CandidateMention *> &members) {
  auto tally = [&](bool gazetteer_only) -> std::optional<EntityType> {
    std::map<EntityType, int> votes;
    for (const auto *m : members) {
      if (gazetteer_only && !m->from_gazetteer) continue;
      if (!gazetteer_only && m->type == EntityType::kOther) continue;
      ++votes[m->type];
    }
    if (votes.empty()) return std::nullopt;
    // std::map iterates in enum order, so ties go to the earlier label.
    auto best = votes.begin();
    for (auto it = votes.begin(); it != votes.end(); ++it) {
      if (it->second > best->second) best = it;
    }
    return best->first;
  };
  if (auto t = tally(true)) return *t;
  if (auto t = tally(false)) return *t;
  return EntityType::kOther;
}

std::string read_file(const fs::path &path, const char *module) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(module, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::string_view to_string(EntityType type) {
  switch (type) {
    case EntityType::kPerson:
      return "PERSON";
    case EntityType::kOrg:
      return "ORG";
    case EntityType::kGpe:
      return "GPE";
    case EntityType::kOther:
      return "OTHER";
  }
  return "OTHER";
}

EntityType parse_entity_type(std::string_view label) {
  const std::string lower = utf8::to_lower(utf8::trim(label));
  if (lower == "person" || lower == "per") return EntityType::kPerson;
  if (lower == "org") return EntityType::kOrg;
  if (lower == "gpe" || lower == "loc") return EntityType::kGpe;
  return EntityType::kOther;
}

void RecognizerConfig::validate() const {
  if (min_mention_length < 1) {
    throw ConfigError("ner", "min_mention_length must be >= 1");
  }
}

std::vector<Entity> merge_mentions(std::vector<CandidateMention> candidates) {
  // Collapse duplicate spans, preferring gazetteer-typed candidates.
  std::sort(candidates.begin(), candidates.end(), [](const auto &a, const auto &b) {
    return std::tuple(a.mention.sentence_index, a.mention.offset, a.mention.surface.size(),
                      !a.from_gazetteer, a.type, a.mention.surface) <
           std::tuple(b.mention.sentence_index, b.mention.offset, b.mention.surface.size(),
                      !b.from_gazetteer, b.type, b.mention.surface);
  });
  candidates.erase(std::unique(candidates.begin(), candidates.end(),
                               [](const auto &a, const auto &b) {
                                 return a.mention.sentence_index == b.mention.sentence_index &&
                                        a.mention.offset == b.mention.offset &&
                                        a.mention.surface.size() == b.mention.surface.size();
                               }),
                   candidates.end());

  std::map<std::string, std::vector<std::string>> forms;  // key -> words
  std::vector<std::string> keys;
  keys.reserve(candidates.size());
  for (const auto &c : candidates) {
    auto words = key_words(c.mention.surface);
    std::string key = join_words(words);
    forms.emplace(key, std::move(words));
    keys.push_back(std::move(key));
  }

  std::vector<const std::pair<const std::string, std::vector<std::string>> *> maximal;
  for (const auto &f : forms) {
    bool is_max = true;
    for (const auto &g : forms) {
      if (is_word_suffix(f.second, g.second)) {
        is_max = false;
        break;
      }
    }
    if (is_max) maximal.push_back(&f);
  }

  std::map<std::string, std::string> owner;  // form key -> group key
  for (const auto &f : forms) {
    std::vector<std::string> owners;
    for (const auto *m : maximal) {
      if (m->first == f.first || is_word_suffix(f.second, m->second)) owners.push_back(m->first);
    }
    owner[f.first] = owners.size() == 1 ? owners.front() : f.first;
  }

  std::map<std::string, std::vector<const CandidateMention *>> groups;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    groups[owner[keys[i]]].push_back(&candidates[i]);
  }

  std::vector<Entity> entities;
  entities.reserve(groups.size());
  for (const auto &[key, members] : groups) {
    Entity e;
    e.canonical = key;
    e.type = vote_type(members);
    for (const auto *m : members) e.mentions.push_back(m->mention);
    std::sort(e.mentions.begin(), e.mentions.end(), [](const Mention &a, const Mention &b) {
      return std::tie(a.sentence_index, a.offset, a.surface) <
             std::tie(b.sentence_index, b.offset, b.surface);
    });
    entities.push_back(std::move(e));
  }
  std::sort(entities.begin(), entities.end(), [](const Entity &a, const Entity &b) {
    const auto &ma = a.mentions.front();
    const auto &mb = b.mentions.front();
    return std::tie(ma.sentence_index, ma.offset, a.canonical) <
           std::tie(mb.sentence_index, mb.offset, b.canonical);
  });
  return entities;
}

Gazetteer Gazetteer::load(const std::vector<fs::path> &paths) {
  Gazetteer g;
  for (const auto &path : paths) {
    const std::string text = utf8::sanitize(read_file(path, "ner"));
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      if (utf8::trim(line).empty()) continue;
      const auto tab = line.find('\t');
      if (tab == std::string::npos) {
        throw ConfigError("ner", path.string() + ":" + std::to_string(line_no) +
                                     ": expected `surface<TAB>TYPE`");
      }
      g.add(std::string_view(line).substr(0, tab),
            parse_entity_type(std::string_view(line).substr(tab + 1)));
    }
  }
  return g;
}

void Gazetteer::add(std::string_view surface, EntityType type) {
  std::vector<std::string> tokens;
  for (const auto &t : tokenize(surface)) tokens.push_back(utf8::to_lower(t));
  if (!tokens.empty()) entries_.push_back({std::move(tokens), type});
}

std::vector<Gazetteer::Match> Gazetteer::find(const std::vector<std::string> &lower_tokens) const {
  std::vector<Match> out;
  std::size_t i = 0;
  while (i < lower_tokens.size()) {
    std::size_t best_len = 0;
    EntityType best_type = EntityType::kOther;
    for (const auto &entry : entries_) {
      const std::size_t len = entry.tokens.size();
      if (len <= best_len || i + len > lower_tokens.size()) continue;
      if (std::equal(entry.tokens.begin(), entry.tokens.end(), lower_tokens.begin() + i)) {
        best_len = len;
        best_type = entry.type;
      }
    }
    if (best_len > 0) {
      out.push_back({i, i + best_len - 1, best_type});
      i += best_len;
    } else {
      ++i;
    }
  }
  return out;
}

RuleBasedRecognizer::RuleBasedRecognizer(RecognizerConfig config, const Lexicon &lexicon)
    : config_(std::move(config)), lexicon_(lexicon) {
  config_.validate();
  gazetteer_ = Gazetteer::load(config_.gazetteer_paths);
}

std::vector<Entity> RuleBasedRecognizer::recognize(const std::vector<Sentence> &sentences) const {
  // Words seen in lower case anywhere; a capitalized sentence-initial word
  // that also appears in lower case is an ordinary word, not a name.
  std::unordered_set<std::string> lowercase_words;
  for (const auto &s : sentences) {
    for (const auto &span : tokenize_spans(s.text)) {
      if (!starts_upper(span.text)) lowercase_words.insert(utf8::to_lower(span.text));
    }
  }

  auto is_stop = [&](std::string_view token) {
    const std::string lower = utf8::to_lower(clean_token(token));
    return lower.empty() || lexicon_.is_stop_word(lexicon_.lemmatize(lower));
  };

  std::vector<CandidateMention> candidates;
  for (std::size_t si = 0; si < sentences.size(); ++si) {
    const Sentence &sentence = sentences[si];
    const std::string_view text = sentence.text;
    const auto spans = tokenize_spans(text);

    struct Run {
      std::size_t first = 0;
      std::size_t last = 0;  // inclusive
    };
    std::vector<Run> runs;
    bool open = false;
    for (std::size_t i = 0; i < spans.size(); ++i) {
      const auto &span = spans[i];
      if (!starts_upper(span.text)) {
        open = false;
        continue;
      }
      bool joins = open && config_.merge_titlecase_runs && !span.stripped_leading;
      if (joins) {
        const auto &prev = spans[i - 1];
        const bool honorific_dot =
            contains(kHonorifics, utf8::to_lower(prev.text)) &&
            text.substr(prev.end, 1) == "." && prev.end + 1 <= span.begin;
        if ((prev.stripped_trailing && !honorific_dot) || possessive_suffix(prev.text) > 0) {
          joins = false;
        }
      }
      if (joins) {
        runs.back().last = i;
      } else {
        runs.push_back({i, i});
      }
      open = true;
    }

    std::vector<std::pair<std::size_t, std::size_t>> kept;  // byte extents
    for (auto run : runs) {
      bool honorific = false;
      while (run.first <= run.last && contains(kHonorifics, utf8::to_lower(spans[run.first].text))) {
        honorific = true;
        ++run.first;
      }
      if (run.first > run.last) continue;
      if (run.first == 0 && is_stop(spans[0].text)) ++run.first;
      if (run.first > run.last) continue;
      if (run.first == run.last) {
        const auto &only = spans[run.first];
        if (is_stop(only.text)) continue;
        if (contains(kCalendarWords, utf8::to_lower(clean_token(only.text)))) continue;
        if (run.first == 0 && !honorific &&
            lowercase_words.count(utf8::to_lower(only.text)) > 0) {
          continue;
        }
      }

      const auto &last = spans[run.last];
      const std::size_t begin = spans[run.first].begin;
      const std::size_t end = last.end - possessive_suffix(last.text);
      CandidateMention c;
      c.mention.sentence_index = sentence.index;
      c.mention.offset = begin;
      c.mention.surface = std::string(text.substr(begin, end - begin));
      if (code_point_count(c.mention.surface) < static_cast<std::size_t>(config_.min_mention_length)) {
        continue;
      }
      const std::string last_word =
          utf8::to_lower(clean_token(text.substr(last.begin, end - last.begin)));
      if (honorific) {
        c.type = EntityType::kPerson;
      } else if (contains(kCorporateMarkers, last_word)) {
        c.type = EntityType::kOrg;
      }
      kept.emplace_back(begin, end);
      candidates.push_back(std::move(c));
    }

    if (!gazetteer_.empty()) {
      std::vector<std::string> lower;
      lower.reserve(spans.size());
      for (const auto &span : spans) {
        const std::string_view t = span.text.substr(0, span.text.size() - possessive_suffix(span.text));
        lower.push_back(utf8::to_lower(t));
      }
      for (const auto &m : gazetteer_.find(lower)) {
        const std::size_t begin = spans[m.first_token].begin;
        const auto &last = spans[m.last_token];
        const std::size_t end = last.end - possessive_suffix(last.text);
        // Matches strictly inside a title-case run are covered by the run.
        bool inside_run = false;
        for (const auto &[rb, re] : kept) {
          if (rb <= begin && end <= re && !(rb == begin && end == re)) {
            inside_run = true;
            break;
          }
        }
        if (inside_run) continue;
        CandidateMention c;
        c.mention.sentence_index = sentence.index;
        c.mention.offset = begin;
        c.mention.surface = std::string(text.substr(begin, end - begin));
        c.type = m.type;
        c.from_gazetteer = true;
        if (code_point_count(c.mention.surface) < static_cast<std::size_t>(config_.min_mention_length)) {
          continue;
        }
        candidates.push_back(std::move(c));
      }
    }
  }
  return merge_mentions(std::move(candidates));
}

std::vector<Entity> extract_entities(const std::vector<Sentence> &sentences,
                                     const RecognizerConfig &config) {
  return RuleBasedRecognizer(config).recognize(sentences);
}

std::vector<Entity> parse_annotations(std::string_view json_text,
                                      const std::vector<Sentence> &sentences) {
  nlohmann::json records;
  try {
    records = nlohmann::json::parse(utf8::sanitize(json_text));
  } catch (const nlohmann::json::parse_error &e) {
    throw FormatError("ner", std::string("annotations: malformed JSON (") + e.what() + ")");
  }
  if (!records.is_array()) throw FormatError("ner", "annotations: expected a JSON list");

  std::map<std::pair<int, std::string>, std::size_t> next_search;
  std::vector<CandidateMention> candidates;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto &r = records[i];
    const std::string where = "annotation record " + std::to_string(i);
    if (!r.is_object() || !r.contains("text") || !r["text"].is_string() ||
        !r.contains("sentence_index") || !r["sentence_index"].is_number_integer()) {
      throw FormatError("ner", where + ": expected {text, type, sentence_index}");
    }
    const auto index = r["sentence_index"].get<long long>();
    if (index < 0 || index >= static_cast<long long>(sentences.size())) {
      throw FormatError("ner", where + ": sentence_index " + std::to_string(index) +
                                   " out of range (document has " +
                                   std::to_string(sentences.size()) + " sentences)");
    }
    const std::string surface(utf8::trim(r["text"].get<std::string>()));
    if (surface.empty()) throw FormatError("ner", where + ": empty text");
    const EntityType type =
        r.contains("type") && r["type"].is_string() ? parse_entity_type(r["type"].get<std::string>())
                                                    : EntityType::kOther;

    const Sentence &sentence = sentences[static_cast<std::size_t>(index)];
    const std::string hay = utf8::to_lower(sentence.text);
    const std::string needle = utf8::to_lower(surface);
    auto &from = next_search[{static_cast<int>(index), needle}];
    std::size_t at = hay.find(needle, from);
    if (at == std::string::npos) at = hay.find(needle);
    if (at == std::string::npos) {
      throw FormatError("ner", where + ": '" + surface + "' does not occur in sentence " +
                                   std::to_string(index));
    }
    from = at + needle.size();

    CandidateMention c;
    c.mention.sentence_index = sentence.index;
    c.mention.offset = at;
    c.mention.surface = sentence.text.substr(at, needle.size());
    c.type = type;
    c.from_gazetteer = true;
    candidates.push_back(std::move(c));
  }
  return merge_mentions(std::move(candidates));
}

std::vector<Entity> import_annotations(const fs::path &path,
                                       const std::vector<Sentence> &sentences) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("ner", path.string(), "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_annotations(buf.str(), sentences);
}

}  // namespace graphsum
