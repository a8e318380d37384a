#include "graphsum/textprep.hpp"

#include <algorithm>
#include <iterator>
#include <fstream>
#include <sstream>

#include "embedded_data.hpp"
#include "graphsum/error.hpp"
#include "graphsum/utf8.hpp"

namespace graphsum {

namespace {

constexpr std::string_view kAbbreviations[] = {
    "mr",   "mrs",  "ms",   "dr",  "prof", "sr",   "jr",   "st",   "mt",
    "gen",  "col",  "lt",   "sgt", "capt", "cmdr", "gov",  "sen",  "rep",
    "rev",  "hon",  "pres", "supt", "det", "insp", "vs",   "v",    "u.s",
    "u.k",  "u.n",  "e.g",  "i.e", "jan",  "feb",  "apr",  "aug",  "sep",
    "sept", "oct",  "nov",  "dec", "fig",  "approx", "dept", "messrs"};

bool is_terminator(char32_t cp) { return cp == U'.' || cp == U'!' || cp == U'?'; }

bool is_closing_quote(char32_t cp) {
  return cp == U'"' || cp == U'\'' || cp == U')' || cp == U']' || cp == 0x201D ||
         cp == 0x2019 || cp == 0xBB;
}

bool is_opening_quote(char32_t cp) {
  return cp == U'"' || cp == U'\'' || cp == U'(' || cp == U'[' || cp == 0x201C ||
         cp == 0x2018 || cp == 0xAB;
}

bool has_letter(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (utf8::is_letter(utf8::decode(text, pos))) return true;
  }
  return false;
}

// Single letters separated by dots, e.g. "D.C" or "E.U".
bool is_dotted_initialism(std::string_view word) {
  if (word.size() < 3) return false;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const char c = word[i];
    if (i % 2 == 0) {
      if (!((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'))) return false;
    } else if (c != '.') {
      return false;
    }
  }
  return true;
}

// The whitespace-delimited word that ends right before byte `dot`, with any
// opening punctuation removed.
std::string_view word_before(std::string_view text, std::size_t dot) {
  std::size_t begin = dot;
  while (begin > 0) {
    const char c = text[begin - 1];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') break;
    --begin;
  }
  while (begin < dot && (text[begin] == '(' || text[begin] == '"' || text[begin] == '\'' ||
                         text[begin] == '[')) {
    ++begin;
  }
  return text.substr(begin, dot - begin);
}

bool suppresses_split(std::string_view text, std::size_t dot) {
  const std::string_view word = word_before(text, dot);
  if (word.empty()) return false;
  // Initials such as the "J." in "J. K. Rowling".
  if (word.size() == 1 && word[0] >= 'A' && word[0] <= 'Z') return true;
  return is_abbreviation(word) || is_dotted_initialism(word);
}

void push_sentence(std::vector<Sentence> &out, std::string_view candidate) {
  const std::string_view trimmed = utf8::trim(candidate);
  if (trimmed.empty() || !has_letter(trimmed)) return;
  Sentence s;
  s.index = static_cast<int>(out.size());
  s.text = std::string(trimmed);
  out.push_back(std::move(s));
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool is_vowel_letter(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// Consonant test in the Porter sense: 'y' after a consonant is a vowel.
bool is_consonant(std::string_view w, std::size_t i) {
  const char c = w[i];
  if (is_vowel_letter(c)) return false;
  if (c == 'y') return i == 0 || !is_consonant(w, i - 1);
  return true;
}

// Number of vowel-consonant sequences in `w`.
int measure(std::string_view w) {
  int m = 0;
  std::size_t i = 0;
  const std::size_t n = w.size();
  while (i < n && is_consonant(w, i)) ++i;
  while (i < n) {
    while (i < n && !is_consonant(w, i)) ++i;
    if (i >= n) break;
    while (i < n && is_consonant(w, i)) ++i;
    ++m;
  }
  return m;
}

bool contains_vowel(std::string_view w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!is_consonant(w, i)) return true;
  }
  return false;
}

// consonant-vowel-consonant ending where the last consonant is not w, x or y.
bool ends_cvc(std::string_view w) {
  const std::size_t n = w.size();
  if (n < 3) return false;
  const char last = w[n - 1];
  if (last == 'w' || last == 'x' || last == 'y') return false;
  return is_consonant(w, n - 3) && !is_consonant(w, n - 2) && is_consonant(w, n - 1);
}

bool ends_double_consonant(std::string_view w) {
  const std::size_t n = w.size();
  return n >= 2 && w[n - 1] == w[n - 2] && is_consonant(w, n - 1);
}

// Repairs a stem after removing -ed or -ing: restores a dropped final e or
// undoes consonant doubling.
std::string repair_stem(std::string stem) {
  if (ends_with(stem, "at") || ends_with(stem, "bl") || ends_with(stem, "iz")) {
    return stem + "e";
  }
  if (ends_double_consonant(stem)) {
    const char last = stem.back();
    if (last != 'l' && last != 's' && last != 'z') stem.pop_back();
    return stem;
  }
  if (measure(stem) == 1 && ends_cvc(stem)) return stem + "e";
  return stem;
}

bool valid_lemma(std::string_view lemma) {
  if (lemma.empty()) return false;
  auto edge_ok = [](char c) { return c != '-' && c != '\''; };
  return edge_ok(lemma.front()) && edge_ok(lemma.back());
}

std::string apply_suffix_rules(std::string_view w) {
  const std::size_t n = w.size();
  if (ends_with(w, "'s") && n > 2) return std::string(w.substr(0, n - 2));
  if (ends_with(w, "ies") && n >= 5) return std::string(w.substr(0, n - 3)) + "y";
  if (ends_with(w, "sses")) return std::string(w.substr(0, n - 2));
  if (ends_with(w, "ches") || ends_with(w, "shes") || ends_with(w, "xes") ||
      ends_with(w, "zzes")) {
    return std::string(w.substr(0, n - 2));
  }
  if (ends_with(w, "oes") && n >= 5) return std::string(w.substr(0, n - 2));
  if (ends_with(w, "es") && n >= 4) return std::string(w.substr(0, n - 1));
  if (ends_with(w, "s")) {
    if (n >= 4 && !ends_with(w, "ss") && !ends_with(w, "us") && !ends_with(w, "is")) {
      return std::string(w.substr(0, n - 1));
    }
    return std::string(w);
  }
  if (ends_with(w, "eed")) {
    if (measure(w.substr(0, n - 3)) > 0) return std::string(w.substr(0, n - 1));
    return std::string(w);
  }
  if (ends_with(w, "ied") && n >= 5) return std::string(w.substr(0, n - 3)) + "y";
  if (ends_with(w, "ed")) {
    const std::string_view stem = w.substr(0, n - 2);
    if (contains_vowel(stem)) return repair_stem(std::string(stem));
    return std::string(w);
  }
  if (ends_with(w, "ing")) {
    const std::string_view stem = w.substr(0, n - 3);
    if (stem.size() >= 2 && contains_vowel(stem)) return repair_stem(std::string(stem));
    return std::string(w);
  }
  return std::string(w);
}

std::string read_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("textprep", "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::set<std::string> Sentence::lemma_set() const {
  std::set<std::string> out;
  for (const auto &t : tokens) out.insert(t.lemma);
  return out;
}

bool is_abbreviation(std::string_view word) {
  const std::string lower = utf8::to_lower(word);
  return std::ranges::find(kAbbreviations, lower) != std::end(kAbbreviations);
}

std::vector<Sentence> segment_sentences(std::string_view body) {
  std::vector<Sentence> out;
  std::size_t start = 0;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t next = pos;
    const char32_t cp = utf8::decode(body, next);

    // Paragraph break: newline, optional blanks, newline.
    if (cp == U'\n') {
      std::size_t probe = next;
      while (probe < body.size() && (body[probe] == ' ' || body[probe] == '\t' ||
                                     body[probe] == '\r')) {
        ++probe;
      }
      if (probe < body.size() && body[probe] == '\n') {
        push_sentence(out, body.substr(start, pos - start));
        start = probe + 1;
        pos = probe + 1;
        continue;
      }
    }

    if (!is_terminator(cp)) {
      pos = next;
      continue;
    }

    // Consume the run of terminators and closing quotes.
    const std::size_t run_begin = pos;
    bool single_dot = cp == U'.';
    std::size_t end = next;
    int terminators = 1;
    while (end < body.size()) {
      std::size_t probe = end;
      const char32_t c = utf8::decode(body, probe);
      if (is_terminator(c)) {
        ++terminators;
        end = probe;
      } else if (is_closing_quote(c)) {
        end = probe;
      } else {
        break;
      }
    }
    single_dot = single_dot && terminators == 1;

    // Look at what follows: whitespace, optional opening quotes, upper case.
    std::size_t after = end;
    bool saw_space = false;
    while (after < body.size()) {
      std::size_t probe = after;
      if (!utf8::is_space(utf8::decode(body, probe))) break;
      saw_space = true;
      after = probe;
    }
    bool boundary = false;
    if (after >= body.size()) {
      boundary = true;
    } else if (saw_space) {
      std::size_t probe = after;
      char32_t c = utf8::decode(body, probe);
      while (is_opening_quote(c) && probe < body.size()) c = utf8::decode(body, probe);
      boundary = utf8::is_upper(c);
    }
    if (boundary && single_dot && suppresses_split(body, run_begin)) boundary = false;

    if (boundary) {
      push_sentence(out, body.substr(start, end - start));
      start = after;
      pos = after;
    } else {
      pos = end;
    }
  }
  if (start < body.size()) push_sentence(out, body.substr(start));
  return out;
}

std::vector<TokenSpan> tokenize_spans(std::string_view text) {
  std::vector<TokenSpan> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    // Skip whitespace.
    std::size_t probe = pos;
    if (utf8::is_space(utf8::decode(text, probe))) {
      pos = probe;
      continue;
    }
    // Extent of the whitespace-delimited piece, tracking alnum boundaries.
    const std::size_t piece_begin = pos;
    std::size_t first_alnum = std::string_view::npos;
    std::size_t last_alnum_end = 0;
    while (pos < text.size()) {
      std::size_t next = pos;
      const char32_t cp = utf8::decode(text, next);
      if (utf8::is_space(cp)) break;
      if (utf8::is_alnum(cp)) {
        if (first_alnum == std::string_view::npos) first_alnum = pos;
        last_alnum_end = next;
      }
      pos = next;
    }
    if (first_alnum == std::string_view::npos) continue;
    TokenSpan span;
    span.begin = first_alnum;
    span.end = last_alnum_end;
    span.text = text.substr(first_alnum, last_alnum_end - first_alnum);
    span.stripped_leading = first_alnum != piece_begin;
    span.stripped_trailing = last_alnum_end != pos;
    out.push_back(span);
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  for (const auto &span : tokenize_spans(text)) out.emplace_back(span.text);
  return out;
}

std::string clean_token(std::string_view token) {
  std::string kept;
  kept.reserve(token.size());
  std::size_t pos = 0;
  while (pos < token.size()) {
    const std::size_t start = pos;
    const char32_t cp = utf8::decode(token, pos);
    if (utf8::is_apostrophe(cp)) {
      kept.push_back('\'');
    } else if (utf8::is_hyphen(cp)) {
      kept.push_back('-');
    } else if (utf8::is_alnum(cp)) {
      kept.append(token.substr(start, pos - start));
    }
  }
  std::size_t b = 0;
  std::size_t e = kept.size();
  while (b < e && (kept[b] == '-' || kept[b] == '\'')) ++b;
  while (e > b && (kept[e - 1] == '-' || kept[e - 1] == '\'')) --e;
  return kept.substr(b, e - b);
}

Lexicon::Lexicon(std::unordered_set<std::string> stop_words,
                 std::unordered_map<std::string, std::string> lemma_table)
    : stop_words_(std::move(stop_words)), lemma_table_(std::move(lemma_table)) {}

const Lexicon &Lexicon::builtin() {
  static const Lexicon instance(parse_stop_words(embedded::kStopWords),
                                parse_lemma_table(embedded::kLemmaTable));
  return instance;
}

Lexicon Lexicon::load(const std::optional<std::filesystem::path> &stop_words_path,
                      const std::optional<std::filesystem::path> &lemma_table_path) {
  auto stop_words = stop_words_path ? parse_stop_words(read_file(*stop_words_path))
                                    : builtin().stop_words_;
  auto lemmas = lemma_table_path ? parse_lemma_table(read_file(*lemma_table_path))
                                 : builtin().lemma_table_;
  return Lexicon(std::move(stop_words), std::move(lemmas));
}

std::unordered_set<std::string> Lexicon::parse_stop_words(std::string_view text) {
  std::unordered_set<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string_view word = utf8::trim(line);
    if (!word.empty()) out.insert(utf8::to_lower(word));
  }
  return out;
}

std::unordered_map<std::string, std::string> Lexicon::parse_lemma_table(std::string_view text) {
  std::unordered_map<std::string, std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (utf8::trim(line).empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ConfigError("textprep",
                        "lemma table line " + std::to_string(line_no) + ": expected a tab");
    }
    const std::string_view inflected = utf8::trim(std::string_view(line).substr(0, tab));
    const std::string_view lemma = utf8::trim(std::string_view(line).substr(tab + 1));
    if (inflected.empty() || lemma.empty()) {
      throw ConfigError("textprep",
                        "lemma table line " + std::to_string(line_no) + ": empty field");
    }
    out.emplace(utf8::to_lower(inflected), utf8::to_lower(lemma));
  }
  return out;
}

bool Lexicon::is_stop_word(std::string_view lemma) const {
  return stop_words_.find(std::string(lemma)) != stop_words_.end();
}

// Table lookup first, then ordered suffix rules:
//   's -> (possessive), ies -> y, sses -> ss, (ch|sh|x|zz)es -> strip es,
//   oes -> o, es -> e, s -> (length >= 4, not after ss/us/is),
//   eed -> ee (measure > 0), ied -> y, ed/ing -> stem with repair.
std::string Lexicon::lemmatize(std::string_view token) const {
  if (token.empty()) return {};
  if (const auto it = lemma_table_.find(std::string(token)); it != lemma_table_.end()) {
    return it->second;
  }
  std::string candidate = apply_suffix_rules(token);
  if (candidate != token) {
    if (const auto it = lemma_table_.find(candidate); it != lemma_table_.end()) {
      return it->second;
    }
  }
  if (!valid_lemma(candidate)) return std::string(token);
  return candidate;
}

Sentence Lexicon::preprocess(Sentence sentence) const {
  sentence.tokens.clear();
  for (const auto &span : tokenize_spans(sentence.text)) {
    std::string surface = utf8::to_lower(clean_token(span.text));
    if (surface.empty()) continue;
    std::string lemma = lemmatize(surface);
    if (is_stop_word(lemma)) continue;
    sentence.tokens.push_back({std::move(surface), std::move(lemma)});
  }
  return sentence;
}

std::vector<Sentence> Lexicon::preprocess(std::vector<Sentence> sentences) const {
  for (auto &s : sentences) s = preprocess(std::move(s));
  return sentences;
}

std::string lemmatize(std::string_view token) { return Lexicon::builtin().lemmatize(token); }

Sentence preprocess(Sentence sentence) {
  return Lexicon::builtin().preprocess(std::move(sentence));
}

}  // namespace graphsum
