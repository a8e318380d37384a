#include "graphsum/textprep.hpp"

#include <random>

#include <gtest/gtest.h>

#include "graphsum/error.hpp"
#include "graphsum/utf8.hpp"
#include "synthetic.hpp"

namespace graphsum {
namespace {

std::vector<std::string> texts(const std::vector<Sentence> &sentences) {
  std::vector<std::string> out;
  for (const auto &s : sentences) out.push_back(s.text);
  return out;
}

std::vector<std::string> lemmas(const Sentence &s) {
  std::vector<std::string> out;
  for (const auto &t : s.tokens) out.push_back(t.lemma);
  return out;
}

Sentence make(const std::string &text) {
  Sentence s;
  s.text = text;
  return preprocess(s);
}

TEST(SegmentTest, Terminators) {
  const auto s = segment_sentences("A runs. B waits? C wins!");
  ASSERT_EQ(s.size(), 3u);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(s[static_cast<std::size_t>(i)].index, i);
  EXPECT_EQ(texts(s), (std::vector<std::string>{"A runs.", "B waits?", "C wins!"}));
}

TEST(SegmentTest, Abbreviations) {
  EXPECT_EQ(segment_sentences("Mr. Smith left.").size(), 1u);
  EXPECT_EQ(segment_sentences("The U.S. Army moved. Dr. Who came.").size(), 2u);
  EXPECT_EQ(segment_sentences("J. K. Rowling wrote it.").size(), 1u);
}

TEST(SegmentTest, Degenerate) {
  EXPECT_TRUE(segment_sentences("").empty());
  EXPECT_TRUE(segment_sentences("   \n ").empty());
  EXPECT_TRUE(segment_sentences("123 ... !!!").empty());
}

TEST(SegmentTest, LowercaseContinuationDoesNotSplit) {
  EXPECT_EQ(segment_sentences("It cost 3.5 million. then it rose.").size(), 1u);
}

TEST(SegmentTest, QuotesAndBlankLines) {
  const auto s = segment_sentences("He said \"Go.\" Then he left.\n\nNext paragraph without stop");
  EXPECT_EQ(texts(s), (std::vector<std::string>{"He said \"Go.\"", "Then he left.",
                                                "Next paragraph without stop"}));
}

TEST(SegmentTest, ConcatenationStability) {
  testing::SyntheticText gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::string a = gen.document(gen.uniform(1, 4));
    const std::string b = gen.document(gen.uniform(1, 4));
    auto expected = texts(segment_sentences(a));
    for (const auto &t : texts(segment_sentences(b))) expected.push_back(t);
    EXPECT_EQ(texts(segment_sentences(a + " " + b)), expected);
  }
}

TEST(TokenizeTest, Examples) {
  EXPECT_EQ(tokenize("semi-finals, next!"), (std::vector<std::string>{"semi-finals", "next"}));
  EXPECT_TRUE(tokenize("  ").empty());
  EXPECT_EQ(tokenize("Ronaldo's"), std::vector<std::string>{"Ronaldo's"});
  EXPECT_EQ(tokenize("(6-0) \"quoted\" --"), (std::vector<std::string>{"6-0", "quoted"}));
  EXPECT_EQ(tokenize("caf\xC3\xA9 na\xC3\xAFve"), (std::vector<std::string>{"caf\xC3\xA9", "na\xC3\xAFve"}));
}

TEST(CleanTokenTest, KeepsInternalHyphenAndApostrophe) {
  EXPECT_EQ(clean_token("it\xE2\x80\x99s"), "it's");
  EXPECT_EQ(clean_token("semi-finals"), "semi-finals");
  EXPECT_EQ(clean_token("-abc'"), "abc");
  EXPECT_EQ(clean_token("a.b"), "ab");
}

TEST(LemmatizeTest, Examples) {
  EXPECT_EQ(lemmatize("running"), "run");
  EXPECT_EQ(lemmatize("cat"), "cat");
  EXPECT_EQ(lemmatize("ran"), "run");
  EXPECT_EQ(lemmatize("geese"), "goose");
  EXPECT_EQ(lemmatize("won"), "win");
  EXPECT_EQ(lemmatize("cats"), "cat");
  EXPECT_EQ(lemmatize("studies"), "study");
  EXPECT_EQ(lemmatize("boxes"), "box");
  EXPECT_EQ(lemmatize("hoping"), "hope");
  EXPECT_EQ(lemmatize("stopped"), "stop");
  EXPECT_EQ(lemmatize("ronaldo's"), "ronaldo");
  EXPECT_EQ(lemmatize("bus"), "bus");
  EXPECT_EQ(lemmatize("news"), "news");
  EXPECT_EQ(lemmatize("during"), "during");
}

TEST(LemmatizeTest, NeverEmpty) {
  for (const std::string t : {"s", "es", "ies", "ing", "ed", "'s", "x", "a-"}) {
    EXPECT_FALSE(lemmatize(t).empty()) << t;
  }
}

TEST(LemmatizeTest, StopWordsAreFixedPoints) {
  // Every listed stop word must survive lemmatization unchanged, otherwise
  // the stop-word check (applied to lemmas) would miss it.
  const auto &lex = Lexicon::builtin();
  for (const auto &w : lex.stop_words()) {
    EXPECT_TRUE(lex.is_stop_word(lex.lemmatize(w))) << w;
  }
}

TEST(LemmatizeTest, TableTargetsAreFixedPoints) {
  const auto &lex = Lexicon::builtin();
  for (const auto &[form, lemma] : lex.lemma_table()) {
    EXPECT_EQ(lex.lemmatize(lemma), lemma) << form << " -> " << lemma;
  }
}

TEST(PreprocessTest, Examples) {
  EXPECT_EQ(lemmas(make("The cats are running")), (std::vector<std::string>{"cat", "run"}));
  EXPECT_TRUE(make("of the and").tokens.empty());
  EXPECT_EQ(lemmas(make("Barcelona won")), (std::vector<std::string>{"barcelona", "win"}));
}

TEST(PreprocessTest, TokenInvariantsAndIdempotence) {
  testing::SyntheticText gen(11);
  const std::string extra = " Ronaldo\xE2\x80\x99s semi-finals, (6-0) \"quoted\" it's";
  for (int trial = 0; trial < 200; ++trial) {
    Sentence s;
    s.text = gen.sentence() + extra;
    const Sentence once = preprocess(s);
    const Sentence twice = preprocess(once);
    EXPECT_EQ(once.tokens, twice.tokens);
    for (const auto &t : once.tokens) {
      ASSERT_FALSE(t.surface.empty());
      ASSERT_FALSE(t.lemma.empty());
      EXPECT_EQ(t.surface, utf8::to_lower(t.surface));
      EXPECT_FALSE(Lexicon::builtin().is_stop_word(t.lemma));
      for (const std::string *x : {&t.surface, &t.lemma}) {
        EXPECT_EQ(x->find(' '), std::string::npos);
        EXPECT_NE(x->front(), '-');
        EXPECT_NE(x->back(), '\'');
        EXPECT_NE(x->back(), '.');
      }
    }
  }
}

TEST(LexiconTest, ParsesFilesAndComments) {
  const auto stops = Lexicon::parse_stop_words("# comment\nfoo\n\n  Bar \n");
  EXPECT_EQ(stops, (std::unordered_set<std::string>{"foo", "bar"}));
  const auto table = Lexicon::parse_lemma_table("# v1\nmice\tmouse\n");
  EXPECT_EQ(table.at("mice"), "mouse");
  EXPECT_THROW(Lexicon::parse_lemma_table("broken line\n"), ConfigError);
}

TEST(LexiconTest, CustomLexicon) {
  const Lexicon lex({"cat"}, {{"mice", "mouse"}});
  Sentence s;
  s.text = "The cat chased mice";
  const auto out = lex.preprocess(s);
  EXPECT_EQ(lemmas(out), (std::vector<std::string>{"the", "chase", "mouse"}));
}

}  // namespace
}  // namespace graphsum
