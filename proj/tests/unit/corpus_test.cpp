#include "graphsum/corpus.hpp"

#include <filesystem>
#include <fstream>
#include <random>

#include <gtest/gtest.h>

#include "graphsum/error.hpp"

namespace graphsum {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("graphsum-corpus-" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path &path() const { return path_; }

  fs::path write(const std::string &name, const std::string &content) const {
    const fs::path p = path_ / name;
    fs::create_directories(p.parent_path());
    std::ofstream(p, std::ios::binary) << content;
    return p;
  }

 private:
  fs::path path_;
};

TEST(StoryTest, SplitsBodyAndHighlights) {
  TempDir dir;
  const auto doc = load_story_file(dir.write("a.story", "Alpha beta.\n\n@highlight\n\nGamma"));
  EXPECT_EQ(doc.id, "a");
  EXPECT_EQ(doc.body, "Alpha beta.");
  ASSERT_TRUE(doc.reference);
  EXPECT_EQ(*doc.reference, std::vector<std::string>{"Gamma"});
}

TEST(StoryTest, NoMarkerMeansNoReference) {
  const auto doc = parse_story("  First line.\nSecond line.\n", "x");
  EXPECT_EQ(doc.body, "First line.\nSecond line.");
  EXPECT_FALSE(doc.reference);
}

TEST(StoryTest, EmptyBodyIsMalformed) {
  EXPECT_THROW(parse_story("@highlight\n\nX", "x"), MalformedDocumentError);
  EXPECT_THROW(parse_story("", "x"), MalformedDocumentError);
}

TEST(StoryTest, MultipleHighlightsAndCrlf) {
  const auto doc = parse_story("Body.\r\n@highlight\r\nOne\r\ncontinued\r\n\r\n@highlight\r\n\r\nTwo\r\n", "x");
  ASSERT_TRUE(doc.reference);
  EXPECT_EQ(*doc.reference, (std::vector<std::string>{"One continued", "Two"}));
  for (const auto &h : *doc.reference) EXPECT_EQ(h.find("@highlight"), std::string::npos);
}

TEST(StoryTest, InvalidUtf8IsReplaced) {
  const auto doc = parse_story("Caf\xC3 bar.", "x");
  EXPECT_EQ(doc.body, "Caf\xEF\xBF\xBD bar.");
}

TEST(StoryTest, MissingFileReportsPath) {
  try {
    load_story_file("/nonexistent/zzz.story");
    FAIL();
  } catch (const IoError &e) {
    EXPECT_EQ(e.path(), "/nonexistent/zzz.story");
    EXPECT_EQ(e.module(), "corpus");
  }
}

TEST(JsonlTest, MapsFields) {
  const auto docs = parse_jsonl(R"({"id":"x","text":"A. B.","summary":"A."})");
  ASSERT_EQ(docs.size(), 1u);
  EXPECT_EQ(docs[0], (Document{"x", "A. B.", std::vector<std::string>{"A."}}));
}

TEST(JsonlTest, NumbersMissingIds) {
  const auto docs = parse_jsonl("{\"text\":\"One.\"}\n{\"text\":\"Two.\"}\n");
  ASSERT_EQ(docs.size(), 2u);
  EXPECT_EQ(docs[0].id, "000000");
  EXPECT_EQ(docs[1].id, "000001");
  EXPECT_FALSE(docs[0].reference);
}

TEST(JsonlTest, Errors) {
  EXPECT_THROW(parse_jsonl(R"({"text":""})"), MalformedDocumentError);
  EXPECT_THROW(parse_jsonl("{\"id\":\"a\",\"text\":\"x\"}\n{\"id\":\"a\",\"text\":\"y\"}"), FormatError);
  try {
    parse_jsonl("{\"text\":\"ok\"}\n{not json\n");
    FAIL();
  } catch (const FormatError &e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(JsonlTest, SummaryList) {
  const auto docs = parse_jsonl(R"({"id":"a","text":"T.","summary":["x","","y"]})");
  EXPECT_EQ(*docs[0].reference, (std::vector<std::string>{"x", "y"}));
}

TEST(JsonlTest, RoundTrip) {
  const std::vector<Document> docs = {
      {"a", "Body with \"quotes\" and é.\nNew line.", std::vector<std::string>{"h1", "h2"}},
      {"b", "No reference.", std::nullopt},
  };
  TempDir dir;
  const auto path = dir.path() / "out.jsonl";
  write_jsonl(path, docs);
  EXPECT_EQ(load_jsonl(path), docs);
}

TEST(LoadCorpusTest, DirectoryOrderIsLexicographic) {
  TempDir dir;
  dir.write("b.story", "Beta.\n@highlight\nB");
  dir.write("a.story", "Alpha.\n@highlight\nA");
  dir.write("c.jsonl", R"({"id":"c1","text":"Gamma."})");
  dir.write("ignored.md", "nothing");
  dir.write("sub/d.story", "Delta.");
  const auto first = load_corpus(dir.path());
  ASSERT_EQ(first.size(), 3u);
  EXPECT_EQ(first[0].id, "a");
  EXPECT_EQ(first[1].id, "b");
  EXPECT_EQ(first[2].id, "c1");
  EXPECT_EQ(load_corpus(dir.path()), first);
  EXPECT_EQ(load_corpus(dir.path(), true).size(), 4u);
}

TEST(LoadCorpusTest, DuplicateIdsAcrossFiles) {
  TempDir dir;
  dir.write("a.story", "Alpha.");
  dir.write("b.jsonl", R"({"id":"a","text":"Again."})");
  EXPECT_THROW(load_corpus(dir.path()), FormatError);
}

TEST(StatsTest, HandCounts) {
  const auto one = compute_stats({{"x", "a a b", std::nullopt}});
  EXPECT_EQ(one.document_count, 1u);
  EXPECT_DOUBLE_EQ(one.mean_body_tokens, 3.0);
  EXPECT_EQ(one.vocabulary_size, 2u);
  EXPECT_EQ(one.reference_count, 0u);

  const auto two = compute_stats({{"x", "one two", std::vector<std::string>{"r s t"}},
                                  {"y", "One two three four", std::vector<std::string>{"u"}}});
  EXPECT_DOUBLE_EQ(two.mean_body_tokens, 3.0);
  EXPECT_EQ(two.min_body_tokens, 2u);
  EXPECT_EQ(two.max_body_tokens, 4u);
  EXPECT_DOUBLE_EQ(two.mean_reference_tokens, 2.0);
  EXPECT_EQ(two.vocabulary_size, 4u);
}

TEST(StatsTest, EmptyCorpusIsAnError) { EXPECT_THROW(compute_stats({}), Error); }

TEST(JoinedReferenceTest, SingleSpaces) {
  const Document doc{"x", "b", std::vector<std::string>{"One.", "Two."}};
  EXPECT_EQ(joined_reference(doc), "One. Two.");
}

}  // namespace
}  // namespace graphsum
