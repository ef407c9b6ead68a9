#include "corpws/segmenter.h"

#include <gtest/gtest.h>

#include "corpws/rng.h"
#include "corpws/text.h"
#include "support.h"

namespace corpws {
namespace {

std::vector<std::string> texts(const Sentence& s) {
  std::vector<std::string> out;
  for (const Token& t : s) out.push_back(t.text);
  return out;
}

std::vector<std::vector<std::string>> texts(const std::vector<Sentence>& ss) {
  std::vector<std::vector<std::string>> out;
  for (const Sentence& s : ss) out.push_back(texts(s));
  return out;
}

const Segmenter& bundled() {
  static const Segmenter s = Segmenter::load(testing::data_path("abbreviations.txt"));
  return s;
}

TEST(Segmenter, GoldenSentence) {
  const auto ss = bundled().tokenize("Mae Cymru'n wlad Geltaidd.");
  ASSERT_EQ(ss.size(), 1u);
  EXPECT_EQ(texts(ss[0]),
            (std::vector<std::string>{"Mae", "Cymru", "'n", "wlad", "Geltaidd", "."}));
  for (int i = 0; i < 6; ++i) {
    EXPECT_EQ(ss[0][i].sentence, 1);
    EXPECT_EQ(ss[0][i].position, i + 1);
  }
}

TEST(Segmenter, EveryCliticSplits) {
  for (const std::string& c : Segmenter::clitics()) {
    const auto ss = bundled().tokenize("gyda" + c + " ci");
    ASSERT_EQ(ss.size(), 1u) << c;
    EXPECT_EQ(texts(ss[0]), (std::vector<std::string>{"gyda", c, "ci"})) << c;
  }
}

TEST(Segmenter, CurlyApostropheIsNormalised) {
  const auto ss = bundled().tokenize("Mae’r plant");
  EXPECT_EQ(texts(ss[0]), (std::vector<std::string>{"Mae", "'r", "plant"}));
}

TEST(Segmenter, WordInternalApostropheIsKept) {
  const auto ss = bundled().tokenize("Mae o'r dref");
  EXPECT_EQ(texts(ss[0]), (std::vector<std::string>{"Mae", "o", "'r", "dref"}));
  EXPECT_EQ(texts(bundled().tokenize("o'clock")[0]), (std::vector<std::string>{"o'clock"}));
}

TEST(Segmenter, SentenceSplitting) {
  const auto ss = bundled().tokenize("Bore da! Sut wyt ti? Da iawn.");
  EXPECT_EQ(texts(ss), (std::vector<std::vector<std::string>>{
                           {"Bore", "da", "!"}, {"Sut", "wyt", "ti", "?"}, {"Da", "iawn", "."}}));
  EXPECT_EQ(ss[1][0].sentence, 2);
  EXPECT_EQ(ss[1][0].position, 1);
}

TEST(Segmenter, NoSplitWithoutFollowingSpace) {
  const auto ss = bundled().tokenize("Mae 3.5 yn rhif.Dim");
  ASSERT_EQ(ss.size(), 1u);
  EXPECT_EQ(texts(ss[0]),
            (std::vector<std::string>{"Mae", "3.5", "yn", "rhif", ".", "Dim"}));
}

TEST(Segmenter, AbbreviationsDoNotEndSentences) {
  const auto ss = bundled().tokenize("Roedd Dr. Jones yno, e.e. ddoe. Wedyn aeth.");
  ASSERT_EQ(ss.size(), 2u);
  EXPECT_EQ(texts(ss[0]), (std::vector<std::string>{"Roedd", "Dr.", "Jones", "yno", ",",
                                                     "e.e.", "ddoe", "."}));
}

TEST(Segmenter, ClosingQuoteStaysWithItsSentence) {
  const auto ss = bundled().tokenize("Dywedodd \"Helo.\" Wedyn aeth.");
  ASSERT_EQ(ss.size(), 2u);
  EXPECT_EQ(texts(ss[0]),
            (std::vector<std::string>{"Dywedodd", "\"", "Helo", ".", "\""}));
}

TEST(Segmenter, HyphenatedAndNumericTokens) {
  EXPECT_EQ(texts(bundled().tokenize("ail-greu 1,000 o bobl")[0]),
            (std::vector<std::string>{"ail-greu", "1,000", "o", "bobl"}));
  EXPECT_EQ(texts(bundled().tokenize("-- ie")[0]), (std::vector<std::string>{"-", "-", "ie"}));
}

TEST(Segmenter, EmptyAndBlankInput) {
  EXPECT_TRUE(bundled().tokenize("").empty());
  EXPECT_TRUE(bundled().tokenize("  \n\t ").empty());
}

TEST(Segmenter, WordsVersusTokens) {
  const auto ss = bundled().tokenize("Mae Cymru'n wlad Geltaidd.");
  EXPECT_EQ(count_units(ss[0]), (UnitCounts{6, 4}));
  EXPECT_TRUE(is_word("ŵyn"));
  EXPECT_FALSE(is_word("'n"));
  EXPECT_FALSE(is_word("2024"));
  EXPECT_FALSE(is_word("."));
}

// Seeded random texts: tokens never contain whitespace, concatenating them
// reproduces the input minus whitespace, spans point at the token text, and
// re-tokenising the space-joined tokens gives the same tokens.
TEST(Segmenter, RandomTextInvariants) {
  static const std::vector<std::string> kPieces = {
      "Mae", "cath", "'n", "'r", "ŵyn", "tŷ", ".", "!", "?", ",", "(", ")", "\"", "3.5",
      "ail-greu", "e.e.", "Dr.", "’r", "1999", ";", ":", "–", "£5", "Ŵyn", "o", "ci"};
  static const std::vector<std::string> kSpace = {" ", "  ", "\n", "", "\t"};
  Rng rng(77);
  for (int round = 0; round < 500; ++round) {
    std::string input;
    const auto n = rng.below(25);
    for (std::uint64_t i = 0; i < n; ++i) {
      input += kPieces[rng.below(kPieces.size())];
      input += kSpace[rng.below(kSpace.size())];
    }
    const std::string norm = normalize_text(input);
    const auto ss = bundled().tokenize(input);
    std::string joined_tokens;
    std::string spaced;
    for (const Sentence& s : ss) {
      ASSERT_FALSE(s.empty());
      for (std::size_t i = 0; i < s.size(); ++i) {
        const Token& t = s[i];
        ASSERT_FALSE(t.text.empty());
        EXPECT_EQ(t.position, static_cast<int>(i) + 1);
        EXPECT_EQ(norm.substr(t.span.begin, t.span.end - t.span.begin), t.text);
        for (char c : t.text) ASSERT_FALSE(c == ' ' || c == '\n' || c == '\t') << input;
        joined_tokens += t.text;
        spaced += t.text + " ";
      }
    }
    std::string no_space;
    for (char c : norm)
      if (c != ' ' && c != '\n' && c != '\t') no_space += c;
    EXPECT_EQ(joined_tokens, no_space) << input;
    std::vector<std::string> again;
    for (const Sentence& s : bundled().tokenize(spaced))
      for (const Token& t : s) again.push_back(t.text);
    std::vector<std::string> first;
    for (const Sentence& s : ss)
      for (const Token& t : s) first.push_back(t.text);
    EXPECT_EQ(again, first) << input;
  }
}

}  // namespace
}  // namespace corpws
