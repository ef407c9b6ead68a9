#include "corpws/semtag.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "corpws/error.h"
#include "support.h"

namespace corpws {
namespace {

const SemTagger& bundled_sem() {
  static const SemTagger s = SemTagger::load_dir(testing::data_path("sem"));
  return s;
}

SemTagger small() {
  return SemTagger({{"bod", BasicCat::kB, {"A3+", "Z5"}},
                    {"da", BasicCat::kAns, {"A5.1+"}},
                    {"da", BasicCat::kE, {"I1.1"}},
                    {"cath", std::nullopt, {"L2"}}},
                   {{{"bore", "da"}, "T1.3"},
                    {{"ar", "hyn", "o", "pryd"}, "T1.1.2"},
                    {{"ar", "hyn"}, "Z8"},
                    {{"yn", "ôl", "*"}, "A5.1"}},
                   {{"cathod", "cath"}});
}

std::vector<std::string> fields(const std::vector<SemTaggedToken>& s) {
  std::vector<std::string> out;
  for (const auto& t : s) out.push_back(t.field);
  return out;
}

TEST(WordField, LemmaAndBasicTakePriority) {
  const SemTagger s = small();
  EXPECT_EQ(s.word_field("Mae", "bod", BasicCat::kB), "A3+");
  EXPECT_EQ(s.word_field("da", "da", BasicCat::kAns), "A5.1+");
  EXPECT_EQ(s.word_field("da", "da", BasicCat::kE), "I1.1");
}

TEST(WordField, LemmaAloneThenInflectionTable) {
  const SemTagger s = small();
  EXPECT_EQ(s.word_field("gath", "cath", BasicCat::kE), "L2");
  EXPECT_EQ(s.word_field("bod", "bod", BasicCat::kE), "A3+");
  EXPECT_EQ(s.word_field("cathod", "cathod", BasicCat::kGw), "L2");
  EXPECT_EQ(s.word_field("Cathod", "Cathod", BasicCat::kGw), "L2");
}

TEST(WordField, UnmatchedIsZ99) {
  const SemTagger s = small();
  EXPECT_EQ(s.word_field("xyzzy", "xyzzy", BasicCat::kGw), "Z99");
  EXPECT_EQ(s.word_field(".", ".", BasicCat::kAtd), "Z99");
}

TEST(MweMatch, LongestFirstNonOverlapping) {
  const auto mwes = small().mwes();
  EXPECT_EQ(mwe_match({"mae", "hi", "ar", "hyn", "o", "pryd"}, mwes),
            (std::vector<MweMatch>{{3, 4, "T1.1.2"}}));
  EXPECT_EQ(mwe_match({"ar", "hyn", "ar", "hyn", "o", "pryd"}, mwes),
            (std::vector<MweMatch>{{1, 2, "Z8"}, {3, 4, "T1.1.2"}}));
  EXPECT_EQ(mwe_match({"Bore", "Da"}, mwes), (std::vector<MweMatch>{{1, 2, "T1.3"}}));
}

TEST(MweMatch, WildcardMatchesOneLemma) {
  const auto mwes = small().mwes();
  EXPECT_EQ(mwe_match({"yn", "ôl", "fi"}, mwes), (std::vector<MweMatch>{{1, 3, "A5.1"}}));
  EXPECT_TRUE(mwe_match({"yn", "ôl"}, mwes).empty());
  EXPECT_TRUE(mwe_match({}, mwes).empty());
}

TEST(SemTag, MweFieldCoversEveryToken) {
  const auto sentence = testing::bundled_tagger().tag("Bore da i chi.")[0];
  const auto out = bundled_sem().sem_tag(sentence);
  ASSERT_EQ(out.size(), 5u);
  EXPECT_EQ(out[0].field, "Q2.2");
  EXPECT_EQ(out[1].field, "Q2.2");
  EXPECT_EQ(out[4].field, "Z99");
}

TEST(SemTag, MutatedFormsUseTheirLemma) {
  const auto out =
      bundled_sem().sem_tag(testing::bundled_tagger().tag("Mae ar hyn o bryd gath.")[0]);
  EXPECT_EQ(fields(out), (std::vector<std::string>{"A3+", "T1.1.2", "T1.1.2", "T1.1.2",
                                                   "T1.1.2", "L2", "Z99"}));
}

// Outside MWE spans, the tagger agrees with its single-word variant.
TEST(SemTag, MweOnlyAffectsMatchedSpans) {
  const SemTagger& full = bundled_sem();
  const SemTagger plain = full.without_mwes();
  EXPECT_TRUE(plain.mwes().empty());
  for (const char* text : {"Bore da, mae'r gath yn yr ysgol ar hyn o bryd.",
                           "Yn ôl fi, mae'r tywydd yn braf.", "Eisteddfod Genedlaethol Cymru."}) {
    for (const auto& s : testing::bundled_tagger().tag(text)) {
      std::vector<std::string> lemmas;
      for (const auto& t : s) lemmas.push_back(t.resolved->lemma);
      std::vector<bool> covered(s.size(), false);
      for (const auto& m : mwe_match(lemmas, full.mwes())) {
        for (std::size_t k = 0; k < m.length; ++k) covered[m.start - 1 + k] = true;
      }
      const auto a = full.sem_tag(s);
      const auto b = plain.sem_tag(s);
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (!covered[i]) {
          EXPECT_EQ(a[i].field, b[i].field) << text << " " << i;
        }
      }
    }
  }
}

TEST(SemLoad, ParseErrors) {
  const std::string dir = ::testing::TempDir() + "/sem_bad";
  std::filesystem::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& body) {
    std::ofstream(dir + "/" + name) << body;
  };
  write("lexicon.tsv", "bod\tB\tA3+\n");
  write("mwe.tsv", "bore da\tQ2.2\n");
  write("inflections.tsv", "cathod\tcath\n");
  EXPECT_NO_THROW(SemTagger::load_dir(dir));
  write("lexicon.tsv", "bod\tB\n");
  EXPECT_THROW(SemTagger::load_dir(dir), ParseError);
  write("lexicon.tsv", "bod\tQQ\tA3+\n");
  EXPECT_THROW(SemTagger::load_dir(dir), ParseError);
  write("lexicon.tsv", "bod\tB\tA3+\n");
  write("mwe.tsv", "bore da\n");
  EXPECT_THROW(SemTagger::load_dir(dir), ParseError);
  write("mwe.tsv", "bore da\tQ2.2\n");
  EXPECT_THROW(SemTagger::load_dir(dir + "/missing"), IoError);
}

}  // namespace
}  // namespace corpws
