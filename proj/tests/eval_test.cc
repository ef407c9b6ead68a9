#include "corpws/eval.h"

#include <gtest/gtest.h>

#include "corpws/error.h"
#include "support.h"

namespace corpws {
namespace {

Document golden_sentence() {
  return testing::bundled_pipeline().ingest("Mae Cymru'n wlad Geltaidd.", testing::meta("g"));
}

TEST(Eval, SelfComparisonIsPerfect) {
  const Document d = golden_sentence();
  const EvalReport r = evaluate(d, d);
  EXPECT_EQ(r.tokens_compared, 6u);
  EXPECT_DOUBLE_EQ(r.rich_accuracy, 1.0);
  EXPECT_DOUBLE_EQ(r.basic_accuracy, 1.0);
  EXPECT_DOUBLE_EQ(r.lemma_accuracy, 1.0);
  EXPECT_TRUE(r.confusion.empty());
}

TEST(Eval, OneWrongRichTag) {
  const Document gold = golden_sentence();
  Document sys = gold;
  sys.sentences[0][2].analysis.rich = "Arsym";
  sys.sentences[0][2].analysis.basic = BasicCat::kAr;
  const EvalReport r = evaluate(sys, gold);
  EXPECT_DOUBLE_EQ(r.rich_accuracy, 5.0 / 6.0);
  EXPECT_DOUBLE_EQ(r.basic_accuracy, 5.0 / 6.0);
  EXPECT_DOUBLE_EQ(r.lemma_accuracy, 1.0);
  ASSERT_EQ(r.confusion.size(), 1u);
  EXPECT_EQ(r.confusion[0], (ConfusionRow{"Utra", "Arsym", 1}));
}

TEST(Eval, RichMismatchWithSameBasic) {
  const Document gold = golden_sentence();
  Document sys = gold;
  sys.sentences[0][3].analysis.rich = "Egu";
  sys.sentences[0][3].analysis.lemma = "gwlâd";
  const EvalReport r = evaluate(sys, gold);
  EXPECT_DOUBLE_EQ(r.rich_accuracy, 5.0 / 6.0);
  EXPECT_DOUBLE_EQ(r.basic_accuracy, 1.0);
  EXPECT_DOUBLE_EQ(r.lemma_accuracy, 5.0 / 6.0);
}

TEST(Eval, Misalignment) {
  const Document gold = golden_sentence();
  Document shorter = gold;
  shorter.sentences[0].pop_back();
  EXPECT_THROW(evaluate(shorter, gold), AlignmentError);
  Document changed = gold;
  changed.sentences[0][1].text = "Lloegr";
  EXPECT_THROW(evaluate(changed, gold), AlignmentError);
}

TEST(Eval, ConfusionCountsSumToMismatches) {
  const auto docs = testing::random_corpus(31, 1, 400);
  const Document& gold = docs[0];
  Document sys = gold;
  Rng rng(8);
  std::size_t changed = 0;
  for (auto& s : sys.sentences) {
    for (auto& t : s) {
      if (rng.below(4) != 0) continue;
      const std::string rich = t.analysis.rich == "Egu" ? "Ebu" : "Egu";
      t.analysis.rich = rich;
      ++changed;
    }
  }
  const EvalReport r = evaluate(sys, gold);
  std::size_t sum = 0;
  for (const auto& c : r.confusion) sum += c.count;
  EXPECT_EQ(sum, changed);
  EXPECT_NEAR(r.rich_accuracy, 1.0 - static_cast<double>(changed) / r.tokens_compared, 1e-12);
  for (std::size_t i = 1; i < r.confusion.size(); ++i) {
    EXPECT_GE(r.confusion[i - 1].count, r.confusion[i].count);
  }
}

TEST(Eval, ReportFormat) {
  const Document gold = golden_sentence();
  Document sys = gold;
  sys.sentences[0][2].analysis.rich = "Arsym";
  EXPECT_EQ(format_report(evaluate(sys, gold)),
            "tokens\t6\nrich\t0.8333\nbasic\t1.0000\nlemma\t1.0000\n\n"
            "GOLD\tSYSTEM\tCOUNT\nUtra\tArsym\t1\n");
}

TEST(Eval, BundledGoldFile) {
  const std::string gold = testing::data_path("gold/gold.vrt");
  const EvalReport r = evaluate_files(gold, gold);
  EXPECT_GE(r.tokens_compared, 300u);
  EXPECT_THROW(evaluate_files(gold, testing::data_path("gold/missing.vrt")), IoError);
}

}  // namespace
}  // namespace corpws
