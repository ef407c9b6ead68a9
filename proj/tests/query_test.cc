#include "corpws/query.h"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <thread>

#include "corpws/error.h"
#include "oracles.h"
#include "support.h"

namespace corpws {
namespace {

CorpusSnapshot snap(std::vector<Document> docs) { return CorpusSnapshot(std::move(docs)); }

CorpusSnapshot golden_sentence() {
  return snap({testing::bundled_pipeline().ingest("Mae Cymru'n wlad Geltaidd.",
                                                  testing::meta("golden"))});
}

// --- index ------------------------------------------------------------------

TEST(Snapshot, IndexConsistency) {
  const CorpusSnapshot s = snap(testing::random_corpus(17, 8, 120));
  for (std::size_t a = 0; a < kAttributeCount; ++a) {
    const auto attr = static_cast<Attribute>(a);
    std::size_t total = 0;
    for (const auto& [value, postings] : s.index(attr)) {
      EXPECT_TRUE(std::is_sorted(postings.begin(), postings.end()));
      EXPECT_EQ(s.frequency(attr, value), postings.size());
      for (const Posting& p : postings) EXPECT_EQ(attribute_value(s.at(p), attr), value);
      total += postings.size();
    }
    EXPECT_EQ(total, s.token_count());
  }
  EXPECT_TRUE(s.postings(Attribute::kLemma, "no-such-lemma").empty());
}

TEST(Snapshot, CountsAndFingerprint) {
  const CorpusSnapshot a = golden_sentence();
  EXPECT_EQ(a.token_count(), 6u);
  EXPECT_EQ(a.word_count(), 4u);
  EXPECT_EQ(a.word_positions(0, 1), (std::vector<std::uint32_t>{1, 2, 4, 5}));
  EXPECT_EQ(golden_sentence().fingerprint(), a.fingerprint());
  EXPECT_NE(snap({testing::simple_doc("x", "y gath .")}).fingerprint(), a.fingerprint());
}

TEST(Attribute, Names) {
  for (std::size_t a = 0; a < kAttributeCount; ++a) {
    const auto attr = static_cast<Attribute>(a);
    EXPECT_EQ(parse_attribute(to_string(attr)), attr);
  }
  EXPECT_EQ(parse_attribute("colour"), std::nullopt);
}

// --- frequency ----------------------------------------------------------------

TEST(Frequency, Examples) {
  const CorpusSnapshot s = snap({testing::simple_doc("d", "y gath a y ci")});
  const auto rows = frequency_list(s, Attribute::kTokenLower);
  ASSERT_FALSE(rows.empty());
  EXPECT_EQ(rows[0], (FreqRow{1, "y", 2}));
  EXPECT_EQ(rows[1], (FreqRow{2, "a", 1}));
  EXPECT_TRUE(frequency_list(snap({}), Attribute::kLemma).empty());
  EXPECT_EQ(frequency_list(s, Attribute::kTokenLower, 1).size(), 1u);
  EXPECT_THROW(frequency_list(s, Attribute::kRich), InvalidArgument);
}

TEST(Frequency, SkipsNonWordsAndFoldsCase) {
  const CorpusSnapshot s = snap({testing::simple_doc("d", "Y gath , y 'n 3 GATH .")});
  const auto rows = frequency_list(s, Attribute::kTokenLower);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], (FreqRow{1, "gath", 2}));
  EXPECT_EQ(rows[1], (FreqRow{2, "y", 2}));
}

// --- concordance ----------------------------------------------------------------

TEST(Concordance, Examples) {
  const CorpusSnapshot s = snap({testing::simple_doc("d", "y gath a")});
  const auto lines = concordance(s, parse_query(R"([token="gath"])"), 2);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_EQ(lines[0].left, (std::vector<std::string>{"y"}));
  EXPECT_EQ(lines[0].node, (std::vector<std::string>{"gath"}));
  EXPECT_EQ(lines[0].right, (std::vector<std::string>{"a"}));
  EXPECT_TRUE(concordance(s, parse_query(R"([token="gath"])"), 2, 0).empty());
  EXPECT_TRUE(concordance(s, parse_query(R"([token="ci"])"), 2).empty());
}

TEST(Concordance, ComplexQueryOnTaggedSentence) {
  const auto lines = concordance(golden_sentence(), parse_query(R"([lemma="bod"][basic="E"])"), 3);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_EQ(lines[0].node, (std::vector<std::string>{"Mae", "Cymru"}));
  EXPECT_TRUE(lines[0].left.empty());
  EXPECT_EQ(lines[0].right, (std::vector<std::string>{"'n", "wlad", "Geltaidd"}));
  EXPECT_EQ(lines[0].position, 1u);
}

TEST(Concordance, ContextStopsAtSentenceEdge) {
  const CorpusSnapshot s = snap({testing::simple_doc("d", "un dau . tri pedwar .")});
  const auto lines = concordance(s, parse_query(R"([token="tri"])"), 5);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_TRUE(lines[0].left.empty());
  EXPECT_EQ(lines[0].sentence, 2u);
}

TEST(Concordance, FilterAndLimit) {
  const CorpusSnapshot s = snap({testing::simple_doc("a", "cath .", "book"),
                                 testing::simple_doc("b", "cath .", "letter"),
                                 testing::simple_doc("c", "Cath .", "letter")});
  const auto q = parse_query(R"([token="CATH"])");
  EXPECT_EQ(concordance(s, q, 1).size(), 3u);
  EXPECT_EQ(concordance(s, q, 1, 2).size(), 2u);
  const auto letters = concordance(s, q, 1, std::nullopt, parse_filter("genre=letter"));
  ASSERT_EQ(letters.size(), 2u);
  EXPECT_EQ(letters[0].doc_id, "b");
  EXPECT_EQ(letters[1].doc_id, "c");
}

TEST(ParseQuery, SyntaxAndErrors) {
  const QueryExpr e = parse_query(R"( [lemma="bod" & sem="A3+"] [basic="E"] )");
  ASSERT_EQ(e.constraints.size(), 2u);
  EXPECT_EQ(e.constraints[0].tests.size(), 2u);
  EXPECT_EQ(e.constraints[0].tests[1], (std::pair<QueryAttr, std::string>{QueryAttr::kSem, "A3+"}));
  for (const char* bad : {"", "[]", "[lemma=\"bod\"", "[colour=\"red\"]", "[lemma=bod]",
                          "lemma=\"bod\"", "[lemma=\"bod\" &]", "[lemma=\"bod\"] x"}) {
    EXPECT_THROW(parse_query(bad), ParseError) << bad;
  }
}

// --- statistics -----------------------------------------------------------------

TEST(LogLikelihood, Values) {
  EXPECT_NEAR(log_likelihood(10, 1, 100, 100), 8.547243830635558518, 1e-9);
  EXPECT_NEAR(log_likelihood(5, 5, 100, 100), 0.0, 1e-12);
  EXPECT_NEAR(log_likelihood(3, 6, 50, 100), 0.0, 1e-12);
  EXPECT_NEAR(log_likelihood(0, 4, 100, 100), oracle::g2(0, 4, 100, 100), 1e-12);
  EXPECT_GT(log_likelihood(0, 4, 100, 100), 0.0);
  EXPECT_DOUBLE_EQ(log_likelihood(10, 1, 100, 100), log_likelihood(1, 10, 100, 100));
}

TEST(Collocations, ToyCorpusAgainstOracle) {
  const std::vector<Document> docs = {testing::simple_doc("d", "a b a c b a")};
  const CorpusSnapshot s = snap(docs);
  for (CollocationStat stat : {CollocationStat::kMI, CollocationStat::kLL}) {
    const auto got = collocations(s, {Attribute::kTokenLower, "a"}, 1, stat);
    const auto want = oracle::collocations(docs, Attribute::kTokenLower, "a", 1, stat, 1);
    ASSERT_EQ(got.size(), want.size());
    std::map<std::string, CollocationRow> by;
    for (const auto& r : want) by[r.collocate] = r;
    for (const auto& r : got) {
      EXPECT_EQ(r.observed, by.at(r.collocate).observed);
      EXPECT_NEAR(r.score, by.at(r.collocate).score, 1e-9);
    }
  }
}

TEST(Collocations, MiIsZeroWhenObservedEqualsExpected) {
  // N = 4, f(a) = 2, f(b) = 1, span 1: E(b) = 2*1*2/4 = 1 and b occurs once
  // next to an a.
  const CorpusSnapshot s = snap({testing::simple_doc("d", "a b . c a .")});
  const auto rows = collocations(s, {Attribute::kTokenLower, "a"}, 1, CollocationStat::kMI);
  bool seen = false;
  for (const auto& r : rows) {
    if (r.collocate != "b") continue;
    seen = true;
    EXPECT_EQ(r.observed, 1u);
    EXPECT_DOUBLE_EQ(r.expected, 1.0);
    EXPECT_DOUBLE_EQ(r.score, 0.0);
  }
  EXPECT_TRUE(seen);
}

TEST(Collocations, EdgeCases) {
  const CorpusSnapshot s = snap({testing::simple_doc("d", "a b a c b a")});
  EXPECT_TRUE(collocations(s, {Attribute::kTokenLower, "zzz"}, 2, CollocationStat::kLL).empty());
  EXPECT_TRUE(collocations(s, {Attribute::kTokenLower, "a"}, 2, CollocationStat::kLL, 100).empty());
  EXPECT_THROW(collocations(s, {Attribute::kTokenLower, "a"}, 0, CollocationStat::kLL),
               InvalidArgument);
  EXPECT_THROW(collocations(s, {Attribute::kRich, "Egu"}, 1, CollocationStat::kLL),
               InvalidArgument);
}

TEST(Ngrams, Examples) {
  const CorpusSnapshot one = snap({testing::simple_doc("d", "un dau tri .")});
  const auto rows = ngrams(one, 2);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].count, 1u);
  EXPECT_EQ(rows[1].count, 1u);
  EXPECT_TRUE(ngrams(one, 4).empty());
  const CorpusSnapshot twice = snap({testing::simple_doc("d", "un dau tri . un dau tri .")});
  for (const auto& r : ngrams(twice, 2)) EXPECT_EQ(r.count, 2u);
  EXPECT_EQ(ngrams(twice, 2, 1).size(), 1u);
  EXPECT_THROW(ngrams(one, 0), InvalidArgument);
  // No gram spans a sentence break.
  for (const auto& r : ngrams(twice, 2)) EXPECT_NE(r.gram, "tri un");
}

TEST(Keywords, Examples) {
  const CorpusSnapshot s =
      snap({testing::simple_doc("t", "cath cath ci .", "book"),
            testing::simple_doc("r", "cath ci ci llyfr .", "letter")});
  const auto rows = keywords(s, parse_filter("genre=book"));
  std::map<std::string, KeywordRow> by;
  for (const auto& r : rows) by[r.word] = r;
  EXPECT_EQ(by.size(), 3u);
  EXPECT_EQ(by.at("cath").direction, Direction::kOver);
  EXPECT_EQ(by.at("ci").direction, Direction::kUnder);
  EXPECT_EQ(by.at("llyfr").target_count, 0u);
  EXPECT_THROW(keywords(s, parse_filter("genre=thesis")), InvalidArgument);
  EXPECT_THROW(keywords(s, parse_filter("genre=book"), parse_filter("genre=thesis")),
               InvalidArgument);

  const CorpusSnapshot same = snap({testing::simple_doc("t", "cath ci .", "book"),
                                    testing::simple_doc("r", "cath ci .", "letter")});
  for (const auto& r : keywords(same, parse_filter("genre=book"))) {
    EXPECT_NEAR(r.ll, 0.0, 1e-12);
    EXPECT_EQ(r.direction, Direction::kEqual);
  }
}

// --- oracle agreement on random corpora -------------------------------------------

template <typename Row, typename Key, typename Check>
void same_rows(const std::vector<Row>& got, const std::vector<Row>& want, Key key, Check check) {
  ASSERT_EQ(got.size(), want.size());
  std::map<std::string, const Row*> by;
  for (const Row& r : want) by[key(r)] = &r;
  for (const Row& r : got) {
    auto it = by.find(key(r));
    ASSERT_NE(it, by.end()) << key(r);
    check(r, *it->second);
  }
}

class OracleAgreement : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(OracleAgreement, AllOperations) {
  const auto docs = testing::random_corpus(GetParam(), 10, 250);
  const CorpusSnapshot s = snap(docs);

  for (Attribute unit : {Attribute::kTokenLower, Attribute::kLemma}) {
    EXPECT_EQ(frequency_list(s, unit), oracle::frequency(docs, unit));
  }

  for (const char* q : {R"([token="yn"])", R"([lemma="cat"])", R"([basic="E" & sem="Z5"])",
                        R"([token="y"] [basic="Ans"])", R"([rich="Utra"] [token="'n"] [sem="M7"])"}) {
    const QueryExpr e = parse_query(q);
    EXPECT_EQ(concordance(s, e, 4), oracle::concordance(docs, e, 4, {})) << q;
    EXPECT_EQ(concordance(s, e, 2, std::nullopt, parse_filter("genre=book")),
              oracle::concordance(docs, e, 2, parse_filter("genre=book")))
        << q;
  }

  for (const auto& [attr, node] : std::vector<std::pair<Attribute, std::string>>{
           {Attribute::kTokenLower, "mae"}, {Attribute::kTokenLower, "y"},
           {Attribute::kLemma, "gat"}}) {
    for (std::size_t span : {1u, 3u}) {
      for (CollocationStat stat : {CollocationStat::kMI, CollocationStat::kLL}) {
        const auto got = collocations(s, {attr, node}, span, stat, 2);
        same_rows(got, oracle::collocations(docs, attr, node, span, stat, 2),
                  [](const CollocationRow& r) { return r.collocate; },
                  [](const CollocationRow& a, const CollocationRow& b) {
                    EXPECT_EQ(a.observed, b.observed);
                    EXPECT_NEAR(a.expected, b.expected, 1e-9);
                    EXPECT_NEAR(a.score, b.score, 1e-9);
                  });
        for (std::size_t i = 1; i < got.size(); ++i) EXPECT_GE(got[i - 1].score, got[i].score);
      }
    }
  }

  for (std::size_t n : {1u, 2u, 3u}) EXPECT_EQ(ngrams(s, n), oracle::ngrams(docs, n));

  const MetaFilter target = parse_filter("genre=book");
  const MetaFilter reference = parse_filter("genre=letter");
  const bool has_target = !select(docs, target).empty();
  const bool has_reference = !select(docs, reference).empty();
  if (has_target && has_reference) {
    for (const MetaFilter* ref : {static_cast<const MetaFilter*>(nullptr), &reference}) {
      const auto got = ref ? keywords(s, target, *ref) : keywords(s, target);
      same_rows(got, oracle::keywords(docs, target, ref),
                [](const KeywordRow& r) { return r.word; },
                [](const KeywordRow& a, const KeywordRow& b) {
                  EXPECT_EQ(a.target_count, b.target_count);
                  EXPECT_EQ(a.reference_count, b.reference_count);
                  EXPECT_NEAR(a.ll, b.ll, 1e-9);
                  EXPECT_EQ(a.direction, b.direction);
                });
      for (std::size_t i = 1; i < got.size(); ++i) EXPECT_GE(got[i - 1].ll, got[i].ll);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, OracleAgreement, ::testing::Values(1, 2, 3, 11, 29, 404));

TEST(Snapshot, ConcurrentReadersSeeTheSameResults) {
  const CorpusSnapshot s = snap(testing::random_corpus(77, 6, 300));
  const auto want = frequency_list(s, Attribute::kLemma);
  const auto want_kwic = concordance(s, parse_query(R"([token="y"])"), 3);
  std::vector<std::thread> threads;
  std::vector<int> ok(8, 0);
  for (int i = 0; i < 8; ++i) {
    threads.emplace_back([&, i] {
      ok[i] = frequency_list(s, Attribute::kLemma) == want &&
              concordance(s, parse_query(R"([token="y"])"), 3) == want_kwic;
    });
  }
  for (auto& t : threads) t.join();
  for (int v : ok) EXPECT_EQ(v, 1);
}

}  // namespace
}  // namespace corpws
