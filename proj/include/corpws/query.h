#ifndef CORPWS_QUERY_H_
#define CORPWS_QUERY_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "corpws/corpus.h"

namespace corpws {

enum class Attribute { kTokenLower, kLemma, kBasic, kRich, kSem };
inline constexpr std::size_t kAttributeCount = 5;

std::string_view to_string(Attribute a);
std::optional<Attribute> parse_attribute(std::string_view s);
std::string attribute_value(const AnnotatedToken& t, Attribute a);

// Coordinate of a token: document index in the snapshot, then the 1-based
// sentence and position.
struct Posting {
  std::uint32_t doc = 0;
  std::uint32_t sentence = 0;
  std::uint32_t position = 0;

  auto operator<=>(const Posting&) const = default;
};

// Immutable indexed corpus. Readers may share it freely across threads.
class CorpusSnapshot {
 public:
  explicit CorpusSnapshot(std::vector<Document> documents);

  const std::vector<Document>& documents() const { return documents_; }
  const AnnotatedToken& at(const Posting& p) const;

  // Postings in document order; empty when the value is not indexed.
  const std::vector<Posting>& postings(Attribute a, std::string_view value) const;
  std::size_t frequency(Attribute a, std::string_view value) const {
    return postings(a, value).size();
  }
  const std::unordered_map<std::string, std::vector<Posting>>& index(Attribute a) const {
    return index_[static_cast<std::size_t>(a)];
  }

  // 1-based positions of the word tokens of a sentence, ascending.
  const std::vector<std::uint32_t>& word_positions(std::uint32_t doc,
                                                   std::uint32_t sentence) const;
  std::size_t word_count() const { return word_count_; }
  std::size_t token_count() const { return token_count_; }
  std::uint64_t fingerprint() const { return fingerprint_; }

 private:
  std::vector<Document> documents_;
  std::array<std::unordered_map<std::string, std::vector<Posting>>, kAttributeCount> index_;
  std::vector<std::vector<std::vector<std::uint32_t>>> word_positions_;
  std::size_t word_count_ = 0;
  std::size_t token_count_ = 0;
  std::uint64_t fingerprint_ = 0;
};

// ---------------------------------------------------------------------------
// Frequency lists

struct FreqRow {
  std::size_t rank = 0;  // 1-based, consecutive
  std::string value;
  std::size_t count = 0;

  bool operator==(const FreqRow&) const = default;
};

// Word tokens only, ranked by count then value. `unit` is kTokenLower or
// kLemma. nullopt limit means no limit.
std::vector<FreqRow> frequency_list(const CorpusSnapshot& snapshot, Attribute unit,
                                    std::optional<std::size_t> limit = std::nullopt);

// ---------------------------------------------------------------------------
// Concordance

enum class QueryAttr { kToken, kLemma, kBasic, kRich, kSem };

struct TokenConstraint {
  std::vector<std::pair<QueryAttr, std::string>> tests;  // conjunction
  bool matches(const AnnotatedToken& t) const;
};

// A sequence of constraints on consecutive tokens. One constraint is a simple
// query; several form a complex query.
struct QueryExpr {
  std::vector<TokenConstraint> constraints;
};

// `[lemma="bod"] [basic="E" & sem="M7"]`; token tests are case-insensitive.
QueryExpr parse_query(std::string_view source);

struct KwicLine {
  std::string doc_id;
  std::uint32_t sentence = 0;
  std::uint32_t position = 0;  // first node token
  std::vector<std::string> left;
  std::vector<std::string> node;
  std::vector<std::string> right;

  bool operator==(const KwicLine&) const = default;
};

// Context stays within the hit's sentence.
std::vector<KwicLine> concordance(const CorpusSnapshot& snapshot, const QueryExpr& expr,
                                  std::size_t context_words,
                                  std::optional<std::size_t> limit = std::nullopt,
                                  const MetaFilter& filter = {});

// ---------------------------------------------------------------------------
// Association statistics

// Log-likelihood G2 for a word seen a times in a sample of size c and b times
// in a sample of size d, with 0*ln(0) taken as 0.
double log_likelihood(double a, double b, double c, double d);

enum class CollocationStat { kMI, kLL };

struct NodeTest {
  Attribute attribute = Attribute::kLemma;  // kTokenLower or kLemma
  std::string value;
};

struct CollocationRow {
  std::string collocate;
  std::size_t observed = 0;
  double expected = 0;
  double score = 0;
};

// Windows of +/-span word tokens around each node occurrence, within the
// sentence. expected = f(node) f(coll) 2 span / N over N word tokens.
std::vector<CollocationRow> collocations(const CorpusSnapshot& snapshot, const NodeTest& node,
                                         std::size_t span, CollocationStat stat,
                                         std::size_t min_count = 1);

// ---------------------------------------------------------------------------
// N-grams and keywords

struct NgramRow {
  std::string gram;  // token_lower values joined by single spaces
  std::size_t count = 0;

  bool operator==(const NgramRow&) const = default;
};

// Grams over the word tokens of each sentence.
std::vector<NgramRow> ngrams(const CorpusSnapshot& snapshot, std::size_t n,
                             std::optional<std::size_t> limit = std::nullopt);

enum class Direction { kOver, kUnder, kEqual };
std::string_view to_string(Direction d);

struct KeywordRow {
  std::string word;
  std::size_t target_count = 0;
  std::size_t reference_count = 0;
  double ll = 0;
  Direction direction = Direction::kEqual;
};

// Word counts in documents matching `target` against those matching
// `reference` (or every other document when absent). Throws InvalidArgument
// when either side has no words.
std::vector<KeywordRow> keywords(const CorpusSnapshot& snapshot, const MetaFilter& target,
                                 const std::optional<MetaFilter>& reference = std::nullopt);

}  // namespace corpws

#endif  // CORPWS_QUERY_H_
