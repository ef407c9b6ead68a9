#include "corpws/query.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "corpws/error.h"
#include "corpws/rng.h"
#include "corpws/text.h"

namespace corpws {

namespace {

constexpr std::array<Attribute, kAttributeCount> kAttributes = {
    Attribute::kTokenLower, Attribute::kLemma, Attribute::kBasic, Attribute::kRich,
    Attribute::kSem};

template <typename Row, typename Key>
void rank_and_trim(std::vector<Row>& rows, std::optional<std::size_t> limit, Key key) {
  std::sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
    if (a.count != b.count) return a.count > b.count;
    return key(a) < key(b);
  });
  if (limit && rows.size() > *limit) rows.resize(*limit);
}

std::vector<bool> doc_mask(const CorpusSnapshot& snapshot, const MetaFilter& filter) {
  std::vector<bool> mask;
  mask.reserve(snapshot.documents().size());
  for (const Document& d : snapshot.documents()) mask.push_back(matches(d.meta, filter));
  return mask;
}

std::string_view attr_name(QueryAttr a) {
  switch (a) {
    case QueryAttr::kToken: return "token";
    case QueryAttr::kLemma: return "lemma";
    case QueryAttr::kBasic: return "basic";
    case QueryAttr::kRich: return "rich";
    case QueryAttr::kSem: return "sem";
  }
  return "token";
}

// Index attribute and lookup key answering a single equality test.
std::pair<Attribute, std::string> index_key(QueryAttr a, const std::string& value) {
  switch (a) {
    case QueryAttr::kToken: return {Attribute::kTokenLower, text::fold_case(value)};
    case QueryAttr::kLemma: return {Attribute::kLemma, value};
    case QueryAttr::kBasic: return {Attribute::kBasic, value};
    case QueryAttr::kRich: return {Attribute::kRich, value};
    case QueryAttr::kSem: return {Attribute::kSem, value};
  }
  return {Attribute::kTokenLower, value};
}

}  // namespace

std::string_view to_string(Attribute a) {
  switch (a) {
    case Attribute::kTokenLower: return "token_lower";
    case Attribute::kLemma: return "lemma";
    case Attribute::kBasic: return "basic";
    case Attribute::kRich: return "rich";
    case Attribute::kSem: return "sem";
  }
  return "token_lower";
}

std::optional<Attribute> parse_attribute(std::string_view s) {
  for (Attribute a : kAttributes) {
    if (to_string(a) == s) return a;
  }
  return std::nullopt;
}

std::string attribute_value(const AnnotatedToken& t, Attribute a) {
  switch (a) {
    case Attribute::kTokenLower: return text::fold_case(t.text);
    case Attribute::kLemma: return t.analysis.lemma;
    case Attribute::kBasic: return std::string(to_string(t.analysis.basic));
    case Attribute::kRich: return t.analysis.rich;
    case Attribute::kSem: return t.sem;
  }
  return {};
}

CorpusSnapshot::CorpusSnapshot(std::vector<Document> documents)
    : documents_(std::move(documents)) {
  std::uint64_t hash = fnv1a("");
  word_positions_.resize(documents_.size());
  for (std::uint32_t d = 0; d < documents_.size(); ++d) {
    const Document& doc = documents_[d];
    hash = fnv1a(write_vertical(doc), hash);
    auto& doc_words = word_positions_[d];
    doc_words.resize(doc.sentences.size());
    for (std::uint32_t s = 0; s < doc.sentences.size(); ++s) {
      for (const AnnotatedToken& t : doc.sentences[s]) {
        const Posting p{d, s + 1, static_cast<std::uint32_t>(t.position)};
        for (Attribute a : kAttributes) {
          index_[static_cast<std::size_t>(a)][attribute_value(t, a)].push_back(p);
        }
        ++token_count_;
        if (is_word(t.text)) {
          doc_words[s].push_back(p.position);
          ++word_count_;
        }
      }
    }
  }
  fingerprint_ = hash;
}

const AnnotatedToken& CorpusSnapshot::at(const Posting& p) const {
  return documents_.at(p.doc).sentences.at(p.sentence - 1).at(p.position - 1);
}

const std::vector<Posting>& CorpusSnapshot::postings(Attribute a,
                                                     std::string_view value) const {
  static const std::vector<Posting> kEmpty;
  const auto& idx = index(a);
  auto it = idx.find(std::string(value));
  return it == idx.end() ? kEmpty : it->second;
}

const std::vector<std::uint32_t>& CorpusSnapshot::word_positions(
    std::uint32_t doc, std::uint32_t sentence) const {
  return word_positions_.at(doc).at(sentence - 1);
}

// ---------------------------------------------------------------------------

std::vector<FreqRow> frequency_list(const CorpusSnapshot& snapshot, Attribute unit,
                                    std::optional<std::size_t> limit) {
  if (unit != Attribute::kTokenLower && unit != Attribute::kLemma) {
    throw InvalidArgument("frequency unit must be token_lower or lemma");
  }
  std::vector<FreqRow> rows;
  for (const auto& [value, list] : snapshot.index(unit)) {
    std::size_t count = 0;
    for (const Posting& p : list) {
      if (is_word(snapshot.at(p).text)) ++count;
    }
    if (count) rows.push_back({0, value, count});
  }
  rank_and_trim(rows, limit, [](const FreqRow& r) -> const std::string& { return r.value; });
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].rank = i + 1;
  return rows;
}

// ---------------------------------------------------------------------------

bool TokenConstraint::matches(const AnnotatedToken& t) const {
  return std::all_of(tests.begin(), tests.end(), [&](const auto& test) {
    const auto& [attr, value] = test;
    switch (attr) {
      case QueryAttr::kToken: return text::fold_case(t.text) == text::fold_case(value);
      case QueryAttr::kLemma: return t.analysis.lemma == value;
      case QueryAttr::kBasic: return to_string(t.analysis.basic) == value;
      case QueryAttr::kRich: return t.analysis.rich == value;
      case QueryAttr::kSem: return t.sem == value;
    }
    return false;
  });
}

QueryExpr parse_query(std::string_view src) {
  QueryExpr expr;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < src.size() && (src[i] == ' ' || src[i] == '\t' || src[i] == '\n')) ++i;
  };
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError("query at offset " + std::to_string(i) + ": " + msg);
  };
  skip_ws();
  while (i < src.size()) {
    if (src[i] != '[') fail("expected '['");
    ++i;
    TokenConstraint c;
    while (true) {
      skip_ws();
      const std::size_t start = i;
      while (i < src.size() && std::isalpha(static_cast<unsigned char>(src[i]))) ++i;
      const std::string_view name = src.substr(start, i - start);
      std::optional<QueryAttr> attr;
      for (QueryAttr a : {QueryAttr::kToken, QueryAttr::kLemma, QueryAttr::kBasic,
                          QueryAttr::kRich, QueryAttr::kSem}) {
        if (attr_name(a) == name) attr = a;
      }
      if (!attr) fail("unknown attribute '" + std::string(name) + "'");
      skip_ws();
      if (i >= src.size() || src[i] != '=') fail("expected '='");
      ++i;
      skip_ws();
      if (i >= src.size() || src[i] != '"') fail("expected quoted value");
      const std::size_t close = src.find('"', i + 1);
      if (close == std::string_view::npos) fail("unterminated value");
      c.tests.emplace_back(*attr, text::nfc(src.substr(i + 1, close - i - 1)));
      i = close + 1;
      skip_ws();
      if (i < src.size() && src[i] == '&') {
        ++i;
        continue;
      }
      if (i < src.size() && src[i] == ']') {
        ++i;
        break;
      }
      fail("expected '&' or ']'");
    }
    expr.constraints.push_back(std::move(c));
    skip_ws();
  }
  if (expr.constraints.empty()) throw ParseError("empty query");
  return expr;
}

std::vector<KwicLine> concordance(const CorpusSnapshot& snapshot, const QueryExpr& expr,
                                  std::size_t context_words,
                                  std::optional<std::size_t> limit,
                                  const MetaFilter& filter) {
  std::vector<KwicLine> out;
  if (expr.constraints.empty() || (limit && *limit == 0)) return out;
  for (const TokenConstraint& c : expr.constraints) {
    if (c.tests.empty()) throw InvalidArgument("query constraint with no tests");
  }

  // Seed from the rarest test of the first constraint.
  const std::vector<Posting>* seed = nullptr;
  for (const auto& [attr, value] : expr.constraints.front().tests) {
    const auto [a, key] = index_key(attr, value);
    const auto& list = snapshot.postings(a, key);
    if (!seed || list.size() < seed->size()) seed = &list;
  }

  const auto mask = doc_mask(snapshot, filter);
  const std::size_t span = expr.constraints.size();
  for (const Posting& p : *seed) {
    if (!mask[p.doc]) continue;
    const Document& doc = snapshot.documents()[p.doc];
    const auto& sentence = doc.sentences[p.sentence - 1];
    const std::size_t first = p.position - 1;
    if (first + span > sentence.size()) continue;
    bool ok = true;
    for (std::size_t k = 0; k < span && ok; ++k) {
      ok = expr.constraints[k].matches(sentence[first + k]);
    }
    if (!ok) continue;

    KwicLine line;
    line.doc_id = doc.meta.id;
    line.sentence = p.sentence;
    line.position = p.position;
    const std::size_t left_begin = first > context_words ? first - context_words : 0;
    for (std::size_t k = left_begin; k < first; ++k) line.left.push_back(sentence[k].text);
    for (std::size_t k = first; k < first + span; ++k) line.node.push_back(sentence[k].text);
    const std::size_t right_end = std::min(sentence.size(), first + span + context_words);
    for (std::size_t k = first + span; k < right_end; ++k) line.right.push_back(sentence[k].text);
    out.push_back(std::move(line));
    if (limit && out.size() >= *limit) break;
  }
  return out;
}

// ---------------------------------------------------------------------------

double log_likelihood(double a, double b, double c, double d) {
  const double total = c + d;
  if (total <= 0) return 0.0;
  const double e1 = c * (a + b) / total;
  const double e2 = d * (a + b) / total;
  const auto term = [](double observed, double expected) {
    return observed > 0 ? observed * std::log(observed / expected) : 0.0;
  };
  return 2.0 * (term(a, e1) + term(b, e2));
}

std::vector<CollocationRow> collocations(const CorpusSnapshot& snapshot, const NodeTest& node,
                                         std::size_t span, CollocationStat stat,
                                         std::size_t min_count) {
  if (span < 1) throw InvalidArgument("collocation span must be at least 1");
  if (node.attribute != Attribute::kTokenLower && node.attribute != Attribute::kLemma) {
    throw InvalidArgument("collocation node must test token_lower or lemma");
  }
  const std::string key =
      node.attribute == Attribute::kTokenLower ? text::fold_case(node.value) : node.value;

  std::map<std::string, std::size_t> observed;
  std::size_t node_freq = 0;
  std::size_t window_slots = 0;
  for (const Posting& p : snapshot.postings(node.attribute, key)) {
    const auto& positions = snapshot.word_positions(p.doc, p.sentence);
    auto it = std::lower_bound(positions.begin(), positions.end(), p.position);
    if (it == positions.end() || *it != p.position) continue;  // not a word token
    ++node_freq;
    const auto ord = static_cast<std::size_t>(it - positions.begin());
    const std::size_t lo = ord > span ? ord - span : 0;
    const std::size_t hi = std::min(positions.size() - 1, ord + span);
    for (std::size_t k = lo; k <= hi; ++k) {
      if (k == ord) continue;
      ++window_slots;
      const Posting q{p.doc, p.sentence, positions[k]};
      ++observed[attribute_value(snapshot.at(q), node.attribute)];
    }
  }
  if (node_freq == 0) return {};

  // Word-token frequency of each collocate value.
  const auto word_freq = [&](const std::string& value) {
    std::size_t n = 0;
    for (const Posting& p : snapshot.postings(node.attribute, value)) {
      if (is_word(snapshot.at(p).text)) ++n;
    }
    return n;
  };

  const auto n_words = static_cast<double>(snapshot.word_count());
  std::vector<CollocationRow> rows;
  for (const auto& [coll, o] : observed) {
    if (o < min_count) continue;
    const auto f_coll = static_cast<double>(word_freq(coll));
    CollocationRow row;
    row.collocate = coll;
    row.observed = o;
    row.expected = static_cast<double>(node_freq) * f_coll * 2.0 * static_cast<double>(span) /
                   n_words;
    if (stat == CollocationStat::kMI) {
      row.score = std::log2(static_cast<double>(o) / row.expected);
    } else {
      // Window versus the rest of the corpus. Overlapping windows can count a
      // collocate occurrence more than once, so both rest cells are floored
      // at zero.
      const auto a = static_cast<double>(o);
      const double b = std::max(f_coll - a, 0.0);
      const auto c = static_cast<double>(window_slots);
      const double d = std::max(n_words - c, 0.0);
      row.score = log_likelihood(a, b, c, d);
    }
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const CollocationRow& x, const CollocationRow& y) {
    if (x.score != y.score) return x.score > y.score;
    return x.collocate < y.collocate;
  });
  return rows;
}

std::vector<NgramRow> ngrams(const CorpusSnapshot& snapshot, std::size_t n,
                             std::optional<std::size_t> limit) {
  if (n < 1) throw InvalidArgument("n-gram length must be at least 1");
  std::unordered_map<std::string, std::size_t> counts;
  const auto& docs = snapshot.documents();
  for (std::uint32_t d = 0; d < docs.size(); ++d) {
    for (std::uint32_t s = 1; s <= docs[d].sentences.size(); ++s) {
      const auto& positions = snapshot.word_positions(d, s);
      if (positions.size() < n) continue;
      const auto& sentence = docs[d].sentences[s - 1];
      std::vector<std::string> words;
      words.reserve(positions.size());
      for (auto pos : positions) words.push_back(text::fold_case(sentence[pos - 1].text));
      for (std::size_t i = 0; i + n <= words.size(); ++i) {
        std::string gram = words[i];
        for (std::size_t k = 1; k < n; ++k) gram += " " + words[i + k];
        ++counts[gram];
      }
    }
  }
  std::vector<NgramRow> rows;
  rows.reserve(counts.size());
  for (auto& [gram, count] : counts) rows.push_back({gram, count});
  rank_and_trim(rows, limit, [](const NgramRow& r) -> const std::string& { return r.gram; });
  return rows;
}

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::kOver: return "over";
    case Direction::kUnder: return "under";
    case Direction::kEqual: return "equal";
  }
  return "equal";
}

std::vector<KeywordRow> keywords(const CorpusSnapshot& snapshot, const MetaFilter& target,
                                 const std::optional<MetaFilter>& reference) {
  std::map<std::string, std::pair<std::size_t, std::size_t>> counts;
  std::size_t target_size = 0;
  std::size_t reference_size = 0;
  std::size_t target_docs = 0;
  std::size_t reference_docs = 0;
  for (const Document& doc : snapshot.documents()) {
    const bool in_target = matches(doc.meta, target);
    const bool in_reference = reference ? matches(doc.meta, *reference) : !in_target;
    if (!in_target && !in_reference) continue;
    target_docs += in_target;
    reference_docs += in_reference;
    for (const auto& s : doc.sentences) {
      for (const AnnotatedToken& t : s) {
        if (!is_word(t.text)) continue;
        auto& [a, b] = counts[text::fold_case(t.text)];
        if (in_target) {
          ++a;
          ++target_size;
        }
        if (in_reference) {
          ++b;
          ++reference_size;
        }
      }
    }
  }
  if (target_docs == 0 || target_size == 0) {
    throw InvalidArgument("keyword target selects no words");
  }
  if (reference_docs == 0 || reference_size == 0) {
    throw InvalidArgument("keyword reference selects no words");
  }

  const auto c = static_cast<double>(target_size);
  const auto d = static_cast<double>(reference_size);
  std::vector<KeywordRow> rows;
  rows.reserve(counts.size());
  for (const auto& [word, ab] : counts) {
    KeywordRow row;
    row.word = word;
    row.target_count = ab.first;
    row.reference_count = ab.second;
    const auto a = static_cast<double>(ab.first);
    const auto b = static_cast<double>(ab.second);
    row.ll = log_likelihood(a, b, c, d);
    // Compare a/c with b/d without dividing.
    const double lhs = a * d;
    const double rhs = b * c;
    row.direction = lhs > rhs ? Direction::kOver
                              : (lhs < rhs ? Direction::kUnder : Direction::kEqual);
    rows.push_back(std::move(row));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const KeywordRow& x, const KeywordRow& y) {
    if (x.ll != y.ll) return x.ll > y.ll;
    return x.word < y.word;
  });
  return rows;
}

}  // namespace corpws
