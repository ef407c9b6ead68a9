#include "corpws/tiwtiadur.h"

#include <algorithm>
#include <cstdio>

#include "corpws/error.h"
#include "corpws/rng.h"
#include "corpws/text.h"

namespace corpws {

namespace {

constexpr std::array<std::string_view, kBandCount> kBandNames = {"K1", "K2", "K3",
                                                                "K4", "K5", "K6plus"};
constexpr std::size_t kBandWidth = 1000;

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

// Stable identifier from the task kind, the corpus contents and the request.
std::string make_task_id(std::string_view kind, const CorpusSnapshot& snapshot,
                         const std::vector<std::string>& fields) {
  std::uint64_t h = fnv1a(kind);
  h = fnv1a(hex64(snapshot.fingerprint()), h);
  for (const std::string& f : fields) {
    h = fnv1a("\x1f", h);
    h = fnv1a(f, h);
  }
  return std::string(kind) + "-" + hex64(h);
}

std::string normalize_answer(std::string_view s) { return text::fold_case(text::nfc(s)); }

bool usable(const Document& doc) { return !doc.meta.sensitive; }

// Distinct (doc, sentence) pairs of postings, keeping document order.
std::vector<Posting> distinct_sentences(const std::vector<Posting>& postings) {
  std::vector<Posting> out;
  for (const Posting& p : postings) {
    if (!out.empty() && out.back().doc == p.doc && out.back().sentence == p.sentence) continue;
    out.push_back({p.doc, p.sentence, 0});
  }
  return out;
}

BlankedLine blank_sentence(const CorpusSnapshot& snapshot, const Posting& where,
                           const std::string& folded_word) {
  const Document& doc = snapshot.documents()[where.doc];
  BlankedLine line;
  line.doc_id = doc.meta.id;
  line.sentence = where.sentence;
  for (const AnnotatedToken& t : doc.sentences[where.sentence - 1]) {
    if (text::fold_case(t.text) == folded_word) {
      line.tokens.emplace_back(std::nullopt);
    } else {
      line.tokens.emplace_back(t.text);
    }
  }
  return line;
}

std::vector<BlankedLine> sample_lines(const CorpusSnapshot& snapshot,
                                      const std::vector<Posting>& sentences, std::size_t k,
                                      const std::string& folded_word, Rng& rng) {
  std::vector<BlankedLine> lines;
  for (std::size_t i : rng.sample_indices(sentences.size(), k)) {
    lines.push_back(blank_sentence(snapshot, sentences[i], folded_word));
  }
  return lines;
}

}  // namespace

std::string_view to_string(Band band) { return kBandNames[static_cast<std::size_t>(band)]; }

std::optional<Band> parse_band(std::string_view s) {
  for (std::size_t i = 0; i < kBandCount; ++i) {
    if (kBandNames[i] == s) return static_cast<Band>(i);
  }
  if (s == "K6" || s == "K6+") return Band::kK6plus;
  return std::nullopt;
}

Band band_for_rank(std::size_t rank) {
  if (rank == 0 || rank > 5 * kBandWidth) return Band::kK6plus;
  return static_cast<Band>((rank - 1) / kBandWidth);
}

BandTable::BandTable(std::vector<FreqRow> ranked) : ranked_(std::move(ranked)) {
  rank_.reserve(ranked_.size());
  for (std::size_t i = 0; i < ranked_.size(); ++i) {
    if (ranked_[i].rank != i + 1) throw InvalidArgument("band table ranks must be dense");
    if (!rank_.emplace(ranked_[i].value, ranked_[i].rank).second) {
      throw InvalidArgument("duplicate word in band table: " + ranked_[i].value);
    }
  }
}

std::optional<std::size_t> BandTable::rank_of(std::string_view word) const {
  auto it = rank_.find(text::fold_case(word));
  if (it == rank_.end()) return std::nullopt;
  return it->second;
}

Band BandTable::band_of(std::string_view word) const {
  return band_for_rank(rank_of(word).value_or(0));
}

std::vector<std::string> BandTable::words_in(Band band) const {
  std::vector<std::string> out;
  for (const FreqRow& row : ranked_) {
    if (band_for_rank(row.rank) == band) out.push_back(row.value);
  }
  return out;
}

BandTable build_bands(const CorpusSnapshot& snapshot, bool exclude_sensitive_from_stats) {
  if (snapshot.word_count() == 0) throw InvalidArgument("cannot rank an empty corpus");
  if (!exclude_sensitive_from_stats) {
    return BandTable(frequency_list(snapshot, Attribute::kTokenLower));
  }
  std::vector<Document> kept;
  for (const Document& d : snapshot.documents()) {
    if (usable(d)) kept.push_back(d);
  }
  CorpusSnapshot reduced(std::move(kept));
  if (reduced.word_count() == 0) throw InvalidArgument("cannot rank an empty corpus");
  return BandTable(frequency_list(reduced, Attribute::kTokenLower));
}

Profile profile(std::string_view input, const Segmenter& segmenter, const BandTable& bands,
                bool highlight_non_level) {
  Profile out;
  for (std::size_t i = 0; i < kBandCount; ++i) out.bands[i].band = static_cast<Band>(i);
  for (const Sentence& sentence : segmenter.tokenize(input)) {
    for (const Token& t : sentence) {
      if (!is_word(t.text)) continue;
      ProfileWord w;
      w.word = t.text;
      const auto rank = bands.rank_of(t.text);
      w.ranked = rank.has_value();
      w.band = band_for_rank(rank.value_or(0));
      w.highlighted = highlight_non_level ? !w.ranked : w.ranked;
      ++out.bands[static_cast<std::size_t>(w.band)].count;
      out.words.push_back(std::move(w));
    }
  }
  out.total = out.words.size();
  if (out.total > 0) {
    for (BandShare& share : out.bands) {
      share.percent = 100.0 * static_cast<double>(share.count) / static_cast<double>(out.total);
    }
  }
  return out;
}

std::vector<bool> check_answers(const std::vector<std::string>& answers,
                                const std::vector<std::string>& fills) {
  if (answers.size() != fills.size()) {
    throw InvalidArgument("expected " + std::to_string(answers.size()) + " answers, got " +
                          std::to_string(fills.size()));
  }
  std::vector<bool> out;
  out.reserve(answers.size());
  for (std::size_t i = 0; i < answers.size(); ++i) {
    out.push_back(normalize_answer(answers[i]) == normalize_answer(fills[i]));
  }
  return out;
}

// ---------------------------------------------------------------------------

ClozeTask cloze_create(const CorpusSnapshot& snapshot, const ClozeParams& params) {
  if (params.gap_frequency < 2) throw InvalidArgument("gap_frequency must be at least 2");
  if (std::find(kClozeLengths.begin(), kClozeLengths.end(), params.text_length) ==
      kClozeLengths.end()) {
    throw InvalidArgument("text_length must be one of 100, 200, 300, 400, 500");
  }

  std::vector<std::uint32_t> eligible;
  const auto& docs = snapshot.documents();
  for (std::uint32_t d = 0; d < docs.size(); ++d) {
    if (docs[d].meta.genre != params.genre || !usable(docs[d])) continue;
    bool has_word = false;
    for (std::uint32_t s = 1; s <= docs[d].sentences.size() && !has_word; ++s) {
      has_word = !snapshot.word_positions(d, s).empty();
    }
    if (has_word) eligible.push_back(d);
  }
  if (eligible.empty()) {
    throw NoMaterial("no non-sensitive text of genre '" + params.genre + "'");
  }

  Rng rng(params.seed);
  const std::uint32_t d = eligible[rng.below(eligible.size())];
  const Document& doc = docs[d];

  std::vector<const AnnotatedToken*> flat;
  std::vector<std::size_t> word_at;  // indices into flat
  for (const auto& sentence : doc.sentences) {
    for (const AnnotatedToken& t : sentence) {
      if (is_word(t.text)) word_at.push_back(flat.size());
      flat.push_back(&t);
    }
  }
  const std::size_t length = std::min(params.text_length, word_at.size());
  const std::size_t start = rng.below(word_at.size() - length + 1);
  const std::size_t first = word_at[start];
  const std::size_t last = word_at[start + length - 1];

  ClozeTask task;
  task.params = params;
  task.doc_id = doc.meta.id;
  task.sentence = static_cast<std::uint32_t>(flat[first]->sentence);
  task.position = static_cast<std::uint32_t>(flat[first]->position);
  std::size_t words_seen = 0;
  for (std::size_t i = first; i <= last; ++i) {
    const std::string& tok = flat[i]->text;
    if (is_word(tok) && ++words_seen % params.gap_frequency == 0) {
      task.display.push_back({"", task.answers.size()});
      task.answers.push_back(tok);
    } else {
      task.display.push_back({tok, std::nullopt});
    }
  }
  task.bank = task.answers;
  rng.shuffle(task.bank);
  task.task_id = make_task_id("cloze", snapshot,
                              {params.genre, std::to_string(params.gap_frequency),
                               std::to_string(params.text_length),
                               std::to_string(params.seed)});
  return task;
}

std::vector<bool> cloze_check(const ClozeTask& task, const std::vector<std::string>& fills) {
  return check_answers(task.answers, fills);
}

std::vector<std::string> cloze_reconstruct(const ClozeTask& task) {
  std::vector<std::string> out;
  out.reserve(task.display.size());
  for (const ClozeItem& item : task.display) {
    out.push_back(item.gap ? task.answers.at(*item.gap) : item.text);
  }
  return out;
}

// ---------------------------------------------------------------------------

IdentifyTask identify_task(const CorpusSnapshot& snapshot, const BandTable& bands,
                           const IdentifyParams& params) {
  if (params.band != Band::kK1 && params.band != Band::kK2 && params.band != Band::kK3) {
    throw InvalidArgument("band must be K1, K2 or K3");
  }
  if (params.max_sentences < 1) throw InvalidArgument("max_sentences must be at least 1");

  const auto qualifying = [&](const std::string& word) {
    std::vector<Posting> hits;
    for (const Posting& p : snapshot.postings(Attribute::kTokenLower, word)) {
      if (!usable(snapshot.documents()[p.doc])) continue;
      if (snapshot.at(p).analysis.basic != params.word_type) continue;
      hits.push_back(p);
    }
    return hits;
  };

  std::vector<std::string> candidates;
  for (const std::string& word : bands.words_in(params.band)) {
    if (!qualifying(word).empty()) candidates.push_back(word);
  }
  if (candidates.empty()) {
    throw NoMaterial("no " + std::string(to_string(params.word_type)) + " word in band " +
                     std::string(to_string(params.band)));
  }

  Rng rng(params.seed);
  IdentifyTask task;
  task.params = params;
  task.answer = candidates[rng.below(candidates.size())];
  const auto sentences = distinct_sentences(qualifying(task.answer));
  task.lines = sample_lines(snapshot, sentences, params.max_sentences, task.answer, rng);
  task.task_id = make_task_id(
      "identify", snapshot,
      {std::string(to_string(params.band)), std::string(to_string(params.word_type)),
       std::to_string(params.max_sentences), std::to_string(params.seed)});
  return task;
}

// ---------------------------------------------------------------------------

WordTask word_task(const CorpusSnapshot& snapshot, const WordTaskParams& params) {
  if (params.max_lines < 1 || params.max_lines > kMaxWordTaskLines) {
    throw InvalidArgument("max_lines must be between 1 and 20");
  }
  const std::string word = text::nfc(text::trim(params.word));
  if (word.empty()) throw InvalidArgument("word must not be empty");
  const std::string folded = text::fold_case(word);

  std::vector<Posting> hits;
  for (const Posting& p : snapshot.postings(Attribute::kTokenLower, folded)) {
    if (!usable(snapshot.documents()[p.doc])) continue;
    if (params.pos && snapshot.at(p).analysis.basic != *params.pos) continue;
    hits.push_back(p);
  }
  if (hits.empty()) throw NoMaterial("no extract contains '" + word + "'");

  Rng rng(params.seed);
  WordTask task;
  task.params = params;
  task.reveal = word;
  task.lines = sample_lines(snapshot, distinct_sentences(hits), params.max_lines, folded, rng);
  task.task_id = make_task_id(
      "wordtask", snapshot,
      {folded, params.pos ? std::string(to_string(*params.pos)) : "-",
       std::to_string(params.max_lines), std::to_string(params.seed)});
  return task;
}

}  // namespace corpws
