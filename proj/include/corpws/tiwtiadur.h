#ifndef CORPWS_TIWTIADUR_H_
#define CORPWS_TIWTIADUR_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "corpws/query.h"
#include "corpws/segmenter.h"
#include "corpws/tagset.h"

namespace corpws {

enum class Band { kK1, kK2, kK3, kK4, kK5, kK6plus };
inline constexpr std::size_t kBandCount = 6;

std::string_view to_string(Band band);
std::optional<Band> parse_band(std::string_view s);

// 1-based rank to band; rank 0 stands for an unranked word.
Band band_for_rank(std::size_t rank);

// Ranked word list with 1000-rank bands.
class BandTable {
 public:
  BandTable() = default;
  explicit BandTable(std::vector<FreqRow> ranked);

  // The lookup case-folds its argument.
  std::optional<std::size_t> rank_of(std::string_view word) const;
  Band band_of(std::string_view word) const;
  const std::vector<FreqRow>& ranked() const { return ranked_; }
  std::vector<std::string> words_in(Band band) const;

  bool operator==(const BandTable& other) const { return ranked_ == other.ranked_; }

 private:
  std::vector<FreqRow> ranked_;
  std::unordered_map<std::string, std::size_t> rank_;
};

// Ranks over the case-folded word list of the whole corpus. Sensitive
// documents count unless `exclude_sensitive_from_stats` is set.
// Throws InvalidArgument for an empty corpus.
BandTable build_bands(const CorpusSnapshot& snapshot, bool exclude_sensitive_from_stats = false);

// ---------------------------------------------------------------------------
// Word profiler

struct ProfileWord {
  std::string word;
  Band band = Band::kK6plus;
  bool ranked = false;
  bool highlighted = false;
};

struct BandShare {
  Band band = Band::kK1;
  std::size_t count = 0;
  double percent = 0;
};

struct Profile {
  std::vector<ProfileWord> words;
  std::array<BandShare, kBandCount> bands{};
  std::size_t total = 0;
};

// Ranked words are highlighted by default; with `highlight_non_level` the
// highlight moves to the words missing from the ranked list.
Profile profile(std::string_view text, const Segmenter& segmenter, const BandTable& bands,
                bool highlight_non_level);

// ---------------------------------------------------------------------------
// Shared task pieces

// One line of a blanked extract. nullopt marks a blank.
struct BlankedLine {
  std::string doc_id;
  std::uint32_t sentence = 0;
  std::vector<std::optional<std::string>> tokens;

  bool operator==(const BlankedLine&) const = default;
};

// Per-position comparison after NFC and case folding.
// Throws InvalidArgument when the lengths differ.
std::vector<bool> check_answers(const std::vector<std::string>& answers,
                                const std::vector<std::string>& fills);

// ---------------------------------------------------------------------------
// Gap fill

inline constexpr std::array<std::size_t, 5> kClozeLengths = {100, 200, 300, 400, 500};

struct ClozeParams {
  std::string genre;
  std::size_t gap_frequency = 8;
  std::size_t text_length = 100;
  std::uint64_t seed = 0;

  bool operator==(const ClozeParams&) const = default;
};

struct ClozeItem {
  std::string text;  // empty for gaps
  std::optional<std::size_t> gap;

  bool operator==(const ClozeItem&) const = default;
};

struct ClozeTask {
  std::string task_id;
  std::vector<ClozeItem> display;
  std::vector<std::string> answers;
  std::vector<std::string> bank;
  ClozeParams params;
  std::string doc_id;
  std::uint32_t sentence = 0;  // first token of the window
  std::uint32_t position = 0;

  bool operator==(const ClozeTask&) const = default;
};

// Throws InvalidArgument on bad parameters and NoMaterial when the genre has no
// non-sensitive document with words.
ClozeTask cloze_create(const CorpusSnapshot& snapshot, const ClozeParams& params);
std::vector<bool> cloze_check(const ClozeTask& task, const std::vector<std::string>& fills);

// The window text with the answers put back, one token per element.
std::vector<std::string> cloze_reconstruct(const ClozeTask& task);

// ---------------------------------------------------------------------------
// Word identification

struct IdentifyParams {
  Band band = Band::kK1;
  BasicCat word_type = BasicCat::kE;
  std::size_t max_sentences = 10;
  std::uint64_t seed = 0;

  bool operator==(const IdentifyParams&) const = default;
};

struct IdentifyTask {
  std::string task_id;
  std::vector<BlankedLine> lines;
  std::string answer;
  IdentifyParams params;

  bool operator==(const IdentifyTask&) const = default;
};

// band must be K1, K2 or K3.
IdentifyTask identify_task(const CorpusSnapshot& snapshot, const BandTable& bands,
                           const IdentifyParams& params);

// ---------------------------------------------------------------------------
// Word task creator

inline constexpr std::size_t kMaxWordTaskLines = 20;

struct WordTaskParams {
  std::string word;
  std::optional<BasicCat> pos;
  std::size_t max_lines = kMaxWordTaskLines;
  std::uint64_t seed = 0;

  bool operator==(const WordTaskParams&) const = default;
};

struct WordTask {
  std::string task_id;
  std::vector<BlankedLine> lines;
  std::string reveal;
  WordTaskParams params;

  bool operator==(const WordTask&) const = default;
};

WordTask word_task(const CorpusSnapshot& snapshot, const WordTaskParams& params);

}  // namespace corpws

#endif  // CORPWS_TIWTIADUR_H_
