#include "corpws/lexicon.h"

#include <algorithm>
#include <array>
#include <charconv>

#include "corpws/error.h"
#include "corpws/text.h"

namespace corpws {

namespace {

struct Rule {
  std::string_view from;  // base initial
  std::string_view to;    // mutated initial
  MutationKind kind;
};

constexpr std::array<Rule, 18> kMutationTable = {{
    {"p", "b", MutationKind::kSoft},
    {"t", "d", MutationKind::kSoft},
    {"c", "g", MutationKind::kSoft},
    {"b", "f", MutationKind::kSoft},
    {"d", "dd", MutationKind::kSoft},
    {"g", "", MutationKind::kSoft},
    {"m", "f", MutationKind::kSoft},
    {"ll", "l", MutationKind::kSoft},
    {"rh", "r", MutationKind::kSoft},
    {"p", "mh", MutationKind::kNasal},
    {"t", "nh", MutationKind::kNasal},
    {"c", "ngh", MutationKind::kNasal},
    {"b", "m", MutationKind::kNasal},
    {"d", "n", MutationKind::kNasal},
    {"g", "ng", MutationKind::kNasal},
    {"p", "ph", MutationKind::kAspirate},
    {"t", "th", MutationKind::kAspirate},
    {"c", "ch", MutationKind::kAspirate},
}};

// Longest first.
constexpr std::array<std::string_view, 10> kDigraphs = {
    "ngh", "ll", "rh", "ng", "ch", "dd", "ph", "th", "mh", "nh"};

// Initial grapheme of a lowercase word: a digraph if one matches, otherwise
// the first code point.
std::string_view initial_unit(std::string_view s) {
  for (std::string_view d : kDigraphs) {
    if (s.starts_with(d)) return s.substr(0, d.size());
  }
  std::size_t pos = 0;
  text::next_code_point(s, pos);
  return s.substr(0, pos);
}

// Initials that can remain after soft-mutation deletes a leading g.
bool g_restorable(std::string_view unit) {
  static constexpr std::array<std::string_view, 35> kUnits = {
      "a", "e", "i", "o", "u", "w", "y", "l", "r", "n",
      "â", "ê", "î", "ô", "û", "ŵ", "ŷ", "á", "é", "í",
      "ó", "ú", "ẃ", "ý", "à", "è", "ì", "ò", "ù", "ẁ",
      "ỳ", "ä", "ë", "ï", "ö"};
  return std::find(kUnits.begin(), kUnits.end(), unit) != kUnits.end();
}

std::string mutate_lower(std::string_view base, MutationKind kind) {
  const std::string_view unit = initial_unit(base);
  for (const Rule& rule : kMutationTable) {
    if (rule.kind != kind || rule.from != unit) continue;
    std::string out(rule.to);
    out.append(base.substr(unit.size()));
    if (out.empty()) return std::string(base);
    return out;
  }
  return std::string(base);
}

void inverse_lower(std::string_view surface,
                   std::vector<MutationCandidate>& out) {
  const std::string_view unit = initial_unit(surface);
  const std::string_view rest = surface.substr(unit.size());
  for (MutationKind kind :
       {MutationKind::kSoft, MutationKind::kNasal, MutationKind::kAspirate}) {
    for (const Rule& rule : kMutationTable) {
      if (rule.kind != kind) continue;
      if (rule.to.empty()) {
        if (g_restorable(unit)) {
          out.push_back({std::string(rule.from) + std::string(surface), kind});
        }
      } else if (rule.to == unit) {
        out.push_back({std::string(rule.from) + std::string(rest), kind});
      }
    }
  }
}

void push_unique(std::vector<MutationCandidate>& out, MutationCandidate c) {
  if (std::find(out.begin(), out.end(), c) == out.end()) {
    out.push_back(std::move(c));
  }
}

}  // namespace

std::string_view to_string(MutationKind kind) {
  switch (kind) {
    case MutationKind::kNone: return "-";
    case MutationKind::kSoft: return "sm";
    case MutationKind::kNasal: return "nm";
    case MutationKind::kAspirate: return "am";
  }
  return "-";
}

std::optional<MutationKind> parse_mutation(std::string_view code) {
  if (code == "-") return MutationKind::kNone;
  if (code == "sm") return MutationKind::kSoft;
  if (code == "nm") return MutationKind::kNasal;
  if (code == "am") return MutationKind::kAspirate;
  return std::nullopt;
}

std::string apply_mutation(std::string_view base, MutationKind kind) {
  if (base.empty() || kind == MutationKind::kNone) return std::string(base);
  if (text::starts_upper(base)) {
    return text::upper_initial(mutate_lower(text::lower_initial(base), kind));
  }
  return mutate_lower(base, kind);
}

std::vector<MutationCandidate> demutate(std::string_view surface) {
  std::vector<MutationCandidate> out;
  out.push_back({std::string(surface), MutationKind::kNone});
  if (surface.empty()) return out;

  if (!text::starts_upper(surface)) {
    std::vector<MutationCandidate> inverse;
    inverse_lower(surface, inverse);
    for (auto& c : inverse) push_unique(out, std::move(c));
    return out;
  }

  const std::string lowered = text::lower_initial(surface);
  std::vector<MutationCandidate> inverse;
  inverse_lower(lowered, inverse);
  for (const auto& c : inverse) {
    push_unique(out, {text::upper_initial(c.base), c.kind});
  }
  push_unique(out, {lowered, MutationKind::kNone});
  for (auto& c : inverse) push_unique(out, std::move(c));
  return out;
}

Lexicon::Lexicon(std::vector<LexEntry> entries,
                 std::unordered_set<std::string> english, const Tagset& tagset)
    : entries_(std::move(entries)), english_(std::move(english)) {
  tagset.parse_tag("Gwest");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    LexEntry& e = entries_[i];
    if (e.surface.empty() || e.lemma.empty()) {
      throw ParseError("lexicon entry with empty surface or lemma");
    }
    e.basic = tagset.parse_tag(e.rich_tag).basic;
    by_surface_[e.surface].push_back(i);
  }
}

std::vector<LexEntry> Lexicon::parse_entries(std::string_view contents,
                                             const Tagset& tagset) {
  std::vector<LexEntry> entries;
  std::size_t line_no = 0;
  for (const std::string& raw : text::split(contents, '\n')) {
    ++line_no;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (text::trim(line).empty() || line.front() == '#') continue;
    const auto cols = text::split(line, '\t');
    const std::string where = "lexicon line " + std::to_string(line_no);
    if (cols.size() != 4) {
      throw ParseError(where + ": expected 4 tab-separated columns");
    }
    LexEntry e;
    e.surface = text::nfc(cols[0]);
    e.lemma = text::nfc(cols[1]);
    e.rich_tag = cols[2];
    if (e.surface.empty() || e.lemma.empty()) {
      throw ParseError(where + ": empty surface or lemma");
    }
    const std::string& f = cols[3];
    auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), e.frequency);
    if (ec != std::errc() || ptr != f.data() + f.size()) {
      throw ParseError(where + ": frequency '" + f +
                       "' is not a non-negative integer");
    }
    try {
      e.basic = tagset.parse_tag(e.rich_tag).basic;
    } catch (const UnknownTag& err) {
      throw UnknownTag(where + ": " + err.what());
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

Lexicon Lexicon::load(const std::string& lexicon_path,
                      const std::string& english_path, const Tagset& tagset) {
  auto entries = parse_entries(text::read_file(lexicon_path), tagset);
  std::unordered_set<std::string> english;
  for (const std::string& line : text::read_lines(english_path)) {
    std::string_view word = text::trim(line);
    if (word.empty() || word.front() == '#') continue;
    english.insert(text::fold_case(word));
  }
  return Lexicon(std::move(entries), std::move(english), tagset);
}

void Lexicon::collect(
    std::string_view surface,
    std::vector<std::pair<std::size_t, MutationKind>>& hits) const {
  for (const MutationCandidate& c : demutate(surface)) {
    auto it = by_surface_.find(c.base);
    if (it == by_surface_.end()) continue;
    for (std::size_t idx : it->second) {
      std::pair<std::size_t, MutationKind> hit{idx, c.kind};
      if (std::find(hits.begin(), hits.end(), hit) == hits.end()) {
        hits.push_back(hit);
      }
    }
  }
}

bool Lexicon::is_english(std::string_view surface) const {
  return english_.contains(text::fold_case(surface));
}

std::vector<Analysis> Lexicon::lookup(std::string_view surface) const {
  if (surface.empty()) return {};
  std::vector<std::pair<std::size_t, MutationKind>> hits;
  collect(surface, hits);
  if (hits.empty()) {
    const std::string folded = text::fold_case(surface);
    if (folded != surface) collect(folded, hits);
  }
  if (hits.empty()) {
    if (is_english(surface)) {
      return {Analysis{text::fold_case(surface), BasicCat::kGw, "Gwest",
                       MutationKind::kNone}};
    }
    return {};
  }
  std::stable_sort(hits.begin(), hits.end(), [&](const auto& a, const auto& b) {
    const auto fa = entries_[a.first].frequency;
    const auto fb = entries_[b.first].frequency;
    if (fa != fb) return fa > fb;
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  std::vector<Analysis> out;
  out.reserve(hits.size());
  for (const auto& [idx, kind] : hits) {
    const LexEntry& e = entries_[idx];
    out.push_back(Analysis{e.lemma, e.basic, e.rich_tag, kind});
  }
  return out;
}

}  // namespace corpws
