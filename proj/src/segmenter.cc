#include "corpws/segmenter.h"

#include <algorithm>

#include "corpws/text.h"

namespace corpws {

namespace {

bool is_word_char(char32_t cp) {
  return text::is_letter(cp) || text::is_digit(cp) || text::is_mark(cp);
}

bool is_terminal(std::string_view t) { return t == "." || t == "!" || t == "?"; }

bool is_closer(std::string_view t) {
  return t == ")" || t == "]" || t == "}" || t == "\"" || t == "'" ||
         t == "»" || t == "”";
}

struct Piece {
  std::size_t begin;
  std::size_t end;
  bool abbreviation = false;
};

class ChunkScanner {
 public:
  ChunkScanner(std::string_view text, std::size_t begin, std::size_t end,
               const std::vector<std::string>& abbreviations)
      : text_(text), begin_(begin), end_(end), abbreviations_(abbreviations) {}

  std::vector<Piece> scan() {
    std::vector<Piece> pieces;
    std::size_t pos = begin_;
    while (pos < end_) {
      if (std::size_t len = abbreviation_at(pos)) {
        pieces.push_back({pos, pos + len, true});
        pos += len;
        continue;
      }
      std::size_t next = pos;
      const char32_t cp = text::next_code_point(text_, next);
      if (cp == U'\'') {
        if (std::size_t len = clitic_at(pos)) {
          pieces.push_back({pos, pos + len});
          pos += len;
        } else {
          pieces.push_back({pos, next});
          pos = next;
        }
      } else if (is_word_char(cp)) {
        const std::size_t word_end = scan_word(pos);
        pieces.push_back({pos, word_end});
        pos = word_end;
      } else {
        pieces.push_back({pos, next});
        pos = next;
      }
    }
    return pieces;
  }

 private:
  char32_t at(std::size_t pos) const {
    if (pos >= end_) return 0;
    return text::next_code_point(text_, pos);
  }

  char32_t before(std::size_t pos) const {
    if (pos <= begin_) return 0;
    std::size_t p = pos - 1;
    while (p > begin_ && (static_cast<unsigned char>(text_[p]) & 0xC0) == 0x80) --p;
    return text::next_code_point(text_, p);
  }

  std::size_t advance(std::size_t pos) const {
    text::next_code_point(text_, pos);
    return pos;
  }

  std::size_t letter_run_end(std::size_t pos) const {
    while (pos < end_ && text::is_letter(at(pos))) pos = advance(pos);
    return pos;
  }

  // Length of a clitic starting with the apostrophe at `pos`, or 0.
  std::size_t clitic_at(std::size_t pos) const {
    const std::size_t body = pos + 1;
    const std::size_t run_end = letter_run_end(body);
    if (run_end == body) return 0;
    if (run_end < end_ && is_word_char(at(run_end))) return 0;
    const std::string folded =
        text::fold_case(text_.substr(body, run_end - body));
    for (const std::string& c : Segmenter::clitics()) {
      if (std::string_view(c).substr(1) == folded) return run_end - pos;
    }
    return 0;
  }

  std::size_t abbreviation_at(std::size_t pos) const {
    if (abbreviations_.empty() || is_word_char(before(pos))) return 0;
    std::size_t best = 0;
    for (const std::string& abbr : abbreviations_) {
      if (abbr.size() <= best || pos + abbr.size() > end_) continue;
      // Abbreviations are ASCII-initial in practice; compare case-folded.
      const std::string candidate =
          text::fold_case(text_.substr(pos, abbr.size()));
      if (candidate != abbr) continue;
      const std::size_t after = pos + abbr.size();
      if (after < end_ && is_word_char(at(after))) continue;
      best = abbr.size();
    }
    return best;
  }

  std::size_t scan_word(std::size_t pos) const {
    pos = advance(pos);
    while (pos < end_) {
      const char32_t cp = at(pos);
      if (is_word_char(cp)) {
        pos = advance(pos);
        continue;
      }
      const std::size_t next = advance(pos);
      const char32_t prev = before(pos);
      const char32_t following = at(next);
      if (cp == U'-' && is_word_char(following)) {
        pos = next;
      } else if ((cp == U'.' || cp == U',') && text::is_digit(prev) &&
                 text::is_digit(following)) {
        pos = next;
      } else if (cp == U'\'' && text::is_letter(following) &&
                 clitic_at(pos) == 0) {
        pos = next;
      } else {
        break;
      }
    }
    return pos;
  }

  std::string_view text_;
  std::size_t begin_;
  std::size_t end_;
  const std::vector<std::string>& abbreviations_;
};

}  // namespace

std::string normalize_text(std::string_view input) {
  const std::string normalized = text::nfc(input);
  std::string out;
  out.reserve(normalized.size());
  std::size_t pos = 0;
  while (pos < normalized.size()) {
    const std::size_t start = pos;
    const char32_t cp = text::next_code_point(normalized, pos);
    if (cp == U'’') {
      out.push_back('\'');
    } else {
      out.append(normalized, start, pos - start);
    }
  }
  return out;
}

bool is_word(std::string_view token_text) {
  return text::starts_with_letter(token_text);
}

UnitCounts count_units(std::span<const Token> tokens) {
  UnitCounts counts;
  counts.tokens = tokens.size();
  counts.words = static_cast<std::size_t>(std::count_if(
      tokens.begin(), tokens.end(),
      [](const Token& t) { return is_word(t.text); }));
  return counts;
}

Segmenter::Segmenter(std::vector<std::string> abbreviations) {
  for (const std::string& a : abbreviations) {
    std::string_view trimmed = text::trim(a);
    if (!trimmed.empty()) abbreviations_.push_back(text::fold_case(trimmed));
  }
}

Segmenter Segmenter::load(const std::string& path) {
  std::vector<std::string> abbreviations;
  for (const std::string& line : text::read_lines(path)) {
    std::string_view trimmed = text::trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    abbreviations.emplace_back(trimmed);
  }
  return Segmenter(std::move(abbreviations));
}

const std::vector<std::string>& Segmenter::clitics() {
  static const std::vector<std::string> kClitics = {"'n", "'r", "'m", "'i",
                                                    "'u", "'w", "'th", "'ch"};
  return kClitics;
}

std::vector<Sentence> Segmenter::tokenize(std::string_view input) const {
  const std::string norm = normalize_text(input);
  std::vector<Sentence> sentences;
  Sentence current;

  auto flush = [&] {
    if (current.empty()) return;
    const int index = static_cast<int>(sentences.size()) + 1;
    for (Token& t : current) t.sentence = index;
    sentences.push_back(std::move(current));
    current.clear();
  };

  std::size_t pos = 0;
  while (pos < norm.size()) {
    std::size_t next = pos;
    if (text::is_space(text::next_code_point(norm, next))) {
      pos = next;
      continue;
    }
    std::size_t chunk_end = next;
    while (chunk_end < norm.size()) {
      std::size_t probe = chunk_end;
      if (text::is_space(text::next_code_point(norm, probe))) break;
      chunk_end = probe;
    }

    const auto pieces = ChunkScanner(norm, pos, chunk_end, abbreviations_).scan();
    for (const Piece& p : pieces) {
      Token t;
      t.text = norm.substr(p.begin, p.end - p.begin);
      t.position = static_cast<int>(current.size()) + 1;
      t.span = {p.begin, p.end};
      current.push_back(std::move(t));
    }

    // Terminal punctuation, optionally followed by closers, at chunk end.
    bool ends_sentence = false;
    for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
      const std::string_view piece(norm.data() + it->begin, it->end - it->begin);
      if (!it->abbreviation && is_terminal(piece)) {
        ends_sentence = true;
        break;
      }
      if (!is_closer(piece)) break;
    }
    if (ends_sentence) flush();
    pos = chunk_end;
  }
  flush();
  return sentences;
}

}  // namespace corpws
