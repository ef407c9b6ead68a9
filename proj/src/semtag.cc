#include "corpws/semtag.h"

#include "corpws/error.h"
#include "corpws/text.h"

namespace corpws {

namespace {

bool valid_field(std::string_view f) {
  if (f.empty()) return false;
  for (char c : f) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') return false;
  }
  return true;
}

template <typename F>
void for_each_data_line(std::string_view contents, const char* what, F&& f) {
  std::size_t line_no = 0;
  for (const std::string& raw : text::split(contents, '\n')) {
    ++line_no;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (text::trim(line).empty() || line.front() == '#') continue;
    f(text::split(line, '\t'), std::string(what) + " line " + std::to_string(line_no));
  }
}

}  // namespace

std::vector<MweMatch> mwe_match(const std::vector<std::string>& lemmas,
                                const std::vector<MweEntry>& entries) {
  std::vector<std::string> folded;
  folded.reserve(lemmas.size());
  for (const auto& l : lemmas) folded.push_back(text::fold_case(l));
  std::vector<std::vector<std::string>> patterns;
  patterns.reserve(entries.size());
  for (const auto& e : entries) {
    std::vector<std::string> p;
    for (const auto& l : e.pattern) p.push_back(l == "*" ? l : text::fold_case(l));
    patterns.push_back(std::move(p));
  }

  std::vector<MweMatch> out;
  std::size_t i = 0;
  while (i < folded.size()) {
    const MweEntry* best = nullptr;
    std::size_t best_len = 0;
    for (std::size_t e = 0; e < entries.size(); ++e) {
      const auto& p = patterns[e];
      if (p.size() <= best_len || i + p.size() > folded.size()) continue;
      bool ok = true;
      for (std::size_t k = 0; k < p.size() && ok; ++k) {
        ok = p[k] == "*" || p[k] == folded[i + k];
      }
      if (ok) {
        best = &entries[e];
        best_len = p.size();
      }
    }
    if (best) {
      out.push_back({i + 1, best_len, best->field});
      i += best_len;
    } else {
      ++i;
    }
  }
  return out;
}

SemTagger::SemTagger(std::vector<SemEntry> entries, std::vector<MweEntry> mwes,
                     std::vector<InflectionRow> inflections)
    : entries_(std::move(entries)),
      mwes_(std::move(mwes)),
      inflections_(std::move(inflections)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const SemEntry& e = entries_[i];
    if (e.lemma.empty() || e.fields.empty()) {
      throw ParseError("semantic entry needs a lemma and at least one field");
    }
    for (const auto& f : e.fields) {
      if (!valid_field(f)) throw ParseError("invalid semantic field '" + f + "'");
    }
    by_lemma_[e.lemma].push_back(i);
    by_folded_lemma_[text::fold_case(e.lemma)].push_back(i);
  }
  for (const MweEntry& m : mwes_) {
    if (m.pattern.size() < 2) {
      throw ParseError("multiword pattern needs at least two lemmas");
    }
    if (!valid_field(m.field)) throw ParseError("invalid semantic field '" + m.field + "'");
  }
  for (const InflectionRow& row : inflections_) {
    if (row.surface.empty() || row.lemma.empty()) {
      throw ParseError("inflection row with empty surface or lemma");
    }
    inflection_lemma_.emplace(text::fold_case(row.surface), row.lemma);
  }
}

SemTagger SemTagger::load(const std::string& lexicon_path,
                          const std::string& mwe_path,
                          const std::string& inflection_path) {
  std::vector<SemEntry> entries;
  for_each_data_line(text::read_file(lexicon_path), "semantic lexicon",
                     [&](const auto& cols, const std::string& where) {
    if (cols.size() != 3) throw ParseError(where + ": expected 3 columns");
    SemEntry e;
    e.lemma = text::nfc(cols[0]);
    if (cols[1] != "-") {
      e.basic = parse_basic_cat(cols[1]);
      if (!e.basic) throw ParseError(where + ": unknown basic category '" + cols[1] + "'");
    }
    for (const auto& f : text::split(cols[2], ',')) {
      if (!valid_field(f)) throw ParseError(where + ": invalid field '" + f + "'");
      e.fields.push_back(f);
    }
    entries.push_back(std::move(e));
  });

  std::vector<MweEntry> mwes;
  for_each_data_line(text::read_file(mwe_path), "multiword lexicon",
                     [&](const auto& cols, const std::string& where) {
    if (cols.size() != 2) throw ParseError(where + ": expected 2 columns");
    MweEntry m;
    for (const auto& l : text::split(text::trim(cols[0]), ' ')) {
      if (!l.empty()) m.pattern.push_back(text::nfc(l));
    }
    if (m.pattern.size() < 2) throw ParseError(where + ": pattern needs two or more lemmas");
    m.field = cols[1];
    mwes.push_back(std::move(m));
  });

  std::vector<InflectionRow> rows;
  for_each_data_line(text::read_file(inflection_path), "inflection table",
                     [&](const auto& cols, const std::string& where) {
    if (cols.size() != 2 || cols[0].empty() || cols[1].empty()) {
      throw ParseError(where + ": expected surface and lemma");
    }
    rows.push_back({text::nfc(cols[0]), text::nfc(cols[1])});
  });

  return SemTagger(std::move(entries), std::move(mwes), std::move(rows));
}

SemTagger SemTagger::load_dir(const std::string& sem_dir) {
  return load(sem_dir + "/lexicon.tsv", sem_dir + "/mwe.tsv",
              sem_dir + "/inflections.tsv");
}

SemTagger SemTagger::without_mwes() const {
  return SemTagger(entries_, {}, inflections_);
}

const SemEntry* SemTagger::find(std::string_view lemma, BasicCat basic) const {
  const auto search = [&](const auto& index, const std::string& key) -> const SemEntry* {
    auto it = index.find(key);
    if (it == index.end()) return nullptr;
    for (std::size_t i : it->second) {
      if (entries_[i].basic == basic) return &entries_[i];
    }
    for (std::size_t i : it->second) {
      if (!entries_[i].basic) return &entries_[i];
    }
    return &entries_[it->second.front()];
  };
  if (const SemEntry* e = search(by_lemma_, std::string(lemma))) return e;
  return search(by_folded_lemma_, text::fold_case(lemma));
}

std::string SemTagger::word_field(std::string_view surface, std::string_view lemma,
                                  BasicCat basic) const {
  if (const SemEntry* e = find(lemma, basic)) return e->fields.front();
  auto it = inflection_lemma_.find(text::fold_case(surface));
  if (it != inflection_lemma_.end()) {
    if (const SemEntry* e = find(it->second, basic)) return e->fields.front();
  }
  return std::string(kUnmatchedField);
}

std::vector<SemTaggedToken> SemTagger::sem_tag(
    const std::vector<TaggedToken>& sentence) const {
  std::vector<std::string> lemmas;
  lemmas.reserve(sentence.size());
  for (const TaggedToken& t : sentence) {
    lemmas.push_back(t.resolved ? t.resolved->lemma : t.token.text);
  }
  std::vector<std::string> fields(sentence.size());
  for (const MweMatch& m : mwe_match(lemmas, mwes_)) {
    for (std::size_t k = 0; k < m.length; ++k) fields[m.start - 1 + k] = m.field;
  }
  std::vector<SemTaggedToken> out;
  out.reserve(sentence.size());
  for (std::size_t i = 0; i < sentence.size(); ++i) {
    const TaggedToken& t = sentence[i];
    if (fields[i].empty()) {
      const Analysis& a = t.resolved ? *t.resolved : t.candidates.front();
      fields[i] = word_field(t.token.text, a.lemma, a.basic);
    }
    out.push_back({t, std::move(fields[i])});
  }
  return out;
}

}  // namespace corpws
