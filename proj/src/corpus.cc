#include "corpws/corpus.h"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <map>

#include "corpws/error.h"
#include "corpws/text.h"

namespace corpws {

namespace {

bool has_line_break(std::string_view s) {
  return s.find('\n') != std::string_view::npos || s.find('\r') != std::string_view::npos;
}

int parse_int(std::string_view s, const std::string& where) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(where + ": expected an integer, found '" + std::string(s) + "'");
  }
  return value;
}

// Shared by vertical files and raw source headers.
void set_meta_field(DocMeta& meta, std::string_view key, std::string value,
                    const std::string& where) {
  if (key == "id") {
    meta.id = std::move(value);
  } else if (key == "language_type") {
    auto type = parse_language_type(value);
    if (!type) throw MetadataError(where + ": unknown language_type '" + value + "'");
    meta.language_type = *type;
  } else if (key == "genre") {
    meta.genre = std::move(value);
  } else if (key == "sensitive") {
    if (value != "true" && value != "false") {
      throw MetadataError(where + ": sensitive must be true or false");
    }
    meta.sensitive = value == "true";
  } else if (key == "region") {
    meta.region = std::move(value);
  } else if (key == "source") {
    meta.source = std::move(value);
  } else {
    throw ParseError(where + ": unknown metadata key '" + std::string(key) + "'");
  }
}

bool parse_header_line(std::string_view line, DocMeta& meta, const std::string& where) {
  if (!line.starts_with("# ")) return false;
  line.remove_prefix(2);
  const std::size_t colon = line.find(": ");
  if (colon == std::string_view::npos) {
    throw ParseError(where + ": malformed metadata line");
  }
  set_meta_field(meta, line.substr(0, colon), std::string(line.substr(colon + 2)), where);
  return true;
}

}  // namespace

std::string_view to_string(LanguageType type) {
  switch (type) {
    case LanguageType::kSpoken: return "spoken";
    case LanguageType::kWritten: return "written";
    case LanguageType::kElanguage: return "elanguage";
  }
  return "written";
}

std::optional<LanguageType> parse_language_type(std::string_view s) {
  if (s == "spoken") return LanguageType::kSpoken;
  if (s == "written") return LanguageType::kWritten;
  if (s == "elanguage") return LanguageType::kElanguage;
  return std::nullopt;
}

const std::vector<std::string>& genres_for(LanguageType type) {
  static const std::vector<std::string> kSpoken = {
      "broadcast", "educational", "private", "professional",
      "public_or_institutional", "social", "transactional"};
  static const std::vector<std::string> kWritten = {
      "academic_journal", "book", "essays_coursework_and_exams",
      "leaflet_document_announcement", "letter", "magazine", "miscellaneous",
      "newsletter", "papur_bro", "thesis"};
  static const std::vector<std::string> kElanguage = {"blog", "email", "SMS", "website"};
  switch (type) {
    case LanguageType::kSpoken: return kSpoken;
    case LanguageType::kWritten: return kWritten;
    case LanguageType::kElanguage: return kElanguage;
  }
  return kWritten;
}

const std::vector<std::string>& metadata_keys() {
  static const std::vector<std::string> kKeys = {"id",        "language_type", "genre",
                                                 "sensitive", "region",        "source"};
  return kKeys;
}

void DocMeta::validate() const {
  if (id.empty()) throw MetadataError("document id is empty");
  for (char c : id) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '/') {
      throw MetadataError("document id '" + id + "' contains whitespace or '/'");
    }
  }
  const auto& vocab = genres_for(language_type);
  if (std::find(vocab.begin(), vocab.end(), genre) == vocab.end()) {
    throw MetadataError("genre '" + genre + "' is not valid for language type '" +
                        std::string(to_string(language_type)) + "'");
  }
  for (const auto* field : {&region, &source}) {
    if (*field && (field->value().empty() || has_line_break(**field) ||
                   text::trim(**field) != **field)) {
      throw MetadataError("region/source must be a non-empty single line without "
                          "surrounding whitespace");
    }
  }
}

std::optional<std::string> DocMeta::value(std::string_view key) const {
  if (key == "id") return id;
  if (key == "language_type") return std::string(to_string(language_type));
  if (key == "genre") return genre;
  if (key == "sensitive") return std::string(sensitive ? "true" : "false");
  if (key == "region") return region;
  if (key == "source") return source;
  return std::nullopt;
}

std::size_t Document::token_count() const {
  std::size_t n = 0;
  for (const auto& s : sentences) n += s.size();
  return n;
}

std::string write_vertical(const Document& doc) {
  std::string out;
  for (const std::string& key : metadata_keys()) {
    if (auto v = doc.meta.value(key)) out += "# " + key + ": " + *v + "\n";
  }
  int index = 0;
  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    if (s) out += '\n';
    for (const AnnotatedToken& t : doc.sentences[s]) {
      out += std::to_string(++index);
      out += '\t' + t.text;
      out += '\t' + std::to_string(t.sentence) + "," + std::to_string(t.position);
      out += '\t' + t.analysis.lemma;
      out += '\t';
      out += to_string(t.analysis.basic);
      out += '\t' + t.analysis.rich;
      out += '\t';
      out += to_string(t.analysis.mutation);
      out += '\t' + t.sem;
      out += '\n';
    }
  }
  return out;
}

Document read_vertical(std::string_view contents) {
  Document doc;
  bool seen = false;
  bool in_header = true;
  std::vector<AnnotatedToken> sentence;
  int index = 0;
  std::size_t line_no = 0;
  std::vector<std::string> lines = text::split(contents, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();

  auto close_sentence = [&] {
    if (!sentence.empty()) doc.sentences.push_back(std::move(sentence));
    sentence.clear();
  };

  for (const std::string& line : lines) {
    ++line_no;
    const std::string where = "vertical line " + std::to_string(line_no);
    if (in_header && parse_header_line(line, doc.meta, where)) {
      seen = true;
      continue;
    }
    in_header = false;
    if (line.empty()) {
      if (sentence.empty()) throw ParseError(where + ": empty sentence");
      close_sentence();
      continue;
    }
    const auto cols = text::split(line, '\t');
    if (cols.size() != 8) throw ParseError(where + ": expected 8 columns");
    if (parse_int(cols[0], where) != ++index) {
      throw ParseError(where + ": token index out of sequence");
    }
    AnnotatedToken t;
    t.text = cols[1];
    const auto coord = text::split(cols[2], ',');
    if (coord.size() != 2) throw ParseError(where + ": position must be sent,pos");
    t.sentence = parse_int(coord[0], where);
    t.position = parse_int(coord[1], where);
    if (t.sentence != static_cast<int>(doc.sentences.size()) + 1 ||
        t.position != static_cast<int>(sentence.size()) + 1) {
      throw ParseError(where + ": position " + cols[2] + " out of sequence");
    }
    t.analysis.lemma = cols[3];
    t.analysis.basic = basic_cat_from_code(cols[4]);
    t.analysis.rich = cols[5];
    auto mut = parse_mutation(cols[6]);
    if (!mut) throw ParseError(where + ": unknown mutation '" + cols[6] + "'");
    t.analysis.mutation = *mut;
    t.sem = cols[7];
    if (t.text.empty() || t.analysis.lemma.empty() || t.analysis.rich.empty() ||
        t.sem.empty()) {
      throw ParseError(where + ": empty column");
    }
    sentence.push_back(std::move(t));
  }
  close_sentence();
  if (!seen) throw ParseError("vertical file has no metadata header");
  doc.meta.validate();
  return doc;
}

MetaFilter parse_filter(std::string_view spec) {
  MetaFilter filter;
  spec = text::trim(spec);
  if (spec.empty()) return filter;
  for (const std::string& part : text::split(spec, ',')) {
    const std::size_t eq = part.find('=');
    if (eq == std::string::npos) {
      throw InvalidArgument("filter term '" + part + "' is not key=value");
    }
    filter.emplace_back(std::string(text::trim(part.substr(0, eq))),
                        std::string(text::trim(part.substr(eq + 1))));
  }
  return filter;
}

bool matches(const DocMeta& meta, const MetaFilter& filter) {
  return std::all_of(filter.begin(), filter.end(), [&](const auto& kv) {
    auto v = meta.value(kv.first);
    return v && *v == kv.second;
  });
}

std::vector<Document> select(std::span<const Document> corpus, const MetaFilter& filter) {
  std::vector<Document> out;
  for (const Document& d : corpus) {
    if (matches(d.meta, filter)) out.push_back(d);
  }
  return out;
}

StatsTable stats(std::span<const Document> corpus,
                 const std::optional<std::string>& group_by) {
  if (group_by) {
    const auto& keys = metadata_keys();
    if (std::find(keys.begin(), keys.end(), *group_by) == keys.end()) {
      throw InvalidArgument("unknown group key '" + *group_by + "'");
    }
  }
  StatsTable table;
  std::map<std::string, StatsRow> groups;
  for (const Document& d : corpus) {
    std::size_t tokens = 0;
    std::size_t words = 0;
    for (const auto& s : d.sentences) {
      for (const AnnotatedToken& t : s) {
        ++tokens;
        if (is_word(t.text)) ++words;
      }
    }
    auto add = [&](StatsRow& row) {
      row.texts += 1;
      row.tokens += tokens;
      row.words += words;
    };
    add(table.total);
    if (group_by) {
      const std::string key = d.meta.value(*group_by).value_or("-");
      StatsRow& row = groups[key];
      row.group = key;
      add(row);
    }
  }
  for (auto& [key, row] : groups) table.rows.push_back(std::move(row));
  return table;
}

DirectoryStore::DirectoryStore(std::string dir) : dir_(std::move(dir)) {}

std::vector<Document> DirectoryStore::load_all() const {
  if (!std::filesystem::exists(manifest_path())) return {};
  return load_manifest(manifest_path());
}

void DirectoryStore::put(const Document& doc) {
  doc.meta.validate();
  std::filesystem::create_directories(dir_);
  const std::string rel = doc.meta.id + ".vrt";
  text::write_file(dir_ + "/" + rel, write_vertical(doc));

  std::vector<std::pair<std::string, std::string>> entries;
  if (std::filesystem::exists(manifest_path())) {
    for (const std::string& line : text::read_lines(manifest_path())) {
      if (text::trim(line).empty() || line.front() == '#') continue;
      auto cols = text::split(line, '\t');
      if (cols.size() == 2 && cols[0] != doc.meta.id) entries.emplace_back(cols[0], cols[1]);
    }
  }
  entries.emplace_back(doc.meta.id, rel);
  std::string manifest;
  for (const auto& [id, path] : entries) manifest += id + "\t" + path + "\n";
  text::write_file(manifest_path(), manifest);
}

std::vector<Document> load_manifest(const std::string& manifest_path) {
  const std::filesystem::path base = std::filesystem::path(manifest_path).parent_path();
  std::vector<Document> docs;
  std::size_t line_no = 0;
  for (const std::string& line : text::read_lines(manifest_path)) {
    ++line_no;
    if (text::trim(line).empty() || line.front() == '#') continue;
    const auto cols = text::split(line, '\t');
    const std::string where = manifest_path + " line " + std::to_string(line_no);
    if (cols.size() != 2) throw ParseError(where + ": expected id<TAB>path");
    Document doc;
    try {
      doc = read_vertical(text::read_file((base / cols[1]).string()));
    } catch (const ParseError& e) {
      throw ParseError(cols[1] + ": " + e.what());
    }
    if (doc.meta.id != cols[0]) {
      throw ParseError(where + ": manifest id '" + cols[0] +
                       "' does not match document id '" + doc.meta.id + "'");
    }
    for (const Document& prev : docs) {
      if (prev.meta.id == doc.meta.id) {
        throw MetadataError(where + ": duplicate document id '" + doc.meta.id + "'");
      }
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

Pipeline::Pipeline(std::shared_ptr<const Tagger> tagger,
                   std::shared_ptr<const SemTagger> sem)
    : tagger_(std::move(tagger)), sem_(std::move(sem)) {}

Pipeline Pipeline::load(const std::string& data_dir) {
  return Pipeline(std::make_shared<const Tagger>(Tagger::load(TaggerPaths::in(data_dir))),
                  std::make_shared<const SemTagger>(SemTagger::load_dir(data_dir + "/sem")));
}

Document Pipeline::ingest(std::string_view input, const DocMeta& meta) const {
  meta.validate();
  Document doc;
  doc.meta = meta;
  for (const auto& sentence : tagger_->tag(input)) {
    std::vector<AnnotatedToken> out;
    out.reserve(sentence.size());
    for (SemTaggedToken& st : sem_->sem_tag(sentence)) {
      AnnotatedToken t;
      t.text = std::move(st.token.token.text);
      t.sentence = st.token.token.sentence;
      t.position = st.token.token.position;
      t.analysis = std::move(*st.token.resolved);
      t.sem = std::move(st.field);
      out.push_back(std::move(t));
    }
    doc.sentences.push_back(std::move(out));
  }
  return doc;
}

std::pair<DocMeta, std::string> parse_source_text(std::string_view contents) {
  DocMeta meta;
  std::string body;
  bool in_header = true;
  std::size_t line_no = 0;
  for (const std::string& line : text::split(contents, '\n')) {
    ++line_no;
    if (in_header && parse_header_line(line, meta, "source line " + std::to_string(line_no))) {
      continue;
    }
    in_header = false;
    body += line;
    body += '\n';
  }
  meta.validate();
  return {std::move(meta), std::move(body)};
}

}  // namespace corpws
