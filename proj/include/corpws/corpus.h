#ifndef CORPWS_CORPUS_H_
#define CORPWS_CORPUS_H_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "corpws/cg.h"
#include "corpws/lexicon.h"
#include "corpws/semtag.h"

namespace corpws {

enum class LanguageType { kSpoken, kWritten, kElanguage };

std::string_view to_string(LanguageType type);
std::optional<LanguageType> parse_language_type(std::string_view s);
// Genre vocabulary allowed for each language type.
const std::vector<std::string>& genres_for(LanguageType type);

struct DocMeta {
  std::string id;
  LanguageType language_type = LanguageType::kWritten;
  std::string genre;
  bool sensitive = false;
  std::optional<std::string> region;
  std::optional<std::string> source;

  // Throws MetadataError when the genre is outside its type's vocabulary or a
  // field is not representable in the vertical format.
  void validate() const;
  // Value of a metadata key as text ("true"/"false" for sensitive), nullopt
  // for unknown keys or absent optional fields.
  std::optional<std::string> value(std::string_view key) const;

  bool operator==(const DocMeta&) const = default;
};

const std::vector<std::string>& metadata_keys();

struct AnnotatedToken {
  std::string text;
  int sentence = 0;
  int position = 0;
  Analysis analysis;
  std::string sem;

  bool operator==(const AnnotatedToken&) const = default;
};

struct Document {
  DocMeta meta;
  std::vector<std::vector<AnnotatedToken>> sentences;

  std::size_t token_count() const;
  bool operator==(const Document&) const = default;
};

// Vertical format: "# key: value" header lines, then one line per token
//   index<TAB>token<TAB>sent,pos<TAB>lemma<TAB>basic<TAB>rich<TAB>mut<TAB>sem
// with a blank line between sentences.
std::string write_vertical(const Document& doc);
Document read_vertical(std::string_view contents);

// Conjunction of key=value metadata equalities.
using MetaFilter = std::vector<std::pair<std::string, std::string>>;
// "genre=blog,sensitive=false"; empty string gives an empty filter.
MetaFilter parse_filter(std::string_view spec);
bool matches(const DocMeta& meta, const MetaFilter& filter);
std::vector<Document> select(std::span<const Document> corpus, const MetaFilter& filter);

struct StatsRow {
  std::string group;
  std::size_t texts = 0;
  std::size_t tokens = 0;
  std::size_t words = 0;

  bool operator==(const StatsRow&) const = default;
};

struct StatsTable {
  std::vector<StatsRow> rows;  // sorted by group; empty when ungrouped
  StatsRow total{"total"};
};

// Throws InvalidArgument for an unknown group key.
StatsTable stats(std::span<const Document> corpus,
                 const std::optional<std::string>& group_by = std::nullopt);

// Persistence behind an interface so other backends can be added.
class DocumentStore {
 public:
  virtual ~DocumentStore() = default;
  virtual std::vector<Document> load_all() const = 0;
  virtual void put(const Document& doc) = 0;
};

// A directory of vertical files plus a manifest ("id<TAB>relative/path" per
// line) named manifest.tsv.
class DirectoryStore : public DocumentStore {
 public:
  explicit DirectoryStore(std::string dir);
  std::vector<Document> load_all() const override;
  void put(const Document& doc) override;

  std::string manifest_path() const { return dir_ + "/manifest.tsv"; }

 private:
  std::string dir_;
};

// Loads every document listed in a manifest; paths are relative to it.
std::vector<Document> load_manifest(const std::string& manifest_path);

// Tagging plus semantic tagging of raw text into Documents.
class Pipeline {
 public:
  Pipeline(std::shared_ptr<const Tagger> tagger, std::shared_ptr<const SemTagger> sem);
  static Pipeline load(const std::string& data_dir);

  Document ingest(std::string_view text, const DocMeta& meta) const;

  const Tagger& tagger() const { return *tagger_; }
  const SemTagger& sem_tagger() const { return *sem_; }

 private:
  std::shared_ptr<const Tagger> tagger_;
  std::shared_ptr<const SemTagger> sem_;
};

// Raw source text with a "# key: value" metadata header, as used for the
// bundled corpus sources.
std::pair<DocMeta, std::string> parse_source_text(std::string_view contents);

}  // namespace corpws

#endif  // CORPWS_CORPUS_H_
