// Command line front end: tagging, corpus building, queries, exercises,
// evaluation and the HTTP service.

#include <algorithm>
#include <csignal>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "corpws/api_json.h"
#include "corpws/error.h"
#include "corpws/eval.h"
#include "corpws/service.h"
#include "corpws/text.h"

namespace fs = std::filesystem;
using namespace corpws;

namespace {

struct InputOptions {
  std::string text;
  std::string file;
};

void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--text", in.text, "Text to process");
  cmd->add_option("--file", in.file, "Read text from a file ('-' for stdin)");
}

std::string read_input(const InputOptions& in) {
  if (!in.text.empty()) return in.text;
  if (in.file.empty() || in.file == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  return text::read_file(in.file);
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

CorpusSnapshot load_snapshot(const std::string& manifest, bool include_sensitive) {
  std::vector<Document> docs = load_manifest(manifest);
  if (!include_sensitive) {
    std::erase_if(docs, [](const Document& d) { return d.meta.sensitive; });
  }
  return CorpusSnapshot(std::move(docs));
}

std::string join_tokens(const std::vector<std::string>& tokens) { return text::join(tokens, " "); }

Service* g_service = nullptr;

void on_signal(int) {
  if (g_service) g_service->stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Welsh corpus workbench"};
  app.require_subcommand(1);

  std::string data_dir = CORPWS_DATA_DIR;
  std::string manifest = std::string(CORPWS_DATA_DIR) + "/corpus/manifest.tsv";
  app.add_option("--data", data_dir, "Directory with tagset, lexicon, rules and sem/")
      ->capture_default_str();

  const auto add_manifest = [&](CLI::App* cmd) {
    cmd->add_option("--manifest", manifest, "Corpus manifest")->capture_default_str();
  };

  // tag / semtag
  InputOptions tag_in;
  bool tag_json = false;
  auto* tag = app.add_subcommand("tag", "Part-of-speech tag text");
  add_input(tag, tag_in);
  tag->add_flag("--json", tag_json, "JSON rows instead of a table");

  InputOptions sem_in;
  auto* semtag = app.add_subcommand("semtag", "Part-of-speech and semantic field tagging");
  add_input(semtag, sem_in);

  // ingest
  std::string src_dir;
  std::string out_dir;
  auto* ingest = app.add_subcommand("ingest", "Tag source texts into vertical files");
  ingest->add_option("--sources", src_dir, "Directory of .txt files with metadata headers")
      ->required();
  ingest->add_option("--out", out_dir, "Output directory for .vrt files and manifest.tsv")
      ->required();

  // stats
  std::string group_by;
  InputOptions stats_in;
  auto* stats_cmd = app.add_subcommand("stats", "Text, token and word counts");
  add_manifest(stats_cmd);
  stats_cmd->add_option("--group-by", group_by, "Metadata key to group by");
  stats_cmd->add_option("--text", stats_in.text, "Count a single text instead of the corpus");

  // query
  bool include_sensitive = false;
  std::optional<std::size_t> limit;
  auto* query = app.add_subcommand("query", "Corpus queries (TSV output)");
  query->require_subcommand(1);
  add_manifest(query);
  query->add_flag("--include_sensitive", include_sensitive, "Include sensitive documents");
  query->add_option("--limit", limit, "Maximum rows");

  std::string expr_src;
  std::size_t context_words = 5;
  std::string filter_src;
  auto* q_conc = query->add_subcommand("concordance", "KWIC concordance");
  q_conc->add_option("expr", expr_src, "Query such as [lemma=\"bod\"] [basic=\"E\"]")->required();
  q_conc->add_option("--context_words", context_words)->capture_default_str();
  q_conc->add_option("--filter", filter_src, "Metadata filter key=value,...");

  std::string unit = "token_lower";
  auto* q_freq = query->add_subcommand("freq", "Frequency list");
  q_freq->add_option("--unit", unit, "token_lower or lemma")->capture_default_str();

  std::string node;
  std::string node_attr = "lemma";
  std::size_t span = 3;
  std::string stat = "LL";
  std::size_t min_count = 1;
  auto* q_coll = query->add_subcommand("colloc", "Collocations");
  q_coll->add_option("node", node)->required();
  q_coll->add_option("--attribute", node_attr, "lemma or token_lower")->capture_default_str();
  q_coll->add_option("--span", span)->capture_default_str();
  q_coll->add_option("--stat", stat, "MI or LL")->capture_default_str();
  q_coll->add_option("--min_count", min_count)->capture_default_str();

  std::size_t n = 2;
  auto* q_ngram = query->add_subcommand("ngram", "N-grams");
  q_ngram->add_option("-n,--n", n)->capture_default_str();

  std::string target_src;
  std::string reference_src;
  auto* q_kw = query->add_subcommand("keywords", "Keyword analysis");
  q_kw->add_option("--target", target_src, "Target filter key=value,...")->required();
  q_kw->add_option("--reference", reference_src, "Reference filter (default: the rest)");

  // tiwtiadur
  bool with_answers = false;
  auto* tw = app.add_subcommand("tiwtiadur", "Learning exercises (JSON output)");
  tw->require_subcommand(1);
  add_manifest(tw);
  tw->add_flag("--answers", with_answers, "Include the answers in the output");

  ClozeParams cloze_p;
  auto* tw_cloze = tw->add_subcommand("cloze", "Gap-fill task");
  tw_cloze->add_option("--genre", cloze_p.genre)->required();
  tw_cloze->add_option("--gap_frequency", cloze_p.gap_frequency)->capture_default_str();
  tw_cloze->add_option("--text_length", cloze_p.text_length)->capture_default_str();
  tw_cloze->add_option("--seed", cloze_p.seed)->capture_default_str();

  InputOptions prof_in;
  bool highlight_non_level = false;
  auto* tw_prof = tw->add_subcommand("profile", "Word frequency profile of a text");
  add_input(tw_prof, prof_in);
  tw_prof->add_flag("--highlight_non_level", highlight_non_level);

  std::string band = "K1";
  std::string word_type = "E";
  IdentifyParams ident_p;
  auto* tw_ident = tw->add_subcommand("identify", "Word identification task");
  tw_ident->add_option("--band", band, "K1, K2 or K3")->capture_default_str();
  tw_ident->add_option("--word_type", word_type, "Basic category")->capture_default_str();
  tw_ident->add_option("--max_sentences", ident_p.max_sentences)->capture_default_str();
  tw_ident->add_option("--seed", ident_p.seed)->capture_default_str();

  WordTaskParams word_p;
  std::string word_pos;
  auto* tw_word = tw->add_subcommand("wordtask", "Word task");
  tw_word->add_option("--word", word_p.word)->required();
  tw_word->add_option("--pos", word_pos, "Restrict to a basic category");
  tw_word->add_option("--max_lines", word_p.max_lines)->capture_default_str();
  tw_word->add_option("--seed", word_p.seed)->capture_default_str();

  // eval
  std::string sys_path;
  std::string gold_path;
  bool eval_json = false;
  auto* eval_cmd = app.add_subcommand("eval", "Score a tagged vertical file against gold");
  eval_cmd->add_option("system", sys_path)->required();
  eval_cmd->add_option("gold", gold_path)->required();
  eval_cmd->add_flag("--json", eval_json);

  // serve
  ServiceConfig svc;
  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  add_manifest(serve);
  serve->add_option("--host", svc.host)->capture_default_str();
  serve->add_option("--port", svc.port)->capture_default_str();
  serve->add_option("--static", svc.static_dir, "Directory of UI assets");

  // Options of `query` and `tiwtiadur` may follow the nested subcommand.
  for (CLI::App* parent : {query, tw}) {
    for (CLI::App* sub : parent->get_subcommands({})) sub->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (*tag) {
      const Tagger tagger = Tagger::load(TaggerPaths::in(data_dir));
      const auto tagged = tagger.tag(read_input(tag_in));
      if (tag_json) {
        std::cout << api::tag_rows(tagged).dump(2) << "\n";
      } else {
        std::cout << format_tag_table(tagged);
      }
    } else if (*semtag) {
      const Pipeline pipeline = Pipeline::load(data_dir);
      std::cout << "ID\tTOKEN\tPOSITION\tLEMMA\tBASIC\tRICH\tMUTATION\tSEM\n";
      int id = 0;
      for (const auto& s : pipeline.tagger().tag(read_input(sem_in))) {
        for (const SemTaggedToken& t : pipeline.sem_tagger().sem_tag(s)) {
          const Analysis& a = *t.token.resolved;
          std::cout << ++id << '\t' << t.token.token.text << '\t' << t.token.token.sentence
                    << ',' << t.token.token.position << '\t' << a.lemma << '\t'
                    << to_string(a.basic) << '\t' << a.rich << '\t' << to_string(a.mutation)
                    << '\t' << t.field << '\n';
        }
      }
    } else if (*ingest) {
      const Pipeline pipeline = Pipeline::load(data_dir);
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(src_dir)) {
        if (entry.path().extension() == ".txt") files.push_back(entry.path());
      }
      std::sort(files.begin(), files.end());
      fs::create_directories(out_dir);
      fs::remove(fs::path(out_dir) / "manifest.tsv");
      DirectoryStore store(out_dir);
      for (const fs::path& f : files) {
        const auto [meta, body] = parse_source_text(text::read_file(f.string()));
        const Document doc = pipeline.ingest(body, meta);
        store.put(doc);
        std::cout << meta.id << "\t" << doc.token_count() << " tokens\n";
      }
    } else if (*stats_cmd) {
      std::vector<Document> docs;
      if (!stats_in.text.empty()) {
        const Pipeline pipeline = Pipeline::load(data_dir);
        DocMeta meta;
        meta.id = "input";
        meta.genre = "miscellaneous";
        docs.push_back(pipeline.ingest(stats_in.text, meta));
      } else {
        docs = load_manifest(manifest);
      }
      const StatsTable table =
          stats(docs, group_by.empty() ? std::nullopt : std::optional<std::string>(group_by));
      std::cout << "GROUP\tTEXTS\tTOKENS\tWORDS\n";
      for (const StatsRow& r : table.rows) {
        std::cout << r.group << '\t' << r.texts << '\t' << r.tokens << '\t' << r.words << '\n';
      }
      const StatsRow& t = table.total;
      std::cout << t.group << '\t' << t.texts << '\t' << t.tokens << '\t' << t.words << '\n';
    } else if (*query) {
      const CorpusSnapshot snapshot = load_snapshot(manifest, include_sensitive);
      if (*q_conc) {
        for (const KwicLine& l : concordance(snapshot, parse_query(expr_src), context_words,
                                             limit, parse_filter(filter_src))) {
          std::cout << l.doc_id << '\t' << l.sentence << ',' << l.position << '\t'
                    << join_tokens(l.left) << '\t' << join_tokens(l.node) << '\t'
                    << join_tokens(l.right) << '\n';
        }
      } else if (*q_freq) {
        const auto attr = parse_attribute(unit);
        if (!attr) throw InvalidArgument("unit must be token_lower or lemma");
        std::cout << "RANK\tVALUE\tCOUNT\n";
        for (const FreqRow& r : frequency_list(snapshot, *attr, limit)) {
          std::cout << r.rank << '\t' << r.value << '\t' << r.count << '\n';
        }
      } else if (*q_coll) {
        const auto attr = parse_attribute(node_attr);
        if (!attr) throw InvalidArgument("attribute must be token_lower or lemma");
        if (stat != "MI" && stat != "LL") throw InvalidArgument("stat must be MI or LL");
        auto rows = collocations(snapshot, NodeTest{*attr, node}, span,
                                 stat == "MI" ? CollocationStat::kMI : CollocationStat::kLL,
                                 min_count);
        if (limit && rows.size() > *limit) rows.resize(*limit);
        std::cout << "COLLOCATE\tOBSERVED\tEXPECTED\t" << stat << "\n";
        for (const CollocationRow& r : rows) {
          std::cout << r.collocate << '\t' << r.observed << '\t' << fmt_double(r.expected)
                    << '\t' << fmt_double(r.score) << '\n';
        }
      } else if (*q_ngram) {
        std::cout << "GRAM\tCOUNT\n";
        for (const NgramRow& r : ngrams(snapshot, n, limit)) {
          std::cout << r.gram << '\t' << r.count << '\n';
        }
      } else if (*q_kw) {
        std::optional<MetaFilter> reference;
        if (!reference_src.empty()) reference = parse_filter(reference_src);
        auto rows = keywords(snapshot, parse_filter(target_src), reference);
        if (limit && rows.size() > *limit) rows.resize(*limit);
        std::cout << "WORD\tTARGET\tREFERENCE\tLL\tDIRECTION\n";
        for (const KeywordRow& r : rows) {
          std::cout << r.word << '\t' << r.target_count << '\t' << r.reference_count << '\t'
                    << fmt_double(r.ll) << '\t' << to_string(r.direction) << '\n';
        }
      }
    } else if (*tw) {
      const CorpusSnapshot snapshot(load_manifest(manifest));
      nlohmann::json out;
      if (*tw_cloze) {
        out = api::cloze_json(cloze_create(snapshot, cloze_p), with_answers);
      } else if (*tw_prof) {
        const Segmenter segmenter = Segmenter::load(data_dir + "/abbreviations.txt");
        out = api::profile_json(profile(read_input(prof_in), segmenter, build_bands(snapshot),
                                        highlight_non_level));
      } else if (*tw_ident) {
        const auto b = parse_band(band);
        if (!b) throw InvalidArgument("unknown band '" + band + "'");
        const auto cat = parse_basic_cat(word_type);
        if (!cat) throw InvalidArgument("unknown word type '" + word_type + "'");
        ident_p.band = *b;
        ident_p.word_type = *cat;
        out = api::identify_json(identify_task(snapshot, build_bands(snapshot), ident_p),
                                 with_answers);
      } else if (*tw_word) {
        if (!word_pos.empty()) {
          const auto cat = parse_basic_cat(word_pos);
          if (!cat) throw InvalidArgument("unknown part of speech '" + word_pos + "'");
          word_p.pos = *cat;
        }
        out = api::word_task_json(word_task(snapshot, word_p));
      }
      std::cout << out.dump(2) << "\n";
    } else if (*eval_cmd) {
      const EvalReport report = evaluate_files(sys_path, gold_path);
      if (eval_json) {
        std::cout << api::eval_json(report).dump(2) << "\n";
      } else {
        std::cout << format_report(report);
      }
    } else if (*serve) {
      // Flags given on the command line win over the environment.
      ServiceConfig base = svc;
      base.data_dir = data_dir;
      base.manifest = manifest;
      ServiceConfig cfg = base.with_env();
      if (serve->count("--host")) cfg.host = svc.host;
      if (serve->count("--port")) cfg.port = svc.port;
      Service service(cfg);
      g_service = &service;
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      std::cerr << "listening on " << cfg.host << ":" << cfg.port << "\n";
      if (!service.listen()) {
        std::cerr << "error: cannot bind " << cfg.host << ":" << cfg.port << "\n";
        return 1;
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
