#include "corpws/service.h"

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <random>

#include "corpws/api_json.h"
#include "corpws/error.h"
#include "corpws/text.h"
#include "httplib.h"

namespace corpws {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxStoredTasks = 50000;

HttpResponse json_response(const json& body, int status = 200) {
  return {status, body.dump(), "application/json"};
}

HttpResponse error_response(int status, std::string_view kind, std::string_view message) {
  return json_response({{"error", kind}, {"message", message}}, status);
}

int status_for(const Error& e) {
  const std::string_view kind = e.kind();
  if (kind == "NoMaterial") return 422;
  if (kind == "IoError") return 500;
  return 400;
}

std::uint64_t fresh_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

std::size_t parse_count(std::string_view name, std::string_view value) {
  std::size_t used = 0;
  unsigned long long v = 0;
  const std::string s(value);
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || s.front() == '-') {
    throw InvalidArgument(std::string(name) + " must be a non-negative integer");
  }
  return static_cast<std::size_t>(v);
}

bool parse_flag(std::string_view name, std::string_view value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0" || value.empty()) return false;
  throw InvalidArgument(std::string(name) + " must be true or false");
}

// URL parameters.
class Params {
 public:
  explicit Params(const std::map<std::string, std::string>& q) : q_(q) {}

  std::optional<std::string> get(const std::string& name) const {
    auto it = q_.find(name);
    if (it == q_.end()) return std::nullopt;
    return it->second;
  }
  std::string required(const std::string& name) const {
    auto v = get(name);
    if (!v || v->empty()) throw InvalidArgument("missing parameter '" + name + "'");
    return *v;
  }
  std::size_t count(const std::string& name, std::size_t fallback) const {
    auto v = get(name);
    return v ? parse_count(name, *v) : fallback;
  }
  std::optional<std::size_t> limit() const {
    auto v = get("limit");
    if (!v || v->empty()) return std::nullopt;
    return parse_count("limit", *v);
  }
  bool flag(const std::string& name) const {
    auto v = get(name);
    return v ? parse_flag(name, *v) : false;
  }

 private:
  const std::map<std::string, std::string>& q_;
};

// JSON request bodies.
class Body {
 public:
  explicit Body(std::string_view raw) {
    try {
      j_ = raw.empty() ? json::object() : json::parse(raw);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("request body is not JSON: ") + e.what());
    }
    if (!j_.is_object()) throw ParseError("request body must be a JSON object");
  }

  bool has(const char* name) const { return j_.contains(name) && !j_[name].is_null(); }

  std::string string(const char* name) const {
    if (!has(name)) throw InvalidArgument(std::string("missing field '") + name + "'");
    if (!j_[name].is_string()) throw InvalidArgument(std::string(name) + " must be a string");
    return j_[name].get<std::string>();
  }
  std::optional<std::string> optional_string(const char* name) const {
    if (!has(name)) return std::nullopt;
    return string(name);
  }
  std::uint64_t number(const char* name, std::uint64_t fallback) const {
    if (!has(name)) return fallback;
    const json& v = j_[name];
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return v.get<std::uint64_t>();
    if (v.is_string()) return parse_count(name, v.get<std::string>());
    throw InvalidArgument(std::string(name) + " must be a non-negative integer");
  }
  bool flag(const char* name) const {
    if (!has(name)) return false;
    if (j_[name].is_boolean()) return j_[name].get<bool>();
    if (j_[name].is_string()) return parse_flag(name, j_[name].get<std::string>());
    throw InvalidArgument(std::string(name) + " must be a boolean");
  }
  std::vector<std::string> strings(const char* name) const {
    if (!has(name) || !j_[name].is_array()) {
      throw InvalidArgument(std::string(name) + " must be an array of strings");
    }
    std::vector<std::string> out;
    for (const json& v : j_[name]) {
      if (!v.is_string()) throw InvalidArgument(std::string(name) + " must hold strings");
      out.push_back(v.get<std::string>());
    }
    return out;
  }

 private:
  json j_;
};

BasicCat parse_word_type(const std::string& code) {
  auto cat = parse_basic_cat(code);
  if (!cat) throw InvalidArgument("unknown word type '" + code + "'");
  return *cat;
}

}  // namespace

ServiceConfig ServiceConfig::with_env() const {
  ServiceConfig out = *this;
  if (const char* host = std::getenv("CORPWS_HOST"); host && *host) out.host = host;
  if (const char* port = std::getenv("CORPWS_PORT"); port && *port) {
    const std::size_t p = parse_count("CORPWS_PORT", port);
    if (p > 65535) throw InvalidArgument("CORPWS_PORT out of range");
    out.port = static_cast<int>(p);
  }
  return out;
}

void ServiceConfig::validate() const {
  namespace fs = std::filesystem;
  const auto need = [](const std::string& path, const char* what) {
    std::error_code ec;
    if (path.empty() || !fs::exists(path, ec)) {
      throw IoError(std::string(what) + " not found: " + path);
    }
  };
  need(data_dir, "data directory");
  need(data_dir + "/sem", "semantic lexicon directory");
  need(manifest, "corpus manifest");
  if (!static_dir.empty()) need(static_dir, "static directory");
}

Service::Service(ServiceConfig config)
    : config_(std::move(config)),
      pipeline_((config_.validate(), Pipeline::load(config_.data_dir))) {
  reload();
}

Service::~Service() = default;

void Service::reload() {
  auto docs = load_manifest(config_.manifest);
  std::vector<Document> open;
  for (const Document& d : docs) {
    if (!d.meta.sensitive) open.push_back(d);
  }
  auto next = std::make_shared<State>();
  next->all = std::make_shared<const CorpusSnapshot>(std::move(docs));
  next->open = std::make_shared<const CorpusSnapshot>(std::move(open));
  next->bands = build_bands(*next->all);
  std::lock_guard lock(state_mutex_);
  state_ = std::move(next);
}

std::shared_ptr<const Service::State> Service::state() const {
  std::lock_guard lock(state_mutex_);
  return state_;
}

void Service::remember(const std::string& task_id, StoredTask task) const {
  std::lock_guard lock(task_mutex_);
  if (tasks_.size() >= kMaxStoredTasks && !tasks_.contains(task_id)) tasks_.clear();
  tasks_.insert_or_assign(task_id, std::move(task));
}

std::optional<Service::StoredTask> Service::recall(const std::string& task_id) const {
  std::lock_guard lock(task_mutex_);
  auto it = tasks_.find(task_id);
  if (it == tasks_.end()) return std::nullopt;
  return it->second;
}

HttpResponse Service::handle(std::string_view method, std::string_view path,
                             const std::map<std::string, std::string>& query,
                             std::string_view body) const {
  try {
    return route(method, path, query, body);
  } catch (const Error& e) {
    return error_response(status_for(e), e.kind(), e.what());
  } catch (const json::exception& e) {
    return error_response(400, "ParseError", e.what());
  } catch (const std::exception& e) {
    return error_response(500, "InternalError", e.what());
  }
}

HttpResponse Service::route(std::string_view method, std::string_view path,
                            const std::map<std::string, std::string>& query,
                            std::string_view raw_body) const {
  using Handler = std::function<HttpResponse()>;
  const Params q(query);
  const auto st = state();
  const auto snapshot_for_query = [&]() -> const CorpusSnapshot& {
    return q.flag("include_sensitive") ? *st->all : *st->open;
  };

  const std::map<std::string, Handler, std::less<>> gets = {
      {"/api/corpus/stats",
       [&] {
         const auto group = q.get("group_by");
         const StatsTable table = stats(st->all->documents(),
                                        group && !group->empty() ? group : std::nullopt);
         json out = api::stats_json(table);
         out["documents"] = st->all->documents().size();
         return json_response(out);
       }},
      {"/api/tag",
       [&] {
         const std::string input = q.required("text");
         const auto tagged = pipeline_.tagger().tag(input);
         json out = {{"rows", api::tag_rows(tagged)}, {"table", format_tag_table(tagged)}};
         if (q.flag("sem")) {
           std::vector<std::vector<SemTaggedToken>> sem;
           for (const auto& s : tagged) sem.push_back(pipeline_.sem_tagger().sem_tag(s));
           out["rows"] = api::sem_rows(sem);
         }
         return json_response(out);
       }},
      {"/api/query/concordance",
       [&] {
         const QueryExpr expr = parse_query(q.required("query"));
         const auto lines = concordance(snapshot_for_query(), expr, q.count("context_words", 5),
                                        q.limit(), parse_filter(q.get("filter").value_or("")));
         return json_response({{"hits", lines.size()}, {"lines", api::kwic_json(lines)}});
       }},
      {"/api/query/frequency",
       [&] {
         const auto unit = parse_attribute(q.get("unit").value_or("token_lower"));
         if (!unit) throw InvalidArgument("unit must be token_lower or lemma");
         return json_response(
             {{"rows", api::freq_json(frequency_list(snapshot_for_query(), *unit, q.limit()))}});
       }},
      {"/api/query/collocations",
       [&] {
         const auto attr = parse_attribute(q.get("attribute").value_or("lemma"));
         if (!attr) throw InvalidArgument("attribute must be token_lower or lemma");
         const std::string stat = q.get("stat").value_or("LL");
         if (stat != "MI" && stat != "LL") throw InvalidArgument("stat must be MI or LL");
         auto rows = collocations(snapshot_for_query(), NodeTest{*attr, q.required("node")},
                                  q.count("span", 3),
                                  stat == "MI" ? CollocationStat::kMI : CollocationStat::kLL,
                                  q.count("min_count", 1));
         if (auto limit = q.limit(); limit && rows.size() > *limit) rows.resize(*limit);
         return json_response({{"rows", api::colloc_json(rows)}});
       }},
      {"/api/query/ngrams",
       [&] {
         return json_response(
             {{"rows", api::ngram_json(ngrams(snapshot_for_query(), q.count("n", 2), q.limit()))}});
       }},
      {"/api/query/keywords",
       [&] {
         std::optional<MetaFilter> reference;
         if (auto r = q.get("reference"); r && !r->empty()) reference = parse_filter(*r);
         auto rows = keywords(snapshot_for_query(), parse_filter(q.required("target")), reference);
         if (auto limit = q.limit(); limit && rows.size() > *limit) rows.resize(*limit);
         return json_response({{"rows", api::keyword_json(rows)}});
       }},
  };

  const std::map<std::string, Handler, std::less<>> posts = {
      {"/api/tiwtiadur/cloze",
       [&] {
         const Body b(raw_body);
         ClozeParams p;
         p.genre = b.string("genre");
         p.gap_frequency = b.number("gap_frequency", p.gap_frequency);
         p.text_length = b.number("text_length", p.text_length);
         p.seed = b.has("seed") ? b.number("seed", 0) : fresh_seed();
         const ClozeTask task = cloze_create(*st->all, p);
         remember(task.task_id, {"cloze", task.answers});
         return json_response(api::cloze_json(task, false));
       }},
      {"/api/tiwtiadur/cloze/check",
       [&] {
         const Body b(raw_body);
         const auto stored = recall(b.string("task_id"));
         if (!stored || stored->kind != "cloze") {
           return error_response(404, "UnknownTask", "no gap-fill task with that id");
         }
         const auto results = check_answers(stored->answers, b.strings("fills"));
         return json_response(
             {{"results", results},
              {"correct", std::count(results.begin(), results.end(), true)}});
       }},
      {"/api/tiwtiadur/identify",
       [&] {
         const Body b(raw_body);
         IdentifyParams p;
         const std::string band = b.string("band");
         const auto parsed = parse_band(band);
         if (!parsed) throw InvalidArgument("unknown band '" + band + "'");
         p.band = *parsed;
         p.word_type = parse_word_type(b.string("word_type"));
         p.max_sentences = b.number("max_sentences", p.max_sentences);
         p.seed = b.has("seed") ? b.number("seed", 0) : fresh_seed();
         const IdentifyTask task = identify_task(*st->all, st->bands, p);
         remember(task.task_id, {"identify", {task.answer}});
         return json_response(api::identify_json(task, false));
       }},
      {"/api/tiwtiadur/identify/check",
       [&] {
         const Body b(raw_body);
         const auto stored = recall(b.string("task_id"));
         if (!stored || stored->kind != "identify") {
           return error_response(404, "UnknownTask", "no identification task with that id");
         }
         const auto results = check_answers(stored->answers, {b.string("answer")});
         return json_response({{"correct", static_cast<bool>(results.front())}});
       }},
      {"/api/tiwtiadur/wordtask",
       [&] {
         const Body b(raw_body);
         WordTaskParams p;
         p.word = b.string("word");
         if (auto pos = b.optional_string("pos"); pos && !pos->empty()) {
           p.pos = parse_word_type(*pos);
         }
         p.max_lines = b.number("max_lines", p.max_lines);
         p.seed = b.has("seed") ? b.number("seed", 0) : fresh_seed();
         return json_response(api::word_task_json(word_task(*st->all, p)));
       }},
      {"/api/tiwtiadur/profile",
       [&] {
         const Body b(raw_body);
         const Profile p = profile(b.optional_string("text").value_or(""),
                                   pipeline_.tagger().segmenter(), st->bands,
                                   b.flag("highlight_non_level"));
         return json_response(api::profile_json(p));
       }},
  };

  const auto& table = method == "POST" ? posts : gets;
  if (method == "GET" || method == "POST") {
    if (auto it = table.find(path); it != table.end()) return it->second();
  }
  const auto& other = method == "POST" ? gets : posts;
  if (other.find(path) != other.end()) {
    return error_response(405, "MethodNotAllowed",
                          std::string(method) + " is not allowed on " + std::string(path));
  }
  return error_response(404, "NotFound", "no route for " + std::string(path));
}

void Service::install_routes() {
  server_ = std::make_unique<httplib::Server>();
  if (!config_.static_dir.empty()) server_->set_mount_point("/", config_.static_dir);
  const auto dispatch = [this](const httplib::Request& req, httplib::Response& res) {
    std::map<std::string, std::string> query;
    for (const auto& [k, v] : req.params) query.emplace(k, v);
    const HttpResponse out = handle(req.method, req.path, query, req.body);
    res.status = out.status;
    res.set_content(out.body, out.content_type);
  };
  server_->Get(".*", dispatch);
  server_->Post(".*", dispatch);
  server_->Put(".*", dispatch);
  server_->Delete(".*", dispatch);
}

bool Service::listen() {
  install_routes();
  return server_->listen(config_.host, config_.port);
}

int Service::bind_any_port() {
  install_routes();
  return server_->bind_to_any_port(config_.host);
}

bool Service::listen_after_bind() { return server_ && server_->listen_after_bind(); }

void Service::stop() {
  if (server_) server_->stop();
}

}  // namespace corpws
