#include "corpws/api_json.h"

namespace corpws::api {

namespace {

json analysis_row(std::size_t id, const Token& t, const Analysis& a) {
  return {{"id", id},
          {"token", t.text},
          {"position", std::to_string(t.sentence) + "," + std::to_string(t.position)},
          {"lemma", a.lemma},
          {"basic", std::string(to_string(a.basic))},
          {"rich", a.rich},
          {"mutation", std::string(to_string(a.mutation))}};
}

}  // namespace

json tag_rows(const std::vector<std::vector<TaggedToken>>& sentences) {
  json rows = json::array();
  std::size_t id = 0;
  for (const auto& s : sentences) {
    for (const TaggedToken& t : s) rows.push_back(analysis_row(++id, t.token, t.resolved.value()));
  }
  return rows;
}

json sem_rows(const std::vector<std::vector<SemTaggedToken>>& sentences) {
  json rows = json::array();
  std::size_t id = 0;
  for (const auto& s : sentences) {
    for (const SemTaggedToken& t : s) {
      json row = analysis_row(++id, t.token.token, t.token.resolved.value());
      row["sem"] = t.field;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

json stats_json(const StatsTable& table) {
  const auto row = [](const StatsRow& r) {
    return json{{"group", r.group}, {"texts", r.texts}, {"tokens", r.tokens}, {"words", r.words}};
  };
  json rows = json::array();
  for (const StatsRow& r : table.rows) rows.push_back(row(r));
  return {{"rows", rows}, {"total", row(table.total)}};
}

json kwic_json(const std::vector<KwicLine>& lines) {
  json out = json::array();
  for (const KwicLine& l : lines) {
    out.push_back({{"doc", l.doc_id},
                   {"sentence", l.sentence},
                   {"position", l.position},
                   {"left", l.left},
                   {"node", l.node},
                   {"right", l.right}});
  }
  return out;
}

json freq_json(const std::vector<FreqRow>& rows) {
  json out = json::array();
  for (const FreqRow& r : rows) {
    out.push_back({{"rank", r.rank}, {"value", r.value}, {"count", r.count}});
  }
  return out;
}

json colloc_json(const std::vector<CollocationRow>& rows) {
  json out = json::array();
  for (const CollocationRow& r : rows) {
    out.push_back({{"collocate", r.collocate},
                   {"observed", r.observed},
                   {"expected", r.expected},
                   {"score", r.score}});
  }
  return out;
}

json ngram_json(const std::vector<NgramRow>& rows) {
  json out = json::array();
  for (const NgramRow& r : rows) out.push_back({{"gram", r.gram}, {"count", r.count}});
  return out;
}

json keyword_json(const std::vector<KeywordRow>& rows) {
  json out = json::array();
  for (const KeywordRow& r : rows) {
    out.push_back({{"word", r.word},
                   {"target_count", r.target_count},
                   {"reference_count", r.reference_count},
                   {"ll", r.ll},
                   {"direction", std::string(to_string(r.direction))}});
  }
  return out;
}

json profile_json(const Profile& p) {
  json bands = json::array();
  for (const BandShare& b : p.bands) {
    bands.push_back({{"band", std::string(to_string(b.band))},
                     {"count", b.count},
                     {"percent", b.percent}});
  }
  json words = json::array();
  for (const ProfileWord& w : p.words) {
    words.push_back({{"word", w.word},
                     {"band", std::string(to_string(w.band))},
                     {"ranked", w.ranked},
                     {"highlighted", w.highlighted}});
  }
  return {{"total", p.total}, {"bands", bands}, {"words", words}};
}

json lines_json(const std::vector<BlankedLine>& lines) {
  json out = json::array();
  for (const BlankedLine& l : lines) {
    json tokens = json::array();
    for (const auto& t : l.tokens) tokens.push_back(t ? json(*t) : json(nullptr));
    out.push_back({{"doc", l.doc_id}, {"sentence", l.sentence}, {"tokens", tokens}});
  }
  return out;
}

json cloze_json(const ClozeTask& task, bool include_answers) {
  json display = json::array();
  for (const ClozeItem& item : task.display) {
    display.push_back(item.gap ? json{{"gap", *item.gap}} : json{{"word", item.text}});
  }
  json out = {{"task_id", task.task_id},
              {"display", display},
              {"gaps", task.answers.size()},
              {"bank", task.bank},
              {"params",
               {{"genre", task.params.genre},
                {"gap_frequency", task.params.gap_frequency},
                {"text_length", task.params.text_length},
                {"seed", task.params.seed}}},
              {"source",
               {{"doc", task.doc_id},
                {"sentence", task.sentence},
                {"position", task.position}}}};
  if (include_answers) out["answers"] = task.answers;
  return out;
}

json identify_json(const IdentifyTask& task, bool include_answers) {
  json out = {{"task_id", task.task_id},
              {"lines", lines_json(task.lines)},
              {"params",
               {{"band", std::string(to_string(task.params.band))},
                {"word_type", std::string(to_string(task.params.word_type))},
                {"max_sentences", task.params.max_sentences},
                {"seed", task.params.seed}}}};
  if (include_answers) out["answer"] = task.answer;
  return out;
}

json word_task_json(const WordTask& task) {
  return {{"task_id", task.task_id},
          {"lines", lines_json(task.lines)},
          {"reveal", task.reveal},
          {"params",
           {{"word", task.params.word},
            {"pos", task.params.pos ? json(std::string(to_string(*task.params.pos)))
                                    : json(nullptr)},
            {"max_lines", task.params.max_lines},
            {"seed", task.params.seed}}}};
}

json eval_json(const EvalReport& report) {
  json confusion = json::array();
  for (const ConfusionRow& c : report.confusion) {
    confusion.push_back({{"gold_rich", c.gold_rich},
                         {"system_rich", c.system_rich},
                         {"count", c.count}});
  }
  return {{"tokens_compared", report.tokens_compared},
          {"rich_accuracy", report.rich_accuracy},
          {"basic_accuracy", report.basic_accuracy},
          {"lemma_accuracy", report.lemma_accuracy},
          {"confusion", confusion}};
}

}  // namespace corpws::api
