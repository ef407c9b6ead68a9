#ifndef CORPWS_API_JSON_H_
#define CORPWS_API_JSON_H_

#include <vector>

#include "corpws/cg.h"
#include "corpws/corpus.h"
#include "corpws/eval.h"
#include "corpws/query.h"
#include "corpws/semtag.h"
#include "corpws/tiwtiadur.h"
#include "json.hpp"

// JSON shapes shared by the HTTP service and the command line tool.
namespace corpws::api {

using nlohmann::json;

json tag_rows(const std::vector<std::vector<TaggedToken>>& sentences);
json sem_rows(const std::vector<std::vector<SemTaggedToken>>& sentences);
json stats_json(const StatsTable& table);

json kwic_json(const std::vector<KwicLine>& lines);
json freq_json(const std::vector<FreqRow>& rows);
json colloc_json(const std::vector<CollocationRow>& rows);
json ngram_json(const std::vector<NgramRow>& rows);
json keyword_json(const std::vector<KeywordRow>& rows);

json profile_json(const Profile& p);
json lines_json(const std::vector<BlankedLine>& lines);

// Task payloads leave out the stored answers unless asked to include them.
json cloze_json(const ClozeTask& task, bool include_answers);
json identify_json(const IdentifyTask& task, bool include_answers);
json word_task_json(const WordTask& task);

json eval_json(const EvalReport& report);

}  // namespace corpws::api

#endif  // CORPWS_API_JSON_H_
