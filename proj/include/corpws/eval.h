#ifndef CORPWS_EVAL_H_
#define CORPWS_EVAL_H_

#include <string>
#include <vector>

#include "corpws/corpus.h"

namespace corpws {

struct ConfusionRow {
  std::string gold_rich;
  std::string system_rich;
  std::size_t count = 0;

  bool operator==(const ConfusionRow&) const = default;
};

struct EvalReport {
  std::size_t tokens_compared = 0;
  double rich_accuracy = 1.0;
  double basic_accuracy = 1.0;
  double lemma_accuracy = 1.0;
  std::vector<ConfusionRow> confusion;  // rich-tag mismatches, most frequent first
};

// Token-by-token comparison of two annotations of the same text. Throws
// AlignmentError when token counts or token texts differ.
EvalReport evaluate(const Document& system, const Document& gold);
EvalReport evaluate_files(const std::string& system_path, const std::string& gold_path);

std::string format_report(const EvalReport& report);

}  // namespace corpws

#endif  // CORPWS_EVAL_H_
