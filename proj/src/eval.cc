#include "corpws/eval.h"

#include <algorithm>
#include <cstdio>
#include <map>

#include "corpws/error.h"
#include "corpws/text.h"

namespace corpws {

namespace {

std::vector<const AnnotatedToken*> flatten(const Document& doc) {
  std::vector<const AnnotatedToken*> out;
  for (const auto& s : doc.sentences) {
    for (const AnnotatedToken& t : s) out.push_back(&t);
  }
  return out;
}

}  // namespace

EvalReport evaluate(const Document& system, const Document& gold) {
  const auto sys = flatten(system);
  const auto ref = flatten(gold);
  if (sys.size() != ref.size()) {
    throw AlignmentError("system has " + std::to_string(sys.size()) + " tokens, gold has " +
                         std::to_string(ref.size()));
  }

  std::size_t rich_ok = 0;
  std::size_t basic_ok = 0;
  std::size_t lemma_ok = 0;
  std::map<std::pair<std::string, std::string>, std::size_t> confusion;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const AnnotatedToken& s = *sys[i];
    const AnnotatedToken& g = *ref[i];
    if (s.text != g.text) {
      throw AlignmentError("token " + std::to_string(i + 1) + " at " +
                           std::to_string(g.sentence) + "," + std::to_string(g.position) +
                           ": system '" + s.text + "' vs gold '" + g.text + "'");
    }
    if (s.analysis.rich == g.analysis.rich) {
      ++rich_ok;
    } else {
      ++confusion[{g.analysis.rich, s.analysis.rich}];
    }
    basic_ok += s.analysis.basic == g.analysis.basic;
    lemma_ok += s.analysis.lemma == g.analysis.lemma;
  }

  EvalReport report;
  report.tokens_compared = sys.size();
  if (!sys.empty()) {
    const auto n = static_cast<double>(sys.size());
    report.rich_accuracy = static_cast<double>(rich_ok) / n;
    report.basic_accuracy = static_cast<double>(basic_ok) / n;
    report.lemma_accuracy = static_cast<double>(lemma_ok) / n;
  }
  for (const auto& [key, count] : confusion) {
    report.confusion.push_back({key.first, key.second, count});
  }
  std::stable_sort(report.confusion.begin(), report.confusion.end(),
                   [](const ConfusionRow& a, const ConfusionRow& b) { return a.count > b.count; });
  return report;
}

EvalReport evaluate_files(const std::string& system_path, const std::string& gold_path) {
  return evaluate(read_vertical(text::read_file(system_path)),
                  read_vertical(text::read_file(gold_path)));
}

std::string format_report(const EvalReport& r) {
  char buf[256];
  std::string out;
  std::snprintf(buf, sizeof buf,
                "tokens\t%zu\nrich\t%.4f\nbasic\t%.4f\nlemma\t%.4f\n", r.tokens_compared,
                r.rich_accuracy, r.basic_accuracy, r.lemma_accuracy);
  out += buf;
  if (!r.confusion.empty()) {
    out += "\nGOLD\tSYSTEM\tCOUNT\n";
    for (const ConfusionRow& c : r.confusion) {
      out += c.gold_rich + "\t" + c.system_rich + "\t" + std::to_string(c.count) + "\n";
    }
  }
  return out;
}

}  // namespace corpws
