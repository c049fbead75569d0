#include "report.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <json.hpp>
#include <ostream>

namespace cbas::cli {

using json = nlohmann::ordered_json;

std::string stem_record(const StemResult& r) {
  json j;
  j["input"] = r.input;
  j["normalized"] = r.normalized;
  j["root"] = r.root ? json(*r.root) : json(nullptr);
  const auto reason = r.fallback_reason();
  j["reason"] = reason.empty() ? json(nullptr) : json(reason);
  j["context"] = r.context;
  json candidates = json::array();
  for (const auto& c : r.candidates) {
    json item;
    item["root"] = c.candidate.root;
    item["score"] = c.scored.score;
    item["derived_in_vocab"] = c.scored.derived_in_vocab;
    item["frequency"] = c.scored.frequency;
    item["prefix"] = c.candidate.segmentation.prefix;
    item["infix"] = c.candidate.segmentation.infix;
    item["suffix"] = c.candidate.segmentation.suffix;
    item["pattern"] = c.candidate.pattern ? json(c.candidate.pattern->encoded()) : json(nullptr);
    const auto weak = describe(c.candidate.weak);
    item["weak"] = weak.empty() ? json(nullptr) : json(weak);
    candidates.push_back(std::move(item));
  }
  j["candidates"] = std::move(candidates);
  return j.dump();
}

namespace {

std::string display_label(const std::string& label) {
  return !label.empty() && label.front() == '\x01' ? "<unrooted>" : label;
}

void write_metrics(std::ostream& out, const std::string& mode, const MetricsReport& m) {
  fmt::print(out, "METRIC\t{}_accuracy\t{:.6f}\n", mode, m.accuracy);
  fmt::print(out, "METRIC\t{}_precision\t{:.6f}\n", mode, m.precision);
  fmt::print(out, "METRIC\t{}_recall\t{:.6f}\n", mode, m.recall);
  fmt::print(out, "METRIC\t{}_f1\t{:.6f}\n", mode, m.f1);
  fmt::print(out, "METRIC\t{}_n\t{}\n", mode, m.n);
}

void write_clusters(std::ostream& out, const std::string& side, const ClusterSet& set) {
  for (const auto& [label, words] : set.clusters()) {
    fmt::print(out, "CLUSTER\t{}\t{}\t{}\n", side, display_label(label), fmt::join(words, " "));
  }
}

}  // namespace

void write_evaluation(std::ostream& out, const EvaluationReport& report) {
  std::size_t covered = 0;
  for (const auto& w : report.words) {
    const bool correct = w.extracted_root && *w.extracted_root == w.gold_root;
    covered += w.gold_in_candidates;
    fmt::print(out, "WORD\t{}\t{}\t{}\tcorrect={}\tcovered={}\tcandidates={}\n", w.word,
               w.gold_root, w.extracted_root.value_or("-"), correct ? 1 : 0,
               w.gold_in_candidates ? 1 : 0, fmt::join(w.candidates, ","));
  }
  write_clusters(out, "extracted", report.extracted);
  write_clusters(out, "gold", report.gold);

  fmt::print(out, "METRIC\tstemming_accuracy\t{:.6f}\n", report.stemming_accuracy);
  fmt::print(out, "METRIC\tstemming_n\t{}\n", report.stemmed_pairs);
  fmt::print(out, "METRIC\tcandidate_coverage\t{:.6f}\n",
             report.words.empty() ? 0.0
                                  : static_cast<double>(covered) /
                                        static_cast<double>(report.words.size()));
  write_metrics(out, "classification", report.classification);
  write_metrics(out, "clustering", report.clustering);
}

}  // namespace cbas::cli
