#include "cbas/evaluation.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <unordered_set>

#include "cbas/corpus.hpp"
#include "cbas/error.hpp"

namespace cbas {

std::vector<GoldRow> read_gold_rows(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open gold file " + path.string());
  std::vector<GoldRow> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw FormatError(path.string(), lineno, "expected exactly two columns: word<TAB>root");
    }
    GoldPair pair{normalize(line.substr(0, tab)), std::nullopt};
    if (pair.word.empty()) throw FormatError(path.string(), lineno, "empty word column");
    if (std::string root = normalize(line.substr(tab + 1)); !root.empty()) {
      pair.gold_root = std::move(root);
    }
    rows.push_back({std::move(pair), lineno});
  }
  return rows;
}

std::vector<GoldPair> unique_pairs(std::span<const GoldRow> rows) {
  std::vector<GoldPair> out;
  for (const auto& r : rows) {
    if (std::find(out.begin(), out.end(), r.pair) == out.end()) out.push_back(r.pair);
  }
  return out;
}

std::vector<GoldPair> load_gold(const std::filesystem::path& path) {
  return unique_pairs(read_gold_rows(path));
}

double stemming_accuracy(std::span<const GoldPair> pairs, const RootFunction& stemmer) {
  std::size_t rooted = 0;
  std::size_t correct = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!pairs[i].gold_root) continue;
    ++rooted;
    const auto predicted = stemmer(pairs[i], i);
    if (predicted && *predicted == *pairs[i].gold_root) ++correct;
  }
  if (rooted == 0) throw std::invalid_argument("no gold pair carries a root");
  return static_cast<double>(correct) / static_cast<double>(rooted);
}

const std::string* ClusterSet::label_of(const std::string& word) const {
  const auto it = label_of_.find(word);
  return it == label_of_.end() ? nullptr : &it->second;
}

const std::set<std::string>* ClusterSet::cluster_of(const std::string& word) const {
  const auto* label = label_of(word);
  return label ? &clusters_.at(*label) : nullptr;
}

ClusterSet build_clusters(const std::map<std::string, std::string>& assignments) {
  ClusterSet set;
  for (const auto& [word, label] : assignments) {
    set.clusters_[label].insert(word);
    set.label_of_[word] = label;
  }
  return set;
}

std::string unrooted_label(const std::string& word) { return "\x01unrooted:" + word; }

double harmonic_f1(double precision, double recall) {
  if (precision <= 0 || recall <= 0) return 0.0;
  return 2.0 * precision * recall / (precision + recall);
}

namespace {

MetricsReport overlap_metrics(const ClusterSet& extracted, const ClusterSet& gold,
                              std::span<const std::string> words, bool label_aware) {
  MetricsReport report;
  report.n = words.size();
  if (words.empty()) return report;

  double acc = 0, prec = 0, rec = 0;
  for (const auto& w : words) {
    const auto* x = extracted.cluster_of(w);
    const auto* y = gold.cluster_of(w);
    if (!x) throw std::invalid_argument("word missing from extracted clusters: " + w);
    if (!y) throw std::invalid_argument("word missing from gold clusters: " + w);

    std::size_t overlap = 0;
    for (const auto& member : *x) overlap += y->contains(member);
    const std::size_t uni = x->size() + y->size() - overlap;
    const std::size_t inter =
        label_aware && *extracted.label_of(w) != *gold.label_of(w) ? 0 : overlap;
    acc += static_cast<double>(inter) / static_cast<double>(uni);
    prec += static_cast<double>(inter) / static_cast<double>(y->size());
    rec += static_cast<double>(inter) / static_cast<double>(x->size());
  }
  const auto n = static_cast<double>(words.size());
  report.accuracy = acc / n;
  report.precision = prec / n;
  report.recall = rec / n;
  report.f1 = harmonic_f1(report.precision, report.recall);
  return report;
}

}  // namespace

MetricsReport classification_metrics(const ClusterSet& extracted, const ClusterSet& gold,
                                     std::span<const std::string> words) {
  return overlap_metrics(extracted, gold, words, true);
}

MetricsReport clustering_metrics(const ClusterSet& extracted, const ClusterSet& gold,
                                 std::span<const std::string> words) {
  return overlap_metrics(extracted, gold, words, false);
}

EvaluationReport evaluate(std::span<const GoldRow> rows, const Stemmer& stemmer,
                          unsigned threads) {
  std::vector<std::string> tokens;
  tokens.reserve(rows.size());
  for (const auto& r : rows) tokens.push_back(r.pair.word);
  const auto results = stemmer.stem_sequence(tokens, threads);

  EvaluationReport report;
  std::vector<GoldPair> pairs;
  std::vector<std::optional<std::string>> predicted;
  std::map<std::string, std::string> gold_labels;
  std::map<std::string, std::string> extracted_labels;
  std::vector<std::string> words;

  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& pair = rows[i].pair;
    if (!pair.gold_root) continue;
    if (std::find(pairs.begin(), pairs.end(), pair) != pairs.end()) continue;
    pairs.push_back(pair);
    predicted.push_back(results[i].root);

    WordOutcome outcome{pair.word, *pair.gold_root, results[i].root, false, {}};
    for (const auto& c : results[i].candidates) {
      outcome.candidates.push_back(c.candidate.root);
      outcome.gold_in_candidates |= c.candidate.root == *pair.gold_root;
    }
    report.words.push_back(std::move(outcome));

    // A word keeps the label of its first rooted occurrence.
    if (gold_labels.emplace(pair.word, *pair.gold_root).second) {
      extracted_labels.emplace(pair.word, results[i].root ? *results[i].root
                                                          : unrooted_label(pair.word));
      words.push_back(pair.word);
    }
  }
  if (pairs.empty()) throw std::invalid_argument("gold data has no rooted rows");

  report.stemmed_pairs = pairs.size();
  report.stemming_accuracy = stemming_accuracy(
      pairs, [&](const GoldPair&, std::size_t i) { return predicted[i]; });
  report.extracted = build_clusters(extracted_labels);
  report.gold = build_clusters(gold_labels);
  report.classification = classification_metrics(report.extracted, report.gold, words);
  report.clustering = clustering_metrics(report.extracted, report.gold, words);
  return report;
}

}  // namespace cbas
