#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "cbas/disambiguation.hpp"

namespace cbas {

struct GoldPair {
  std::string word;
  std::optional<std::string> gold_root;

  bool operator==(const GoldPair&) const = default;
};

/// A gold row in file order; `line` is 1-based.
struct GoldRow {
  GoldPair pair;
  std::size_t line = 0;
};

/// Every data row of a `word<TAB>root` file, normalized, in file order.
std::vector<GoldRow> read_gold_rows(const std::filesystem::path& path);
/// Unique (word, root) pairs in first-occurrence order.
std::vector<GoldPair> load_gold(const std::filesystem::path& path);
std::vector<GoldPair> unique_pairs(std::span<const GoldRow> rows);

/// Root predicted for pair `index` of the span being scored.
using RootFunction =
    std::function<std::optional<std::string>(const GoldPair& pair, std::size_t index)>;

/// Fraction of rooted pairs whose predicted root equals the gold root.
/// Rootless pairs are skipped; throws std::invalid_argument if none remain.
double stemming_accuracy(std::span<const GoldPair> pairs, const RootFunction& stemmer);

class ClusterSet {
 public:
  const std::map<std::string, std::set<std::string>>& clusters() const { return clusters_; }
  /// Label of the cluster holding `word`, or nullptr.
  const std::string* label_of(const std::string& word) const;
  const std::set<std::string>* cluster_of(const std::string& word) const;
  std::size_t size() const { return clusters_.size(); }

 private:
  friend ClusterSet build_clusters(const std::map<std::string, std::string>& assignments);
  std::map<std::string, std::set<std::string>> clusters_;
  std::map<std::string, std::string> label_of_;
};

/// Groups words by label; labels iterate in sorted order.
ClusterSet build_clusters(const std::map<std::string, std::string>& assignments);

/// Label given to a word the stemmer could not root. It can never collide
/// with a gold label, so such words always sit in a singleton cluster.
std::string unrooted_label(const std::string& word);

struct MetricsReport {
  double accuracy = 0;
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  std::size_t n = 0;
};

/// 2PR / (P + R), or 0 when either is 0.
double harmonic_f1(double precision, double recall);

/// Per-word overlap of the extracted cluster X_w and gold cluster Y_w.
/// The overlap counts only when both clusters carry the same label.
MetricsReport classification_metrics(const ClusterSet& extracted, const ClusterSet& gold,
                                     std::span<const std::string> words);
/// As classification_metrics, but the raw overlap counts regardless of
/// labels.
MetricsReport clustering_metrics(const ClusterSet& extracted, const ClusterSet& gold,
                                 std::span<const std::string> words);

struct WordOutcome {
  std::string word;
  std::string gold_root;
  std::optional<std::string> extracted_root;
  bool gold_in_candidates = false;
  std::vector<std::string> candidates;
};

struct EvaluationReport {
  double stemming_accuracy = 0;
  std::size_t stemmed_pairs = 0;
  MetricsReport classification;
  MetricsReport clustering;
  std::vector<WordOutcome> words;  ///< one per unique rooted pair
  ClusterSet extracted;
  ClusterSet gold;
};

/// Runs the stemmer over the gold rows in file order, using neighbouring
/// rows as context, then scores unique rooted pairs. Throws
/// std::invalid_argument when no row carries a root.
EvaluationReport evaluate(std::span<const GoldRow> rows, const Stemmer& stemmer,
                          unsigned threads = 1);

}  // namespace cbas
