#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cbas {

/// Dense, insertion-ordered bijection between words and indices.
class Vocabulary {
 public:
  using Index = std::uint32_t;

  /// Returns the index of `word`, adding it at the end if unseen.
  Index intern(std::string_view word);
  std::optional<Index> find(std::string_view word) const;
  bool contains(std::string_view word) const { return find(word).has_value(); }

  const std::string& word(Index index) const { return words_.at(index); }
  const std::vector<std::string>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }

  bool operator==(const Vocabulary& other) const { return words_ == other.words_; }

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const { return std::hash<std::string_view>{}(s); }
  };
  std::unordered_map<std::string, Index, Hash, std::equal_to<>> index_;
  std::vector<std::string> words_;
};

/// One stored (target, context) cell.
struct CooccurrenceEntry {
  Vocabulary::Index target = 0;
  Vocabulary::Index context = 0;
  std::uint64_t count = 0;

  bool operator==(const CooccurrenceEntry&) const = default;
};

/// Immutable sparse word x context count table built with a window of
/// `window()` words. Rows are stored compressed and sorted by context
/// index, so lookups are a binary search within a row.
class ContextMatrix {
 public:
  using Index = Vocabulary::Index;

  /// Entries may arrive in any order; duplicates are summed. Throws
  /// std::invalid_argument on window < 2, zero counts or indices outside
  /// the vocabulary.
  ContextMatrix(Vocabulary vocabulary, int window, std::vector<CooccurrenceEntry> entries);

  int window() const { return window_; }
  const Vocabulary& vocabulary() const { return vocabulary_; }
  std::uint64_t total() const { return total_; }
  bool empty() const { return total_ == 0; }
  std::size_t nonzeros() const { return contexts_.size(); }

  std::uint64_t count(Index target, Index context) const;
  /// 0 when either word is out of vocabulary.
  std::uint64_t count(std::string_view target, std::string_view context) const;

  std::uint64_t target_marginal(Index target) const { return target_marginals_.at(target); }
  std::uint64_t context_marginal(Index context) const { return context_marginals_.at(context); }
  std::uint64_t target_marginal(std::string_view word) const;
  std::uint64_t context_marginal(std::string_view word) const;

  /// Stored entries ordered by (target, context).
  std::vector<CooccurrenceEntry> entries() const;

  bool operator==(const ContextMatrix& other) const;

 private:
  Vocabulary vocabulary_;
  int window_;
  std::vector<std::size_t> row_offsets_;
  std::vector<Index> contexts_;
  std::vector<std::uint64_t> counts_;
  std::vector<std::uint64_t> target_marginals_;
  std::vector<std::uint64_t> context_marginals_;
  std::uint64_t total_ = 0;
};

/// Slides a symmetric window over each document: the word at position i
/// gains +1 with every word j where 0 < |i - j| < window. Windows never
/// cross documents. Vocabulary indices follow first occurrence. With
/// `threads > 1` documents are counted in parallel; the result is
/// identical to the sequential one.
ContextMatrix build_matrix(std::span<const std::vector<std::string>> documents, int window,
                           unsigned threads = 1);

enum class MeasureKind { pmi, ppmi, spmi };

struct AssociationMeasure {
  MeasureKind kind = MeasureKind::spmi;
  /// Context-distribution smoothing exponent, (0, 1]. SPMI only.
  double alpha = 0.75;
};

/// Throws std::invalid_argument if alpha is outside (0, 1].
void validate(const AssociationMeasure& measure);

std::string_view to_string(MeasureKind kind);
/// Accepts "pmi", "ppmi", "spmi" (case-insensitive).
std::optional<MeasureKind> parse_measure(std::string_view text);

/// Scores word/context pairs against one matrix. Precomputes the SPMI
/// normaliser, so build one per (matrix, measure) and reuse it. Holds a
/// reference to the matrix.
class AssociationScorer {
 public:
  AssociationScorer(const ContextMatrix& matrix, AssociationMeasure measure);

  /// PMI returns -infinity for unseen pairs; PPMI and SPMI return 0.
  double operator()(Vocabulary::Index word, Vocabulary::Index context) const;
  double operator()(std::string_view word, std::string_view context) const;

  const AssociationMeasure& measure() const { return measure_; }
  const ContextMatrix& matrix() const { return *matrix_; }
  /// True when a pair has a stored co-occurrence count.
  bool observed(std::string_view word, std::string_view context) const;

 private:
  const ContextMatrix* matrix_;
  AssociationMeasure measure_;
  double log2_total_ = 0;
  double log2_smoothing_norm_ = 0;
};

/// One-off association score. Throws cbas::Error on an empty matrix.
double association(const ContextMatrix& matrix, std::string_view word, std::string_view context,
                   const AssociationMeasure& measure);

/// TSV matrix format:
///   CBAS-MATRIX<TAB>v1<TAB>window=<n><TAB>total=<T><TAB>vocab=<V>
///   <index><TAB><word>                        (V lines)
///   <target><TAB><context><TAB><count>        (sorted by target, context)
void write_matrix(std::ostream& out, const ContextMatrix& matrix);
ContextMatrix read_matrix(std::istream& in, const std::string& source_name = "<stream>");

void save_matrix(const ContextMatrix& matrix, const std::filesystem::path& path);
ContextMatrix load_matrix(const std::filesystem::path& path);

}  // namespace cbas
