#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cbas/cooccurrence.hpp"
#include "cbas/corpus.hpp"
#include "cbas/morphology.hpp"

namespace cbas {

/// Words around the target. `preceding` is ordered with the nearest word
/// last.
struct StemContext {
  std::vector<std::string> preceding;
  std::vector<std::string> following;
};

enum class ContextMode {
  previous_word,  ///< nearest preceding word only
  full_window,    ///< everything inside the window on both sides
};

std::string_view to_string(ContextMode mode);
/// Accepts "previous" / "previous-word" and "window" / "full-window".
std::optional<ContextMode> parse_context_mode(std::string_view text);

/// Context words actually scored against under `mode`.
std::vector<std::string> scoring_context(const StemContext& context, ContextMode mode);

struct Derivations {
  std::vector<std::string> words;  ///< in-vocabulary derivations, or {root}
  std::size_t in_vocabulary = 0;
};

/// Bare root plus every same-arity template filled with it, restricted to
/// the vocabulary. Falls back to the bare root when nothing is in it.
Derivations derive_words(std::string_view root, std::span<const Pattern> patterns,
                         const Vocabulary& vocabulary);

struct ScoredRoot {
  std::string root;
  double score = 0;
  std::size_t derived_in_vocab = 0;
  /// Target marginal of the bare root string; used for tie-breaking.
  std::uint64_t frequency = 0;
};

/// Mean association over every (derived word, context word) pair. Pairs
/// that never co-occur contribute 0 under every measure, so the PMI
/// sentinel never leaks into the mean. Empty context scores 0.
ScoredRoot score_root(std::string_view root, std::span<const std::string> context_words,
                      std::span<const Pattern> patterns, const AssociationScorer& scorer);

struct Selection {
  std::string root;
  std::size_t index = 0;            ///< position of the winner in the input
  std::vector<ScoredRoot> scores;   ///< one per candidate, input order
};

/// Highest score wins; ties go to more in-vocabulary derivations, then the
/// more frequent bare root, then the lexicographically smaller root.
/// Throws std::invalid_argument on an empty candidate list.
Selection select_root(std::span<const CandidateRoot> candidates,
                      std::span<const std::string> context_words,
                      std::span<const Pattern> patterns, const AssociationScorer& scorer);

/// Strict "a ranks above b" ordering used by select_root.
bool ranks_above(const ScoredRoot& a, const ScoredRoot& b);

struct StemOptions {
  AssociationMeasure measure;
  ContextMode context_mode = ContextMode::previous_word;
};

struct ScoredCandidate {
  CandidateRoot candidate;
  ScoredRoot scored;
};

/// Diagnostic record for one input token.
struct StemResult {
  std::string input;
  std::string normalized;
  TokenClass token_class = TokenClass::word;
  std::optional<std::string> root;
  std::vector<ScoredCandidate> candidates;
  std::vector<std::string> context;  ///< words scored against

  /// Empty when a root was chosen; otherwise "stopword", "punctuation",
  /// "digits", "non_arabic", "empty" or "no_candidates".
  std::string fallback_reason() const;
};

/// Full pipeline over loaded resources and a matrix. The referenced
/// objects must outlive the stemmer; all methods are const and safe to call
/// concurrently.
class Stemmer {
 public:
  Stemmer(const Resources& resources, const StopwordList& stopwords, const ContextMatrix& matrix,
          StemOptions options = {});

  /// `context` holds raw surrounding tokens; they are normalized and
  /// filtered, then trimmed to the window.
  StemResult stem(std::string_view word, const StemContext& context) const;

  /// Stems every token of an already tokenized sequence. Context for token
  /// i is taken from the filtered words around it. Output order matches the
  /// input regardless of `threads`.
  std::vector<StemResult> stem_sequence(std::span<const std::string> tokens,
                                        unsigned threads = 1) const;

  std::vector<StemResult> stem_text(std::string_view text, unsigned threads = 1) const;

  const StemOptions& options() const { return options_; }
  const ContextMatrix& matrix() const { return *matrix_; }
  const Resources& resources() const { return *resources_; }

 private:
  StemResult stem_normalized(std::string input, std::string normalized,
                             std::vector<std::string> context_words) const;

  const Resources* resources_;
  const StopwordList* stopwords_;
  const ContextMatrix* matrix_;
  StemOptions options_;
  AssociationScorer scorer_;
};

}  // namespace cbas
