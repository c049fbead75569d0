#include "cbas/disambiguation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "cbas/utf8.hpp"
#include "parallel.hpp"

namespace cbas {

std::string_view to_string(ContextMode mode) {
  return mode == ContextMode::previous_word ? "previous" : "window";
}

std::optional<ContextMode> parse_context_mode(std::string_view text) {
  if (text == "previous" || text == "previous-word") return ContextMode::previous_word;
  if (text == "window" || text == "full-window") return ContextMode::full_window;
  return std::nullopt;
}

std::vector<std::string> scoring_context(const StemContext& context, ContextMode mode) {
  if (mode == ContextMode::previous_word) {
    if (context.preceding.empty()) return {};
    return {context.preceding.back()};
  }
  std::vector<std::string> words = context.preceding;
  words.insert(words.end(), context.following.begin(), context.following.end());
  return words;
}

Derivations derive_words(std::string_view root, std::span<const Pattern> patterns,
                         const Vocabulary& vocabulary) {
  const std::u32string letters = utf8::decode(root);
  std::vector<std::string> generated{std::string(root)};
  for (const auto& p : patterns) {
    if (static_cast<std::size_t>(p.arity()) == letters.size()) {
      generated.push_back(utf8::encode(p.instantiate(letters)));
    }
  }
  Derivations out;
  std::unordered_set<std::string> seen;
  for (auto& w : generated) {
    if (vocabulary.contains(w) && seen.insert(w).second) out.words.push_back(std::move(w));
  }
  out.in_vocabulary = out.words.size();
  if (out.words.empty()) out.words.emplace_back(root);
  return out;
}

ScoredRoot score_root(std::string_view root, std::span<const std::string> context_words,
                      std::span<const Pattern> patterns, const AssociationScorer& scorer) {
  const auto& matrix = scorer.matrix();
  const Derivations derived = derive_words(root, patterns, matrix.vocabulary());
  ScoredRoot out{std::string(root), 0.0, derived.in_vocabulary, matrix.target_marginal(root)};
  if (context_words.empty()) return out;

  double sum = 0;
  for (const auto& d : derived.words) {
    for (const auto& c : context_words) {
      if (scorer.observed(d, c)) sum += scorer(d, c);
    }
  }
  out.score = sum / static_cast<double>(derived.words.size() * context_words.size());
  return out;
}

namespace {

// Scores that differ only by floating-point noise (e.g. after scaling every
// count by a constant) are treated as tied.
bool nearly_equal(double a, double b) {
  if (a == b) return true;
  const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= 1e-12 * scale;
}

}  // namespace

bool ranks_above(const ScoredRoot& a, const ScoredRoot& b) {
  if (!nearly_equal(a.score, b.score)) return a.score > b.score;
  if (a.derived_in_vocab != b.derived_in_vocab) return a.derived_in_vocab > b.derived_in_vocab;
  if (a.frequency != b.frequency) return a.frequency > b.frequency;
  return a.root < b.root;
}

Selection select_root(std::span<const CandidateRoot> candidates,
                      std::span<const std::string> context_words,
                      std::span<const Pattern> patterns, const AssociationScorer& scorer) {
  if (candidates.empty()) throw std::invalid_argument("select_root needs at least one candidate");
  Selection sel;
  sel.scores.reserve(candidates.size());
  for (const auto& c : candidates) {
    sel.scores.push_back(score_root(c.root, context_words, patterns, scorer));
  }
  for (std::size_t i = 1; i < sel.scores.size(); ++i) {
    if (ranks_above(sel.scores[i], sel.scores[sel.index])) sel.index = i;
  }
  sel.root = sel.scores[sel.index].root;
  return sel;
}

std::string StemResult::fallback_reason() const {
  switch (token_class) {
    case TokenClass::stopword: return "stopword";
    case TokenClass::punctuation: return "punctuation";
    case TokenClass::digits: return "digits";
    case TokenClass::non_arabic: return "non_arabic";
    case TokenClass::empty: return "empty";
    case TokenClass::word: break;
  }
  return root ? "" : "no_candidates";
}

Stemmer::Stemmer(const Resources& resources, const StopwordList& stopwords,
                 const ContextMatrix& matrix, StemOptions options)
    : resources_(&resources),
      stopwords_(&stopwords),
      matrix_(&matrix),
      options_(options),
      scorer_(matrix, options.measure) {}

StemResult Stemmer::stem_normalized(std::string input, std::string normalized,
                                    std::vector<std::string> context_words) const {
  StemResult result;
  result.input = std::move(input);
  result.normalized = std::move(normalized);
  result.token_class = classify(result.normalized, *stopwords_);
  if (result.token_class != TokenClass::word) return result;

  result.context = std::move(context_words);
  auto candidates = generate_candidates(result.normalized, *resources_);
  if (candidates.empty()) return result;

  const Selection sel =
      select_root(candidates, result.context, resources_->patterns, scorer_);
  result.root = sel.root;
  result.candidates.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    result.candidates.push_back({std::move(candidates[i]), sel.scores[i]});
  }
  return result;
}

StemResult Stemmer::stem(std::string_view word, const StemContext& context) const {
  const auto reach = static_cast<std::size_t>(matrix_->window() - 1);
  StemContext filtered;
  for (const auto& raw : context.preceding) {
    for (const auto& token : tokenize(raw)) {
      auto n = normalize(token.surface);
      if (classify(n, *stopwords_) == TokenClass::word) filtered.preceding.push_back(std::move(n));
    }
  }
  for (const auto& raw : context.following) {
    for (const auto& token : tokenize(raw)) {
      auto n = normalize(token.surface);
      if (classify(n, *stopwords_) == TokenClass::word) filtered.following.push_back(std::move(n));
    }
  }
  if (filtered.preceding.size() > reach) {
    filtered.preceding.erase(filtered.preceding.begin(),
                             filtered.preceding.end() - static_cast<std::ptrdiff_t>(reach));
  }
  if (filtered.following.size() > reach) filtered.following.resize(reach);

  return stem_normalized(std::string(word), normalize(word),
                         scoring_context(filtered, options_.context_mode));
}

std::vector<StemResult> Stemmer::stem_sequence(std::span<const std::string> tokens,
                                               unsigned threads) const {
  const std::size_t n = tokens.size();
  std::vector<std::string> normalized(n);
  std::vector<std::size_t> kept;  // positions of surviving words
  for (std::size_t i = 0; i < n; ++i) {
    normalized[i] = normalize(tokens[i]);
    if (classify(normalized[i], *stopwords_) == TokenClass::word) kept.push_back(i);
  }
  const auto reach = static_cast<std::size_t>(matrix_->window() - 1);

  std::vector<StemResult> results(n);
  detail::parallel_chunks(n, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      StemContext ctx;
      const auto lo = std::lower_bound(kept.begin(), kept.end(), i);
      const auto hi = std::upper_bound(kept.begin(), kept.end(), i);
      const auto before = static_cast<std::size_t>(lo - kept.begin());
      for (auto it = lo - static_cast<std::ptrdiff_t>(std::min(before, reach)); it != lo; ++it) {
        ctx.preceding.push_back(normalized[*it]);
      }
      for (auto it = hi; it != kept.end() && ctx.following.size() < reach; ++it) {
        ctx.following.push_back(normalized[*it]);
      }
      results[i] = stem_normalized(tokens[i], normalized[i],
                                   scoring_context(ctx, options_.context_mode));
    }
  });
  return results;
}

std::vector<StemResult> Stemmer::stem_text(std::string_view text, unsigned threads) const {
  std::vector<std::string> surfaces;
  for (auto& t : tokenize(text)) surfaces.push_back(std::move(t.surface));
  return stem_sequence(surfaces, threads);
}

}  // namespace cbas
