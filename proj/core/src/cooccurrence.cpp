#include "cbas/cooccurrence.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>

#include "cbas/error.hpp"
#include "parallel.hpp"

namespace cbas {

Vocabulary::Index Vocabulary::intern(std::string_view word) {
  if (auto it = index_.find(word); it != index_.end()) return it->second;
  const auto id = static_cast<Index>(words_.size());
  words_.emplace_back(word);
  index_.emplace(words_.back(), id);
  return id;
}

std::optional<Vocabulary::Index> Vocabulary::find(std::string_view word) const {
  if (auto it = index_.find(word); it != index_.end()) return it->second;
  return std::nullopt;
}

ContextMatrix::ContextMatrix(Vocabulary vocabulary, int window,
                             std::vector<CooccurrenceEntry> entries)
    : vocabulary_(std::move(vocabulary)), window_(window) {
  if (window_ < 2) throw std::invalid_argument("window must be at least 2");
  const std::size_t v = vocabulary_.size();
  for (const auto& e : entries) {
    if (e.count == 0) throw std::invalid_argument("zero count stored in context matrix");
    if (e.target >= v || e.context >= v) {
      throw std::invalid_argument("context matrix index outside the vocabulary");
    }
  }
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return std::tie(a.target, a.context) < std::tie(b.target, b.context);
  });

  row_offsets_.assign(v + 1, 0);
  target_marginals_.assign(v, 0);
  context_marginals_.assign(v, 0);
  contexts_.reserve(entries.size());
  counts_.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (i > 0 && entries[i - 1].target == e.target && entries[i - 1].context == e.context) {
      counts_.back() += e.count;
    } else {
      contexts_.push_back(e.context);
      counts_.push_back(e.count);
      ++row_offsets_[e.target + 1];
    }
    target_marginals_[e.target] += e.count;
    context_marginals_[e.context] += e.count;
    total_ += e.count;
  }
  for (std::size_t t = 0; t < v; ++t) row_offsets_[t + 1] += row_offsets_[t];
}

std::uint64_t ContextMatrix::count(Index target, Index context) const {
  if (target >= vocabulary_.size()) return 0;
  const auto first = contexts_.begin() + static_cast<std::ptrdiff_t>(row_offsets_[target]);
  const auto last = contexts_.begin() + static_cast<std::ptrdiff_t>(row_offsets_[target + 1]);
  const auto it = std::lower_bound(first, last, context);
  if (it == last || *it != context) return 0;
  return counts_[static_cast<std::size_t>(it - contexts_.begin())];
}

std::uint64_t ContextMatrix::count(std::string_view target, std::string_view context) const {
  const auto t = vocabulary_.find(target);
  const auto c = vocabulary_.find(context);
  return t && c ? count(*t, *c) : 0;
}

std::uint64_t ContextMatrix::target_marginal(std::string_view word) const {
  const auto i = vocabulary_.find(word);
  return i ? target_marginals_[*i] : 0;
}

std::uint64_t ContextMatrix::context_marginal(std::string_view word) const {
  const auto i = vocabulary_.find(word);
  return i ? context_marginals_[*i] : 0;
}

std::vector<CooccurrenceEntry> ContextMatrix::entries() const {
  std::vector<CooccurrenceEntry> out;
  out.reserve(contexts_.size());
  for (Index t = 0; t < vocabulary_.size(); ++t) {
    for (std::size_t k = row_offsets_[t]; k < row_offsets_[t + 1]; ++k) {
      out.push_back({t, contexts_[k], counts_[k]});
    }
  }
  return out;
}

bool ContextMatrix::operator==(const ContextMatrix& other) const {
  return window_ == other.window_ && vocabulary_ == other.vocabulary_ &&
         row_offsets_ == other.row_offsets_ && contexts_ == other.contexts_ &&
         counts_ == other.counts_;
}

ContextMatrix build_matrix(std::span<const std::vector<std::string>> documents, int window,
                           unsigned threads) {
  if (window < 2) throw std::invalid_argument("window must be at least 2");

  // Indices are assigned sequentially so the vocabulary order never
  // depends on scheduling.
  Vocabulary vocabulary;
  std::vector<std::vector<Vocabulary::Index>> ids(documents.size());
  for (std::size_t d = 0; d < documents.size(); ++d) {
    ids[d].reserve(documents[d].size());
    for (const auto& w : documents[d]) ids[d].push_back(vocabulary.intern(w));
  }

  const auto span = static_cast<std::size_t>(window - 1);
  const auto key = [](Vocabulary::Index t, Vocabulary::Index c) {
    return (static_cast<std::uint64_t>(t) << 32) | c;
  };

  // Worker k counts documents k, k + workers, ...; partial maps are merged
  // by addition, so the result does not depend on the split.
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(1, ids.size()));
  std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> partial(workers);
  detail::parallel_chunks(workers, static_cast<unsigned>(workers),
                          [&](std::size_t begin, std::size_t end) {
    for (std::size_t worker = begin; worker < end; ++worker) {
      auto& counts = partial[worker];
      for (std::size_t d = worker; d < ids.size(); d += workers) {
        const auto& doc = ids[d];
        for (std::size_t i = 0; i < doc.size(); ++i) {
          const std::size_t lo = i >= span ? i - span : 0;
          const std::size_t hi = std::min(doc.size(), i + span + 1);
          for (std::size_t j = lo; j < hi; ++j) {
            if (j != i) ++counts[key(doc[i], doc[j])];
          }
        }
      }
    }
  });

  std::unordered_map<std::uint64_t, std::uint64_t> merged = std::move(partial.front());
  for (std::size_t k = 1; k < partial.size(); ++k) {
    for (const auto& [cell, n] : partial[k]) merged[cell] += n;
  }
  std::vector<CooccurrenceEntry> entries;
  entries.reserve(merged.size());
  for (const auto& [cell, n] : merged) {
    entries.push_back({static_cast<Vocabulary::Index>(cell >> 32),
                       static_cast<Vocabulary::Index>(cell & 0xFFFFFFFFu), n});
  }
  return ContextMatrix(std::move(vocabulary), window, std::move(entries));
}

void validate(const AssociationMeasure& measure) {
  if (!(measure.alpha > 0.0 && measure.alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1]");
  }
}

std::string_view to_string(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::pmi: return "pmi";
    case MeasureKind::ppmi: return "ppmi";
    case MeasureKind::spmi: return "spmi";
  }
  return "?";
}

std::optional<MeasureKind> parse_measure(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "pmi") return MeasureKind::pmi;
  if (lower == "ppmi") return MeasureKind::ppmi;
  if (lower == "spmi") return MeasureKind::spmi;
  return std::nullopt;
}

AssociationScorer::AssociationScorer(const ContextMatrix& matrix, AssociationMeasure measure)
    : matrix_(&matrix), measure_(measure) {
  validate(measure_);
  if (matrix.empty()) throw Error("association is undefined on an empty context matrix");
  log2_total_ = std::log2(static_cast<double>(matrix.total()));
  if (measure_.kind == MeasureKind::spmi) {
    double norm = 0;
    for (Vocabulary::Index c = 0; c < matrix.vocabulary().size(); ++c) {
      const auto m = matrix.context_marginal(c);
      if (m > 0) norm += std::pow(static_cast<double>(m), measure_.alpha);
    }
    log2_smoothing_norm_ = std::log2(norm);
  }
}

double AssociationScorer::operator()(Vocabulary::Index word, Vocabulary::Index context) const {
  const auto joint = matrix_->count(word, context);
  if (joint == 0) {
    return measure_.kind == MeasureKind::pmi ? -std::numeric_limits<double>::infinity() : 0.0;
  }
  const double log_joint = std::log2(static_cast<double>(joint));
  const double log_word = std::log2(static_cast<double>(matrix_->target_marginal(word)));
  const double log_context = std::log2(static_cast<double>(matrix_->context_marginal(context)));
  switch (measure_.kind) {
    case MeasureKind::pmi:
      // log2( (n_wc / N) / ((n_w / N) * (n_c / N)) )
      return log_joint + log2_total_ - log_word - log_context;
    case MeasureKind::ppmi:
      return std::max(0.0, log_joint + log2_total_ - log_word - log_context);
    case MeasureKind::spmi:
      // log2( (n_wc / N) / ((n_w / N) * (n_c^a / Z)) )
      return std::max(0.0, log_joint + log2_smoothing_norm_ - log_word -
                               measure_.alpha * log_context);
  }
  return 0.0;
}

double AssociationScorer::operator()(std::string_view word, std::string_view context) const {
  const auto& vocab = matrix_->vocabulary();
  const auto w = vocab.find(word);
  const auto c = vocab.find(context);
  if (!w || !c) {
    return measure_.kind == MeasureKind::pmi ? -std::numeric_limits<double>::infinity() : 0.0;
  }
  return (*this)(*w, *c);
}

bool AssociationScorer::observed(std::string_view word, std::string_view context) const {
  return matrix_->count(word, context) > 0;
}

double association(const ContextMatrix& matrix, std::string_view word, std::string_view context,
                   const AssociationMeasure& measure) {
  return AssociationScorer(matrix, measure)(word, context);
}

}  // namespace cbas
