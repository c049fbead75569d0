#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace cbas {

struct RawDocument {
  std::string doc_id;
  std::string text;
};

struct Token {
  std::string surface;
  std::size_t position = 0;

  bool operator==(const Token&) const = default;
};

/// A token after normalization. `position` is the index in whichever
/// sequence the token currently belongs to; filtering renumbers it.
struct NormalizedToken {
  std::string text;
  std::size_t position = 0;

  bool operator==(const NormalizedToken&) const = default;
};

/// Splits text into maximal runs of non-space, non-punctuation codepoints.
/// Each punctuation codepoint becomes a token of its own; digit runs are
/// kept so that positions stay faithful to the source.
std::vector<Token> tokenize(std::string_view text);

/// Strips diacritics (U+064B..U+0652) and tatweel, folds أ/إ/آ to ا and
/// ى to ي. ة is left alone.
std::string normalize(std::string_view text);
NormalizedToken normalize(const Token& token);

/// Normalization-stable set of words that carry no root.
class StopwordList {
 public:
  StopwordList() = default;
  explicit StopwordList(std::span<const std::string> entries);

  bool contains(std::string_view word) const;
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  void insert(std::string_view word);

 private:
  std::unordered_set<std::string> entries_;
};

/// One entry per line, `#` comments ignored, entries normalized on load.
StopwordList load_stopwords(const std::filesystem::path& path);

enum class TokenClass { word, stopword, punctuation, digits, non_arabic, empty };

/// Why a normalized token would be kept or dropped by filter_tokens.
TokenClass classify(std::string_view normalized, const StopwordList& stopwords);

/// Drops stopwords, punctuation, digit runs and non-Arabic tokens, then
/// renumbers the survivors 0..k-1 in their original order.
std::vector<NormalizedToken> filter_tokens(std::span<const NormalizedToken> tokens,
                                           const StopwordList& stopwords);

/// tokenize -> normalize -> filter, returning the surviving word strings.
std::vector<std::string> prepare_document(std::string_view text, const StopwordList& stopwords);

enum class CorpusLayout {
  automatic,      ///< directory => file per document, file => line per document
  file_per_doc,
  line_per_doc,
};

/// Reads a corpus. Directory entries are visited in sorted filename order;
/// blank lines are skipped in line-per-document mode.
std::vector<RawDocument> load_corpus(const std::filesystem::path& path,
                                     CorpusLayout layout = CorpusLayout::automatic);

}  // namespace cbas
