#include "cbas/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cbas/arabic.hpp"
#include "cbas/error.hpp"
#include "cbas/utf8.hpp"

namespace cbas {

namespace fs = std::filesystem;

std::vector<Token> tokenize(std::string_view text) {
  const std::u32string cps = utf8::decode(text);
  std::vector<Token> tokens;
  std::u32string current;
  auto flush = [&] {
    if (current.empty()) return;
    tokens.push_back({utf8::encode(current), tokens.size()});
    current.clear();
  };
  for (char32_t c : cps) {
    if (arabic::is_space(c)) {
      flush();
    } else if (arabic::is_punctuation(c)) {
      flush();
      tokens.push_back({utf8::encode(c), tokens.size()});
    } else {
      current.push_back(c);
    }
  }
  flush();
  return tokens;
}

std::string normalize(std::string_view text) {
  std::u32string out;
  for (char32_t c : utf8::decode(text)) {
    if (arabic::is_diacritic(c) || c == arabic::kTatweel) continue;
    switch (c) {
      case arabic::kAlefHamzaAbove:
      case arabic::kAlefHamzaBelow:
      case arabic::kAlefMadda:
        out.push_back(arabic::kAlef);
        break;
      case arabic::kAlefMaksura:
        out.push_back(arabic::kYeh);
        break;
      default:
        out.push_back(c);
    }
  }
  return utf8::encode(out);
}

NormalizedToken normalize(const Token& token) { return {normalize(token.surface), token.position}; }

StopwordList::StopwordList(std::span<const std::string> entries) {
  for (const auto& e : entries) insert(e);
}

void StopwordList::insert(std::string_view word) {
  std::string n = normalize(word);
  if (!n.empty()) entries_.insert(std::move(n));
}

bool StopwordList::contains(std::string_view word) const {
  return entries_.contains(std::string(word));
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::ifstream open_input(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

}  // namespace

StopwordList load_stopwords(const fs::path& path) {
  auto in = open_input(path);
  StopwordList list;
  std::string line;
  while (std::getline(in, line)) {
    const auto entry = trim(line);
    if (entry.empty() || entry.front() == '#') continue;
    list.insert(entry);
  }
  return list;
}

TokenClass classify(std::string_view normalized, const StopwordList& stopwords) {
  if (normalized.empty()) return TokenClass::empty;
  const std::u32string cps = utf8::decode(normalized);
  if (std::all_of(cps.begin(), cps.end(), arabic::is_punctuation)) return TokenClass::punctuation;
  if (std::all_of(cps.begin(), cps.end(), arabic::is_digit)) return TokenClass::digits;
  if (!std::all_of(cps.begin(), cps.end(), arabic::is_letter)) return TokenClass::non_arabic;
  if (stopwords.contains(normalized)) return TokenClass::stopword;
  return TokenClass::word;
}

std::vector<NormalizedToken> filter_tokens(std::span<const NormalizedToken> tokens,
                                           const StopwordList& stopwords) {
  std::vector<NormalizedToken> kept;
  for (const auto& t : tokens) {
    if (classify(t.text, stopwords) == TokenClass::word) kept.push_back({t.text, kept.size()});
  }
  return kept;
}

std::vector<std::string> prepare_document(std::string_view text, const StopwordList& stopwords) {
  std::vector<std::string> words;
  for (const auto& token : tokenize(text)) {
    std::string n = normalize(token.surface);
    if (classify(n, stopwords) == TokenClass::word) words.push_back(std::move(n));
  }
  return words;
}

std::vector<RawDocument> load_corpus(const fs::path& path, CorpusLayout layout) {
  std::error_code ec;
  const bool is_dir = fs::is_directory(path, ec);
  if (!is_dir && !fs::is_regular_file(path, ec)) {
    throw IoError("corpus not found: " + path.string());
  }
  if (layout == CorpusLayout::automatic) {
    layout = is_dir ? CorpusLayout::file_per_doc : CorpusLayout::line_per_doc;
  }

  std::vector<RawDocument> docs;
  if (layout == CorpusLayout::file_per_doc) {
    if (!is_dir) throw IoError("expected a corpus directory: " + path.string());
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(path)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      auto in = open_input(f);
      std::ostringstream buf;
      buf << in.rdbuf();
      docs.push_back({f.filename().string(), buf.str()});
    }
    return docs;
  }

  if (is_dir) throw IoError("expected a corpus file: " + path.string());
  auto in = open_input(path);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    docs.push_back({path.filename().string() + ":" + std::to_string(lineno), line});
  }
  return docs;
}

}  // namespace cbas
