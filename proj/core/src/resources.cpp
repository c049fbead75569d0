#include <fstream>
#include <stdexcept>

#include "cbas/corpus.hpp"
#include "cbas/error.hpp"
#include "cbas/morphology.hpp"

namespace cbas {

namespace fs = std::filesystem;

namespace {

struct Entry {
  std::string text;
  std::size_t line;
};

/// Non-comment, non-blank lines of a resource file, normalized.
std::vector<Entry> read_entries(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("missing resource file " + path.string());
  std::vector<Entry> entries;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    std::string value = line.substr(first, last - first + 1);
    if (value.find_first_of(" \t") != std::string::npos) {
      throw FormatError(path.string(), lineno, "entry contains whitespace");
    }
    entries.push_back({normalize(value), lineno});
  }
  return entries;
}

std::vector<std::string> texts(const std::vector<Entry>& entries) {
  std::vector<std::string> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.text);
  return out;
}

}  // namespace

Resources load_resources(const fs::path& directory) {
  if (!fs::is_directory(directory)) {
    throw IoError("resource directory not found: " + directory.string());
  }
  Resources r;
  r.affixes = AffixLists(texts(read_entries(directory / "prefixes.txt")),
                         texts(read_entries(directory / "suffixes.txt")));

  const auto pattern_path = directory / "patterns.txt";
  for (const auto& e : read_entries(pattern_path)) {
    try {
      r.patterns.push_back(Pattern::parse(e.text));
    } catch (const std::invalid_argument& ex) {
      throw FormatError(pattern_path.string(), e.line, ex.what());
    }
  }

  const auto roots_path = directory / "roots.txt";
  for (const auto& e : read_entries(roots_path)) {
    try {
      r.roots.insert(e.text);
    } catch (const std::invalid_argument& ex) {
      throw FormatError(roots_path.string(), e.line, ex.what());
    }
  }
  return r;
}

}  // namespace cbas
