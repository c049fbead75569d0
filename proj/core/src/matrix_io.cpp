#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "cbas/cooccurrence.hpp"
#include "cbas/error.hpp"

namespace cbas {

namespace {

constexpr std::string_view kMagic = "CBAS-MATRIX";
constexpr std::string_view kVersion = "v1";

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

template <typename T>
bool parse_number(std::string_view text, T& out) {
  if (text.empty()) return false;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end;
}

template <typename T>
T header_field(std::string_view field, std::string_view key, const std::string& source) {
  T value{};
  if (field.substr(0, key.size()) != key || field.size() <= key.size() ||
      field[key.size()] != '=' || !parse_number(field.substr(key.size() + 1), value)) {
    throw FormatError(source, 1, "expected header field " + std::string(key) + "=<number>");
  }
  return value;
}

}  // namespace

void write_matrix(std::ostream& out, const ContextMatrix& matrix) {
  const auto& words = matrix.vocabulary().words();
  out << kMagic << '\t' << kVersion << "\twindow=" << matrix.window()
      << "\ttotal=" << matrix.total() << "\tvocab=" << words.size() << '\n';
  for (std::size_t i = 0; i < words.size(); ++i) out << i << '\t' << words[i] << '\n';
  for (const auto& e : matrix.entries()) {
    out << e.target << '\t' << e.context << '\t' << e.count << '\n';
  }
}

ContextMatrix read_matrix(std::istream& in, const std::string& source) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError(source, 1, "missing header");
  const auto header = split_tabs(line);
  if (header.size() != 5 || header[0] != kMagic) {
    throw FormatError(source, 1, "not a CBAS-MATRIX file");
  }
  if (header[1] != kVersion) {
    throw FormatError(source, 1, "unsupported matrix version '" + std::string(header[1]) + "'");
  }
  const int window = header_field<int>(header[2], "window", source);
  const auto total = header_field<std::uint64_t>(header[3], "total", source);
  const auto vocab_size = header_field<std::size_t>(header[4], "vocab", source);
  if (window < 2) throw FormatError(source, 1, "window must be at least 2");

  Vocabulary vocabulary;
  std::size_t lineno = 1;
  for (std::size_t i = 0; i < vocab_size; ++i) {
    ++lineno;
    if (!std::getline(in, line)) throw FormatError(source, lineno, "vocabulary ended early");
    const auto fields = split_tabs(line);
    std::size_t index = 0;
    if (fields.size() != 2 || !parse_number(fields[0], index) || fields[1].empty()) {
      throw FormatError(source, lineno, "expected <index><TAB><word>");
    }
    if (index != i) throw FormatError(source, lineno, "vocabulary index out of sequence");
    if (vocabulary.contains(fields[1])) {
      throw FormatError(source, lineno, "duplicate vocabulary word");
    }
    vocabulary.intern(fields[1]);
  }

  std::vector<CooccurrenceEntry> entries;
  std::uint64_t sum = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto fields = split_tabs(line);
    CooccurrenceEntry e;
    if (fields.size() != 3 || !parse_number(fields[0], e.target) ||
        !parse_number(fields[1], e.context) || !parse_number(fields[2], e.count)) {
      throw FormatError(source, lineno, "expected <target><TAB><context><TAB><count>");
    }
    if (e.target >= vocab_size || e.context >= vocab_size) {
      throw FormatError(source, lineno, "index outside the vocabulary");
    }
    if (e.count == 0) throw FormatError(source, lineno, "zero count");
    if (!entries.empty()) {
      const auto& prev = entries.back();
      if (std::tie(prev.target, prev.context) >= std::tie(e.target, e.context)) {
        throw FormatError(source, lineno, "entries not strictly sorted by (target, context)");
      }
    }
    sum += e.count;
    entries.push_back(e);
  }
  if (sum != total) {
    throw FormatError(source, 0,
                      "counts sum to " + std::to_string(sum) + " but header declares total=" +
                          std::to_string(total));
  }
  return ContextMatrix(std::move(vocabulary), window, std::move(entries));
}

void save_matrix(const ContextMatrix& matrix, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  write_matrix(out, matrix);
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

ContextMatrix load_matrix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_matrix(in, path.string());
}

}  // namespace cbas
