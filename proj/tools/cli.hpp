#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "cbas/cooccurrence.hpp"
#include "cbas/corpus.hpp"
#include "cbas/disambiguation.hpp"

namespace cbas::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kIoFormat = 2 };

struct RunConfig {
  int window_n = 3;
  MeasureKind measure = MeasureKind::spmi;
  double alpha = 0.75;
  std::filesystem::path resource_dir;
  std::filesystem::path stopword_path;
  std::filesystem::path matrix_path;
  ContextMode context_mode = ContextMode::previous_word;
  CorpusLayout layout = CorpusLayout::automatic;
  unsigned threads = 1;

  AssociationMeasure association() const { return {measure, alpha}; }
  StemOptions stem_options() const { return {association(), context_mode}; }
};

/// Thrown for configuration values that violate RunConfig invariants.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws UsageError if window < 2, alpha outside (0, 1] or threads == 0.
void validate(const RunConfig& config);

/// Applies `key = value` lines (UTF-8, `#` comments) on top of `config`.
/// Keys: window, measure, alpha, resources, stopwords, matrix, context,
/// layout, threads. Unknown keys and bad values throw FormatError.
void apply_config_file(RunConfig& config, const std::filesystem::path& path);

/// Resource directory fallback chain: explicit value, then $CBAS_RESOURCES,
/// then the directory the tool was built against.
std::filesystem::path resolve_resource_dir(const std::filesystem::path& configured);
std::filesystem::path resolve_stopwords(const RunConfig& config);

int cmd_build_matrix(const RunConfig& config, const std::filesystem::path& corpus,
                     const std::filesystem::path& out_path, std::ostream& out, std::ostream& err);

/// Exactly one of `text` / `input_file` is used; `from_file` selects which.
int cmd_stem(const RunConfig& config, const std::string& text, bool from_file,
             std::ostream& out, std::ostream& err);

int cmd_evaluate(const RunConfig& config, const std::filesystem::path& gold_path,
                 std::ostream& out, std::ostream& err);

/// Full command line entry point; argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cbas::cli
