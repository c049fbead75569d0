#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cbas/error.hpp"
#include "cbas/evaluation.hpp"
#include "cbas/morphology.hpp"
#include "report.hpp"

#ifndef CBAS_DEFAULT_RESOURCE_DIR
#define CBAS_DEFAULT_RESOURCE_DIR "resources"
#endif

namespace cbas::cli {

namespace fs = std::filesystem;

void validate(const RunConfig& config) {
  if (config.window_n < 2) throw UsageError("window must be at least 2");
  if (!(config.alpha > 0.0 && config.alpha <= 1.0)) throw UsageError("alpha must lie in (0, 1]");
  if (config.threads == 0) throw UsageError("threads must be positive");
}

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::optional<CorpusLayout> parse_layout(std::string_view text) {
  if (text == "auto") return CorpusLayout::automatic;
  if (text == "dir") return CorpusLayout::file_per_doc;
  if (text == "lines") return CorpusLayout::line_per_doc;
  return std::nullopt;
}

template <typename T>
bool parse_value(const std::string& text, T& out) {
  std::istringstream in(text);
  in >> out;
  return in && in.peek() == std::char_traits<char>::eof();
}

}  // namespace

void apply_config_file(RunConfig& config, const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config " + path.string());
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos) throw FormatError(path.string(), lineno, "expected key = value");
    const std::string key = trim(content.substr(0, eq));
    const std::string value = trim(content.substr(eq + 1));
    auto bad = [&] { return FormatError(path.string(), lineno, "invalid value for " + key); };

    if (key == "window") {
      if (!parse_value(value, config.window_n)) throw bad();
    } else if (key == "alpha") {
      if (!parse_value(value, config.alpha)) throw bad();
    } else if (key == "threads") {
      if (!parse_value(value, config.threads)) throw bad();
    } else if (key == "measure") {
      const auto m = parse_measure(value);
      if (!m) throw bad();
      config.measure = *m;
    } else if (key == "context") {
      const auto m = parse_context_mode(value);
      if (!m) throw bad();
      config.context_mode = *m;
    } else if (key == "layout") {
      const auto l = parse_layout(value);
      if (!l) throw bad();
      config.layout = *l;
    } else if (key == "resources") {
      config.resource_dir = value;
    } else if (key == "stopwords") {
      config.stopword_path = value;
    } else if (key == "matrix") {
      config.matrix_path = value;
    } else {
      throw FormatError(path.string(), lineno, "unknown key '" + key + "'");
    }
  }
}

fs::path resolve_resource_dir(const fs::path& configured) {
  if (!configured.empty()) return configured;
  if (const char* env = std::getenv("CBAS_RESOURCES"); env && *env) return env;
  return CBAS_DEFAULT_RESOURCE_DIR;
}

fs::path resolve_stopwords(const RunConfig& config) {
  if (!config.stopword_path.empty()) return config.stopword_path;
  return resolve_resource_dir(config.resource_dir) / "stopwords.txt";
}

int cmd_build_matrix(const RunConfig& config, const fs::path& corpus, const fs::path& out_path,
                     std::ostream& out, std::ostream& err) {
  validate(config);
  const StopwordList stopwords = load_stopwords(resolve_stopwords(config));
  const auto docs = load_corpus(corpus, config.layout);
  if (docs.empty()) {
    err << "cbas: corpus " << corpus.string() << " contains no documents\n";
    return kIoFormat;
  }
  std::vector<std::vector<std::string>> prepared;
  prepared.reserve(docs.size());
  std::size_t words = 0;
  for (const auto& d : docs) {
    prepared.push_back(prepare_document(d.text, stopwords));
    words += prepared.back().size();
  }
  if (words == 0) {
    err << "cbas: corpus " << corpus.string() << " contains no usable words\n";
    return kIoFormat;
  }
  const ContextMatrix matrix = build_matrix(prepared, config.window_n, config.threads);
  save_matrix(matrix, out_path);
  out << "documents\t" << docs.size() << '\n'
      << "vocabulary\t" << matrix.vocabulary().size() << '\n'
      << "total\t" << matrix.total() << '\n';
  return kOk;
}

namespace {

struct Loaded {
  Resources resources;
  StopwordList stopwords;
  ContextMatrix matrix;
};

Loaded load_for_stemming(const RunConfig& config) {
  if (config.matrix_path.empty()) throw UsageError("a matrix file is required (--matrix)");
  return {load_resources(resolve_resource_dir(config.resource_dir)),
          load_stopwords(resolve_stopwords(config)), load_matrix(config.matrix_path)};
}

}  // namespace

int cmd_stem(const RunConfig& config, const std::string& text, bool from_file, std::ostream& out,
             std::ostream& /*err*/) {
  validate(config);
  const Loaded loaded = load_for_stemming(config);
  const Stemmer stemmer(loaded.resources, loaded.stopwords, loaded.matrix, config.stem_options());

  auto emit = [&](std::string_view chunk) {
    for (const auto& r : stemmer.stem_text(chunk, config.threads)) out << stem_record(r) << '\n';
  };
  if (!from_file) {
    emit(text);
    return kOk;
  }
  std::ifstream in(text, std::ios::binary);
  if (!in) throw IoError("cannot open " + text);
  // Lines are independent texts; context never crosses a line break.
  std::string line;
  while (std::getline(in, line)) emit(line);
  return kOk;
}

int cmd_evaluate(const RunConfig& config, const fs::path& gold_path, std::ostream& out,
                 std::ostream& /*err*/) {
  validate(config);
  const auto rows = read_gold_rows(gold_path);
  const Loaded loaded = load_for_stemming(config);
  const Stemmer stemmer(loaded.resources, loaded.stopwords, loaded.matrix, config.stem_options());
  write_evaluation(out, evaluate(rows, stemmer, config.threads));
  return kOk;
}

namespace {

/// Option values shared by every subcommand.
struct CommonFlags {
  std::string config;
  std::string resources;
  std::string stopwords;
  std::string matrix;
  std::string measure = "spmi";
  double alpha = 0.75;
  std::string context = "previous";
  int window = 3;
  unsigned threads = 1;
};

void add_common(CLI::App& cmd, CommonFlags& f) {
  cmd.add_option("--config", f.config, "key=value config file; flags override it");
  cmd.add_option("--stopwords", f.stopwords, "stopword file (default: <resources>/stopwords.txt)");
  cmd.add_option("--resources", f.resources,
                 "resource directory (fallback: $CBAS_RESOURCES, then the bundled resources)");
  cmd.add_option("--threads", f.threads, "worker threads")->capture_default_str();
}

void add_stemming(CLI::App& cmd, CommonFlags& f) {
  cmd.add_option("--matrix", f.matrix, "context matrix file");
  cmd.add_option("--measure", f.measure, "association measure: pmi, ppmi or spmi")
      ->capture_default_str()
      ->check(CLI::IsMember({"pmi", "ppmi", "spmi"}, CLI::ignore_case));
  cmd.add_option("--alpha", f.alpha, "SPMI context smoothing exponent in (0, 1]")
      ->capture_default_str();
  cmd.add_option("--context", f.context, "context used for scoring: previous or window")
      ->capture_default_str()
      ->check(CLI::IsMember({"previous", "window", "previous-word", "full-window"}));
}

/// defaults <- config file <- explicit flags
RunConfig resolve(const CLI::App& cmd, const CommonFlags& f) {
  RunConfig config;
  if (!f.config.empty()) apply_config_file(config, f.config);
  auto given = [&](const char* name) {
    const auto* opt = cmd.get_option_no_throw(name);
    return opt && opt->count() > 0;
  };
  if (given("--window")) config.window_n = f.window;
  if (given("--alpha")) config.alpha = f.alpha;
  if (given("--threads")) config.threads = f.threads;
  if (given("--measure")) config.measure = *parse_measure(f.measure);
  if (given("--context")) config.context_mode = *parse_context_mode(f.context);
  if (given("--resources")) config.resource_dir = f.resources;
  if (given("--stopwords")) config.stopword_path = f.stopwords;
  if (given("--matrix")) config.matrix_path = f.matrix;
  return config;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Context-based Arabic root extraction"};
  app.name(args.empty() ? "cbas" : fs::path(args.front()).filename().string());
  app.require_subcommand(1);

  CommonFlags flags;
  std::string corpus, out_path, layout = "auto", text, file, gold;

  auto* build = app.add_subcommand("build-matrix", "count windowed co-occurrences over a corpus");
  add_common(*build, flags);
  build->add_option("--corpus", corpus, "directory (one document per file) or file (one per line)")
      ->required();
  build->add_option("--out", out_path, "matrix file to write")->required();
  build->add_option("--window", flags.window, "window size n in words")->capture_default_str();
  build->add_option("--layout", layout, "corpus layout: auto, dir or lines")
      ->capture_default_str()
      ->check(CLI::IsMember({"auto", "dir", "lines"}));

  auto* stem = app.add_subcommand("stem", "extract roots for every token of a text");
  add_common(*stem, flags);
  add_stemming(*stem, flags);
  auto* text_opt = stem->add_option("--text", text, "text to stem");
  auto* file_opt = stem->add_option("--file", file, "file to stem, one text per line");
  text_opt->excludes(file_opt);

  auto* eval = app.add_subcommand("evaluate", "score the stemmer against gold word/root pairs");
  add_common(*eval, flags);
  add_stemming(*eval, flags);
  eval->add_option("--gold", gold, "gold TSV file (word<TAB>root)")->required();

  try {
    std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(reversed.begin(), reversed.end());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (build->parsed()) {
      RunConfig config = resolve(*build, flags);
      if (build->count("--layout")) config.layout = *parse_layout(layout);
      return cmd_build_matrix(config, corpus, out_path, out, err);
    }
    if (stem->parsed()) {
      const bool from_file = stem->count("--file") > 0;
      if (!from_file && stem->count("--text") == 0) throw UsageError("stem needs --text or --file");
      return cmd_stem(resolve(*stem, flags), from_file ? file : text, from_file, out, err);
    }
    return cmd_evaluate(resolve(*eval, flags), gold, out, err);
  } catch (const UsageError& e) {
    err << "cbas: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "cbas: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "cbas: " << e.what() << '\n';
    return kIoFormat;
  }
}

}  // namespace cbas::cli
